//! Numerical evaluation: multiple zeta values by truncated nested sums, the
//! components of f(A, B), the Dirichlet series L1/L2, the Kawashima
//! function and its first Taylor coefficient. Finite sums (star sums, h_N,
//! c2) are computed exactly.

pub mod dirichlet;
pub mod exact;
pub mod extrapolate;
pub mod kawashima;
pub mod verify;
pub mod zeta;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::z_power;
use crate::products::concat;
use crate::word::{Subspace, WordPoly};

pub use dirichlet::{c1_coeff, c1_coeffs, dirichlet_partial_sums, l_partial};
pub use exact::{c2_coeff, c2_identity_check, h_n, h_n_poly, star_sum, strict_sum};
pub use kawashima::{kawashima_a1, kawashima_f};
pub use verify::{c2_table, interpolation_table, kawashima_residuals, InterpolationRow, KawashimaResidual};
pub use zeta::{f_component, z_eval_poly, zeta_eval, zeta_partial_exact, zeta_partial_exact_all, ZetaEvaluator};

/// Default truncation for MZV sums.
pub const DEFAULT_CUTOFF: u64 = 1 << 20;
/// Default truncation for Dirichlet series and Kawashima-function series.
pub const DEFAULT_SERIES_CUTOFF: u64 = 1 << 16;
/// Default truncation of the ascending block in c1(N).
pub const DEFAULT_INNER_CUTOFF: u64 = 1 << 14;
pub const DEFAULT_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NumericReport {
    pub value: f64,
    pub cutoff: u64,
    pub error_estimate: f64,
    pub converged: bool,
}

impl NumericReport {
    pub fn new(value: f64, cutoff: u64, error_estimate: f64, tol: f64) -> NumericReport {
        let error_estimate = error_estimate.abs();
        NumericReport {
            value,
            cutoff,
            error_estimate,
            converged: error_estimate <= tol,
        }
    }

    /// An exactly known value.
    pub fn exact(value: f64, cutoff: u64) -> NumericReport {
        NumericReport {
            value,
            cutoff,
            error_estimate: 0.0,
            converged: true,
        }
    }

    /// `a * self + b * other`, error estimates adding in absolute value.
    pub fn combine(&self, a: f64, other: &NumericReport, b: f64, tol: f64) -> NumericReport {
        NumericReport::new(
            a * self.value + b * other.value,
            self.cutoff.max(other.cutoff),
            a.abs() * self.error_estimate + b.abs() * other.error_estimate,
            tol,
        )
    }
}

/// The symbol Z(A (x+y)^s B), the `s`-th entry of f(A, B).
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySymbol {
    pub a: WordPoly,
    pub b: WordPoly,
    pub s: usize,
}

impl FamilySymbol {
    pub fn new(a: WordPoly, b: WordPoly, s: usize) -> Result<FamilySymbol> {
        if !a.in_subspace(Subspace::YH) {
            return Err(Error::NotInSubspace {
                what: a.to_string(),
                space: Subspace::YH,
            });
        }
        if !b.in_subspace(Subspace::HX) {
            return Err(Error::NotInSubspace {
                what: b.to_string(),
                space: Subspace::HX,
            });
        }
        Ok(FamilySymbol { a, b, s })
    }

    /// `A (x+y)^s B`.
    pub fn expand(&self) -> WordPoly {
        concat(&self.a, &concat(&z_power(self.s), &self.b))
    }
}

#[inline]
pub(crate) fn inv_pow(n: f64, k: i32) -> f64 {
    n.powi(k).recip()
}
