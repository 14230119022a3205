//! Batch numerical checks: vanishing of Z on Kawashima generators, the
//! interpolation identity Z(A (x+y)^s B) = L1(s) + s L2(s), and the exact c2
//! identity over all words of Hx.

use serde::Serialize;

use super::dirichlet::l_partial;
use super::exact::{c2_identity_check, C2Check};
use super::zeta::ZetaEvaluator;
use super::{FamilySymbol, NumericReport};
use crate::error::{Error, Result};
use crate::maps::{z_basis_element, z_power};
use crate::products::concat;
use crate::relations::kawashima_generator;
use crate::word::{Index, Letter, Word, WordPoly};

#[derive(Clone, Debug, Serialize)]
pub struct KawashimaResidual {
    pub u: String,
    pub v: String,
    pub weight: usize,
    pub residual: NumericReport,
    pub passed: bool,
}

fn words_in_yh(weight: usize) -> impl Iterator<Item = Word> {
    Word::all_of_length(weight - 1).map(|w| w.prepend(Letter::Y))
}

/// `Z(phi(u * v) x)` for all words `u, v` in yH with
/// `weight(u) + weight(v) + 1 <= max_weight`. A residual passes when its
/// magnitude is at most `tol`.
pub fn kawashima_residuals(max_weight: usize, cutoff: u64, tol: f64) -> Result<Vec<KawashimaResidual>> {
    let mut eval = ZetaEvaluator::new(cutoff, tol);
    let mut out = Vec::new();
    for total in 2..max_weight {
        for wu in 1..total {
            for u in words_in_yh(wu) {
                for v in words_in_yh(total - wu) {
                    let g = kawashima_generator(&u.into(), &v.into())?;
                    let residual = if g.is_zero() {
                        NumericReport::exact(0.0, cutoff)
                    } else {
                        eval.z_poly(&g)?
                    };
                    out.push(KawashimaResidual {
                        u: u.to_string(),
                        v: v.to_string(),
                        weight: total + 1,
                        passed: residual.value.abs() <= tol,
                        residual,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct InterpolationRow {
    pub s: u32,
    pub l1: NumericReport,
    pub l2: NumericReport,
    /// `L1(s) + s L2(s)`.
    pub combined: NumericReport,
    /// `Z(y (x+y)^s B)`.
    pub z: NumericReport,
    pub difference: f64,
    pub passed: bool,
}

/// Compares `L1(s) + s L2(s)` with `Z(y (x+y)^s B)` for `s = 0..=smax`, where
/// `B = (x+y)^{k_1-1} x ... (x+y)^{k_r-1} x`. A row passes when the values
/// agree within the sum of their error estimates plus `tol`.
pub fn interpolation_table(k: &Index, smax: u32, cutoff: u64, series_cutoff: u64, tol: f64) -> Result<Vec<InterpolationRow>> {
    if k.is_empty() {
        return Err(Error::Domain("interpolation needs a nonempty index".into()));
    }
    let b = z_basis_element(k);
    let mut eval = ZetaEvaluator::new(cutoff, tol);
    let mut rows = Vec::new();
    for s in 0..=smax {
        let (l1, l2) = l_partial(k, s, series_cutoff, tol)?;
        let combined = l1.combine(1.0, &l2, s as f64, tol);
        let sym = FamilySymbol::new(WordPoly::word("y")?, b.clone(), s as usize)?;
        let z = eval.f_component(&sym)?;
        let difference = (combined.value - z.value).abs();
        rows.push(InterpolationRow {
            s,
            passed: difference <= combined.error_estimate + z.error_estimate + tol,
            l1,
            l2,
            combined,
            z,
            difference,
        });
    }
    Ok(rows)
}

/// `y (x+y)^s B` expanded, for reference output.
pub fn interpolation_word(k: &Index, s: u32) -> WordPoly {
    concat(&WordPoly::word("y").expect("literal"), &concat(&z_power(s as usize), &z_basis_element(k)))
}

/// The exact c2 identity for every word of Hx with weight `1..=max_weight`
/// and every `N` in `1..=max_n`.
pub fn c2_table(max_weight: usize, max_n: u64) -> Result<Vec<C2Check>> {
    let mut out = Vec::new();
    for weight in 1..=max_weight {
        for w in Word::all_of_length(weight - 1).map(|w| w.push(Letter::X)) {
            for n in 1..=max_n {
                out.push(c2_identity_check(&w, n)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_kawashima_table() {
        let rows = kawashima_residuals(4, 1 << 16, 1e-6).unwrap();
        // (y,y) at weight 3; (y,yy),(y,yx),(yy,y),(yx,y) at weight 4
        assert_eq!(rows.len(), 5);
        assert!(rows.iter().all(|r| r.passed), "{rows:?}");
    }

    #[test]
    fn index_two_interpolation() {
        let k = Index::new(vec![2]).unwrap();
        let rows = interpolation_table(&k, 2, 1 << 16, 1 << 14, 1e-8).unwrap();
        assert!(rows.iter().all(|r| r.passed), "{rows:?}");
        assert_eq!(interpolation_word(&k, 0).len(), 2);
    }

    #[test]
    fn c2_table_counts() {
        let rows = c2_table(3, 4).unwrap();
        assert_eq!(rows.len(), (1 + 2 + 4) * 4);
        assert!(rows.iter().all(|r| r.equal));
    }
}
