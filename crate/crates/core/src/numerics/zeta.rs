use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::extrapolate::{CompensatedSum, DyadicTrace};
use super::{inv_pow, FamilySymbol, NumericReport};
use crate::error::{Error, Result};
use crate::word::{Index, Subspace, WordPoly, Q};

fn require_admissible(k: &Index) -> Result<()> {
    if k.is_empty() || !k.is_admissible() {
        return Err(Error::Domain(format!(
            "zeta{k} diverges: index must be nonempty with last part >= 2"
        )));
    }
    Ok(())
}

/// Partial sums of `sum_{n_1 < ... < n_r <= N} 1/(n_1^{k_1} ... n_r^{k_r})`
/// at the dyadic cutoffs, by the O(rN) prefix-sum recursion
/// `S_j(n) = S_j(n-1) + S_{j-1}(n-1) / n^{k_j}`.
pub fn zeta_trace(k: &Index, cutoff: u64) -> DyadicTrace {
    let parts: Vec<i32> = k.parts().iter().map(|&p| p as i32).collect();
    let r = parts.len();
    let mut levels = vec![CompensatedSum::default(); r + 1];
    levels[0].add(1.0);
    let mut rec = DyadicTrace::recorder(cutoff);
    for n in 1..=cutoff {
        let nf = n as f64;
        for j in (1..=r).rev() {
            let below = levels[j - 1].value();
            levels[j].add(below * inv_pow(nf, parts[j - 1]));
        }
        rec.observe(n, levels[r].value());
    }
    rec.finish()
}

/// Truncated MZV in double precision, without tail correction.
pub fn zeta_partial_f64(k: &Index, cutoff: u64) -> f64 {
    zeta_trace(k, cutoff).raw()
}

/// The same partial sum in exact rationals.
pub fn zeta_partial_exact(k: &Index, cutoff: u64) -> Q {
    zeta_partial_exact_all(k, cutoff).pop().expect("entry for cutoff")
}

/// Exact partial sums for every truncation `N = 0..=cutoff`.
pub fn zeta_partial_exact_all(k: &Index, cutoff: u64) -> Vec<Q> {
    let r = k.depth();
    let mut levels = vec![Q::zero(); r + 1];
    levels[0] = Q::one();
    let mut out = Vec::with_capacity(cutoff as usize + 1);
    out.push(levels[r].clone());
    for n in 1..=cutoff {
        let n_big = BigInt::from(n);
        for j in (1..=r).rev() {
            if levels[j - 1].is_zero() {
                continue;
            }
            let denom = num_traits::pow(n_big.clone(), k.parts()[j - 1] as usize);
            let add = &levels[j - 1] / Q::from_integer(denom);
            levels[j] += add;
        }
        out.push(levels[r].clone());
    }
    out
}

/// Evaluates zeta(k) from the partial sums up to `cutoff`, with the
/// truncation tail extrapolated away. The error estimate is the change
/// between the extrapolations from `cutoff` and `cutoff / 2`.
pub fn zeta_eval(k: &Index, cutoff: u64, tol: f64) -> Result<NumericReport> {
    require_admissible(k)?;
    if cutoff < 2 {
        return Err(Error::Domain("cutoff must be at least 2".into()));
    }
    let trace = zeta_trace(k, cutoff);
    let (value, est) = trace.accelerate(k.depth().saturating_sub(1));
    Ok(NumericReport::new(value, cutoff, est, tol))
}

/// Caches zeta values by index across evaluations of word polynomials.
#[derive(Debug)]
pub struct ZetaEvaluator {
    cutoff: u64,
    tol: f64,
    cache: HashMap<Index, NumericReport>,
}

impl ZetaEvaluator {
    pub fn new(cutoff: u64, tol: f64) -> ZetaEvaluator {
        ZetaEvaluator {
            cutoff,
            tol,
            cache: HashMap::new(),
        }
    }

    pub fn zeta(&mut self, k: &Index) -> Result<NumericReport> {
        if let Some(r) = self.cache.get(k) {
            return Ok(*r);
        }
        let r = zeta_eval(k, self.cutoff, self.tol)?;
        self.cache.insert(k.clone(), r);
        Ok(r)
    }

    /// Linear extension of Z; error estimates add with |coefficient|.
    pub fn z_poly(&mut self, p: &WordPoly) -> Result<NumericReport> {
        if !p.in_subspace(Subspace::YHX) {
            return Err(Error::NotInSubspace {
                what: p.to_string(),
                space: Subspace::YHX,
            });
        }
        let mut value = CompensatedSum::default();
        let mut est = 0.0;
        for (w, c) in p.terms() {
            let k = Index::from_word(w)?;
            let r = self.zeta(&k)?;
            let c = c.to_f64().unwrap_or(f64::NAN);
            value.add(c * r.value);
            est += c.abs() * r.error_estimate;
        }
        Ok(NumericReport::new(value.value(), self.cutoff, est, self.tol))
    }

    pub fn f_component(&mut self, sym: &FamilySymbol) -> Result<NumericReport> {
        self.z_poly(&sym.expand())
    }
}

pub fn z_eval_poly(p: &WordPoly, cutoff: u64, tol: f64) -> Result<NumericReport> {
    if p.is_zero() {
        return Ok(NumericReport::exact(0.0, cutoff));
    }
    ZetaEvaluator::new(cutoff, tol).z_poly(p)
}

pub fn f_component(sym: &FamilySymbol, cutoff: u64, tol: f64) -> Result<NumericReport> {
    z_eval_poly(&sym.expand(), cutoff, tol)
}
