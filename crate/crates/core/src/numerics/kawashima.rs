//! The Kawashima function `F_k(z)` and the z^1 Taylor coefficients
//! `A^(1)_k(n)` of `F_k(z + n)`.
//!
//! Both are built one prefix `(k_1, ..., k_j)` at a time. For each prefix
//! the value at the base point comes from its series (tail extrapolated),
//! and the values at the shifted points `z + n` follow from the exact
//! first-order difference relation, which feeds the next prefix.

use super::extrapolate::{CompensatedSum, DyadicTrace};
use super::{inv_pow, NumericReport};
use crate::error::{Error, Result};
use crate::word::Index;

/// Integer star sums `F_{(k_1..k_j)}(n)` for `n = 0..=len`, one level at a
/// time.
struct StarLevels {
    current: Vec<f64>,
}

impl StarLevels {
    fn new(len: usize) -> StarLevels {
        StarLevels {
            current: vec![1.0; len + 1],
        }
    }

    /// Extends the prefix by one part `k`.
    fn push(&mut self, k: u32) {
        let mut acc = CompensatedSum::default();
        let mut next = vec![0.0; self.current.len()];
        for (n, (slot, &c)) in next.iter_mut().zip(&self.current).enumerate().skip(1) {
            acc.add(c * inv_pow(n as f64, k as i32));
            *slot = acc.value();
        }
        self.current = next;
    }
}

/// `F_k(z)` through
/// `F_k(z) = sum_{n>=1} ( F_{k'}(n)/n^{k_r} - F_{k'}(z+n)/(z+n)^{k_r} )`
/// with `k' = (k_1, ..., k_{r-1})` and `F_() = 1`.
#[allow(clippy::needless_range_loop)]
pub fn kawashima_f(k: &Index, z: f64, cutoff: u64, tol: f64) -> Result<NumericReport> {
    if z <= -1.0 || !z.is_finite() {
        return Err(Error::Domain(format!("Kawashima function has a pole at or below -1 (z = {z})")));
    }
    if k.is_empty() {
        return Err(Error::Domain("Kawashima function needs a nonempty index".into()));
    }
    if cutoff < 2 {
        return Err(Error::Domain("cutoff must be at least 2".into()));
    }
    let len = cutoff as usize;
    let mut stars = StarLevels::new(len);
    // shifted[n] = F_{prefix}(z + n)
    let mut shifted = vec![1.0f64; len + 1];
    let mut value = 1.0;
    let mut est = 0.0;
    for (j, &kj) in k.parts().iter().enumerate() {
        let e = kj as i32;
        let mut acc = CompensatedSum::default();
        let mut rec = DyadicTrace::recorder(cutoff);
        for n in 1..=len {
            let term = stars.current[n] * inv_pow(n as f64, e) - shifted[n] * inv_pow(z + n as f64, e);
            acc.add(term);
            rec.observe(n as u64, acc.value());
        }
        let (base, level_est) = rec.finish().accelerate(j + 1);
        value = base;
        est += level_est;
        // F(z + n) = F(z + n - 1) + F_{k'}(z + n) / (z + n)^{k_j}
        let mut next = vec![0.0f64; len + 1];
        let mut running = CompensatedSum::default();
        running.add(base);
        next[0] = base;
        for n in 1..=len {
            running.add(shifted[n] * inv_pow(z + n as f64, e));
            next[n] = running.value();
        }
        shifted = next;
        stars.push(kj);
    }
    Ok(NumericReport::new(value, cutoff, est, tol))
}

/// `A^(1)_k(n)`, the z^1 coefficient of `F_k(z + n)`, through
/// `A^(1)_k(n) = sum_{m>n} ( k_r F_{k'}(m) / m^{k_r+1} - A^(1)_{k'}(m) / m^{k_r} )`
/// with `A^(1)_() = 0`.
pub fn kawashima_a1(k: &Index, n: u64, cutoff: u64, tol: f64) -> Result<NumericReport> {
    if k.is_empty() {
        return Ok(NumericReport::exact(0.0, cutoff));
    }
    if cutoff < 2 || n > cutoff {
        return Err(Error::Domain(format!("need 2 <= cutoff and n <= cutoff (n = {n}, cutoff = {cutoff})")));
    }
    let len = cutoff as usize;
    let mut stars = StarLevels::new(len);
    // a1[m] = A^(1)_{prefix}(m)
    let mut a1 = vec![0.0f64; len + 1];
    let mut est = 0.0;
    for (j, &kj) in k.parts().iter().enumerate() {
        let e = kj as i32;
        let terms: Vec<f64> = (0..=len)
            .map(|m| {
                if m == 0 {
                    return 0.0;
                }
                let mf = m as f64;
                kj as f64 * inv_pow(mf, e + 1) * stars.current[m] - a1[m] * inv_pow(mf, e)
            })
            .collect();
        let mut acc = CompensatedSum::default();
        let mut rec = DyadicTrace::recorder(cutoff);
        for (m, t) in terms.iter().enumerate().skip(1) {
            acc.add(*t);
            rec.observe(m as u64, acc.value());
        }
        let (base, level_est) = rec.finish().accelerate(j + 1);
        est += level_est;
        // A(m) = A(m - 1) - term(m)
        let mut running = CompensatedSum::default();
        running.add(base);
        a1[0] = base;
        for m in 1..=len {
            running.add(-terms[m]);
            a1[m] = running.value();
        }
        stars.push(kj);
    }
    Ok(NumericReport::new(a1[n as usize], cutoff, est, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn integer_values() {
        let f = kawashima_f(&idx(&[1]), 3.0, 1 << 14, 1e-8).unwrap();
        assert!((f.value - 11.0 / 6.0).abs() < 1e-9, "{f:?}");
        let f = kawashima_f(&idx(&[1]), 0.0, 1 << 14, 1e-8).unwrap();
        assert!(f.value.abs() < 1e-9);
        let f = kawashima_f(&idx(&[1, 2]), 2.0, 1 << 16, 1e-8).unwrap();
        assert!((f.value - 11.0 / 8.0).abs() < 1e-9, "{f:?}");
    }

    #[test]
    fn pole_guard() {
        assert!(kawashima_f(&idx(&[1]), -1.0, 1 << 10, 1e-8).is_err());
        assert!(kawashima_f(&idx(&[1]), -0.5, 1 << 10, 1e-8).is_ok());
    }

    #[test]
    fn half_integer_digamma() {
        // F_(1)(z) = psi(z + 1) + gamma; at z = 1/2 this is 2 - 2 ln 2
        let f = kawashima_f(&idx(&[1]), 0.5, 1 << 14, 1e-8).unwrap();
        assert!((f.value - (2.0 - 2.0 * 2f64.ln())).abs() < 1e-9, "{f:?}");
    }

    #[test]
    fn first_taylor_coefficient() {
        assert_eq!(kawashima_a1(&Index::empty(), 3, 1 << 10, 1e-8).unwrap().value, 0.0);
        let a = kawashima_a1(&idx(&[1]), 0, 1 << 14, 1e-8).unwrap();
        assert!((a.value - PI * PI / 6.0).abs() < 1e-9, "{a:?}");
    }

    #[test]
    fn taylor_coefficient_matches_central_difference() {
        for k in [idx(&[1]), idx(&[2]), idx(&[1, 2]), idx(&[2, 1, 1])] {
            let h = 1e-4;
            let up = kawashima_f(&k, h, 1 << 14, 1e-8).unwrap().value;
            let down = kawashima_f(&k, -h, 1 << 14, 1e-8).unwrap().value;
            let a = kawashima_a1(&k, 0, 1 << 14, 1e-8).unwrap().value;
            assert!(((up - down) / (2.0 * h) - a).abs() < 1e-6, "{k}");
        }
    }
}
