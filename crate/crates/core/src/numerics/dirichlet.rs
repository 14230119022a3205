//! The Dirichlet series L1, L2 with
//! `Z(y (x+y)^s B) = L1(s) + s L2(s)` for
//! `B = (x+y)^{k_1-1} x ... (x+y)^{k_r-1} x`, and their coefficients
//!
//! ```text
//! c1(N) = sum_j sum_{N = n_1 <= ... <= n_j > ... > n_r > 0} (k_j/n_j) (-1)^{r-j} / (n_1^{k_1} ... n_r^{k_r})
//! c2(N) = sum_{N = n_1 > ... > n_r > 0} (1/n_1) / (n_1^{k_1} ... n_r^{k_r})
//! ```
//!
//! L2 is split off the `j = 1` summand of L1 and keeps its sign, so
//! `L2(s) = (-1)^{r-1} sum_N c2(N) / N^s`. Without the sign the identity
//! fails at even depth.

use super::extrapolate::{CompensatedSum, DyadicTrace};
use super::{inv_pow, NumericReport};
use crate::error::{Error, Result};
use crate::word::Index;

fn require_nonempty(k: &Index) -> Result<()> {
    if k.is_empty() {
        Err(Error::Domain("the Dirichlet coefficients need a nonempty index".into()))
    } else {
        Ok(())
    }
}

/// `(-1)^{r-1}`, the sign L2 inherits from the `j = 1` summand.
fn l2_sign(k: &Index) -> f64 {
    if k.depth() % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

/// `T(m) = sum_{m > n_i > ... > n_r > 0} prod n_t^{-k_t}` for `m = 0..=len`,
/// over the parts `tail = (k_i, ..., k_r)`.
fn descending_tail(tail: &[u32], len: usize) -> Vec<f64> {
    let mut t = vec![1.0f64; len + 1];
    for &k in tail.iter().rev() {
        let mut next = vec![0.0f64; len + 1];
        let mut running = CompensatedSum::default();
        for m in 1..=len {
            next[m] = running.value();
            running.add(t[m] * inv_pow(m as f64, k as i32));
        }
        t = next;
    }
    t
}

/// `c1(N)` for `N = 0..=max_n` (entry 0 unused), with the ascending block
/// truncated at `n_j <= inner`.
pub fn c1_coeffs(k: &Index, max_n: u64, inner: u64) -> Result<Vec<f64>> {
    require_nonempty(k)?;
    if inner < max_n {
        return Err(Error::Domain(format!(
            "inner cutoff {inner} must be at least the coefficient range {max_n}"
        )));
    }
    let parts = k.parts();
    let r = parts.len();
    let m_len = inner as usize;
    let mut out = vec![0.0f64; max_n as usize + 1];
    for j in 1..=r {
        let tail = descending_tail(&parts[j..], m_len);
        let kj = parts[j - 1] as f64;
        let mut v: Vec<f64> = (0..=m_len)
            .map(|m| {
                if m == 0 {
                    0.0
                } else {
                    kj * inv_pow(m as f64, parts[j - 1] as i32 + 1) * tail[m]
                }
            })
            .collect();
        // fold the ascending block n_1 <= ... <= n_{j-1} <= n_j
        for i in (1..j).rev() {
            let mut suffix = CompensatedSum::default();
            for m in (1..=m_len).rev() {
                suffix.add(v[m]);
                v[m] = suffix.value() * inv_pow(m as f64, parts[i - 1] as i32);
            }
        }
        let sign = if (r - j).is_multiple_of(2) { 1.0 } else { -1.0 };
        for n in 1..=max_n as usize {
            out[n] += sign * v[n];
        }
    }
    Ok(out)
}

/// `c1(N)`, with the doubling estimate over the inner cutoff.
pub fn c1_coeff(k: &Index, n: u64, inner: u64, tol: f64) -> Result<NumericReport> {
    if n == 0 {
        return Err(Error::Domain("c1 needs N >= 1".into()));
    }
    let full = c1_coeffs(k, n, inner)?[n as usize];
    let half = c1_coeffs(k, n, (inner / 2).max(n))?[n as usize];
    Ok(NumericReport::new(full, inner, (full - half).abs(), tol))
}

/// Raw Dirichlet partial sums `sum_{N <= cutoff} c_i(N) / N^s`, with c1
/// computed at the given inner cutoff.
pub fn dirichlet_partial_sums(k: &Index, s: u32, cutoff: u64, inner: u64) -> Result<(f64, f64)> {
    let c1 = c1_coeffs(k, cutoff, inner.max(cutoff))?;
    let tail = descending_tail(&k.parts()[1..], cutoff as usize);
    let k1 = k.parts()[0] as i32;
    let sign2 = l2_sign(k);
    let mut l1 = CompensatedSum::default();
    let mut l2 = CompensatedSum::default();
    for n in 1..=cutoff as usize {
        let scale = inv_pow(n as f64, s as i32);
        l1.add(c1[n] * scale);
        l2.add(sign2 * inv_pow(n as f64, k1 + 1 + s as i32) * tail[n]);
    }
    Ok((l1.value(), l2.value()))
}

/// L1(s) and L2(s).
///
/// Both are summed as nested sums truncated at their largest variable
/// (the peak `n_j` for L1, `n_1` for L2) up to `cutoff`; the tails are
/// extrapolated away. The L2 partial sums coincide with its Dirichlet
/// partial sums; for L1 the terms are grouped by peak rather than by `n_1`.
pub fn l_partial(k: &Index, s: u32, cutoff: u64, tol: f64) -> Result<(NumericReport, NumericReport)> {
    require_nonempty(k)?;
    if cutoff < 2 {
        return Err(Error::Domain("cutoff must be at least 2".into()));
    }
    let parts: Vec<i32> = k.parts().iter().map(|&p| p as i32).collect();
    let r = parts.len();
    // exponents of the ascending block; n_1 carries the extra s
    let mut asc = parts.clone();
    asc[0] += s as i32;
    let sign2 = l2_sign(k);

    // star[i] = sum_{n_1 <= ... <= n_i <= m}, star[0] = 1
    let mut star = vec![CompensatedSum::default(); r];
    star[0].add(1.0);
    // desc[i] = sum_{m > n_i > ... > n_r > 0} for i = 1..=r+1 (1-based), desc[r+1] = 1
    let mut desc = vec![CompensatedSum::default(); r + 2];
    desc[r + 1].add(1.0);

    let mut l1 = CompensatedSum::default();
    let mut l2 = CompensatedSum::default();
    let mut rec1 = DyadicTrace::recorder(cutoff);
    let mut rec2 = DyadicTrace::recorder(cutoff);
    for m in 1..=cutoff {
        let mf = m as f64;
        for i in 1..r {
            let below = star[i - 1].value();
            star[i].add(below * inv_pow(mf, asc[i - 1]));
        }
        for j in 1..=r {
            let sign = if (r - j).is_multiple_of(2) { 1.0 } else { -1.0 };
            let term = parts[j - 1] as f64
                * inv_pow(mf, asc[j - 1] + 1)
                * star[j - 1].value()
                * desc[j + 1].value();
            l1.add(sign * term);
        }
        l2.add(sign2 * inv_pow(mf, asc[0] + 1) * desc[2].value());
        for i in 1..=r {
            let above = desc[i + 1].value();
            desc[i].add(above * inv_pow(mf, parts[i - 1]));
        }
        rec1.observe(m, l1.value());
        rec2.observe(m, l2.value());
    }
    let (v1, e1) = rec1.finish().accelerate(r);
    let (v2, e2) = rec2.finish().accelerate(r);
    Ok((
        NumericReport::new(v1, cutoff, e1, tol),
        NumericReport::new(v2, cutoff, e2, tol),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn depth_one_closed_forms() {
        for n in 1..=5u64 {
            let c = c1_coeff(&idx(&[2]), n, 1 << 10, 1e-12).unwrap();
            let expect = 2.0 / (n * n * n) as f64;
            assert!((c.value - expect).abs() < 1e-15);
            assert_eq!(c.error_estimate, 0.0);
        }
        let c = c1_coeff(&idx(&[2]), 3, 1 << 10, 1e-12).unwrap();
        assert!((c.value - 2.0 / 27.0).abs() < 1e-16);
    }

    #[test]
    fn c1_converges_in_inner_cutoff() {
        let a = c1_coeff(&idx(&[1, 2]), 1, 1 << 12, 1e-6).unwrap();
        let b = c1_coeff(&idx(&[1, 2]), 1, 1 << 14, 1e-6).unwrap();
        assert!(b.error_estimate < a.error_estimate);
        assert!((a.value - b.value).abs() <= a.error_estimate);
        // N = 1: j = 1 has no n_2 < 1; j = 2 gives sum_{n >= 1} 2/n^3 = 2 zeta(3)
        assert!((b.value - 2.0 * 1.202_056_903_159_594).abs() < 1e-7);
    }

    #[test]
    fn index_two_series() {
        let zeta = |s: i32| -> f64 { (1..200_000).map(|n| (n as f64).powi(-s)).sum::<f64>() };
        for s in 0..3u32 {
            let (l1, l2) = l_partial(&idx(&[2]), s, 1 << 14, 1e-9).unwrap();
            let z = zeta(s as i32 + 3);
            assert!((l1.value - 2.0 * z).abs() < 1e-9);
            assert!((l2.value - z).abs() < 1e-9);
        }
    }

    #[test]
    fn depth_two_identity_needs_l2_sign() {
        // Z(y (x+y) B(1,2)) = Z(y B(2,2)) = zeta(2,2) + zeta(1,1,2) + zeta(1,2,1) + ...
        let (a1, a2) = l_partial(&idx(&[1, 2]), 1, 1 << 16, 1e-9).unwrap();
        let (b1, b2) = l_partial(&idx(&[2, 2]), 0, 1 << 16, 1e-9).unwrap();
        assert!(a2.value < 0.0);
        assert!((a1.value + a2.value - (b1.value + 0.0 * b2.value)).abs() < 1e-9);
    }

    #[test]
    fn peak_grouping_matches_dirichlet_grouping() {
        // at s = 2 the Dirichlet partial sums converge fast enough to compare
        let k = idx(&[1, 2]);
        let (l1, l2) = l_partial(&k, 2, 1 << 14, 1e-9).unwrap();
        let (d1, d2) = dirichlet_partial_sums(&k, 2, 1 << 10, 1 << 16).unwrap();
        assert!((l1.value - d1).abs() < 1e-5, "{} {}", l1.value, d1);
        assert!((l2.value - d2).abs() < 1e-5, "{} {}", l2.value, d2);
    }
}
