//! Finite nested sums in exact rational arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::{s1_inv, tau, z_basis_decompose};
use crate::word::{Index, Subspace, Word, WordPoly, Q};

fn inv_pow_q(n: u64, k: u32) -> Q {
    Q::new(BigInt::one(), num_traits::pow(BigInt::from(n), k as usize))
}

/// `sum_{0 < n_1 <= ... <= n_r <= N} 1/(n_1^{k_1} ... n_r^{k_r})`; the empty
/// index gives 1.
pub fn star_sum(k: &Index, n_max: u64) -> Q {
    let r = k.depth();
    let mut levels = vec![Q::zero(); r + 1];
    levels[0] = Q::one();
    for n in 1..=n_max {
        // ascending j: level j-1 already includes n
        for j in 1..=r {
            let add = &levels[j - 1] * inv_pow_q(n, k.parts()[j - 1]);
            levels[j] += add;
        }
    }
    levels.swap_remove(r)
}

/// `sum_{0 < n_1 < ... < n_r <= N} 1/(n_1^{k_1} ... n_r^{k_r})`.
pub fn strict_sum(k: &Index, n_max: u64) -> Q {
    super::zeta::zeta_partial_exact(k, n_max)
}

/// `h_N(k) = sum_{0 < n_1 < ... < n_r = N} 1/(n_1^{k_1} ... n_r^{k_r})`.
pub fn h_n(k: &Index, n: u64) -> Result<Q> {
    if n == 0 {
        return Err(Error::Domain("h_N needs N >= 1".into()));
    }
    let Some((&top, rest)) = k.parts().split_last() else {
        return Err(Error::Domain("h_N needs a nonempty index".into()));
    };
    let below = strict_sum(&Index::new(rest.to_vec())?, n - 1);
    Ok(below * inv_pow_q(n, top))
}

/// Linear extension of [`h_n`] to yH through the index encoding.
pub fn h_n_poly(p: &WordPoly, n: u64) -> Result<Q> {
    if !p.in_subspace(Subspace::YH) {
        return Err(Error::NotInSubspace {
            what: p.to_string(),
            space: Subspace::YH,
        });
    }
    let mut acc = Q::zero();
    for (w, c) in p.terms() {
        acc += c * h_n(&Index::from_word(w)?, n)?;
    }
    Ok(acc)
}

/// `c_2(N) = sum_{N = n_1 > ... > n_r > 0} (1/n_1) / (n_1^{k_1} ... n_r^{k_r})`.
///
/// Evaluated from the bottom of the descending chain upward:
/// `T_i(m) = sum_{n < m} n^{-k_i} T_{i+1}(n)`.
pub fn c2_coeff(k: &Index, n: u64) -> Result<Q> {
    if k.is_empty() {
        return Err(Error::Domain("c2 needs a nonempty index".into()));
    }
    if n == 0 {
        return Err(Error::Domain("c2 needs N >= 1".into()));
    }
    let parts = k.parts();
    let r = parts.len();
    // tail[m] = T_{i+1}(m) for m = 0..=n
    let mut tail = vec![Q::one(); n as usize + 1];
    for i in (1..r).rev() {
        let mut next = vec![Q::zero(); n as usize + 1];
        let mut running = Q::zero();
        for m in 1..=n as usize {
            next[m] = running.clone();
            running += &tail[m] * inv_pow_q(m as u64, parts[i]);
        }
        tail = next;
    }
    Ok(&tail[n as usize] * inv_pow_q(n, parts[0] + 1))
}

/// `c_2(w; N)` for `w` in Hx, through the expansion of `w` in the basis
/// `(x+y)^{k_1-1} x ... (x+y)^{k_r-1} x`.
pub fn c2_of_word(w: &Word, n: u64) -> Result<Q> {
    let mut acc = Q::zero();
    for (k, c) in z_basis_decompose(w)? {
        acc += c * c2_coeff(&k, n)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct C2Check {
    pub word: String,
    pub n: u64,
    #[serde(serialize_with = "crate::relations::serialize_q")]
    pub lhs: Q,
    #[serde(serialize_with = "crate::relations::serialize_q")]
    pub rhs: Q,
    pub equal: bool,
}

/// Compares `c_2(w; N)` with `h_N(tau(S_1^{-1}(w))) / N` exactly.
pub fn c2_identity_check(w: &Word, n: u64) -> Result<C2Check> {
    let lhs = c2_of_word(w, n)?;
    let image = tau(&s1_inv(&WordPoly::from(*w)));
    let rhs = h_n_poly(&image, n)? / Q::from_integer(BigInt::from(n));
    Ok(C2Check {
        word: w.to_string(),
        n,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}
