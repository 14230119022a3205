//! Shared helpers for the integration tests: independent oracles and
//! seeded generators.

#![allow(dead_code)]

use std::collections::BTreeMap;

use mzvlab::word::q_frac;
use mzvlab::{Index, Word, WordPoly, Q};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

pub fn p(s: &str) -> WordPoly {
    WordPoly::word(s).unwrap()
}

pub fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).unwrap()
}

/// Integer-coefficient polynomials over string words.
pub type StrPoly = BTreeMap<String, i64>;

fn add_into(acc: &mut StrPoly, prefix: char, src: StrPoly, sign: i64) {
    for (word, c) in src {
        let key = format!("{prefix}{word}");
        *acc.entry(key).or_insert(0) += sign * c;
    }
}

fn unit(s: &str) -> StrPoly {
    BTreeMap::from([(s.to_string(), 1)])
}

fn tail(s: &str) -> &str {
    &s[1..]
}

/// Diamond product by direct recursion on strings, without memoization.
pub fn naive_diamond(a: &str, b: &str) -> StrPoly {
    if a.is_empty() {
        return unit(b);
    }
    if b.is_empty() {
        return unit(a);
    }
    let (ha, hb) = (a.as_bytes()[0], b.as_bytes()[0]);
    let mut out = StrPoly::new();
    match (ha, hb) {
        (b'x', b'x') => {
            add_into(&mut out, 'x', naive_diamond(tail(a), b), 1);
            add_into(&mut out, 'x', naive_diamond(&format!("y{}", tail(a)), tail(b)), -1);
        }
        (b'x', b'y') => {
            add_into(&mut out, 'x', naive_diamond(tail(a), b), 1);
            add_into(&mut out, 'y', naive_diamond(a, tail(b)), 1);
        }
        (b'y', b'x') => {
            add_into(&mut out, 'y', naive_diamond(tail(a), b), 1);
            add_into(&mut out, 'x', naive_diamond(a, tail(b)), 1);
        }
        _ => {
            add_into(&mut out, 'y', naive_diamond(tail(a), b), 1);
            add_into(&mut out, 'y', naive_diamond(&format!("x{}", tail(a)), tail(b)), -1);
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Harmonic product by direct recursion on strings.
pub fn naive_harmonic(a: &str, b: &str) -> StrPoly {
    if a.is_empty() {
        return unit(b);
    }
    if b.is_empty() {
        return unit(a);
    }
    let (ha, hb) = (a.as_bytes()[0], b.as_bytes()[0]);
    let mut out = StrPoly::new();
    match (ha, hb) {
        (b'x', _) => add_into(&mut out, 'x', naive_harmonic(tail(a), b), 1),
        (b'y', b'x') => add_into(&mut out, 'x', naive_harmonic(a, tail(b)), 1),
        _ => {
            let mut inner = naive_harmonic(tail(a), b);
            for (k, c) in naive_harmonic(a, tail(b)) {
                *inner.entry(k).or_insert(0) += c;
            }
            for (k, c) in naive_harmonic(tail(a), tail(b)) {
                *inner.entry(format!("x{k}")).or_insert(0) += c;
            }
            add_into(&mut out, 'y', inner, 1);
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn from_str_poly(sp: &StrPoly) -> WordPoly {
    sp.iter().map(|(s, c)| (w(s), q_frac(*c, 1))).collect()
}

pub fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Word {
    let bits: String = (0..len).map(|_| if rng.gen::<bool>() { 'y' } else { 'x' }).collect();
    w(&bits)
}

/// A random polynomial of up to `terms` words with lengths in `0..=max_len`
/// and small rational coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, max_len: usize, terms: usize) -> WordPoly {
    (0..rng.gen_range(1..=terms))
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let mut c = rng.gen_range(-4i64..=4);
            if c == 0 {
                c = 1;
            }
            (random_word(rng, len), q_frac(c, rng.gen_range(1..=3)))
        })
        .collect()
}

/// Admissible indices of weight `2..=max_weight`.
pub fn admissible_indices(max_weight: usize) -> Vec<Index> {
    (2..=max_weight)
        .flat_map(Index::compositions)
        .filter(|k| k.is_admissible())
        .collect()
}

/// `sum_{n_1 < ... < n_r <= N} 1/(n_1^{k_1} ... n_r^{k_r})` for every
/// `N = 0..=n_max`, by enumerating every tuple. Terms are exact integers
/// after scaling by `lcm(1..=n_max)^weight`.
pub fn brute_force_partial_sums(k: &Index, n_max: u64) -> Vec<Q> {
    let l = (1..=n_max).fold(BigUint::one(), |acc, n| acc.lcm(&BigUint::from(n)));
    let scale = num_traits::pow(l.clone(), k.weight());
    let parts = k.parts();
    let r = parts.len();
    // term[i][n] = (L / n)^{k_i}
    let term: Vec<Vec<BigUint>> = parts
        .iter()
        .map(|&e| {
            (0..=n_max)
                .map(|n| {
                    if n == 0 {
                        BigUint::default()
                    } else {
                        num_traits::pow(&l / n, e as usize)
                    }
                })
                .collect()
        })
        .collect();

    // adds every tuple n_1 < ... < n_{level} < bound, times `prefix`
    fn below(term: &[Vec<BigUint>], level: usize, bound: u64, prefix: &BigUint, acc: &mut BigUint) {
        if level == 0 {
            *acc += prefix;
            return;
        }
        for n in level as u64..bound {
            let next = prefix * &term[level - 1][n as usize];
            below(term, level - 1, n, &next, acc);
        }
    }

    let mut total = BigUint::default();
    let mut out = vec![Q::from_integer(0.into())];
    for top in 1..=n_max {
        let mut acc = BigUint::default();
        below(&term, r - 1, top, &term[r - 1][top as usize], &mut acc);
        total += acc;
        out.push(Q::new(total.clone().into(), scale.clone().into()));
    }
    out
}

/// Letters of `w`, empty for the empty word.
pub fn raw(w: &Word) -> String {
    w.letters().map(|l| l.as_char()).collect()
}
