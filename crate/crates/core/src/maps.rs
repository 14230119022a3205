//! Linear maps on the word algebra: the anti-automorphism tau, the
//! automorphisms phi and S_1, the map S on yH, the derivations d_l, powers
//! of z = x + y and the expansion of Hx in the basis
//! `z^{k_1-1} x ... z^{k_r-1} x`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::products::concat;
use crate::word::{Index, Letter, Subspace, Word, WordPoly, Q};

/// `x + y`.
pub fn z() -> WordPoly {
    &WordPoly::from(Word::letter(Letter::X)) + &WordPoly::from(Word::letter(Letter::Y))
}

/// `(x + y)^s`: the sum of all words of length `s`.
pub fn z_power(s: usize) -> WordPoly {
    Word::all_of_length(s).map(|w| (w, Q::one())).collect()
}

pub fn tau_word(w: &Word) -> Word {
    Word::from_letters(w.letters().rev().map(Letter::swap))
}

/// Reverses each word and swaps x and y.
pub fn tau(p: &WordPoly) -> WordPoly {
    p.terms().map(|(w, c)| (tau_word(w), c.clone())).collect()
}

/// The algebra endomorphism sending x and y to the given images.
pub fn substitute(p: &WordPoly, x_img: &WordPoly, y_img: &WordPoly) -> WordPoly {
    p.map_words(|w| {
        w.letters().fold(WordPoly::one(), |acc, l| match l {
            Letter::X => concat(&acc, x_img),
            Letter::Y => concat(&acc, y_img),
        })
    })
}

fn x() -> WordPoly {
    WordPoly::from(Word::letter(Letter::X))
}

fn y() -> WordPoly {
    WordPoly::from(Word::letter(Letter::Y))
}

/// x -> x + y, y -> -y.
pub fn phi(p: &WordPoly) -> WordPoly {
    substitute(p, &z(), &-y())
}

/// x -> x, y -> x + y.
pub fn s1(p: &WordPoly) -> WordPoly {
    substitute(p, &x(), &z())
}

/// x -> x, y -> y - x.
pub fn s1_inv(p: &WordPoly) -> WordPoly {
    substitute(p, &x(), &(&y() - &x()))
}

/// `S(y w) = y S_1(w)` on yH.
pub fn s_map(p: &WordPoly) -> Result<WordPoly> {
    if !p.in_subspace(Subspace::YH) {
        return Err(Error::NotInSubspace {
            what: p.to_string(),
            space: Subspace::YH,
        });
    }
    Ok(p.map_words(|w| {
        let (_, rest) = w.split_first().expect("word in yH");
        s1(&WordPoly::from(rest)).left_mul_letter(Letter::Y)
    }))
}

/// `y (x+y)^{l-1} x`, the image of x under d_l.
pub fn derivation_generator(l: usize) -> WordPoly {
    concat(&z_power(l - 1), &x()).left_mul_letter(Letter::Y)
}

/// The derivation d_l with d_l(x) = y(x+y)^{l-1}x = -d_l(y), applied
/// letter by letter through the Leibniz rule.
pub fn derivation(l: usize, p: &WordPoly) -> Result<WordPoly> {
    if l == 0 {
        return Err(Error::Domain("derivation order l must be at least 1".into()));
    }
    let g = derivation_generator(l);
    let neg_g = -&g;
    Ok(p.map_words(|w| {
        let mut out = WordPoly::zero();
        for i in 0..w.len() {
            let (prefix, rest) = w.split_at(i);
            let (letter, suffix) = rest.split_first().expect("position in range");
            let image = match letter {
                Letter::X => &g,
                Letter::Y => &neg_g,
            };
            out += &concat(&concat(&WordPoly::from(prefix), image), &WordPoly::from(suffix));
        }
        out
    }))
}

/// Coefficients `n(k)` with `w = sum n(k) z^{k_1-1} x ... z^{k_r-1} x`,
/// largest basis element first.
///
/// Substitutes y -> z - x, encoding z by the y bit of [`Word`], and reads
/// each resulting {x, z}-word as the index of its x-separated blocks.
pub fn z_basis_decompose(w: &Word) -> Result<Vec<(Index, Q)>> {
    if !w.ends_with_x() {
        return Err(Error::NotInSubspace {
            what: w.to_string(),
            space: Subspace::HX,
        });
    }
    // z is stored as the letter y here
    let zx = substitute(&WordPoly::from(*w), &x(), &(&y() - &x()));
    Ok(zx
        .terms()
        .rev()
        .map(|(zw, c)| (xz_word_to_index(zw), c.clone()))
        .collect())
}

/// Linear extension of [`z_basis_decompose`] to a polynomial in Hx.
pub fn z_basis_decompose_poly(p: &WordPoly) -> Result<Vec<(Index, Q)>> {
    if !p.in_subspace(Subspace::HX) {
        return Err(Error::NotInSubspace {
            what: p.to_string(),
            space: Subspace::HX,
        });
    }
    let mut acc = WordPoly::zero();
    for (w, c) in p.terms() {
        acc.add_scaled(&substitute(&WordPoly::from(*w), &x(), &(&y() - &x())), c);
    }
    Ok(acc.terms().rev().map(|(zw, c)| (xz_word_to_index(zw), c.clone())).collect())
}

fn xz_word_to_index(zw: &Word) -> Index {
    let mut parts = Vec::new();
    let mut run = 1u32;
    for l in zw.letters() {
        match l {
            Letter::Y => run += 1,
            Letter::X => {
                parts.push(run);
                run = 1;
            }
        }
    }
    Index::new(parts).expect("parts are positive")
}

/// `z^{k_1-1} x ... z^{k_r-1} x`.
pub fn z_basis_element(k: &Index) -> WordPoly {
    k.parts().iter().fold(WordPoly::one(), |acc, &part| {
        concat(&concat(&acc, &z_power(part as usize - 1)), &x())
    })
}
