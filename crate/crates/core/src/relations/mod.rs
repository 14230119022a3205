//! The linear part of Kawashima's relation, the reduction of f(A, B) to the
//! basis {f(y, ux)}, and the weight-graded subspaces A1..A4 of yHx.
//!
//! A5 and A6 are defined through vanishing of analytic families and are
//! not enumerated; A4 is their computable stand-in.

pub mod echelon;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use echelon::{Coordinate, Generator, MembershipCertificate, RowBasis};

use crate::error::{Error, Result};
use crate::maps::{derivation, phi, tau, tau_word, z_power};
use crate::products::{concat, diamond, diamond_words, harmonic};
use crate::word::{Letter, Subspace, Word, WordPoly, Q};

pub(crate) fn serialize_q<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub(crate) fn serialize_poly<S: Serializer>(p: &WordPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub(crate) fn serialize_poly_opt<S: Serializer>(
    p: &Option<WordPoly>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_str(&p.to_string()),
        None => s.serialize_none(),
    }
}

fn x_poly() -> WordPoly {
    WordPoly::from(Word::letter(Letter::X))
}

/// `phi(u * v) x`; its image under Z vanishes.
pub fn kawashima_generator(u: &WordPoly, v: &WordPoly) -> Result<WordPoly> {
    for p in [u, v] {
        if p.is_zero() {
            return Err(Error::Domain("Kawashima generator needs nonzero arguments".into()));
        }
        if !p.in_subspace(Subspace::YH) {
            return Err(Error::NotInSubspace {
                what: p.to_string(),
                space: Subspace::YH,
            });
        }
    }
    Ok(concat(&phi(&harmonic(u, v)), &x_poly()))
}

/// `tau(w1) <> w2`: the coordinates of f(y w1, w2 x) in the basis
/// {f(y, u x)}, i.e. f(y w1, w2 x) = f(y, (tau(w1) <> w2) x).
pub fn reduce_to_basis(w1: &Word, w2: &Word) -> WordPoly {
    diamond_words(tau_word(w1), *w2)
}

/// Linear extension of [`reduce_to_basis`].
pub fn reduce_to_basis_poly(w1: &WordPoly, w2: &WordPoly) -> WordPoly {
    diamond(&tau(w1), w2)
}

/// Renders `f(A, B) = sum c f(y, u x)`.
pub fn format_reduction(w1: &Word, w2: &Word, reduced: &WordPoly) -> String {
    let lhs = format!("f({}, {})", render_word(&w1.prepend(Letter::Y)), render_word(&w2.push(Letter::X)));
    if reduced.is_zero() {
        return format!("{lhs} = 0");
    }
    let mut out = format!("{lhs} =");
    for (i, (u, c)) in reduced.terms().rev().enumerate() {
        let sign = if c < &Q::from_integer(0.into()) { "-" } else { "+" };
        if i > 0 || sign == "-" {
            out.push(' ');
            out.push_str(sign);
        }
        let a = num_traits::Signed::abs(c);
        let coeff = if num_traits::One::is_one(&a) { String::new() } else { format!("{a}*") };
        out.push_str(&format!(" {coeff}f(y, {})", render_word(&u.push(Letter::X))));
    }
    out
}

fn render_word(w: &Word) -> String {
    w.to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SetId {
    A1,
    A2,
    A3,
    A4,
}

impl SetId {
    pub const ALL: [SetId; 4] = [SetId::A1, SetId::A2, SetId::A3, SetId::A4];
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for SetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SetId> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(SetId::A1),
            "A2" => Ok(SetId::A2),
            "A3" => Ok(SetId::A3),
            "A4" => Ok(SetId::A4),
            _ => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown set {s:?}; expected A1, A2, A3 or A4"),
            }),
        }
    }
}

fn words_in_yh(len: usize) -> impl Iterator<Item = Word> {
    Word::all_of_length(len - 1).map(|w| w.prepend(Letter::Y))
}

/// All generators of the named family landing in weight `weight`, in a
/// fixed enumeration order.
pub fn generators(set: SetId, weight: usize) -> Result<Vec<Generator>> {
    if weight < 3 {
        return Err(Error::ZeroGrade { weight });
    }
    let mut out = Vec::new();
    match set {
        SetId::A1 | SetId::A2 => {
            // u, v in yH with |u| + |v| + 1 = weight
            for a in 1..=weight - 2 {
                for u in words_in_yh(a) {
                    for v in words_in_yh(weight - 1 - a) {
                        let (up, vp) = (WordPoly::from(u), WordPoly::from(v));
                        let poly = match set {
                            SetId::A1 => kawashima_generator(&up, &vp)?,
                            _ => concat(&diamond(&up, &vp), &x_poly()),
                        };
                        out.push(Generator {
                            label: format!("u={u},v={v}"),
                            poly,
                        });
                    }
                }
            }
        }
        SetId::A3 => {
            // y w1 z^n w2 x - y z^n (tau(w1) <> w2) x, n <= weight - 3
            for n in 0..=weight - 3 {
                let zn = z_power(n);
                let free = weight - 2 - n;
                for a in 0..=free {
                    for w1 in Word::all_of_length(a) {
                        for w2 in Word::all_of_length(free - a) {
                            let lhs = concat(
                                &concat(&WordPoly::from(w1.prepend(Letter::Y)), &zn),
                                &WordPoly::from(w2.push(Letter::X)),
                            );
                            let rhs = concat(&zn, &reduce_to_basis(&w1, &w2))
                                .left_mul_letter(Letter::Y)
                                .right_mul_letter(Letter::X);
                            out.push(Generator {
                                label: format!("n={n},w1={w1},w2={w2}"),
                                poly: &lhs - &rhs,
                            });
                        }
                    }
                }
            }
        }
        SetId::A4 => {
            for a in 0..=weight - 2 {
                for w1 in Word::all_of_length(a) {
                    for w2 in Word::all_of_length(weight - 2 - a) {
                        out.push(Generator {
                            label: format!("w1={w1},w2={w2}"),
                            poly: a4_generator(&w1, &w2),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `y w1 w2 x - y (tau(w1) <> w2) x`.
pub fn a4_generator(w1: &Word, w2: &Word) -> WordPoly {
    let lhs = WordPoly::from(w1.prepend(Letter::Y).concat(w2.push(Letter::X)));
    let rhs = reduce_to_basis(w1, w2)
        .left_mul_letter(Letter::Y)
        .right_mul_letter(Letter::X);
    &lhs - &rhs
}

/// Echelon basis of the weight-`weight` piece of the named subspace.
pub fn graded_span(set: SetId, weight: usize) -> Result<RowBasis> {
    let mut basis = RowBasis::new(weight);
    for g in generators(set, weight)? {
        basis.insert(g.label, g.poly)?;
    }
    Ok(basis)
}

pub fn member(basis: &RowBasis, p: &WordPoly) -> Result<MembershipCertificate> {
    basis.member(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct SetSummary {
    pub id: SetId,
    pub dim: usize,
    pub generators: usize,
    pub pivots: Vec<String>,
}

impl SetSummary {
    pub fn of(id: SetId, basis: &RowBasis) -> SetSummary {
        SetSummary {
            id,
            dim: basis.dim(),
            generators: basis.generators().len(),
            pivots: basis.pivots().iter().map(Word::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InclusionWitness {
    pub from: SetId,
    pub into: SetId,
    pub included: bool,
    /// A row of `from` that failed to reduce to zero in `into`.
    #[serde(serialize_with = "serialize_poly_opt")]
    pub counterexample: Option<WordPoly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EqualityReport {
    pub weight: usize,
    pub sets: Vec<SetSummary>,
    pub equal: bool,
    pub witnesses: Vec<InclusionWitness>,
    pub note: &'static str,
}

pub const A5_A6_NOTE: &str = "A5 and A6 are defined by vanishing of f-families and are not enumerated; A4 stands in for them";

/// Builds A1..A4 in weight `weight` and checks every pairwise inclusion.
pub fn check_graded_equality(weight: usize) -> Result<EqualityReport> {
    let spans: Vec<(SetId, RowBasis)> = SetId::ALL
        .iter()
        .map(|&id| graded_span(id, weight).map(|b| (id, b)))
        .collect::<Result<_>>()?;
    let mut witnesses = Vec::new();
    for (from, a) in &spans {
        for (into, b) in &spans {
            if from == into {
                continue;
            }
            let mut counterexample = None;
            for row in a.rows() {
                let cert = b.member(row)?;
                if !cert.member {
                    counterexample = Some(row.clone());
                    break;
                }
            }
            witnesses.push(InclusionWitness {
                from: *from,
                into: *into,
                included: counterexample.is_none(),
                counterexample,
            });
        }
    }
    let equal = witnesses.iter().all(|w| w.included);
    Ok(EqualityReport {
        weight,
        sets: spans.iter().map(|(id, b)| SetSummary::of(*id, b)).collect(),
        equal,
        witnesses,
        note: A5_A6_NOTE,
    })
}

fn require_admissible(w: &Word) -> Result<()> {
    if w.is_admissible() {
        Ok(())
    } else {
        Err(Error::NotInSubspace {
            what: w.to_string(),
            space: Subspace::YHX,
        })
    }
}

/// `w - tau(w)`.
pub fn duality_residual(w: &Word) -> Result<WordPoly> {
    require_admissible(w)?;
    Ok(&WordPoly::from(*w) - &WordPoly::from(tau_word(w)))
}

/// `d_l(w)`.
pub fn derivation_residual(l: usize, w: &Word) -> Result<WordPoly> {
    require_admissible(w)?;
    derivation(l, &WordPoly::from(*w))
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualCheck {
    pub word: String,
    #[serde(serialize_with = "serialize_poly")]
    pub residual: WordPoly,
    pub certificate: MembershipCertificate,
    pub verified: bool,
}

/// Admissible words of a given weight, in canonical order.
pub fn admissible_words(weight: usize) -> Vec<Word> {
    if weight < 2 {
        return Vec::new();
    }
    Word::all_of_length(weight - 2)
        .map(|w| w.prepend(Letter::Y).push(Letter::X))
        .collect()
}

fn check_all<F>(words: &[Word], target_weight: usize, residual: F) -> Result<Vec<ResidualCheck>>
where
    F: Fn(&Word) -> Result<WordPoly>,
{
    let basis = if target_weight >= 3 {
        graded_span(SetId::A4, target_weight)?
    } else {
        // the grade below 3 is zero
        RowBasis::new(target_weight)
    };
    words
        .iter()
        .map(|w| {
            let r = residual(w)?;
            let certificate = basis.member(&r)?;
            let verified = certificate.verify(&basis, &r);
            Ok(ResidualCheck {
                word: w.to_string(),
                residual: r,
                certificate,
                verified,
            })
        })
        .collect()
}

/// Duality residuals of every admissible word of `weight` against A4.
pub fn duality_checks(weight: usize) -> Result<Vec<ResidualCheck>> {
    check_all(&admissible_words(weight), weight, duality_residual)
}

/// Derivation residuals `d_l(w)` for admissible `w` of `weight`, checked in
/// A4 of weight `weight + l`.
pub fn derivation_checks(l: usize, weight: usize) -> Result<Vec<ResidualCheck>> {
    check_all(&admissible_words(weight), weight + l, |w| derivation_residual(l, w))
}
