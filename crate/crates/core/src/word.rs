//! Words over the alphabet {x, y}, rational word polynomials and
//! multi-indices.
//!
//! A [`Word`] is stored as a packed bit string (x = 0, y = 1) with the first
//! letter in the most significant position, so that the derived comparison
//! of `(len, bits)` is exactly the canonical order: weight first, then
//! lexicographic with x < y.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficients.
pub type Q = BigRational;

/// Longest word representable in a packed [`Word`].
pub const MAX_WORD_LEN: usize = 64;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(b: u64) -> Letter {
        if b & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    /// The other letter.
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    pub fn empty() -> Word {
        Word::EMPTY
    }

    pub fn letter(l: Letter) -> Word {
        Word {
            bits: l.bit(),
            len: 1,
        }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        letters.into_iter().fold(Word::EMPTY, |w, l| w.push(l))
    }

    /// `l^n`.
    pub fn repeat(l: Letter, n: usize) -> Word {
        Word::from_letters(std::iter::repeat_n(l, n))
    }

    /// Number of letters; equals the weight.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn weight(&self) -> usize {
        self.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` (0-based from the left).
    pub fn get(&self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index {i} out of range");
        Letter::from_bit(self.bits >> (self.len() - 1 - i))
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.get(0))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| Letter::from_bit(self.bits))
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Appends a letter on the right.
    pub fn push(self, l: Letter) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word longer than {MAX_WORD_LEN} letters");
        Word {
            bits: (self.bits << 1) | l.bit(),
            len: self.len + 1,
        }
    }

    /// Prepends a letter on the left.
    pub fn prepend(self, l: Letter) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word longer than {MAX_WORD_LEN} letters");
        Word {
            bits: self.bits | (l.bit() << self.len),
            len: self.len + 1,
        }
    }

    pub fn concat(self, other: Word) -> Word {
        let len = self.len() + other.len();
        assert!(len <= MAX_WORD_LEN, "word longer than {MAX_WORD_LEN} letters");
        if other.len == 0 {
            return self;
        }
        Word {
            bits: (self.bits << other.len) | other.bits,
            len: len as u8,
        }
    }

    /// Splits off the leftmost letter.
    pub fn split_first(&self) -> Option<(Letter, Word)> {
        let first = self.first()?;
        let rest_len = self.len - 1;
        let mask = if rest_len == 0 { 0 } else { u64::MAX >> (64 - rest_len as u32) };
        Some((
            first,
            Word {
                bits: self.bits & mask,
                len: rest_len,
            },
        ))
    }

    /// Splits off the rightmost letter.
    pub fn split_last(&self) -> Option<(Word, Letter)> {
        let last = self.last()?;
        Some((
            Word {
                bits: self.bits >> 1,
                len: self.len - 1,
            },
            last,
        ))
    }

    /// `(prefix of length i, suffix)`.
    pub fn split_at(&self, i: usize) -> (Word, Word) {
        assert!(i <= self.len());
        let suffix_len = self.len() - i;
        let mask = if suffix_len == 0 { 0 } else { u64::MAX >> (64 - suffix_len as u32) };
        let prefix_bits = if suffix_len == 64 { 0 } else { self.bits >> suffix_len };
        (
            Word {
                bits: prefix_bits,
                len: i as u8,
            },
            Word {
                bits: self.bits & mask,
                len: suffix_len as u8,
            },
        )
    }

    pub fn reverse(&self) -> Word {
        Word::from_letters(self.letters().rev())
    }

    pub fn starts_with_y(&self) -> bool {
        self.first() == Some(Letter::Y)
    }

    pub fn ends_with_x(&self) -> bool {
        self.last() == Some(Letter::X)
    }

    /// Member of yHx, i.e. the encoding of an admissible index.
    pub fn is_admissible(&self) -> bool {
        self.starts_with_y() && self.ends_with_x()
    }

    /// All words of length `n` in canonical order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < MAX_WORD_LEN);
        (0..(1u64 << n)).map(move |bits| Word { bits, len: n as u8 })
    }

    /// Parses a word written with the letters `x`, `y`; `""` and `"1"` are
    /// the empty word.
    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::EMPTY);
        }
        if s.len() > MAX_WORD_LEN {
            return Err(Error::Parse {
                pos: MAX_WORD_LEN,
                msg: format!("word longer than {MAX_WORD_LEN} letters"),
            });
        }
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character {c:?} in word"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from_letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len, self.bits).cmp(&(other.len, other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

/// The subspaces yH, Hx and yHx of the word algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subspace {
    YH,
    HX,
    YHX,
}

impl Subspace {
    pub fn contains_word(self, w: &Word) -> bool {
        match self {
            Subspace::YH => w.starts_with_y(),
            Subspace::HX => w.ends_with_x(),
            Subspace::YHX => w.is_admissible(),
        }
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subspace::YH => "yH",
            Subspace::HX => "Hx",
            Subspace::YHX => "yHx",
        })
    }
}

/// A rational linear combination of words. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordPoly {
    terms: BTreeMap<Word, Q>,
}

impl WordPoly {
    pub fn zero() -> WordPoly {
        WordPoly::default()
    }

    /// The unit, i.e. the empty word.
    pub fn one() -> WordPoly {
        WordPoly::from(Word::EMPTY)
    }

    pub fn monomial(w: Word, c: Q) -> WordPoly {
        let mut p = WordPoly::zero();
        p.add_term(w, c);
        p
    }

    /// Parses a single word; see [`Word::parse`].
    pub fn word(s: &str) -> Result<WordPoly> {
        Word::parse(s).map(WordPoly::from)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in canonical (ascending) word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Q)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &WordPoly, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(*w, a * c);
        }
    }

    pub fn scale(&self, c: &Q) -> WordPoly {
        if c.is_zero() {
            return WordPoly::zero();
        }
        WordPoly {
            terms: self.terms.iter().map(|(w, a)| (*w, a * c)).collect(),
        }
    }

    /// Largest word of the support in canonical order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Word, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::weight)
    }

    /// The common weight of all terms; `None` for zero or mixed weights.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let first = self.terms.keys().next()?.weight();
        let last = self.terms.keys().next_back()?.weight();
        (first == last).then_some(first)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    pub fn homogeneous_part(&self, weight: usize) -> WordPoly {
        WordPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == weight)
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    pub fn in_subspace(&self, space: Subspace) -> bool {
        self.terms.keys().all(|w| space.contains_word(w))
    }

    /// `l * self`.
    pub fn left_mul_letter(&self, l: Letter) -> WordPoly {
        WordPoly {
            terms: self.terms.iter().map(|(w, c)| (w.prepend(l), c.clone())).collect(),
        }
    }

    /// `self * l`.
    pub fn right_mul_letter(&self, l: Letter) -> WordPoly {
        WordPoly {
            terms: self.terms.iter().map(|(w, c)| (w.push(l), c.clone())).collect(),
        }
    }

    /// Linear extension of a map on words.
    pub fn map_words<F>(&self, mut f: F) -> WordPoly
    where
        F: FnMut(&Word) -> WordPoly,
    {
        let mut out = WordPoly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }
}

impl From<Word> for WordPoly {
    fn from(w: Word) -> WordPoly {
        WordPoly::monomial(w, Q::one())
    }
}

impl FromIterator<(Word, Q)> for WordPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Q)>>(iter: I) -> WordPoly {
        let mut p = WordPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

impl AddAssign<&WordPoly> for WordPoly {
    fn add_assign(&mut self, rhs: &WordPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(*w, c.clone());
        }
    }
}

impl SubAssign<&WordPoly> for WordPoly {
    fn sub_assign(&mut self, rhs: &WordPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(*w, -c);
        }
    }
}

impl Add<&WordPoly> for &WordPoly {
    type Output = WordPoly;
    fn add(self, rhs: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for WordPoly {
    type Output = WordPoly;
    fn add(mut self, rhs: WordPoly) -> WordPoly {
        self += &rhs;
        self
    }
}

impl Sub<&WordPoly> for &WordPoly {
    type Output = WordPoly;
    fn sub(self, rhs: &WordPoly) -> WordPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for WordPoly {
    type Output = WordPoly;
    fn sub(mut self, rhs: WordPoly) -> WordPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &WordPoly {
    type Output = WordPoly;
    fn neg(self) -> WordPoly {
        WordPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl Neg for WordPoly {
    type Output = WordPoly;
    fn neg(self) -> WordPoly {
        -&self
    }
}

impl Mul<&Q> for &WordPoly {
    type Output = WordPoly;
    fn mul(self, c: &Q) -> WordPoly {
        self.scale(c)
    }
}

/// Writes `c` as `a/b` (or `a` when integral).
pub fn format_q(c: &Q) -> String {
    c.to_string()
}

/// Renders terms from the largest word down, e.g. `yyx - yxx` or
/// `3/2*yxy`. The empty word is written as its bare coefficient.
impl fmt::Display for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if w.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{a}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WordPoly({self})")
    }
}

/// A composition `(k_1, ..., k_r)` of positive integers; the empty index is
/// allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Index> {
        if let Some(pos) = parts.iter().position(|&k| k == 0) {
            return Err(Error::Domain(format!(
                "index part {} is zero; all parts must be positive",
                pos + 1
            )));
        }
        Ok(Index(parts))
    }

    pub fn empty() -> Index {
        Index(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }

    /// `r = 0` or `k_r >= 2`.
    pub fn is_admissible(&self) -> bool {
        self.0.last().is_none_or(|&k| k >= 2)
    }

    pub fn reversed(&self) -> Index {
        Index(self.0.iter().rev().copied().collect())
    }

    /// `y x^{k_1-1} ... y x^{k_r-1}`.
    pub fn to_word(&self) -> Word {
        let mut w = Word::EMPTY;
        for &k in &self.0 {
            w = w.push(Letter::Y);
            for _ in 1..k {
                w = w.push(Letter::X);
            }
        }
        w
    }

    /// Inverse of [`Index::to_word`] on yH and the empty word.
    pub fn from_word(w: &Word) -> Result<Index> {
        if w.first() == Some(Letter::X) {
            return Err(Error::NotInSubspace {
                what: w.to_string(),
                space: Subspace::YH,
            });
        }
        let mut parts: Vec<u32> = Vec::new();
        for l in w.letters() {
            match l {
                Letter::Y => parts.push(1),
                Letter::X => *parts.last_mut().expect("word starts with y") += 1,
            }
        }
        Ok(Index(parts))
    }

    /// All compositions of `weight`, in no particular order.
    pub fn compositions(weight: usize) -> Vec<Index> {
        if weight == 0 {
            return vec![Index::empty()];
        }
        // compositions of n correspond to words of weight n starting with y
        Word::all_of_length(weight - 1)
            .map(|w| Index::from_word(&w.prepend(Letter::Y)).expect("starts with y"))
            .collect()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Index{self}")
    }
}

/// Accepts `1,2,3`, `(1,2,3)` and `()`.
impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Index> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Index::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|e| Error::Parse {
                    pos: 0,
                    msg: format!("bad index part {p:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Index::new(parts)
    }
}

pub fn index_to_word(k: &Index) -> Word {
    k.to_word()
}

pub fn word_to_index(w: &Word) -> Result<Index> {
    Index::from_word(w)
}

pub fn subspace_test(p: &WordPoly, space: Subspace) -> bool {
    p.in_subspace(space)
}
