//! Concatenation, the diamond product and the harmonic product on
//! [`WordPoly`].
//!
//! Both recursive products are evaluated on pairs of words by structural
//! recursion on the leading letters, memoized per thread, and extended
//! bilinearly.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::word::{Letter, Word, WordPoly};

/// Bilinear extension of word concatenation.
pub fn concat(p: &WordPoly, q: &WordPoly) -> WordPoly {
    let mut out = WordPoly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            out.add_term(u.concat(*v), a * b);
        }
    }
    out
}

thread_local! {
    static DIAMOND_MEMO: RefCell<HashMap<(Word, Word), WordPoly>> = RefCell::new(HashMap::new());
    static HARMONIC_MEMO: RefCell<HashMap<(Word, Word), WordPoly>> = RefCell::new(HashMap::new());
}

/// Drops the memo tables of the calling thread.
pub fn clear_memo() {
    DIAMOND_MEMO.with(|m| m.borrow_mut().clear());
    HARMONIC_MEMO.with(|m| m.borrow_mut().clear());
}

fn memoized<F>(
    memo: &'static std::thread::LocalKey<RefCell<HashMap<(Word, Word), WordPoly>>>,
    a: Word,
    b: Word,
    compute: F,
) -> WordPoly
where
    F: FnOnce() -> WordPoly,
{
    if let Some(hit) = memo.with(|m| m.borrow().get(&(a, b)).cloned()) {
        return hit;
    }
    let value = compute();
    memo.with(|m| m.borrow_mut().insert((a, b), value.clone()));
    value
}

/// The diamond product of two words.
pub fn diamond_words(a: Word, b: Word) -> WordPoly {
    if a.is_empty() {
        return WordPoly::from(b);
    }
    if b.is_empty() {
        return WordPoly::from(a);
    }
    memoized(&DIAMOND_MEMO, a, b, || {
        let (a0, a1) = a.split_first().expect("nonempty");
        let (b0, b1) = b.split_first().expect("nonempty");
        match (a0, b0) {
            // xw1 <> xw2 = x(w1 <> xw2) - x(yw1 <> w2)
            (Letter::X, Letter::X) => {
                let mut inner = diamond_words(a1, b);
                inner -= &diamond_words(a1.prepend(Letter::Y), b1);
                inner.left_mul_letter(Letter::X)
            }
            // xw1 <> yw2 = x(w1 <> yw2) + y(xw1 <> w2)
            (Letter::X, Letter::Y) => {
                let mut out = diamond_words(a1, b).left_mul_letter(Letter::X);
                out += &diamond_words(a, b1).left_mul_letter(Letter::Y);
                out
            }
            // yw1 <> xw2 = y(w1 <> xw2) + x(yw1 <> w2)
            (Letter::Y, Letter::X) => {
                let mut out = diamond_words(a1, b).left_mul_letter(Letter::Y);
                out += &diamond_words(a, b1).left_mul_letter(Letter::X);
                out
            }
            // yw1 <> yw2 = y(w1 <> yw2) - y(xw1 <> w2)
            (Letter::Y, Letter::Y) => {
                let mut inner = diamond_words(a1, b);
                inner -= &diamond_words(a1.prepend(Letter::X), b1);
                inner.left_mul_letter(Letter::Y)
            }
        }
    })
}

/// The harmonic product of two words.
pub fn harmonic_words(a: Word, b: Word) -> WordPoly {
    if a.is_empty() {
        return WordPoly::from(b);
    }
    if b.is_empty() {
        return WordPoly::from(a);
    }
    memoized(&HARMONIC_MEMO, a, b, || {
        let (a0, a1) = a.split_first().expect("nonempty");
        let (b0, b1) = b.split_first().expect("nonempty");
        match (a0, b0) {
            // xw1 * w2 = x(w1 * w2)
            (Letter::X, _) => harmonic_words(a1, b).left_mul_letter(Letter::X),
            // w1 * xw2 = x(w1 * w2)
            (Letter::Y, Letter::X) => harmonic_words(a, b1).left_mul_letter(Letter::X),
            // yw1 * yw2 = y(w1 * yw2 + yw1 * w2 + x(w1 * w2))
            (Letter::Y, Letter::Y) => {
                let mut inner = harmonic_words(a1, b);
                inner += &harmonic_words(a, b1);
                inner += &harmonic_words(a1, b1).left_mul_letter(Letter::X);
                inner.left_mul_letter(Letter::Y)
            }
        }
    })
}

fn bilinear<F>(p: &WordPoly, q: &WordPoly, on_words: F) -> WordPoly
where
    F: Fn(Word, Word) -> WordPoly,
{
    let mut out = WordPoly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            out.add_scaled(&on_words(*u, *v), &(a * b));
        }
    }
    out
}

pub fn diamond(p: &WordPoly, q: &WordPoly) -> WordPoly {
    bilinear(p, q, diamond_words)
}

pub fn harmonic(p: &WordPoly, q: &WordPoly) -> WordPoly {
    bilinear(p, q, harmonic_words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> WordPoly {
        WordPoly::word(s).unwrap()
    }

    fn sum(words: &[&str]) -> WordPoly {
        words.iter().fold(WordPoly::zero(), |acc, w| &acc + &p(w))
    }

    #[test]
    fn concat_examples() {
        assert_eq!(concat(&p("y"), &p("x")), p("yx"));
        let q = &p("yx") + &p("xxy");
        assert_eq!(concat(&WordPoly::one(), &q), q);
        assert_eq!(concat(&q, &WordPoly::one()), q);
        assert_eq!(concat(&(&p("yx") + &p("y")), &p("x")), &p("yxx") + &p("yx"));
        assert!(concat(&WordPoly::zero(), &q).is_zero());
    }

    #[test]
    fn diamond_examples() {
        for w in ["", "x", "yxy", "xxyx"] {
            assert_eq!(diamond(&WordPoly::one(), &p(w)), p(w));
            assert_eq!(diamond(&p(w), &WordPoly::one()), p(w));
        }
        assert_eq!(diamond(&p("x"), &p("y")), sum(&["xy", "yx"]));
        assert_eq!(diamond(&p("y"), &p("y")), &p("yy") - &p("yx"));
        assert_eq!(diamond(&p("x"), &p("x")), &p("xx") - &p("xy"));
    }

    #[test]
    fn harmonic_examples() {
        for w in ["", "y", "xyx"] {
            assert_eq!(harmonic(&WordPoly::one(), &p(w)), p(w));
        }
        assert_eq!(harmonic(&p("y"), &p("y")), &p("yy").scale(&crate::word::q_int(2)) + &p("yx"));
        assert_eq!(harmonic(&p("x"), &p("y")), p("xy"));
        assert_eq!(harmonic(&p("y"), &p("yx")), sum(&["yyx", "yxy", "yxx"]));
    }

    #[test]
    fn weights_add() {
        let a = sum(&["xy", "yy"]);
        let b = sum(&["yxx", "xyx"]);
        assert_eq!(diamond(&a, &b).homogeneous_weight(), Some(5));
        assert_eq!(harmonic(&a, &b).homogeneous_weight(), Some(5));
    }
}
