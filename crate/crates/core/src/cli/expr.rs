//! Word-polynomial expressions.
//!
//! ```text
//! expr     := ['+'|'-'] term { ('+'|'-') term }
//! term     := rational [ '*' factor { factor } ] | factor { factor }
//! factor   := atom [ '^' nat ]
//! atom     := 'x' | 'y' | 'z' | '(' expr ')'
//! rational := int [ '/' nat ]
//! ```
//!
//! Juxtaposition is concatenation, `z` is shorthand for `(x+y)` and a bare
//! rational is a multiple of the empty word. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::maps::z;
use crate::products::concat;
use crate::word::{Letter, Word, WordPoly, MAX_WORD_LEN, Q};

#[derive(Clone, Debug, PartialEq)]
pub enum ExprAst {
    Letter(Letter),
    /// `x + y`.
    Z,
    /// A rational multiple of the empty word.
    Scalar(Q),
    /// Signed terms, `true` for subtraction.
    Sum(Vec<(bool, ExprAst)>),
    /// Concatenation of factors.
    Product(Vec<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

/// Largest number of terms an expression may expand to.
pub const MAX_TERMS: u64 = 1 << 20;

impl ExprAst {
    /// Upper bounds on (word length, number of terms) of the expansion.
    fn size_bound(&self) -> (u64, u64) {
        match self {
            ExprAst::Letter(_) => (1, 1),
            ExprAst::Z => (1, 2),
            ExprAst::Scalar(_) => (0, 1),
            ExprAst::Sum(terms) => terms.iter().fold((0, 0), |(l, t), (_, e)| {
                let (el, et) = e.size_bound();
                (l.max(el), t.saturating_add(et))
            }),
            ExprAst::Product(factors) => factors.iter().fold((0, 1), |(l, t), f| {
                let (fl, ft) = f.size_bound();
                (l.saturating_add(fl), t.saturating_mul(ft))
            }),
            ExprAst::Pow(base, e) => {
                let (bl, bt) = base.size_bound();
                (bl.saturating_mul(*e as u64), bt.saturating_pow(*e))
            }
        }
    }

    pub fn eval(&self) -> Result<WordPoly> {
        let (len, terms) = self.size_bound();
        if len > MAX_WORD_LEN as u64 {
            return Err(Error::Domain(format!(
                "expression produces words longer than {MAX_WORD_LEN} letters"
            )));
        }
        if terms > MAX_TERMS {
            return Err(Error::Domain(format!(
                "expression may expand to more than {MAX_TERMS} terms"
            )));
        }
        Ok(self.eval_unchecked())
    }

    fn eval_unchecked(&self) -> WordPoly {
        match self {
            ExprAst::Letter(l) => WordPoly::from(Word::letter(*l)),
            ExprAst::Z => z(),
            ExprAst::Scalar(q) => WordPoly::monomial(Word::EMPTY, q.clone()),
            ExprAst::Sum(terms) => {
                let mut acc = WordPoly::zero();
                for (neg, t) in terms {
                    let v = t.eval_unchecked();
                    if *neg {
                        acc -= &v;
                    } else {
                        acc += &v;
                    }
                }
                acc
            }
            ExprAst::Product(factors) => factors
                .iter()
                .fold(WordPoly::one(), |acc, f| concat(&acc, &f.eval_unchecked())),
            ExprAst::Pow(base, e) => {
                let b = base.eval_unchecked();
                (0..*e).fold(WordPoly::one(), |acc, _| concat(&acc, &b))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut terms = Vec::new();
        let mut neg = match self.peek() {
            Some(b'-') => {
                self.bump();
                true
            }
            Some(b'+') => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            terms.push((neg, self.term()?));
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    neg = false;
                }
                Some(b'-') => {
                    self.bump();
                    neg = true;
                }
                _ => break,
            }
        }
        Ok(ExprAst::Sum(terms))
    }

    fn term(&mut self) -> Result<ExprAst> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.rational()?),
            _ => None,
        };
        if let Some(q) = &coeff {
            if self.peek() != Some(b'*') {
                return Ok(ExprAst::Scalar(q.clone()));
            }
            self.bump();
        }
        let mut factors = Vec::new();
        if let Some(q) = coeff {
            factors.push(ExprAst::Scalar(q));
        }
        factors.push(self.factor()?);
        while matches!(self.peek(), Some(b'x' | b'y' | b'z' | b'(')) {
            factors.push(self.factor()?);
        }
        Ok(ExprAst::Product(factors))
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let atom = match self.peek() {
            Some(b'x') => {
                self.bump();
                ExprAst::Letter(Letter::X)
            }
            Some(b'y') => {
                self.bump();
                ExprAst::Letter(Letter::Y)
            }
            Some(b'z') => {
                self.bump();
                ExprAst::Z
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.bump();
                inner
            }
            Some(b'^') => return self.err("exponent on nothing"),
            Some(c) => return self.err(format!("unexpected {:?}", c as char)),
            None => return self.err("unexpected end of input"),
        };
        if self.peek() == Some(b'^') {
            self.bump();
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return self.err("expected a non-negative integer exponent");
            }
            let e = self.nat()?;
            let e = u32::try_from(e).or_else(|_| self.err("exponent too large"))?;
            return Ok(ExprAst::Pow(Box::new(atom), e));
        }
        Ok(atom)
    }

    fn nat(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<Q> {
        let num = self.nat()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let den_pos = self.pos;
            let den = self.nat()?;
            if den.is_zero() {
                return Err(Error::Parse {
                    pos: den_pos,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(Q::new(num, den));
        }
        Ok(Q::from_integer(num))
    }
}

pub fn parse_expr(src: &str) -> Result<ExprAst> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let ast = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(ast)
}

/// Parses and evaluates.
pub fn parse_poly(src: &str) -> Result<WordPoly> {
    parse_expr(src)?.eval()
}
