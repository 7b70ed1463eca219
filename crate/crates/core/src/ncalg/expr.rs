use super::atom::Atom;
use super::word::Word;
use crate::exact::{crat, CRat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// One term of a normalized expression: a nonzero Gaussian-rational
/// coefficient attached to a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: CRat,
    pub word: Word,
}

/// A sum of coefficient-weighted words with like terms merged and words
/// kept in canonical order. The carrier of every bracket computation in
/// this crate.
///
/// The empty sum is zero. Expressions are immutable values: all
/// operations return new expressions.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Expression {
    terms: BTreeMap<Word, CRat>,
}

impl Expression {
    pub fn zero() -> Self {
        Expression::default()
    }

    pub fn one() -> Self {
        Expression::term(CRat::one(), Word::one())
    }

    /// The time-shift element `J`.
    pub fn j() -> Self {
        Expression::term(CRat::one(), Word::j())
    }

    pub fn atom(a: Atom) -> Self {
        Expression::term(CRat::one(), Word::atom(a))
    }

    pub fn term(coeff: CRat, word: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        Expression { terms }
    }

    pub fn scalar(c: CRat) -> Self {
        Expression::term(c, Word::one())
    }

    pub fn int(n: i64) -> Self {
        Expression::scalar(crat(n, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.terms.iter().map(|(w, c)| Term {
            coeff: c.clone(),
            word: w.clone(),
        })
    }

    pub(crate) fn add_term(&mut self, coeff: CRat, word: Word) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn scale(&self, s: &CRat) -> Expression {
        if s.is_zero() {
            return Expression::zero();
        }
        Expression {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * s))
                .collect(),
        }
    }

    /// Advance every atom one time step; coefficients and `J` are fixed.
    pub fn shifted(&self) -> Expression {
        let mut out = Expression::zero();
        for (w, c) in &self.terms {
            out.add_term(c.clone(), w.shifted(1));
        }
        out
    }

    /// Raw product `a b` in the shift algebra. Interior `J` factors are
    /// exchanged left structurally; no table rules are applied.
    pub fn raw_mul(&self, rhs: &Expression) -> Expression {
        let mut out = Expression::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(ca * cb, wa.concat(wb));
            }
        }
        out
    }

    /// Raw bracket `a b - b a`, not table-normalized.
    pub fn raw_commutator(&self, rhs: &Expression) -> Expression {
        &self.raw_mul(rhs) - &rhs.raw_mul(self)
    }
}

impl Add for &Expression {
    type Output = Expression;
    fn add(self, rhs: &Expression) -> Expression {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }
}

impl Sub for &Expression {
    type Output = Expression;
    fn sub(self, rhs: &Expression) -> Expression {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(-c.clone(), w.clone());
        }
        out
    }
}

impl Neg for &Expression {
    type Output = Expression;
    fn neg(self) -> Expression {
        Expression {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Expression {
    type Output = Expression;
    fn mul(self, rhs: &Expression) -> Expression {
        self.raw_mul(rhs)
    }
}

fn write_rational(q: &num_rational::BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Magnitude part of a coefficient (sign handled by the caller), plus
/// whether anything at all must be printed before the word.
fn write_coeff_magnitude(c: &CRat, unit_word: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    debug_assert!(!c.is_zero());
    let re_zero = c.re.is_zero();
    let im_zero = c.im.is_zero();
    if !re_zero && !im_zero {
        // mixed complex coefficient: parenthesize
        write!(f, "(")?;
        write_rational(&c.re, f)?;
        if c.im.is_positive() {
            write!(f, "+")?;
        } else {
            write!(f, "-")?;
        }
        let aim = c.im.abs();
        if !aim.is_one() {
            write_rational(&aim, f)?;
        }
        write!(f, "i)")?;
        return Ok(());
    }
    if im_zero {
        let mag = c.re.abs();
        if mag.is_one() && !unit_word {
            return Ok(());
        }
        return write_rational(&mag, f);
    }
    // pure imaginary
    let mag = c.im.abs();
    if mag.is_one() {
        write!(f, "i")
    } else if mag.is_integer() {
        write_rational(&mag, f)?;
        write!(f, "i")
    } else {
        write!(f, "(")?;
        write_rational(&mag, f)?;
        write!(f, ")i")
    }
}

fn coeff_is_negative(c: &CRat) -> bool {
    if c.re.is_zero() {
        c.im.is_negative()
    } else {
        c.re.is_negative()
    }
}

impl fmt::Display for Expression {
    /// Renders in the expression grammar. Terms are printed leading-term
    /// first (descending canonical order); a `J` power common to all
    /// terms is factored out, so `[X, DX]` prints as
    /// `J(X'X' - 2X'X + XX)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let common_j = if self.terms.len() > 1 {
            let jp: Vec<u32> = self.terms.keys().map(|w| w.jpower).collect();
            if jp.iter().all(|&p| p == jp[0]) && jp[0] > 0 {
                jp[0]
            } else {
                0
            }
        } else {
            0
        };
        if common_j > 0 {
            for _ in 0..common_j {
                write!(f, "J")?;
            }
            write!(f, "(")?;
        }
        for (pos, (word, coeff)) in self.terms.iter().rev().enumerate() {
            let word = Word {
                jpower: word.jpower - common_j,
                atoms: word.atoms.clone(),
            };
            let neg = coeff_is_negative(coeff);
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if neg { -coeff.clone() } else { coeff.clone() };
            write_coeff_magnitude(&mag, word.is_unit(), f)?;
            if !word.is_unit() {
                write!(f, "{word}")?;
            }
        }
        if common_j > 0 {
            write!(f, ")")?;
        }
        Ok(())
    }
}
