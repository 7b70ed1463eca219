//! Commutative multivariate polynomials with exact rational
//! coefficients: the scalar fields of the classical layer (metric
//! entries, phase-space functions).

use crate::exact::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Polynomial in a fixed number of variables; keys are exponent
/// vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable '{name}' at byte {offset}")]
    UnknownVariable { offset: usize, name: String },
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut exp = vec![0; nvars];
        exp[index] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(exp, Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scale(&self, s: &Rat) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }

    /// Exact partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> MultiPoly {
        assert!(index < self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            let k = exp[index];
            if k == 0 {
                continue;
            }
            let mut e = exp.clone();
            e[index] = k - 1;
            out.add_term(e, c * Rat::from_integer(BigInt::from(k)));
        }
        out
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars);
        let mut acc = 0.0;
        for (exp, c) in &self.terms {
            let mut m = c.to_f64().unwrap_or(f64::NAN);
            for (x, &k) in point.iter().zip(exp) {
                m *= x.powi(k as i32);
            }
            acc += m;
        }
        acc
    }

    pub fn eval_exact(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (exp, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(exp) {
                for _ in 0..k {
                    m *= x;
                }
            }
            acc += m;
        }
        acc
    }

    /// Substitute each variable by a polynomial (in a possibly
    /// different variable set).
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target_vars = images.first().map_or(0, MultiPoly::nvars);
        let mut acc = MultiPoly::zero(target_vars);
        for (exp, c) in &self.terms {
            let mut m = MultiPoly::constant(target_vars, c.clone());
            for (img, &k) in images.iter().zip(exp) {
                for _ in 0..k {
                    m = &m * img;
                }
            }
            acc = &acc + &m;
        }
        acc
    }

    /// Embed into a larger variable set with variable `i` mapped to
    /// `offset + i`.
    pub fn embed(&self, nvars: usize, offset: usize) -> MultiPoly {
        assert!(self.nvars + offset <= nvars);
        let mut out = MultiPoly::zero(nvars);
        for (exp, c) in &self.terms {
            let mut e = vec![0; nvars];
            e[offset..offset + self.nvars].copy_from_slice(exp);
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Parse a polynomial over the given variable names. Longest
    /// variable name wins; `^` is exponentiation, `*` optional.
    pub fn parse(src: &str, vars: &[&str]) -> Result<MultiPoly, PolyParseError> {
        let mut sorted: Vec<(usize, &str)> = vars.iter().copied().enumerate().collect();
        sorted.sort_by_key(|(_, name)| std::cmp::Reverse(name.len()));
        let mut p = PolyParser {
            src: src.as_bytes(),
            pos: 0,
            nvars: vars.len(),
            vars: sorted,
        };
        p.skip_ws();
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(PolyParseError::Syntax {
                offset: p.pos,
                message: "unexpected trailing input".into(),
            });
        }
        Ok(poly)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (exp, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let unit_exp = exp.iter().all(|&k| k == 0);
            if !mag.is_one() || unit_exp {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            for (i, &k) in exp.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                write!(f, "x{}", i + 1)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
    /// (variable index, name), longest names first
    vars: Vec<(usize, &'a str)>,
}

impl<'a> PolyParser<'a> {
    fn err(&self, message: &str) -> PolyParseError {
        PolyParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyParseError> {
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut acc = self.power()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let p = self.power()?;
                    acc = &acc * &p;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    let p = self.power()?;
                    acc = &acc * &p;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, PolyParseError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected exponent"));
            }
            let k: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            let mut acc = MultiPoly::one(self.nvars);
            for _ in 0..k {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly, PolyParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let numer: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .unwrap();
                if self.peek() == Some(b'/')
                    && matches!(self.src.get(self.pos + 1), Some(c) if c.is_ascii_digit())
                {
                    self.pos += 1;
                    let dstart = self.pos;
                    while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let denom: BigInt = std::str::from_utf8(&self.src[dstart..self.pos])
                        .unwrap()
                        .parse()
                        .unwrap();
                    if denom.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    return Ok(MultiPoly::constant(self.nvars, Rat::new(numer, denom)));
                }
                Ok(MultiPoly::constant(self.nvars, Rat::from_integer(numer)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                for (index, name) in &self.vars {
                    if self.src[self.pos..].starts_with(name.as_bytes()) {
                        self.pos += name.len();
                        return Ok(MultiPoly::var(self.nvars, *index));
                    }
                }
                let start = self.pos;
                let mut end = self.pos;
                while matches!(self.src.get(end), Some(c) if c.is_ascii_alphanumeric()) {
                    end += 1;
                }
                Err(PolyParseError::UnknownVariable {
                    offset: start,
                    name: String::from_utf8_lossy(&self.src[start..end]).into_owned(),
                })
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}
