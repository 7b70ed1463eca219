use super::atom::{Atom, Family};
use super::expr::Expression;
use crate::exact::{crat_q, Rat};
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;
use thiserror::Error;

/// Parse error with the byte offset of the offending input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown atom family '{name}' at byte {offset}")]
    UnknownFamily { offset: usize, name: String },
    #[error("malformed index for '{family}' at byte {offset}: {message}")]
    MalformedIndex {
        offset: usize,
        family: String,
        message: String,
    },
}

/// Syntax tree of the expression grammar.
///
/// Kept as a faithful record of the source; [`ParseTree::eval`] lowers
/// it to a normalized [`Expression`]. `parse(render(e))` reproduces `e`.
#[derive(Clone, Debug, PartialEq)]
pub enum ParseTree {
    Sum(Box<ParseTree>, Box<ParseTree>),
    Difference(Box<ParseTree>, Box<ParseTree>),
    Product(Box<ParseTree>, Box<ParseTree>),
    Negate(Box<ParseTree>),
    /// `[a, b]` -- the raw bracket `ab - ba`.
    Bracket(Box<ParseTree>, Box<ParseTree>),
    /// `D(e)` -- the ordered derivative `[e, J]`.
    DApply(Box<ParseTree>),
    /// `d(e)` -- the classical difference `e' - e`.
    SmallDApply(Box<ParseTree>),
    /// Postfix prime on a subexpression.
    Prime(Box<ParseTree>),
    Atom(Atom),
    /// The time-shift element.
    J,
    /// Rational literal (integers included).
    Number(Rat),
    /// The imaginary unit literal `i`.
    Imaginary,
}

impl ParseTree {
    /// Lower to an expression. The result is normalized structurally
    /// (all `J`s left, like terms merged) but no table rules applied.
    pub fn eval(&self) -> Expression {
        match self {
            ParseTree::Sum(a, b) => &a.eval() + &b.eval(),
            ParseTree::Difference(a, b) => &a.eval() - &b.eval(),
            ParseTree::Product(a, b) => a.eval().raw_mul(&b.eval()),
            ParseTree::Negate(a) => -&a.eval(),
            ParseTree::Bracket(a, b) => a.eval().raw_commutator(&b.eval()),
            ParseTree::DApply(a) => a.eval().raw_commutator(&Expression::j()),
            ParseTree::SmallDApply(a) => {
                let e = a.eval();
                &e.shifted() - &e
            }
            ParseTree::Prime(a) => a.eval().shifted(),
            ParseTree::Atom(a) => Expression::atom(a.clone()),
            ParseTree::J => Expression::j(),
            ParseTree::Number(q) => Expression::scalar(crat_q(q.clone())),
            ParseTree::Imaginary => {
                Expression::scalar(Complex::new(Rat::zero(), Rat::from_integer(BigInt::from(1))))
            }
        }
    }
}

/// Parse a source string and lower it to a (structurally normalized)
/// expression.
pub fn parse(src: &str) -> Result<Expression, ParseError> {
    Ok(parse_tree(src)?.eval())
}

/// Parse a source string into its syntax tree.
pub fn parse_tree(src: &str) -> Result<ParseTree, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let tree = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(tree)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

/// Multi-letter family names, longest first so the lexer can take the
/// longest match.
const MULTI_FAMILIES: &[(&str, Family)] = &[
    ("Xdd", Family::Accel),
    ("Xd", Family::Velocity),
    ("dA", Family::PotentialGrad),
    ("dg", Family::MetricGrad),
    ("Dg", Family::MetricDot),
];

fn single_family(c: char) -> Option<Family> {
    match c {
        'X' => Some(Family::Coordinate),
        'P' => Some(Family::Momentum),
        'A' => Some(Family::Potential),
        'g' => Some(Family::Metric),
        'F' => Some(Family::Field),
        'E' => Some(Family::Force),
        'c' | 'k' => Some(Family::Scalar(c)),
        'u' | 'v' | 'w' | 'y' | 'z' | 's' => Some(Family::Symbol(c)),
        _ => None,
    }
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_at(&self, ahead: usize) -> Option<u8> {
        self.src.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<ParseTree, ParseError> {
        self.skip_ws();
        let mut negate_first = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate_first = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = ParseTree::Negate(Box::new(acc));
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = ParseTree::Sum(Box::new(acc), Box::new(rhs));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = ParseTree::Difference(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    /// A product of factors, `*` optional between them.
    fn term(&mut self) -> Result<ParseTree, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = ParseTree::Product(Box::new(acc), Box::new(rhs));
                }
                Some(c) if starts_factor(c) => {
                    let rhs = self.factor()?;
                    acc = ParseTree::Product(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ParseTree, ParseError> {
        self.skip_ws();
        let mut base = self.base_factor()?;
        while self.peek() == Some(b'\'') {
            self.pos += 1;
            base = ParseTree::Prime(Box::new(base));
        }
        Ok(base)
    }

    fn base_factor(&mut self) -> Result<ParseTree, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("expected a factor")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let lhs = self.expr()?;
                self.expect(b',')?;
                let rhs = self.expr()?;
                self.expect(b']')?;
                Ok(ParseTree::Bracket(Box::new(lhs), Box::new(rhs)))
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(b'D') if self.peek_at(1) == Some(b'(') => {
                self.pos += 2;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(ParseTree::DApply(Box::new(inner)))
            }
            Some(b'd') if self.peek_at(1) == Some(b'(') => {
                self.pos += 2;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(ParseTree::SmallDApply(Box::new(inner)))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(ParseTree::Imaginary)
            }
            Some(b'J') => {
                self.pos += 1;
                if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    return Err(ParseError::MalformedIndex {
                        offset: self.pos,
                        family: "J".into(),
                        message: "the time shift takes no indices".into(),
                    });
                }
                Ok(ParseTree::J)
            }
            Some(c) if c.is_ascii_alphabetic() => self.atom(),
            Some(_) => Err(self.err("unexpected character")),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<ParseTree, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let numer: BigInt = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap();
        // A '/' directly followed by digits is a rational literal.
        if self.peek() == Some(b'/') && matches!(self.peek_at(1), Some(c) if c.is_ascii_digit()) {
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
                return Err(self.err("zero denominator in rational literal"));
            }
            return Ok(ParseTree::Number(Rat::new(numer, denom)));
        }
        Ok(ParseTree::Number(Rat::from_integer(numer)))
    }

    fn atom(&mut self) -> Result<ParseTree, ParseError> {
        let start = self.pos;
        let mut family = None;
        for (name, fam) in MULTI_FAMILIES {
            if self.src[self.pos..].starts_with(name.as_bytes()) {
                family = Some(*fam);
                self.pos += name.len();
                break;
            }
        }
        if family.is_none() {
            let c = self.bump().unwrap() as char;
            family = single_family(c);
            if family.is_none() {
                // Longer letter run makes a better error message.
                let mut end = self.pos;
                while matches!(self.src.get(end), Some(c) if c.is_ascii_alphabetic()) {
                    end += 1;
                }
                return Err(ParseError::UnknownFamily {
                    offset: start,
                    name: String::from_utf8_lossy(&self.src[start..end]).into_owned(),
                });
            }
        }
        let family = family.unwrap();
        let mut indices = Vec::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            indices.push(self.bump().unwrap() - b'0');
        }
        if !family.index_arity().contains(&indices.len()) {
            return Err(ParseError::MalformedIndex {
                offset: start,
                family: family.name(),
                message: format!(
                    "{} takes {:?} indices, got {}",
                    family.name(),
                    family.index_arity(),
                    indices.len()
                ),
            });
        }
        let mut atom = Atom::new(family, indices);
        while self.peek() == Some(b'\'') {
            self.pos += 1;
            atom = atom.shifted(1);
        }
        Ok(ParseTree::Atom(atom))
    }
}

fn starts_factor(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'(' || c == b'['
}
