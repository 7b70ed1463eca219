//! q-derivative and q-integers.
//!
//! `D_q f(x) = (f(qx) - f(x)) / (qx - x)` computed by the definition:
//! scale, subtract, then divide exactly by `(q - 1)` and by `x`. The
//! closed form `D_q(x^n) = [n]_q x^(n-1)` is a separate route used to
//! cross-check it.

use crate::exact::Rat;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Sub};

/// Polynomial in the deformation parameter `q` with rational
/// coefficients, dense by power.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly(Vec<Rat>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![Rat::one()])
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = Rat::one();
        QPoly(v)
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            QPoly::zero()
        } else {
            QPoly(vec![c])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn eval(&self, q: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Exact division by `(q - 1)`; panics if the remainder is nonzero,
    /// which cannot happen for differences `f(q.) - f(.)`.
    fn div_q_minus_one(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        // synthetic division by the root q = 1
        let mut quotient = vec![Rat::zero(); self.0.len() - 1];
        let mut carry = Rat::zero();
        for (k, c) in self.0.iter().enumerate().rev() {
            let total = c + &carry;
            if k == 0 {
                assert!(total.is_zero(), "inexact division by (q - 1)");
            } else {
                quotient[k - 1] = total.clone();
                carry = total;
            }
        }
        QPoly(quotient).trim()
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut v = vec![Rat::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            v[i] += c;
        }
        QPoly(v).trim()
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut v = vec![Rat::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            v[i] -= c;
        }
        QPoly(v).trim()
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly(v).trim()
    }
}

/// Univariate polynomial in `x` whose coefficients are polynomials in
/// `q`, dense by power of `x`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct XPoly(Vec<QPoly>);

impl XPoly {
    pub fn zero() -> Self {
        XPoly(Vec::new())
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Self {
        let mut v = vec![QPoly::zero(); n + 1];
        v[n] = QPoly::one();
        XPoly(v)
    }

    pub fn from_rational_coeffs(coeffs: &[Rat]) -> Self {
        XPoly(coeffs.iter().cloned().map(QPoly::constant).collect()).trim()
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(QPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn scale_q(&self, s: &QPoly) -> XPoly {
        XPoly(self.0.iter().map(|c| c * s).collect()).trim()
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let mut v = vec![QPoly::zero(); self.0.len().max(rhs.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            v[i] = &v[i] + c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            v[i] = &v[i] + c;
        }
        XPoly(v).trim()
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)` as a polynomial in
/// `q`. `[0]_q = 0` by convention.
pub fn q_integer(n: usize) -> QPoly {
    let mut acc = QPoly::zero();
    for k in 0..n {
        acc = &acc + &QPoly::q_pow(k);
    }
    acc
}

/// `[n]_q` evaluated at a rational `q`.
pub fn q_integer_at(n: usize, q: &Rat) -> Rat {
    q_integer(n).eval(q)
}

/// The q-derivative `(f(qx) - f(x)) / (x (q - 1))` with symbolic `q`,
/// computed by the definition. Exact division always succeeds for
/// polynomials.
pub fn q_derivative(f: &XPoly) -> XPoly {
    // f(qx) - f(x): coefficient of x^n picks up (q^n - 1)
    let numer: Vec<QPoly> =
        f.0.iter()
            .enumerate()
            .map(|(n, c)| &(c * &QPoly::q_pow(n)) - c)
            .collect();
    // divide by (q - 1) coefficient-wise, then by x (shift down)
    let divided: Vec<QPoly> = numer.iter().map(QPoly::div_q_minus_one).collect();
    assert!(
        divided.first().is_none_or(QPoly::is_zero),
        "constant term should vanish before dividing by x"
    );
    XPoly(divided.into_iter().skip(1).collect()).trim()
}

/// The q-derivative at a rational `q`. `q = 1` is the classical limit
/// and routes to the ordinary derivative.
pub fn q_derivative_at(coeffs: &[Rat], q: &Rat) -> Vec<Rat> {
    if q == &Rat::one() {
        return coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * Rat::from_integer(n.into()))
            .collect();
    }
    let f = XPoly::from_rational_coeffs(coeffs);
    q_derivative(&f)
        .0
        .iter()
        .map(|c| c.eval(q))
        .collect()
}

impl From<Vec<QPoly>> for XPoly {
    fn from(v: Vec<QPoly>) -> Self {
        XPoly(v).trim()
    }
}
