use crate::exact::{crat, CRat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An ordered pair `[a, b]` standing for the period-two waveform
/// `...ababab...`, with componentwise sum and product. The shift
/// exchanges the two viewpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Iterant {
    pub left: CRat,
    pub right: CRat,
}

impl Iterant {
    pub fn new(left: CRat, right: CRat) -> Self {
        Iterant { left, right }
    }

    pub fn from_ints(left: i64, right: i64) -> Self {
        Iterant::new(crat(left, 1), crat(right, 1))
    }

    pub fn zero() -> Self {
        Iterant::new(CRat::zero(), CRat::zero())
    }

    pub fn one() -> Self {
        Iterant::new(CRat::one(), CRat::one())
    }

    /// The polarity `sigma = epsilon = [-1, 1]`, a square root of one.
    pub fn polarity() -> Self {
        Iterant::from_ints(-1, 1)
    }

    /// Scalar `s` embedded as `[s, s]`.
    pub fn scalar(s: CRat) -> Self {
        Iterant::new(s.clone(), s)
    }

    /// The shift `D[a, b] = [b, a]`, an involution.
    pub fn shift(&self) -> Self {
        Iterant::new(self.right.clone(), self.left.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.left.is_zero() && self.right.is_zero()
    }

    /// `t + x sigma = [t - x, t + x]`.
    pub fn from_spacetime(t: &CRat, x: &CRat) -> Self {
        Iterant::new(t - x, t + x)
    }

    /// Recover `(t, x)` from `[t - x, t + x]`.
    pub fn to_spacetime(&self) -> (CRat, CRat) {
        let half = crat(1, 2);
        (
            (&self.left + &self.right) * &half,
            (&self.right - &self.left) * half,
        )
    }

    /// The product of the components: the quadratic form a boost
    /// preserves (the interval `t^2 - x^2` for spacetime iterants).
    pub fn component_product(&self) -> CRat {
        &self.left * &self.right
    }
}

impl Add for &Iterant {
    type Output = Iterant;
    fn add(self, rhs: &Iterant) -> Iterant {
        Iterant::new(&self.left + &rhs.left, &self.right + &rhs.right)
    }
}

impl Sub for &Iterant {
    type Output = Iterant;
    fn sub(self, rhs: &Iterant) -> Iterant {
        Iterant::new(&self.left - &rhs.left, &self.right - &rhs.right)
    }
}

impl Mul for &Iterant {
    type Output = Iterant;
    fn mul(self, rhs: &Iterant) -> Iterant {
        Iterant::new(&self.left * &rhs.left, &self.right * &rhs.right)
    }
}

impl Neg for &Iterant {
    type Output = Iterant;
    fn neg(self) -> Iterant {
        Iterant::new(-self.left.clone(), -self.right.clone())
    }
}

impl fmt::Display for Iterant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.left, self.right)
    }
}
