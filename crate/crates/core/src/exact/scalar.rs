use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exact rational number of unbounded precision.
pub type Rat = BigRational;

/// Gaussian rational `a + b i` with exact rational parts.
pub type CRat = Complex<BigRational>;

/// `n/d` as a Gaussian rational.
pub fn crat(n: i64, d: i64) -> CRat {
    assert!(d != 0, "zero denominator");
    Complex::new(
        BigRational::new(BigInt::from(n), BigInt::from(d)),
        BigRational::zero(),
    )
}

/// `(n/d) i` as a Gaussian rational.
pub fn crat_i(n: i64, d: i64) -> CRat {
    assert!(d != 0, "zero denominator");
    Complex::new(
        BigRational::zero(),
        BigRational::new(BigInt::from(n), BigInt::from(d)),
    )
}

/// Promote a rational to a Gaussian rational.
pub fn crat_q(q: Rat) -> CRat {
    Complex::new(q, BigRational::zero())
}

/// Gaussian integer with `i64` parts.
///
/// Used for the checkerboard lattice, where amplitudes are sums of
/// `i^c` path weights and stay well inside `i64` range for any horizon
/// this crate enumerates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    /// `i^k` for `k >= 0`.
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// Squared modulus as f64 (for plots and heat maps).
    pub fn norm_sqr(&self) -> f64 {
        (self.re as f64) * (self.re as f64) + (self.im as f64) * (self.im as f64)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, m) => write!(f, "{m}i"),
            (r, m) if m > 0 => write!(f, "{r}+{m}i"),
            (r, m) => write!(f, "{r}{m}i"),
        }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for GaussInt {
    fn add_assign(&mut self, rhs: GaussInt) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}
