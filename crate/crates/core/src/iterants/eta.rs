use super::iterant::Iterant;
use crate::exact::{crat_i, CMatrix, CRat};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A formal combination `A + B eta` of iterants, where `eta^2 = 1` and
/// `eta Q = Qbar eta` (the bar is the shift). This is exactly the
/// algebra of 2x2 matrices: `[a,d] + [b,c] eta` is the matrix
/// `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtaElement {
    pub a: Iterant,
    pub b: Iterant,
}

impl EtaElement {
    pub fn new(a: Iterant, b: Iterant) -> Self {
        EtaElement { a, b }
    }

    pub fn from_iterant(a: Iterant) -> Self {
        EtaElement::new(a, Iterant::zero())
    }

    pub fn zero() -> Self {
        EtaElement::new(Iterant::zero(), Iterant::zero())
    }

    pub fn one() -> Self {
        EtaElement::new(Iterant::one(), Iterant::zero())
    }

    /// The swap element `eta` itself.
    pub fn eta() -> Self {
        EtaElement::new(Iterant::zero(), Iterant::one())
    }

    /// The iterant square root of minus one: `i = epsilon eta`.
    pub fn imag() -> Self {
        EtaElement::new(Iterant::zero(), Iterant::polarity())
    }

    /// Scale by a central scalar from the coefficient field.
    pub fn scale(&self, s: &CRat) -> Self {
        let scale_it = |x: &Iterant| Iterant::new(&x.left * s, &x.right * s);
        EtaElement::new(scale_it(&self.a), scale_it(&self.b))
    }

    /// Conjugation `conj(A + B eta) = Abar - B eta`; the product with
    /// it gives the determinant.
    pub fn conj(&self) -> Self {
        EtaElement::new(self.a.shift(), -&self.b)
    }

    /// Determinant `A Abar - B Bbar` (a scalar iterant).
    pub fn determinant(&self) -> CRat {
        let d = &(&self.a * &self.a.shift()) - &(&self.b * &self.b.shift());
        debug_assert_eq!(d.left, d.right);
        d.left
    }

    /// The 2x2 matrix `[[a, b], [c, d]]` for `[a,d] + [b,c] eta`.
    pub fn to_matrix(&self) -> CMatrix {
        CMatrix::from_rows(vec![
            vec![self.a.left.clone(), self.b.left.clone()],
            vec![self.b.right.clone(), self.a.right.clone()],
        ])
    }

    /// Inverse of [`EtaElement::to_matrix`]; total for 2x2 matrices.
    pub fn from_matrix(m: &CMatrix) -> Self {
        assert_eq!((m.rows(), m.cols()), (2, 2), "need a 2x2 matrix");
        EtaElement::new(
            Iterant::new(m[(0, 0)].clone(), m[(1, 1)].clone()),
            Iterant::new(m[(0, 1)].clone(), m[(1, 0)].clone()),
        )
    }
}

impl Add for &EtaElement {
    type Output = EtaElement;
    fn add(self, rhs: &EtaElement) -> EtaElement {
        EtaElement::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &EtaElement {
    type Output = EtaElement;
    fn sub(self, rhs: &EtaElement) -> EtaElement {
        EtaElement::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &EtaElement {
    type Output = EtaElement;
    /// `(A + B eta)(C + D eta) = (AC + B Dbar) + (AD + B Cbar) eta`.
    fn mul(self, rhs: &EtaElement) -> EtaElement {
        EtaElement::new(
            &(&self.a * &rhs.a) + &(&self.b * &rhs.b.shift()),
            &(&self.a * &rhs.b) + &(&self.b * &rhs.a.shift()),
        )
    }
}

impl Neg for &EtaElement {
    type Output = EtaElement;
    fn neg(self) -> EtaElement {
        EtaElement::new(-&self.a, -&self.b)
    }
}

impl fmt::Display for EtaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}eta", self.a, self.b)
    }
}

/// The quaternion triple built in the eta algebra over Gaussian
/// rationals: `i = eps eta`, `j = mu epsbar`, `k = mu eta`, with `mu`
/// the commuting imaginary unit of the coefficient field.
pub struct QuaternionTriple {
    pub i: EtaElement,
    pub j: EtaElement,
    pub k: EtaElement,
}

/// `j` built from `epsbar = -eps` (as written) or from `eps` (the
/// other sign choice, with `k` adjusted to keep `ijk = -1`).
pub fn quaternions(bar_convention: bool) -> QuaternionTriple {
    let mu: CRat = crat_i(1, 1);
    let eps = EtaElement::from_iterant(Iterant::polarity());
    let i = EtaElement::imag();
    if bar_convention {
        let j = EtaElement::from_iterant(Iterant::polarity().shift()).scale(&mu);
        let k = EtaElement::eta().scale(&mu);
        QuaternionTriple { i, j, k }
    } else {
        let j = eps.scale(&mu);
        let k = EtaElement::eta().scale(&-mu);
        QuaternionTriple { i, j, k }
    }
}

/// Exact verification of `i^2 = j^2 = k^2 = ijk = -1` plus the cyclic
/// products.
pub struct QuaternionReport {
    pub squares_ok: bool,
    pub ijk_ok: bool,
    pub cyclic_ok: bool,
}

pub fn quaternion_check(bar_convention: bool) -> QuaternionReport {
    let q = quaternions(bar_convention);
    let minus_one = -&EtaElement::one();
    let squares_ok = &q.i * &q.i == minus_one
        && &q.j * &q.j == minus_one
        && &q.k * &q.k == minus_one;
    let ijk_ok = &(&q.i * &q.j) * &q.k == minus_one;
    let cyclic_ok = &q.i * &q.j == q.k && &q.j * &q.k == q.i && &q.k * &q.i == q.j;
    QuaternionReport {
        squares_ok,
        ijk_ok,
        cyclic_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::crat;

    #[test]
    fn i_squares_to_minus_one() {
        let i = EtaElement::imag();
        assert_eq!(&i * &i, -&EtaElement::one());
    }

    #[test]
    fn i_matrix_is_the_rotation() {
        let m = EtaElement::imag().to_matrix();
        assert_eq!(m[(0, 0)], crat(0, 1));
        assert_eq!(m[(0, 1)], crat(-1, 1));
        assert_eq!(m[(1, 0)], crat(1, 1));
        assert_eq!(m[(1, 1)], crat(0, 1));
    }

    #[test]
    fn unit_is_neutral() {
        let q = EtaElement::new(Iterant::from_ints(2, -1), Iterant::from_ints(0, 7));
        assert_eq!(&EtaElement::one() * &q, q);
        assert_eq!(&q * &EtaElement::one(), q);
    }

    #[test]
    fn determinant_identity() {
        // (A + B eta)(Abar - B eta) = A Abar - B Bbar
        let p = EtaElement::new(Iterant::from_ints(2, 5), Iterant::from_ints(3, -1));
        let product = &p * &p.conj();
        assert_eq!(product.b, Iterant::zero());
        assert_eq!(product.a, Iterant::scalar(p.determinant()));
        // matches the matrix determinant ad - bc
        let m = p.to_matrix();
        let det = &(&m[(0, 0)] * &m[(1, 1)]) - &(&m[(0, 1)] * &m[(1, 0)]);
        assert_eq!(p.determinant(), det);
    }

    #[test]
    fn matrix_bridge_is_a_homomorphism() {
        let p = EtaElement::new(Iterant::from_ints(1, 2), Iterant::from_ints(3, 4));
        let q = EtaElement::new(Iterant::from_ints(-2, 0), Iterant::from_ints(5, 1));
        assert_eq!((&p * &q).to_matrix(), &p.to_matrix() * &q.to_matrix());
        assert_eq!((&p + &q).to_matrix(), &p.to_matrix() + &q.to_matrix());
        assert_eq!(EtaElement::from_matrix(&p.to_matrix()), p);
    }

    #[test]
    fn conjugation_is_an_antiautomorphism() {
        let p = EtaElement::new(Iterant::from_ints(1, -2), Iterant::from_ints(0, 3));
        let q = EtaElement::new(Iterant::from_ints(4, 1), Iterant::from_ints(-1, 2));
        assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
    }

    #[test]
    fn quaternions_both_sign_conventions() {
        for convention in [true, false] {
            let r = quaternion_check(convention);
            assert!(r.squares_ok, "squares failed for convention {convention}");
            assert!(r.ijk_ok, "ijk failed for convention {convention}");
            assert!(r.cyclic_ok, "cyclic failed for convention {convention}");
        }
    }

    #[test]
    fn ij_equals_k() {
        let q = quaternions(true);
        assert_eq!(&q.i * &q.j, q.k);
    }
}
