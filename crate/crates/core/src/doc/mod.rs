//! The discrete ordered calculus operators.
//!
//! `d` is the classical finite difference `X' - X`; `D` is the ordered
//! derivative `[X, J] = J(X' - X)`, a commutator and therefore an exact
//! derivation. [`DerivationHandle`] wraps either (plus arbitrary
//! commutator generators) so the Leibniz defect can be measured
//! uniformly: zero for every commutator, the shifted cross term for `d`.

mod qcalc;

pub use qcalc::{q_derivative, q_derivative_at, q_integer, q_integer_at, QPoly, XPoly};

use crate::exact::{crat_q, Rat};
use crate::ncalg::{
    commutator, equals, normalize, Atom, CommutationTable, Expression, RewriteError,
};
use num_traits::One;

/// Classical finite difference `dX = X' - X`.
pub fn classical_difference(e: &Expression) -> Expression {
    &e.shifted() - e
}

/// Ordered derivative `DX = [X, J]`, normalized under the table.
///
/// In the free table the result equals `J (X' - X)` for single-step
/// expressions; tables add relations on top of that.
pub fn doc_derivative(e: &Expression, table: &CommutationTable) -> Result<Expression, RewriteError> {
    commutator(e, &Expression::j(), table)
}

/// The derivation a handle applies.
#[derive(Clone, Debug)]
pub enum Derivation {
    /// `grad_K(A) = [A, K] / tau` for a fixed generator `K`. The DOC
    /// derivative is the special case `K = J`, `tau = 1`.
    Commutator { generator: Expression, tau: Rat },
    /// The classical difference `A' - A`. Not a commutator, so its
    /// Leibniz rule carries a time shift.
    Difference,
}

/// A named derivation paired with the background table used to
/// normalize its results.
#[derive(Clone, Debug)]
pub struct DerivationHandle {
    pub derivation: Derivation,
    pub table: CommutationTable,
}

impl DerivationHandle {
    /// The DOC derivative `D` with unit time step.
    pub fn doc(table: CommutationTable) -> Self {
        DerivationHandle {
            derivation: Derivation::Commutator {
                generator: Expression::j(),
                tau: Rat::one(),
            },
            table,
        }
    }

    /// The tau-scaled DOC derivative `DX = J(X' - X)/tau`.
    pub fn doc_scaled(table: CommutationTable, tau: Rat) -> Self {
        assert!(tau != Rat::from_integer(0.into()), "tau must be nonzero");
        DerivationHandle {
            derivation: Derivation::Commutator {
                generator: Expression::j(),
                tau,
            },
            table,
        }
    }

    /// An arbitrary commutator derivation `grad_K A = [A, K]`.
    pub fn commutator_with(generator: Expression, table: CommutationTable) -> Self {
        DerivationHandle {
            derivation: Derivation::Commutator {
                generator,
                tau: Rat::one(),
            },
            table,
        }
    }

    /// The classical difference `d`.
    pub fn classical(table: CommutationTable) -> Self {
        DerivationHandle {
            derivation: Derivation::Difference,
            table,
        }
    }

    pub fn apply(&self, e: &Expression) -> Result<Expression, RewriteError> {
        match &self.derivation {
            Derivation::Commutator { generator, tau } => {
                let raw = commutator(e, generator, &self.table)?;
                Ok(raw.scale(&crat_q(tau.recip())))
            }
            Derivation::Difference => normalize(&classical_difference(e), &self.table),
        }
    }

    /// `grad(ab) - grad(a) b - a grad(b)`, normalized. Empty for every
    /// commutator-defined derivation; `(a'-a)(b'-b)` for `d`.
    pub fn leibniz_defect(
        &self,
        a: &Expression,
        b: &Expression,
    ) -> Result<Expression, RewriteError> {
        let ab = a.raw_mul(b);
        let lhs = self.apply(&ab)?;
        let rhs = &self.apply(a)?.raw_mul(b) + &a.raw_mul(&self.apply(b)?);
        normalize(&(&lhs - &rhs), &self.table)
    }
}

/// Expansion of the one-variable Heisenberg bracket `[x, Dx]`.
#[derive(Clone, Debug)]
pub struct XdxExpansion {
    /// Normal form in the free table: `J(x'x' - 2x'x + xx)`.
    pub free_form: Expression,
    /// Whether the free form equals `J (x' - x)^2 + J[x, x']` exactly.
    pub split_identity: bool,
}

/// `[x, Dx]` for a single generator, expanded in the free algebra.
///
/// The result is `J(x'x' - 2x'x + xx)`; splitting it as
/// `J((x'-x)^2 + [x,x'])` is verified and exposed, and under the
/// commuting-series table the bracket term drops so the expansion
/// becomes `J(x'-x)^2`.
pub fn xdx_commutator(x: &Atom) -> XdxExpansion {
    let free = CommutationTable::free();
    let xe = Expression::atom(x.clone());
    let dx = doc_derivative(&xe, &free).expect("free table rewrites nothing");
    let free_form = commutator(&xe, &dx, &free).expect("free table rewrites nothing");

    let diff = classical_difference(&xe);
    let split = &Expression::j().raw_mul(&diff.raw_mul(&diff))
        + &Expression::j().raw_mul(&xe.raw_commutator(&xe.shifted()));
    let split_identity = free_form == split;
    XdxExpansion {
        free_form,
        split_identity,
    }
}

/// The expected free normal form `J(x'x' - 2x'x + xx)` built directly.
pub fn xdx_reference(x: &Atom) -> Expression {
    let xe = Expression::atom(x.clone());
    let xp = xe.shifted();
    let j = Expression::j();
    let sum = &(&xp.raw_mul(&xp) - &xp.raw_mul(&xe).scale(&crat_q(Rat::from_integer(2.into()))))
        + &xe.raw_mul(&xe);
    j.raw_mul(&sum)
}

/// `[x, Dx]` under the commuting-series table equals `J (x'-x)^2`.
pub fn xdx_commuting_equals_square(x: &Atom) -> Result<bool, RewriteError> {
    let table = CommutationTable::commuting_series();
    let xe = Expression::atom(x.clone());
    let dx = doc_derivative(&xe, &table)?;
    let lhs = commutator(&xe, &dx, &table)?;
    let diff = classical_difference(&xe);
    let rhs = Expression::j().raw_mul(&diff.raw_mul(&diff));
    equals(&lhs, &rhs, &table)
}
