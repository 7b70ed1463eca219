use super::atom::{Atom, Family};
use super::expr::Expression;
use super::word::Word;
use crate::exact::{crat, CRat};
use num_traits::One;
use std::collections::HashMap;

/// Whether a rule applies only to atoms at the same time step or across
/// prime counts.
///
/// Equal-time relations are closed under the shift automorphism
/// (`[X', P'] = [X, P]'`), so the default is `SamePrimes`; the
/// commuting-series option needs `AnyPrimes` to identify `X X'` with
/// `X' X`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrimeMode {
    SamePrimes,
    AnyPrimes,
}

/// Right-hand side of a commutation rule `[lo, hi] = outcome`, where
/// `lo` is the atom that sorts first in the normal ordering.
///
/// Every outcome is a sum of words strictly shorter than two atoms, so
/// rewriting terminates: a swap either removes an inversion or replaces
/// the pair by shorter words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    /// `[lo, hi] = 0`: the pair commutes.
    Zero,
    /// `[lo, hi] = delta` on the index lists (1 when equal, else 0).
    Delta,
    /// `[lo, hi]` is a named expression built from the pair's indices.
    Named(NamedForm),
}

/// The closed set of named rule outcomes used by the shipped
/// backgrounds. `sorted` selects whether symmetric index pairs are
/// canonicalized (metric symmetry imposed) or kept verbatim.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedForm {
    /// `[A_i, P_j] = dA(j, i)` -- gradient component `j` of potential `i`.
    PotentialGrad,
    /// `[X_i, Xd_j] = g(i, j)`.
    MetricPair { sorted: bool },
    /// `[g_jk, Xd_i] = dg(i, j, k)` -- spatial gradient of the metric.
    MetricGrad { sorted: bool },
    /// `[X_i, Xdd_j] = Dg(i, j) - F(i, j)`.
    AccelField,
    /// `[Xd_i, Xd_j] = F(i, j)` (antisymmetric; `F(i,i) = 0`).
    VelocityCurl,
    /// `[X_i, Dg_jk] = dg(i, j, k)`.
    MetricDotGrad { sorted: bool },
    /// `[X_i, F_jk] = dg(k, i, j) - dg(j, i, k)`.
    FieldGrad { sorted: bool },
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum FamilyKey {
    Coordinate,
    Velocity,
    Accel,
    Metric,
    MetricGrad,
    MetricDot,
    Field,
    PotentialGrad,
    Potential,
    Momentum,
    Force,
    Scalar,
    Symbol,
}

fn key_of(f: &Family) -> FamilyKey {
    match f {
        Family::Coordinate => FamilyKey::Coordinate,
        Family::Velocity => FamilyKey::Velocity,
        Family::Accel => FamilyKey::Accel,
        Family::Metric => FamilyKey::Metric,
        Family::MetricGrad => FamilyKey::MetricGrad,
        Family::MetricDot => FamilyKey::MetricDot,
        Family::Field => FamilyKey::Field,
        Family::PotentialGrad => FamilyKey::PotentialGrad,
        Family::Potential => FamilyKey::Potential,
        Family::Momentum => FamilyKey::Momentum,
        Family::Force => FamilyKey::Force,
        Family::Scalar(_) => FamilyKey::Scalar,
        Family::Symbol(_) => FamilyKey::Symbol,
    }
}

/// A rule set mapping ordered atom pairs to rewrite outcomes; together
/// with the fixed atom order it defines a background algebra.
///
/// Rules are stored for the canonically ordered pair `(lo, hi)`; the
/// reverse pair uses the negated outcome. Pairs without a rule are free
/// and are left in place, so equality under a table is equality in the
/// quotient of the free shift algebra by the table's relations.
#[derive(Clone, Debug, Default)]
pub struct CommutationTable {
    rules: HashMap<(FamilyKey, FamilyKey), (PrimeMode, Outcome)>,
    /// Rewrite step budget; exceeded means a pathological rule set.
    pub step_budget: u64,
    name: &'static str,
}

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

impl CommutationTable {
    fn with_name(name: &'static str) -> Self {
        CommutationTable {
            rules: HashMap::new(),
            step_budget: DEFAULT_STEP_BUDGET,
            name,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    /// The free table: no relations, only the structural `ZJ = JZ'`.
    pub fn free() -> Self {
        CommutationTable::with_name("free")
    }

    /// Free table plus `[X, X] = 0` across prime counts: every
    /// coordinate commutes with every time shift of a coordinate.
    pub fn commuting_series() -> Self {
        let mut t = CommutationTable::with_name("commuting");
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Coordinate,
            PrimeMode::AnyPrimes,
            Outcome::Zero,
        );
        t
    }

    /// Flat background: `[X_i, X_j] = 0`, `[P_i, P_j] = 0`,
    /// `[X_i, P_j] = delta_ij`.
    pub fn flat() -> Self {
        let mut t = CommutationTable::with_name("flat");
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Coordinate,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Momentum,
            FamilyKey::Momentum,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Momentum,
            PrimeMode::SamePrimes,
            Outcome::Delta,
        );
        t
    }

    /// Gauge background: flat plus potentials with `[X_i, A_j] = 0` and
    /// `[A_i, P_j] = dA(j, i)`. `[A_i, A_j]` is free unless `abelian`.
    ///
    /// Gradient atoms are functions of the coordinates, so the
    /// Jacobi-forced `[X_i, dA_jk] = 0` is installed too; in the abelian
    /// case potentials and their gradients all commute. Second
    /// gradients (`[dA, P]`) are deliberately left free -- completing
    /// that tower is out of scope, and the curvature derivation never
    /// multiplies a gradient by a momentum.
    pub fn gauge(abelian: bool) -> Self {
        let mut t = CommutationTable::flat();
        t.name = if abelian { "gauge-abelian" } else { "gauge" };
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Potential,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::PotentialGrad,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Potential,
            FamilyKey::Momentum,
            PrimeMode::SamePrimes,
            Outcome::Named(NamedForm::PotentialGrad),
        );
        if abelian {
            // gradient atoms rank below potentials in the atom order
            for pair in [
                (FamilyKey::Potential, FamilyKey::Potential),
                (FamilyKey::PotentialGrad, FamilyKey::Potential),
                (FamilyKey::PotentialGrad, FamilyKey::PotentialGrad),
            ] {
                t.insert(pair.0, pair.1, PrimeMode::SamePrimes, Outcome::Zero);
            }
        }
        t
    }

    /// Metric background for the connection derivations:
    /// `[X_i, Xd_j] = g_ij`, `[X_i, g_jk] = 0`, `[g, g] = 0`,
    /// `[g_jk, Xd_i] = dg(i,j,k)`, `[X_i, Xdd_j] = Dg_ij - F_ij`,
    /// `[Xd_i, Xd_j] = F_ij`, plus the derived gradient rules for
    /// `Dg` and `F` against coordinates.
    ///
    /// `symmetric` canonicalizes `g`/`dg`/`Dg` index pairs (metric
    /// symmetry imposed); `constant` sends every metric gradient to
    /// zero instead.
    pub fn metric(symmetric: bool, constant: bool) -> Self {
        let mut t = CommutationTable::with_name(match (symmetric, constant) {
            (_, true) => "metric-constant",
            (true, false) => "metric",
            (false, false) => "metric-asym",
        });
        let grad = |named: NamedForm| {
            if constant {
                Outcome::Zero
            } else {
                Outcome::Named(named)
            }
        };
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Coordinate,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Velocity,
            PrimeMode::SamePrimes,
            Outcome::Named(NamedForm::MetricPair { sorted: symmetric }),
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Metric,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Metric,
            FamilyKey::Metric,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        // metric gradients are functions of position: [X_i, dg_jkl] = 0
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::MetricGrad,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Metric,
            FamilyKey::Velocity,
            PrimeMode::SamePrimes,
            grad(NamedForm::MetricGrad { sorted: symmetric }),
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Accel,
            PrimeMode::SamePrimes,
            Outcome::Named(NamedForm::AccelField),
        );
        t.insert(
            FamilyKey::Velocity,
            FamilyKey::Velocity,
            PrimeMode::SamePrimes,
            Outcome::Named(NamedForm::VelocityCurl),
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::MetricDot,
            PrimeMode::SamePrimes,
            grad(NamedForm::MetricDotGrad { sorted: symmetric }),
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Field,
            PrimeMode::SamePrimes,
            grad(NamedForm::FieldGrad { sorted: symmetric }),
        );
        t
    }

    /// Flat kinematics with `g = delta` for the Lorentz-force argument:
    /// `[X_i, X_j] = 0`, `[X_i, Xd_j] = delta_ij`, and the ansatz fields
    /// `E`, `F` commute with coordinates. Velocity brackets stay free.
    pub fn flat_kinematic() -> Self {
        let mut t = CommutationTable::with_name("flat-kinematic");
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Coordinate,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Velocity,
            PrimeMode::SamePrimes,
            Outcome::Delta,
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Force,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t.insert(
            FamilyKey::Coordinate,
            FamilyKey::Field,
            PrimeMode::SamePrimes,
            Outcome::Zero,
        );
        t
    }

    fn insert(&mut self, a: FamilyKey, b: FamilyKey, mode: PrimeMode, outcome: Outcome) {
        self.rules.insert((a, b), (mode, outcome));
    }

    /// Look up the rule for the ordered pair `(lo, hi)` with
    /// `lo < hi` in atom order (or equal families). Central scalars
    /// commute with everything regardless of table content.
    pub(crate) fn rule_for(&self, lo: &Atom, hi: &Atom) -> Option<Outcome> {
        if lo.family.is_constant() || hi.family.is_constant() {
            return Some(Outcome::Zero);
        }
        let (mode, outcome) = self.rules.get(&(key_of(&lo.family), key_of(&hi.family)))?;
        match mode {
            PrimeMode::AnyPrimes => Some(*outcome),
            PrimeMode::SamePrimes if lo.primes == hi.primes => Some(*outcome),
            _ => None,
        }
    }
}

/// Build the expression `[lo, hi]` for a rule outcome. The result is
/// shifted to the common prime count of the pair, which keeps equal-time
/// rule sets closed under the shift automorphism.
pub(crate) fn outcome_expression(outcome: &Outcome, lo: &Atom, hi: &Atom) -> Expression {
    let primes = lo.primes.min(hi.primes);
    let expr = match outcome {
        Outcome::Zero => Expression::zero(),
        Outcome::Delta => {
            if lo.indices == hi.indices {
                Expression::one()
            } else {
                Expression::zero()
            }
        }
        Outcome::Named(form) => named_expression(form, lo, hi),
    };
    if primes == 0 {
        expr
    } else {
        let mut out = Expression::zero();
        for t in expr.terms() {
            out.add_term(t.coeff, t.word.shifted(primes));
        }
        out
    }
}

fn named_expression(form: &NamedForm, lo: &Atom, hi: &Atom) -> Expression {
    let ix = |a: &Atom, k: usize| a.indices[k];
    match form {
        // [A_i, P_j] = dA(j, i)
        NamedForm::PotentialGrad => signed_atom(
            CRat::one(),
            Family::PotentialGrad,
            vec![ix(hi, 0), ix(lo, 0)],
        ),
        // [X_i, Xd_j] = g(i, j)
        NamedForm::MetricPair { sorted } => metric_atom(ix(lo, 0), ix(hi, 0), *sorted),
        // [g_jk, Xd_i] = dg(i, j, k)
        NamedForm::MetricGrad { sorted } => {
            metric_grad_atom(ix(hi, 0), ix(lo, 0), ix(lo, 1), *sorted)
        }
        // [X_i, Xdd_j] = Dg(i, j) - F(i, j)
        NamedForm::AccelField => {
            let dg = signed_atom(
                CRat::one(),
                Family::MetricDot,
                sorted_pair(ix(lo, 0), ix(hi, 0)),
            );
            &dg - &field_atom(ix(lo, 0), ix(hi, 0))
        }
        // [Xd_i, Xd_j] = F(i, j)
        NamedForm::VelocityCurl => field_atom(ix(lo, 0), ix(hi, 0)),
        // [X_i, Dg_jk] = dg(i, j, k)
        NamedForm::MetricDotGrad { sorted } => {
            metric_grad_atom(ix(lo, 0), ix(hi, 0), ix(hi, 1), *sorted)
        }
        // [X_i, F_jk] = dg(k, i, j) - dg(j, i, k)
        NamedForm::FieldGrad { sorted } => {
            let a = metric_grad_atom(ix(hi, 1), ix(lo, 0), ix(hi, 0), *sorted);
            let b = metric_grad_atom(ix(hi, 0), ix(lo, 0), ix(hi, 1), *sorted);
            &a - &b
        }
    }
}

fn sorted_pair(i: u8, j: u8) -> Vec<u8> {
    if i <= j {
        vec![i, j]
    } else {
        vec![j, i]
    }
}

fn signed_atom(coeff: CRat, family: Family, indices: Vec<u8>) -> Expression {
    Expression::term(coeff, Word::atom(Atom::new(family, indices)))
}

fn metric_atom(i: u8, j: u8, sorted: bool) -> Expression {
    let indices = if sorted { sorted_pair(i, j) } else { vec![i, j] };
    signed_atom(CRat::one(), Family::Metric, indices)
}

/// `dg(d, j, k)`: derivative direction `d`, metric pair `(j, k)`.
pub(crate) fn metric_grad_atom(d: u8, j: u8, k: u8, sorted: bool) -> Expression {
    let mut indices = vec![d];
    indices.extend(if sorted { sorted_pair(j, k) } else { vec![j, k] });
    signed_atom(CRat::one(), Family::MetricGrad, indices)
}

/// `F(i, j)` canonicalized antisymmetric: `F(i,i) = 0`, `F(j,i) = -F(i,j)`.
pub(crate) fn field_atom(i: u8, j: u8) -> Expression {
    match i.cmp(&j) {
        std::cmp::Ordering::Equal => Expression::zero(),
        std::cmp::Ordering::Less => signed_atom(CRat::one(), Family::Field, vec![i, j]),
        std::cmp::Ordering::Greater => signed_atom(crat(-1, 1), Family::Field, vec![j, i]),
    }
}
