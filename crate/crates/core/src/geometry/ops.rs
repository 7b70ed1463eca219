//! Symbolic curvature and connection derivations.

use super::background::{BackgroundSpec, GeometryError};
use crate::ncalg::{commutator, normalize, Atom, CommutationTable, Expression, Family, Word};

/// `F_ij` as a canonically antisymmetric expression.
pub fn field_strength(i: u8, j: u8) -> Expression {
    crate::ncalg::field_atom(i, j)
}

/// `dg(d, j, k)`: spatial gradient of `g_jk` in direction `d`, with the
/// metric pair sorted.
pub fn metric_gradient(d: u8, j: u8, k: u8) -> Expression {
    crate::ncalg::metric_grad_atom(d, j, k, true)
}

/// The formal time derivation of the metric background: `D X = Xd`,
/// `D Xd = Xdd`, `D g = Dg`, constants and `J` powers are fixed, and
/// products follow the Leibniz rule.
pub fn formal_d(e: &Expression) -> Result<Expression, GeometryError> {
    let mut out = Expression::zero();
    for term in e.terms() {
        let atoms = &term.word.atoms;
        for pos in 0..atoms.len() {
            let derived = atom_derivative(&atoms[pos])?;
            let Some(datom) = derived else { continue };
            let mut new_atoms = atoms.clone();
            new_atoms[pos] = datom;
            out.add_term(
                term.coeff.clone(),
                Word {
                    jpower: term.word.jpower,
                    atoms: new_atoms,
                },
            );
        }
    }
    Ok(out)
}

fn atom_derivative(a: &Atom) -> Result<Option<Atom>, GeometryError> {
    let family = match a.family {
        Family::Coordinate => Family::Velocity,
        Family::Velocity => Family::Accel,
        Family::Metric => Family::MetricDot,
        Family::Scalar(_) => return Ok(None),
        _ => return Err(GeometryError::NoDerivative(a.to_string())),
    };
    Ok(Some(Atom {
        family,
        indices: a.indices.clone(),
        primes: a.primes,
    }))
}

/// `R_ab f = [[a, b], f]` normalized under the table. Equal to the
/// commutator of the derivations `grad_k z = [z, k]`.
pub fn curvature_operator(
    a: &Expression,
    b: &Expression,
    f: &Expression,
    table: &CommutationTable,
) -> Result<Expression, GeometryError> {
    Ok(normalize(&a.raw_commutator(b).raw_commutator(f), table)?)
}

/// Minimal-coupling curvature `[P_i - A_i, P_j - A_j]` reduced in the
/// gauge background: `dA(i,j) - dA(j,i) + [A_i, A_j]`, with the bracket
/// collapsing to zero in the abelian case.
pub fn gauge_curvature(
    bg: &BackgroundSpec,
    i: u8,
    j: u8,
) -> Result<Expression, GeometryError> {
    bg.check_index(i)?;
    bg.check_index(j)?;
    let lambda = |n: u8| &Expression::atom(Atom::p(n)) - &Expression::atom(Atom::potential(n));
    Ok(commutator(&lambda(i), &lambda(j), bg.table())?)
}

/// The metric-symmetry identity as computation: `g_ij - g_ji` equals
/// the formal derivative of `[X_i, X_j]`, which the background kills.
#[derive(Clone, Debug)]
pub struct MetricSymmetryReport {
    /// `[X_i, Xd_j] - [X_j, Xd_i]` reduced with no symmetry imposed.
    pub metric_difference: Expression,
    /// `D[X_i, X_j]` with the raw coordinate bracket left unreduced.
    pub coordinate_bracket_rate: Expression,
    /// `metric_difference - coordinate_bracket_rate`, identically zero.
    pub identity_residual: Expression,
    /// The difference after the table also imposes `g_ij = g_ji`.
    pub symmetrized: Expression,
}

pub fn metric_symmetry(bg: &BackgroundSpec, i: u8, j: u8) -> Result<MetricSymmetryReport, GeometryError> {
    bg.check_index(i)?;
    bg.check_index(j)?;
    let asym = CommutationTable::metric(false, false);
    let sym = CommutationTable::metric(true, false);
    let x = |n: u8| Expression::atom(Atom::x(n));
    let xd = |n: u8| Expression::atom(Atom::velocity(n));

    let difference = &commutator(&x(i), &xd(j), &asym)? - &commutator(&x(j), &xd(i), &asym)?;
    // D of the raw bracket, then reduced: the same quantity by the identity
    let rate = normalize(&formal_d(&x(i).raw_commutator(&x(j)))?, &asym)?;
    let residual = normalize(&(&difference - &rate), &asym)?;
    // the same brackets with g_ij = g_ji imposed by the table
    let symmetrized = &commutator(&x(i), &xd(j), &sym)? - &commutator(&x(j), &xd(i), &sym)?;
    Ok(MetricSymmetryReport {
        metric_difference: difference,
        coordinate_bracket_rate: rate,
        identity_residual: residual,
        symmetrized,
    })
}

/// The nested-commutator route to the connection:
/// `[X_i, [X_j, D^2 X_k]]` reduced in the metric background. Equals
/// `dg(i,j,k) - dg(k,i,j) + dg(j,i,k)`, twice the connection
/// coefficient.
pub fn levi_civita_nested(
    bg: &BackgroundSpec,
    i: u8,
    j: u8,
    k: u8,
) -> Result<Expression, GeometryError> {
    bg.check_index(i)?;
    bg.check_index(j)?;
    bg.check_index(k)?;
    let xi = Expression::atom(Atom::x(i));
    let xj = Expression::atom(Atom::x(j));
    let d2xk = Expression::atom(Atom::accel(k));
    let inner = commutator(&xj, &d2xk, bg.table())?;
    Ok(commutator(&xi, &inner, bg.table())?)
}

/// The index-free route: substitute `[Y, D^2 Z] = Dg_YZ - [DY, DZ]`,
/// reduce `[X, Dg_YZ]` by the gradient rule and expand `[X, [DY, DZ]]`
/// by the Jacobi identity. Never touches the `[X, D^2 X]` or `[X, F]`
/// rules the nested route relies on.
pub fn levi_civita_index_free(
    bg: &BackgroundSpec,
    x: u8,
    y: u8,
    z: u8,
) -> Result<Expression, GeometryError> {
    bg.check_index(x)?;
    bg.check_index(y)?;
    bg.check_index(z)?;
    let t = bg.table();
    let coord = |n: u8| Expression::atom(Atom::x(n));
    let vel = |n: u8| Expression::atom(Atom::velocity(n));

    // Dg_YZ via the formal derivation of the metric atom
    let g_yz = commutator(&coord(y), &vel(z), t)?;
    let dg_yz = normalize(&formal_d(&g_yz)?, t)?;
    let x_dg = commutator(&coord(x), &dg_yz, t)?;

    // [X, [DY, DZ]] = [[X, DY], DZ] + [DY, [X, DZ]]
    let x_dy = commutator(&coord(x), &vel(y), t)?;
    let x_dz = commutator(&coord(x), &vel(z), t)?;
    let jacobi = &commutator(&x_dy, &vel(z), t)? + &commutator(&vel(y), &x_dz, t)?;

    Ok(normalize(&(&x_dg - &jacobi), t)?)
}

/// The cyclic sum `[[Xd_j, Xd_k], Xd_i] + [[Xd_k, Xd_i], Xd_j] +
/// [[Xd_i, Xd_j], Xd_k]`, i.e. the gradient cyclic sum of the field
/// strength. Identically zero by the Jacobi identity, under any table.
pub fn bianchi_cyclic(
    i: u8,
    j: u8,
    k: u8,
    table: &CommutationTable,
) -> Result<Expression, GeometryError> {
    let vel = |n: u8| Expression::atom(Atom::velocity(n));
    jacobi_cyclic(&vel(i), &vel(j), &vel(k), table)
}

/// `[[b, c], a] + [[c, a], b] + [[a, b], c]` normalized: the Jacobi
/// identity, so exactly zero for any expressions and any table.
pub fn jacobi_cyclic(
    a: &Expression,
    b: &Expression,
    c: &Expression,
    table: &CommutationTable,
) -> Result<Expression, GeometryError> {
    let sum = &(&b.raw_commutator(c).raw_commutator(a)
        + &c.raw_commutator(a).raw_commutator(b))
        + &a.raw_commutator(b).raw_commutator(c);
    Ok(normalize(&sum, table)?)
}

/// The Lorentz-force consistency argument in the flat kinematic
/// background (`[X_i, Xd_j] = delta_ij`).
#[derive(Clone, Debug)]
pub struct LorentzForceReport {
    /// `[X_i, Xdd_j]` with the force ansatz substituted: `F_ji`.
    pub coordinate_accel_bracket: Expression,
    /// `-F_ji = F_ij`, forced by `D[X_i, Xd_j] = 0`.
    pub required_velocity_bracket: Expression,
    /// Whether the requirement matches the antisymmetric field atom.
    pub consistent: bool,
}

/// Substitutes `Xdd_j = E_j + sum_k F_jk Xd_k` and computes
/// `[X_i, Xdd_j]`; the e-only case (`include_field = false`) returns
/// zero.
pub fn lorentz_force_consistency(
    bg: &BackgroundSpec,
    i: u8,
    j: u8,
    include_field: bool,
) -> Result<LorentzForceReport, GeometryError> {
    bg.check_index(i)?;
    bg.check_index(j)?;
    let table = CommutationTable::flat_kinematic();
    let mut ansatz = Expression::atom(Atom::new(Family::Force, vec![j]));
    if include_field {
        for k in 1..=bg.dimension {
            ansatz = &ansatz
                + &field_strength(j, k).raw_mul(&Expression::atom(Atom::velocity(k)));
        }
    }
    let bracket = commutator(&Expression::atom(Atom::x(i)), &ansatz, &table)?;
    let required = -&bracket;
    let consistent = required == field_strength(i, j);
    Ok(LorentzForceReport {
        coordinate_accel_bracket: bracket,
        required_velocity_bracket: required,
        consistent,
    })
}

/// Twice the first-kind connection coefficient as the nested route
/// must produce it: `dg(i,j,k) - dg(k,i,j) + dg(j,i,k)`.
pub fn levi_civita_expected(i: u8, j: u8, k: u8) -> Expression {
    &(&metric_gradient(i, j, k) - &metric_gradient(k, i, j)) + &metric_gradient(j, i, k)
}
