use std::cmp::Ordering;
use std::fmt;

/// Role of an atom in the algebra.
///
/// Families are the unit of commutation rules: a rule matches a pair of
/// families and then inspects indices and primes. `Scalar` atoms are
/// central (they commute with everything) and are fixed by the time
/// shift; `Symbol` atoms are free non-commuting generators used mostly
/// in randomized identity tests.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// Coordinate `X`.
    Coordinate,
    /// Velocity `Xd` (stands for the derivative `DX` in metric backgrounds).
    Velocity,
    /// Acceleration `Xdd` (stands for `D^2 X`).
    Accel,
    /// Metric coefficient `g_ij`.
    Metric,
    /// Spatial gradient of the metric `dg_ijk` (derivative direction first).
    MetricGrad,
    /// Time derivative of the metric `Dg_ij`.
    MetricDot,
    /// Field strength `F_ij`, antisymmetric.
    Field,
    /// Gradient of a potential `dA_ij` = derivative `i` of potential `j`.
    PotentialGrad,
    /// Gauge potential `A_i`.
    Potential,
    /// Momentum `P_i`.
    Momentum,
    /// Force field component `E_i` (Lorentz-force ansatz).
    Force,
    /// Named central constant (`c`, `k`), fixed by the time shift.
    Scalar(char),
    /// Generic non-commuting symbol (`u`, `v`, `w`, `y`, `z`, `s`).
    Symbol(char),
}

impl Family {
    /// Text name used by the parser and printer.
    pub fn name(&self) -> String {
        match self {
            Family::Coordinate => "X".into(),
            Family::Velocity => "Xd".into(),
            Family::Accel => "Xdd".into(),
            Family::Metric => "g".into(),
            Family::MetricGrad => "dg".into(),
            Family::MetricDot => "Dg".into(),
            Family::Field => "F".into(),
            Family::PotentialGrad => "dA".into(),
            Family::Potential => "A".into(),
            Family::Momentum => "P".into(),
            Family::Force => "E".into(),
            Family::Scalar(c) | Family::Symbol(c) => c.to_string(),
        }
    }

    /// Accepted index counts for the family.
    pub fn index_arity(&self) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::Metric | Family::MetricDot | Family::Field | Family::PotentialGrad => 2..=2,
            Family::MetricGrad => 3..=3,
            _ => 0..=1,
        }
    }

    /// Central constants commute with everything and satisfy `c' = c`.
    pub fn is_constant(&self) -> bool {
        matches!(self, Family::Scalar(_))
    }

    /// Rank in the fixed normal-ordering. Lower ranks sort left.
    ///
    /// Constants first (they are pushed out of the way), then
    /// position-like atoms, field functions, velocities and momenta.
    /// This single order makes every shipped rule set terminate.
    fn rank(&self) -> u8 {
        match self {
            Family::Scalar(_) => 0,
            Family::Coordinate => 1,
            Family::Metric => 2,
            Family::MetricGrad => 3,
            Family::MetricDot => 4,
            Family::Field => 5,
            Family::PotentialGrad => 6,
            Family::Potential => 7,
            Family::Velocity => 8,
            Family::Accel => 9,
            Family::Momentum => 10,
            Family::Force => 11,
            Family::Symbol(_) => 12,
        }
    }

    fn tiebreak(&self) -> char {
        match self {
            Family::Scalar(c) | Family::Symbol(c) => *c,
            _ => '\0',
        }
    }
}

impl PartialOrd for Family {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Family {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rank(), self.tiebreak()).cmp(&(other.rank(), other.tiebreak()))
    }
}

/// A single generator: family, small integer indices, and a prime count
/// (number of time-shift applications).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Atom {
    pub family: Family,
    pub indices: Vec<u8>,
    pub primes: u32,
}

impl Atom {
    pub fn new(family: Family, indices: Vec<u8>) -> Self {
        debug_assert!(
            family.index_arity().contains(&indices.len()),
            "bad index count for {}",
            family.name()
        );
        Atom {
            family,
            indices,
            primes: 0,
        }
    }

    /// Coordinate `X` with one index.
    pub fn x(i: u8) -> Self {
        Atom::new(Family::Coordinate, vec![i])
    }

    /// Index-free coordinate `X` (one-variable contexts).
    pub fn x0() -> Self {
        Atom::new(Family::Coordinate, vec![])
    }

    pub fn p(i: u8) -> Self {
        Atom::new(Family::Momentum, vec![i])
    }

    pub fn potential(i: u8) -> Self {
        Atom::new(Family::Potential, vec![i])
    }

    pub fn velocity(i: u8) -> Self {
        Atom::new(Family::Velocity, vec![i])
    }

    pub fn accel(i: u8) -> Self {
        Atom::new(Family::Accel, vec![i])
    }

    pub fn metric(i: u8, j: u8) -> Self {
        Atom::new(Family::Metric, vec![i, j])
    }

    pub fn symbol(c: char) -> Self {
        Atom::new(Family::Symbol(c), vec![])
    }

    pub fn scalar(c: char) -> Self {
        Atom::new(Family::Scalar(c), vec![])
    }

    /// The atom advanced `n` time steps. Constants are fixed.
    pub fn shifted(&self, n: u32) -> Self {
        if self.family.is_constant() {
            self.clone()
        } else {
            Atom {
                family: self.family,
                indices: self.indices.clone(),
                primes: self.primes + n,
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        for ix in &self.indices {
            write!(f, "{ix}")?;
        }
        for _ in 0..self.primes {
            write!(f, "'")?;
        }
        Ok(())
    }
}
