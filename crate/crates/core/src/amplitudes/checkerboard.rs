use crate::exact::GaussInt;
use thiserror::Error;

/// Which register a path occupies: the type of its most recent move.
/// `Right` moves increment the lightcone coordinate `a`, `Left` moves
/// increment `b`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Left,
    Right,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CheckerboardError {
    #[error("horizon {horizon} exceeds the evolve cap {cap}")]
    HorizonCap { horizon: usize, cap: usize },
    #[error("target (a={a}, b={b}) exceeds the enumeration cap {cap}")]
    EnumerationCap { a: usize, b: usize, cap: usize },
}

/// Amplitudes stay within `i64` up to this horizon (entries are
/// binomial sums bounded by `2^(a+b)`).
pub const EVOLVE_CAP: usize = 48;
/// Path enumeration is exponential; keep `a + b` at desk scale.
pub const ORACLE_CAP: usize = 22;

/// Lightcone lattice of left/right-moving amplitudes on
/// `a, b >= 0`, `a + b <= horizon`, filled by the corner recursion
/// `psi_L(a, b+1) = psi_L(a, b) + i psi_R(a, b)` and its mirror
/// `psi_R(a+1, b) = psi_R(a, b) + i psi_L(a, b)`.
#[derive(Clone, Debug)]
pub struct LightconeLattice {
    pub horizon: usize,
    pub source: Direction,
    psi_l: Vec<GaussInt>,
    psi_r: Vec<GaussInt>,
}

fn tri_index(a: usize, b: usize) -> usize {
    let n = a + b;
    n * (n + 1) / 2 + b
}

impl LightconeLattice {
    pub fn psi_l(&self, a: usize, b: usize) -> GaussInt {
        self.psi_l[tri_index(a, b)]
    }

    pub fn psi_r(&self, a: usize, b: usize) -> GaussInt {
        self.psi_r[tri_index(a, b)]
    }

    /// Iterate all `(a, b)` with `a + b <= horizon`.
    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let horizon = self.horizon;
        (0..=horizon).flat_map(move |n| (0..=n).map(move |b| (n - b, b)))
    }
}

/// Fill the lattice from a unit source at the origin in the given
/// register, in exact Gaussian-integer arithmetic.
pub fn checkerboard_evolve(
    source: Direction,
    horizon: usize,
) -> Result<LightconeLattice, CheckerboardError> {
    if horizon > EVOLVE_CAP {
        return Err(CheckerboardError::HorizonCap {
            horizon,
            cap: EVOLVE_CAP,
        });
    }
    let size = (horizon + 1) * (horizon + 2) / 2;
    let mut psi_l = vec![GaussInt::ZERO; size];
    let mut psi_r = vec![GaussInt::ZERO; size];
    match source {
        Direction::Left => psi_l[tri_index(0, 0)] = GaussInt::ONE,
        Direction::Right => psi_r[tri_index(0, 0)] = GaussInt::ONE,
    }
    for n in 1..=horizon {
        for b in 0..=n {
            let a = n - b;
            if b >= 1 {
                let prev = tri_index(a, b - 1);
                psi_l[tri_index(a, b)] = psi_l[prev] + GaussInt::I * psi_r[prev];
            }
            if a >= 1 {
                let prev = tri_index(a - 1, b);
                psi_r[tri_index(a, b)] = psi_r[prev] + GaussInt::I * psi_l[prev];
            }
        }
    }
    Ok(LightconeLattice {
        horizon,
        source,
        psi_l,
        psi_r,
    })
}

/// Path-sum oracle: enumerate every monotone lightcone path from the
/// origin to `(a, b)` whose final move matches `entry`, weight each by
/// `i^corners` (counting a turn away from the source direction at the
/// first move), and sum. Independent of the recursion above.
pub fn checkerboard_path_oracle(
    source: Direction,
    a: usize,
    b: usize,
    entry: Direction,
) -> Result<GaussInt, CheckerboardError> {
    if a + b > ORACLE_CAP {
        return Err(CheckerboardError::EnumerationCap {
            a,
            b,
            cap: ORACLE_CAP,
        });
    }
    if a + b == 0 {
        // the source itself: amplitude 1 in its own register
        return Ok(if entry == source {
            GaussInt::ONE
        } else {
            GaussInt::ZERO
        });
    }
    let mut total = GaussInt::ZERO;
    // moves encoded as bits: 1 = Right (increments a), 0 = Left
    let n = a + b;
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != a {
            continue;
        }
        let move_at = |idx: usize| -> Direction {
            if mask >> idx & 1 == 1 {
                Direction::Right
            } else {
                Direction::Left
            }
        };
        if move_at(n - 1) != entry {
            continue;
        }
        let mut corners = 0u32;
        if move_at(0) != source {
            corners += 1;
        }
        for idx in 1..n {
            if move_at(idx) != move_at(idx - 1) {
                corners += 1;
            }
        }
        total += GaussInt::i_pow(corners);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn left_source_goes_straight_left() {
        let lat = checkerboard_evolve(Direction::Left, 4).unwrap();
        assert_eq!(lat.psi_l(0, 1), GaussInt::ONE);
        assert_eq!(lat.psi_l(0, 4), GaussInt::ONE);
        assert_eq!(lat.psi_r(1, 0), GaussInt::I);
    }

    #[test]
    fn right_source_turns_with_weight_i() {
        let lat = checkerboard_evolve(Direction::Right, 4).unwrap();
        assert_eq!(lat.psi_l(0, 1), GaussInt::I);
        assert_eq!(lat.psi_r(1, 0), GaussInt::ONE);
    }

    #[test]
    fn single_moves_against_oracle() {
        // adjacent to the source, no turn: 1; one turn: i
        assert_eq!(
            checkerboard_path_oracle(Direction::Right, 1, 0, Direction::Right).unwrap(),
            GaussInt::ONE
        );
        assert_eq!(
            checkerboard_path_oracle(Direction::Right, 0, 1, Direction::Left).unwrap(),
            GaussInt::I
        );
    }

    #[test]
    fn recursion_matches_path_sum_at_2_2() {
        let lat = checkerboard_evolve(Direction::Right, 4).unwrap();
        for entry in [Direction::Left, Direction::Right] {
            let oracle = checkerboard_path_oracle(Direction::Right, 2, 2, entry).unwrap();
            let grid = match entry {
                Direction::Left => lat.psi_l(2, 2),
                Direction::Right => lat.psi_r(2, 2),
            };
            assert_eq!(grid, oracle);
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            checkerboard_evolve(Direction::Right, EVOLVE_CAP + 1),
            Err(CheckerboardError::HorizonCap { .. })
        ));
        assert!(matches!(
            checkerboard_path_oracle(Direction::Right, 20, 20, Direction::Left),
            Err(CheckerboardError::EnumerationCap { .. })
        ));
    }

    #[test]
    fn wavefront_counts() {
        // straight paths keep amplitude 1 along both axes
        let lat = checkerboard_evolve(Direction::Right, 8).unwrap();
        for a in 1..=8 {
            assert_eq!(lat.psi_r(a, 0), GaussInt::ONE);
        }
    }
}
