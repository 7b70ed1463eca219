use crate::exact::Rat;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Boundary {
    #[default]
    Periodic,
    /// Mass leaving the ends is dropped.
    Absorbing,
}

/// Probability grid for the half-half update, kept in exact rational
/// arithmetic so conservation and the binomial closed form are exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffusionState {
    pub probs: Vec<Rat>,
    pub boundary: Boundary,
}

/// Unit mass at `center`.
pub fn delta_grid(size: usize, center: usize, boundary: Boundary) -> DiffusionState {
    assert!(center < size);
    let mut probs = vec![Rat::zero(); size];
    probs[center] = Rat::from_integer(1.into());
    DiffusionState { probs, boundary }
}

/// One application of `P(x, t + tau) = P(x - delta, t)/2 + P(x + delta, t)/2`.
fn step(state: &DiffusionState) -> DiffusionState {
    let n = state.probs.len();
    let half = Rat::new(1.into(), 2.into());
    let mut next = vec![Rat::zero(); n];
    for (x, p) in state.probs.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let share = p * &half;
        match state.boundary {
            Boundary::Periodic => {
                next[(x + 1) % n] += &share;
                next[(x + n - 1) % n] += &share;
            }
            Boundary::Absorbing => {
                if x + 1 < n {
                    next[x + 1] += &share;
                }
                if x > 0 {
                    next[x - 1] += &share;
                }
            }
        }
    }
    DiffusionState {
        probs: next,
        boundary: state.boundary,
    }
}

pub fn diffusion_evolve(state: &DiffusionState, steps: usize) -> DiffusionState {
    let mut s = state.clone();
    for _ in 0..steps {
        s = step(&s);
    }
    s
}

/// Convenience f64 view of an evolved grid.
pub fn diffusion_evolve_f64(state: &DiffusionState, steps: usize) -> Vec<f64> {
    diffusion_evolve(state, steps)
        .probs
        .iter()
        .map(|p| p.to_f64().unwrap_or(f64::NAN))
        .collect()
}

pub fn total_mass(state: &DiffusionState) -> Rat {
    state.probs.iter().sum()
}

/// Mean grid index, exact.
pub fn mean_exact(state: &DiffusionState) -> Rat {
    let mut acc = Rat::zero();
    for (x, p) in state.probs.iter().enumerate() {
        acc += p * Rat::from_integer(x.into());
    }
    acc
}

/// Variance of the grid index, exact.
pub fn variance_exact(state: &DiffusionState) -> Rat {
    let mean = mean_exact(state);
    let mut acc = Rat::zero();
    for (x, p) in state.probs.iter().enumerate() {
        let d = Rat::from_integer(x.into()) - &mean;
        acc += p * (&d * &d);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn two_steps_from_delta() {
        // enumerate the four two-step paths: [1/4, 0, 1/2, 0, 1/4]
        let s = delta_grid(5, 2, Boundary::Periodic);
        let out = diffusion_evolve(&s, 2);
        assert_eq!(
            out.probs,
            vec![rat(1, 4), rat(0, 1), rat(1, 2), rat(0, 1), rat(1, 4)]
        );
    }

    #[test]
    fn uniform_is_a_fixed_point() {
        let probs = vec![rat(1, 8); 8];
        let s = DiffusionState {
            probs: probs.clone(),
            boundary: Boundary::Periodic,
        };
        assert_eq!(diffusion_evolve(&s, 5).probs, probs);
    }

    #[test]
    fn mass_is_conserved_exactly() {
        let s = delta_grid(64, 32, Boundary::Periodic);
        let out = diffusion_evolve(&s, 40);
        assert_eq!(total_mass(&out), rat(1, 1));
    }

    #[test]
    fn absorbing_boundary_leaks() {
        let s = delta_grid(3, 1, Boundary::Absorbing);
        let out = diffusion_evolve(&s, 2);
        assert!(total_mass(&out) < rat(1, 1));
    }

    #[test]
    fn variance_grows_linearly() {
        // variance after t steps of a +-1 walk is exactly t
        let s = delta_grid(201, 100, Boundary::Periodic);
        for t in [1usize, 5, 20] {
            let out = diffusion_evolve(&s, t);
            assert_eq!(variance_exact(&out), Rat::from_integer((t as i64).into()));
        }
    }
}
