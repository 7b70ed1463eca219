use thiserror::Error;

/// Parameters for the delay recursion
/// `y[t+n+1] = (k - y[t+n] y[t]) / (y[t+1] - 2 y[t])`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChaosConfig {
    pub k: f64,
    /// Delay order `n >= 1`.
    pub delay: usize,
    /// Initial window `y_0 .. y_n` (length `delay + 1`).
    pub initial: Vec<f64>,
    pub max_steps: usize,
    /// Minimum |denominator| before the orbit is declared singular.
    pub guard: f64,
    /// |y| beyond this is declared unbounded.
    pub overflow: f64,
}

impl ChaosConfig {
    pub fn new(k: f64, delay: usize, initial: Vec<f64>, max_steps: usize) -> Self {
        ChaosConfig {
            k,
            delay,
            initial,
            max_steps,
            guard: 1e-12,
            overflow: 1e12,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ChaosError {
    #[error("need {expected} initial values for delay order {delay}, got {got}")]
    BadWindow {
        delay: usize,
        expected: usize,
        got: usize,
    },
    #[error("singular start: first denominator |y1 - 2 y0| = {denom:.3e} below guard")]
    SingularStart { denom: f64 },
    #[error("guard must be positive")]
    BadGuard,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub enum OrbitClass {
    Periodic { period: usize },
    Bounded,
    Unbounded,
    /// Denominator fell under the guard at this emission index.
    Singular { at: usize },
}

#[derive(Clone, Debug)]
pub struct ChaosOrbit {
    /// Initial window followed by every emitted value.
    pub values: Vec<f64>,
    pub class: OrbitClass,
    /// Max of |y_new (y[t+1] - 2 y[t]) - (k - y[t+n] y[t])| over emitted
    /// steps, scaled by max(1, y_new^2).
    pub max_residual: f64,
}

/// Iterate the recursion, classify the orbit, and verify the defining
/// equation at every emitted step.
pub fn chaos_orbit(c: &ChaosConfig) -> Result<ChaosOrbit, ChaosError> {
    if c.guard <= 0.0 {
        return Err(ChaosError::BadGuard);
    }
    let n = c.delay.max(1);
    if c.initial.len() != n + 1 {
        return Err(ChaosError::BadWindow {
            delay: n,
            expected: n + 1,
            got: c.initial.len(),
        });
    }
    let first_denom = c.initial[1] - 2.0 * c.initial[0];
    if first_denom.abs() < c.guard {
        return Err(ChaosError::SingularStart { denom: first_denom });
    }

    let mut values = c.initial.clone();
    let mut class = OrbitClass::Bounded;
    let mut max_residual = 0.0f64;
    for t in 0..c.max_steps {
        let denom = values[t + 1] - 2.0 * values[t];
        if denom.abs() < c.guard {
            class = OrbitClass::Singular { at: t };
            break;
        }
        let numer = c.k - values[t + n] * values[t];
        let y = numer / denom;
        let residual = (y * denom - numer).abs() / 1.0f64.max(y * y);
        max_residual = max_residual.max(residual);
        values.push(y);
        if !y.is_finite() || y.abs() > c.overflow {
            class = OrbitClass::Unbounded;
            break;
        }
    }
    if class == OrbitClass::Bounded {
        if let Some(period) = detect_period(&values, n) {
            class = OrbitClass::Periodic { period };
        }
    }
    Ok(ChaosOrbit {
        values,
        class,
        max_residual,
    })
}

/// Smallest period that matches the tail of the orbit to relative
/// tolerance 1e-6, if any.
fn detect_period(values: &[f64], delay: usize) -> Option<usize> {
    let tail_len = values.len().min(240).max(4 * (delay + 1));
    if values.len() < tail_len {
        return None;
    }
    let tail = &values[values.len() - tail_len..];
    'candidates: for p in 1..=tail_len / 3 {
        for t in 0..tail_len - p {
            let scale = 1.0f64.max(tail[t].abs());
            if (tail[t] - tail[t + p]).abs() > 1e-6 * scale {
                continue 'candidates;
            }
        }
        return Some(p);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_emission_matches_hand_computation() {
        // n = 1, y0 = 1, y1 = 3, k = 1: y2 = (1 - 3)/(3 - 2) = -2
        let c = ChaosConfig::new(1.0, 1, vec![1.0, 3.0], 1);
        let orbit = chaos_orbit(&c).unwrap();
        assert_eq!(orbit.values, vec![1.0, 3.0, -2.0]);
        assert!(orbit.max_residual < 1e-15);
    }

    #[test]
    fn singular_start_detected() {
        let c = ChaosConfig::new(1.0, 1, vec![1.0, 2.0], 10);
        assert!(matches!(
            chaos_orbit(&c),
            Err(ChaosError::SingularStart { .. })
        ));
    }

    #[test]
    fn residuals_hold_along_longer_orbits() {
        let c = ChaosConfig::new(0.7, 1, vec![0.3, 1.1], 2000);
        let orbit = chaos_orbit(&c).unwrap();
        assert!(orbit.max_residual < 1e-9);
    }

    #[test]
    fn higher_delay_orders_run() {
        let c = ChaosConfig::new(1.3, 2, vec![0.4, 1.2, -0.8], 500);
        let orbit = chaos_orbit(&c).unwrap();
        assert!(orbit.values.len() >= 4);
        assert!(orbit.max_residual < 1e-9);
    }

    #[test]
    fn window_size_is_checked() {
        let c = ChaosConfig::new(1.0, 2, vec![1.0, 2.0], 10);
        assert!(matches!(chaos_orbit(&c), Err(ChaosError::BadWindow { .. })));
    }

    #[test]
    fn constant_orbit_is_periodic() {
        // k = 0 with a constant start is a fixed point of the recursion
        let c = ChaosConfig::new(0.0, 1, vec![1.0, 1.0], 600);
        let orbit = chaos_orbit(&c).unwrap();
        assert_eq!(orbit.class, OrbitClass::Periodic { period: 1 });
        assert!(orbit.values.iter().all(|&y| y == 1.0));
    }

    #[test]
    fn overflow_classifies_unbounded() {
        let mut c = ChaosConfig::new(1.0, 1, vec![1.0, 3.0], 50);
        c.overflow = 1.5; // y2 = -2 already exceeds it
        let orbit = chaos_orbit(&c).unwrap();
        assert_eq!(orbit.class, OrbitClass::Unbounded);
        assert_eq!(orbit.values.len(), 3);
    }

    #[test]
    fn interior_singularity_halts() {
        // drive the denominator under the guard mid-orbit
        let mut c = ChaosConfig::new(2.0, 1, vec![1.0, 2.0 + 1e-13], 50);
        c.guard = 1e-9;
        match chaos_orbit(&c) {
            Err(ChaosError::SingularStart { .. }) => {}
            Ok(orbit) => assert!(matches!(orbit.class, OrbitClass::Singular { .. })),
            Err(other) => panic!("unexpected {other}"),
        }
    }
}
