use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PlanckError {
    #[error("physical constants must be positive and finite")]
    NonPositive,
}

/// Planck mass, length and time for given constants, plus the identity
/// residuals the construction is supposed to satisfy.
#[derive(Clone, Copy, Debug)]
pub struct PlanckReport {
    pub mass: f64,
    pub length: f64,
    pub time: f64,
    /// `|L^2/T - hbar/M| / (hbar/M)`.
    pub ratio_residual: f64,
    /// Half the Planck mass: the mass whose Schwarzschild radius equals
    /// its Compton radius.
    pub jones_mass: f64,
}

/// `M = sqrt(hbar c / G)`, `L = hbar/(M c)`, `T = hbar/(M c^2)`.
pub fn planck_numbers(hbar: f64, c: f64, g: f64) -> Result<PlanckReport, PlanckError> {
    if !(hbar > 0.0 && c > 0.0 && g > 0.0)
        || !(hbar.is_finite() && c.is_finite() && g.is_finite())
    {
        return Err(PlanckError::NonPositive);
    }
    let mass = (hbar * c / g).sqrt();
    let length = hbar / (mass * c);
    let time = hbar / (mass * c * c);
    let target = hbar / mass;
    let ratio_residual = ((length * length / time) - target).abs() / target;
    Ok(PlanckReport {
        mass,
        length,
        time,
        ratio_residual,
        jones_mass: mass / 2.0,
    })
}

/// Relative residual of the Compton identity `hbar/m = L_C^2 / T_C`
/// with `L_C = hbar/(m c)`, `T_C = hbar/(m c^2)`. Holds for any mass.
pub fn compton_residual(hbar: f64, c: f64, m: f64) -> f64 {
    let lc = hbar / (m * c);
    let tc = hbar / (m * c * c);
    let target = hbar / m;
    ((lc * lc / tc) - target).abs() / target
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_units() {
        let r = planck_numbers(1.0, 1.0, 1.0).unwrap();
        assert_eq!((r.mass, r.length, r.time), (1.0, 1.0, 1.0));
        assert_eq!(r.ratio_residual, 0.0);
        assert_eq!(r.jones_mass, 0.5);
    }

    #[test]
    fn si_constants() {
        let r = planck_numbers(1.054_571_817e-34, 2.997_924_58e8, 6.674_30e-11).unwrap();
        assert!(r.ratio_residual < 1e-12);
        // textbook orders of magnitude
        assert!((r.mass - 2.176e-8).abs() / 2.176e-8 < 1e-3);
        assert!((r.length - 1.616e-35).abs() / 1.616e-35 < 1e-3);
        assert!((r.time - 5.391e-44).abs() / 5.391e-44 < 1e-3);
        assert_eq!(r.jones_mass, r.mass / 2.0);
    }

    #[test]
    fn compton_identity_for_any_mass() {
        for m in [9.109e-31, 1.0, 5.5e3] {
            assert!(compton_residual(1.054571817e-34, 2.99792458e8, m) < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            planck_numbers(0.0, 1.0, 1.0),
            Err(PlanckError::NonPositive)
        ));
        assert!(matches!(
            planck_numbers(1.0, -1.0, 1.0),
            Err(PlanckError::NonPositive)
        ));
    }
}
