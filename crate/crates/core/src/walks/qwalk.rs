use num_complex::Complex64;

/// Complex amplitude field on a periodic 1-d grid.
///
/// The update is the complex three-point stencil
/// `psi(x, t+tau) = (i/2) psi(x-dx) + (1-i) psi(x) + (i/2) psi(x+dx)`,
/// the explicit discretization of `d psi/dt = (i dx^2 / 2 tau) psi_xx`.
/// The stencil is not unitary; callers should watch [`ComplexField1D::norm_l2`]
/// for drift instead of assuming conservation.
#[derive(Clone, Debug)]
pub struct ComplexField1D {
    pub values: Vec<Complex64>,
    /// Grid spacing `dx` (the walk step).
    pub dx: f64,
    /// Time step `tau`.
    pub tau: f64,
    /// Steps taken so far.
    pub time_steps: u64,
}

impl ComplexField1D {
    pub fn constant(n: usize, value: Complex64, dx: f64, tau: f64) -> Self {
        ComplexField1D {
            values: vec![value; n],
            dx,
            tau,
            time_steps: 0,
        }
    }

    pub fn delta(n: usize, center: usize, dx: f64, tau: f64) -> Self {
        let mut f = ComplexField1D::constant(n, Complex64::ZERO, dx, tau);
        f.values[center] = Complex64::ONE;
        f
    }

    /// Discretized Gaussian packet `exp(-(x - x0)^2 / (2 sigma^2))`,
    /// normalized to unit L2 norm.
    pub fn gaussian(n: usize, x0: f64, sigma: f64, dx: f64, tau: f64) -> Self {
        let mut values: Vec<Complex64> = (0..n)
            .map(|ix| {
                let x = ix as f64 * dx;
                Complex64::new((-((x - x0) * (x - x0)) / (2.0 * sigma * sigma)).exp(), 0.0)
            })
            .collect();
        let norm = (values.iter().map(|v| v.norm_sqr()).sum::<f64>() * dx).sqrt();
        for v in &mut values {
            *v /= norm;
        }
        ComplexField1D {
            values,
            dx,
            tau,
            time_steps: 0,
        }
    }

    /// `sqrt(sum |psi|^2 dx)`.
    pub fn norm_l2(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.dx).sqrt()
    }

    pub fn probability_density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }
}

/// One stencil application (periodic).
pub fn quantum_walk_step(f: &ComplexField1D) -> ComplexField1D {
    let n = f.values.len();
    let hop = Complex64::new(0.0, 0.5);
    let stay = Complex64::new(1.0, -1.0);
    let mut values = vec![Complex64::ZERO; n];
    for x in 0..n {
        let left = f.values[(x + n - 1) % n];
        let right = f.values[(x + 1) % n];
        values[x] = hop * left + stay * f.values[x] + hop * right;
    }
    ComplexField1D {
        values,
        dx: f.dx,
        tau: f.tau,
        time_steps: f.time_steps + 1,
    }
}

pub fn quantum_walk_evolve(f: &ComplexField1D, steps: usize) -> ComplexField1D {
    let mut state = f.clone();
    for _ in 0..steps {
        state = quantum_walk_step(&state);
    }
    state
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stencil_sums_to_one_so_constants_are_fixed() {
        let f = ComplexField1D::constant(16, Complex64::new(0.3, -0.7), 1.0, 1.0);
        let g = quantum_walk_evolve(&f, 3);
        for v in &g.values {
            assert!((v - Complex64::new(0.3, -0.7)).norm() < 1e-14);
        }
    }

    #[test]
    fn delta_spike_one_step() {
        let f = ComplexField1D::delta(7, 3, 1.0, 1.0);
        let g = quantum_walk_step(&f);
        assert!((g.values[2] - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        assert!((g.values[3] - Complex64::new(1.0, -1.0)).norm() < 1e-15);
        assert!((g.values[4] - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        assert_eq!(g.values[0], Complex64::ZERO);
    }

    #[test]
    fn update_commutes_with_grid_shift() {
        let f = ComplexField1D {
            values: (0..12)
                .map(|i| Complex64::new((i as f64).sin(), (i as f64 * 0.7).cos()))
                .collect(),
            dx: 1.0,
            tau: 1.0,
            time_steps: 0,
        };
        let shift = |v: &[Complex64]| -> Vec<Complex64> {
            let n = v.len();
            (0..n).map(|i| v[(i + 1) % n]).collect()
        };
        let stepped_then_shifted = shift(&quantum_walk_step(&f).values);
        let shifted = ComplexField1D {
            values: shift(&f.values),
            ..f.clone()
        };
        let shifted_then_stepped = quantum_walk_step(&shifted).values;
        for (a, b) in stepped_then_shifted.iter().zip(&shifted_then_stepped) {
            assert!((a - b).norm() < 1e-14);
        }
    }
}
