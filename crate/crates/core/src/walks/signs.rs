use super::rng::walker_rng;
use rand::Rng;
use thiserror::Error;

/// Time series of sign vectors `eps_i^t in {-1, +1}^3` with the walk
/// constant `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SignSeries {
    pub eps: Vec<[i8; 3]>,
    pub k: f64,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SignError {
    #[error("entries must be +1 or -1 (row {row})")]
    BadEntry { row: usize },
    #[error("need at least two time steps")]
    TooShort,
}

impl SignSeries {
    pub fn random(steps: usize, seed: u64, k: f64) -> Self {
        let mut rng = walker_rng(seed, 0x5159);
        let eps = (0..steps)
            .map(|_| {
                [
                    if rng.random::<bool>() { 1 } else { -1 },
                    if rng.random::<bool>() { 1 } else { -1 },
                    if rng.random::<bool>() { 1 } else { -1 },
                ]
            })
            .collect();
        SignSeries { eps, k }
    }

    pub fn from_rows(rows: Vec<[i8; 3]>, k: f64) -> Result<Self, SignError> {
        if rows.len() < 2 {
            return Err(SignError::TooShort);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.iter().any(|&e| e != 1 && e != -1) {
                return Err(SignError::BadEntry { row });
            }
        }
        Ok(SignSeries { eps: rows, k })
    }
}

/// Exact integer cross product.
pub fn cross_product_i64(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

#[derive(Clone, Debug)]
pub struct SignFieldResult {
    /// `B^t = eps^{t+1} x eps^t`, one entry per consecutive pair.
    pub b: Vec<[i64; 3]>,
    /// The walk `X^{t+1} = X^t + eps^t sqrt(k)`, including the origin.
    pub walk: Vec<[f64; 3]>,
}

/// The sign-vector field model: the magnetic analog is the cross
/// product of the sign vector with its own next time step, and each
/// coordinate performs a `+-sqrt(k)` walk so `DX_i = J eps_i sqrt(k)`.
pub fn sign_field_series(s: &SignSeries) -> SignFieldResult {
    let step = s.k.sqrt();
    let b = s
        .eps
        .windows(2)
        .map(|w| {
            let cur = [w[0][0] as i64, w[0][1] as i64, w[0][2] as i64];
            let next = [w[1][0] as i64, w[1][1] as i64, w[1][2] as i64];
            cross_product_i64(next, cur)
        })
        .collect();
    let mut walk = Vec::with_capacity(s.eps.len() + 1);
    let mut x = [0.0f64; 3];
    walk.push(x);
    for eps in &s.eps {
        for (xi, &e) in x.iter_mut().zip(eps) {
            *xi += e as f64 * step;
        }
        walk.push(x);
    }
    SignFieldResult { b, walk }
}

/// Feasibility of the commuting-scalar system
/// `(X'-X)^2 = k`, `(Y'-Y)^2 = k`, `(X'-X)(Y'-Y) = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ScalarFeasibility {
    /// Only `k = 0` admits commuting scalar solutions.
    Feasible,
    /// `k < 0`: no real step satisfies `(X'-X)^2 = k`.
    NoRealStep,
    /// `k > 0`: both steps are nonzero, so their product cannot vanish.
    OrthogonalityObstruction,
}

pub fn commuting_scalar_feasibility(k: f64) -> ScalarFeasibility {
    if k == 0.0 {
        ScalarFeasibility::Feasible
    } else if k < 0.0 {
        ScalarFeasibility::NoRealStep
    } else {
        ScalarFeasibility::OrthogonalityObstruction
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_signs_give_zero_field() {
        let s = SignSeries::from_rows(vec![[1, 1, 1], [1, 1, 1]], 1.0).unwrap();
        let r = sign_field_series(&s);
        assert_eq!(r.b, vec![[0, 0, 0]]);
    }

    #[test]
    fn single_flip_cross_product() {
        // eps = (1,1,1), eps' = (1,-1,1): eps' x eps = (-2, 0, 2)
        let s = SignSeries::from_rows(vec![[1, 1, 1], [1, -1, 1]], 1.0).unwrap();
        let r = sign_field_series(&s);
        assert_eq!(r.b, vec![[-2, 0, 2]]);
    }

    #[test]
    fn components_are_zero_or_two_exhaustively() {
        // all 64 ordered pairs of sign vectors
        let vecs: Vec<[i64; 3]> = (0..8)
            .map(|m| {
                [
                    if m & 1 == 0 { 1 } else { -1 },
                    if m & 2 == 0 { 1 } else { -1 },
                    if m & 4 == 0 { 1 } else { -1 },
                ]
            })
            .collect();
        for a in &vecs {
            for b in &vecs {
                let c = cross_product_i64(*b, *a);
                for comp in c {
                    assert!(comp.abs() == 0 || comp.abs() == 2, "component {comp}");
                }
            }
        }
    }

    #[test]
    fn walk_steps_have_magnitude_sqrt_k() {
        let s = SignSeries::random(20, 9, 4.0);
        let r = sign_field_series(&s);
        for pair in r.walk.windows(2) {
            for (after, before) in pair[1].iter().zip(&pair[0]) {
                assert!(((after - before).abs() - 2.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn scalar_impossibility() {
        assert_eq!(commuting_scalar_feasibility(0.0), ScalarFeasibility::Feasible);
        assert_eq!(
            commuting_scalar_feasibility(-1.0),
            ScalarFeasibility::NoRealStep
        );
        assert_eq!(
            commuting_scalar_feasibility(2.0),
            ScalarFeasibility::OrthogonalityObstruction
        );
    }

    #[test]
    fn validation() {
        assert!(matches!(
            SignSeries::from_rows(vec![[1, 0, 1], [1, 1, 1]], 1.0),
            Err(SignError::BadEntry { row: 0 })
        ));
        assert!(matches!(
            SignSeries::from_rows(vec![[1, 1, 1]], 1.0),
            Err(SignError::TooShort)
        ));
    }
}
