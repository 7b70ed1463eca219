use super::rng::walker_rng;
use rand::Rng;
use thiserror::Error;

/// Ensemble parameters. The step length is forced by the commutator
/// constant: `delta = sqrt(k tau)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WalkConfig {
    pub k: f64,
    pub tau: f64,
    pub steps: usize,
    pub walkers: usize,
    pub seed: u64,
}

impl WalkConfig {
    pub fn step_length(&self) -> f64 {
        (self.k * self.tau).sqrt()
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("ensemble needs at least one walker and one step")]
    EmptyEnsemble,
    #[error("k and tau must be nonnegative and finite")]
    BadParameters,
}

#[derive(Clone, Debug)]
pub struct BrownianResult {
    /// Mean squared displacement after `t+1` steps (index 0 is one step).
    pub msd: Vec<f64>,
    /// Mean displacement per step, same indexing.
    pub mean: Vec<f64>,
    /// Least-squares slope of `msd` against physical time through the
    /// origin; the diffusion relation predicts `slope = k = 2C`.
    pub fitted_slope: f64,
    /// A few stored trajectories for plotting.
    pub sample_paths: Vec<Vec<f64>>,
}

/// Equal-probability `+-delta` walk ensemble. Deterministic per seed.
pub fn brownian_ensemble(c: &WalkConfig) -> Result<BrownianResult, WalkError> {
    if c.steps == 0 || c.walkers == 0 {
        return Err(WalkError::EmptyEnsemble);
    }
    if !(c.k.is_finite() && c.tau.is_finite()) || c.k < 0.0 || c.tau <= 0.0 {
        return Err(WalkError::BadParameters);
    }
    let delta = c.step_length();
    let kept_paths = c.walkers.min(8);
    let mut sum = vec![0.0f64; c.steps];
    let mut sum_sq = vec![0.0f64; c.steps];
    let mut sample_paths = Vec::with_capacity(kept_paths);

    for walker in 0..c.walkers {
        let mut rng = walker_rng(c.seed, walker as u64);
        let mut x = 0.0f64;
        let keep = walker < kept_paths;
        let mut path = if keep {
            Vec::with_capacity(c.steps + 1)
        } else {
            Vec::new()
        };
        if keep {
            path.push(0.0);
        }
        // one u64 draw covers 64 steps
        let mut bits: u64 = 0;
        for t in 0..c.steps {
            if t % 64 == 0 {
                bits = rng.random::<u64>();
            }
            x += if bits & 1 == 1 { delta } else { -delta };
            bits >>= 1;
            sum[t] += x;
            sum_sq[t] += x * x;
            if keep {
                path.push(x);
            }
        }
        if keep {
            sample_paths.push(path);
        }
    }

    let n = c.walkers as f64;
    let msd: Vec<f64> = sum_sq.iter().map(|s| s / n).collect();
    let mean: Vec<f64> = sum.iter().map(|s| s / n).collect();

    let mut num = 0.0;
    let mut den = 0.0;
    for (t, m) in msd.iter().enumerate() {
        let time = (t + 1) as f64 * c.tau;
        num += time * m;
        den += time * time;
    }
    let fitted_slope = if den > 0.0 { num / den } else { 0.0 };

    Ok(BrownianResult {
        msd,
        mean,
        fitted_slope,
        sample_paths,
    })
}
