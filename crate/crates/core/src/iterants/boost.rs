use super::iterant::Iterant;
use crate::exact::{crat_q, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum BoostError {
    #[error("|v| must be < 1, got {v}")]
    Superluminal { v: f64 },
    #[error("(1+v)/(1-v) = {ratio} is not a rational square; use the float mode")]
    NotRationalK { ratio: String },
}

/// A boost in the iterant representation `T(v) = [k, 1/k]` with
/// `k = sqrt((1+v)/(1-v))`, acting on spacetime iterants
/// `[t - x, t + x]` by componentwise multiplication. `k` is the stored
/// primitive, so rational-`k` boosts stay exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Boost {
    pub k: Rat,
}

impl Boost {
    /// Exact boost for a rational velocity whose `k` is rational
    /// (Pythagorean-style `v`, e.g. `v = 3/5` gives `k = 2`).
    pub fn exact(v: &Rat) -> Result<Boost, BoostError> {
        if v.abs() >= Rat::one() {
            return Err(BoostError::Superluminal {
                v: v.to_f64().unwrap_or(f64::NAN),
            });
        }
        let ratio = (Rat::one() + v) / (Rat::one() - v);
        let k = rational_sqrt(&ratio).ok_or_else(|| BoostError::NotRationalK {
            ratio: ratio.to_string(),
        })?;
        Ok(Boost { k })
    }

    /// The identity boost.
    pub fn identity() -> Boost {
        Boost { k: Rat::one() }
    }

    /// Recover the velocity: `v = (k^2 - 1)/(k^2 + 1)`.
    pub fn velocity(&self) -> Rat {
        let k2 = &self.k * &self.k;
        (&k2 - &Rat::one()) / (k2 + Rat::one())
    }

    /// The boost as an iterant `[k, 1/k]`.
    pub fn as_iterant(&self) -> Iterant {
        Iterant::new(crat_q(self.k.clone()), crat_q(self.k.recip()))
    }

    /// Compose two boosts: `k` factors multiply, which is the
    /// relativistic velocity addition `(v1 + v2)/(1 + v1 v2)`.
    pub fn compose(&self, other: &Boost) -> Boost {
        Boost {
            k: &self.k * &other.k,
        }
    }

    /// Apply to an event `(t, x)`: multiply the spacetime iterant
    /// componentwise and read the new coordinates back.
    pub fn apply(&self, t: &Rat, x: &Rat) -> (Rat, Rat) {
        let event = Iterant::from_spacetime(&crat_q(t.clone()), &crat_q(x.clone()));
        let boosted = &self.as_iterant() * &event;
        let (t2, x2) = boosted.to_spacetime();
        debug_assert!(t2.im.is_zero() && x2.im.is_zero());
        (t2.re, x2.re)
    }
}

/// Velocity addition without any square root: usable for all rational
/// velocities, exact.
pub fn velocity_addition(v1: &Rat, v2: &Rat) -> Rat {
    (v1 + v2) / (Rat::one() + v1 * v2)
}

/// Float boost for general `|v| < 1`.
pub fn boost_apply_f64(v: f64, t: f64, x: f64) -> Result<(f64, f64), BoostError> {
    if v.abs() >= 1.0 || v.is_nan() {
        return Err(BoostError::Superluminal { v });
    }
    let gamma = 1.0 / (1.0 - v * v).sqrt();
    Ok((gamma * (t - x * v), gamma * (x - v * t)))
}

/// Exact square root of a nonnegative rational, when it exists.
fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(Rat::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn zero_velocity_is_identity() {
        let b = Boost::exact(&rat(0, 1)).unwrap();
        assert_eq!(b.as_iterant(), Iterant::one());
        assert_eq!(b.apply(&rat(3, 1), &rat(-2, 1)), (rat(3, 1), rat(-2, 1)));
    }

    #[test]
    fn three_fifths_has_k_two() {
        let b = Boost::exact(&rat(3, 5)).unwrap();
        assert_eq!(b.k, rat(2, 1));
        assert_eq!(b.velocity(), rat(3, 5));
        // T(v) on (t, x) = (1, 0): t' = 1/sqrt(1 - v^2) = 5/4, x' = -v t' = -3/4
        let (t2, x2) = b.apply(&rat(1, 1), &rat(0, 1));
        assert_eq!(t2, rat(5, 4));
        assert_eq!(x2, rat(-3, 4));
    }

    #[test]
    fn interval_is_exactly_preserved() {
        let b = Boost::exact(&rat(3, 5)).unwrap();
        for (t, x) in [(rat(2, 1), rat(1, 3)), (rat(-1, 2), rat(5, 7))] {
            let (t2, x2) = b.apply(&t, &x);
            assert_eq!(&t2 * &t2 - &x2 * &x2, &t * &t - &x * &x);
        }
    }

    #[test]
    fn composition_is_velocity_addition() {
        // k^2 = 3 each: irrational k, but the composition has k^2 = 9
        let half = rat(1, 2);
        assert!(Boost::exact(&half).is_err());
        let composed_v = velocity_addition(&half, &half);
        assert_eq!(composed_v, rat(4, 5));
        // and for Pythagorean velocities the k factors just multiply
        let b1 = Boost::exact(&rat(3, 5)).unwrap();
        let b2 = Boost::exact(&rat(5, 13)).unwrap();
        let composed = b1.compose(&b2);
        assert_eq!(
            composed.velocity(),
            velocity_addition(&rat(3, 5), &rat(5, 13))
        );
    }

    #[test]
    fn superluminal_rejected() {
        assert!(matches!(
            Boost::exact(&rat(7, 5)),
            Err(BoostError::Superluminal { .. })
        ));
        assert!(boost_apply_f64(1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn float_mode_matches_exact_mode() {
        let b = Boost::exact(&rat(3, 5)).unwrap();
        let (t2, x2) = b.apply(&rat(1, 1), &rat(1, 2));
        let (tf, xf) = boost_apply_f64(0.6, 1.0, 0.5).unwrap();
        let to_f = |r: &Rat| r.to_f64().unwrap();
        assert!((to_f(&t2) - tf).abs() < 1e-12);
        assert!((to_f(&x2) - xf).abs() < 1e-12);
    }
}
