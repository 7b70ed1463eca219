use thiserror::Error;

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn add(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

const PERP_TOL: f64 = 1e-9;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum EmError {
    #[error("{what} violates the perpendicularity invariant (dot = {dot:.3e})")]
    NotPerpendicular { what: &'static str, dot: f64 },
    #[error("lambda undefined: B = 0 while E x dX = {magnitude:.3e}")]
    LambdaUndefined { magnitude: f64 },
}

/// Discrete Lorentz-force state: position, velocity `dX = X' - X` and
/// fields `E`, `B` with `E . dX = B . dX = E . B = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmState {
    pub position: [f64; 3],
    pub velocity: [f64; 3],
    pub e: [f64; 3],
    pub b: [f64; 3],
}

impl EmState {
    /// Validated constructor: enforces the three perpendicularity
    /// invariants (scaled tolerance).
    pub fn perpendicular(
        position: [f64; 3],
        velocity: [f64; 3],
        e: [f64; 3],
        b: [f64; 3],
    ) -> Result<Self, EmError> {
        let checks: [(&'static str, f64, f64); 3] = [
            ("E . dX", dot(e, velocity), norm(e) * norm(velocity)),
            ("B . dX", dot(b, velocity), norm(b) * norm(velocity)),
            ("E . B", dot(e, b), norm(e) * norm(b)),
        ];
        for (what, d, scale) in checks {
            if d.abs() > PERP_TOL * scale.max(1.0) {
                return Err(EmError::NotPerpendicular { what, dot: d });
            }
        }
        Ok(EmState {
            position,
            velocity,
            e,
            b,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EmStep {
    pub next: EmState,
    /// Scalar with `E x dX = lambda B` (least squares when `B != 0`).
    pub lambda: f64,
    /// `|B - dX' x dX / (lambda + |dX|^2)|`: the field-reconstruction
    /// identity residual.
    pub residual: f64,
}

/// One step of `d^2 X = E + dX x B`: advances the velocity, computes
/// `lambda` and verifies that the magnetic field is recovered from two
/// consecutive velocities.
pub fn em_lorentz_step(st: &EmState) -> Result<EmStep, EmError> {
    let accel = add(st.e, cross(st.velocity, st.b));
    let next_velocity = add(st.velocity, accel);
    let e_cross_v = cross(st.e, st.velocity);
    let b_sq = dot(st.b, st.b);
    let lambda = if b_sq > 0.0 {
        dot(e_cross_v, st.b) / b_sq
    } else if norm(e_cross_v) <= PERP_TOL {
        0.0
    } else {
        return Err(EmError::LambdaUndefined {
            magnitude: norm(e_cross_v),
        });
    };
    let denom = lambda + dot(st.velocity, st.velocity);
    let reconstructed = if denom != 0.0 {
        let c = cross(next_velocity, st.velocity);
        [c[0] / denom, c[1] / denom, c[2] / denom]
    } else {
        [0.0; 3]
    };
    let residual = norm(sub(st.b, reconstructed));
    let next = EmState {
        position: add(st.position, st.velocity),
        velocity: next_velocity,
        e: st.e,
        b: st.b,
    };
    Ok(EmStep {
        next,
        lambda,
        residual,
    })
}
