//! Numeric metric fields, connection coefficients and parallel
//! translation.

use super::multipoly::MultiPoly;
use super::poisson::{poisson_bracket, PhaseFunction};
use crate::exact::Rat;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum MetricError {
    #[error("metric must be {n}x{n}: got {got} entries")]
    WrongShape { n: usize, got: usize },
    #[error("metric is not symmetric at entry ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("metric is singular at the evaluation point (|det| = {det:.3e})")]
    Singular { det: f64 },
    #[error("bad metric file: {0}")]
    Format(String),
    #[error("{0}")]
    Parse(#[from] super::multipoly::PolyParseError),
}

type GFn = dyn Fn(&[f64]) -> Vec<f64>;

/// An `n x n` field of metric coefficients, polynomial (exact partials)
/// or callable (central-difference partials with `h = 1e-5`).
pub enum MetricField {
    Polynomial { n: usize, entries: Vec<MultiPoly> },
    Callable { n: usize, g: Box<GFn> },
}

const FD_STEP: f64 = 1e-5;
const DET_MARGIN: f64 = 1e-12;

impl MetricField {
    pub fn polynomial(n: usize, entries: Vec<MultiPoly>) -> Result<Self, MetricError> {
        if entries.len() != n * n {
            return Err(MetricError::WrongShape {
                n,
                got: entries.len(),
            });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(MetricError::NotSymmetric { i, j });
                }
            }
        }
        Ok(MetricField::Polynomial { n, entries })
    }

    pub fn callable(n: usize, g: Box<GFn>) -> Self {
        MetricField::Callable { n, g }
    }

    /// Euclidean metric `delta_ij`.
    pub fn euclidean(n: usize) -> Self {
        let mut entries = vec![MultiPoly::zero(n); n * n];
        for i in 0..n {
            entries[i * n + i] = MultiPoly::one(n);
        }
        MetricField::Polynomial { n, entries }
    }

    /// Polar-coordinate metric `diag(1, x1^2)` on `(r, theta)`.
    pub fn polar() -> Self {
        let r = MultiPoly::var(2, 0);
        let entries = vec![
            MultiPoly::one(2),
            MultiPoly::zero(2),
            MultiPoly::zero(2),
            &r * &r,
        ];
        MetricField::Polynomial { n: 2, entries }
    }

    /// Load from the declarative text format: first non-empty line is
    /// `n`, then `n^2` entry lines (row major) as polynomials in
    /// `x1..xn`. `#` starts a comment.
    pub fn from_text(src: &str) -> Result<Self, MetricError> {
        let mut lines = src
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| MetricError::Format("missing dimension line".into()))?
            .parse()
            .map_err(|_| MetricError::Format("dimension must be an integer".into()))?;
        if n == 0 || n > 9 {
            return Err(MetricError::Format("dimension must be in 1..=9".into()));
        }
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut entries = Vec::with_capacity(n * n);
        for line in lines {
            entries.push(MultiPoly::parse(line, &refs)?);
        }
        MetricField::polynomial(n, entries)
    }

    pub fn dim(&self) -> usize {
        match self {
            MetricField::Polynomial { n, .. } | MetricField::Callable { n, .. } => *n,
        }
    }

    /// Evaluate the matrix at a point, row major.
    pub fn at(&self, x: &[f64]) -> Vec<f64> {
        match self {
            MetricField::Polynomial { entries, .. } => {
                entries.iter().map(|p| p.eval_f64(x)).collect()
            }
            MetricField::Callable { g, .. } => g(x),
        }
    }

    /// `d g_ij / d x_k` at a point, indexed `[k][i * n + j]`.
    pub fn partials_at(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let n = self.dim();
        match self {
            MetricField::Polynomial { entries, .. } => (0..n)
                .map(|k| entries.iter().map(|p| p.partial(k).eval_f64(x)).collect())
                .collect(),
            MetricField::Callable { g, .. } => (0..n)
                .map(|k| {
                    let central = |h: f64| -> Vec<f64> {
                        let mut xp = x.to_vec();
                        let mut xm = x.to_vec();
                        xp[k] += h;
                        xm[k] -= h;
                        let gp = g(&xp);
                        let gm = g(&xm);
                        gp.iter().zip(&gm).map(|(a, b)| (a - b) / (2.0 * h)).collect()
                    };
                    // Richardson: the h and h/2 stencils combine to a
                    // fourth-order estimate and cross-check each other
                    let coarse = central(FD_STEP);
                    let fine = central(FD_STEP / 2.0);
                    coarse
                        .iter()
                        .zip(&fine)
                        .map(|(c, f)| (4.0 * f - c) / 3.0)
                        .collect()
                })
                .collect(),
        }
    }
}

/// Dense inverse via Gauss-Jordan; `None` when the pivot degenerates.
fn invert(n: usize, m: &[f64]) -> Option<(Vec<f64>, f64)> {
    let mut a = m.to_vec();
    let mut inv = vec![0.0; n * n];
    for i in 0..n {
        inv[i * n + i] = 1.0;
    }
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n).max_by(|&r1, &r2| {
            a[r1 * n + col]
                .abs()
                .partial_cmp(&a[r2 * n + col].abs())
                .unwrap()
        })?;
        if a[pivot * n + col].abs() < DET_MARGIN {
            return None;
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
                inv.swap(col * n + j, pivot * n + j);
            }
            det = -det;
        }
        let d = a[col * n + col];
        det *= d;
        for j in 0..n {
            a[col * n + j] /= d;
            inv[col * n + j] /= d;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r * n + col];
            if f == 0.0 {
                continue;
            }
            for j in 0..n {
                a[r * n + j] -= f * a[col * n + j];
                inv[r * n + j] -= f * inv[col * n + j];
            }
        }
    }
    Some((inv, det))
}

/// Connection coefficients of a metric at a point.
///
/// Storage is the first-kind symbol with the distinguished index first:
/// `lower(a,b,c) = (1/2)(d_b g_ac + d_c g_ab - d_a g_bc)`, symmetric in
/// `(b, c)`. The two index conventions in use are accessors over it.
pub struct Christoffel {
    pub n: usize,
    lower: Vec<f64>,
    raised: Vec<f64>,
    /// Max residual of `d_k g_ij = g_sj G^s_ik + g_is G^s_jk`.
    pub reconstruction_residual: f64,
}

impl Christoffel {
    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.n + b) * self.n + c
    }

    /// First kind, symmetric pair first (the default convention):
    /// `Gamma_ijk = (1/2)(d_i g_jk + d_j g_ik - d_k g_ij)`.
    pub fn first_kind(&self, i: usize, j: usize, k: usize) -> f64 {
        self.lower[self.idx(k, i, j)]
    }

    /// First kind, distinguished index first (the parallel-translation
    /// convention): `Gamma_ijk = (1/2)(d_k g_ij - d_i g_jk + d_j g_ik)`.
    pub fn first_kind_alt(&self, i: usize, j: usize, k: usize) -> f64 {
        self.lower[self.idx(i, j, k)]
    }

    /// Second kind `Gamma^k_ij`.
    pub fn second_kind(&self, k: usize, i: usize, j: usize) -> f64 {
        self.raised[self.idx(k, i, j)]
    }
}

/// Compute both index conventions of the connection and the raised
/// symbol at `x`, verifying the defining reconstruction identity.
pub fn christoffel_numeric(m: &MetricField, x: &[f64]) -> Result<Christoffel, MetricError> {
    let n = m.dim();
    assert_eq!(x.len(), n);
    let g = m.at(x);
    for i in 0..n {
        for j in (i + 1)..n {
            if (g[i * n + j] - g[j * n + i]).abs() > 1e-9 {
                return Err(MetricError::NotSymmetric { i, j });
            }
        }
    }
    let (ginv, det) = invert(n, &g).ok_or(MetricError::Singular { det: 0.0 })?;
    if det.abs() < DET_MARGIN {
        return Err(MetricError::Singular { det });
    }
    let dg = m.partials_at(x);

    let mut lower = vec![0.0; n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                lower[(a * n + b) * n + c] = 0.5
                    * (dg[b][a * n + c] + dg[c][a * n + b] - dg[a][b * n + c]);
            }
        }
    }
    let mut raised = vec![0.0; n * n * n];
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for s in 0..n {
                    acc += ginv[k * n + s] * lower[(s * n + i) * n + j];
                }
                raised[(k * n + i) * n + j] = acc;
            }
        }
    }

    // d_k g_ij = g_sj G^s_ik + g_is G^s_jk
    let mut residual: f64 = 0.0;
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut rhs = 0.0;
                for s in 0..n {
                    rhs += g[s * n + j] * raised[(s * n + i) * n + k]
                        + g[i * n + s] * raised[(s * n + j) * n + k];
                }
                residual = residual.max((dg[k][i * n + j] - rhs).abs());
            }
        }
    }

    Ok(Christoffel {
        n,
        lower,
        raised,
        reconstruction_residual: residual,
    })
}

/// Transport `a` along `dx` by `delta a^k = -Gamma^k_ij a^i dx^j` and
/// return the change of `<a, a>`; second order in `|dx|`.
pub fn parallel_invariance_check(
    m: &MetricField,
    x: &[f64],
    a: &[f64],
    dx: &[f64],
) -> Result<f64, MetricError> {
    let n = m.dim();
    assert_eq!(a.len(), n);
    assert_eq!(dx.len(), n);
    let chr = christoffel_numeric(m, x)?;
    let mut moved = a.to_vec();
    for k in 0..n {
        let mut delta = 0.0;
        for i in 0..n {
            for j in 0..n {
                delta -= chr.second_kind(k, i, j) * a[i] * dx[j];
            }
        }
        moved[k] += delta;
    }
    let x2: Vec<f64> = x.iter().zip(dx).map(|(xi, di)| xi + di).collect();
    let inner = |gm: &[f64], v: &[f64]| {
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += gm[i * n + j] * v[i] * v[j];
            }
        }
        acc
    };
    let before = inner(&m.at(x), a);
    let after = inner(&m.at(&x2), &moved);
    Ok(after - before)
}

/// Numeric check that the canonical bracket `{x_i, xdot_j}` equals
/// `g_ij / mass` when `xdot_j = g_jk p_k / mass`.
pub struct LagrangianBracketReport {
    /// `{x_i, xdot_j}` evaluated at each sample (row major per sample).
    pub brackets: Vec<Vec<f64>>,
    /// Max deviation from `g_ij(x) / mass` over all samples.
    pub max_deviation: f64,
    /// The bracket minus `g/mass` is the zero polynomial (exact check).
    pub symbolic_zero: bool,
}

/// Requires a polynomial metric so the canonical computation stays
/// exact. Sample points supply the numeric comparison the report
/// carries.
pub fn lagrangian_bracket_check(
    m: &MetricField,
    mass: &Rat,
    samples: &[Vec<f64>],
) -> Result<LagrangianBracketReport, MetricError> {
    let MetricField::Polynomial { n, entries } = m else {
        return Err(MetricError::Format(
            "lagrangian bracket check needs a polynomial metric".into(),
        ));
    };
    let n = *n;
    let dof = n;
    let inv_mass = mass.recip();

    // xdot_j(q, p) = sum_k g_jk(q) p_k / mass, as a phase function
    let xdot: Vec<PhaseFunction> = (0..n)
        .map(|j| {
            let mut acc = MultiPoly::zero(2 * dof);
            for k in 0..n {
                let gjk = entries[j * n + k].embed(2 * dof, 0);
                let pk = MultiPoly::var(2 * dof, dof + k);
                acc = &acc + &(&gjk * &pk);
            }
            PhaseFunction::new(dof, acc.scale(&inv_mass))
        })
        .collect();

    // {x_i, xdot_j} as exact polynomials, compared against g_ij / mass
    let mut symbolic_zero = true;
    let mut bracket_polys = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let xi = PhaseFunction::q(dof, i);
            let bracket = poisson_bracket(&xi, &xdot[j]);
            let expected = entries[i * n + j].embed(2 * dof, 0).scale(&inv_mass);
            if &bracket.poly - &expected != MultiPoly::zero(2 * dof) {
                symbolic_zero = false;
            }
            bracket_polys.push(bracket.poly);
        }
    }

    let mass_f = crate::geometry::rat_to_f64(mass);
    let mut max_deviation: f64 = 0.0;
    let mut brackets = Vec::with_capacity(samples.len());
    for x in samples {
        assert_eq!(x.len(), n);
        // brackets are independent of p; evaluate at p = 0
        let mut point = x.clone();
        point.extend(std::iter::repeat_n(0.0, dof));
        let g = m.at(x);
        let mut row = Vec::with_capacity(n * n);
        for (idx, poly) in bracket_polys.iter().enumerate() {
            let value = poly.eval_f64(&point);
            row.push(value);
            max_deviation = max_deviation.max((value - g[idx] / mass_f).abs());
        }
        brackets.push(row);
    }

    Ok(LagrangianBracketReport {
        brackets,
        max_deviation,
        symbolic_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclidean_connection_vanishes() {
        let m = MetricField::euclidean(3);
        let chr = christoffel_numeric(&m, &[0.3, -1.2, 2.0]).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    assert_eq!(chr.first_kind(a, b, c), 0.0);
                    assert_eq!(chr.second_kind(a, b, c), 0.0);
                }
            }
        }
        assert!(chr.reconstruction_residual < 1e-15);
    }

    #[test]
    fn polar_closed_forms() {
        // at r = 2: Gamma^1_22 = -r = -2, Gamma^2_12 = 1/r = 0.5
        let m = MetricField::polar();
        let chr = christoffel_numeric(&m, &[2.0, 0.7]).unwrap();
        assert!((chr.second_kind(0, 1, 1) - (-2.0)).abs() < 1e-12);
        assert!((chr.second_kind(1, 0, 1) - 0.5).abs() < 1e-12);
        assert!((chr.second_kind(1, 1, 0) - 0.5).abs() < 1e-12);
        // first kind in the default convention: Gamma_221 = -r, Gamma_122 = r...
        assert!((chr.first_kind(2 - 1, 2 - 1, 1 - 1) - (-2.0)).abs() < 1e-12);
        assert!(chr.reconstruction_residual < 1e-9);
    }

    #[test]
    fn conventions_are_index_permutations() {
        let m = MetricField::polar();
        let chr = christoffel_numeric(&m, &[1.7, 0.1]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert!(
                        (chr.first_kind(i, j, k) - chr.first_kind_alt(k, i, j)).abs() < 1e-14
                    );
                    // symmetric in the pair
                    assert!((chr.first_kind(i, j, k) - chr.first_kind(j, i, k)).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn callable_matches_polynomial() {
        let poly = MetricField::polar();
        let callable = MetricField::callable(
            2,
            Box::new(|x: &[f64]| vec![1.0, 0.0, 0.0, x[0] * x[0]]),
        );
        let p = christoffel_numeric(&poly, &[1.5, 0.4]).unwrap();
        let c = christoffel_numeric(&callable, &[1.5, 0.4]).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                for k in 0..2 {
                    assert!((p.second_kind(a, b, k) - c.second_kind(a, b, k)).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn parallel_transport_preserves_norm_to_second_order() {
        let m = MetricField::polar();
        let x = [2.0, 0.5];
        let a = [0.3, 0.4];
        let r1 = parallel_invariance_check(&m, &x, &a, &[1e-3, 2e-3])
            .unwrap()
            .abs();
        let r2 = parallel_invariance_check(&m, &x, &a, &[5e-4, 1e-3])
            .unwrap()
            .abs();
        let ratio = r1 / r2;
        assert!(
            (2.5..6.0).contains(&ratio),
            "expected ~4x residual drop, got {ratio}"
        );
        // flat metric: exact zero up to rounding
        let flat = MetricField::euclidean(2);
        let r = parallel_invariance_check(&flat, &x, &a, &[1e-3, 2e-3]).unwrap();
        assert!(r.abs() < 1e-15);
        // zero vector: exactly zero
        let z = parallel_invariance_check(&m, &x, &[0.0, 0.0], &[1e-3, 0.0]).unwrap();
        assert_eq!(z, 0.0);
    }

    #[test]
    fn singular_metric_is_rejected() {
        let m = MetricField::polynomial(
            2,
            vec![
                MultiPoly::one(2),
                MultiPoly::one(2),
                MultiPoly::one(2),
                MultiPoly::one(2),
            ],
        )
        .unwrap();
        assert!(matches!(
            christoffel_numeric(&m, &[0.0, 0.0]),
            Err(MetricError::Singular { .. })
        ));
    }

    #[test]
    fn metric_file_format() {
        let src = "# polar metric\n2\n1\n0\n0\nx1^2\n";
        let m = MetricField::from_text(src).unwrap();
        let chr = christoffel_numeric(&m, &[2.0, 0.0]).unwrap();
        assert!((chr.second_kind(0, 1, 1) + 2.0).abs() < 1e-12);
        assert!(MetricField::from_text("2\n1\nx1\n0\n1\n").is_err()); // not symmetric
    }

    #[test]
    fn lagrangian_bracket_polar() {
        let m = MetricField::polar();
        let report = lagrangian_bracket_check(
            &m,
            &Rat::from_integer(1.into()),
            &[vec![2.0, 0.3], vec![0.7, 1.1]],
        )
        .unwrap();
        assert!(report.symbolic_zero);
        assert!(report.max_deviation < 1e-12);
        // at r = 2 the bracket matrix is diag(1, 4)
        assert!((report.brackets[0][3] - 4.0).abs() < 1e-12);
        assert!((report.brackets[0][0] - 1.0).abs() < 1e-12);

        // mass scaling: m = 2 halves the bracket
        let scaled = lagrangian_bracket_check(
            &m,
            &Rat::from_integer(2.into()),
            &[vec![2.0, 0.3]],
        )
        .unwrap();
        assert!(scaled.symbolic_zero);
        assert!((scaled.brackets[0][3] - 2.0).abs() < 1e-12);
    }
}
