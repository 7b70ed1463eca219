//! Poisson brackets on polynomial phase functions and the exact
//! Leibniz-defect identity for flows.

use super::multipoly::MultiPoly;
use crate::exact::Rat;

/// Polynomial function on phase space with `dof` degrees of freedom.
/// Variables are ordered `q_1 .. q_n, p_1 .. p_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhaseFunction {
    pub dof: usize,
    pub poly: MultiPoly,
}

impl PhaseFunction {
    pub fn new(dof: usize, poly: MultiPoly) -> Self {
        assert_eq!(poly.nvars(), 2 * dof);
        PhaseFunction { dof, poly }
    }

    pub fn zero(dof: usize) -> Self {
        PhaseFunction::new(dof, MultiPoly::zero(2 * dof))
    }

    pub fn q(dof: usize, i: usize) -> Self {
        assert!(i < dof);
        PhaseFunction::new(dof, MultiPoly::var(2 * dof, i))
    }

    pub fn p(dof: usize, i: usize) -> Self {
        assert!(i < dof);
        PhaseFunction::new(dof, MultiPoly::var(2 * dof, dof + i))
    }

    /// Parse with variables named `q1..qn, p1..pn` (plus bare `q`, `p`
    /// for one degree of freedom).
    pub fn parse(src: &str, dof: usize) -> Result<Self, super::multipoly::PolyParseError> {
        let mut names: Vec<String> = Vec::new();
        for i in 0..dof {
            names.push(format!("q{}", i + 1));
        }
        for i in 0..dof {
            names.push(format!("p{}", i + 1));
        }
        if dof == 1 {
            // aliases: q == q1, p == p1
            let src = src.replace('q', "q1").replace("q11", "q1").replace('p', "p1").replace("p11", "p1");
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            return Ok(PhaseFunction::new(dof, MultiPoly::parse(&src, &refs)?));
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Ok(PhaseFunction::new(dof, MultiPoly::parse(src, &refs)?))
    }

    pub fn dq(&self, i: usize) -> MultiPoly {
        self.poly.partial(i)
    }

    pub fn dp(&self, i: usize) -> MultiPoly {
        self.poly.partial(self.dof + i)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// `{a, b} = sum_i da/dq_i db/dp_i - da/dp_i db/dq_i`, exact.
pub fn poisson_bracket(a: &PhaseFunction, b: &PhaseFunction) -> PhaseFunction {
    assert_eq!(a.dof, b.dof);
    let mut acc = MultiPoly::zero(2 * a.dof);
    for i in 0..a.dof {
        let plus = &a.dq(i) * &b.dp(i);
        let minus = &a.dp(i) * &b.dq(i);
        acc = &(&acc + &plus) - &minus;
    }
    PhaseFunction::new(a.dof, acc)
}

/// A polynomial flow `qdot_i(q, p)`, `pdot_i(q, p)`.
#[derive(Clone, Debug)]
pub struct Flow {
    pub qdot: Vec<PhaseFunction>,
    pub pdot: Vec<PhaseFunction>,
}

impl Flow {
    pub fn dof(&self) -> usize {
        self.qdot.len()
    }

    /// Hamiltonian flow `qdot = dH/dp`, `pdot = -dH/dq`.
    pub fn hamiltonian(h: &PhaseFunction) -> Flow {
        let dof = h.dof;
        Flow {
            qdot: (0..dof)
                .map(|i| PhaseFunction::new(dof, h.dp(i)))
                .collect(),
            pdot: (0..dof)
                .map(|i| PhaseFunction::new(dof, -&h.dq(i)))
                .collect(),
        }
    }

    /// Time derivative along the flow:
    /// `df/dt = sum_i df/dq_i qdot_i + df/dp_i pdot_i`.
    pub fn time_derivative(&self, f: &PhaseFunction) -> PhaseFunction {
        let dof = self.dof();
        assert_eq!(f.dof, dof);
        let mut acc = MultiPoly::zero(2 * dof);
        for i in 0..dof {
            acc = &acc + &(&f.dq(i) * &self.qdot[i].poly);
            acc = &acc + &(&f.dp(i) * &self.pdot[i].poly);
        }
        PhaseFunction::new(dof, acc)
    }

    /// Phase-space divergence `sum_i dqdot_i/dq_i + dpdot_i/dp_i`.
    pub fn divergence(&self) -> PhaseFunction {
        let dof = self.dof();
        let mut acc = MultiPoly::zero(2 * dof);
        for i in 0..dof {
            acc = &acc + &self.qdot[i].dq(i);
            acc = &acc + &self.pdot[i].dp(i);
        }
        PhaseFunction::new(dof, acc)
    }
}

/// The Leibniz defect of the bracket along a flow:
/// `(d/dt){a,b} - {da/dt, b} - {a, db/dt}`, exact polynomial.
pub fn poisson_leibniz_defect(a: &PhaseFunction, b: &PhaseFunction, flow: &Flow) -> PhaseFunction {
    let bracket = poisson_bracket(a, b);
    let lhs = flow.time_derivative(&bracket);
    let rhs = &poisson_bracket(&flow.time_derivative(a), b).poly
        + &poisson_bracket(a, &flow.time_derivative(b)).poly;
    PhaseFunction::new(a.dof, &lhs.poly - &rhs)
}

/// The closed form of the defect for one degree of freedom:
/// `-{a, b} (dqdot/dq + dpdot/dp)`.
pub fn defect_closed_form(a: &PhaseFunction, b: &PhaseFunction, flow: &Flow) -> PhaseFunction {
    let bracket = poisson_bracket(a, b);
    let div = flow.divergence();
    PhaseFunction::new(a.dof, -&(&bracket.poly * &div.poly))
}

/// Scale a phase function by an exact rational.
pub fn scale(f: &PhaseFunction, s: &Rat) -> PhaseFunction {
    PhaseFunction::new(f.dof, f.poly.scale(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(src: &str, dof: usize) -> PhaseFunction {
        PhaseFunction::parse(src, dof).unwrap()
    }

    #[test]
    fn canonical_bracket() {
        let q = pf("q", 1);
        let p = pf("p", 1);
        assert_eq!(poisson_bracket(&q, &p), pf("1", 1));
        assert_eq!(poisson_bracket(&p, &q), pf("-1", 1));
        // {a, a} = 0
        let a = pf("q^2p + 3p", 1);
        assert!(poisson_bracket(&a, &a).is_zero());
    }

    #[test]
    fn square_bracket_oracle() {
        // {q^2, p^2} = 4 q p by direct partial evaluation
        let a = pf("q^2", 1);
        let b = pf("p^2", 1);
        assert_eq!(poisson_bracket(&a, &b), pf("4qp", 1));
    }

    #[test]
    fn multi_dof_bracket() {
        let q1 = PhaseFunction::q(2, 0);
        let p2 = PhaseFunction::p(2, 1);
        assert!(poisson_bracket(&q1, &p2).is_zero());
        let p1 = PhaseFunction::p(2, 0);
        assert_eq!(poisson_bracket(&q1, &p1).poly, MultiPoly::one(4));
    }

    #[test]
    fn hamiltonian_flow_has_zero_defect() {
        // H = p^2/2: qdot = p, pdot = 0
        let h = pf("1/2p^2", 1);
        let flow = Flow::hamiltonian(&h);
        let a = pf("q^2 + qp", 1);
        let b = pf("p^3 - q", 1);
        assert!(poisson_leibniz_defect(&a, &b, &flow).is_zero());
    }

    #[test]
    fn divergent_flow_defect_matches_closed_form() {
        // qdot = q, pdot = 0: divergence 1, defect = -{a,b}
        let flow = Flow {
            qdot: vec![pf("q", 1)],
            pdot: vec![pf("0", 1)],
        };
        let a = pf("q", 1);
        let b = pf("p", 1);
        let defect = poisson_leibniz_defect(&a, &b, &flow);
        assert_eq!(defect, pf("-1", 1));
        assert_eq!(defect, defect_closed_form(&a, &b, &flow));
    }

    #[test]
    fn constant_arguments_have_zero_defect() {
        let flow = Flow {
            qdot: vec![pf("q^2p", 1)],
            pdot: vec![pf("p - q", 1)],
        };
        let c = pf("5", 1);
        let b = pf("q^2p - p", 1);
        assert!(poisson_leibniz_defect(&c, &b, &flow).is_zero());
    }
}
