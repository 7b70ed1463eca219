//! Symbolic verification suites: each prints PASS/FAIL lines with the
//! reduced expressions and returns whether everything held.

use anyhow::Result;
use ordcalc::exact::{crat, CMatrix, CRat, Rat};
use ordcalc::geometry::{
    bianchi_cyclic, defect_closed_form, gauge_curvature, levi_civita_expected,
    levi_civita_index_free, levi_civita_nested, lorentz_force_consistency, metric_symmetry,
    poisson_leibniz_defect, BackgroundSpec, Flow, MultiPoly, PhaseFunction,
};
use ordcalc::iterants::{
    perm_conjugation_check, perm_decompose, perm_reconstruct, quaternion_check, EtaElement,
    Iterant,
};
use ordcalc::ncalg::{
    commutator, equals, normalize, parse, Atom, CommutationTable, Expression, Family, Word,
};
use ordcalc::walks::walker_rng;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

struct Report {
    failures: usize,
}

impl Report {
    fn new() -> Self {
        Report { failures: 0 }
    }

    fn check(&mut self, ok: bool, label: &str, detail: &str) {
        if ok {
            println!("PASS {label}: {detail}");
        } else {
            self.failures += 1;
            println!("FAIL {label}: {detail}");
        }
    }
}

pub fn run(suite: &str, dim: u8, seed: u64, cases: usize) -> Result<bool> {
    let mut report = Report::new();
    match suite {
        "leibniz" => leibniz(&mut report, seed, cases),
        "xdx" => xdx(&mut report),
        "gauge-curvature" => gauge(&mut report, dim),
        "levi-civita" => levi_civita(&mut report, dim),
        "bianchi" => bianchi(&mut report, dim),
        "metric-symmetry" => metric_sym(&mut report, dim),
        "lorentz-force" => lorentz(&mut report, dim),
        "poisson" => poisson(&mut report, seed, cases),
        "iterant-matrix" => iterant_matrix(&mut report, seed, cases),
        "quaternions" => quaternion_suite(&mut report),
        "perm-theorem" => perm_theorem(&mut report, seed, cases),
        "all" => {
            leibniz(&mut report, seed, cases);
            xdx(&mut report);
            gauge(&mut report, dim);
            levi_civita(&mut report, dim);
            bianchi(&mut report, dim);
            metric_sym(&mut report, dim);
            lorentz(&mut report, dim);
            poisson(&mut report, seed, cases);
            iterant_matrix(&mut report, seed, cases);
            quaternion_suite(&mut report);
            perm_theorem(&mut report, seed, cases);
        }
        other => anyhow::bail!("unknown verify suite '{other}'"),
    }
    if report.failures == 0 {
        println!("all checks passed");
        Ok(true)
    } else {
        println!("{} check(s) failed", report.failures);
        Ok(false)
    }
}

fn random_expression(rng: &mut ChaCha8Rng) -> Expression {
    let mut acc = Expression::zero();
    for _ in 0..rng.random_range(1..=3usize) {
        let atoms = (0..rng.random_range(0..=3usize))
            .map(|_| {
                let family = match rng.random_range(0..4u8) {
                    0 => Family::Coordinate,
                    1 => Family::Momentum,
                    2 => Family::Symbol('u'),
                    _ => Family::Symbol('v'),
                };
                Atom::new(family, vec![rng.random_range(1..=3u8)])
                    .shifted(rng.random_range(0..=1u32))
            })
            .collect();
        acc = &acc
            + &Expression::term(
                crat(rng.random_range(-3..=3i64), 1),
                Word {
                    jpower: rng.random_range(0..=1u32),
                    atoms,
                },
            );
    }
    acc
}

fn leibniz(report: &mut Report, seed: u64, cases: usize) {
    let free = CommutationTable::free();
    let j = Expression::j();
    let mut rng = walker_rng(seed, 0);
    let mut worst: Option<(Expression, Expression)> = None;
    let mut all_zero = true;
    for _ in 0..cases {
        let a = random_expression(&mut rng);
        let b = random_expression(&mut rng);
        let d = |e: &Expression| commutator(e, &j, &free).unwrap();
        let defect = normalize(
            &(&d(&a.raw_mul(&b)) - &(&d(&a).raw_mul(&b) + &a.raw_mul(&d(&b)))),
            &free,
        )
        .unwrap();
        if !defect.is_zero() {
            all_zero = false;
            worst = Some((a, b));
            break;
        }
    }
    match worst {
        None => report.check(
            all_zero,
            "leibniz",
            &format!("D(ab) - D(a)b - aD(b) = 0 on {cases} random pairs"),
        ),
        Some((a, b)) => report.check(false, "leibniz", &format!("defect nonzero for a = {a}, b = {b}")),
    }
}

fn xdx(report: &mut Report) {
    let free = CommutationTable::free();
    let x = Expression::atom(Atom::x0());
    let dx = commutator(&x, &Expression::j(), &free).unwrap();
    let bracket = commutator(&x, &dx, &free).unwrap();
    let expected = parse("J(X'X' - 2X'X + XX)").unwrap();
    report.check(
        bracket == expected,
        "xdx free form",
        &format!("[X, DX] = {bracket}"),
    );

    let commuting = CommutationTable::commuting_series();
    let diff = &x.shifted() - &x;
    let square = Expression::j().raw_mul(&diff.raw_mul(&diff));
    let bracket_c = commutator(
        &x,
        &commutator(&x, &Expression::j(), &commuting).unwrap(),
        &commuting,
    )
    .unwrap();
    report.check(
        equals(&bracket_c, &square, &commuting).unwrap(),
        "xdx commuting series",
        "[X, DX] = J(X' - X)^2",
    );
}

fn gauge(report: &mut Report, dim: u8) {
    let bg = BackgroundSpec::gauge(dim, false);
    let abelian = BackgroundSpec::gauge(dim, true);
    for i in 1..=dim {
        for j in 1..=dim {
            let got = gauge_curvature(&bg, i, j).unwrap();
            let da = |a: u8, b: u8| Expression::atom(Atom::new(Family::PotentialGrad, vec![a, b]));
            let pot = |a: u8| Expression::atom(Atom::potential(a));
            let expected = &(&da(i, j) - &da(j, i)) + &pot(i).raw_commutator(&pot(j));
            report.check(
                got == expected,
                &format!("gauge-curvature ({i},{j})"),
                &format!("{got}"),
            );
            let ab = gauge_curvature(&abelian, i, j).unwrap();
            report.check(
                ab == &da(i, j) - &da(j, i),
                &format!("gauge-curvature abelian ({i},{j})"),
                &format!("{ab}"),
            );
        }
    }
}

fn levi_civita(report: &mut Report, dim: u8) {
    let bg = BackgroundSpec::metric(dim);
    for i in 1..=dim {
        for j in 1..=dim {
            for k in 1..=dim {
                let nested = levi_civita_nested(&bg, i, j, k).unwrap();
                let index_free = levi_civita_index_free(&bg, i, j, k).unwrap();
                let ok = nested == levi_civita_expected(i, j, k) && nested == index_free;
                report.check(
                    ok,
                    &format!("levi-civita ({i},{j},{k})"),
                    &format!("[X{i},[X{j},D2X{k}]] = {nested}"),
                );
            }
        }
    }
}

fn bianchi(report: &mut Report, dim: u8) {
    let free = CommutationTable::free();
    let mut all = true;
    for i in 1..=dim {
        for j in 1..=dim {
            for k in 1..=dim {
                if !bianchi_cyclic(i, j, k, &free).unwrap().is_zero() {
                    all = false;
                }
            }
        }
    }
    report.check(
        all,
        "bianchi",
        &format!("cyclic gradient sum vanishes for all {n} triples", n = (dim as usize).pow(3)),
    );
}

fn metric_sym(report: &mut Report, dim: u8) {
    let bg = BackgroundSpec::metric_with(dim, false, false);
    for i in 1..=dim {
        for j in (i + 1)..=dim {
            let r = metric_symmetry(&bg, i, j).unwrap();
            report.check(
                r.identity_residual.is_zero() && r.symmetrized.is_zero(),
                &format!("metric-symmetry ({i},{j})"),
                &format!(
                    "g difference = {}, D[X{i},X{j}] = {}",
                    r.metric_difference, r.coordinate_bracket_rate
                ),
            );
        }
    }
}

fn lorentz(report: &mut Report, dim: u8) {
    let bg = BackgroundSpec::flat(dim);
    for i in 1..=dim {
        for j in 1..=dim {
            let r = lorentz_force_consistency(&bg, i, j, true).unwrap();
            report.check(
                r.consistent,
                &format!("lorentz-force ({i},{j})"),
                &format!("[X{i}, d2X{j}] = {}", r.coordinate_accel_bracket),
            );
        }
    }
}

fn random_phase(rng: &mut ChaCha8Rng, dof: usize, degree: u32) -> PhaseFunction {
    let nvars = 2 * dof;
    let mut acc = MultiPoly::zero(nvars);
    for _ in 0..rng.random_range(1..=4usize) {
        let mut mono = MultiPoly::constant(nvars, Rat::from_integer(rng.random_range(-3..=3i64).into()));
        let mut budget = degree;
        for v in 0..nvars {
            let k = rng.random_range(0..=budget.min(2));
            for _ in 0..k {
                mono = &mono * &MultiPoly::var(nvars, v);
            }
            budget -= k;
        }
        acc = &acc + &mono;
    }
    PhaseFunction::new(dof, acc)
}

fn poisson(report: &mut Report, seed: u64, cases: usize) {
    let mut rng = walker_rng(seed, 1);
    let mut identity_ok = true;
    for _ in 0..cases {
        let a = random_phase(&mut rng, 1, 3);
        let b = random_phase(&mut rng, 1, 3);
        let flow = Flow {
            qdot: vec![random_phase(&mut rng, 1, 3)],
            pdot: vec![random_phase(&mut rng, 1, 3)],
        };
        if poisson_leibniz_defect(&a, &b, &flow) != defect_closed_form(&a, &b, &flow) {
            identity_ok = false;
        }
    }
    report.check(
        identity_ok,
        "poisson defect identity",
        &format!("(d/dt){{A,B}} - {{dA,B}} - {{A,dB}} = -{{A,B}} div, {cases} cases"),
    );

    let mut hamiltonian_ok = true;
    for _ in 0..20 {
        let h = random_phase(&mut rng, 2, 4);
        let flow = Flow::hamiltonian(&h);
        let a = random_phase(&mut rng, 2, 2);
        let b = random_phase(&mut rng, 2, 2);
        if !poisson_leibniz_defect(&a, &b, &flow).is_zero() {
            hamiltonian_ok = false;
        }
    }
    report.check(
        hamiltonian_ok,
        "poisson hamiltonian flows",
        "defect is the zero polynomial for 20 random H",
    );
}

fn iterant_matrix(report: &mut Report, seed: u64, cases: usize) {
    let mut rng = walker_rng(seed, 2);
    let random_eta = |rng: &mut ChaCha8Rng| {
        let part = |rng: &mut ChaCha8Rng| {
            Iterant::new(
                crat(rng.random_range(-9..=9), rng.random_range(1..=5)),
                crat(rng.random_range(-9..=9), rng.random_range(1..=5)),
            )
        };
        EtaElement::new(part(rng), part(rng))
    };
    let mut ok = true;
    for _ in 0..cases {
        let p = random_eta(&mut rng);
        let q = random_eta(&mut rng);
        if (&p * &q).to_matrix() != &p.to_matrix() * &q.to_matrix()
            || (&p + &q).to_matrix() != &p.to_matrix() + &q.to_matrix()
        {
            ok = false;
        }
    }
    report.check(
        ok,
        "iterant-matrix",
        &format!("eta algebra to 2x2 matrices is an exact isomorphism, {cases} pairs"),
    );
}

fn quaternion_suite(report: &mut Report) {
    for convention in [true, false] {
        let q = quaternion_check(convention);
        report.check(
            q.squares_ok && q.ijk_ok && q.cyclic_ok,
            &format!(
                "quaternions ({} convention)",
                if convention { "epsilon-bar" } else { "epsilon" }
            ),
            "i^2 = j^2 = k^2 = ijk = -1 and cyclic products exact",
        );
    }
}

fn perm_theorem(report: &mut Report, seed: u64, cases: usize) {
    let mut rng = walker_rng(seed, 3);
    let mut reconstruction_ok = true;
    for n in 1..=5usize {
        let rows: Vec<Vec<CRat>> = (0..n)
            .map(|_| (0..n).map(|_| crat(rng.random_range(-20..=20), 1)).collect())
            .collect();
        let m = CMatrix::from_rows(rows);
        let comps = perm_decompose(&m).unwrap();
        if perm_reconstruct(n, &comps) != m {
            reconstruction_ok = false;
        }
    }
    report.check(
        reconstruction_ok,
        "perm-theorem reconstruction",
        "M = (1/(n-1)!) sum Delta[M]_pi [pi] for n = 1..5",
    );

    let mut intertwine_ok = true;
    for _ in 0..cases {
        let n = rng.random_range(1..=5usize);
        let v: Vec<CRat> = (0..n)
            .map(|_| crat(rng.random_range(-9..=9), rng.random_range(1..=4)))
            .collect();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        if !perm_conjugation_check(&v, &perm).unwrap() {
            intertwine_ok = false;
        }
    }
    report.check(
        intertwine_ok,
        "perm-theorem intertwining",
        &format!("[pi] Delta = Delta^pi [pi] on {cases} random cases"),
    );
}
