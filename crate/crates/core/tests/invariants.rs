//! Property tests for structural invariants across modules.

use cliffan::algebra::{rational, RMv, Rational};
use cliffan::cli::report::{Check, Params, Report};
use cliffan::integration::{ball_rule, omega, sphere_rule, DEFAULT_RESOLUTION};
use cliffan::moebius::{Generator, VahlenMatrix};
use cliffan::series::MultiIndex;
use cliffan::symcalc::{CliffordPolynomial, RadialExpr, VariableKind};
use proptest::prelude::*;

const N: usize = 3;

fn poly_strategy() -> impl Strategy<Value = CliffordPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, N), 0u32..8, -6i64..=6, 1i64..=4), 0..6).prop_map(|terms| {
        let terms = terms
            .into_iter()
            .map(|(e, b, p, q)| (e, RMv::from_terms(N, [(b, rational(p, q))])));
        CliffordPolynomial::from_terms(N, VariableKind::Vector, 0, terms.collect::<Vec<_>>()).unwrap()
    })
}

fn point_strategy() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=3), N).prop_map(|v| v.into_iter().map(|(p, q)| rational(p, q)).collect())
}

fn generator_strategy() -> impl Strategy<Value = Generator> {
    let vec3 = || prop::collection::vec(-1.0f64..1.0, N);
    let unit3 = || vec3().prop_filter("nonzero", |v| v.iter().map(|a| a * a).sum::<f64>() > 0.01);
    prop_oneof![
        vec3().prop_map(Generator::Translation),
        (0.5f64..2.0).prop_map(Generator::Dilation),
        (unit3(), unit3()).prop_map(|(a, b)| {
            let na = a.iter().map(|v| v * v).sum::<f64>().sqrt();
            let nb = b.iter().map(|v| v * v).sum::<f64>().sqrt();
            Generator::Rotation(a.iter().map(|v| v / na).collect(), b.iter().map(|v| v / nb).collect())
        }),
        Just(Generator::Inversion),
    ]
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let scale = a.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * scale)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_commutes_with_ring_operations(p in poly_strategy(), q in poly_strategy(), x in point_strategy()) {
        let (px, qx) = (p.evaluate(&x), q.evaluate(&x));
        prop_assert_eq!((&p + &q).evaluate(&x), &px + &qx);
        prop_assert_eq!((&p * &q).evaluate(&x), &px * &qx);
    }

    #[test]
    fn polynomial_text_and_json_round_trip(p in poly_strategy()) {
        prop_assert_eq!(CliffordPolynomial::parse(N, VariableKind::Vector, 0, &p.to_text()).unwrap(), p.clone());
        prop_assert_eq!(CliffordPolynomial::from_json_str(&p.to_json_string()).unwrap(), p);
    }

    #[test]
    fn radial_partials_match_finite_differences(p in poly_strategy(), m in -2i32..5, s in 0u32..2, j in 0usize..N) {
        let e = RadialExpr::term(p, m, s).unwrap();
        let d = e.partial(j);
        let x = [0.7, -0.4, 0.5];
        let h = 1e-5;
        let (mut xp, mut xm) = (x, x);
        xp[j] += h;
        xm[j] -= h;
        let fd = (&e.evaluate_f64(&xp).unwrap() - &e.evaluate_f64(&xm).unwrap()).scale(&(0.5 / h));
        let exact = d.evaluate_f64(&x).unwrap();
        prop_assert!(fd.dist(&exact) <= 1e-6 * exact.norm().max(1.0), "{} vs {}", fd.dist(&exact), exact.norm());
    }

    #[test]
    fn fueter_index_counts(n in 2usize..7, j in 0u32..6) {
        let binom = |a: u64, b: u64| (1..=b).fold(1u64, |acc, i| acc * (a + 1 - i) / i);
        let count = MultiIndex::all_of_degree(n, j).len() as u64;
        prop_assert_eq!(count, binom(j as u64 + n as u64 - 2, n as u64 - 2));
    }

    #[test]
    fn composition_is_composition_of_maps(
        g1 in prop::collection::vec(generator_strategy(), 1..4),
        g2 in prop::collection::vec(generator_strategy(), 1..4),
        x in prop::collection::vec(-2.0f64..2.0, N),
    ) {
        let (m1, m2) = (VahlenMatrix::from_generators(N, &g1).unwrap(), VahlenMatrix::from_generators(N, &g2).unwrap());
        let m = m1.compose(&m2);
        prop_assume!(m2.denominator_norm(&x).unwrap() > 0.05 && m.denominator_norm(&x).unwrap() > 0.05);
        let y = m2.apply(&x).unwrap();
        prop_assume!(m1.denominator_norm(&y).unwrap() > 0.05);
        let direct = m.apply(&x).unwrap();
        prop_assert!(close(&direct, &m1.apply(&y).unwrap(), 1e-9));
        prop_assume!(m.inverse().denominator_norm(&direct).unwrap() > 0.05);
        prop_assert!(close(&m.inverse().apply(&direct).unwrap(), &x, 1e-8));
    }

    #[test]
    fn report_pass_flag_and_round_trip(items in prop::collection::vec((0.0f64..1.0, 0.0f64..1.0), 0..8)) {
        let mut r = Report::new("prop", Params { n: 3, seed: 1, ..Default::default() });
        for (i, (res, tol)) in items.iter().enumerate() {
            r.push(Check::new(format!("c{i}"), *res, *tol));
        }
        prop_assert_eq!(r.pass, items.iter().all(|(a, b)| a <= b));
        prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn sphere_and_ball_rules_integrate_area_and_volume() {
    for n in 2..=4usize {
        let c: Vec<f64> = (0..n).map(|i| 0.1 * i as f64 - 0.2).collect();
        let radius = 1.3;
        let s = sphere_rule(n, &c, radius, DEFAULT_RESOLUTION).unwrap();
        let area: f64 = s.nodes.iter().map(|nd| nd.weight).sum();
        let expected = omega(n) * radius.powi(n as i32 - 1);
        assert!((area - expected).abs() <= 1e-10 * expected, "n={n}");
        for nd in &s.nodes {
            let nv = nd.normal.as_ref().unwrap();
            let radial: Vec<f64> = nd.point.iter().zip(&c).map(|(p, q)| (p - q) / radius).collect();
            assert!(close(nv, &radial, 1e-12));
        }
        let b = ball_rule(n, &c, radius, 20).unwrap();
        let vol: f64 = b.nodes.iter().map(|nd| nd.weight).sum();
        let expected = omega(n) * radius.powi(n as i32) / n as f64;
        assert!((vol - expected).abs() <= 1e-10 * expected, "n={n}");
    }
}
