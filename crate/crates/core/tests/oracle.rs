use cht_core::algebra::{int, Var};
use cht_core::enumerate::TABLE1;
use cht_core::geometry::{
    generators_at, goldman_classify, hermitian_signature, lemma_trace_values, oracle_report, oracle_type, radii,
    reflection_defects, t_upper_f64, word_trace, GeometryError, C64, W_A, W_B,
};
use cht_core::typeclass::{build_f, classify, Order, Triple, TypeLabel, DEFAULT_MAX_BITS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const STEPS: usize = 4000;
const TOL: f64 = 1e-9;

fn random_triple(rng: &mut impl Rng) -> Triple {
    let mut n: Vec<u64> = (0..3).map(|_| rng.gen_range(3..=60)).collect();
    n.sort();
    Triple::new(n[0], n[1], n[2]).unwrap()
}

#[test]
fn oracle_agrees_on_sample_table() {
    for &((n1, n2, n3), _, printed) in &TABLE1 {
        let t = Triple::new(n1, n2, n3).unwrap();
        let poly = classify(&t, DEFAULT_MAX_BITS).label;
        let oracle = oracle_type(&t, STEPS, TOL).unwrap().label;
        assert_eq!(poly, printed, "{t}");
        assert_eq!(oracle, poly, "{t}");
    }
}

#[test]
fn oracle_agrees_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 60 {
        let t = random_triple(&mut rng);
        let v = classify(&t, DEFAULT_MAX_BITS);
        if v.f_mid().unwrap().abs() <= 1e-3 {
            continue;
        }
        assert_eq!(oracle_type(&t, STEPS, TOL).unwrap().label, v.label, "{t}");
        checked += 1;
    }
}

#[test]
fn reflections_satisfy_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let r = radii(&random_triple(&mut rng));
        let t = rng.gen_range(-1.0..=t_upper_f64(r));
        let g = generators_at(r, t);
        assert!(reflection_defects(&g) < 1e-10);
        for (w, rk) in [([1, 2], r[2]), ([2, 3], r[0]), ([1, 3], r[1])] {
            let tr = word_trace(&w, &g);
            assert!((tr - C64::new(4.0 * rk * rk - 1.0, 0.0)).norm() < 1e-10);
        }
    }
}

#[test]
fn closed_form_traces_match_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let r = [rng.gen_range(0.5..1.0), rng.gen_range(0.5..1.0), rng.gen_range(0.5..1.0)];
        let t = rng.gen_range(-1.0..=1.0);
        let g = generators_at(r, t);
        let v = lemma_trace_values(r, t);
        assert!((word_trace(&W_B, &g) - C64::new(v.tau_b.0, v.tau_b.1)).norm() < 1e-10);
        // W_A realizes the closed form shifted by one.
        assert!((word_trace(&W_A, &g) - C64::new(v.tau_a - 1.0, 0.0)).norm() < 1e-10);
    }
}

#[test]
fn admissible_configurations_are_lorentzian() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let r = radii(&random_triple(&mut rng));
        let tu = t_upper_f64(r);
        let t = -1.0 + (tu + 1.0) * rng.gen_range(0.05..0.95);
        let s = hermitian_signature(&generators_at(r, t).form.g).unwrap();
        assert_eq!((s.positive, s.negative), (2, 1));
    }
}

#[test]
fn equilateral_three_is_degenerate() {
    let t = Triple::new(3, 3, 3).unwrap();
    let f = build_f().eval(&[(Var::A, int(1)), (Var::B, int(1)), (Var::C, int(1))]).unwrap();
    assert_eq!(f, int(0));
    assert_eq!(classify(&t, DEFAULT_MAX_BITS).label, TypeLabel::B);
    assert!(matches!(oracle_report(&t, STEPS, TOL), Err(GeometryError::EmptyDeformation(_))));
}

#[test]
fn ideal_triangle_sits_on_the_zero_set() {
    let f = build_f().eval(&[(Var::A, int(4)), (Var::B, int(4)), (Var::C, int(4))]).unwrap();
    assert_eq!(f, int(0));
    let t = Triple::from_orders(Order::Infinite, Order::Infinite, Order::Infinite).unwrap();
    assert_eq!(classify(&t, DEFAULT_MAX_BITS).label, TypeLabel::B);
}

#[test]
fn elliptic_words_at_transition_point() {
    let t = Triple::new(9, 14, 15).unwrap();
    let rep = oracle_report(&t, STEPS, TOL).unwrap();
    let ta = rep.t_star_a.unwrap();
    let r = radii(&t);
    assert!(goldman_classify(word_trace(&W_A, &generators_at(r, ta + 1e-6))).is_elliptic());
    assert!(!goldman_classify(word_trace(&W_A, &generators_at(r, ta - 1e-6))).is_elliptic());
    assert!(rep.t_star_b.is_none_or(|tb| tb > ta));
}

#[test]
fn f_midpoint_tracks_exact_value() {
    // a = b = c = 2 is (4,4,4): both sides exact.
    let t = Triple::new(4, 4, 4).unwrap();
    let exact = build_f().eval(&[(Var::A, int(2)), (Var::B, int(2)), (Var::C, int(2))]).unwrap();
    let v = classify(&t, DEFAULT_MAX_BITS);
    assert_eq!(exact, int(20));
    assert!(v.f_enclosure.unwrap().contains(&exact));
    assert_eq!(v.label, TypeLabel::A);
}
