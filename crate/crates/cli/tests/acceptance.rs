//! Acceptance run: one line per criterion, then a summary.
//!
//! Built with `harness = false` so the lines always show under `cargo test`.
//! The process fails when a criterion fails in a way that is not the single
//! analysed red listed in [`KNOWN_RED`].

use std::collections::HashMap;
use std::time::Instant;

use cht_core::algebra::{int, isolate_roots, rat, sturm_count, BigRat, RatInterval, UPoly, Var};
use cht_core::enumerate::{reproduce_table1, scan_region, type_a_table, MinN3, ScanBounds, TableRow, DEFAULT_N3_CAP};
use cht_core::geometry::{generators_at, oracle_type, radii, reflection_defects, t_upper_f64, word_trace, C64};
use cht_core::typeclass::{classify, goldman_poly, Column, Order, Triple, TypeLabel, DEFAULT_MAX_BITS};
use cht_core::verify::audit::audit_f_derivation;
use cht_core::verify::{registry, run_canaries, run_lemma_suite, witness_refutes, Budget, ClaimKind, Status};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Printed lemma items refuted by exact witnesses; criterion 4 cannot pass
/// while they are registered as printed.
const KNOWN_RED: &[&str] = &["L5.2.1", "L5.2.8", "L5.2.9", "L5.2.11"];

const ORACLE_STEPS: usize = 4000;
const ORACLE_TOL: f64 = 1e-9;

struct Outcome {
    pass: bool,
    /// Failure matches the analysis recorded for the known red.
    expected_red: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Outcome { pass, expected_red: false, detail }
    }
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let rows = reproduce_table1();
    let secs = t.elapsed().as_secs_f64();
    let bad: Vec<String> = rows.iter().filter(|r| !r.matches()).map(|r| r.triple.to_string()).collect();
    let pass = bad.is_empty() && rows.len() == 10 && secs < 5.0;
    Outcome::new(
        pass,
        format!("{}/10 rows match type and 6 significant figures, {secs:.2}s (limit 5s) {bad:?}", 10 - bad.len()),
    )
}

fn expected_type_a() -> HashMap<u64, Vec<(u64, MinN3)>> {
    let mut m = HashMap::new();
    let mut ten: Vec<(u64, MinN3)> = (10..=14).map(|n2| (n2, MinN3::AllFromN2)).collect();
    ten.extend(
        [(15, 16), (16, 17), (17, 19), (18, 21), (19, 24), (20, 27), (21, 31), (22, 36), (23, 44), (24, 59), (25, 113)]
            .map(|(a, b)| (a, MinN3::Finite(b))),
    );
    m.insert(10, ten);
    m.insert(
        11,
        [(11, 12), (12, 14), (13, 16), (14, 19), (15, 23), (16, 31), (17, 49)]
            .map(|(a, b)| (a, MinN3::Finite(b)))
            .to_vec(),
    );
    m.insert(12, [(12, 17), (13, 22), (14, 33)].map(|(a, b)| (a, MinN3::Finite(b))).to_vec());
    m.insert(13, vec![(13, MinN3::Finite(40))]);
    m
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let rows = match type_a_table(10..=13, 1000, DEFAULT_N3_CAP) {
        Ok(r) => r,
        Err(e) => return Outcome::new(false, format!("table failed: {e}")),
    };
    let secs = t.elapsed().as_secs_f64();
    let want = expected_type_a();
    let mut mismatches = Vec::new();
    for n1 in 10..=13u64 {
        let got: Vec<&TableRow> = rows.iter().filter(|r| r.n1 == n1).collect();
        let finite: Vec<(u64, MinN3)> = got
            .iter()
            .filter_map(|r| r.n2.finite().map(|n2| (n2, r.min_n3)))
            .filter(|(_, m)| *m != MinN3::None)
            .collect();
        if finite != want[&n1] {
            mismatches.push(format!("n1={n1}: {finite:?}"));
        }
        let ideal = got.iter().find(|r| r.n2 == Order::Infinite).map(|r| r.min_n3);
        if ideal != Some(MinN3::None) {
            mismatches.push(format!("n1={n1}: ideal row {ideal:?}"));
        }
    }
    let pass = mismatches.is_empty() && secs < 30.0;
    Outcome::new(
        pass,
        format!(
            "n1 in 10..13 rows {} (incl. min_n3 = n2 for n1=10, n2 in 10..14), {secs:.2}s (limit 30s) {mismatches:?}",
            if mismatches.is_empty() { "identical" } else { "differ" }
        ),
    )
}

fn criterion_3() -> Outcome {
    let a = audit_f_derivation();
    let pass = a.report.status == Status::Proved && a.diff.is_empty() && a.terms_f == a.terms_composed;
    Outcome::new(
        pass,
        format!(
            "composed f_B(T_A) vs F: {} differing coefficients, {} = {} terms (the 44 quoted in the criterion is not the monomial count of F, which is {}); W_A trace realizes {}",
            a.diff.len(), a.terms_composed, a.terms_f, a.terms_f, a.trace_probe.realized()
        ),
    )
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let reports = run_lemma_suite(None, Budget::default()).expect("valid pattern");
    let claims = registry();
    let count = |p: &str| claims.iter().filter(|c| c.id.starts_with(p)).count();
    let identities = claims.iter().filter(|c| c.kind() == ClaimKind::Identity).count();
    let not_proved: Vec<&str> = reports.iter().filter(|r| r.status != Status::Proved).map(|r| r.id.as_str()).collect();
    let refuted_ok = reports.iter().filter(|r| r.status == Status::Refuted).all(|r| {
        let c = claims.iter().find(|c| c.id == r.id).expect("registered");
        r.witness.as_ref().is_some_and(|w| witness_refutes(c, w))
    });
    let canaries = run_canaries(Budget::default());
    let caught = canaries
        .iter()
        .filter(|(c, r)| r.status == Status::Refuted && r.witness.as_ref().is_some_and(|w| witness_refutes(c, w)))
        .count();
    let secs = t.elapsed().as_secs_f64();
    let counts_ok =
        count("L5.1.") >= 10 && count("L5.2.") == 11 && count("L5.3.") == 3 && count("L4.2.") >= 1 && identities >= 12;
    let canaries_ok = canaries.len() == 10 && caught == 10;
    let pass = not_proved.is_empty() && counts_ok && canaries_ok && secs < 600.0;
    let expected_red = !pass
        && counts_ok
        && canaries_ok
        && refuted_ok
        && not_proved == KNOWN_RED
        && reports.iter().filter(|r| r.id.starts_with("E5.2.")).all(|r| r.status == Status::Proved);
    let detail = format!(
        "{} claims (L5.1 {}, L5.2 {}, L5.3 {}, L4.2 {}, {} identities), {} proved, not proved {:?} (refuted with exact witnesses: {}), errata E5.2.* proved, canaries refuted {}/10, {secs:.1}s",
        reports.len(),
        count("L5.1."),
        count("L5.2."),
        count("L5.3."),
        count("L4.2."),
        identities,
        reports.len() - not_proved.len(),
        not_proved,
        refuted_ok,
        caught,
    );
    Outcome { pass, expected_red, detail }
}

fn random_triple(rng: &mut impl Rng) -> Triple {
    let mut n: Vec<u64> = (0..3).map(|_| rng.gen_range(3..=200)).collect();
    n.sort();
    Triple::new(n[0], n[1], n[2]).unwrap()
}

fn criterion_5() -> Outcome {
    let mut disagree = Vec::new();
    let table: Vec<Triple> =
        cht_core::enumerate::TABLE1.iter().map(|&((a, b, c), _, _)| Triple::new(a, b, c).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut random = Vec::new();
    while random.len() < 200 {
        let t = random_triple(&mut rng);
        let v = classify(&t, DEFAULT_MAX_BITS);
        if v.f_mid().is_some_and(|f| f.abs() > 1e-3) {
            random.push(t);
        }
    }
    for t in table.iter().chain(&random) {
        let poly = classify(t, DEFAULT_MAX_BITS).label;
        match oracle_type(t, ORACLE_STEPS, ORACLE_TOL) {
            Ok(v) if v.label == poly => {}
            other => disagree.push(format!("{t}: {poly:?} vs {:?}", other.map(|v| v.label))),
        }
    }
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let r = radii(&random_triple(&mut rng));
        let t = rng.gen_range(-1.0..=t_upper_f64(r));
        let g = generators_at(r, t);
        worst = worst.max(reflection_defects(&g));
        for (w, rk) in [([1, 2], r[2]), ([2, 3], r[0]), ([1, 3], r[1])] {
            worst = worst.max((word_trace(&w, &g) - C64::new(4.0 * rk * rk - 1.0, 0.0)).norm());
        }
    }
    let pass = disagree.is_empty() && worst <= 1e-10;
    Outcome::new(
        pass,
        format!("oracle agrees on {}/{} triples (10 table + 200 random with |F| > 1e-3); worst matrix defect {worst:.1e} over 200 configurations {disagree:?}",
            210 - disagree.len(), 210),
    )
}

fn criterion_6() -> Outcome {
    const HI: u64 = 120;
    let mut labels: HashMap<[u64; 3], TypeLabel> = HashMap::new();
    scan_region(&ScanBounds::cube(3, HI), false, |v| {
        labels.insert(v.triple.orders().map(|o| o.finite().unwrap()), v.label);
    });
    let undecided = labels.values().filter(|l| **l == TypeLabel::Indeterminate).count();
    let outside = |n1: u64, n2: u64, n3: Order| {
        Column::new(Order::Finite(n1), Order::Finite(n2)).classify(n3, DEFAULT_MAX_BITS).unwrap().label
    };
    let mut checked = 0u64;
    let mut violations = Vec::new();
    let mut type_a: Vec<&[u64; 3]> = labels.iter().filter(|(_, l)| **l == TypeLabel::A).map(|(k, _)| k).collect();
    type_a.sort();
    for &&[n1, n2, n3] in &type_a {
        let mut neighbours: Vec<(String, TypeLabel)> = Vec::new();
        if n1 > 3 {
            neighbours.push((format!("({},{n2},{n3})", n1 - 1), labels[&[n1 - 1, n2, n3]]));
        }
        if n2 > n1 {
            neighbours.push((format!("({n1},{},{n3})", n2 - 1), labels[&[n1, n2 - 1, n3]]));
        }
        let up = labels.get(&[n1, n2, n3 + 1]).copied().unwrap_or_else(|| outside(n1, n2, Order::Finite(n3 + 1)));
        neighbours.push((format!("({n1},{n2},{})", n3 + 1), up));
        neighbours.push((format!("({n1},{n2},inf)"), outside(n1, n2, Order::Infinite)));
        for (name, l) in neighbours {
            checked += 1;
            if l != TypeLabel::A {
                violations.push(format!("({n1},{n2},{n3}) -> {name}"));
            }
        }
    }
    let pass = violations.is_empty() && undecided == 0;
    Outcome::new(
        pass,
        format!("{} type-A triples of {} in [3,{HI}]^3, {checked} neighbours checked, {} violations, {undecided} undecided {:?}",
            type_a.len(), labels.len(), violations.len(), violations.iter().take(5).collect::<Vec<_>>()),
    )
}

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: 1000, rng_seed: RngSeed::Fixed(7), failure_persistence: None, ..Config::default() })
}

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-20i64..=20, 1..=max_deg + 1).prop_map(|c| UPoly::from_ints(&c))
}

fn criterion_7() -> Outcome {
    let mut results = Vec::new();

    let sturm = runner().run(
        &(prop::collection::vec(small_rat(), 0..6), 1i64..30, small_rat(), 1i64..=100),
        |(roots, k, lo, w)| {
            let mut p = UPoly::from_ints(&[k, 0, 1]);
            for r in &roots {
                p = &p * &UPoly::linear_root(r);
            }
            let hi = &lo + int(w);
            let mut inside: Vec<&BigRat> = roots.iter().filter(|r| **r > lo && **r <= hi).collect();
            inside.sort();
            inside.dedup();
            prop_assert_eq!(sturm_count(&p, &lo, &hi), inside.len());
            let ivs = isolate_roots(&p, &lo, &hi);
            let at_lo = usize::from(roots.contains(&lo));
            prop_assert_eq!(ivs.len(), inside.len() + at_lo);
            for iv in &ivs {
                prop_assert!(roots.iter().filter(|r| iv.contains(r)).count() >= 1);
            }
            Ok(())
        },
    );
    results.push(("sturm-vs-isolation", sturm.map_err(|e| e.to_string())));

    let divrem = runner().run(&(upoly(9), upoly(5)), |(a, b)| {
        if b.is_zero() {
            return Ok(());
        }
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        Ok(())
    });
    results.push(("divrem", divrem.map_err(|e| e.to_string())));

    let containment =
        runner().run(&(small_rat(), small_rat(), small_rat(), small_rat(), upoly(5)), |(p, q, r, s, f)| {
            let x = RatInterval::spanning(p.clone(), q.clone());
            let y = RatInterval::spanning(r.clone(), s.clone());
            let (sum, prod, fx) = (&x + &y, &x * &y, f.eval_interval(&x));
            let mid = x.midpoint();
            for u in [&p, &q, &mid] {
                prop_assert!(fx.contains(&f.eval(u)));
                for v in [&r, &s] {
                    prop_assert!(sum.contains(&(u + v)));
                    prop_assert!(prod.contains(&(u * v)));
                }
            }
            Ok(())
        });
    results.push(("interval containment", containment.map_err(|e| e.to_string())));

    let g = goldman_poly();
    let goldman = runner().run(&small_rat(), |tau| {
        let v = g.eval(&[(Var::X, tau.clone()), (Var::Y, BigRat::zero())]).unwrap();
        let three = int(3);
        let d = &tau - &three;
        prop_assert_eq!(v, (&tau + BigRat::one()) * &d * &d * &d);
        Ok(())
    });
    results.push(("goldman factorization", goldman.map_err(|e| e.to_string())));

    let failed: Vec<String> =
        results.iter().filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}"))).collect();
    Outcome::new(failed.is_empty(), format!("{} suites x 1000 cases, seed 7 {failed:?}", results.len()))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 7] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (k, f) in criteria {
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && o.expected_red { " [known red: printed items refuted, see witnesses]" } else { "" };
        println!("criterion {k}: {tag}{note} - {}", o.detail);
        passed += usize::from(o.pass);
        unexpected += usize::from(!o.pass && !o.expected_red);
    }
    println!("acceptance: {passed}/7 pass, {unexpected} unexpected failures");
    if unexpected > 0 {
        std::process::exit(1);
    }
}
