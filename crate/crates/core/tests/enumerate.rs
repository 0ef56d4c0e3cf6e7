use cht_core::enumerate::{min_n3, render_markdown, reproduce_table1, scan_region, type_a_table, MinN3, ScanBounds};
use cht_core::typeclass::{classify, Order, Triple, TypeLabel, DEFAULT_MAX_BITS};

fn label(n1: u64, n2: u64, n3: u64) -> TypeLabel {
    classify(&Triple::new(n1, n2, n3).unwrap(), DEFAULT_MAX_BITS).label
}

#[test]
fn table1_rows_match() {
    for row in reproduce_table1() {
        assert!(row.matches(), "{row:?}");
        assert!(row.f_lo <= row.f && row.f <= row.f_hi);
    }
}

#[test]
fn pruned_scan_equals_exhaustive() {
    let b = ScanBounds::cube(3, 30);
    let (mut full, mut pruned) = (Vec::new(), Vec::new());
    let s_full = scan_region(&b, false, |v| full.push((v.triple, v.label)));
    let s_pruned = scan_region(&b, true, |v| pruned.push((v.triple, v.label)));
    assert_eq!(full, pruned);
    assert_eq!(s_full.pruned, 0);
    assert!(s_pruned.pruned > 0);
    assert_eq!(s_full.evaluated, s_pruned.evaluated + s_pruned.pruned);
    let mut sorted = full.clone();
    sorted.sort_by_key(|(t, _)| t.orders());
    assert_eq!(sorted, full);
}

#[test]
fn min_n3_is_the_threshold() {
    for (n1, n2) in [(5, 20), (9, 14), (10, 15), (11, 17), (12, 14), (13, 13), (12, 30)] {
        let row = min_n3(n1, n2, 1 << 20).unwrap();
        match row.min_n3 {
            MinN3::AllFromN2 => assert_eq!(label(n1, n2, n2), TypeLabel::A),
            MinN3::Finite(k) => {
                assert_eq!(label(n1, n2, k), TypeLabel::A, "({n1},{n2},{k})");
                assert_eq!(label(n1, n2, k - 1), TypeLabel::B, "({n1},{n2},{})", k - 1);
            }
            MinN3::None => {
                let t = Triple::ideal_third(n1, n2).unwrap();
                assert_eq!(classify(&t, DEFAULT_MAX_BITS).label, TypeLabel::B);
            }
        }
    }
}

#[test]
fn type_a_samples() {
    let cases = [
        ((10, 15), MinN3::Finite(16)),
        ((11, 17), MinN3::Finite(49)),
        ((12, 14), MinN3::Finite(33)),
        ((13, 13), MinN3::Finite(40)),
    ];
    for ((n1, n2), want) in cases {
        assert_eq!(min_n3(n1, n2, 1 << 20).unwrap().min_n3, want, "({n1},{n2})");
    }
    for n2 in 10..=14 {
        assert_eq!(min_n3(10, n2, 1 << 20).unwrap().min_n3, MinN3::AllFromN2);
    }
}

#[test]
fn table_ends_with_the_ideal_column() {
    let rows = type_a_table(13..=13, 100, 1 << 20).unwrap();
    let last = rows.last().unwrap();
    assert_eq!(last.n2, Order::Infinite);
    assert_eq!(rows.iter().rev().nth(1).unwrap().min_n3, MinN3::None);
    let md = render_markdown(&rows, 100);
    assert!(md.contains("13"));
}

#[test]
fn type_a_is_monotone_on_a_small_cube() {
    let mut a = std::collections::HashSet::new();
    scan_region(&ScanBounds::cube(3, 30), false, |v| {
        if v.label == TypeLabel::A {
            a.insert(v.triple.orders());
        }
    });
    let f = |o: Order| o.finite().unwrap();
    for t in &a {
        let (n1, n2, n3) = (f(t[0]), f(t[1]), f(t[2]));
        if n1 > 3 {
            assert_eq!(label(n1 - 1, n2, n3), TypeLabel::A);
        }
        if n2 > n1 {
            assert_eq!(label(n1, n2 - 1, n3), TypeLabel::A);
        }
        assert_eq!(label(n1, n2, n3 + 1), TypeLabel::A);
        assert_eq!(classify(&Triple::ideal_third(n1, n2).unwrap(), DEFAULT_MAX_BITS).label, TypeLabel::A);
    }
}

#[test]
fn scan_labels_match_exact_classification() {
    scan_region(&ScanBounds::cube(3, 22), false, |v| {
        let [n1, n2, n3] = v.triple.orders().map(|o| o.finite().unwrap());
        assert_eq!(v.label, label(n1, n2, n3), "{}", v.triple);
    });
}
