//! Tables of type-A triples, minimal third orders, and bulk scans.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::RatInterval;
use crate::typeclass::{
    angle_params, classify, f_enclosure, Column, Method, Order, Triple, TripleError, TypeLabel, TypeVerdict,
    DEFAULT_BITS, DEFAULT_MAX_BITS,
};

pub const DEFAULT_N2_MAX: u64 = 1000;
pub const DEFAULT_N3_CAP: u64 = 1 << 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("type of {triple} undecided at {bits} bits")]
    Indeterminate { triple: Triple, bits: u32 },
    #[error("no type-A n3 <= {cap} for ({n1},{n2},n3) although n3 = inf is type A")]
    CapExceeded { n1: u64, n2: u64, cap: u64 },
    #[error(transparent)]
    Triple(#[from] TripleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "n3", rename_all = "snake_case")]
pub enum MinN3 {
    /// Every `n3 >= n2` gives type A.
    AllFromN2,
    /// Smallest type-A `n3`, larger than `n2`.
    Finite(u64),
    /// Type B even at `n3 = inf`.
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n1: u64,
    pub n2: Order,
    pub min_n3: MinN3,
}

fn decided(triple: Triple) -> Result<TypeLabel, EnumerateError> {
    let v = classify(&triple, DEFAULT_MAX_BITS);
    match v.label {
        TypeLabel::Indeterminate => Err(EnumerateError::Indeterminate { triple, bits: v.precision_bits }),
        l => Ok(l),
    }
}

fn is_a(col: &Column, n3: Order) -> Result<bool, EnumerateError> {
    let v = col.classify(n3, DEFAULT_MAX_BITS)?;
    match v.label {
        TypeLabel::Indeterminate => Err(EnumerateError::Indeterminate { triple: v.triple, bits: v.precision_bits }),
        l => Ok(l == TypeLabel::A),
    }
}

/// Smallest `n3 >= n2` making `(n1, n2, n3)` type A. Type A is upward closed
/// in `n3`, so the search checks `inf` first, then doubles, then bisects.
pub fn min_n3(n1: u64, n2: u64, n3_cap: u64) -> Result<TableRow, EnumerateError> {
    let row = |min_n3| TableRow { n1, n2: Order::Finite(n2), min_n3 };
    Triple::new(n1, n2, n2)?;
    let col = Column::new(Order::Finite(n1), Order::Finite(n2));
    let a_at = |n3| is_a(&col, Order::Finite(n3));
    if !is_a(&col, Order::Infinite)? {
        return Ok(row(MinN3::None));
    }
    if a_at(n2)? {
        return Ok(row(MinN3::AllFromN2));
    }
    let (mut lo, mut hi) = (n2, n2.saturating_mul(2));
    loop {
        if hi > n3_cap {
            if lo < n3_cap && a_at(n3_cap)? {
                hi = n3_cap;
                break;
            }
            return Err(EnumerateError::CapExceeded { n1, n2, cap: n3_cap });
        }
        if a_at(hi)? {
            break;
        }
        lo = hi;
        hi = hi.saturating_mul(2);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if a_at(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(row(MinN3::Finite(hi)))
}

/// `(n1, inf, inf)`: type A means every `n2, n3` works.
fn infinite_column(n1: u64) -> Result<TableRow, EnumerateError> {
    let t = Triple::from_orders(Order::Finite(n1), Order::Infinite, Order::Infinite)?;
    let min_n3 = if decided(t)? == TypeLabel::A { MinN3::AllFromN2 } else { MinN3::None };
    Ok(TableRow { n1, n2: Order::Infinite, min_n3 })
}

/// Rows for each `n1` in the range and `n1 <= n2 <= n2_max`, stopping at
/// the first `None` row (larger `n2` stay type B), followed by the `n2 = inf`
/// row.
pub fn type_a_table(
    n1_range: std::ops::RangeInclusive<u64>,
    n2_max: u64,
    n3_cap: u64,
) -> Result<Vec<TableRow>, EnumerateError> {
    let per_n1: Vec<Result<Vec<TableRow>, EnumerateError>> = n1_range
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n1| {
            let mut rows = Vec::new();
            let mut n2 = n1;
            while n2 <= n2_max {
                let row = min_n3(n1, n2, n3_cap)?;
                rows.push(row);
                if row.min_n3 == MinN3::None {
                    break;
                }
                n2 += 1;
            }
            rows.push(infinite_column(n1)?);
            Ok(rows)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_n1 {
        out.extend(r?);
    }
    Ok(out)
}

/// Markdown rendering with one row per `(n1, n2)`; runs of
/// `AllFromN2` rows collapse to a range and `None` rows are omitted.
pub fn render_markdown(rows: &[TableRow], n2_max: u64) -> String {
    let mut s = String::from("| n1 | n2 | n3 |\n|---|---|---|\n");
    let mut i = 0;
    while i < rows.len() {
        let r = rows[i];
        match (r.n2, r.min_n3) {
            (Order::Finite(start), MinN3::AllFromN2) => {
                let mut j = i;
                while j + 1 < rows.len()
                    && rows[j + 1].n1 == r.n1
                    && rows[j + 1].min_n3 == MinN3::AllFromN2
                    && matches!(rows[j + 1].n2, Order::Finite(_))
                {
                    j += 1;
                }
                let end = match rows[j].n2 {
                    Order::Finite(e) => e,
                    Order::Infinite => unreachable!(),
                };
                let inf_a = rows
                    .get(j + 1)
                    .is_some_and(|x| x.n1 == r.n1 && x.n2 == Order::Infinite && x.min_n3 == MinN3::AllFromN2);
                let n2 = if end == n2_max && inf_a {
                    format!("n2 >= {start} (checked to {n2_max} and inf)")
                } else if start == end {
                    format!("n2 = {start}")
                } else {
                    format!("{start} <= n2 <= {end}")
                };
                let _ = writeln!(s, "| {} | {} | n3 >= n2 |", r.n1, n2);
                i = j + 1;
                if inf_a && end == n2_max {
                    i += 1;
                }
                continue;
            }
            (Order::Finite(n2), MinN3::Finite(m)) => {
                let _ = writeln!(s, "| {} | n2 = {} | n3 >= {} |", r.n1, n2, m);
            }
            (Order::Infinite, MinN3::AllFromN2) => {
                let _ = writeln!(s, "| {} | n2 = inf | n3 = inf |", r.n1);
            }
            _ => {}
        }
        i += 1;
    }
    s
}

/// Printed rows of the table of sample values: triple, value of `F`, type.
pub const TABLE1: [((u64, u64, u64), f64, TypeLabel); 10] = [
    ((3, 3, 10), 114.048, TypeLabel::A),
    ((8, 14, 100), 1.47849, TypeLabel::A),
    ((9, 14, 15), 0.174308, TypeLabel::A),
    ((9, 14, 100), 0.708976, TypeLabel::A),
    ((9, 15, 15), 0.114194, TypeLabel::A),
    ((9, 50, 100), 0.0401673, TypeLabel::A),
    ((14, 14, 14), -0.0446055, TypeLabel::B),
    ((15, 17, 30), -0.0928291, TypeLabel::B),
    ((20, 30, 50), -0.0359106, TypeLabel::B),
    ((100, 200, 4000), -0.0000616233, TypeLabel::B),
];

#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    pub triple: Triple,
    pub printed_f: f64,
    pub printed_type: TypeLabel,
    pub f_lo: f64,
    pub f_hi: f64,
    pub f: f64,
    pub label: TypeLabel,
}

impl Table1Row {
    /// Agreement of the computed value with the printed one to six
    /// significant figures, and of the type.
    pub fn matches(&self) -> bool {
        self.label == self.printed_type && same_sig_figs(self.f, self.printed_f, 6)
    }
}

/// Whether `x` rounds to `printed` at `digits` significant figures.
pub fn same_sig_figs(x: f64, printed: f64, digits: i32) -> bool {
    if printed == 0.0 {
        return x == 0.0;
    }
    let e = printed.abs().log10().floor() as i32 - (digits - 1);
    let unit = 10f64.powi(e);
    (x / unit).round() == (printed / unit).round()
}

/// `F` at a triple to relative width `rel`, raising the precision as needed.
pub fn f_value(triple: &Triple, rel: f64) -> RatInterval {
    let mut bits = DEFAULT_BITS;
    loop {
        let p = angle_params(triple, bits);
        let e = f_enclosure(p.a(), p.b(), p.c());
        let w = e.hi_f64() - e.lo_f64();
        if w <= rel * e.mid_f64().abs() || bits >= DEFAULT_MAX_BITS {
            return e;
        }
        bits *= 2;
    }
}

pub fn reproduce_table1() -> Vec<Table1Row> {
    TABLE1
        .iter()
        .map(|&((n1, n2, n3), printed_f, printed_type)| {
            let triple = Triple::new(n1, n2, n3).expect("ordered table triple");
            let e = f_value(&triple, 1e-12);
            Table1Row {
                triple,
                printed_f,
                printed_type,
                f_lo: e.lo_f64(),
                f_hi: e.hi_f64(),
                f: e.mid_f64(),
                label: classify(&triple, DEFAULT_MAX_BITS).label,
            }
        })
        .collect()
}

/// Inclusive bounds on each order for a scan over ordered triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBounds {
    pub n1: (u64, u64),
    pub n2: (u64, u64),
    pub n3: (u64, u64),
}

impl ScanBounds {
    pub fn cube(lo: u64, hi: u64) -> Self {
        ScanBounds { n1: (lo, hi), n2: (lo, hi), n3: (lo, hi) }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanStats {
    pub evaluated: u64,
    pub pruned: u64,
}

/// Classifies every ordered triple within `bounds`, in lexicographic order.
/// With `prune`, once `(n1, n2, n3)` is type A the larger `n3` are reported
/// as type A without evaluation.
pub fn scan_region(bounds: &ScanBounds, prune: bool, mut emit: impl FnMut(&TypeVerdict)) -> ScanStats {
    let mut pairs = Vec::new();
    for n1 in bounds.n1.0.max(3)..=bounds.n1.1 {
        for n2 in bounds.n2.0.max(n1)..=bounds.n2.1 {
            pairs.push((n1, n2));
        }
    }
    let columns: Vec<(Vec<TypeVerdict>, ScanStats)> = pairs
        .par_iter()
        .map(|&(n1, n2)| {
            let mut out = Vec::new();
            let mut stats = ScanStats::default();
            let mut found = false;
            let column = Column::new(Order::Finite(n1), Order::Finite(n2));
            for n3 in bounds.n3.0.max(n2)..=bounds.n3.1 {
                let triple = Triple::new(n1, n2, n3).expect("ordered by construction");
                if found {
                    stats.pruned += 1;
                    out.push(TypeVerdict {
                        triple,
                        f_enclosure: None,
                        label: TypeLabel::A,
                        precision_bits: 0,
                        method: Method::Pruned,
                    });
                    continue;
                }
                stats.evaluated += 1;
                let v = column.classify(Order::Finite(n3), DEFAULT_MAX_BITS).expect("ordered by construction");
                found = prune && v.label == TypeLabel::A;
                out.push(v);
            }
            (out, stats)
        })
        .collect();
    let mut total = ScanStats::default();
    for (vs, st) in columns {
        total.evaluated += st.evaluated;
        total.pruned += st.pruned;
        vs.iter().for_each(&mut emit);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_figs() {
        assert!(same_sig_figs(114.04812, 114.048, 6));
        assert!(!same_sig_figs(114.0486, 114.048, 6));
        assert!(same_sig_figs(-0.00006162334, -0.0000616233, 6));
    }

    #[test]
    fn type_a_samples() {
        assert_eq!(min_n3(10, 15, DEFAULT_N3_CAP).unwrap().min_n3, MinN3::Finite(16));
        assert_eq!(min_n3(13, 13, DEFAULT_N3_CAP).unwrap().min_n3, MinN3::Finite(40));
        assert_eq!(min_n3(10, 12, DEFAULT_N3_CAP).unwrap().min_n3, MinN3::AllFromN2);
        assert_eq!(min_n3(14, 14, DEFAULT_N3_CAP).unwrap().min_n3, MinN3::None);
    }

    #[test]
    fn cap_is_reported() {
        assert_eq!(min_n3(10, 25, 100), Err(EnumerateError::CapExceeded { n1: 10, n2: 25, cap: 100 }));
        assert_eq!(min_n3(10, 25, 113).unwrap().min_n3, MinN3::Finite(113));
    }

    #[test]
    fn markdown_collapses_ranges() {
        let rows = type_a_table(10..=10, 40, DEFAULT_N3_CAP).unwrap();
        let md = render_markdown(&rows, 40);
        assert!(md.contains("| 10 | 10 <= n2 <= 14 | n3 >= n2 |"), "{md}");
        assert!(md.contains("| 10 | n2 = 25 | n3 >= 113 |"), "{md}");
    }

    #[test]
    fn pruning_skips_work() {
        let mut n = 0;
        let st = scan_region(&ScanBounds::cube(3, 12), true, |_| n += 1);
        assert!(st.pruned > 0);
        assert_eq!(st.evaluated + st.pruned, n);
    }
}
