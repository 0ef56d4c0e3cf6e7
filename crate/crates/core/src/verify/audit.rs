//! Re-derivation of `F` from the trace discriminant, plus a numerical probe
//! of which trace constant the reflection matrices realize for `W_A`.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use super::{ClaimReport, Effort, Status};
use crate::algebra::Monomial;
use crate::geometry::{generators_at, lemma_trace_values, word_trace, W_A};
use crate::typeclass::{build_f, build_f_b, t_a_poly};

/// One coefficient where the composed polynomial and `F` disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermDiff {
    pub monomial: String,
    pub composed: String,
    pub expected: String,
}

/// Which of the two candidate constants the matrix traces of `W_A` follow.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceProbe {
    pub samples: usize,
    /// Samples where `tr W_A` matches `16 r1^2 r2^2 + 4 r3^2 - 16 r1 r2 r3 t`.
    pub match_tau: usize,
    /// Samples where it matches that value minus one.
    pub match_tau_minus_one: usize,
    pub worst_dev_tau: f64,
    pub worst_dev_tau_minus_one: f64,
}

impl TraceProbe {
    pub fn realized(&self) -> &'static str {
        if self.match_tau == self.samples {
            "tau"
        } else if self.match_tau_minus_one == self.samples {
            "tau - 1"
        } else {
            "neither"
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Arbiter {
    /// The polynomial decides types.
    Polynomial,
    /// The derivation disagreed; the matrix oracle should arbitrate.
    MatrixOracle,
}

#[derive(Clone, Debug, Serialize)]
pub struct FAudit {
    pub report: ClaimReport,
    pub terms_f: usize,
    pub terms_composed: usize,
    pub diff: Vec<TermDiff>,
    pub arbiter: Arbiter,
    pub trace_probe: TraceProbe,
}

const PROBE_TOL: f64 = 1e-8;

/// Deterministic low-discrepancy samples of radii in `[1/2, 1)` and `t` in `[-1, 1]`.
fn probe_points(n: usize) -> impl Iterator<Item = ([f64; 3], f64)> {
    let alphas = [0.618_033_988_749_895, 0.414_213_562_373_095, 0.732_050_807_568_877, 0.236_067_977_499_79];
    (1..=n).map(move |i| {
        let u = |k: usize| (i as f64 * alphas[k]).fract();
        ([0.5 + 0.5 * u(0), 0.5 + 0.5 * u(1), 0.5 + 0.5 * u(2)], -1.0 + 2.0 * u(3))
    })
}

pub fn trace_probe(samples: usize) -> TraceProbe {
    let mut p =
        TraceProbe { samples, match_tau: 0, match_tau_minus_one: 0, worst_dev_tau: 0.0, worst_dev_tau_minus_one: 0.0 };
    for (r, t) in probe_points(samples) {
        let tr = word_trace(&W_A, &generators_at(r, t));
        let tau = lemma_trace_values(r, t).tau_a;
        let d0 = (tr.re - tau).abs().max(tr.im.abs());
        let d1 = (tr.re - (tau - 1.0)).abs().max(tr.im.abs());
        p.worst_dev_tau = p.worst_dev_tau.max(d0);
        p.worst_dev_tau_minus_one = p.worst_dev_tau_minus_one.max(d1);
        p.match_tau += usize::from(d0 < PROBE_TOL);
        p.match_tau_minus_one += usize::from(d1 < PROBE_TOL);
    }
    p
}

/// Composes `f_B` with `T = (ab + c - 4)/16` and compares with `F` term by term.
pub fn audit_f_derivation() -> FAudit {
    let start = Instant::now();
    let f = build_f();
    let composed = build_f_b().compose(&[(crate::algebra::Var::T, t_a_poly())]);
    let (num, den) = composed.into_parts();
    let mut monomials: Vec<&Monomial> = num.terms().map(|(m, _)| m).chain(f.terms().map(|(m, _)| m)).collect();
    monomials.sort();
    monomials.dedup();
    let diff: Vec<TermDiff> = monomials
        .into_iter()
        .filter_map(|m| {
            let lhs = num.coeff(m);
            let rhs = f.coeff(m) * &den;
            (lhs != rhs).then(|| TermDiff {
                monomial: m.to_string(),
                composed: fraction(&lhs, &den),
                expected: f.coeff(m).to_string(),
            })
        })
        .collect();
    let ok = diff.is_empty();
    FAudit {
        report: ClaimReport {
            id: "AUDIT.F".into(),
            status: if ok { Status::Proved } else { Status::Refuted },
            effort: Effort::default(),
            witness: None,
            elapsed: start.elapsed().as_secs_f64(),
        },
        terms_f: f.num_terms(),
        terms_composed: num.num_terms(),
        diff,
        arbiter: if ok { Arbiter::Polynomial } else { Arbiter::MatrixOracle },
        trace_probe: trace_probe(50),
    }
}

fn fraction(n: &BigInt, d: &BigInt) -> String {
    let q = num_rational::BigRational::new(n.clone(), d.clone());
    q.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Var};

    #[test]
    fn derivation_matches() {
        let a = audit_f_derivation();
        assert_eq!(a.report.status, Status::Proved, "{:?}", a.diff);
        assert_eq!(a.terms_f, a.terms_composed);
        assert_eq!(a.arbiter, Arbiter::Polynomial);
    }

    #[test]
    fn compose_then_eval() {
        let pt = [(Var::A, int(4)), (Var::B, int(4)), (Var::C, int(4))];
        let composed = build_f_b().compose(&[(Var::T, t_a_poly())]);
        assert_eq!(composed.eval(&pt).unwrap(), build_f().eval(&pt).unwrap());
    }

    #[test]
    fn probe_is_decisive() {
        let p = trace_probe(50);
        assert_ne!(p.realized(), "neither", "{p:?}");
    }
}
