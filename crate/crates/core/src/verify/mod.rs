//! Exact verification of polynomial claims.
//!
//! A claim is either a polynomial identity, a sign condition at a point, or
//! an implication between sign conditions over a convex polygon in two
//! variables. Implications are decided by searching for a point of
//! `hypotheses ∧ ¬conclusion` (see [`prover`]); an empty search is a proof,
//! a point found is an exact counterexample.

pub mod audit;
pub mod bernstein;
pub mod prover;
#[rustfmt::skip]
pub mod registry;

use std::time::Instant;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, BigRat, MPoly, RatMPoly, RealAlgebraic, Sign, UPoly, Var};
pub use bernstein::Point;
pub use prover::{Atom, Budget, Effort, Outcome, Problem, Prover, Relation, WitnessPoint};
pub use registry::{canaries, registry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Proved,
    Refuted,
    BudgetExhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClaimKind {
    Identity,
    SignOnBox,
    ImplicationOnBox,
}

#[derive(Clone, Debug)]
pub enum Body {
    /// `lhs = rhs`, or `lhs - rhs` divisible by `modulo` (a polynomial in
    /// the given variable).
    Identity { lhs: RatMPoly, rhs: RatMPoly, modulo: Option<(MPoly, Var)> },
    /// `hypotheses ⟹ conclusion` on a convex polygon (or segment).
    Region { vars: [Var; 2], region: Vec<Point>, hypotheses: Vec<Atom>, conclusion: Atom },
    /// `poly rel 0` at a rational point.
    Point { poly: MPoly, at: Vec<(Var, BigRat)>, rel: Relation },
    /// `poly rel 0` at a real algebraic number.
    Root { poly: UPoly, at: RealAlgebraic, rel: Relation },
}

#[derive(Clone, Debug)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    /// Auxiliary polynomials introduced by this claim.
    pub polys: Vec<(String, MPoly)>,
    pub body: Body,
    pub note: Option<String>,
}

impl Claim {
    pub fn kind(&self) -> ClaimKind {
        match &self.body {
            Body::Identity { .. } => ClaimKind::Identity,
            Body::Region { hypotheses, .. } if !hypotheses.is_empty() => ClaimKind::ImplicationOnBox,
            _ => ClaimKind::SignOnBox,
        }
    }
}

/// A counterexample in a form that can be re-checked exactly.
#[derive(Clone, Debug)]
pub enum Witness {
    Assignment(Vec<(Var, BigRat)>),
    Plane { vars: [Var; 2], point: WitnessPoint },
    Number(RealAlgebraic),
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: Status,
    pub effort: Effort,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_witness")]
    pub witness: Option<Witness>,
    /// Wall-clock seconds; not serialized.
    #[serde(skip)]
    pub elapsed: f64,
}

fn ser_witness<S: serde::Serializer>(w: &Option<Witness>, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let w = w.as_ref().expect("skipped when absent");
    let entries: Vec<(String, RealAlgebraic)> = match w {
        Witness::Assignment(vs) => {
            vs.iter().map(|(v, x)| (v.name().to_string(), RealAlgebraic::rational(x.clone()))).collect()
        }
        Witness::Plane { vars, point } => {
            let [p, q] = point.coords();
            vec![(vars[0].name().to_string(), p), (vars[1].name().to_string(), q)]
        }
        Witness::Number(x) => vec![("x".to_string(), x.clone())],
    };
    let mut m = s.serialize_map(Some(entries.len()))?;
    for (k, v) in &entries {
        m.serialize_entry(k, v)?;
    }
    m.end()
}

impl Witness {
    pub fn describe(&self) -> String {
        match self {
            Witness::Assignment(vs) => vs.iter().map(|(v, x)| format!("{v}={x}")).collect::<Vec<_>>().join(", "),
            Witness::Plane { vars, point } => {
                let [p, q] = point.coords();
                format!("{}={}, {}={}", vars[0], p, vars[1], q)
            }
            Witness::Number(x) => format!("{x}"),
        }
    }
}

fn report(id: &str, status: Status, effort: Effort, witness: Option<Witness>, start: Instant) -> ClaimReport {
    ClaimReport { id: id.to_string(), status, effort, witness, elapsed: start.elapsed().as_secs_f64() }
}

/// Pseudo-remainder of `p` by `d` in `v`.
pub fn pseudo_remainder(p: &MPoly, d: &MPoly, v: Var) -> MPoly {
    let dd = d.degree_in(v);
    let lc = d.coeff_in(v, dd);
    let mut r = p.clone();
    while !r.is_zero() && r.degree_in(v) >= dd {
        let dr = r.degree_in(v);
        let lr = r.coeff_in(v, dr);
        let shift = crate::algebra::Monomial::from_pairs(&[(v, dr - dd)]);
        r = &(&lc * &r) - &(&lr * &d.mul_monomial(&shift));
    }
    r
}

/// Numerator of `lhs - rhs`, reduced by `modulo` when present.
fn identity_defect(lhs: &RatMPoly, rhs: &RatMPoly, modulo: &Option<(MPoly, Var)>) -> MPoly {
    let diff = lhs - rhs;
    let num = diff.numer().clone();
    match modulo {
        None => num,
        Some((m, v)) => pseudo_remainder(&num, m, *v),
    }
}

/// Small integer point where `p` does not vanish.
fn nonzero_point(p: &MPoly) -> Vec<(Var, BigRat)> {
    let vars = p.variables();
    let n = vars.len();
    for radius in 0i64.. {
        let side = 2 * radius + 1;
        let total = (side as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut pt = Vec::with_capacity(n);
            for &v in &vars {
                pt.push((v, int((c % side as u64) as i64 - radius)));
                c /= side as u64;
            }
            if !p.eval(&pt).expect("bound").is_zero() {
                return pt;
            }
        }
    }
    unreachable!()
}

/// Proved iff the two sides agree as polynomials.
pub fn check_identity(claim: &Claim) -> ClaimReport {
    let start = Instant::now();
    let Body::Identity { lhs, rhs, modulo } = &claim.body else {
        panic!("{} is not an identity", claim.id);
    };
    let defect = identity_defect(lhs, rhs, modulo);
    let effort = Effort { boxes: 0, sturm_calls: 0 };
    if defect.is_zero() {
        report(&claim.id, Status::Proved, effort, None, start)
    } else {
        let w = Witness::Assignment(nonzero_point(&defect));
        report(&claim.id, Status::Refuted, effort, Some(w), start)
    }
}

/// `poly rel 0` over the polygon.
pub fn prove_sign_on_box(
    id: &str,
    vars: [Var; 2],
    region: &[Point],
    poly: &MPoly,
    rel: Relation,
    budget: Budget,
) -> ClaimReport {
    prove_implication_on_box(id, vars, region, &[], &Atom::sign(poly.clone(), rel), budget)
}

/// `hypotheses ⟹ conclusion` over the polygon, by refuting the conjunction
/// of the hypotheses with the negated conclusion.
pub fn prove_implication_on_box(
    id: &str,
    vars: [Var; 2],
    region: &[Point],
    hypotheses: &[Atom],
    conclusion: &Atom,
    budget: Budget,
) -> ClaimReport {
    let start = Instant::now();
    let problem = refutation_problem(vars, region, hypotheses, conclusion);
    let mut prover = Prover::new(&problem, budget);
    let outcome = prover.run();
    let effort = prover.effort;
    match outcome {
        Outcome::Empty => report(id, Status::Proved, effort, None, start),
        Outcome::Witness(point) => report(id, Status::Refuted, effort, Some(Witness::Plane { vars, point }), start),
        Outcome::Exhausted => report(id, Status::BudgetExhausted, effort, None, start),
    }
}

fn refutation_problem(vars: [Var; 2], region: &[Point], hypotheses: &[Atom], conclusion: &Atom) -> Problem {
    let mut atoms = hypotheses.to_vec();
    atoms.push(conclusion.negate());
    Problem { vars, region: region.to_vec(), atoms }
}

pub fn run_claim(claim: &Claim, budget: Budget) -> ClaimReport {
    let start = Instant::now();
    match &claim.body {
        Body::Identity { .. } => check_identity(claim),
        Body::Region { vars, region, hypotheses, conclusion } => {
            prove_implication_on_box(&claim.id, *vars, region, hypotheses, conclusion, budget)
        }
        Body::Point { poly, at, rel } => {
            let v = poly.eval(at).expect("point binds every variable");
            let effort = Effort { boxes: 1, sturm_calls: 0 };
            if rel.holds(Sign::of(&v)) {
                report(&claim.id, Status::Proved, effort, None, start)
            } else {
                report(&claim.id, Status::Refuted, effort, Some(Witness::Assignment(at.clone())), start)
            }
        }
        Body::Root { poly, at, rel } => {
            let effort = Effort { boxes: 1, sturm_calls: 1 };
            if rel.holds(at.sign_of(poly)) {
                report(&claim.id, Status::Proved, effort, None, start)
            } else {
                report(&claim.id, Status::Refuted, effort, Some(Witness::Number(at.clone())), start)
            }
        }
    }
}

/// Exact re-check that `witness` violates `claim`.
pub fn witness_refutes(claim: &Claim, witness: &Witness) -> bool {
    match (&claim.body, witness) {
        (Body::Identity { lhs, rhs, modulo }, Witness::Assignment(at)) => {
            let defect = identity_defect(lhs, rhs, modulo);
            !defect.eval(at).map(|v| v.is_zero()).unwrap_or(true)
        }
        (Body::Region { vars, region, hypotheses, conclusion }, Witness::Plane { vars: wv, point }) => {
            if wv != vars {
                return false;
            }
            let inside = match point {
                WitnessPoint::Rational(p) => in_polygon(region, p),
                WitnessPoint::Algebraic { origin, dir, .. } => {
                    let end = (&origin.0 + &dir.0, &origin.1 + &dir.1);
                    in_polygon(region, origin) && in_polygon(region, &end)
                }
            };
            inside && refutation_problem(*vars, region, hypotheses, conclusion).satisfied_by(point)
        }
        (Body::Point { poly, at, rel }, Witness::Assignment(w)) => {
            w == at && !rel.holds(Sign::of(&poly.eval(at).expect("bound")))
        }
        (Body::Root { poly, at, rel }, Witness::Number(x)) => {
            x.cmp_exact(at) == std::cmp::Ordering::Equal && !rel.holds(x.sign_of(poly))
        }
        _ => false,
    }
}

/// Closed convex polygon (or segment, or point) membership.
pub fn in_polygon(region: &[Point], p: &Point) -> bool {
    let cross =
        |o: &Point, u: &Point, w: &Point| -> BigRat { (&u.0 - &o.0) * (&w.1 - &o.1) - (&u.1 - &o.1) * (&w.0 - &o.0) };
    match region.len() {
        0 => false,
        1 => &region[0] == p,
        2 => {
            let (u, w) = (&region[0], &region[1]);
            if !cross(u, w, p).is_zero() {
                return false;
            }
            let dot = (&p.0 - &u.0) * (&w.0 - &u.0) + (&p.1 - &u.1) * (&w.1 - &u.1);
            let len = (&w.0 - &u.0) * (&w.0 - &u.0) + (&w.1 - &u.1) * (&w.1 - &u.1);
            !dot.is_negative() && dot <= len
        }
        n => {
            let mut sign = Sign::Zero;
            for i in 0..n {
                let s = Sign::of(&cross(&region[i], &region[(i + 1) % n], p));
                if s == Sign::Zero {
                    continue;
                }
                if sign == Sign::Zero {
                    sign = s;
                } else if s != sign {
                    return false;
                }
            }
            true
        }
    }
}

/// Claims whose id matches `pattern` (shell-style glob).
pub fn select<'a>(claims: &'a [Claim], pattern: &str) -> Result<Vec<&'a Claim>, glob::PatternError> {
    let pat = glob::Pattern::new(pattern)?;
    Ok(claims.iter().filter(|c| pat.matches(&c.id)).collect())
}

/// Runs every registered claim matching `filter` in parallel; reports come
/// back in registry order.
pub fn run_lemma_suite(filter: Option<&str>, budget: Budget) -> Result<Vec<ClaimReport>, glob::PatternError> {
    let all = registry();
    let chosen = select(all, filter.unwrap_or("*"))?;
    Ok(chosen.par_iter().map(|c| run_claim(c, budget)).collect())
}

/// Runs the deliberately false claims.
pub fn run_canaries(budget: Budget) -> Vec<(Claim, ClaimReport)> {
    canaries()
        .into_par_iter()
        .map(|c| {
            let r = run_claim(&c, budget);
            (c, r)
        })
        .collect()
}
