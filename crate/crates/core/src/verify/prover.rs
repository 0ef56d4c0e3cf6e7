//! Refutation of semialgebraic conjunctions over planar polygons.
//!
//! A conjunction of atoms is shown empty on a convex polygon by
//! triangle subdivision with Bernstein enclosures. Triangles where every atom
//! is monotone along a fixed direction are reduced to their exit edges, which
//! are decided exactly by a one-dimensional sign decomposition.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::bernstein::{barycentric_direction, Patch, Point};
use crate::algebra::{int, to_f64, BigRat, MPoly, RatMPoly, RealAlgebraic, Sign, UPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
}

impl Relation {
    pub fn negate(self) -> Relation {
        match self {
            Relation::Gt => Relation::Le,
            Relation::Ge => Relation::Lt,
            Relation::Lt => Relation::Ge,
            Relation::Le => Relation::Gt,
            Relation::Eq => Relation::Ne,
            Relation::Ne => Relation::Eq,
        }
    }

    /// Truth of `x rel 0` given the sign of `x`.
    pub fn holds(self, s: Sign) -> bool {
        match self {
            Relation::Gt => s == Sign::Positive,
            Relation::Ge => s != Sign::Negative,
            Relation::Lt => s == Sign::Negative,
            Relation::Le => s != Sign::Positive,
            Relation::Eq => s == Sign::Zero,
            Relation::Ne => s != Sign::Zero,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ne => "!=",
        }
    }
}

fn ord_sign(o: Ordering) -> Sign {
    match o {
        Ordering::Less => Sign::Negative,
        Ordering::Equal => Sign::Zero,
        Ordering::Greater => Sign::Positive,
    }
}

/// `poly rel 0`, or `c0 u + c1 v rel bound`.
#[derive(Clone, Debug)]
pub enum Atom {
    Sign { poly: MPoly, rel: Relation },
    Linear { form: [BigRat; 2], rel: Relation, bound: RealAlgebraic },
}

impl Atom {
    pub fn sign(poly: MPoly, rel: Relation) -> Atom {
        Atom::Sign { poly, rel }
    }

    /// `var rel bound` where `var` is the `k`-th plane coordinate.
    pub fn coord(k: usize, rel: Relation, bound: RealAlgebraic) -> Atom {
        let mut form = [BigRat::zero(), BigRat::zero()];
        form[k] = BigRat::one();
        Atom::Linear { form, rel, bound }
    }

    pub fn negate(&self) -> Atom {
        match self {
            Atom::Sign { poly, rel } => Atom::Sign { poly: poly.clone(), rel: rel.negate() },
            Atom::Linear { form, rel, bound } => {
                Atom::Linear { form: form.clone(), rel: rel.negate(), bound: bound.clone() }
            }
        }
    }

    fn linear_value(form: &[BigRat; 2], p: &Point) -> BigRat {
        &form[0] * &p.0 + &form[1] * &p.1
    }

    /// Exact truth at a rational point.
    pub fn holds_at(&self, vars: [Var; 2], p: &Point) -> bool {
        match self {
            Atom::Sign { poly, rel } => {
                let v = poly.eval(&[(vars[0], p.0.clone()), (vars[1], p.1.clone())]).expect("bound");
                rel.holds(Sign::of(&v))
            }
            Atom::Linear { form, rel, bound } => {
                let v = Self::linear_value(form, p);
                rel.holds(ord_sign(bound.cmp_rational(&v).reverse()))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Effort {
    pub boxes: u64,
    pub sturm_calls: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_boxes: u64,
    pub max_depth: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_boxes: 1_000_000, max_depth: 40 }
    }
}

/// A point in the plane of the problem, with possibly irrational coordinates.
#[derive(Clone, Debug)]
pub enum WitnessPoint {
    Rational(Point),
    /// `origin + t dir` with `t` irrational.
    Algebraic {
        origin: Point,
        dir: Point,
        t: RealAlgebraic,
    },
}

impl WitnessPoint {
    pub fn coords(&self) -> [RealAlgebraic; 2] {
        match self {
            WitnessPoint::Rational(p) => [RealAlgebraic::rational(p.0.clone()), RealAlgebraic::rational(p.1.clone())],
            WitnessPoint::Algebraic { origin, dir, t } => {
                let c = |c0: &BigRat, c1: &BigRat| {
                    if c1.is_zero() {
                        RealAlgebraic::rational(c0.clone())
                    } else {
                        affine_image(t, c0, c1)
                    }
                };
                [c(&origin.0, &dir.0), c(&origin.1, &dir.1)]
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Empty,
    Witness(WitnessPoint),
    Exhausted,
}

/// `atoms` over the convex polygon `region` (vertices in order). Two
/// vertices describe a segment.
#[derive(Clone, Debug)]
pub struct Problem {
    pub vars: [Var; 2],
    pub region: Vec<Point>,
    pub atoms: Vec<Atom>,
}

impl Problem {
    /// Exact check that every atom holds at `w`.
    pub fn satisfied_by(&self, w: &WitnessPoint) -> bool {
        match w {
            WitnessPoint::Rational(p) => self.atoms.iter().all(|a| a.holds_at(self.vars, p)),
            WitnessPoint::Algebraic { origin, dir, t } => {
                let mut effort = Effort::default();
                self.atoms.iter().all(|a| EdgeAtom::new(a, self.vars, origin, dir).holds(t, &mut effort))
            }
        }
    }
}

const DIRECTIONS: [(i64, i64); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)];

/// Depth below which the monotone reduction is not attempted.
const PUSH_DEPTH: u32 = 4;

struct Tri {
    v: [Point; 3],
    patches: Vec<Option<Patch>>,
    active: Vec<bool>,
    depth: u32,
}

pub struct Prover<'a> {
    problem: &'a Problem,
    budget: Budget,
    pub effort: Effort,
}

impl<'a> Prover<'a> {
    pub fn new(problem: &'a Problem, budget: Budget) -> Self {
        Prover { problem, budget, effort: Effort::default() }
    }

    pub fn run(&mut self) -> Outcome {
        let region = &self.problem.region;
        match region.len() {
            0 => Outcome::Empty,
            1 => {
                self.effort.boxes += 1;
                if self.all_hold(&region[0]) {
                    Outcome::Witness(WitnessPoint::Rational(region[0].clone()))
                } else {
                    Outcome::Empty
                }
            }
            2 => {
                self.effort.boxes += 1;
                match self.segment(&region[0], &region[1], &vec![true; self.problem.atoms.len()]) {
                    SegmentResult::Empty => Outcome::Empty,
                    SegmentResult::Rational(p) => Outcome::Witness(WitnessPoint::Rational(p)),
                    SegmentResult::Algebraic(w) => Outcome::Witness(w),
                }
            }
            _ => self.polygon(),
        }
    }

    fn all_hold(&self, p: &Point) -> bool {
        self.problem.atoms.iter().all(|a| a.holds_at(self.problem.vars, p))
    }

    fn polygon(&mut self) -> Outcome {
        let region = &self.problem.region;
        let mut stack = Vec::new();
        for i in (1..region.len() - 1).rev() {
            let v = [region[0].clone(), region[i].clone(), region[i + 1].clone()];
            let patches = self
                .problem
                .atoms
                .iter()
                .map(|a| match a {
                    Atom::Sign { poly, .. } => Some(Patch::new(poly, self.problem.vars, &v)),
                    Atom::Linear { .. } => None,
                })
                .collect();
            stack.push(Tri { v, patches, active: vec![true; self.problem.atoms.len()], depth: 0 });
        }
        let mut exhausted = false;
        while let Some(tri) = stack.pop() {
            self.effort.boxes += 1;
            if self.effort.boxes > self.budget.max_boxes {
                return Outcome::Exhausted;
            }
            match self.examine(tri) {
                Step::Done => {}
                Step::Witness(w) => return Outcome::Witness(w),
                Step::Split(tri) => {
                    if tri.depth >= self.budget.max_depth {
                        exhausted = true;
                        continue;
                    }
                    let (x, y) = split(tri);
                    stack.push(y);
                    stack.push(x);
                }
            }
        }
        if exhausted {
            Outcome::Exhausted
        } else {
            Outcome::Empty
        }
    }

    fn examine(&mut self, mut tri: Tri) -> Step {
        let atoms = &self.problem.atoms;
        let mut cover = Vec::with_capacity(atoms.len());
        for (i, atom) in atoms.iter().enumerate() {
            if !tri.active[i] {
                cover.push(Cover::True);
                continue;
            }
            let c = cover_of(atom, tri.patches[i].as_ref(), &tri.v);
            if c == Cover::False {
                return Step::Done;
            }
            if c == Cover::True {
                tri.active[i] = false;
            }
            cover.push(c);
        }
        for m in 0..3 {
            if self.true_at_corner(&tri, m) {
                return Step::Witness(WitnessPoint::Rational(tri.v[m].clone()));
            }
        }
        let centroid =
            ((&tri.v[0].0 + &tri.v[1].0 + &tri.v[2].0) / int(3), (&tri.v[0].1 + &tri.v[1].1 + &tri.v[2].1) / int(3));
        if self.all_hold(&centroid) {
            return Step::Witness(WitnessPoint::Rational(centroid));
        }
        if tri.depth >= PUSH_DEPTH {
            match self.push(&tri) {
                Push::Empty => return Step::Done,
                Push::Witness(p) => return Step::Witness(WitnessPoint::Rational(p)),
                Push::Unknown => {}
            }
        }
        Step::Split(tri)
    }

    fn true_at_corner(&self, tri: &Tri, m: usize) -> bool {
        self.problem.atoms.iter().enumerate().all(|(i, a)| {
            if !tri.active[i] {
                return true;
            }
            match (a, &tri.patches[i]) {
                (Atom::Sign { rel, .. }, Some(p)) => rel.holds(Sign::of_int(p.corner(m))),
                _ => a.holds_at(self.problem.vars, &tri.v[m]),
            }
        })
    }

    /// Sum of the unit gradients of the active atoms at the centroid, each
    /// oriented so that moving along it keeps the atom satisfied.
    fn gradient_direction(&self, tri: &Tri) -> Option<(i64, i64)> {
        let vars = self.problem.vars;
        let c =
            ((&tri.v[0].0 + &tri.v[1].0 + &tri.v[2].0) / int(3), (&tri.v[0].1 + &tri.v[1].1 + &tri.v[2].1) / int(3));
        let at = [(vars[0], c.0.clone()), (vars[1], c.1.clone())];
        let mut d = (0.0f64, 0.0f64);
        for (i, atom) in self.problem.atoms.iter().enumerate() {
            if !tri.active[i] {
                continue;
            }
            let (g, rel) = match atom {
                Atom::Sign { poly, rel } => {
                    let gx = to_f64(&poly.partial(vars[0]).eval(&at).ok()?);
                    let gy = to_f64(&poly.partial(vars[1]).eval(&at).ok()?);
                    ((gx, gy), *rel)
                }
                Atom::Linear { form, rel, .. } => ((to_f64(&form[0]), to_f64(&form[1])), *rel),
            };
            let orient = match rel {
                Relation::Gt | Relation::Ge => 1.0,
                Relation::Lt | Relation::Le => -1.0,
                Relation::Eq | Relation::Ne => return None,
            };
            let n = g.0.hypot(g.1);
            if n > 0.0 {
                d.0 += orient * g.0 / n;
                d.1 += orient * g.1 / n;
            }
        }
        let m = d.0.abs().max(d.1.abs());
        if !(m > 1e-9) {
            return None;
        }
        Some(((d.0 / m * 1024.0).round() as i64, (d.1 / m * 1024.0).round() as i64))
    }

    /// Monotone reduction to exit edges.
    fn push(&mut self, tri: &Tri) -> Push {
        let extra = self.gradient_direction(tri);
        'dirs: for (dx, dy) in DIRECTIONS.into_iter().chain(extra) {
            let d = (int(dx), int(dy));
            let delta = barycentric_direction(&tri.v, &d);
            for (i, atom) in self.problem.atoms.iter().enumerate() {
                if !tri.active[i] {
                    continue;
                }
                if !preserved(atom, tri.patches[i].as_ref(), &delta, &d) {
                    continue 'dirs;
                }
            }
            let mut all_empty = true;
            for (p, q, r) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                if !exits(&tri.v[p], &tri.v[q], &tri.v[r], &d) {
                    continue;
                }
                match self.segment(&tri.v[p], &tri.v[q], &tri.active) {
                    SegmentResult::Empty => {}
                    SegmentResult::Rational(w) => return Push::Witness(w),
                    SegmentResult::Algebraic(_) => {
                        all_empty = false;
                        break;
                    }
                }
            }
            if all_empty {
                return Push::Empty;
            }
        }
        Push::Unknown
    }

    /// Exact decision of the active atoms on the closed segment `p0 p1`.
    fn segment(&mut self, p0: &Point, p1: &Point, active: &[bool]) -> SegmentResult {
        let vars = self.problem.vars;
        let dir = (&p1.0 - &p0.0, &p1.1 - &p0.1);
        let mut views = Vec::new();
        for (i, atom) in self.problem.atoms.iter().enumerate() {
            if !active[i] {
                continue;
            }
            views.push(EdgeAtom::new(atom, vars, p0, &dir));
        }
        let zero = BigRat::zero();
        let one = BigRat::one();
        let mut points = vec![RealAlgebraic::rational(zero.clone()), RealAlgebraic::rational(one.clone())];
        for v in &views {
            match v {
                EdgeAtom::Poly { q, .. } => {
                    if !q.is_constant() {
                        self.effort.sturm_calls += 1;
                        points.extend(RealAlgebraic::roots_in(q, &zero, &one));
                    }
                }
                EdgeAtom::Cut { at: Some(t), .. } => {
                    if t.cmp_rational(&zero) != Ordering::Less && t.cmp_rational(&one) != Ordering::Greater {
                        points.push(t.clone());
                    }
                }
                EdgeAtom::Cut { .. } => {}
            }
        }
        points.sort_by(|x, y| x.cmp_exact(y));
        points.dedup_by(|x, y| x.cmp_exact(y) == Ordering::Equal);
        let mut samples = Vec::with_capacity(2 * points.len());
        for (k, t) in points.iter().enumerate() {
            if k > 0 {
                samples.push(RealAlgebraic::rational(points[k - 1].rational_between(t)));
            }
            samples.push(t.clone());
        }
        // rational samples first so that witnesses are rational when possible
        samples.sort_by_key(|s| s.as_rational().is_none());
        for t in samples {
            if views.iter().all(|v| v.holds(&t, &mut self.effort)) {
                return match t.as_rational() {
                    Some(r) => SegmentResult::Rational((&p0.0 + &dir.0 * r, &p0.1 + &dir.1 * r)),
                    None => SegmentResult::Algebraic(WitnessPoint::Algebraic { origin: p0.clone(), dir, t }),
                };
            }
        }
        SegmentResult::Empty
    }
}

enum Step {
    Done,
    Witness(WitnessPoint),
    Split(Tri),
}

enum Push {
    Empty,
    Witness(Point),
    Unknown,
}

enum SegmentResult {
    Empty,
    Rational(Point),
    Algebraic(WitnessPoint),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cover {
    True,
    False,
    Mixed,
}

fn cover_of(atom: &Atom, patch: Option<&Patch>, v: &[Point; 3]) -> Cover {
    match (atom, patch) {
        (Atom::Sign { rel, .. }, Some(p)) => {
            let s = p.signs();
            let (t, f) = match rel {
                Relation::Gt => (s.all_pos(), s.all_nonpos()),
                Relation::Ge => (s.all_nonneg(), s.all_neg()),
                Relation::Lt => (s.all_neg(), s.all_nonneg()),
                Relation::Le => (s.all_nonpos(), s.all_pos()),
                Relation::Eq => (s.all_zero(), s.all_pos() || s.all_neg()),
                Relation::Ne => (s.all_pos() || s.all_neg(), s.all_zero()),
            };
            if f {
                Cover::False
            } else if t {
                Cover::True
            } else {
                Cover::Mixed
            }
        }
        (Atom::Linear { form, rel, bound }, _) => {
            let vals: Vec<Sign> =
                v.iter().map(|p| ord_sign(bound.cmp_rational(&Atom::linear_value(form, p)).reverse())).collect();
            let all_true = vals.iter().all(|&s| rel.holds(s));
            let all_false = vals.iter().all(|&s| !rel.holds(s));
            // a linear function attains its extremes at vertices; for Eq and Ne
            // vertex values alone do not decide the interior
            match rel {
                Relation::Eq => {
                    if vals.iter().all(|&s| s == Sign::Positive) || vals.iter().all(|&s| s == Sign::Negative) {
                        Cover::False
                    } else if all_true {
                        Cover::True
                    } else {
                        Cover::Mixed
                    }
                }
                Relation::Ne => {
                    if all_true
                        && (vals.iter().all(|&s| s == Sign::Positive) || vals.iter().all(|&s| s == Sign::Negative))
                    {
                        Cover::True
                    } else if all_false {
                        Cover::False
                    } else {
                        Cover::Mixed
                    }
                }
                _ => {
                    if all_false {
                        Cover::False
                    } else if all_true {
                        Cover::True
                    } else {
                        Cover::Mixed
                    }
                }
            }
        }
        (Atom::Sign { .. }, None) => Cover::Mixed,
    }
}

fn preserved(atom: &Atom, patch: Option<&Patch>, delta: &[BigInt; 3], d: &Point) -> bool {
    match (atom, patch) {
        (Atom::Sign { rel, .. }, Some(p)) => {
            let s = p.derivative_signs(delta);
            match rel {
                Relation::Gt | Relation::Ge => s.all_nonneg(),
                Relation::Lt | Relation::Le => s.all_nonpos(),
                Relation::Eq => s.all_zero(),
                Relation::Ne => false,
            }
        }
        (Atom::Linear { form, rel, .. }, _) => {
            let slope = Atom::linear_value(form, d);
            match rel {
                Relation::Gt | Relation::Ge => !slope.is_negative(),
                Relation::Lt | Relation::Le => !slope.is_positive(),
                Relation::Eq => slope.is_zero(),
                Relation::Ne => false,
            }
        }
        (Atom::Sign { .. }, None) => false,
    }
}

/// Whether moving along `d` leaves the triangle through edge `p q`
/// (opposite vertex `r`).
fn exits(p: &Point, q: &Point, r: &Point, d: &Point) -> bool {
    let e = (&q.0 - &p.0, &q.1 - &p.1);
    let cross = |x: &Point| &e.0 * &x.1 - &e.1 * &x.0;
    let side_r = cross(&(&r.0 - &p.0, &r.1 - &p.1));
    let side_d = cross(d);
    (side_r.is_positive() && side_d.is_negative()) || (side_r.is_negative() && side_d.is_positive())
}

fn split(tri: Tri) -> (Tri, Tri) {
    let len = |i: usize, j: usize| {
        let dx = &tri.v[i].0 - &tri.v[j].0;
        let dy = &tri.v[i].1 - &tri.v[j].1;
        &dx * &dx + &dy * &dy
    };
    let edges = [(0, 1), (1, 2), (0, 2)];
    let mut best = edges[0];
    let mut best_len = len(0, 1);
    for &(i, j) in &edges[1..] {
        let l = len(i, j);
        if l > best_len {
            best = (i, j);
            best_len = l;
        }
    }
    let (p, q) = best;
    let two = int(2);
    let mid = ((&tri.v[p].0 + &tri.v[q].0) / &two, (&tri.v[p].1 + &tri.v[q].1) / &two);
    let mut vl = tri.v.clone();
    vl[q] = mid.clone();
    let mut vr = tri.v.clone();
    vr[p] = mid;
    let mut pl = Vec::with_capacity(tri.patches.len());
    let mut pr = Vec::with_capacity(tri.patches.len());
    for (i, patch) in tri.patches.iter().enumerate() {
        match patch {
            Some(x) if tri.active[i] => {
                let (l, r) = x.split(p, q);
                pl.push(Some(l));
                pr.push(Some(r));
            }
            _ => {
                pl.push(None);
                pr.push(None);
            }
        }
    }
    let depth = tri.depth + 1;
    (
        Tri { v: vl, patches: pl, active: tri.active.clone(), depth },
        Tri { v: vr, patches: pr, active: tri.active, depth },
    )
}

/// `c0 + c1 t` as an algebraic number.
fn affine_image(t: &RealAlgebraic, c0: &BigRat, c1: &BigRat) -> RealAlgebraic {
    match t {
        RealAlgebraic::Rational(x) => RealAlgebraic::rational(c0 + c1 * x),
        RealAlgebraic::Root { poly, interval } => {
            // y = c0 + c1 t  <=>  t = (y - c0) / c1
            let inv = c1.recip();
            let q = poly.compose_linear(&(-(c0 * &inv)), &inv).primitive();
            let a = c0 + c1 * interval.lo();
            let b = c0 + c1 * interval.hi();
            let iv = crate::algebra::RatInterval::spanning(a, b);
            RealAlgebraic::from_isolated(&q, iv)
        }
    }
}

/// An atom restricted to the segment `p0 + t dir`, `t` in `[0, 1]`.
enum EdgeAtom {
    Poly {
        q: UPoly,
        rel: Relation,
    },
    /// Linear atom: sign of `slope * (t - at)`, or a constant sign when flat.
    Cut {
        at: Option<RealAlgebraic>,
        slope: Sign,
        constant: Sign,
        rel: Relation,
    },
}

impl EdgeAtom {
    fn new(atom: &Atom, vars: [Var; 2], p0: &Point, dir: &Point) -> EdgeAtom {
        match atom {
            Atom::Sign { poly, rel } => {
                let lin = |c0: &BigRat, c1: &BigRat| -> RatMPoly {
                    &RatMPoly::constant(c0) + &RatMPoly::var(Var::T).scale(c1)
                };
                let r = poly.compose(&[(vars[0], lin(&p0.0, &dir.0)), (vars[1], lin(&p0.1, &dir.1))]);
                let (num, den) = r.into_parts();
                let q = num.to_upoly(Var::T).expect("univariate in t");
                let q = q.scale(&BigRational::new(BigInt::one(), den));
                EdgeAtom::Poly { q, rel: *rel }
            }
            Atom::Linear { form, rel, bound } => {
                let l0 = Atom::linear_value(form, p0);
                let s = Atom::linear_value(form, dir);
                if s.is_zero() {
                    let c = ord_sign(bound.cmp_rational(&l0).reverse());
                    return EdgeAtom::Cut { at: None, slope: Sign::Zero, constant: c, rel: *rel };
                }
                // t* = (bound - l0) / s
                let at = affine_image(bound, &(-(&l0 / &s)), &s.recip());
                EdgeAtom::Cut { at: Some(at), slope: Sign::of(&s), constant: Sign::Zero, rel: *rel }
            }
        }
    }

    fn holds(&self, t: &RealAlgebraic, effort: &mut Effort) -> bool {
        match self {
            EdgeAtom::Poly { q, rel } => {
                let s = match t.as_rational() {
                    Some(r) => q.sign_at(r),
                    None => {
                        effort.sturm_calls += 1;
                        t.sign_of(q)
                    }
                };
                rel.holds(s)
            }
            EdgeAtom::Cut { at: None, constant, rel, .. } => rel.holds(*constant),
            EdgeAtom::Cut { at: Some(at), slope, rel, .. } => {
                let o = ord_sign(t.cmp_exact(at));
                let s = if *slope == Sign::Negative { o.negate() } else { o };
                rel.holds(s)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, rat};

    fn poly(s: &str) -> MPoly {
        parse_poly(s).unwrap().integral().unwrap().clone()
    }

    fn pt(a: i64, b: i64) -> Point {
        (int(a), int(b))
    }

    fn sqrt_root(n: i64, lo: i64, hi: i64) -> RealAlgebraic {
        RealAlgebraic::root_in(&UPoly::from_ints(&[-n, 0, 1]), &int(lo), &int(hi)).unwrap()
    }

    #[test]
    fn empty_disc() {
        let prob = Problem {
            vars: [Var::A, Var::B],
            region: vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)],
            atoms: vec![Atom::sign(poly("a^2 + b^2 - 1"), Relation::Lt), Atom::sign(poly("a + b - 2"), Relation::Gt)],
        };
        let mut p = Prover::new(&prob, Budget::default());
        assert!(matches!(p.run(), Outcome::Empty));
    }

    #[test]
    fn finds_witness() {
        let prob = Problem {
            vars: [Var::A, Var::B],
            region: vec![pt(0, 0), pt(4, 0), pt(0, 4)],
            atoms: vec![Atom::sign(poly("a^2 + b^2 - 1"), Relation::Lt), Atom::sign(poly("a - b"), Relation::Gt)],
        };
        let mut p = Prover::new(&prob, Budget::default());
        match p.run() {
            Outcome::Witness(WitnessPoint::Rational(w)) => {
                assert!(prob.atoms.iter().all(|a| a.holds_at(prob.vars, &w)))
            }
            o => panic!("{:?}", o),
        }
    }

    #[test]
    fn tangent_boundary() {
        // a < sqrt2 and a^2 >= 2 never hold together; the sets touch
        let prob = Problem {
            vars: [Var::A, Var::B],
            region: vec![pt(0, 0), pt(3, 0), pt(3, 3)],
            atoms: vec![Atom::coord(0, Relation::Lt, sqrt_root(2, 1, 2)), Atom::sign(poly("a^2 - 2"), Relation::Ge)],
        };
        let mut p = Prover::new(&prob, Budget::default());
        assert!(matches!(p.run(), Outcome::Empty));
    }

    #[test]
    fn narrow_wedge_at_irrational_edge_point() {
        // both sets meet the edge y = 0 only at x = sqrt2, from outside the triangle
        let p = Problem {
            vars: [Var::X, Var::Y],
            region: vec![pt(0, 0), pt(3, 0), pt(0, 3)],
            atoms: vec![
                Atom::sign(poly("2 - x^2 + 10 y"), Relation::Gt),
                Atom::sign(poly("x^2 - 2 - 11 y"), Relation::Ge),
            ],
        };
        assert!(matches!(Prover::new(&p, Budget::default()).run(), Outcome::Empty));
    }

    #[test]
    fn segment_cases() {
        let prob = Problem {
            vars: [Var::X, Var::Y],
            region: vec![pt(0, 0), pt(2, 0)],
            atoms: vec![Atom::sign(poly("x - 1"), Relation::Le)],
        };
        match Prover::new(&prob, Budget::default()).run() {
            Outcome::Witness(WitnessPoint::Rational(w)) => assert_eq!(w.0, int(0)),
            o => panic!("{:?}", o),
        }
        let prob = Problem {
            vars: [Var::X, Var::Y],
            region: vec![pt(-1, 0), pt(1, 0)],
            atoms: vec![Atom::sign(poly("1 + x^2"), Relation::Le)],
        };
        assert!(matches!(Prover::new(&prob, Budget::default()).run(), Outcome::Empty));
        // the only solution of x^2 = 2 on the segment is irrational
        let prob = Problem {
            vars: [Var::X, Var::Y],
            region: vec![pt(0, 0), pt(2, 0)],
            atoms: vec![Atom::sign(poly("x^2 - 2"), Relation::Eq)],
        };
        assert!(matches!(
            Prover::new(&prob, Budget::default()).run(),
            Outcome::Witness(WitnessPoint::Algebraic { .. })
        ));
        let _ = rat(1, 2);
    }

    #[test]
    fn witness_near_corner() {
        let prob = Problem {
            vars: [Var::A, Var::B],
            region: vec![pt(1, 1), pt(4, 4), pt(1, 4)],
            atoms: vec![
                Atom::sign(poly("(4 - a) (4 - b) - (b - a)^2"), Relation::Gt),
                Atom::sign(poly("a - 3"), Relation::Ge),
            ],
        };
        let mut p = Prover::new(&prob, Budget::default());
        let out = p.run();
        assert!(matches!(out, Outcome::Witness(_)), "{:?}", out);
    }
}
