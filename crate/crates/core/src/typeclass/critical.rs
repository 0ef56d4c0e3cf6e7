use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use super::{angle_params, discriminant_set, t_a_interval, t_upper_scaled, AngleParams, Triple};
use crate::algebra::{int, BigRat, RatInterval, RealAlgebraic, Sign, UPoly, Var};

/// The set of `T` in the deformation range where neither `W_A` nor `W_B`
/// is elliptic: `f_B(T) >= 0` and `T <= T_A`.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalInterval {
    pub triple: Triple,
    pub empty: bool,
    pub lower: Option<RatInterval>,
    pub upper: Option<RatInterval>,
    /// The upper end is the open deformation bound `r1 r2 r3 t_u`.
    pub upper_open: bool,
    pub t_a: RatInterval,
    /// `[-r1 r2 r3, r1 r2 r3 t_u)`.
    pub deformation: (RatInterval, RatInterval),
    /// Enclosures of the roots of `f_B` met in the deformation range.
    pub f_b_roots: Vec<RatInterval>,
    pub bits: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalError {
    #[error("enclosures at {bits} bits are too wide to order the roots of f_B")]
    Precision { bits: u32 },
    #[error("f_B >= 0 splits into {count} components")]
    MultipleComponents { count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Pos,
    Neg,
    Rise,
    Fall,
}

struct Cubic {
    f: Vec<RatInterval>,
    df: Vec<RatInterval>,
}

fn horner(cs: &[RatInterval], t: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::point(BigRational::zero());
    for k in cs.iter().rev() {
        acc = &(&acc * t) + k;
    }
    acc
}

impl Cubic {
    fn new(p: &AngleParams) -> Self {
        let pt = p.box_point();
        let coeffs = discriminant_set().f_b.coeffs_in(Var::T);
        let f: Vec<RatInterval> = coeffs.iter().map(|q| q.eval_interval(&pt).expect("bound")).collect();
        let df =
            f.iter().enumerate().skip(1).map(|(k, c)| c.scale(&BigRational::from_integer(BigInt::from(k)))).collect();
        Cubic { f, df }
    }

    fn classify_cell(&self, l: &BigRational, u: &BigRational, tiny: &BigRational) -> Option<Cell> {
        let cell = RatInterval::new(l.clone(), u.clone()).expect("ordered");
        match horner(&self.f, &cell).sign() {
            Some(Sign::Positive) => return Some(Cell::Pos),
            Some(Sign::Negative) => return Some(Cell::Neg),
            _ => {}
        }
        let rising = match horner(&self.df, &cell).sign() {
            Some(Sign::Positive) => true,
            Some(Sign::Negative) => false,
            _ => return None,
        };
        let sl = horner(&self.f, &RatInterval::point(l.clone())).sign();
        let su = horner(&self.f, &RatInterval::point(u.clone())).sign();
        match (sl, su) {
            (Some(Sign::Positive), Some(Sign::Positive)) => Some(Cell::Pos),
            (Some(Sign::Negative), Some(Sign::Negative)) => Some(Cell::Neg),
            (Some(Sign::Negative), Some(Sign::Positive)) => Some(Cell::Rise),
            (Some(Sign::Positive), Some(Sign::Negative)) => Some(Cell::Fall),
            _ if &(u - l) <= tiny => Some(if rising { Cell::Rise } else { Cell::Fall }),
            _ => None,
        }
    }
}

const MAX_CELLS: usize = 200_000;

/// A rational strictly between `x < y`.
fn rational_between(x: &RealAlgebraic, y: &RealAlgebraic) -> BigRat {
    let mut x = x.clone();
    let mut y = y.clone();
    loop {
        let (ix, iy) = (x.interval(), y.interval());
        if ix.hi() < iy.lo() {
            return (ix.hi() + iy.lo()) / int(2);
        }
        x = x.refined(&(ix.width() / int(2)));
        y = y.refined(&(iy.width() / int(2)));
    }
}

/// Exact version for rational `a, b, c`: endpoints and roots are algebraic
/// numbers and every sign is decided exactly.
fn attempt_exact(triple: &Triple, p: &AngleParams, bits: u32) -> Result<CriticalInterval, CriticalError> {
    let (a, b, c) = (p.a().lo().clone(), p.b().lo().clone(), p.c().lo().clone());
    let pt = [(Var::A, a.clone()), (Var::B, b.clone()), (Var::C, c.clone())];
    let f = UPoly::new(discriminant_set().f_b.coeffs_in(Var::T).iter().map(|q| q.eval(&pt).expect("bound")).collect());
    let abc = &a * &b * &c;
    let big = &abc + int(1);
    let sq = UPoly::new(vec![-abc.clone(), int(0), int(64)]);
    let r = RealAlgebraic::root_in(&sq, &int(0), &big).expect("positive root");
    let lower = RealAlgebraic::root_in(&sq, &-big, &int(0)).expect("negative root");
    let u_lin = RealAlgebraic::rational((&a + &b + &c - int(4)) / int(8));
    let u = if u_lin < r { u_lin } else { r };
    let t_a = RealAlgebraic::rational(super::t_a_value(&a, &b, &c));
    let upper_open = u <= t_a;
    let upper = if upper_open { u.clone() } else { t_a.clone() };
    let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let enclose = |x: &RealAlgebraic| x.refined(&width).interval();
    let mut out = CriticalInterval {
        triple: *triple,
        empty: true,
        lower: None,
        upper: None,
        upper_open,
        t_a: enclose(&t_a),
        deformation: (enclose(&lower), enclose(&u)),
        f_b_roots: Vec::new(),
        bits,
    };
    if u <= lower || t_a < lower {
        return Ok(out);
    }
    let bound = f.root_bound();
    let roots: Vec<RealAlgebraic> =
        RealAlgebraic::roots_in(&f, &-bound.clone(), &bound).into_iter().filter(|x| &lower < x && x < &upper).collect();
    out.f_b_roots = roots.iter().map(enclose).collect();

    // alternating points and open gaps along [lower, upper]
    let mut pts = vec![lower.clone()];
    pts.extend(roots);
    pts.push(upper.clone());
    let mut pieces: Vec<(RealAlgebraic, RealAlgebraic, bool)> = Vec::new();
    for (i, x) in pts.iter().enumerate() {
        let closed_here = !(i + 1 == pts.len() && upper_open);
        pieces.push((x.clone(), x.clone(), closed_here && x.sign_of(&f) != Sign::Negative));
        if let Some(y) = pts.get(i + 1) {
            let m = rational_between(x, y);
            pieces.push((x.clone(), y.clone(), f.sign_at(&m) != Sign::Negative));
        }
    }
    let mut components: Vec<(RealAlgebraic, RealAlgebraic)> = Vec::new();
    let mut inside = false;
    for (x, y, good) in pieces {
        if good {
            if inside {
                components.last_mut().unwrap().1 = y;
            } else {
                components.push((x, y));
                inside = true;
            }
        } else {
            inside = false;
        }
    }
    match components.len() {
        0 => Ok(out),
        1 => {
            let (lo, hi) = components.pop().unwrap();
            out.empty = false;
            out.upper_open = upper_open && hi == upper;
            out.lower = Some(enclose(&lo));
            out.upper = Some(enclose(&hi));
            Ok(out)
        }
        count => Err(CriticalError::MultipleComponents { count }),
    }
}

fn attempt(triple: &Triple, bits: u32) -> Result<CriticalInterval, CriticalError> {
    let p = angle_params(triple, bits);
    if p.abc.iter().all(|x| x.is_point()) {
        return attempt_exact(triple, &p, bits);
    }
    let r = p.r_product();
    let lower_dom = -&r;
    let u = t_upper_scaled(&p);
    let t_a = t_a_interval(p.a(), p.b(), p.c());
    let upper_dom = u.min_with(&t_a);
    let upper_open = u.hi() < t_a.lo();
    let mut out = CriticalInterval {
        triple: *triple,
        empty: true,
        lower: None,
        upper: None,
        upper_open,
        t_a: t_a.clone(),
        deformation: (lower_dom.clone(), u.clone()),
        f_b_roots: Vec::new(),
        bits,
    };
    if u.hi() <= lower_dom.lo() || t_a.hi() < lower_dom.lo() {
        return Ok(out);
    }
    if upper_dom.lo() <= lower_dom.hi() {
        return Err(CriticalError::Precision { bits });
    }

    let cubic = Cubic::new(&p);
    let tiny = BigRational::new(BigInt::one(), BigInt::one() << bits.saturating_sub(8));
    let two = BigRational::from_integer(2.into());
    let mut cells: Vec<(BigRational, BigRational, Cell)> = Vec::new();
    let mut stack = vec![(lower_dom.lo().clone(), upper_dom.hi().clone())];
    while let Some((l, h)) = stack.pop() {
        if cells.len() + stack.len() > MAX_CELLS {
            return Err(CriticalError::Precision { bits });
        }
        match cubic.classify_cell(&l, &h, &tiny) {
            Some(kind) => cells.push((l, h, kind)),
            None => {
                if &h - &l <= tiny {
                    return Err(CriticalError::Precision { bits });
                }
                let m = (&l + &h) / &two;
                stack.push((m.clone(), h));
                stack.push((l, m));
            }
        }
    }

    let mut components: Vec<(Option<RatInterval>, Option<RatInterval>)> = Vec::new();
    let mut inside = false;
    for (i, (l, h, kind)) in cells.iter().enumerate() {
        let here = || RatInterval::new(l.clone(), h.clone()).unwrap();
        match kind {
            Cell::Pos => {
                if !inside {
                    debug_assert_eq!(i, 0);
                    components.push((None, None));
                    inside = true;
                }
            }
            Cell::Neg => inside = false,
            Cell::Rise => {
                out.f_b_roots.push(here());
                components.push((Some(here()), None));
                inside = true;
            }
            Cell::Fall => {
                out.f_b_roots.push(here());
                if !inside {
                    components.push((None, None));
                }
                components.last_mut().unwrap().1 = Some(here());
                inside = false;
            }
        }
    }
    match components.len() {
        0 => Ok(out),
        1 => {
            let (lo, hi) = components.pop().unwrap();
            out.empty = false;
            out.upper_open = upper_open && hi.is_none();
            out.lower = Some(lo.unwrap_or(lower_dom));
            out.upper = Some(hi.unwrap_or(upper_dom));
            Ok(out)
        }
        count => Err(CriticalError::MultipleComponents { count }),
    }
}

/// Computes the critical interval, raising the precision from `bits` until
/// the roots of `f_B` are separated (up to 4x the starting precision).
pub fn critical_interval(triple: &Triple, bits: u32) -> Result<CriticalInterval, CriticalError> {
    let mut b = bits.max(32);
    loop {
        match attempt(triple, b) {
            Err(CriticalError::Precision { .. }) if b < bits.max(32) * 4 => b *= 2,
            r => return r,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_when_deformation_space_is_empty() {
        let ci = critical_interval(&Triple::new(3, 3, 3).unwrap(), 64).unwrap();
        assert!(ci.empty);
    }

    #[test]
    fn ideal_triangle_stays_below_t_a() {
        let t = Triple::parse_tokens(&["inf", "inf", "inf"]).unwrap();
        let ci = critical_interval(&t, 64).unwrap();
        assert!(!ci.empty);
        // f_B = -256 (T - 1)^2 (64 T - 61)
        assert!(ci.upper.as_ref().unwrap().contains(&crate::algebra::rat(61, 64)));
        assert!(ci.upper.unwrap().hi() <= &int(1));
        assert!(ci.lower.unwrap().contains(&int(-1)));
    }

    #[test]
    fn single_component_for_table_triples() {
        for (a, b, c) in [(3, 3, 10), (9, 14, 15), (14, 14, 14), (20, 30, 50)] {
            let ci = critical_interval(&Triple::new(a, b, c).unwrap(), 64).unwrap();
            if let (Some(l), Some(u)) = (&ci.lower, &ci.upper) {
                assert!(l.lo() <= u.hi());
                assert!(u.lo() <= ci.t_a.hi());
            }
        }
    }
}
