use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::sturm::{isolate_roots, refine_root, SturmChain};
use super::{to_f64, AlgebraError, BigRat, RatInterval, Sign, UPoly};

/// A real algebraic number.
///
/// Irrational (or not yet identified rational) values are stored as a
/// squarefree primitive polynomial together with an open isolating interval
/// whose endpoints are not roots and carry opposite signs.
#[derive(Clone, Debug)]
pub enum RealAlgebraic {
    Rational(BigRat),
    Root { poly: UPoly, interval: RatInterval },
}

impl RealAlgebraic {
    pub fn rational(x: BigRat) -> Self {
        RealAlgebraic::Rational(x)
    }

    /// The unique root of `p` in the closed interval `[lo, hi]`.
    pub fn root_in(p: &UPoly, lo: &BigRat, hi: &BigRat) -> Result<Self, AlgebraError> {
        let roots = isolate_roots(p, lo, hi);
        if roots.len() != 1 {
            return Err(AlgebraError::NotIsolated { count: roots.len() });
        }
        Ok(Self::from_isolated(&p.squarefree(), roots.into_iter().next().unwrap()))
    }

    /// Every distinct real root of `p` in `[lo, hi]`, ascending.
    pub fn roots_in(p: &UPoly, lo: &BigRat, hi: &BigRat) -> Vec<Self> {
        let q = p.squarefree();
        isolate_roots(p, lo, hi).into_iter().map(|iv| Self::from_isolated(&q, iv)).collect()
    }

    /// `q` must be squarefree and `iv` an isolating interval as produced by
    /// [`isolate_roots`].
    pub fn from_isolated(q: &UPoly, iv: RatInterval) -> Self {
        if iv.is_point() {
            return RealAlgebraic::Rational(iv.lo().clone());
        }
        RealAlgebraic::Root { poly: q.primitive(), interval: iv }
    }

    pub fn interval(&self) -> RatInterval {
        match self {
            RealAlgebraic::Rational(x) => RatInterval::point(x.clone()),
            RealAlgebraic::Root { interval, .. } => interval.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRat> {
        match self {
            RealAlgebraic::Rational(x) => Some(x),
            RealAlgebraic::Root { .. } => None,
        }
    }

    /// Same number with isolating interval no wider than `width`.
    pub fn refined(&self, width: &BigRat) -> Self {
        match self {
            RealAlgebraic::Rational(_) => self.clone(),
            RealAlgebraic::Root { poly, interval } => {
                let iv = refine_root(poly, interval, width);
                Self::from_isolated(poly, iv)
            }
        }
    }

    fn halved(&self) -> Self {
        let w = self.interval().width() / BigRational::from_integer(2.into());
        self.refined(&w)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RealAlgebraic::Rational(x) => to_f64(x),
            RealAlgebraic::Root { .. } => {
                let r = self.refined(&BigRational::new(1.into(), num_bigint::BigInt::from(1u64 << 60)));
                r.interval().mid_f64()
            }
        }
    }

    /// Exact sign of `p` at this number.
    pub fn sign_of(&self, p: &UPoly) -> Sign {
        match self {
            RealAlgebraic::Rational(x) => p.sign_at(x),
            RealAlgebraic::Root { poly, interval } => {
                if p.is_zero() {
                    return Sign::Zero;
                }
                let g = poly.gcd(p);
                if !g.is_constant() {
                    let chain = SturmChain::new(&g);
                    if chain.count(interval.lo(), interval.hi()) > 0 {
                        return Sign::Zero;
                    }
                }
                let mut cur = self.clone();
                loop {
                    if let Some(s) = p.eval_interval(&cur.interval()).sign() {
                        if s != Sign::Zero {
                            return s;
                        }
                    }
                    cur = cur.halved();
                    if let RealAlgebraic::Rational(x) = &cur {
                        return p.sign_at(x);
                    }
                }
            }
        }
    }

    pub fn cmp_rational(&self, r: &BigRat) -> Ordering {
        match self {
            RealAlgebraic::Rational(x) => x.cmp(r),
            RealAlgebraic::Root { poly, interval } => {
                if r <= interval.lo() {
                    return Ordering::Greater;
                }
                if r >= interval.hi() {
                    return Ordering::Less;
                }
                let sr = poly.sign_at(r);
                if sr == Sign::Zero {
                    return Ordering::Equal;
                }
                if sr == poly.sign_at(interval.lo()) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// A rational strictly between `self` and `other`; requires `self < other`.
    pub fn rational_between(&self, other: &RealAlgebraic) -> BigRat {
        let two = BigRational::from_integer(2.into());
        let mut x = self.clone();
        let mut y = other.clone();
        loop {
            let (ix, iy) = (x.interval(), y.interval());
            if ix.hi() < iy.lo() {
                return (ix.hi() + iy.lo()) / &two;
            }
            if ix.hi() == iy.lo() && x.as_rational().is_none() && y.as_rational().is_none() {
                return ix.hi().clone();
            }
            x = x.halved();
            y = y.halved();
        }
    }

    pub fn cmp_exact(&self, other: &RealAlgebraic) -> Ordering {
        match (self, other) {
            (_, RealAlgebraic::Rational(y)) => self.cmp_rational(y),
            (RealAlgebraic::Rational(x), _) => other.cmp_rational(x).reverse(),
            (RealAlgebraic::Root { .. }, RealAlgebraic::Root { poly: q2, interval: i2 }) => {
                if self.sign_of(q2) == Sign::Zero
                    && self.cmp_rational(i2.lo()) == Ordering::Greater
                    && self.cmp_rational(i2.hi()) == Ordering::Less
                {
                    return Ordering::Equal;
                }
                let mut x = self.clone();
                let mut y = other.clone();
                loop {
                    let (ix, iy) = (x.interval(), y.interval());
                    if ix.hi() < iy.lo() {
                        return Ordering::Less;
                    }
                    if iy.hi() < ix.lo() {
                        return Ordering::Greater;
                    }
                    if let RealAlgebraic::Rational(v) = &x {
                        return y.cmp_rational(v).reverse();
                    }
                    if let RealAlgebraic::Rational(v) = &y {
                        return x.cmp_rational(v);
                    }
                    x = x.halved();
                    y = y.halved();
                }
            }
        }
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl From<BigRat> for RealAlgebraic {
    fn from(x: BigRat) -> Self {
        RealAlgebraic::Rational(x)
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealAlgebraic::Rational(x) => write!(f, "{}", x),
            RealAlgebraic::Root { poly, interval } => {
                write!(f, "root of {} in {} (~{:.12})", poly, interval, self.to_f64())
            }
        }
    }
}

impl Serialize for RealAlgebraic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
