use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{to_f64, AlgebraError, BigRat};

/// Sign of a quantity that has been decided exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &BigRat) -> Sign {
        match x.cmp(&BigRational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn of_int(x: &BigInt) -> Sign {
        if x.is_negative() {
            Sign::Negative
        } else if x.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
///
/// All arithmetic is outward-conservative: the exact result of the operation
/// applied to any members of the operands lies in the result.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatInterval {
    lo: BigRat,
    hi: BigRat,
}

impl RatInterval {
    pub fn new(lo: BigRat, hi: BigRat) -> Result<Self, AlgebraError> {
        if lo > hi {
            return Err(AlgebraError::InvertedInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(RatInterval { lo, hi })
    }

    pub fn point(x: BigRat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    /// Builds `[min(p, q), max(p, q)]`.
    pub fn spanning(p: BigRat, q: BigRat) -> Self {
        if p <= q {
            RatInterval { lo: p, hi: q }
        } else {
            RatInterval { lo: q, hi: p }
        }
    }

    pub fn lo(&self) -> &BigRat {
        &self.lo
    }

    pub fn hi(&self) -> &BigRat {
        &self.hi
    }

    pub fn into_bounds(self) -> (BigRat, BigRat) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> BigRat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRat {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Sign shared by every member, if there is one.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: self.lo.clone().min(other.lo.clone()), hi: self.hi.clone().max(other.hi.clone()) }
    }

    pub fn intersect(&self, other: &RatInterval) -> Option<RatInterval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(RatInterval { lo, hi })
    }

    pub fn scale(&self, k: &BigRat) -> RatInterval {
        RatInterval::spanning(&self.lo * k, &self.hi * k)
    }

    pub fn shift(&self, k: &BigRat) -> RatInterval {
        RatInterval { lo: &self.lo + k, hi: &self.hi + k }
    }

    pub fn pow(&self, n: u32) -> RatInterval {
        if n == 0 {
            return RatInterval::point(BigRational::one());
        }
        let lo_n = num_traits::pow(self.lo.clone(), n as usize);
        let hi_n = num_traits::pow(self.hi.clone(), n as usize);
        if n % 2 == 1 {
            return RatInterval { lo: lo_n, hi: hi_n };
        }
        if self.lo.is_positive() || self.lo.is_zero() {
            RatInterval { lo: lo_n, hi: hi_n }
        } else if self.hi.is_negative() || self.hi.is_zero() {
            RatInterval { lo: hi_n, hi: lo_n }
        } else {
            RatInterval { lo: BigRational::zero(), hi: lo_n.max(hi_n) }
        }
    }

    /// Reciprocal; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<RatInterval> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn min_with(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: self.lo.clone().min(other.lo.clone()), hi: self.hi.clone().min(other.hi.clone()) }
    }

    /// Widens the endpoints outward onto the grid `2^-bits`, which keeps
    /// denominators bounded during long computations.
    pub fn round_outward(&self, bits: u32) -> RatInterval {
        let scale = BigInt::one() << bits;
        let lo_scaled = &self.lo * BigRational::from_integer(scale.clone());
        let hi_scaled = &self.hi * BigRational::from_integer(scale.clone());
        let lo_n = lo_scaled.numer().div_floor(lo_scaled.denom());
        let hi_n = {
            let (q, r) = hi_scaled.numer().div_mod_floor(hi_scaled.denom());
            if r.is_zero() {
                q
            } else {
                q + 1
            }
        };
        RatInterval { lo: BigRational::new(lo_n, scale.clone()), hi: BigRational::new(hi_n, scale) }
    }

    pub fn mid_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn lo_f64(&self) -> f64 {
        to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        to_f64(&self.hi)
    }
}

impl From<BigRat> for RatInterval {
    fn from(x: BigRat) -> Self {
        RatInterval::point(x)
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for RatInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RatInterval", 2)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.end()
    }
}

impl<'a> Add<&'a RatInterval> for &'a RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl<'a> Sub<&'a RatInterval> for &'a RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl<'a> Mul<&'a RatInterval> for &'a RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: &RatInterval) -> RatInterval {
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        let products = [&self.lo * &rhs.lo, &self.lo * &rhs.hi, &self.hi * &rhs.lo, &self.hi * &rhs.hi];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        RatInterval { lo, hi }
    }
}

impl Neg for &RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Add for RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: RatInterval) -> RatInterval {
        &self + &rhs
    }
}

impl Sub for RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: RatInterval) -> RatInterval {
        &self - &rhs
    }
}

impl Mul for RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: RatInterval) -> RatInterval {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn rejects_inverted_bounds() {
        assert!(RatInterval::new(int(2), int(1)).is_err());
    }

    #[test]
    fn multiplication_covers_sign_mixes() {
        let x = RatInterval::new(int(-1), int(2)).unwrap();
        let y = RatInterval::new(int(-3), int(1)).unwrap();
        let p = &x * &y;
        assert_eq!(p, RatInterval::new(int(-6), int(3)).unwrap());
    }

    #[test]
    fn even_power_straddling_zero_starts_at_zero() {
        let x = RatInterval::new(int(-2), int(1)).unwrap();
        assert_eq!(x.pow(2), RatInterval::new(int(0), int(4)).unwrap());
        assert_eq!(x.pow(3), RatInterval::new(int(-8), int(1)).unwrap());
    }

    #[test]
    fn outward_rounding_contains_original() {
        let x = RatInterval::new(rat(1, 3), rat(2, 3)).unwrap();
        let r = x.round_outward(10);
        assert!(r.contains_interval(&x));
        assert!(r.width() - x.width() <= rat(2, 1024));
        let exact = RatInterval::new(rat(1, 4), rat(3, 4)).unwrap();
        assert_eq!(exact.round_outward(4), exact);
    }

    #[test]
    fn sign_is_decided_only_off_zero() {
        assert_eq!(RatInterval::new(rat(1, 9), int(1)).unwrap().sign(), Some(Sign::Positive));
        assert_eq!(RatInterval::new(int(-1), int(0)).unwrap().sign(), None);
        assert_eq!(RatInterval::point(int(0)).sign(), Some(Sign::Zero));
    }
}
