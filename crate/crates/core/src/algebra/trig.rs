use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{int, rat, BigRat, RatInterval};

/// Partial sums of an alternating series whose terms decrease in magnitude
/// bracket the limit between two consecutive partial sums.
fn alternating_bracket(sum: &BigRat, next: &BigRat) -> RatInterval {
    RatInterval::spanning(sum.clone(), sum + next)
}

fn eps(bits: u32) -> BigRat {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// arctan(1/k) for an integer k >= 2.
fn arctan_recip(k: i64, bits: u32) -> RatInterval {
    let tol = eps(bits + 8);
    let k2 = BigInt::from(k * k);
    let mut pow = BigInt::from(k);
    let mut sum = BigRational::zero();
    let mut j: i64 = 0;
    loop {
        let term = BigRational::new(BigInt::one(), &pow * BigInt::from(2 * j + 1));
        let signed = if j % 2 == 0 { term.clone() } else { -term.clone() };
        sum += &signed;
        j += 1;
        pow *= &k2;
        let next = BigRational::new(BigInt::one(), &pow * BigInt::from(2 * j + 1));
        if next < tol {
            let signed_next = if j % 2 == 0 { next } else { -next };
            return alternating_bracket(&sum, &signed_next).round_outward(bits + 6);
        }
    }
}

fn pi_cache() -> &'static Mutex<BTreeMap<u32, RatInterval>> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, RatInterval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// Enclosure of pi of width about `2^-bits` (Machin's formula).
pub fn pi_interval(bits: u32) -> RatInterval {
    if let Some(v) = pi_cache().lock().unwrap().get(&bits) {
        return v.clone();
    }
    let a = arctan_recip(5, bits + 4).scale(&int(16));
    let b = arctan_recip(239, bits + 4).scale(&int(4));
    let v = (&a - &b).round_outward(bits + 2);
    pi_cache().lock().unwrap().insert(bits, v.clone());
    v
}

/// Enclosure of cos at a rational point with `0 <= x <= 2`.
pub fn cos_point(x: &BigRat, bits: u32) -> RatInterval {
    assert!(!x.is_negative() && x <= &int(2), "cos_point argument out of range");
    let tol = eps(bits + 8);
    let x2 = x * x;
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    let mut k: i64 = 0;
    loop {
        sum += &term;
        k += 1;
        term = -(&term * &x2) / BigRational::from_integer(BigInt::from((2 * k - 1) * (2 * k)));
        // from here on every term is smaller than the previous one
        let decreasing = x2 <= BigRational::from_integer(BigInt::from((2 * k + 1) * (2 * k + 2)));
        if decreasing && term.abs() < tol {
            return alternating_bracket(&sum, &term).round_outward(bits + 4);
        }
    }
}

/// Enclosure of cos over an interval inside `[0, 2]`, where cos is decreasing.
pub fn cos_interval(x: &RatInterval, bits: u32) -> RatInterval {
    let hi = cos_point(x.lo(), bits);
    let lo = cos_point(x.hi(), bits);
    RatInterval::new(lo.lo().clone(), hi.hi().clone()).expect("cos is decreasing")
}

/// Enclosure of cos(pi/n) for n >= 2, exact where the value is rational.
pub fn cos_pi_over(n: u64, bits: u32) -> RatInterval {
    match n {
        2 => return RatInterval::point(int(0)),
        3 => return RatInterval::point(rat(1, 2)),
        _ => {}
    }
    let x = pi_interval(bits + 4).scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
    cos_interval(&x, bits + 2)
}

/// Enclosure of 4cos^2(pi/n); `None` stands for n = infinity (value 4).
pub fn four_cos_sq_pi_over(n: Option<u64>, bits: u32) -> RatInterval {
    let exact = match n {
        None => Some(4),
        Some(2) => Some(0),
        Some(3) => Some(1),
        Some(4) => Some(2),
        Some(6) => Some(3),
        _ => None,
    };
    if let Some(v) = exact {
        return RatInterval::point(int(v));
    }
    let r = cos_pi_over(n.unwrap(), bits + 4);
    r.pow(2).scale(&int(4)).round_outward(bits + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_enclosed_tightly() {
        let p = pi_interval(100);
        assert!(p.lo_f64() <= std::f64::consts::PI && std::f64::consts::PI <= p.hi_f64());
        assert!(p.width() < eps(99));
        // 355/113 is above pi
        assert!(p.hi() < &rat(355, 113));
    }

    #[test]
    fn cosines_match_floats() {
        for n in 3..40u64 {
            let c = cos_pi_over(n, 80);
            let f = (std::f64::consts::PI / n as f64).cos();
            assert!(c.lo_f64() - 1e-15 <= f && f <= c.hi_f64() + 1e-15, "n = {}", n);
            assert!(c.width() < eps(70));
        }
    }

    #[test]
    fn exact_special_cases() {
        assert_eq!(four_cos_sq_pi_over(Some(3), 64), RatInterval::point(int(1)));
        assert_eq!(four_cos_sq_pi_over(Some(4), 64), RatInterval::point(int(2)));
        assert_eq!(four_cos_sq_pi_over(Some(6), 64), RatInterval::point(int(3)));
        assert_eq!(four_cos_sq_pi_over(None, 64), RatInterval::point(int(4)));
    }

    #[test]
    fn enclosure_of_irrational_value_contains_exact_square() {
        // 4cos^2(pi/5) = (3 + sqrt5)/2, a root of a^2 - 3a + 1
        let a = four_cos_sq_pi_over(Some(5), 64);
        let f = |x: &BigRat| x * x - int(3) * x + int(1);
        assert!(f(a.lo()) * f(a.hi()) < int(0));
    }
}
