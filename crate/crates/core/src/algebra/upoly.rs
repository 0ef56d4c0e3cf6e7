use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, BigRat, RatInterval, Sign};

/// Dense univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<BigRat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRat) -> Self {
        UPoly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        UPoly::from_ints(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: &BigRat) -> Self {
        UPoly::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRat) -> Sign {
        Sign::of(&self.eval(x))
    }

    /// Enclosure of the range over `x` by Horner's scheme in interval arithmetic.
    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        if x.is_point() {
            return RatInterval::point(self.eval(x.lo()));
        }
        let mut acc = RatInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = (&acc * x).shift(c);
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigRat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    /// Positive rational multiple with coprime integer coefficients; leading
    /// coefficient keeps its sign.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &den).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        UPoly::new(ints.into_iter().map(|c| BigRational::from_integer(c / &g)).collect())
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut out = UPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn divrem(&self, d: &UPoly) -> Result<(UPoly, UPoly), AlgebraError> {
        let dd = d.degree().ok_or(AlgebraError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let lc_inv = d.leading().recip();
        if r.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let k = &r[i + dd] * &lc_inv;
            if !k.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &k * dc;
                }
            }
            q[i] = k;
        }
        r.truncate(dd);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    pub fn rem(&self, d: &UPoly) -> Result<UPoly, AlgebraError> {
        Ok(self.divrem(d)?.1)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn squarefree(&self) -> UPoly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.primitive();
        }
        self.divrem(&g).expect("gcd is nonzero").0.primitive()
    }

    /// `p(c0 + c1 x)`.
    pub fn compose_linear(&self, c0: &BigRat, c1: &BigRat) -> UPoly {
        let lin = UPoly::new(vec![c0.clone(), c1.clone()]);
        self.compose(&lin)
    }

    pub fn compose(&self, q: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Cauchy bound: every real root lies in `[-B, B]`.
    pub fn root_bound(&self) -> BigRat {
        let lc = self.leading().abs();
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let v = c.abs() / &lc;
            if v > m {
                m = v;
            }
        }
        m + BigRational::one()
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(super::to_f64).collect()
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{}*x", mag)?,
                (_, true) => write!(f, "x^{}", i)?,
                (_, false) => write!(f, "{}*x^{}", mag, i)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UPoly> for &'a UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn divrem_examples() {
        let (q, r) = UPoly::from_ints(&[-1, 0, 1]).divrem(&UPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, UPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());

        let f = UPoly::from_ints(&[-27, 0, 18, -8, 1]);
        let (_, r) = f.divrem(&UPoly::from_ints(&[-3, 1])).unwrap();
        assert!(r.is_zero());

        let (q, r) = UPoly::from_ints(&[0, 0, 0, 1]).divrem(&UPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(q, UPoly::x());
        assert!(r.is_zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(UPoly::x().divrem(&UPoly::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x+1)(x-3)^3
        let f = UPoly::from_ints(&[-27, 0, 18, -8, 1]);
        let g = f.gcd(&f.derivative());
        assert_eq!(g, UPoly::from_ints(&[9, -6, 1]));
        assert_eq!(f.squarefree(), UPoly::from_ints(&[-3, -2, 1]));
    }

    #[test]
    fn interval_eval_contains_point_values() {
        let p = UPoly::from_ints(&[1, -3, 0, 2]);
        let x = RatInterval::new(rat(-1, 2), rat(3, 2)).unwrap();
        let e = p.eval_interval(&x);
        for k in -4..=12 {
            let t = rat(k, 8);
            assert!(e.contains(&p.eval(&t)));
        }
    }

    #[test]
    fn compose_linear_shifts() {
        let p = UPoly::from_ints(&[0, 0, 1]);
        assert_eq!(p.compose_linear(&int(1), &int(2)), UPoly::from_ints(&[1, 4, 4]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(UPoly::from_ints(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(UPoly::from_ints(&[0, -1]).to_string(), "-x");
    }
}
