use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{AlgebraError, BigRat, RatInterval, UPoly};

pub const NVARS: usize = 6;

/// Variables in their fixed global order `a < b < c < T < x < y`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Var {
    A,
    B,
    C,
    T,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A, Var::B, Var::C, Var::T, Var::X, Var::Y];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["a", "b", "c", "T", "x", "y"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Var::ALL`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut e = [0; NVARS];
        for &(v, k) in pairs {
            e[v.index()] += k;
        }
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            *x += y;
        }
        Monomial(e)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0.iter()) {
            if *x < *y {
                return None;
            }
            *x -= y;
        }
        Some(Monomial(e))
    }

    pub fn with_exp(&self, v: Var, k: u32) -> Monomial {
        let mut e = self.0;
        e[v.index()] = k;
        Monomial(e)
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Ord for Monomial {
    /// Graded; within a degree, higher powers of earlier variables come first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let k = self.exp(v);
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, k)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        MPoly::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        MPoly::constant(BigInt::from(c))
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(BigInt::one(), Monomial::var(v))
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Variables that actually occur, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.iter().copied().filter(|&v| self.degree_in(v) > 0).collect()
    }

    pub fn scale(&self, k: &BigInt) -> MPoly {
        if k.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    pub fn scale_i64(&self, k: i64) -> MPoly {
        self.scale(&BigInt::from(k))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut out = MPoly::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    pub fn partial(&self, v: Var) -> MPoly {
        let i = v.index();
        MPoly::from_terms(self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
            let mut e = m.0;
            e[i] -= 1;
            (Monomial(e), c * BigInt::from(m.0[i]))
        }))
    }

    /// Coefficients as a polynomial in `v`, index = power of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        if self.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let k = m.exp(v) as usize;
            out[k].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let m = Monomial::from_pairs(&[(v, k as u32)]);
            for (n, x) in &c.terms {
                out.add_term(n.mul(&m), x.clone());
            }
        }
        out
    }

    pub fn coeff_in(&self, v: Var, k: u32) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter(|(m, _)| m.exp(v) == k).map(|(m, c)| (m.with_exp(v, 0), c.clone())))
    }

    pub fn eval(&self, point: &[(Var, BigRat)]) -> Result<BigRat, AlgebraError> {
        let mut vals: [Option<&BigRat>; NVARS] = Default::default();
        for (v, x) in point {
            vals[v.index()] = Some(x);
        }
        let mut pows: Vec<Vec<BigRat>> = vec![Vec::new(); NVARS];
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for v in Var::ALL {
                let k = m.exp(v) as usize;
                if k == 0 {
                    continue;
                }
                let x = vals[v.index()].ok_or(AlgebraError::UnboundVariable(v))?;
                let table = &mut pows[v.index()];
                if table.is_empty() {
                    table.push(BigRational::one());
                }
                while table.len() <= k {
                    let next = table.last().unwrap() * x;
                    table.push(next);
                }
                t *= &table[k];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Conservative enclosure of the range over a box.
    pub fn eval_interval(&self, point: &[(Var, RatInterval)]) -> Result<RatInterval, AlgebraError> {
        let mut vals: [Option<&RatInterval>; NVARS] = Default::default();
        for (v, x) in point {
            vals[v.index()] = Some(x);
        }
        let mut pows: Vec<BTreeMap<u32, RatInterval>> = vec![BTreeMap::new(); NVARS];
        let mut acc = RatInterval::point(BigRational::zero());
        for (m, c) in &self.terms {
            let mut t = RatInterval::point(BigRational::from_integer(c.clone()));
            for v in Var::ALL {
                let k = m.exp(v);
                if k == 0 {
                    continue;
                }
                let x = vals[v.index()].ok_or(AlgebraError::UnboundVariable(v))?;
                let p = pows[v.index()].entry(k).or_insert_with(|| x.pow(k));
                t = &t * p;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for variables; unbound variables stay as they are.
    pub fn compose(&self, bindings: &[(Var, RatMPoly)]) -> RatMPoly {
        let mut bound: [Option<&RatMPoly>; NVARS] = Default::default();
        for (v, q) in bindings {
            bound[v.index()] = Some(q);
        }
        let mut pows: Vec<Vec<RatMPoly>> = vec![Vec::new(); NVARS];
        let mut acc = RatMPoly::zero();
        for (m, c) in &self.terms {
            let mut keep = Monomial::one();
            let mut t = RatMPoly::from(MPoly::constant(c.clone()));
            for v in Var::ALL {
                let k = m.exp(v) as usize;
                if k == 0 {
                    continue;
                }
                match bound[v.index()] {
                    None => keep.0[v.index()] = k as u32,
                    Some(q) => {
                        let table = &mut pows[v.index()];
                        if table.is_empty() {
                            table.push(RatMPoly::one());
                        }
                        while table.len() <= k {
                            let next = table.last().unwrap() * q;
                            table.push(next);
                        }
                        t = &t * &table[k];
                    }
                }
            }
            let t = RatMPoly::new(t.num.mul_monomial(&keep), t.den);
            acc = &acc + &t;
        }
        acc
    }

    /// Replaces each `v^(2k)` by `binding^k`; fails on an odd power of `v`.
    pub fn substitute_square(&self, v: Var, binding: &MPoly) -> Result<MPoly, AlgebraError> {
        let coeffs = self.coeffs_in(v);
        let mut out = MPoly::zero();
        let mut pw = MPoly::one();
        for (k, c) in coeffs.iter().enumerate() {
            if k % 2 == 1 {
                if !c.is_zero() {
                    return Err(AlgebraError::NotDivisible);
                }
                continue;
            }
            if k > 0 {
                pw = &pw * binding;
            }
            out = &out + &(c * &pw);
        }
        Ok(out)
    }

    fn lex_leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|x, y| x.0.lex_cmp(y.0))
    }

    /// Exact quotient `self / d`; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Result<MPoly, AlgebraError> {
        let (dm, dc) = d.lex_leading().ok_or(AlgebraError::DivisionByZero)?;
        let (dm, dc) = (*dm, dc.clone());
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((rm, rc)) = r.lex_leading() {
            let m = rm.div(&dm).ok_or(AlgebraError::NotDivisible)?;
            let (k, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let t = MPoly::term(k, m);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Ok(q)
    }

    /// `den^d * self(v = num / den)` with `d` the degree of `self` in `v`.
    pub fn substitute_fraction(&self, v: Var, num: &MPoly, den: &MPoly) -> MPoly {
        let coeffs = self.coeffs_in(v);
        let d = coeffs.len().saturating_sub(1);
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = &(c * &num.pow(k as u32)) * &den.pow((d - k) as u32);
            out = &out + &t;
        }
        out
    }

    /// Univariate view; `None` if any other variable occurs.
    pub fn to_upoly(&self, v: Var) -> Option<UPoly> {
        if self.variables().iter().any(|&w| w != v) {
            return None;
        }
        let mut c = vec![BigRational::zero(); self.degree_in(v) as usize + 1];
        for (m, x) in &self.terms {
            c[m.exp(v) as usize] = BigRational::from_integer(x.clone());
        }
        Some(UPoly::new(c))
    }

    pub fn from_upoly(v: Var, p: &UPoly) -> RatMPoly {
        let mut den = BigInt::one();
        for c in p.coeffs() {
            den = den.lcm(c.denom());
        }
        let num = MPoly::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            (Monomial::from_pairs(&[(v, k as u32)]), (c * BigRational::from_integer(den.clone())).to_integer())
        }));
        RatMPoly::new(num, den)
    }

    pub fn rat(&self) -> RatMPoly {
        RatMPoly::from(self.clone())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.total_degree() == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(MPoly);
owned_ops!(RatMPoly);

/// A polynomial with rational coefficients, stored as integer numerator over a
/// single positive integer denominator in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMPoly {
    num: MPoly,
    den: BigInt,
}

impl RatMPoly {
    pub fn new(num: MPoly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() { (-&num, -den) } else { (num, den) };
        let g = num.content().gcd(&den);
        if g.is_zero() {
            return RatMPoly { num: MPoly::zero(), den: BigInt::one() };
        }
        if g.is_one() {
            return RatMPoly { num, den };
        }
        let num = MPoly { terms: num.terms.iter().map(|(m, c)| (*m, c / &g)).collect() };
        RatMPoly { num, den: den / g }
    }

    pub fn zero() -> Self {
        RatMPoly { num: MPoly::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        RatMPoly { num: MPoly::one(), den: BigInt::one() }
    }

    pub fn constant(c: &BigRat) -> Self {
        RatMPoly::new(MPoly::constant(c.numer().clone()), c.denom().clone())
    }

    pub fn var(v: Var) -> Self {
        RatMPoly::from(MPoly::var(v))
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The integral polynomial when the denominator is 1.
    pub fn integral(&self) -> Option<&MPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_parts(self) -> (MPoly, BigInt) {
        (self.num, self.den)
    }

    pub fn scale(&self, k: &BigRat) -> RatMPoly {
        RatMPoly::new(self.num.scale(k.numer()), &self.den * k.denom())
    }

    pub fn pow(&self, n: u32) -> RatMPoly {
        RatMPoly::new(self.num.pow(n), num_traits::pow(self.den.clone(), n as usize))
    }

    pub fn eval(&self, point: &[(Var, BigRat)]) -> Result<BigRat, AlgebraError> {
        Ok(self.num.eval(point)? / BigRational::from_integer(self.den.clone()))
    }

    pub fn compose(&self, bindings: &[(Var, RatMPoly)]) -> RatMPoly {
        let c = self.num.compose(bindings);
        RatMPoly::new(c.num, c.den * &self.den)
    }

    pub fn partial(&self, v: Var) -> RatMPoly {
        RatMPoly::new(self.num.partial(v), self.den.clone())
    }
}

impl From<MPoly> for RatMPoly {
    fn from(p: MPoly) -> Self {
        RatMPoly { num: p, den: BigInt::one() }
    }
}

impl fmt::Display for RatMPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RatMPoly> for &'a RatMPoly {
    type Output = RatMPoly;
    fn add(self, rhs: &RatMPoly) -> RatMPoly {
        if self.den == rhs.den {
            return RatMPoly::new(&self.num + &rhs.num, self.den.clone());
        }
        let l = self.den.lcm(&rhs.den);
        let x = self.num.scale(&(&l / &self.den));
        let y = rhs.num.scale(&(&l / &rhs.den));
        RatMPoly::new(&x + &y, l)
    }
}

impl<'a> Sub<&'a RatMPoly> for &'a RatMPoly {
    type Output = RatMPoly;
    fn sub(self, rhs: &RatMPoly) -> RatMPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatMPoly> for &'a RatMPoly {
    type Output = RatMPoly;
    fn mul(self, rhs: &RatMPoly) -> RatMPoly {
        RatMPoly::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatMPoly {
    type Output = RatMPoly;
    fn neg(self) -> RatMPoly {
        RatMPoly { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_poly};

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap().integral().unwrap().clone()
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("a^2*b").partial(Var::A), p("2*a*b"));
        assert!(p("7").partial(Var::A).is_zero());
        assert!(p("b^3").partial(Var::A).is_zero());
    }

    #[test]
    fn compose_square_of_sum() {
        let x2 = p("x^2");
        let r = x2.compose(&[(Var::X, p("a + b").rat())]);
        assert_eq!(r, p("a^2 + 2*a*b + b^2").rat());
    }

    #[test]
    fn compose_with_denominator() {
        let q = p("16*T - a*b - c");
        let ta = parse_poly("(a*b + c - 4)/16").unwrap();
        assert_eq!(q.compose(&[(Var::T, ta)]), p("-4").rat());
    }

    #[test]
    fn eval_zero_and_unbound() {
        assert_eq!(MPoly::zero().eval(&[]).unwrap(), int(0));
        assert_eq!(p("a + b").eval(&[(Var::A, int(1))]), Err(AlgebraError::UnboundVariable(Var::B)));
    }

    #[test]
    fn exact_division_round_trip() {
        let x = p("a^2 - 3*a*b + c");
        let y = p("a + b - 2*c^2");
        let prod = &x * &y;
        assert_eq!(prod.div_exact(&y).unwrap(), x);
        assert_eq!(p("a^2 + 1").div_exact(&p("a + 1")), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn square_substitution() {
        let q = p("x^2*y^2 + y^4 - 3");
        let r = q.substitute_square(Var::Y, &p("a - T^2")).unwrap();
        assert_eq!(r, p("x^2*(a - T^2) + (a - T^2)^2 - 3"));
        assert!(p("y^3").substitute_square(Var::Y, &p("a")).is_err());
    }

    #[test]
    fn coefficient_views() {
        let q = p("4*c^3 + a*c - b + 2");
        let cs = q.coeffs_in(Var::C);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[3], p("4"));
        assert_eq!(cs[1], p("a"));
        assert_eq!(MPoly::from_coeffs_in(Var::C, &cs), q);
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(p("b^2 - 8*a^2 + 96*a - 176 + 96*b").to_string(), "-176 + 96*a + 96*b - 8*a^2 + b^2");
    }
}
