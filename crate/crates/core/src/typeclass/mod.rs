//! Type A / type B classification through the polynomial `F(a, b, c)`.

mod critical;
mod triple;

pub use critical::{critical_interval, CriticalError, CriticalInterval};
pub use triple::{Order, Triple, TripleError};

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{cos_pi_over, four_cos_sq_pi_over, int, parse_poly, BigRat, MPoly, RatInterval, RatMPoly, Var};

/// `F(a, b, c)` written out term by term.
pub const F_TEXT: &str = "-176 + 96 a - 8 a^2 + 4 a^3 + a^4 + 96 b + 8 a b - 36 a^2 b + \
 2 a^3 b - 2 a^4 b - 8 b^2 - 36 a b^2 + 23 a^2 b^2 + a^4 b^2 + \
 4 b^3 + 2 a b^3 - 2 a^3 b^3 + b^4 - 2 a b^4 + a^2 b^4 + 120 c - \
 64 a c + 10 a^2 c + 2 a^3 c - 64 b c + 50 a b c - 14 a^2 b c - \
 2 a^3 b c + 10 b^2 c - 14 a b^2 c + 8 a^2 b^2 c + 2 b^3 c - \
 2 a b^3 c - 35 c^2 + 14 a c^2 + a^2 c^2 + 14 b c^2 - 10 a b c^2 + \
 b^2 c^2 + 4 c^3";

/// Default starting precision, in bits, of the cosine enclosures.
pub const DEFAULT_BITS: u32 = 64;
/// Default cap on the precision used by [`classify`].
pub const DEFAULT_MAX_BITS: u32 = 2048;

/// The polynomials that drive the classification.
#[derive(Clone, Debug)]
pub struct DiscriminantSet {
    pub f: MPoly,
    pub f_b: MPoly,
    pub t_a: RatMPoly,
    /// `|z|^4 - 8 Re(z^3) + 18 |z|^2 - 27` with `z = x + iy`.
    pub goldman: MPoly,
}

fn integral(s: &str) -> MPoly {
    parse_poly(s).expect("built-in polynomial").integral().expect("integer coefficients").clone()
}

pub fn build_f() -> MPoly {
    integral(F_TEXT)
}

pub fn goldman_poly() -> MPoly {
    integral("(x^2 + y^2)^2 - 8 (x^3 - 3 x y^2) + 18 (x^2 + y^2) - 27")
}

/// `T_A = (ab + c - 4)/16` as a polynomial.
pub fn t_a_poly() -> RatMPoly {
    parse_poly("(a b + c - 4)/16").expect("built-in polynomial")
}

/// Goldman's discriminant at the trace of `W_B`, as a polynomial in `T, a, b, c`.
pub fn build_f_b() -> MPoly {
    let g = goldman_poly();
    let g = g.substitute_square(Var::Y, &integral("a b c - 64 T^2")).expect("even in y");
    let re = parse_poly("8 T - a - b - c + 3").unwrap();
    g.compose(&[(Var::X, re)]).integral().expect("integer coefficients").clone()
}

pub fn discriminant_set() -> &'static DiscriminantSet {
    static SET: OnceLock<DiscriminantSet> = OnceLock::new();
    SET.get_or_init(|| DiscriminantSet { f: build_f(), f_b: build_f_b(), t_a: t_a_poly(), goldman: goldman_poly() })
}

pub fn t_a_value(a: &BigRat, b: &BigRat, c: &BigRat) -> BigRat {
    (a * b + c - int(4)) / int(16)
}

pub fn t_a_interval(a: &RatInterval, b: &RatInterval, c: &RatInterval) -> RatInterval {
    (&(a * b) + c).shift(&int(-4)).scale(&BigRational::new(1.into(), 16.into()))
}

type CosCache = RwLock<HashMap<(Order, u32), (RatInterval, RatInterval)>>;

fn cache() -> &'static CosCache {
    static C: OnceLock<CosCache> = OnceLock::new();
    C.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Enclosures `(cos(pi/n), 4cos^2(pi/n))`, memoized per order and precision.
pub fn cos_enclosures(n: Order, bits: u32) -> (RatInterval, RatInterval) {
    if let Some(v) = cache().read().unwrap().get(&(n, bits)) {
        return v.clone();
    }
    let v = match n {
        Order::Infinite => (RatInterval::point(int(1)), RatInterval::point(int(4))),
        Order::Finite(k) => (cos_pi_over(k, bits), four_cos_sq_pi_over(Some(k), bits)),
    };
    cache().write().unwrap().insert((n, bits), v.clone());
    v
}

/// Parameter enclosures of one triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleParams {
    pub triple: Triple,
    /// `r_k = cos(pi/n_k)`.
    pub r: [RatInterval; 3],
    /// `a, b, c = 4 r_k^2`.
    pub abc: [RatInterval; 3],
    pub t: Option<RatInterval>,
    pub big_t: Option<RatInterval>,
    pub bits: u32,
}

impl AngleParams {
    pub fn a(&self) -> &RatInterval {
        &self.abc[0]
    }
    pub fn b(&self) -> &RatInterval {
        &self.abc[1]
    }
    pub fn c(&self) -> &RatInterval {
        &self.abc[2]
    }

    /// `r1 r2 r3`.
    pub fn r_product(&self) -> RatInterval {
        &(&self.r[0] * &self.r[1]) * &self.r[2]
    }

    /// Binds the deformation parameter `t = cos(theta)`.
    pub fn with_t(mut self, t: BigRat) -> Self {
        let ti = RatInterval::point(t);
        self.big_t = Some(&self.r_product() * &ti);
        self.t = Some(ti);
        self
    }

    pub fn box_point(&self) -> [(Var, RatInterval); 3] {
        [(Var::A, self.abc[0].clone()), (Var::B, self.abc[1].clone()), (Var::C, self.abc[2].clone())]
    }
}

/// Enclosures of width about `2^-bits`.
pub fn angle_params(triple: &Triple, bits: u32) -> AngleParams {
    let e: Vec<(RatInterval, RatInterval)> = triple.orders().iter().map(|&n| cos_enclosures(n, bits)).collect();
    AngleParams {
        triple: *triple,
        r: [e[0].0.clone(), e[1].0.clone(), e[2].0.clone()],
        abc: [e[0].1.clone(), e[1].1.clone(), e[2].1.clone()],
        t: None,
        big_t: None,
        bits,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Polynomial,
    Oracle,
    /// Inferred from a neighbouring triple by monotonicity, without evaluation.
    Pruned,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeVerdict {
    pub triple: Triple,
    pub f_enclosure: Option<RatInterval>,
    pub label: TypeLabel,
    pub precision_bits: u32,
    pub method: Method,
}

impl TypeVerdict {
    /// Midpoint of the enclosure of `F`, for display.
    pub fn f_mid(&self) -> Option<f64> {
        self.f_enclosure.as_ref().map(|e| e.mid_f64())
    }
}

/// Enclosure of `F` on a parameter box, evaluated as a cubic in `c`.
pub fn f_enclosure(a: &RatInterval, b: &RatInterval, c: &RatInterval) -> RatInterval {
    FCubic::new(a, b).eval(c)
}

/// `F` with `a, b` fixed to enclosures: coefficient enclosures of the cubic in `c`.
#[derive(Clone, Debug)]
pub struct FCubic {
    coeffs: Vec<RatInterval>,
}

impl FCubic {
    pub fn new(a: &RatInterval, b: &RatInterval) -> Self {
        static COEFFS: OnceLock<Vec<MPoly>> = OnceLock::new();
        let cs = COEFFS.get_or_init(|| discriminant_set().f.coeffs_in(Var::C));
        let pt = [(Var::A, a.clone()), (Var::B, b.clone())];
        FCubic { coeffs: cs.iter().map(|p| p.eval_interval(&pt).expect("a, b bound")).collect() }
    }

    pub fn eval(&self, c: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(int(0));
        for k in self.coeffs.iter().rev() {
            acc = &(&acc * c) + k;
        }
        acc
    }
}

fn label_of(e: &RatInterval) -> TypeLabel {
    use num_traits::Signed;
    if e.lo().is_positive() {
        TypeLabel::A
    } else if !e.hi().is_positive() {
        TypeLabel::B
    } else {
        TypeLabel::Indeterminate
    }
}

/// Decides the type by the sign of `F`, doubling the precision until the
/// enclosure excludes zero (or pins `F <= 0`) or `max_bits` is reached.
pub fn classify(triple: &Triple, max_bits: u32) -> TypeVerdict {
    let mut bits = DEFAULT_BITS.min(max_bits);
    loop {
        let p = angle_params(triple, bits);
        let e = f_enclosure(p.a(), p.b(), p.c());
        let label = label_of(&e);
        if label != TypeLabel::Indeterminate || bits >= max_bits {
            return TypeVerdict {
                triple: *triple,
                f_enclosure: Some(e),
                label,
                precision_bits: bits,
                method: Method::Polynomial,
            };
        }
        bits = (bits * 2).min(max_bits);
    }
}

/// Fractional bits of the fixed-point screen used by [`Column`].
const FIX: u32 = 50;

type Fixed = (i128, i128);

fn to_fixed(iv: &RatInterval) -> Option<Fixed> {
    use num_traits::ToPrimitive;
    let s = BigRational::from_integer(num_bigint::BigInt::from(1u8) << FIX);
    let lo = (iv.lo() * &s).floor().to_integer().to_i128()?;
    let hi = (iv.hi() * &s).ceil().to_integer().to_i128()?;
    Some((lo, hi))
}

/// Outward-rounded product of two fixed-point intervals.
fn fixed_mul(x: Fixed, y: Fixed) -> Option<Fixed> {
    let p = [x.0.checked_mul(y.0)?, x.0.checked_mul(y.1)?, x.1.checked_mul(y.0)?, x.1.checked_mul(y.1)?];
    let lo = *p.iter().min()?;
    let hi = *p.iter().max()?;
    Some((lo >> FIX, -((-hi) >> FIX)))
}

fn fixed_pow(x: Fixed, k: u32) -> Option<Fixed> {
    let mut acc: Fixed = (1 << FIX, 1 << FIX);
    for _ in 0..k {
        acc = fixed_mul(acc, x)?;
    }
    Some(acc)
}

/// `sum k a^i b^j` over `(k, i, j)`, in outward-rounded fixed point.
fn fixed_poly(terms: &[(i128, u32, u32)], a: Fixed, b: Fixed) -> Option<Fixed> {
    let mut acc: Fixed = (0, 0);
    for &(k, i, j) in terms {
        let m = fixed_mul(fixed_pow(a, i)?, fixed_pow(b, j)?)?;
        let t = (m.0.checked_mul(k)?, m.1.checked_mul(k)?);
        let t = if k < 0 { (t.1, t.0) } else { t };
        acc = (acc.0.checked_add(t.0)?, acc.1.checked_add(t.1)?);
    }
    Some(acc)
}

fn fixed_param(n: Order) -> Option<Fixed> {
    static C: OnceLock<RwLock<HashMap<Order, Option<Fixed>>>> = OnceLock::new();
    let cache = C.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache.read().unwrap().get(&n) {
        return *v;
    }
    let v = to_fixed(&cos_enclosures(n, DEFAULT_BITS).1);
    cache.write().unwrap().insert(n, v);
    v
}

/// Classifier for triples sharing `n1, n2`. The cubic in `c` is built once
/// from [`DEFAULT_BITS`] enclosures and evaluated in outward-rounded fixed
/// point; triples the screen cannot decide go through [`classify`].
#[derive(Clone, Debug)]
pub struct Column {
    n1: Order,
    n2: Order,
    fixed: Option<Vec<Fixed>>,
}

impl Column {
    pub fn new(n1: Order, n2: Order) -> Self {
        static COEFFS: OnceLock<Vec<Vec<(i128, u32, u32)>>> = OnceLock::new();
        let cs = COEFFS.get_or_init(|| {
            use num_traits::ToPrimitive;
            let f = &discriminant_set().f;
            f.coeffs_in(Var::C)
                .iter()
                .map(|p| {
                    p.terms()
                        .map(|(m, k)| (k.to_i128().expect("small coefficient"), m.exp(Var::A), m.exp(Var::B)))
                        .collect()
                })
                .collect()
        });
        let fixed = (|| {
            let (a, b) = (fixed_param(n1)?, fixed_param(n2)?);
            cs.iter().map(|terms| fixed_poly(terms, a, b)).collect()
        })();
        Column { n1, n2, fixed }
    }

    fn screen(&self, n3: Order) -> Option<Fixed> {
        let c = fixed_param(n3)?;
        let mut acc: Fixed = (0, 0);
        for k in self.fixed.as_ref()?.iter().rev() {
            let m = fixed_mul(acc, c)?;
            acc = (m.0.checked_add(k.0)?, m.1.checked_add(k.1)?);
        }
        Some(acc)
    }

    pub fn classify(&self, n3: Order, max_bits: u32) -> Result<TypeVerdict, TripleError> {
        let triple = Triple::from_orders(self.n1, self.n2, n3)?;
        let (label, (lo, hi)) = match self.screen(n3) {
            Some(e) if e.0 > 0 => (TypeLabel::A, e),
            Some(e) if e.1 <= 0 => (TypeLabel::B, e),
            _ => return Ok(classify(&triple, max_bits)),
        };
        let unit = num_bigint::BigInt::from(1u8) << FIX;
        let e = RatInterval::new(BigRational::new(lo.into(), unit.clone()), BigRational::new(hi.into(), unit))
            .expect("ordered fixed-point bounds");
        Ok(TypeVerdict {
            triple,
            f_enclosure: Some(e),
            label,
            precision_bits: DEFAULT_BITS,
            method: Method::Polynomial,
        })
    }
}

/// Enclosure of `t_u = min{(r1^2 + r2^2 + r3^2 - 1)/(2 r1 r2 r3), 1}`.
pub fn t_upper(triple: &Triple) -> RatInterval {
    t_upper_params(&angle_params(triple, DEFAULT_BITS))
}

pub fn t_upper_params(p: &AngleParams) -> RatInterval {
    let sum = &(p.a() + p.b()) + p.c();
    let num = sum.scale(&BigRational::new(1.into(), 4.into())).shift(&int(-1));
    let den = p.r_product().scale(&int(2));
    let q = &num * &den.recip().expect("r_k > 0 for n >= 3");
    q.min_with(&RatInterval::point(int(1)))
}

/// `R t_u = min{(a + b + c - 4)/8, r1 r2 r3}`, the open upper end of the
/// deformation range in the `T` coordinate.
pub fn t_upper_scaled(p: &AngleParams) -> RatInterval {
    let sum = &(p.a() + p.b()) + p.c();
    let x = sum.shift(&int(-4)).scale(&BigRational::new(1.into(), 8.into()));
    x.min_with(&p.r_product())
}

#[cfg(test)]
mod tests {
    #[test]
    fn column_matches_classify() {
        let col = Column::new(Order::Finite(9), Order::Finite(14));
        for n3 in [14, 15, 40, 100] {
            let t = Triple::new(9, 14, n3).unwrap();
            let v = col.classify(Order::Finite(n3), DEFAULT_MAX_BITS).unwrap();
            let exact = classify(&t, DEFAULT_MAX_BITS);
            assert_eq!(v.label, exact.label);
            assert!(v.f_enclosure.unwrap().intersect(exact.f_enclosure.as_ref().unwrap()).is_some());
        }
        let f = discriminant_set().f.eval(&[(Var::A, int(2)), (Var::B, int(2)), (Var::C, int(2))]).unwrap();
        assert_eq!(f, int(20));
        let v = Column::new(Order::Finite(4), Order::Finite(4)).classify(Order::Finite(4), DEFAULT_MAX_BITS).unwrap();
        assert_eq!(v.label, TypeLabel::A);
        assert!(v.f_enclosure.unwrap().contains(&f));
        assert!(col.classify(Order::Finite(5), DEFAULT_MAX_BITS).is_err());
    }

    use super::*;
    use crate::algebra::{rat, Monomial};
    use num_bigint::BigInt;

    fn bigint(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn f_has_printed_coefficients() {
        let f = build_f();
        assert_eq!(f.coeff(&Monomial::from_pairs(&[(Var::A, 4), (Var::B, 2)])), bigint(1));
        assert_eq!(f.coeff(&Monomial::from_pairs(&[(Var::C, 3)])), bigint(4));
        assert_eq!(f.constant_term(), bigint(-176));
        assert_eq!(f.num_terms(), 40);
    }

    #[test]
    fn f_b_is_cubic_with_negative_leading_coefficient() {
        let fb = build_f_b();
        assert_eq!(fb.degree_in(Var::T), 3);
        let lc = fb.coeff_in(Var::T, 3);
        assert!(lc.is_constant());
        assert!(lc.constant_term() < bigint(0));
    }

    #[test]
    fn t_a_examples() {
        assert_eq!(t_a_value(&int(4), &int(4), &int(4)), int(1));
        assert_eq!(t_a_value(&int(1), &int(1), &int(1)), rat(-1, 8));
        assert_eq!(t_a_value(&int(0), &int(0), &int(4)), int(0));
    }

    #[test]
    fn exact_parameters() {
        let p = angle_params(&Triple::new(3, 4, 6).unwrap(), 64);
        assert_eq!(p.abc[0], RatInterval::point(int(1)));
        assert_eq!(p.abc[1], RatInterval::point(int(2)));
        assert_eq!(p.abc[2], RatInterval::point(int(3)));
        let q = angle_params(&Triple::parse_tokens(&["3", "3", "inf"]).unwrap(), 64);
        assert_eq!(q.abc[2], RatInterval::point(int(4)));
    }

    #[test]
    fn t_upper_examples() {
        let inf = Triple::parse_tokens(&["inf", "inf", "inf"]).unwrap();
        assert_eq!(t_upper(&inf), RatInterval::point(int(1)));
        let t333 = t_upper(&Triple::new(3, 3, 3).unwrap());
        assert!(t333.contains(&int(-1)) && t333.width() < rat(1, 1 << 40));
        let t445 = t_upper(&Triple::new(4, 4, 5).unwrap());
        let r = (std::f64::consts::PI / 4.0).cos();
        let r5 = (std::f64::consts::PI / 5.0).cos();
        let f = (2.0 * r * r + r5 * r5 - 1.0) / (2.0 * r * r * r5);
        assert!((t445.mid_f64() - f).abs() < 1e-12);
    }

    #[test]
    fn f_at_origin() {
        let f = build_f();
        let z = [(Var::A, int(0)), (Var::B, int(0)), (Var::C, int(0))];
        assert_eq!(f.eval(&z).unwrap(), int(-176));
    }
}
