//! Floating-point oracle: explicit complex reflections, word traces and
//! Goldman's trace classification, independent of the polynomial `F`.

use nalgebra::{Complex, Matrix3};
use serde::Serialize;
use thiserror::Error;

use crate::typeclass::{Method, Order, Triple, TypeLabel, TypeVerdict};

pub type C64 = Complex<f64>;
pub type CMat = Matrix3<C64>;

/// Tolerance below which an imaginary part counts as zero.
pub const REAL_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("neither W_A nor W_B becomes elliptic on [-1, t_u) for {0}")]
    NoTransition(Triple),
    #[error("deformation space of {0} is empty (t_u <= -1)")]
    EmptyDeformation(Triple),
}

/// Gram matrix `G_ij = <c_i, c_j>` of unit polar vectors.
///
/// The phase sits on the `(1,2)` entry: `G_12 = r3 e^{-i theta}`,
/// `G_23 = r1`, `G_13 = r2`, so `arg(G_32 G_13 G_21) = theta`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramForm {
    pub g: CMat,
    pub r: [f64; 3],
    pub theta: f64,
}

impl GramForm {
    /// Recomputes the angular invariant `arg(<c3,c2><c1,c3><c2,c1>)`.
    pub fn angular_invariant(&self) -> f64 {
        (self.g[(2, 1)] * self.g[(0, 2)] * self.g[(1, 0)]).arg()
    }

    /// Matrix `M` with `<v, w> = w^H M v` in the polar basis (`M = G^T`).
    pub fn form_matrix(&self) -> CMat {
        self.g.transpose()
    }

    pub fn inner(&self, v: &nalgebra::Vector3<C64>, w: &nalgebra::Vector3<C64>) -> C64 {
        (w.adjoint() * self.form_matrix() * v)[(0, 0)]
    }
}

pub fn gram_matrix(r1: f64, r2: f64, r3: f64, theta: f64) -> GramForm {
    let one = C64::new(1.0, 0.0);
    let g12 = C64::from_polar(r3, -theta);
    let g23 = C64::new(r1, 0.0);
    let g13 = C64::new(r2, 0.0);
    let g = CMat::new(one, g12, g13, g12.conj(), one, g23, g13.conj(), g23.conj(), one);
    GramForm { g, r: [r1, r2, r3], theta }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

pub fn hermitian_signature(g: &CMat) -> Result<Signature, GeometryError> {
    let dev = (g - g.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    if dev > 1e-12 * (1.0 + g.norm()) {
        return Err(GeometryError::NotHermitian(dev));
    }
    let eig = nalgebra::SymmetricEigen::new(*g);
    let mut s = Signature { positive: 0, negative: 0, zero: 0 };
    for &l in eig.eigenvalues.iter() {
        if l.abs() < 1e-10 {
            s.zero += 1;
        } else if l > 0.0 {
            s.positive += 1;
        } else {
            s.negative += 1;
        }
    }
    Ok(s)
}

/// Complex reflection `v -> -v + 2<v, c_k> c_k` written in the polar basis:
/// only row `k` differs from `-Id`, with entries `-delta_kj + 2 G_jk`.
pub fn reflection_matrix(k: usize, form: &GramForm) -> CMat {
    assert!((1..=3).contains(&k), "generator index must be 1, 2 or 3");
    let k = k - 1;
    let mut m = -CMat::identity();
    for j in 0..3 {
        m[(k, j)] = form.g[(j, k)] * 2.0 - if j == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
    }
    m
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generators {
    pub i: [CMat; 3],
    pub form: GramForm,
}

impl Generators {
    pub fn new(form: GramForm) -> Self {
        let i = [reflection_matrix(1, &form), reflection_matrix(2, &form), reflection_matrix(3, &form)];
        Generators { i, form }
    }

    pub fn word(&self, word: &[usize]) -> CMat {
        let mut m = CMat::identity();
        for &k in word {
            m *= self.i[k - 1];
        }
        m
    }
}

pub const W_A: [usize; 4] = [1, 3, 2, 3];
pub const W_B: [usize; 3] = [1, 2, 3];

pub fn word_trace(word: &[usize], gens: &Generators) -> C64 {
    assert!(!word.is_empty(), "empty word");
    gens.word(word).trace()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IsometryClass {
    Loxodromic,
    RegularElliptic,
    /// `f(tau) = 0` with non-real trace.
    SpecialBoundary,
    EllipticRealTrace,
    ParabolicRealTrace,
}

impl IsometryClass {
    pub fn is_elliptic(self) -> bool {
        matches!(self, IsometryClass::RegularElliptic | IsometryClass::EllipticRealTrace)
    }
}

/// `f(z) = |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27`.
pub fn goldman_f(z: C64) -> f64 {
    let n = z.norm_sqr();
    n * n - 8.0 * (z * z * z).re + 18.0 * n - 27.0
}

pub fn goldman_classify(tau: C64) -> IsometryClass {
    if tau.im.abs() < REAL_TOL {
        let t = tau.re;
        return if (t - 3.0).abs() < REAL_TOL {
            IsometryClass::ParabolicRealTrace
        } else if (-1.0..3.0).contains(&t) {
            IsometryClass::EllipticRealTrace
        } else {
            IsometryClass::Loxodromic
        };
    }
    let f = goldman_f(tau);
    if f > 0.0 {
        IsometryClass::Loxodromic
    } else if f < 0.0 {
        IsometryClass::RegularElliptic
    } else {
        IsometryClass::SpecialBoundary
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceValues {
    pub tau_a: f64,
    pub tau_b: (f64, f64),
    pub t: f64,
}

/// Closed-form traces: `16 r1^2 r2^2 + 4 r3^2 - 16 r1 r2 r3 cos(theta)` and
/// `8 r1 r2 r3 e^{i theta} - 4(r1^2 + r2^2 + r3^2) + 3`.
pub fn lemma_trace_values(r: [f64; 3], t: f64) -> TraceValues {
    let [r1, r2, r3] = r;
    let p = r1 * r2 * r3;
    let s = (1.0 - t * t).max(0.0).sqrt();
    let tau_a = 16.0 * r1 * r1 * r2 * r2 + 4.0 * r3 * r3 - 16.0 * p * t;
    let tau_b = (8.0 * p * t - 4.0 * (r1 * r1 + r2 * r2 + r3 * r3) + 3.0, 8.0 * p * s);
    TraceValues { tau_a, tau_b, t }
}

/// `cos(pi/n)`, with infinity mapping to 1.
pub fn cos_pi_over_f64(n: Order) -> f64 {
    match n {
        Order::Finite(k) => (std::f64::consts::PI / k as f64).cos(),
        Order::Infinite => 1.0,
    }
}

pub fn radii(triple: &Triple) -> [f64; 3] {
    let o = triple.orders();
    [cos_pi_over_f64(o[0]), cos_pi_over_f64(o[1]), cos_pi_over_f64(o[2])]
}

pub fn t_upper_f64(r: [f64; 3]) -> f64 {
    let [r1, r2, r3] = r;
    ((r1 * r1 + r2 * r2 + r3 * r3 - 1.0) / (2.0 * r1 * r2 * r3)).min(1.0)
}

/// Generators at deformation parameter `t = cos(theta)`.
pub fn generators_at(r: [f64; 3], t: f64) -> Generators {
    Generators::new(gram_matrix(r[0], r[1], r[2], t.clamp(-1.0, 1.0).acos()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub label: TypeLabel,
    /// First `t` at which `W_A` is elliptic, if any.
    pub t_star_a: Option<f64>,
    pub t_star_b: Option<f64>,
    pub t_upper: f64,
}

fn elliptic_at(word: &[usize], r: [f64; 3], t: f64) -> bool {
    goldman_classify(word_trace(word, &generators_at(r, t))).is_elliptic()
}

fn first_elliptic(word: &[usize], r: [f64; 3], t_u: f64, steps: usize) -> Option<f64> {
    let h = (t_u + 1.0) / steps as f64;
    if elliptic_at(word, r, -1.0) {
        return Some(-1.0);
    }
    let mut prev = -1.0;
    for i in 1..steps {
        let t = -1.0 + h * i as f64;
        if elliptic_at(word, r, t) {
            let (mut lo, mut hi) = (prev, t);
            for _ in 0..60 {
                let m = 0.5 * (lo + hi);
                if elliptic_at(word, r, m) {
                    hi = m;
                } else {
                    lo = m;
                }
            }
            return Some(hi);
        }
        prev = t;
    }
    None
}

/// Decides the type literally: which of `W_A`, `W_B` turns elliptic first as
/// `t` increases from -1.
pub fn oracle_report(triple: &Triple, steps: usize, tol: f64) -> Result<OracleReport, GeometryError> {
    let r = radii(triple);
    let t_u = t_upper_f64(r);
    if t_u <= -1.0 + REAL_TOL {
        return Err(GeometryError::EmptyDeformation(*triple));
    }
    let a = first_elliptic(&W_A, r, t_u, steps);
    let b = first_elliptic(&W_B, r, t_u, steps);
    let label = match (a, b) {
        (None, None) => return Err(GeometryError::NoTransition(*triple)),
        (Some(_), None) => TypeLabel::A,
        (None, Some(_)) => TypeLabel::B,
        (Some(x), Some(y)) if x < y - tol => TypeLabel::A,
        (Some(x), Some(y)) if y < x - tol => TypeLabel::B,
        _ => TypeLabel::Indeterminate,
    };
    Ok(OracleReport { label, t_star_a: a, t_star_b: b, t_upper: t_u })
}

pub fn oracle_type(triple: &Triple, steps: usize, tol: f64) -> Result<TypeVerdict, GeometryError> {
    let rep = oracle_report(triple, steps, tol)?;
    Ok(TypeVerdict { triple: *triple, f_enclosure: None, label: rep.label, precision_bits: 53, method: Method::Oracle })
}

/// Largest entrywise deviation between two matrices.
pub fn max_dev(x: &CMat, y: &CMat) -> f64 {
    (x - y).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Checks `I^2 = Id`, form preservation `I^T G conj(I) = G`, `det I = 1` and
/// `tr I = -1`; returns the worst deviation.
pub fn reflection_defects(gens: &Generators) -> f64 {
    let id = CMat::identity();
    let g = gens.form.g;
    let mut worst = 0.0f64;
    for m in &gens.i {
        worst = worst.max(max_dev(&(m * m), &id));
        worst = worst.max(max_dev(&(m.transpose() * g * m.conjugate()), &g));
        worst = worst.max((m.determinant() - C64::new(1.0, 0.0)).norm());
        worst = worst.max((m.trace() + C64::new(1.0, 0.0)).norm());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gram_has_signature_three_zero() {
        let f = gram_matrix(0.0, 0.0, 0.0, 0.3);
        assert_eq!(f.g, CMat::identity());
        let s = hermitian_signature(&f.g).unwrap();
        assert_eq!((s.positive, s.negative), (3, 0));
        let i1 = reflection_matrix(1, &f);
        let d =
            CMat::from_diagonal(&nalgebra::Vector3::new(C64::new(1.0, 0.0), C64::new(-1.0, 0.0), C64::new(-1.0, 0.0)));
        assert!(max_dev(&i1, &d) < 1e-15);
    }

    #[test]
    fn lorentzian_diagonal() {
        let d =
            CMat::from_diagonal(&nalgebra::Vector3::new(C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::new(-1.0, 0.0)));
        let s = hermitian_signature(&d).unwrap();
        assert_eq!((s.positive, s.negative), (2, 1));
        let mut bad = d;
        bad[(0, 1)] = C64::new(0.5, 0.0);
        assert!(hermitian_signature(&bad).is_err());
    }

    #[test]
    fn angular_invariant_round_trips() {
        for th in [0.0, 0.4, 1.5, 2.9] {
            let f = gram_matrix(0.7, 0.8, 0.9, th);
            assert!((f.angular_invariant() - th).abs() < 1e-12);
        }
    }

    #[test]
    fn valid_configuration_is_lorentzian() {
        let r = radii(&Triple::new(4, 4, 5).unwrap());
        let f = gram_matrix(r[0], r[1], r[2], std::f64::consts::FRAC_PI_2);
        let s = hermitian_signature(&f.g).unwrap();
        assert_eq!((s.positive, s.negative), (2, 1));
    }

    #[test]
    fn boundary_configuration_is_degenerate() {
        let r = radii(&Triple::new(3, 3, 3).unwrap());
        let f = gram_matrix(r[0], r[1], r[2], std::f64::consts::PI);
        assert!(f.g.determinant().norm() < 1e-10);
    }

    #[test]
    fn small_words() {
        let g = generators_at([0.5, 0.6, (std::f64::consts::PI / 4.0).cos()], 0.2);
        assert!((word_trace(&[1, 2], &g) - C64::new(1.0, 0.0)).norm() < 1e-12);
        assert!((word_trace(&[1, 1], &g) - C64::new(3.0, 0.0)).norm() < 1e-12);
        let th = 0.7;
        let gi = Generators::new(gram_matrix(1.0, 1.0, 1.0, th));
        let expect = C64::from_polar(8.0, th) - 9.0;
        assert!((word_trace(&W_B, &gi) - expect).norm() < 1e-12);
    }

    #[test]
    fn goldman_examples() {
        assert_eq!(goldman_classify(C64::new(3.0, 0.0)), IsometryClass::ParabolicRealTrace);
        assert_eq!(goldman_classify(C64::new(0.0, 0.0)), IsometryClass::EllipticRealTrace);
        assert_eq!(goldman_f(C64::new(0.0, 0.0)), -27.0);
        assert_eq!(goldman_f(C64::new(-1.0, 0.0)), 0.0);
        assert_eq!(goldman_classify(C64::new(0.0, 1.0)), IsometryClass::RegularElliptic);
        assert_eq!(goldman_classify(C64::new(5.0, 1.0)), IsometryClass::Loxodromic);
    }

    #[test]
    fn lemma_trace_examples() {
        let v = lemma_trace_values([1.0, 1.0, 1.0], 1.0);
        assert_eq!(v.tau_b, (-1.0, 0.0));
        assert_eq!(v.tau_a, 4.0);
    }

    #[test]
    fn oracle_on_table_rows() {
        for (t, want) in [((3, 3, 10), TypeLabel::A), ((20, 30, 50), TypeLabel::B), ((9, 14, 15), TypeLabel::A)] {
            let tr = Triple::new(t.0, t.1, t.2).unwrap();
            assert_eq!(oracle_type(&tr, 10_000, 1e-9).unwrap().label, want, "{}", tr);
        }
    }
}
