//! The registered claims: transcribed auxiliary polynomials, the lemma
//! items, the identities behind the long divisions, and a set of
//! deliberately false canaries.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::prover::{Atom, Relation};
use super::{Body, Claim, Point};
use crate::algebra::{discriminant, int, parse_poly, rat, BigRat, MPoly, RatMPoly, RealAlgebraic, UPoly, Var};
use crate::typeclass::{build_f, build_f_b, t_a_poly};

use Relation::{Eq, Ge, Gt, Le, Lt};

/// Transcribed polynomials, by name.
const TEXTS: &[(&str, &str)] = &[
    ("phi", "a^3 (1 - b) + 60 - 67 b + 25 b^2 + 2 b^3 + a^2 (5 - 6 b + 4 b^2) + a (-32 + 39 b - 17 b^2 - b^3)"),
    ("psi", "a^3 (-1 + b) + 12 - 27 b + 2 b^2 - 4 b^3 + a^2 (-1 + b - 3 b^2) + a (-24 + 23 b + b^2 + 2 b^3)"),
    ("psi_quot", "a^2 (-1 + b) + a (14 - 12 b + b^2) - 18 + 19 b - 2 b^2"),
    ("chi", "-47 + 93 b - 63 b^2 + 18 b^3 - 2 b^4 + a (b - 2) (-18 + 22 b - 8 b^2 + b^3)"),
    ("chi_lead", "-18 + 22 b - 8 b^2 + b^3"),
    ("chi_num", "47 - 93 b + 63 b^2 - 18 b^3 + 2 b^4"),
    ("gamma", "16 - 33 a b + 6 a^2 b^2 + 24 (a + b) - 10 a b (a + b) + 9 (a + b)^2 - a b (a + b)^2 + (a + b)^3"),
    ("alpha", "-53 - 6 a b (a + b - 1) + 3 (a + b) + 3 (a + b)^2 + (a + b)^3"),
    ("omega", "7 - a + a^2 - b - 2 a b + b^2"),
    ("epsilon", "542 + 1090 (a + b) - 73 (a + b)^2 - 97 (a + b)^3 + 19 (a + b)^4 - (a + b)^5"),
    ("delta", "211 - 48 a b + 39 (a + b) - 3 (a + b)^2 + (a + b)^3"),
    ("lambda", "-9 + a b (a + b + 3)"),
    ("sigma", "33 + 9 a b - 6 a^2 b^2 + 3 (a + b) - 6 a b (a + b) + 6 (a + b)^2 + a b (a + b)^2"),
    ("eta", "1344 + 1152 (a + b) - 384 (a + b)^2 + 192 (a + b)^3 + 12 (a + b)^4 - 12 (a + b)^5 + (a + b)^6"),
    (
        "kappa",
        "384 - 240 a b + 48 a^2 b^2 + 48 a b (a + b) - 12 (a + b)^2 - 4 a b (a + b)^2 + 12 (a + b)^3 - (a + b)^4",
    ),
    ("kappa_lower", "12672 - 6912 x + 888 x^2 + 12 x^3 - 2 x^4"),
    ("mu", "-4 - a - b + a b"),
    (
        "lambda0",
        "-176 + 96 a - 8 a^2 + 4 a^3 + a^4 (-1 + b)^2 + 96 b + 8 a b - 36 a^2 b + 2 a^3 b - 8 b^2 - 36 a b^2 \
         + 23 a^2 b^2 + 4 b^3 + 2 a b^3 - 2 a^3 b^3 + b^4 - 2 a b^4 + a^2 b^4",
    ),
    (
        "lambda1",
        "120 - 64 a + 10 a^2 + 2 a^3 - 64 b + 50 a b - 14 a^2 b - 2 a^3 b + 10 b^2 - 14 a b^2 + 8 a^2 b^2 + 2 b^3 - 2 a b^3",
    ),
    ("lambda2", "-35 + 14 a + a^2 + 14 b - 10 a b + b^2"),
    ("Delta_inner", "43 - 96 a b + 51 (a + b) + 9 (a + b)^2 + (a + b)^3"),
    ("Delta_lower", "43 + 51 x - 15 x^2 + x^3"),
    ("gpp_mid", "-70 - 24 a b + 40 (a + b) + 2 (a + b)^2"),
    ("h_b", "(b - 1) a^2 + (-5 + 5 b - 3 b^2) a + (32 - 44 b + 22 b^2 - 2 b^3)"),
    ("k_b", "120 - 198 b + 138 b^2 - 40 b^3 + 4 b^4"),
    ("alpha_a", "53 - 3 a - 3 a^2 - a^3 - 123 b + 42 a b - 3 a^2 b + 21 b^2 - 3 a b^2 - b^3"),
    ("gamma_a", "(b - a) (-24 - 9 a - a^2 + 49 b - 4 a b - 3 b^2) + 4 (4 - b)"),
    ("gamma_a_factor", "-24 - 9 a - a^2 + 49 b - 4 a b - 3 b^2"),
    ("gamma_a_lower", "-24 + 40 b - 8 b^2"),
    ("alpha_b", "53 - 123 a + 21 a^2 - a^3 + (-3 + 42 a - 3 a^2) b + (-3 - 3 a) b^2 - b^3"),
    ("gamma_b", "16 - 28 a + 49 a^2 - 3 a^3 + (24 - 58 a - a^2) b + (9 + 3 a) b^2 + b^3"),
    ("h1", "-3 + 4 a - 2 a^2 + (2 - 3 a + a^2) b + (-4 + a) b^2"),
    ("h1_disc", "-44 + 64 a - 35 a^2 + 2 a^3 + a^4"),
    (
        "h2",
        "12 - 24 a - a^2 - a^3 + (-27 + 23 a + a^2 + a^3) b + (2 + a - 3 a^2) b^2 + (-4 + 2 a) b^3",
    ),
    ("j3", "12 + a^3 (-1 + b) - 27 b + 2 b^2 - 4 b^3 + a^2 (-1 + b - 3 b^2) + a (-24 + 23 b + b^2 + 2 b^3)"),
    ("s4", "16 + 24 x + 9 x^2 + x^3 + (-33 - 10 x - x^2) y + 6 y^2"),
    ("h5", "21 + 6 a + a^2 - 8 a b + 4 b^2"),
    (
        "h6",
        "(-176 + 96 a - 8 a^2 + 4 a^3 + a^4) + (216 - 56 a - 26 a^2 + 4 a^3 - 2 a^4) b \
         + (-107 + 28 a + 10 a^2 - 2 a^3 + a^4) b^2 + (32 - 22 a + 8 a^2 - 2 a^3) b^3 + (a - 2)^2 b^4",
    ),
    (
        "j7",
        "(-176 + 216 b - 107 b^2 + 32 b^3 + 4 b^4) + (96 - 56 b + 28 b^2 - 22 b^3 - 4 b^4) a \
         + (-8 - 26 b + 10 b^2 + 8 b^3 + b^4) a^2 + (4 + 4 b - 2 b^2 - 2 b^3) a^3 + (b - 1)^2 a^4",
    ),
    (
        "h8",
        "60 - 32 a + 5 a^2 + a^3 + (-67 + 39 a - 6 a^2 - a^3) b + (25 - 17 a + 4 a^2) b^2 + (2 - a) b^3",
    ),
    (
        "h9",
        "60 - 32 a + 5 a^2 + a^3 + (-67 + 39 a - 6 a^2 - a^3) b + (25 - 17 a + 4 a^2) b^2 + (2 - a) b^3",
    ),
    ("j10", "60 + a^3 (1 - b) - 67 b + 25 b^2 + 2 b^3 + a^2 (5 - 6 b + 4 b^2) + a (-32 + 39 b - 17 b^2 - b^3)"),
    ("j11", "60 + a^3 (1 - b) - 67 b + 25 b^2 + 2 b^3 + a^2 (5 - 6 b + 4 b^2) + a (-32 + 39 b - 17 b^2 - b^3)"),
    (
        "j12",
        "(48 - 28 b + 14 b^2 - 11 b^3 - 2 b^4) + (-8 - 26 b + 10 b^2 + 8 b^3 + b^4) a \
         + (6 + 6 b - 3 b^2 - 3 b^3) a^2 + 2 (b - 1)^2 a^3",
    ),
    ("h13", "-32 + 10 a + 3 a^2 + (39 - 12 a - 3 a^2) b + (-17 + 8 a) b^2 - b^3"),
    (
        "h14",
        "(48 - 8 a + 6 a^2 + 2 a^3) + (-28 - 26 a + 6 a^2 - 4 a^3) b + (14 + 10 a - 3 a^2 + 2 a^3) b^2 \
         + (-11 + 8 a - 3 a^2) b^3 + (-2 + a) b^4",
    ),
    (
        "h15",
        "(48 - 8 a + 6 a^2 + 2 a^3) + (-28 - 26 a + 6 a^2 - 4 a^3) b + (14 + 10 a - 3 a^2 + 2 a^3) b^2 \
         + (-11 + 8 a - 3 a^2) b^3 + (-2 + a) b^4",
    ),
    (
        "h16",
        "16 + 24 a + 9 a^2 + a^3 + (24 - 15 a - 7 a^2 - a^3) b + (9 - 7 a + 4 a^2) b^2 + (1 - a) b^3",
    ),
    ("h17", "53 - 3 a - 3 a^2 - a^3 + (-123 + 42 a - 3 a^2) b + (21 - 3 a) b^2 - b^3"),
    (
        "s18",
        "(-271 - 1037 y + 854 y^2 - 226 y^3 + 25 y^4 - y^5) + (-492 + 756 y - 180 y^2 + 12 y^3) x \
         + (-378 + 180 y - 18 y^2) x^2 + 144 x^3",
    ),
    (
        "h19",
        "96 + 8 a - 36 a^2 + 2 a^3 - 2 a^4 + (-80 - 22 a + 32 a^2 - 2 a^3 + 2 a^4) b \
         + (46 - 32 a + 16 a^2 - 6 a^3) b^2 + (12 - 14 a + 4 a^2) b^3",
    ),
    (
        "h20",
        "64 + 48 a - 92 a^2 - 6 a^3 - 2 a^4 + (96 - 184 a + 110 a^2 + 2 a^4) b + (36 - 18 a - 6 a^3) b^2 \
         + (4 - 8 a + 4 a^2) b^3",
    ),
    (
        "h21",
        "96 + 8 a - 36 a^2 + 2 a^3 - 2 a^4 + (-80 - 22 a + 32 a^2 - 2 a^3 + 2 a^4) b \
         + (46 - 32 a + 16 a^2 - 6 a^3) b^2 + (12 - 14 a + 4 a^2) b^3",
    ),
    ("h22", "-64 + 50 a - 14 a^2 - 2 a^3 + (48 - 48 a + 16 a^2) b + (10 - 6 a) b^2"),
    (
        "H1",
        "60 - 32 a + 5 a^2 + a^3 + (-67 + 39 a - 6 a^2 - a^3) b + (25 - 17 a + 4 a^2) b^2 + (2 - a) b^3",
    ),
    (
        "H2",
        "48 + 4 a - 18 a^2 + a^3 - a^4 - (40 + 11 a - 16 a^2 + a^3 - a^4) b + (23 - 16 a + 8 a^2 - 3 a^3) b^2 \
         + (6 - 7 a + 2 a^2) b^3",
    ),
    ("H3", "53 - 123 a + 21 a^2 - a^3 + (-3 + 42 a - 3 a^2) b + (-3 - 3 a) b^2 - b^3"),
    ("H4", "16 - 28 a + 49 a^2 - 3 a^3 + (24 - 58 a - a^2) b + (9 + 3 a) b^2 + b^3"),
    ("s5", "16 - 2 y + (26 - 20 y + 2 y^2) x + (29 - y) x^2"),
    (
        "s6",
        "271 + 1037 y - 854 y^2 + 226 y^3 - 25 y^4 + y^5 + (-492 + 756 y - 180 y^2 + 12 y^3) x \
         + (378 - 180 y + 18 y^2) x^2 + 144 x^3",
    ),
    ("R", "(-2 + a) (-66 + 11 a + a^2) - (161 - 101 a + 11 a^2 + a^3) b + (-4 + a) (-13 + 5 a) b^2"),
    (
        "alpha_R",
        "(a - 3) (292875 - 596625 a + 523563 a^2 - 253410 a^3 + 70828 a^4 - 10189 a^5 + 166 a^6 + 175 a^7 \
         - 24 a^8 + a^9)",
    ),
    ("gamma_R", "-11041 + 22881 a - 19330 a^2 + 8687 a^3 - 2254 a^4 + 340 a^5 - 28 a^6 + a^7"),
    ("rho_R", "-4 (-4 + a)^4 (-13 + 5 a)^3 (80 - 33 a + 3 a^2) (73 - 90 a + 46 a^2 - 11 a^3 + a^4)^2"),
];

fn parse_int(s: &str) -> MPoly {
    parse_poly(s).expect("transcription parses").integral().expect("integer coefficients").clone()
}

fn table() -> &'static BTreeMap<&'static str, MPoly> {
    static T: OnceLock<BTreeMap<&'static str, MPoly>> = OnceLock::new();
    T.get_or_init(|| {
        let mut m: BTreeMap<&'static str, MPoly> = TEXTS.iter().map(|(k, s)| (*k, parse_int(s))).collect();
        let f = build_f();
        let fb = build_f_b();
        let ta = t_a_poly();
        let at_ta = |p: &MPoly| p.compose(&[(Var::T, ta.clone())]).integral().expect("integral at T_A").clone();
        let g1 = f.partial(Var::C);
        m.insert("Delta", discriminant(&g1, Var::C).expect("quadratic in c"));
        m.insert("g1", g1);
        m.insert("g2", at_ta(&fb.partial(Var::T)));
        m.insert("g3", at_ta(&fb.partial(Var::T).partial(Var::T)));
        m.insert("g4", f.partial(Var::A));
        m.insert("g5", f.partial(Var::B));
        m
    })
}

/// A registered polynomial by name.
pub fn named(name: &str) -> MPoly {
    table().get(name).unwrap_or_else(|| panic!("unknown polynomial {name}")).clone()
}

/// Names of every registered polynomial.
pub fn poly_names() -> Vec<&'static str> {
    table().keys().copied().collect()
}

fn n(name: &str) -> RatMPoly {
    named(name).rat()
}

fn r(s: &str) -> RatMPoly {
    parse_poly(s).expect("expression parses")
}

fn at(p: &MPoly, v: Var, value: &str) -> MPoly {
    p.compose(&[(v, r(value))]).integral().expect("integral substitution").clone()
}

/// `p(x = a + b, y = a b)`.
fn sym_xy(p: &MPoly) -> MPoly {
    p.compose(&[(Var::X, r("a + b")), (Var::Y, r("a b"))]).integral().unwrap().clone()
}

/// `p(x = b - a, y = a + b)`.
fn diff_sum(p: &MPoly) -> MPoly {
    p.compose(&[(Var::X, r("b - a")), (Var::Y, r("a + b"))]).integral().unwrap().clone()
}

fn pt(x: BigRat, y: BigRat) -> Point {
    (x, y)
}

fn tri1() -> Vec<Point> {
    vec![pt(int(1), int(1)), pt(int(4), int(4)), pt(int(1), int(4))]
}

fn tri2() -> Vec<Point> {
    vec![pt(int(2), int(2)), pt(int(4), int(4)), pt(int(2), int(4))]
}

/// `2 <= a <= b <= 4` with `14 + 2b - 10a <= 0`.
fn quad() -> Vec<Point> {
    vec![pt(int(2), int(2)), pt(int(4), int(4)), pt(rat(11, 5), int(4)), pt(int(2), int(3))]
}

fn segment(lo: BigRat, hi: BigRat) -> Vec<Point> {
    vec![pt(lo, int(0)), pt(hi, int(0))]
}

fn root(coeffs: &[i64], lo: i64, hi: i64) -> RealAlgebraic {
    RealAlgebraic::root_in(&UPoly::from_ints(coeffs), &int(lo), &int(hi)).expect("isolated threshold")
}

fn q(n: i64, d: i64) -> RealAlgebraic {
    RealAlgebraic::rational(rat(n, d))
}

/// `(sqrt(134) - 4)/2`
fn t134() -> RealAlgebraic {
    root(&[-59, 8, 2], 3, 4)
}

/// `2 + sqrt(3)`
fn t23() -> RealAlgebraic {
    root(&[1, -4, 1], 3, 4)
}

/// `1 + 2 sqrt(2)`
fn t122() -> RealAlgebraic {
    root(&[-7, -2, 1], 3, 4)
}

/// `(33 - sqrt(129))/6`
pub fn a_star() -> RealAlgebraic {
    root(&[80, -33, 3], 3, 4)
}

/// `(15 - sqrt(13))/3`
fn t13() -> RealAlgebraic {
    root(&[212, -90, 9], 3, 4)
}

/// `(10 + sqrt(30))/2`
fn t30() -> RealAlgebraic {
    root(&[35, -20, 2], 7, 8)
}

/// `(10 + sqrt(30))/4`
fn t30q() -> RealAlgebraic {
    root(&[35, -40, 8], 3, 4)
}

/// `3 + sqrt(3)`
fn t33() -> RealAlgebraic {
    root(&[6, -6, 1], 4, 5)
}

fn sign(p: MPoly, rel: Relation) -> Atom {
    Atom::sign(p, rel)
}

fn a_(rel: Relation, t: RealAlgebraic) -> Atom {
    Atom::coord(0, rel, t)
}

fn b_(rel: Relation, t: RealAlgebraic) -> Atom {
    Atom::coord(1, rel, t)
}

/// `a + b rel t`.
fn sum_(rel: Relation, t: RealAlgebraic) -> Atom {
    Atom::Linear { form: [int(1), int(1)], rel, bound: t }
}

const AB: [Var; 2] = [Var::A, Var::B];

struct Builder {
    claims: Vec<Claim>,
}

impl Builder {
    fn add(&mut self, id: &str, statement: &str, owns: &[&str], body: Body) -> &mut Claim {
        let polys = owns.iter().map(|k| (k.to_string(), named(k))).collect();
        self.claims.push(Claim { id: id.into(), statement: statement.into(), polys, body, note: None });
        self.claims.last_mut().unwrap()
    }

    fn identity(&mut self, id: &str, statement: &str, owns: &[&str], lhs: RatMPoly, rhs: RatMPoly) -> &mut Claim {
        self.add(id, statement, owns, Body::Identity { lhs, rhs, modulo: None })
    }

    #[allow(clippy::too_many_arguments)]
    fn implication(
        &mut self,
        id: &str,
        statement: &str,
        owns: &[&str],
        vars: [Var; 2],
        region: Vec<Point>,
        hypotheses: Vec<Atom>,
        conclusion: Atom,
    ) -> &mut Claim {
        self.add(id, statement, owns, Body::Region { vars, region, hypotheses, conclusion })
    }

    /// Single-variable claim on `[lo, hi]`.
    #[allow(clippy::too_many_arguments)]
    fn interval(
        &mut self,
        id: &str,
        statement: &str,
        owns: &[&str],
        var: Var,
        lo: BigRat,
        hi: BigRat,
        hypotheses: Vec<Atom>,
        conclusion: Atom,
    ) -> &mut Claim {
        self.implication(id, statement, owns, [var, Var::T], segment(lo, hi), hypotheses, conclusion)
    }
}

trait Noted {
    fn note(&mut self, s: &str);
}

impl Noted for Claim {
    fn note(&mut self, s: &str) {
        self.note = Some(s.into());
    }
}

fn lemma_5_1(b: &mut Builder) {
    b.implication("L5.1.1", "h1 >= 0 => a >= (sqrt(134)-4)/2 on 1<=a<=b<=4", &["h1"], AB, tri1(),
        vec![sign(named("h1"), Ge)], a_(Ge, t134()));
    b.implication("L5.1.2", "h2 < 0 => a < 2+sqrt(3) on 1<=a<=b<=4", &["h2"], AB, tri1(),
        vec![sign(named("h2"), Lt)], a_(Lt, t23()));
    b.implication("L5.1.3", "j3 >= 0 => b >= 2+sqrt(3) on 1<=a<=b<=4", &["j3"], AB, tri1(),
        vec![sign(named("j3"), Ge)], b_(Ge, t23()));
    b.implication("L5.1.4", "s4(a+b, ab) > 0 and a+b >= 5 => a+b < 39/5 on 1<=a<=b<=4", &["s4"], AB, tri1(),
        vec![sign(sym_xy(&named("s4")), Gt), sum_(Ge, q(5, 1))], sum_(Lt, q(39, 5)));
    b.implication("L5.1.5", "h5 <= 0 => a >= 1+2sqrt(2) on 1<=a<=b<=4", &["h5"], AB, tri1(),
        vec![sign(named("h5"), Le)], a_(Ge, t122()));
    b.implication("L5.1.6", "h6 > 0 => a < 11/3 on 1<=a<=b<=4", &["h6"], AB, tri1(),
        vec![sign(named("h6"), Gt)], a_(Lt, q(11, 3)));
    b.implication("L5.1.7", "j7 > 0 and a >= a* => b < 387/100 on 1<=a<=b<=4", &["j7"], AB, tri1(),
        vec![sign(named("j7"), Gt), a_(Ge, a_star())], b_(Lt, q(387, 100)))
        .note("the printed item places '>0' after a*; read as j7 > 0 together with a >= a*");
    b.implication("L5.1.8", "h8 <= 0 => a >= a* on 1<=a<=b<=4", &["h8"], AB, tri1(),
        vec![sign(named("h8"), Le)], a_(Ge, a_star()));
    b.implication("L5.1.9", "h9 > 0 => a < 372/100 on 1<=a<=b<=4", &["h9"], AB, tri1(),
        vec![sign(named("h9"), Gt)], a_(Lt, q(372, 100)));
    b.implication("L5.1.10", "j10 <= 0 and a < 11/3 => b > 389/100 on 1<=a<=b<=4", &["j10"], AB, tri1(),
        vec![sign(named("j10"), Le), a_(Lt, q(11, 3))], b_(Gt, q(389, 100)));
    b.implication("L5.1.11", "j11 > 0 and a > 11/3 => b < 390/100 on 1<=a<=b<=4", &["j11"], AB, tri1(),
        vec![sign(named("j11"), Gt), a_(Gt, q(11, 3))], b_(Lt, q(390, 100)));
}

fn lemma_5_2(b: &mut Builder) {
    b.implication("L5.2.1", "j12 <= 0 => a < 377/100 on 2<=a<=b<=4", &["j12"], AB, tri2(),
        vec![sign(named("j12"), Le)], a_(Lt, q(377, 100)))
        .note("as printed; j12 vanishes at a=b=4");
    b.implication("L5.2.2", "h13 > 0 => a > (15-sqrt(13))/3 on 2<=a<=b<=4", &["h13"], AB, tri2(),
        vec![sign(named("h13"), Gt)], a_(Gt, t13()));
    b.implication("L5.2.3", "h14 >= 0 => a >= 11/3 on 2<=a<=b<=4", &["h14"], AB, tri2(),
        vec![sign(named("h14"), Ge)], a_(Ge, q(11, 3)));
    b.implication("L5.2.4", "h15 >= 0 and a < 372/100 => b > 394/100 on 2<=a<=b<=4", &["h15"], AB, tri2(),
        vec![sign(named("h15"), Ge), a_(Lt, q(372, 100))], b_(Gt, q(394, 100)));
    b.implication("L5.2.5", "h16 > 0 => a < 384/100 on 2<=a<=b<=4", &["h16"], AB, tri2(),
        vec![sign(named("h16"), Gt)], a_(Lt, q(384, 100)));
    b.implication("L5.2.6", "h17 <= 0 and a >= a* => a > 388/100 on 2<=a<=b<=4", &["h17"], AB, tri2(),
        vec![sign(named("h17"), Le), a_(Ge, a_star())], a_(Gt, q(388, 100)));
    let rect = vec![pt(int(0), int(4)), pt(int(2), int(4)), pt(int(2), int(8)), pt(int(0), int(8))];
    b.implication("L5.2.7", "s18 > 0 on 0<=x<=2, 4<=y<=8", &["s18"], [Var::X, Var::Y], rect, vec![],
        sign(named("s18"), Gt));
    b.implication("L5.2.8", "h19 >= 0 => a >= a* on 2<=a<=b<=4", &["h19"], AB, tri2(),
        vec![sign(named("h19"), Ge)], a_(Ge, a_star()))
        .note("as printed; h19 vanishes at a=2, b=4");
    b.implication("L5.2.9", "h20 >= 0 => a >= a* on 2<=a<=b<=4", &["h20"], AB, tri2(),
        vec![sign(named("h20"), Ge)], a_(Ge, a_star()))
        .note("as printed; h20 vanishes at a=2, b=4");
    b.implication("L5.2.10", "h21 < 0 => a < 15/4 on 2<=a<=b<=4", &["h21"], AB, tri2(),
        vec![sign(named("h21"), Lt)], a_(Lt, q(15, 4)));
    b.implication("L5.2.11", "h22 > 0 => a > 387/100 on 2<=a<=b<=4", &["h22"], AB, tri2(),
        vec![sign(named("h22"), Gt)], a_(Gt, q(387, 100)))
        .note("as printed; h22 > 0 at a=b=387/100");
    // corrected forms of the two items above
    b.implication("E5.2.1", "j12 < 0 => a < 377/100 on 2<=a<=b<=4", &[], AB, tri2(),
        vec![sign(named("j12"), Lt)], a_(Lt, q(377, 100)))
        .note("strict hypothesis excludes the corner a=b=4");
    b.implication("E5.2.8", "h19 > 0 => a >= a* on 2<=a<=b<=4", &[], AB, tri2(),
        vec![sign(named("h19"), Gt)], a_(Ge, a_star()))
        .note("strict hypothesis excludes the corner a=2, b=4");
    b.implication("E5.2.9", "h20 > 0 => a >= a* on 2<=a<=b<=4", &[], AB, tri2(),
        vec![sign(named("h20"), Gt)], a_(Ge, a_star()))
        .note("strict hypothesis excludes the corner a=2, b=4");
    b.implication("E5.2.11", "h22 > 0 => a > 386/100 on 2<=a<=b<=4", &[], AB, tri2(),
        vec![sign(named("h22"), Gt)], a_(Gt, q(386, 100)))
        .note("threshold lowered from 387/100");
}

fn lemma_5_3(b: &mut Builder) {
    let strip = || sign(parse_int("14 + 2 b - 10 a"), Lt);
    b.implication("L5.3.1", "H1 > 0 => H2 < 0 on 2<=a<=b<=4, 14+2b-10a < 0", &["H1", "H2"], AB, quad(),
        vec![strip(), sign(named("H1"), Gt)], sign(named("H2"), Lt));
    b.implication("L5.3.2", "H3 >= 0 and a >= a* => H4 > 0 on 2<=a<=b<=4, 14+2b-10a < 0", &["H3", "H4"], AB,
        quad(), vec![strip(), sign(named("H3"), Ge), a_(Ge, a_star())], sign(named("H4"), Gt));
    b.implication("L5.3.3", "s5 > 0 and a >= a* => s6 < 0 with x=b-a, y=a+b on 2<=a<=b<=4, 14+2b-10a < 0",
        &["s5", "s6"], AB, quad(),
        vec![strip(), sign(diff_sum(&named("s5")), Gt), a_(Ge, a_star())], sign(diff_sum(&named("s6")), Lt));
}

fn lemma_4_2(b: &mut Builder) {
    let f = build_f();
    let g = at(&f, Var::C, "b");
    let gp = at(&named("g1"), Var::C, "b");
    let gpp = at(&named("g1").partial(Var::C), Var::C, "b");
    b.implication("L4.2.1", "Delta >= 0 and g''(b) < 0 => g'(b) <= 0 on 1<=a<=b<=4, g = F", &["Delta"], AB,
        tri1(), vec![sign(named("Delta"), Ge), sign(gpp, Lt)], sign(gp.clone(), Le));
    b.implication("L4.2.2", "Delta >= 0 and g'(b) <= 0 => g(b) <= 0 on 1<=a<=b<=4, g = F", &[], AB, tri1(),
        vec![sign(named("Delta"), Ge), sign(gp, Le)], sign(g, Le));
}

fn prop_3_2(b: &mut Builder) {
    let g1 = named("g1");
    let g2 = named("g2");
    let g3 = named("g3");
    let seg_b = |lo: BigRat| (Var::B, lo, int(4));

    b.identity("P3.2.1.lc", "c^2 coefficient of g2 is -32(a+b+1)", &["g2"], g2.coeff_in(Var::C, 2).rat(),
        r("-32 (a + b + 1)"));
    b.identity("P3.2.1.phi", "phi = g1(b)/2", &["g1", "phi"], n("phi"), at(&g1, Var::C, "b").rat().scale(&rat(1, 2)));
    b.identity("P3.2.1.psi", "psi = g2(b)/32", &["psi"], n("psi"), at(&g2, Var::C, "b").rat().scale(&rat(1, 32)));
    b.identity("P3.2.1.h1", "h1 = g2'(b)/32", &[], n("h1"),
        at(&g2.partial(Var::C), Var::C, "b").rat().scale(&rat(1, 32)));
    b.identity("P3.2.1.h2", "h2 = psi", &[], n("h2"), n("psi"));
    b.identity("P3.2.1.j3", "j3 = psi", &[], n("j3"), n("psi"));
    b.implication("P3.2.1.g2p_g2", "h1 >= 0 => h2 >= 0 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sign(named("h1"), Ge)], sign(named("h2"), Ge));
    b.add("P3.2.1.thresholds", "(sqrt(134)-4)/2 > 2+sqrt(3)", &[],
        Body::Root { poly: UPoly::from_ints(&[1, -4, 1]), at: t134(), rel: Gt });
    b.identity("P3.2.1.psi_div", "psi = -phi + (b-4) psi_quot", &["psi_quot"], n("psi"),
        &(-&n("phi")) + &(&r("b - 4") * &n("psi_quot")));
    b.add("P3.2.1.phi_div", "psi ((19-18b+5b^2) - a(b-1)) - 6(b-4) chi = 0 modulo phi", &["chi"], Body::Identity {
        lhs: &(&n("psi") * &r("19 - 18 b + 5 b^2 - a (b - 1)")) - &(&r("6 (b - 4)") * &n("chi")),
        rhs: RatMPoly::zero(),
        modulo: Some((named("phi"), Var::A)),
    })
    .note("holds at the roots of phi in a, not as a polynomial identity");
    let (v, lo, hi) = seg_b(int(3));
    b.interval("P3.2.1.phi_diag", "phi(a=b) <= 0 for 2+sqrt(3) <= b <= 4", &[], v, lo.clone(), hi.clone(),
        vec![a_(Ge, t23())], sign(at(&named("phi"), Var::A, "b"), Le));
    let phi_pp = at(&named("phi").partial(Var::A).partial(Var::A), Var::A, "b");
    b.interval("P3.2.1.phi_pp", "phi''(a=b) > 0 for 2+sqrt(3) <= b <= 4", &[], v, lo.clone(), hi.clone(),
        vec![b_coord_seg(Ge, t23())], sign(phi_pp, Gt));
    b.interval("P3.2.1.chi_lead", "-18+22b-8b^2+b^3 > 0 for b >= 2+sqrt(3)", &["chi_lead"], v, lo.clone(),
        hi.clone(), vec![b_coord_seg(Ge, t23())], sign(named("chi_lead"), Gt));
    b.identity("P3.2.1.chi_coef", "chi = -chi_num + a (b-2) chi_lead", &["chi_num"], n("chi"),
        &(-&n("chi_num")) + &(&r("a (b - 2)") * &n("chi_lead")));
    b.interval("P3.2.1.quot", "(19-18b+5b^2)/(b-1) > b for b >= 2+sqrt(3)", &[], v, lo.clone(), hi.clone(),
        vec![b_coord_seg(Ge, t23())], sign(parse_int("19 - 18 b + 5 b^2 - b (b - 1)"), Gt));
    let den = parse_int("(b - 2) (-18 + 22 b - 8 b^2 + b^3)");
    b.interval("P3.2.1.chi_root", "b > chi_num / ((b-2) chi_lead) for b >= 2+sqrt(3)", &[], v, lo.clone(),
        hi.clone(), vec![b_coord_seg(Ge, t23())], sign(&(&parse_int("b") * &den) - &named("chi_num"), Gt));
    let phi_at = named("phi").substitute_fraction(Var::A, &named("chi_num"), &den);
    b.interval("P3.2.1.phi_at_root", "phi(chi_num / ((b-2) chi_lead)) > 0 for b >= 2+sqrt(3)", &[], v, lo, hi,
        vec![b_coord_seg(Ge, t23())], sign(phi_at, Gt))
        .note("cleared by the cube of the positive denominator");
    b.identity("P3.2.1.g1_4", "g1(4) = 2 gamma", &["gamma"], at(&g1, Var::C, "4").rat(), n("gamma").scale(&int(2)));
    b.identity("P3.2.1.gamma_s4", "gamma = s4(a+b, ab)", &[], n("gamma"), sym_xy(&named("s4")).rat());
    b.identity("P3.2.1.g2_div", "g2 = -8(a+b+1) g1/3 + 16/3 (alpha c - 4 alpha + (a+b-5) gamma)", &["alpha"],
        g2.rat(),
        &(&r("-8 (a + b + 1) / 3") * &g1.rat())
            + &(&r("16/3") * &(&(&n("alpha") * &r("c - 4")) + &(&r("a + b - 5") * &n("gamma")))));
    b.implication("P3.2.1.alpha", "a+b >= 5 => alpha > 0 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sum_(Ge, q(5, 1))], sign(named("alpha"), Gt));
    let c0_num = &named("alpha").scale_i64(4) - &(&parse_int("a + b - 5") * &named("gamma"));
    b.identity("P3.2.1.g1_c0", "alpha^2 g1(c0) = 72 omega^2 gamma, c0 = 4 - (a+b-5) gamma/alpha", &["omega"],
        g1.substitute_fraction(Var::C, &c0_num, &named("alpha")).rat(),
        (&n("omega").pow(2) * &n("gamma")).scale(&int(72)));
    b.identity("P3.2.1.g1p_c0", "alpha g1'(c0) = epsilon + 3(a-b)^2 delta", &["epsilon", "delta"],
        g1.partial(Var::C).substitute_fraction(Var::C, &c0_num, &named("alpha")).rat(),
        &n("epsilon") + &(&r("3 (a - b)^2") * &n("delta")))
        .note("the printed form omits the factor alpha on the left");
    b.implication("P3.2.1.delta", "delta > 0 on 1<=a<=b<=4", &[], AB, tri1(), vec![], sign(named("delta"), Gt));
    b.implication("P3.2.1.epsilon", "epsilon <= 0 => a+b > 79/10 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sign(named("epsilon"), Le)], sum_(Gt, q(79, 10)));

    b.identity("P3.2.2.g3", "g3/512 = 21+6a+a^2+6b-10ab+b^2+(-6+2a+2b)c+c^2", &["g3"], g3.rat().scale(&rat(1, 512)),
        r("21 + 6 a + a^2 + 6 b - 10 a b + b^2 + (-6 + 2 a + 2 b) c + c^2"));
    b.identity("P3.2.2.g3p", "g3'/512 = 2(a+b+c-3)", &[], g3.partial(Var::C).rat().scale(&rat(1, 512)),
        r("2 (a + b + c - 3)"));
    b.identity("P3.2.2.j_div", "(a+b+1) g3/512 = -g2/32 + sigma + lambda c", &["lambda", "sigma"],
        &r("(a + b + 1) / 512") * &g3.rat(),
        &(&g2.rat().scale(&rat(-1, 32)) + &n("sigma")) + &(&n("lambda") * &r("c")));
    b.implication("P3.2.2.lambda", "b >= 2+sqrt(3) => lambda > 0 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![b_(Ge, t23())], sign(named("lambda"), Gt));
    b.identity("P3.2.2.g2_root", "lambda^2 g2(-sigma/lambda) = 6(a+b+1) mu (eta + (a-b)^2 kappa)",
        &["eta", "kappa", "mu"],
        g2.substitute_fraction(Var::C, &(-&named("sigma")), &named("lambda")).rat(),
        &(&r("6 (a + b + 1)") * &n("mu")) * &(&n("eta") + &(&r("(a - b)^2") * &n("kappa"))))
        .note("printed with 64 eta; the expansion gives eta");
    b.implication("P3.2.2.eta", "eta > 0 on 1<=a<=b<=4", &[], AB, tri1(), vec![], sign(named("eta"), Gt));
    b.implication("P3.2.2.mu", "h2 >= 0 => -4-a-b+ab > 0 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sign(named("h2"), Ge)], sign(named("mu"), Gt));
    b.interval("P3.2.2.kappa_lower", "kappa_lower(x) > 0 for 3+sqrt(3) <= x <= 8", &["kappa_lower"], Var::X,
        int(4), int(8), vec![b_coord_seg(Ge, t33())], sign(named("kappa_lower"), Gt));
    let kl = sym_xy(&named("kappa_lower"));
    b.implication("P3.2.2.kappa_chain", "b >= 2+sqrt(3) => kappa >= kappa_lower(a+b) on 1<=a<=b<=4", &[], AB,
        tri1(), vec![b_(Ge, t23())], sign(&named("kappa") - &kl, Ge));
    b.implication("P3.2.2.kappa", "h2 >= 0 => kappa > 0 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sign(named("h2"), Ge)], sign(named("kappa"), Gt));
}

/// Hypothesis on the running coordinate of a one-variable claim.
fn b_coord_seg(rel: Relation, t: RealAlgebraic) -> Atom {
    Atom::coord(0, rel, t)
}

fn section_4(b: &mut Builder) {
    let f = build_f();
    let g1 = named("g1");
    let g4 = named("g4");
    let g5 = named("g5");
    b.identity("P4.1.lambda", "F = 4c^3 + lambda2 c^2 + lambda1 c + lambda0", &["lambda0", "lambda1", "lambda2"],
        f.rat(),
        &(&(&r("4 c^3") + &(&n("lambda2") * &r("c^2"))) + &(&n("lambda1") * &r("c"))) + &n("lambda0"));
    b.identity("D4.2.disc", "disc_c(F_c) = 4(a+b-5) Delta_inner", &["Delta_inner"], n("Delta"),
        &r("4 (a + b - 5)") * &n("Delta_inner"));
    b.identity("D4.2.disc_bound", "Delta_inner - Delta_lower(a+b) = 24(a-b)^2", &["Delta_lower"],
        &n("Delta_inner") - &sym_xy(&named("Delta_lower")).rat(), r("24 (a - b)^2"));
    b.interval("D4.2.disc_cubic", "Delta_lower(x) > 0 for 2 <= x <= 8", &[], Var::X, int(2), int(8), vec![],
        sign(named("Delta_lower"), Gt));
    b.identity("D4.2.gpp", "F_cc((a+b)/2) = gpp_mid", &["gpp_mid"],
        f.partial(Var::C).partial(Var::C).compose(&[(Var::C, r("(a + b) / 2"))]), n("gpp_mid"));
    b.implication("D4.2.sum", "gpp_mid < 0 and a+b >= 5 => a+b > (10+sqrt(30))/2 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sign(named("gpp_mid"), Lt), sum_(Ge, q(5, 1))], sum_(Gt, t30()));
    b.identity("D4.2.gp_split", "g'(b) = 2(b-a) h_b(a) + k(b)", &["h_b", "k_b"], at(&g1, Var::C, "b").rat(),
        &(&r("2 (b - a)") * &n("h_b")) + &n("k_b"));
    b.implication("D4.2.hb", "a+b > (10+sqrt(30))/2 => h_b(a) < 0 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sum_(Gt, t30())], sign(named("h_b"), Lt));
    b.interval("D4.2.k", "k(b) <= 0 for (10+sqrt(30))/4 < b <= 4", &[], Var::B, int(3), int(4),
        vec![b_coord_seg(Gt, t30q())], sign(named("k_b"), Le));
    b.identity("D4.2.h8", "g'(b) = 2 h8", &[], at(&g1, Var::C, "b").rat(), n("h8").scale(&int(2)));
    for k in ["h9", "j10", "j11", "phi", "H1"] {
        b.identity(&format!("D4.2.{k}"), &format!("{k} = h8"), &[], n(k), n("h8"));
    }
    b.identity("D4.2.h6", "F(a,b,b) = h6", &[], at(&f, Var::C, "b").rat(), n("h6"));
    b.identity("D4.2.j7", "j7 = h6", &[], n("j7"), n("h6"));

    // first part: da F < 0
    b.identity("P4.3.1.lc", "c^2 coefficient of g4 is 14+2a-10b", &["g4"], g4.coeff_in(Var::C, 2).rat(),
        r("14 + 2 a - 10 b"));
    b.implication("P4.3.1.lc_sign", "14+2a-10b < 0 on 2<=a<=b<=4", &[], AB, tri2(), vec![],
        sign(parse_int("14 + 2 a - 10 b"), Lt));
    b.identity("P4.3.1.j12", "g4(b) = 2 j12", &[], at(&g4, Var::C, "b").rat(), n("j12").scale(&int(2)));
    b.identity("P4.3.1.h14", "j12 = h14", &[], n("j12"), n("h14"));
    b.identity("P4.3.1.h15", "h14 = h15", &[], n("h14"), n("h15"));
    b.identity("P4.3.1.h13", "g4'(b) = 2 h13", &[], at(&g4.partial(Var::C), Var::C, "b").rat(),
        n("h13").scale(&int(2)));
    b.identity("P4.3.1.h16", "g1(4) = 2 h16", &[], at(&g1, Var::C, "4").rat(), n("h16").scale(&int(2)));
    b.identity("P4.3.1.h17", "h17 = alpha_a", &["alpha_a"], n("h17"), n("alpha_a"));
    b.identity("P4.3.1.g4_div",
        "g4 = (7+a-5b) g1/6 + 1/3 (alpha_a c - (4-4b+ab) alpha_a - (a+b-5) gamma_a)", &["gamma_a"], g4.rat(),
        &(&r("(7 + a - 5 b) / 6") * &g1.rat())
            + &(&r("1/3") * &(&(&n("alpha_a") * &r("c - (4 - 4 b + a b)")) - &(&r("a + b - 5") * &n("gamma_a")))));
    let c0a = &(&named("alpha_a") * &parse_int("4 - 4 b + a b")) + &(&parse_int("a + b - 5") * &named("gamma_a"));
    b.identity("P4.3.1.g1_c0", "alpha_a^2 g1(c0) = 72 omega^2 gamma_a, c0 = 4-4b+ab + (a+b-5) gamma_a/alpha_a", &[],
        g1.substitute_fraction(Var::C, &c0a, &named("alpha_a")).rat(),
        (&n("omega").pow(2) * &n("gamma_a")).scale(&int(72)));
    b.identity("P4.3.1.g1p_c0", "alpha_a g1'(c0) = 2 s18(b-a, a+b)", &[],
        g1.partial(Var::C).substitute_fraction(Var::C, &c0a, &named("alpha_a")).rat(),
        diff_sum(&named("s18")).rat().scale(&int(2)));
    b.identity("P4.3.1.gamma_factor", "gamma_a_factor - gamma_a_lower = (b-a)(9+a+5b)",
        &["gamma_a_factor", "gamma_a_lower"], &n("gamma_a_factor") - &n("gamma_a_lower"), r("(b - a) (9 + a + 5 b)"));
    b.identity("P4.3.1.gamma_split", "gamma_a = (b-a) gamma_a_factor + 4(4-b)", &[], n("gamma_a"),
        &(&r("b - a") * &n("gamma_a_factor")) + &r("4 (4 - b)"));
    b.interval("P4.3.1.gamma_bound", "-24+40b-8b^2 > 0 for 2 <= b <= 4", &[], Var::B, int(2), int(4), vec![],
        sign(named("gamma_a_lower"), Gt));
    b.implication("P4.3.1.gamma_pos", "a < 384/100 => gamma_a > 0 on 2<=a<=b<=4", &[], AB, tri2(),
        vec![a_(Lt, q(384, 100))], sign(named("gamma_a"), Gt));

    // second part: db F <= 0
    b.identity("P4.3.2.lc", "c^2 coefficient of g5 is 14+2b-10a", &["g5"], g5.coeff_in(Var::C, 2).rat(),
        r("14 + 2 b - 10 a"));
    b.implication("P4.3.2.lc_case", "14+2b-10a >= 0 => a < a* on 2<=a<=b<=4", &[], AB, tri2(),
        vec![sign(parse_int("14 + 2 b - 10 a"), Ge)], a_(Lt, a_star()));
    b.add("P4.3.2.eq", "g5(2,4,4) = 0", &[], Body::Point {
        poly: g5.clone(),
        at: vec![(Var::A, int(2)), (Var::B, int(4)), (Var::C, int(4))],
        rel: Eq,
    });
    b.identity("P4.3.2.h19", "g5(b) = h19", &[], at(&g5, Var::C, "b").rat(), n("h19"));
    b.identity("P4.3.2.h21", "h21 = h19", &[], n("h21"), n("h19"));
    b.identity("P4.3.2.h20", "g5(4) = h20", &[], at(&g5, Var::C, "4").rat(), n("h20"));
    b.identity("P4.3.2.h22", "g5'(b) = h22", &[], at(&g5.partial(Var::C), Var::C, "b").rat(), n("h22"));
    b.identity("P4.3.2.H2", "g5(b) = 2 H2", &[], at(&g5, Var::C, "b").rat(), n("H2").scale(&int(2)));
    b.identity("P4.3.2.H3", "H3 = alpha_b", &["alpha_b"], n("H3"), n("alpha_b"));
    b.identity("P4.3.2.H4", "H4 = gamma_b", &["gamma_b"], n("H4"), n("gamma_b"));
    b.identity("P4.3.2.s5", "gamma_b = s5(b-a, a+b)", &[], n("gamma_b"), diff_sum(&named("s5")).rat());
    b.identity("P4.3.2.g5_div",
        "g5 = (7+b-5a) g1/6 + 1/3 (alpha_b c - (4-4a+ab) alpha_b - (a+b-5) gamma_b)", &[], g5.rat(),
        &(&r("(7 + b - 5 a) / 6") * &g1.rat())
            + &(&r("1/3") * &(&(&n("alpha_b") * &r("c - (4 - 4 a + a b)")) - &(&r("a + b - 5") * &n("gamma_b")))));
    let c0b = &(&named("alpha_b") * &parse_int("4 - 4 a + a b")) + &(&parse_int("a + b - 5") * &named("gamma_b"));
    b.identity("P4.3.2.g1_c0", "alpha_b^2 g1(c0) = 72 omega^2 gamma_b, c0 = 4-4a+ab + (a+b-5) gamma_b/alpha_b", &[],
        g1.substitute_fraction(Var::C, &c0b, &named("alpha_b")).rat(),
        (&n("omega").pow(2) * &n("gamma_b")).scale(&int(72)));
    b.identity("P4.3.2.g1p_c0", "alpha_b g1'(c0) = -2 s6(b-a, a+b)", &[],
        g1.partial(Var::C).substitute_fraction(Var::C, &c0b, &named("alpha_b")).rat(),
        diff_sum(&named("s6")).rat().scale(&int(-2)));

    b.add("P4.3.F112", "F(1,1,2) > 0", &[], Body::Point {
        poly: f.clone(),
        at: vec![(Var::A, int(1)), (Var::B, int(1)), (Var::C, int(2))],
        rel: Gt,
    });
    let f1bb = at(&at(&f, Var::C, "b"), Var::A, "1");
    b.identity("P4.3.F1bb_factor", "F(1,b,b) = (b-1)(b^3+17b^2-53b+83)", &[], f1bb.rat(),
        r("(b - 1) (b^3 + 17 b^2 - 53 b + 83)"));
    b.interval("P4.3.F1bb", "F(1,b,b) > 0 for 2 <= b <= 4", &[], Var::B, int(2), int(4), vec![],
        sign(f1bb.clone(), Gt));
    b.interval("P4.3.F1bb_open", "b > 1 => F(1,b,b) > 0 for 1 <= b <= 4", &[], Var::B, int(1), int(4),
        vec![b_coord_seg(Gt, q(1, 1))], sign(f1bb, Gt));
}

fn lemma_proofs(b: &mut Builder) {
    let h1 = named("h1");
    b.identity("D5.1.h1_disc", "disc_b(h1) = -44+64a-35a^2+2a^3+a^4", &["h1_disc"],
        discriminant(&h1, Var::B).unwrap().rat(), n("h1_disc"));
    b.identity("D5.1.h1_slope", "h1'(4) = -30+5a+a^2", &[], at(&h1.partial(Var::B), Var::B, "4").rat(),
        r("-30 + 5 a + a^2"));
    b.identity("D5.1.h1_edge", "h1(4) = -59+8a+2a^2", &[], at(&h1, Var::B, "4").rat(), r("-59 + 8 a + 2 a^2"));
    let h2 = named("h2");
    b.identity("D5.1.h2_diag", "h2(a) = -3(a-4)(1-4a+a^2)", &[], at(&h2, Var::B, "a").rat(),
        r("-3 (a - 4) (1 - 4 a + a^2)"));
    b.identity("D5.1.h2p_diag", "h2'(a) = (a-3)^3", &[], at(&h2.partial(Var::B), Var::B, "a").rat(), r("(a - 3)^3"));
    b.identity("D5.1.h2pp_diag", "h2''(a) = 4-22a+6a^2", &[],
        at(&h2.partial(Var::B).partial(Var::B), Var::B, "a").rat(), r("4 - 22 a + 6 a^2"));
    let j3 = named("j3");
    b.identity("D5.1.j3_diag", "j3(b) = -3(b-4)(1-4b+b^2)", &[], at(&j3, Var::A, "b").rat(),
        r("-3 (b - 4) (1 - 4 b + b^2)"));
    b.identity("D5.1.j3p_diag", "j3'(b) = -24+21b-b^3", &[], at(&j3.partial(Var::A), Var::A, "b").rat(),
        r("-24 + 21 b - b^3"));
    b.identity("D5.1.j3pp_diag", "j3''(b) = -2-4b", &[], at(&j3.partial(Var::A).partial(Var::A), Var::A, "b").rat(),
        r("-2 - 4 b"));
    let s4 = named("s4");
    b.identity("D5.1.s4_top", "s4(x^2/4) = (x-8)(-16-26x-4x^2+x^3)/8", &[],
        s4.compose(&[(Var::Y, r("x^2 / 4"))]), r("(x - 8) (-16 - 26 x - 4 x^2 + x^3) / 8"));
    b.identity("D5.1.s4_bottom", "s4(4x-16) = -(x-8)(260-57x+3x^2)", &[], s4.compose(&[(Var::Y, r("4 x - 16"))]),
        r("-(x - 8) (260 - 57 x + 3 x^2)"));
    b.identity("D5.1.h6_diag", "h6(a) = -(a-4)^2(a-1)(3a-11)", &[], at(&named("h6"), Var::B, "a").rat(),
        r("-(a - 4)^2 (a - 1) (3 a - 11)"));
    let s18 = named("s18");
    let disc = discriminant(&s18.partial(Var::X), Var::X).unwrap();
    b.interval("D5.2.s18_disc", "disc_x(s18') < 0 for 4 <= y <= 8", &[], Var::Y, int(4), int(8), vec![],
        sign(disc, Lt));
    b.interval("D5.2.s18_edge", "s18(0) > 0 for 4 <= y <= 8", &[], Var::Y, int(4), int(8), vec![],
        sign(at(&s18, Var::X, "0"), Gt));

    let (h1l, h2l) = (named("H1"), named("H2"));
    b.identity("D5.3.rem", "H2 - (3-2a) H1 = (a-1) R", &["R"], &h2l.rat() - &(&r("3 - 2 a") * &h1l.rat()),
        &r("a - 1") * &n("R"))
        .note("printed with 2(a-1)");
    let disc_r = discriminant(&named("R"), Var::B).unwrap();
    b.identity("D5.3.alpha_gamma", "alpha_R^2 - gamma_R^2 disc_b(R) = rho_R", &["alpha_R", "gamma_R", "rho_R"],
        &n("alpha_R").pow(2) - &(&n("gamma_R").pow(2) * &disc_r.rat()), n("rho_R"));
    let a2 = parse_int("(-4 + a) (-13 + 5 a)");
    let a1 = parse_int("-(161 - 101 a + 11 a^2 + a^3)");
    let num = &(-&a1) + &MPoly::var(Var::T);
    let den = a2.scale_i64(2);
    b.add("D5.3.h1_b0", "(2A)^3 H1(b0) = -24 (alpha_R + gamma_R T) modulo T^2 - disc_b(R), b0 = (-B + T)/(2A)", &[],
        Body::Identity {
            lhs: h1l.substitute_fraction(Var::B, &num, &den).rat(),
            rhs: (&(&n("alpha_R") + &(&n("gamma_R") * &r("T"))) * &r("-24")),
            modulo: Some((&(&MPoly::var(Var::T) * &MPoly::var(Var::T)) - &disc_r, Var::T)),
        })
        .note("equivalent to H1(b0) = 3(alpha_R + gamma_R sqrt(disc)) / ((4-a)^3 (5a-13)^3); printed with 6");
    let seg = (Var::A, int(3), rat(372, 100));
    b.interval("D5.3.alpha_pos", "alpha_R > 0 for a* <= a < 372/100", &[], seg.0, seg.1.clone(), seg.2.clone(),
        vec![b_coord_seg(Ge, a_star()), b_coord_seg(Lt, q(372, 100))], sign(named("alpha_R"), Gt));
    b.interval("D5.3.rho_sign", "rho_R >= 0 for a* <= a < 372/100", &[], seg.0, seg.1, seg.2,
        vec![b_coord_seg(Ge, a_star()), b_coord_seg(Lt, q(372, 100))], sign(named("rho_R"), Ge));
    b.add("D5.3.gamma_at", "gamma_R(a*) > 0", &[], Body::Root {
        poly: named("gamma_R").to_upoly(Var::A).unwrap(),
        at: a_star(),
        rel: Gt,
    });
}

fn build() -> Vec<Claim> {
    let mut b = Builder { claims: Vec::new() };
    lemma_5_1(&mut b);
    lemma_5_2(&mut b);
    lemma_5_3(&mut b);
    lemma_4_2(&mut b);
    prop_3_2(&mut b);
    section_4(&mut b);
    lemma_proofs(&mut b);
    b.claims
}

/// Every registered claim, in a fixed order.
pub fn registry() -> &'static [Claim] {
    static R: OnceLock<Vec<Claim>> = OnceLock::new();
    R.get_or_init(build)
}

/// Deliberately false claims; the prover must refute every one.
pub fn canaries() -> Vec<Claim> {
    let mut b = Builder { claims: Vec::new() };
    b.interval("K01", "x - 1 > 0 for 0 <= x <= 2", &[], Var::X, int(0), int(2), vec![], sign(parse_int("x - 1"), Gt));
    b.implication("K02", "h1 >= 0 => a >= 19/5 on 1<=a<=b<=4", &[], AB, tri1(), vec![sign(named("h1"), Ge)],
        a_(Ge, q(19, 5)));
    b.implication("K03", "h5 <= 0 => a >= 4 on 1<=a<=b<=4", &[], AB, tri1(), vec![sign(named("h5"), Le)],
        a_(Ge, q(4, 1)));
    b.implication("K04", "h6 > 0 => a > 11/3 on 1<=a<=b<=4", &[], AB, tri1(), vec![sign(named("h6"), Gt)],
        a_(Gt, q(11, 3)));
    let rect = vec![pt(int(0), int(4)), pt(int(2), int(4)), pt(int(2), int(8)), pt(int(0), int(8))];
    b.implication("K05", "s18 < 0 on 0<=x<=2, 4<=y<=8", &[], [Var::X, Var::Y], rect, vec![], sign(named("s18"), Lt));
    b.implication("K06", "s4(a+b, ab) > 0 and a+b >= 5 => a+b < 7 on 1<=a<=b<=4", &[], AB, tri1(),
        vec![sign(sym_xy(&named("s4")), Gt), sum_(Ge, q(5, 1))], sum_(Lt, q(7, 1)));
    b.identity("K07", "g3/512 = 22+6a+a^2+6b-10ab+b^2+(-6+2a+2b)c+c^2", &[], named("g3").rat().scale(&rat(1, 512)),
        r("22 + 6 a + a^2 + 6 b - 10 a b + b^2 + (-6 + 2 a + 2 b) c + c^2"));
    b.implication("K08", "delta < 0 on 1<=a<=b<=4", &[], AB, tri1(), vec![], sign(named("delta"), Lt));
    b.implication("K09", "h8 <= 0 => a >= 37/10 on 1<=a<=b<=4", &[], AB, tri1(), vec![sign(named("h8"), Le)],
        a_(Ge, q(37, 10)));
    b.add("K10", "F(1,1,2) < 0", &[], Body::Point {
        poly: build_f(),
        at: vec![(Var::A, int(1)), (Var::B, int(1)), (Var::C, int(2))],
        rel: Lt,
    });
    b.claims
}
