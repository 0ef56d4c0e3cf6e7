//! Bernstein coefficients of bivariate polynomials over triangles.
//!
//! Coefficients are kept as integers up to a positive factor shared by the
//! whole patch, which is all the sign tests need.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{BigRat, MPoly, Var};

pub type Point = (BigRat, BigRat);

/// Signs present in a coefficient vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignSet {
    pub pos: bool,
    pub neg: bool,
    pub zero: bool,
}

impl SignSet {
    pub fn of<'a, I: IntoIterator<Item = &'a BigInt>>(it: I) -> Self {
        let mut s = SignSet::default();
        for x in it {
            if x.is_positive() {
                s.pos = true;
            } else if x.is_negative() {
                s.neg = true;
            } else {
                s.zero = true;
            }
        }
        s
    }

    pub fn all_pos(&self) -> bool {
        !self.neg && !self.zero
    }
    pub fn all_nonneg(&self) -> bool {
        !self.neg
    }
    pub fn all_neg(&self) -> bool {
        !self.pos && !self.zero
    }
    pub fn all_nonpos(&self) -> bool {
        !self.pos
    }
    pub fn all_zero(&self) -> bool {
        !self.pos && !self.neg
    }
}

fn row_start(n: usize, i: usize) -> usize {
    let mut s = 0;
    for r in 0..i {
        s += n + 1 - r;
    }
    s
}

/// Coefficients `b[i,j,k]`, `i + j + k = n`, weights of vertices 0, 1, 2.
#[derive(Clone, Debug)]
pub struct Patch {
    n: usize,
    offsets: Vec<usize>,
    coef: Vec<BigInt>,
}

impl Patch {
    fn with_degree(n: usize) -> Self {
        let offsets = (0..=n).map(|i| row_start(n, i)).collect();
        Patch { n, offsets, coef: vec![BigInt::zero(); (n + 1) * (n + 2) / 2] }
    }

    fn at(&self, i: usize, j: usize) -> usize {
        self.offsets[i] + j
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: [usize; 3]) -> &BigInt {
        &self.coef[self.at(w[0], w[1])]
    }

    fn set(&mut self, w: [usize; 3], v: BigInt) {
        let k = self.at(w[0], w[1]);
        self.coef[k] = v;
    }

    pub fn signs(&self) -> SignSet {
        SignSet::of(self.coef.iter())
    }

    /// Exact sign data of the value at vertex `m`.
    pub fn corner(&self, m: usize) -> &BigInt {
        let mut w = [0; 3];
        w[m] = self.n;
        self.get(w)
    }

    /// Builds the patch of `p(u, v)` on the triangle `tri`.
    pub fn new(p: &MPoly, vars: [Var; 2], tri: &[Point; 3]) -> Self {
        let n = p.total_degree() as usize;
        let forms: [[BigRat; 3]; 3] = [
            [tri[0].0.clone(), tri[1].0.clone(), tri[2].0.clone()],
            [tri[0].1.clone(), tri[1].1.clone(), tri[2].1.clone()],
            [BigRat::one(), BigRat::one(), BigRat::one()],
        ];
        let mut acc = vec![BigRat::zero(); (n + 1) * (n + 2) / 2];
        let offs: Vec<usize> = (0..=n).map(|i| row_start(n, i)).collect();
        for (m, c) in p.terms() {
            let e = m.exp(vars[0]) as usize;
            let f = m.exp(vars[1]) as usize;
            let mut h = Homog::one();
            for _ in 0..e {
                h = h.mul_linear(&forms[0]);
            }
            for _ in 0..f {
                h = h.mul_linear(&forms[1]);
            }
            for _ in 0..(n - e - f) {
                h = h.mul_linear(&forms[2]);
            }
            let c = BigRational::from_integer(c.clone());
            for i in 0..=n {
                for j in 0..=(n - i) {
                    let v = h.get(i, j);
                    if !v.is_zero() {
                        acc[offs[i] + j] += &c * v;
                    }
                }
            }
        }
        let mut den = BigInt::one();
        for i in 0..=n {
            for j in 0..=(n - i) {
                let k = n - i - j;
                let mult = multinomial(n, i, j, k);
                let v = &mut acc[offs[i] + j];
                *v = &*v / BigRational::from_integer(mult);
                den = den.lcm(v.denom());
            }
        }
        let mut out = Patch::with_degree(n);
        let d = BigRational::from_integer(den);
        for (slot, v) in out.coef.iter_mut().zip(acc) {
            *slot = (v * &d).to_integer();
        }
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        let mut g = BigInt::zero();
        for c in &self.coef {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for c in self.coef.iter_mut() {
            *c = &*c / &g;
        }
    }

    /// Halves the edge between vertices `p` and `q`. The first result keeps
    /// vertex `p` (with `q` replaced by the midpoint), the second keeps `q`.
    pub fn split(&self, p: usize, q: usize) -> (Patch, Patch) {
        let r = 3 - p - q;
        let n = self.n;
        let mut left = Patch::with_degree(n);
        let mut right = Patch::with_degree(n);
        for k in 0..=n {
            let m = n - k;
            let mut row: Vec<BigInt> = (0..=m)
                .map(|j| {
                    let mut w = [0; 3];
                    w[p] = m - j;
                    w[q] = j;
                    w[r] = k;
                    self.get(w).clone()
                })
                .collect();
            // level t holds the de Casteljau values scaled by 2^t
            let mut lvals = Vec::with_capacity(m + 1);
            let mut rvals = vec![BigInt::zero(); m + 1];
            lvals.push(row[0].clone());
            rvals[m] = row[m].clone();
            for t in 1..=m {
                for j in 0..=(m - t) {
                    row[j] = &row[j] + &row[j + 1];
                }
                lvals.push(row[0].clone());
                rvals[m - t] = row[m - t].clone();
            }
            for t in 0..=m {
                // left: weight t on the midpoint (slot q)
                let mut w = [0; 3];
                w[p] = m - t;
                w[q] = t;
                w[r] = k;
                left.set(w, &lvals[t] << (n - t));
                // right: control point j = weight on q, scaled by 2^(m - j)
                let j = t;
                let mut w = [0; 3];
                w[p] = m - j;
                w[q] = j;
                w[r] = k;
                right.set(w, &rvals[j] << (n - (m - j)));
            }
        }
        left.normalize();
        right.normalize();
        (left, right)
    }

    /// Signs of the Bernstein coefficients of the derivative along the
    /// vector whose barycentric increments are `delta` (summing to zero).
    pub fn derivative_signs(&self, delta: &[BigInt; 3]) -> SignSet {
        let n = self.n;
        if n == 0 {
            return SignSet { zero: true, ..Default::default() };
        }
        let mut s = SignSet::default();
        for i in 0..n {
            for j in 0..(n - i) {
                let k = n - 1 - i - j;
                let v = delta[0].clone() * self.get([i + 1, j, k])
                    + delta[1].clone() * self.get([i, j + 1, k])
                    + delta[2].clone() * self.get([i, j, k + 1]);
                if v.is_positive() {
                    s.pos = true;
                } else if v.is_negative() {
                    s.neg = true;
                } else {
                    s.zero = true;
                }
            }
        }
        s
    }
}

fn multinomial(n: usize, i: usize, j: usize, k: usize) -> BigInt {
    let f = |m: usize| -> BigInt { (1..=m).fold(BigInt::one(), |acc, x| acc * BigInt::from(x)) };
    f(n) / (f(i) * f(j) * f(k))
}

/// Dense homogeneous polynomial in three barycentric variables.
struct Homog {
    d: usize,
    c: Vec<BigRat>,
}

impl Homog {
    fn one() -> Self {
        Homog { d: 0, c: vec![BigRat::one()] }
    }

    fn get(&self, i: usize, j: usize) -> &BigRat {
        &self.c[row_start(self.d, i) + j]
    }

    fn mul_linear(&self, l: &[BigRat; 3]) -> Homog {
        let d = self.d + 1;
        let mut c = vec![BigRat::zero(); (d + 1) * (d + 2) / 2];
        for i in 0..=self.d {
            for j in 0..=(self.d - i) {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                c[row_start(d, i + 1) + j] += v * &l[0];
                c[row_start(d, i) + j + 1] += v * &l[1];
                c[row_start(d, i) + j] += v * &l[2];
            }
        }
        Homog { d, c }
    }
}

/// Barycentric increments of the vector `dir` on `tri`, scaled by a positive
/// factor to integers.
pub fn barycentric_direction(tri: &[Point; 3], dir: &Point) -> [BigInt; 3] {
    let e1 = (&tri[1].0 - &tri[0].0, &tri[1].1 - &tri[0].1);
    let e2 = (&tri[2].0 - &tri[0].0, &tri[2].1 - &tri[0].1);
    let det = &e1.0 * &e2.1 - &e1.1 * &e2.0;
    let d1 = (&dir.0 * &e2.1 - &dir.1 * &e2.0) / &det;
    let d2 = (&e1.0 * &dir.1 - &e1.1 * &dir.0) / &det;
    let d0 = -(&d1 + &d2);
    let den = d0.denom().lcm(d1.denom()).lcm(d2.denom());
    let scale = BigRational::from_integer(den);
    [(d0 * &scale).to_integer(), (d1 * &scale).to_integer(), (d2 * &scale).to_integer()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_poly, rat};

    fn tri(v: [(i64, i64); 3]) -> [Point; 3] {
        [(int(v[0].0), int(v[0].1)), (int(v[1].0), int(v[1].1)), (int(v[2].0), int(v[2].1))]
    }

    fn poly(s: &str) -> MPoly {
        parse_poly(s).unwrap().integral().unwrap().clone()
    }

    #[test]
    fn corners_are_values() {
        let p = poly("a^2 b - 3 a + b^3 - 7");
        let t = tri([(1, 1), (1, 4), (4, 4)]);
        let patch = Patch::new(&p, [Var::A, Var::B], &t);
        for m in 0..3 {
            let v = p.eval(&[(Var::A, t[m].0.clone()), (Var::B, t[m].1.clone())]).unwrap();
            assert_eq!(patch.corner(m).sign(), v.numer().sign());
        }
    }

    #[test]
    fn split_matches_direct() {
        let p = poly("a^3 - 2 a b^2 + 5 b - 1");
        let t = tri([(0, 0), (4, 0), (0, 4)]);
        let patch = Patch::new(&p, [Var::A, Var::B], &t);
        let (l, r) = patch.split(0, 1);
        let mid = (int(2), int(0));
        let tl = [t[0].clone(), mid.clone(), t[2].clone()];
        let tr = [mid, t[1].clone(), t[2].clone()];
        let dl = Patch::new(&p, [Var::A, Var::B], &tl);
        let dr = Patch::new(&p, [Var::A, Var::B], &tr);
        assert_eq!(l.coef, dl.coef);
        assert_eq!(r.coef, dr.coef);
        let (l2, r2) = patch.split(2, 1);
        let mid = (int(2), int(2));
        let tl = [t[0].clone(), mid.clone(), t[2].clone()];
        let tr = [t[0].clone(), t[1].clone(), mid];
        assert_eq!(l2.coef, Patch::new(&p, [Var::A, Var::B], &tl).coef);
        assert_eq!(r2.coef, Patch::new(&p, [Var::A, Var::B], &tr).coef);
    }

    #[test]
    fn enclosure_brackets_samples() {
        let p = poly("a^2 + b^2 - 2");
        let t = tri([(0, 0), (2, 0), (0, 2)]);
        let patch = Patch::new(&p, [Var::A, Var::B], &t);
        let s = patch.signs();
        assert!(s.pos && s.neg);
        let q = poly("a^2 + b^2 + 1");
        assert!(Patch::new(&q, [Var::A, Var::B], &t).signs().all_pos());
        let _ = rat(1, 2);
    }

    #[test]
    fn derivative_direction() {
        let p = poly("a - b");
        let t = tri([(0, 0), (3, 1), (1, 3)]);
        let patch = Patch::new(&p, [Var::A, Var::B], &t);
        let d = barycentric_direction(&t, &(int(1), int(0)));
        assert!(patch.derivative_signs(&d).all_pos());
        let d = barycentric_direction(&t, &(int(1), int(1)));
        assert!(patch.derivative_signs(&d).all_zero());
    }
}
