use num_rational::BigRational;

use super::{BigRat, RatInterval, Sign, UPoly};

/// Signed remainder sequence `p, p', -rem(p, p'), ...`.
///
/// Every element is rescaled by a positive constant to primitive integer form,
/// which leaves all sign patterns unchanged while keeping coefficients small.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UPoly>,
}

impl SturmChain {
    pub fn new(p: &UPoly) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p.primitive());
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(d.primitive());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            chain.push((-&r).primitive());
        }
        SturmChain { chain }
    }

    pub fn chain(&self) -> &[UPoly] {
        &self.chain
    }

    /// Sign changes in the chain evaluated at `x`, zeros dropped.
    pub fn variations_at(&self, x: &BigRat) -> usize {
        let mut prev: Option<Sign> = None;
        let mut count = 0;
        for q in &self.chain {
            let s = q.sign_at(x);
            if s == Sign::Zero {
                continue;
            }
            if let Some(ps) = prev {
                if ps != s {
                    count += 1;
                }
            }
            prev = Some(s);
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`. Only meaningful for a squarefree head.
    pub fn count(&self, lo: &BigRat, hi: &BigRat) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &UPoly, lo: &BigRat, hi: &BigRat) -> usize {
    if p.is_zero() || p.is_constant() {
        return 0;
    }
    SturmChain::new(&p.squarefree()).count(lo, hi)
}

/// Disjoint closed intervals, sorted, each holding exactly one distinct root
/// of `p` in `[lo, hi]`. Non-degenerate intervals have endpoints where the
/// squarefree part of `p` is nonzero with opposite signs.
pub fn isolate_roots(p: &UPoly, lo: &BigRat, hi: &BigRat) -> Vec<RatInterval> {
    if p.is_zero() || p.is_constant() || lo > hi {
        return Vec::new();
    }
    let q = p.squarefree();
    let chain = SturmChain::new(&q);
    let mut out = Vec::new();
    if q.sign_at(lo) == Sign::Zero {
        out.push(RatInterval::point(lo.clone()));
    }
    let two = BigRational::from_integer(2.into());
    let mut stack = vec![(lo.clone(), hi.clone(), chain.count(lo, hi))];
    let mut found = Vec::new();
    while let Some((l, u, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            found.push(single_root(&q, &chain, l, u));
            continue;
        }
        let m = (&l + &u) / &two;
        let left = chain.count(&l, &m);
        stack.push((m.clone(), u, n - left));
        stack.push((l, m, left));
    }
    found.sort_by(|x, y| x.lo().cmp(y.lo()));
    for i in 1..found.len() {
        while found[i - 1].hi() >= found[i].lo() {
            let w = found[i - 1].width() / &two;
            found[i - 1] = refine_root(&q, &found[i - 1], &w);
        }
    }
    if let (Some(first), Some(prev)) = (found.first_mut(), out.last()) {
        while first.lo() <= prev.hi() {
            let w = first.width() / &two;
            *first = refine_root(&q, first, &w);
        }
    }
    out.extend(found);
    out
}

fn single_root(q: &UPoly, chain: &SturmChain, mut l: BigRat, u: BigRat) -> RatInterval {
    if q.sign_at(&u) == Sign::Zero {
        return RatInterval::point(u);
    }
    let two = BigRational::from_integer(2.into());
    let mut u = u;
    while q.sign_at(&l) == Sign::Zero {
        let m = (&l + &u) / &two;
        if chain.count(&l, &m) == 1 {
            if q.sign_at(&m) == Sign::Zero {
                return RatInterval::point(m);
            }
            u = m;
        } else {
            l = m;
        }
    }
    RatInterval::new(l, u).expect("ordered")
}

/// Shrinks an isolating interval of a squarefree `q` by bisection until its
/// width is at most `width`. Returns a point interval if a midpoint hits the root.
pub fn refine_root(q: &UPoly, iv: &RatInterval, width: &BigRat) -> RatInterval {
    if iv.is_point() {
        return iv.clone();
    }
    let (mut l, mut u) = iv.clone().into_bounds();
    let sl = q.sign_at(&l);
    let two = BigRational::from_integer(2.into());
    while &(&u - &l) > width {
        let m = (&l + &u) / &two;
        let sm = q.sign_at(&m);
        if sm == Sign::Zero {
            return RatInterval::point(m);
        }
        if sm == sl {
            l = m;
        } else {
            u = m;
        }
    }
    RatInterval::new(l, u).expect("ordered")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn counts_from_examples() {
        let p = UPoly::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(sturm_count(&p, &int(0), &int(4)), 3);
        let f = UPoly::from_ints(&[-27, 0, 18, -8, 1]);
        assert_eq!(sturm_count(&f, &int(-2), &int(4)), 2);
        assert_eq!(sturm_count(&UPoly::from_ints(&[1, 0, 1]), &int(-10), &int(10)), 0);
    }

    #[test]
    fn half_open_convention() {
        let p = UPoly::from_ints(&[-2, 3, -1]);
        assert_eq!(sturm_count(&p, &int(1), &int(2)), 1);
        assert_eq!(sturm_count(&p, &int(0), &int(1)), 1);
        assert_eq!(sturm_count(&p, &int(2), &int(3)), 0);
    }

    #[test]
    fn isolates_sqrt2_to_tiny_width() {
        let p = UPoly::from_ints(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &int(0), &int(2));
        assert_eq!(roots.len(), 1);
        let r = refine_root(&p, &roots[0], &rat(1, 1_000_000_000_000));
        assert!(r.width() <= rat(1, 1_000_000_000_000));
        assert!(r.lo_f64() <= 2f64.sqrt() + 1e-15 && 2f64.sqrt() - 1e-15 <= r.hi_f64());
    }

    #[test]
    fn isolates_rational_roots_including_endpoints() {
        let p = UPoly::from_ints(&[2, -3, 1]);
        let roots = isolate_roots(&p, &int(0), &int(3));
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&int(1)) && roots[1].contains(&int(2)));
        assert!(roots[0].hi() < roots[1].lo());
        let at_ends = isolate_roots(&p, &int(1), &int(2));
        assert_eq!(at_ends, vec![RatInterval::point(int(1)), RatInterval::point(int(2))]);
    }

    #[test]
    fn isolates_threshold_root() {
        let p = UPoly::from_ints(&[-59, 8, 2]);
        let roots = isolate_roots(&p, &int(0), &int(4));
        assert_eq!(roots.len(), 1);
        let v = (134f64.sqrt() - 4.0) / 2.0;
        assert!(roots[0].lo_f64() <= v && v <= roots[0].hi_f64());
    }
}
