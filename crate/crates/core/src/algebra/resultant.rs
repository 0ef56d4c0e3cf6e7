use super::{AlgebraError, MPoly, Var};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
fn determinant(mut m: Vec<Vec<MPoly>>) -> Result<MPoly, AlgebraError> {
    let n = m.len();
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(MPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Sylvester resultant of `p` and `q` with respect to `v`.
pub fn resultant(p: &MPoly, q: &MPoly, v: Var) -> Result<MPoly, AlgebraError> {
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let m = p.degree_in(v) as usize;
    let n = q.degree_in(v) as usize;
    if p.is_zero() || q.is_zero() {
        return Ok(MPoly::zero());
    }
    if m == 0 && n == 0 {
        return Ok(MPoly::one());
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in pc.iter().enumerate() {
            row[i + (m - k)] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in qc.iter().enumerate() {
            row[i + (n - k)] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

/// Discriminant of `p` in `v`: `(-1)^(n(n-1)/2) Res(p, dp/dv) / lc(p)`.
pub fn discriminant(p: &MPoly, v: Var) -> Result<MPoly, AlgebraError> {
    let n = p.degree_in(v) as usize;
    if n < 2 {
        return Err(AlgebraError::DegreeTooSmall { var: v, degree: n, needed: 2 });
    }
    let lc = p.coeff_in(v, n as u32);
    let r = resultant(p, &p.partial(v), v)?.div_exact(&lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(s: &str) -> MPoly {
        parse_poly(s).unwrap().integral().unwrap().clone()
    }

    #[test]
    fn quadratic_discriminants() {
        assert!(discriminant(&p("x^2 - 2 x + 1"), Var::X).unwrap().is_zero());
        assert_eq!(discriminant(&p("x^2 - 2"), Var::X).unwrap(), p("8"));
        assert_eq!(discriminant(&p("a x^2 + b x + c"), Var::X).unwrap(), p("b^2 - 4 a c"));
    }

    #[test]
    fn cubic_discriminant() {
        let d = discriminant(&p("x^3 + a x + b"), Var::X).unwrap();
        assert_eq!(d, p("-4 a^3 - 27 b^2"));
    }

    #[test]
    fn resultant_vanishes_on_common_root() {
        let r = resultant(&p("x^2 - a"), &p("x - b"), Var::X).unwrap();
        assert_eq!(r, p("b^2 - a"));
    }

    #[test]
    fn degree_too_small() {
        assert!(matches!(discriminant(&p("a x + 1"), Var::X), Err(AlgebraError::DegreeTooSmall { .. })));
    }
}
