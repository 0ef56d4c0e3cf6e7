use num_bigint::BigInt;
use num_rational::BigRational;

use super::{AlgebraError, MPoly, RatMPoly, Var};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(Var),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(s[start..i].parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() {
            let v = Var::from_name(&ch.to_string())
                .ok_or_else(|| AlgebraError::Parse { pos: i, msg: format!("unknown variable `{}`", ch) })?;
            out.push((i, Tok::Ident(v)));
            i += 1;
        } else if "+-*/^()".contains(ch) {
            out.push((i, Tok::Op(ch)));
            i += 1;
        } else {
            return Err(AlgebraError::Parse { pos: i, msg: format!("unexpected `{}`", ch) });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: &str) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse { pos: self.here(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<RatMPoly, AlgebraError> {
        let mut neg = false;
        if let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            neg = *c == '-';
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let c = *c;
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatMPoly, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let f = self.power()?;
                    let Some(d) = f.integral().filter(|d| d.is_constant() && !d.is_zero()) else {
                        return self.err("division only by nonzero integer constants");
                    };
                    let k = BigRational::new(1.into(), d.constant_term());
                    acc = acc.scale(&k);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatMPoly, AlgebraError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    return Ok(base.pow(k));
                }
                _ => return self.err("expected integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatMPoly, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatMPoly::from(MPoly::constant(n)))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(RatMPoly::var(v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.err("expected number, variable or `(`"),
        }
    }
}

/// Parses a polynomial over `a, b, c, T, x, y`.
///
/// Accepts `+ - * / ^`, parentheses and multiplication by juxtaposition
/// (`2 a b^2`). Division is allowed only by integer constants.
pub fn parse_poly(s: &str) -> Result<RatMPoly, AlgebraError> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, len: s.len() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
