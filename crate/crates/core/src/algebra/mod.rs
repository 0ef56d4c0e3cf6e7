//! Exact polynomial arithmetic and rational interval arithmetic.
//!
//! Everything downstream (classification, critical intervals, the claim
//! prover) evaluates through these types, so no floating point enters the
//! exact paths.

mod algebraic;
mod interval;
mod mpoly;
mod parse;
mod resultant;
mod sturm;
mod trig;
mod upoly;

pub use algebraic::RealAlgebraic;
pub use interval::{RatInterval, Sign};
pub use mpoly::{MPoly, Monomial, RatMPoly, Var, NVARS};
pub use parse::parse_poly;
pub use resultant::{discriminant, resultant};
pub use sturm::{isolate_roots, refine_root, sturm_count, SturmChain};
pub use trig::{cos_interval, cos_pi_over, cos_point, four_cos_sq_pi_over, pi_interval};
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type BigRat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable `{0}` is not bound in the evaluation point")]
    UnboundVariable(Var),
    #[error("interval endpoints out of order: {lo} > {hi}")]
    InvertedInterval { lo: String, hi: String },
    #[error("degree {degree} in `{var}` is too small (need at least {needed})")]
    DegreeTooSmall { var: Var, degree: usize, needed: usize },
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("expected exactly one root in the interval, found {count}")]
    NotIsolated { count: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Nearest binary64 value of an exact rational (for display and float cross-checks only).
pub fn to_f64(x: &BigRat) -> f64 {
    use num_traits::ToPrimitive;
    match x.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            // very large numerator/denominator: scale down before converting
            let n = x.numer().bits() as i64;
            let d = x.denom().bits() as i64;
            let shift = (n.max(d) - 1000).max(0) as u64;
            let nn = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let dd = (x.denom() >> shift).to_f64().unwrap_or(1.0);
            nn / dd
        }
    }
}
