use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A vertex order `n >= 3`, or infinity (ideal vertex). Serialized as a
/// number or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "OrderRepr", try_from = "OrderRepr")]
pub enum Order {
    Finite(u64),
    Infinite,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum OrderRepr {
    Finite(u64),
    Text(String),
}

impl From<Order> for OrderRepr {
    fn from(o: Order) -> Self {
        match o {
            Order::Finite(n) => OrderRepr::Finite(n),
            Order::Infinite => OrderRepr::Text("inf".into()),
        }
    }
}

impl TryFrom<OrderRepr> for Order {
    type Error = TripleError;
    fn try_from(r: OrderRepr) -> Result<Self, TripleError> {
        match r {
            OrderRepr::Finite(n) if n >= 3 => Ok(Order::Finite(n)),
            OrderRepr::Finite(n) => Err(TripleError::TooSmall(n)),
            OrderRepr::Text(t) => t.parse(),
        }
    }
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl Ord for Order {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => a.cmp(b),
            (Order::Finite(_), Order::Infinite) => Ordering::Less,
            (Order::Infinite, Order::Finite(_)) => Ordering::Greater,
            (Order::Infinite, Order::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{}", n),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TripleError {
    #[error("order {0} is below 3")]
    TooSmall(u64),
    #[error("orders must satisfy n1 <= n2 <= n3, got ({0}, {1}, {2})")]
    Unordered(Order, Order, Order),
    #[error("cannot parse `{0}` as an order (integer >= 3 or `inf`)")]
    Parse(String),
    #[error("expected 3 orders, got {0}")]
    Arity(usize),
}

impl FromStr for Order {
    type Err = TripleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Order::Infinite);
        }
        let n: u64 = s.parse().map_err(|_| TripleError::Parse(s.to_string()))?;
        if n < 3 {
            return Err(TripleError::TooSmall(n));
        }
        Ok(Order::Finite(n))
    }
}

/// An ordered triple `n1 <= n2 <= n3`, serialized as `[n1, n2, n3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[Order; 3]", try_from = "[Order; 3]")]
pub struct Triple {
    n: [Order; 3],
}

impl Triple {
    pub fn from_orders(n1: Order, n2: Order, n3: Order) -> Result<Self, TripleError> {
        for n in [n1, n2, n3] {
            if let Order::Finite(k) = n {
                if k < 3 {
                    return Err(TripleError::TooSmall(k));
                }
            }
        }
        if !(n1 <= n2 && n2 <= n3) {
            return Err(TripleError::Unordered(n1, n2, n3));
        }
        Ok(Triple { n: [n1, n2, n3] })
    }

    pub fn new(n1: u64, n2: u64, n3: u64) -> Result<Self, TripleError> {
        Self::from_orders(Order::Finite(n1), Order::Finite(n2), Order::Finite(n3))
    }

    /// `(n1, n2, inf)`.
    pub fn ideal_third(n1: u64, n2: u64) -> Result<Self, TripleError> {
        Self::from_orders(Order::Finite(n1), Order::Finite(n2), Order::Infinite)
    }

    pub fn parse_tokens(tokens: &[&str]) -> Result<Self, TripleError> {
        if tokens.len() != 3 {
            return Err(TripleError::Arity(tokens.len()));
        }
        let n: Vec<Order> = tokens.iter().map(|t| t.parse()).collect::<Result<_, _>>()?;
        Self::from_orders(n[0], n[1], n[2])
    }

    pub fn orders(&self) -> [Order; 3] {
        self.n
    }

    pub fn n1(&self) -> Order {
        self.n[0]
    }

    pub fn n2(&self) -> Order {
        self.n[1]
    }

    pub fn n3(&self) -> Order {
        self.n[2]
    }
}

impl From<Triple> for [Order; 3] {
    fn from(t: Triple) -> Self {
        t.n
    }
}

impl TryFrom<[Order; 3]> for Triple {
    type Error = TripleError;
    fn try_from(n: [Order; 3]) -> Result<Self, TripleError> {
        Triple::from_orders(n[0], n[1], n[2])
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n[0], self.n[1], self.n[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tokens() {
        assert_eq!(Triple::parse_tokens(&["3", "3", "10"]).unwrap(), Triple::new(3, 3, 10).unwrap());
        assert_eq!(Triple::parse_tokens(&["10", "25", "inf"]).unwrap(), Triple::ideal_third(10, 25).unwrap());
        assert!(matches!(Triple::parse_tokens(&["5", "4", "3"]), Err(TripleError::Unordered(..))));
        assert!(matches!(Triple::parse_tokens(&["2", "4", "5"]), Err(TripleError::TooSmall(2))));
        assert!(matches!(Triple::parse_tokens(&["inf", "4", "5"]), Err(TripleError::Unordered(..))));
        assert!(matches!(Triple::parse_tokens(&["x", "4", "5"]), Err(TripleError::Parse(_))));
    }

    #[test]
    fn infinity_sorts_last() {
        assert!(Order::Finite(1_000_000) < Order::Infinite);
        assert_eq!(Triple::ideal_third(4, 5).unwrap().to_string(), "(4,5,inf)");
    }

    #[test]
    fn json_shape() {
        let t = Triple::ideal_third(10, 25).unwrap();
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"[10,25,"inf"]"#);
        assert_eq!(serde_json::from_str::<Triple>(&j).unwrap(), t);
        assert!(serde_json::from_str::<Triple>("[5,4,3]").is_err());
        assert!(serde_json::from_str::<Triple>("[2,4,5]").is_err());
    }
}
