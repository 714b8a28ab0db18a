use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};

/// A parsed scalar literal: `coeff * zeta(order)^exponent`.
///
/// Canonical: `exponent / order` is in lowest terms, `order != 2` (a square
/// root of unity is folded into the sign) and `order = 1` forces
/// `exponent = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScalarLiteral {
    pub coeff: Rational,
    pub order: u32,
    pub exponent: u32,
}

impl ScalarLiteral {
    pub fn rational(coeff: Rational) -> Self {
        ScalarLiteral {
            coeff,
            order: 1,
            exponent: 0,
        }
    }

    pub fn root(coeff: Rational, order: u32, exponent: i64) -> Self {
        let e = exponent.rem_euclid(order as i64) as u32;
        let g = e.gcd(&order);
        let (mut order, exponent) = if e == 0 { (1, 0) } else { (order / g, e / g) };
        let mut coeff = coeff;
        let mut exponent = exponent;
        if order == 2 {
            coeff = -coeff;
            order = 1;
            exponent = 0;
        }
        ScalarLiteral {
            coeff,
            order,
            exponent,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Value in `Q(zeta_order)`.
    pub fn value(&self) -> CyclotomicNumber {
        let c = CyclotomicNumber::rational(self.coeff.clone());
        if self.order == 1 {
            c
        } else {
            c * CyclotomicNumber::zeta(self.order, self.exponent as i64)
        }
    }

    pub fn times(&self, other: &ScalarLiteral) -> ScalarLiteral {
        let l = self.order.lcm(&other.order);
        let e = self.exponent as i64 * (l / self.order) as i64
            + other.exponent as i64 * (l / other.order) as i64;
        ScalarLiteral::root(&self.coeff * &other.coeff, l, e)
    }
}

impl fmt::Display for ScalarLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order == 1 {
            return write!(f, "{}", self.coeff);
        }
        let root = if self.exponent == 1 {
            format!("zeta({})", self.order)
        } else {
            format!("zeta({})^{}", self.order, self.exponent)
        };
        if self.coeff.is_one() {
            f.write_str(&root)
        } else if (-self.coeff.clone()).is_one() {
            write!(f, "-{root}")
        } else {
            write!(f, "{}*{root}", self.coeff)
        }
    }
}

/// Parses `zeta(N)^k`, `p/q`, integers and `*`-products of these, each
/// factor optionally preceded by `-`.
pub fn parse_literal(text: &str) -> Result<ScalarLiteral> {
    let bad = |reason: &str| Error::InvalidLiteral {
        literal: text.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty literal"));
    }
    let mut acc = ScalarLiteral::rational(Rational::one());
    for factor in compact.split('*') {
        let (negative, body) = match factor.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, factor),
        };
        if body.is_empty() {
            return Err(bad("empty factor"));
        }
        let mut lit = if let Some(rest) = body.strip_prefix("zeta(") {
            let close = rest.find(')').ok_or_else(|| bad("missing ')'"))?;
            let order: u32 = rest[..close]
                .parse()
                .map_err(|_| bad("root order must be a positive integer"))?;
            if order == 0 {
                return Err(bad("root order must be a positive integer"));
            }
            let tail = &rest[close + 1..];
            let exponent: i64 = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .ok_or_else(|| bad("expected '^' after zeta(N)"))?
                    .parse()
                    .map_err(|_| bad("exponent must be an integer"))?
            };
            ScalarLiteral::root(Rational::one(), order, exponent)
        } else {
            let (p, q) = match body.split_once('/') {
                Some((p, q)) => (p, q),
                None => (body, "1"),
            };
            let p: BigInt = p.parse().map_err(|_| bad("numerator must be an integer"))?;
            let q: BigInt = q.parse().map_err(|_| bad("denominator must be an integer"))?;
            if q.is_zero() {
                return Err(bad("zero denominator"));
            }
            if p.is_negative() || q.is_negative() {
                return Err(bad("signs go in front of a factor"));
            }
            ScalarLiteral::rational(Rational::new(p, q))
        };
        if negative {
            lit.coeff = -lit.coeff;
        }
        acc = acc.times(&lit);
    }
    Ok(acc)
}
