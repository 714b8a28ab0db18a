use std::fmt;

use num_integer::Integer;

use super::{parse_literal, CyclotomicNumber, ScalarLiteral, Scalar};
use crate::error::{Error, Result};

/// A specialization `(a, b, e)` with `abe != 0`, all three in one field
/// `Q(zeta_N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamPoint {
    a: CyclotomicNumber,
    b: CyclotomicNumber,
    e: CyclotomicNumber,
    literals: Option<[ScalarLiteral; 3]>,
}

impl ParamPoint {
    pub fn new(a: CyclotomicNumber, b: CyclotomicNumber, e: CyclotomicNumber) -> Result<Self> {
        for (name, v) in [("a", &a), ("b", &b), ("e", &e)] {
            if v.is_zero() {
                return Err(Error::ZeroParameter(name));
            }
        }
        let n = a.conductor().lcm(&b.conductor()).lcm(&e.conductor());
        Ok(ParamPoint {
            a: a.embed(n),
            b: b.embed(n),
            e: e.embed(n),
            literals: None,
        })
    }

    pub fn from_literals(a: ScalarLiteral, b: ScalarLiteral, e: ScalarLiteral) -> Result<Self> {
        let mut p = ParamPoint::new(a.value(), b.value(), e.value())?;
        p.literals = Some([a, b, e]);
        Ok(p)
    }

    /// Parses three scalar literals such as `1`, `zeta(3)^2`, `-1/2`.
    pub fn parse(a: &str, b: &str, e: &str) -> Result<Self> {
        Self::from_literals(parse_literal(a)?, parse_literal(b)?, parse_literal(e)?)
    }

    /// Shorthand for integer points, e.g. `ParamPoint::ints(1, -1, 1)`.
    pub fn ints(a: i64, b: i64, e: i64) -> Result<Self> {
        Self::parse(&a.to_string(), &b.to_string(), &e.to_string())
    }

    pub fn a(&self) -> &CyclotomicNumber {
        &self.a
    }

    pub fn b(&self) -> &CyclotomicNumber {
        &self.b
    }

    pub fn e(&self) -> &CyclotomicNumber {
        &self.e
    }

    pub fn conductor(&self) -> u32 {
        self.a.conductor()
    }

    pub fn literals(&self) -> Option<&[ScalarLiteral; 3]> {
        self.literals.as_ref()
    }

    /// Human-readable renderings of `a, b, e`, preferring the literal forms.
    pub fn labels(&self) -> [String; 3] {
        match &self.literals {
            Some([a, b, e]) => [a.to_string(), b.to_string(), e.to_string()],
            None => [self.a.to_string(), self.b.to_string(), self.e.to_string()],
        }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, e] = self.labels();
        write!(f, "(a={a}, b={b}, e={e})")
    }
}
