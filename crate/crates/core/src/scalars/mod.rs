//! Exact coefficient arithmetic.
//!
//! Everything in the crate is generic over [`Scalar`], a commutative ring with
//! exact equality. The two workhorses are [`MultiPoly`] (formal `a, b, e`) and
//! [`CyclotomicNumber`] (values at roots of unity).

mod cyclotomic;
mod literal;
mod point;
mod poly;
mod qnum;
mod quadratic;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, is_primitive_root, CyclotomicNumber};
pub use literal::{parse_literal, ScalarLiteral};
pub use point::ParamPoint;
pub use poly::{Monomial, MultiPoly, Var};
pub use qnum::{q_factorial, q_int};
pub use quadratic::{sqrt_adjoin, QuadraticElement};
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rational, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A commutative ring with exact equality.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Whether every nonzero element has an inverse. Rank computations
    /// require this.
    const IS_FIELD: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;

    /// Multiplicative inverse; `None` for zero, or when the ring has no
    /// inverse for this element.
    fn inverse(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}
