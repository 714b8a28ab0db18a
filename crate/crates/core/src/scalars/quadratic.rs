use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// Element `x + y s` of `K[s] / (s^2 - d)`.
///
/// Constants built without a radicand (`zero`, `one`, `from_rational`) pick
/// it up from the other operand.
#[derive(Debug, Clone)]
pub struct QuadraticElement<F> {
    constant: F,
    linear: F,
    radicand: Option<F>,
}

/// Adjoins a formal square root of `x`, returning the generator `s`.
pub fn sqrt_adjoin<F: Scalar>(x: F) -> Result<QuadraticElement<F>> {
    if x.is_zero() {
        return Err(Error::DegenerateExtension);
    }
    Ok(QuadraticElement {
        constant: F::zero(),
        linear: F::one(),
        radicand: Some(x),
    })
}

impl<F: Scalar> QuadraticElement<F> {
    pub fn from_base(x: F) -> Self {
        QuadraticElement {
            constant: x,
            linear: F::zero(),
            radicand: None,
        }
    }

    pub fn constant(&self) -> &F {
        &self.constant
    }

    pub fn linear(&self) -> &F {
        &self.linear
    }

    pub fn radicand(&self) -> Option<&F> {
        self.radicand.as_ref()
    }

    fn merged_radicand(&self, other: &Self) -> Option<F> {
        match (&self.radicand, &other.radicand) {
            (Some(d), Some(d2)) => {
                debug_assert!(d == d2, "mixing different quadratic extensions");
                Some(d.clone())
            }
            (Some(d), None) | (None, Some(d)) => Some(d.clone()),
            (None, None) => None,
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let radicand = self.merged_radicand(other);
        let cross = self.linear.clone() * &other.linear;
        let mut constant = self.constant.clone() * &other.constant;
        if !cross.is_zero() {
            let d = radicand
                .as_ref()
                .expect("a nonzero s-part always carries its radicand");
            constant = constant + cross * d;
        }
        let linear = self.constant.clone() * &other.linear + self.linear.clone() * &other.constant;
        QuadraticElement {
            constant,
            linear,
            radicand,
        }
    }
}

impl<F: Scalar> PartialEq for QuadraticElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.constant == other.constant && self.linear == other.linear
    }
}

impl<F: Scalar> fmt::Display for QuadraticElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.linear.is_zero() {
            write!(f, "{}", self.constant)
        } else {
            write!(f, "({}) + ({})*s", self.constant, self.linear)
        }
    }
}

impl<'a, F: Scalar> Add<&'a QuadraticElement<F>> for QuadraticElement<F> {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        let radicand = self.merged_radicand(rhs);
        QuadraticElement {
            constant: self.constant + &rhs.constant,
            linear: self.linear + &rhs.linear,
            radicand,
        }
    }
}

impl<F: Scalar> Add for QuadraticElement<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<'a, F: Scalar> Sub<&'a QuadraticElement<F>> for QuadraticElement<F> {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        let radicand = self.merged_radicand(rhs);
        QuadraticElement {
            constant: self.constant - &rhs.constant,
            linear: self.linear - &rhs.linear,
            radicand,
        }
    }
}

impl<F: Scalar> Sub for QuadraticElement<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self - &rhs
    }
}

impl<'a, F: Scalar> Mul<&'a QuadraticElement<F>> for QuadraticElement<F> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        self.mul_ref(rhs)
    }
}

impl<F: Scalar> Mul for QuadraticElement<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<F: Scalar> Neg for QuadraticElement<F> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticElement {
            constant: -self.constant,
            linear: -self.linear,
            radicand: self.radicand,
        }
    }
}

impl<F: Scalar> Scalar for QuadraticElement<F> {
    const IS_FIELD: bool = false;

    fn zero() -> Self {
        Self::from_base(F::zero())
    }

    fn one() -> Self {
        Self::from_base(F::one())
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_zero()
    }

    fn from_rational(r: Rational) -> Self {
        Self::from_base(F::from_rational(r))
    }

    /// `(x + ys)^-1 = (x - ys) / (x^2 - d y^2)` when the norm is invertible.
    fn inverse(&self) -> Option<Self> {
        let d = match &self.radicand {
            Some(d) => d.clone(),
            None => F::zero(),
        };
        let norm = self.constant.clone() * &self.constant - d * &(self.linear.clone() * &self.linear);
        let n_inv = norm.inverse()?;
        Some(QuadraticElement {
            constant: self.constant.clone() * &n_inv,
            linear: -(self.linear.clone() * &n_inv),
            radicand: self.radicand.clone(),
        })
    }
}
