use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{MultiPoly, Rational, Scalar, Var};

/// Quotient `num / den` of polynomials in `a, b, e`.
///
/// Not reduced; equality is decided by cross-multiplication. Only used for the
/// small symbolic checks that need division by a formal parameter.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalFunction { num, den }
    }

    pub fn var(var: Var) -> Self {
        Self::from_poly(MultiPoly::var(var))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RationalFunction> for RationalFunction {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        if self.den == rhs.den {
            return RationalFunction {
                num: self.num + &rhs.num,
                den: self.den,
            };
        }
        RationalFunction {
            num: &self.num * &rhs.den + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<'a> Sub<&'a RationalFunction> for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: &'a Self) -> Self {
        self + &(-rhs.clone())
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Scalar for RationalFunction {
    const IS_FIELD: bool = true;

    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(r: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(r))
    }

    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RationalFunction {
                num: self.den.clone(),
                den: self.num.clone(),
            })
        }
    }
}
