use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, Rational, Scalar};

/// The three formal parameters of the braiding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    A,
    B,
    E,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::E => "e",
        }
    }
}

/// Exponent triple `a^a b^b e^e`, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub e: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, e: 0 };

    pub fn new(a: u32, b: u32, e: u32) -> Self {
        Monomial { a, b, e }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.e
    }

    pub fn exponent(&self, var: Var) -> u32 {
        match var {
            Var::A => self.a,
            Var::B => self.b,
            Var::E => self.e,
        }
    }

    fn with_exponent(mut self, var: Var, k: u32) -> Self {
        match var {
            Var::A => self.a = k,
            Var::B => self.b = k,
            Var::E => self.e = k,
        }
        self
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.a + other.a, self.b + other.b, self.e + other.e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
            .then(self.e.cmp(&other.e))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for var in [Var::A, Var::B, Var::E] {
            let k = self.exponent(var);
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(var.name())?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `a, b, e` with rational coefficients.
///
/// Canonical: no zero coefficient is ever stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn var(var: Var) -> Self {
        Self::monomial(Monomial::ONE.with_exponent(var, 1), rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::default();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Univariate polynomial `sum_i coeffs[i] * var^i`.
    pub fn univariate(var: Var, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::ONE.with_exponent(var, i as u32), c.clone())),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: Var, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == k)
                .map(|(m, c)| (m.with_exponent(var, 0), c.clone()))
                .collect(),
        }
    }

    /// Replaces `var` by the rational constant `value`.
    pub fn substitute(&self, var: Var, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let k = m.exponent(var);
            let factor = num_traits::pow(value.clone(), k as usize);
            out.add_term(m.with_exponent(var, 0), c * factor);
        }
        out
    }

    /// Exchanges the roles of `a` and `e`.
    pub fn swap_a_e(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.e, m.b, m.a), c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::default();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.times(m), v * c)).collect(),
        }
    }

    /// Evaluates at arbitrary ring elements, caching powers of each argument.
    pub fn eval<S: Scalar>(&self, a: &S, b: &S, e: &S) -> S {
        let mut powers: [Vec<S>; 3] = [vec![S::one()], vec![S::one()], vec![S::one()]];
        let bases = [a, b, e];
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut term = S::from_rational(c.clone());
            for (slot, k) in [m.a, m.b, m.e].into_iter().enumerate() {
                let table = &mut powers[slot];
                while table.len() <= k as usize {
                    let next = table.last().unwrap().clone() * bases[slot];
                    table.push(next);
                }
                term = term * &table[k as usize];
            }
            acc = acc + term;
        }
        acc
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: &'a MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
        self
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        if self.terms.len() < rhs.terms.len() {
            rhs + &self
        } else {
            self + &rhs
        }
    }
}

impl<'a> Sub<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: &'a MultiPoly) -> MultiPoly {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self - &rhs
    }
}

impl<'a> Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), c1 * c2);
            }
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        &self * rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Scalar for MultiPoly {
    const IS_FIELD: bool = false;

    fn zero() -> Self {
        MultiPoly::default()
    }

    fn one() -> Self {
        MultiPoly::constant(rat(1))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_rational(r: Rational) -> Self {
        MultiPoly::constant(r)
    }

    fn inverse(&self) -> Option<Self> {
        let c = self.constant_value()?;
        if c.is_zero() {
            None
        } else {
            Some(MultiPoly::constant(c.recip()))
        }
    }
}
