use std::borrow::Cow;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rational, Scalar};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// The `n`-th cyclotomic polynomial, coefficients in ascending order.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d(x)`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// Arithmetic context for `Q(zeta_N) = Q[x] / Phi_N(x)`.
#[derive(Debug)]
struct Field {
    conductor: u32,
    degree: usize,
    modulus: Vec<Rational>,
    /// `x^(degree + t) mod Phi_N` for `t < degree - 1`, stored sparsely.
    reduction: Vec<Vec<(usize, Rational)>>,
}

impl Field {
    fn new(conductor: u32) -> Arc<Field> {
        if conductor == 1 {
            return rational_field();
        }
        Arc::new(Self::build(conductor))
    }

    fn build(conductor: u32) -> Field {
        let modulus: Vec<Rational> = cyclotomic_polynomial(conductor)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        let mut reduction = Vec::new();
        // x^degree = -(lower part of Phi)
        let mut current: Vec<Rational> = modulus[..degree].iter().map(|c| -c.clone()).collect();
        for _ in 0..degree.saturating_sub(1) {
            reduction.push(
                current
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, c.clone()))
                    .collect(),
            );
            // multiply by x and reduce once
            let top = current[degree - 1].clone();
            let mut next = vec![Rational::zero(); degree];
            for i in (1..degree).rev() {
                next[i] = current[i - 1].clone();
            }
            if !top.is_zero() {
                for (i, slot) in next.iter_mut().enumerate() {
                    *slot -= &top * &modulus[i];
                }
            }
            current = next;
        }
        Field {
            conductor,
            degree,
            modulus,
            reduction,
        }
    }

    /// Reduces a polynomial of any degree modulo `Phi_N`.
    fn reduce_full(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree;
        while poly.len() > d {
            let c = poly.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = poly.len() - d;
            for i in 0..d {
                poly[shift + i] -= &c * &self.modulus[i];
            }
        }
        poly.resize(d, Rational::zero());
        poly
    }
}

fn rational_field() -> Arc<Field> {
    static Q: OnceLock<Arc<Field>> = OnceLock::new();
    Q.get_or_init(|| Arc::new(Field::build(1))).clone()
}

/// An element of `Q(zeta_N)`, stored as coefficients of `1, zeta, ...,
/// zeta^(phi(N)-1)`.
///
/// Binary operations on elements of different conductors first embed both
/// into the field of the least common multiple.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<Field>,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    /// `zeta_n^k`, with `zeta_n = exp(2 pi i / n)`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let field = Field::new(n);
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        let coeffs = field.reduce_full(poly);
        CyclotomicNumber { field, coeffs }
    }

    pub fn rational(r: Rational) -> Self {
        CyclotomicNumber {
            field: rational_field(),
            coeffs: vec![r],
        }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds into `Q(zeta_target)`; `target` must be a multiple of the
    /// current conductor.
    pub fn embed(&self, target: u32) -> Self {
        self.embed_into(&Field::new(target))
    }

    fn embed_into(&self, field: &Arc<Field>) -> Self {
        let from = self.field.conductor;
        let to = field.conductor;
        assert!(to % from == 0, "cannot embed Q(zeta_{from}) into Q(zeta_{to})");
        if from == to {
            return self.clone();
        }
        let step = (to / from) as usize;
        let mut poly = vec![Rational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        CyclotomicNumber {
            field: field.clone(),
            coeffs: field.reduce_full(poly),
        }
    }

    fn aligned<'a>(x: &'a Self, y: &'a Self) -> (Cow<'a, Self>, Cow<'a, Self>) {
        let (m, n) = (x.field.conductor, y.field.conductor);
        if m == n {
            (Cow::Borrowed(x), Cow::Borrowed(y))
        } else if n % m == 0 {
            (Cow::Owned(x.embed_into(&y.field)), Cow::Borrowed(y))
        } else if m % n == 0 {
            (Cow::Borrowed(x), Cow::Owned(y.embed_into(&x.field)))
        } else {
            let field = Field::new(m.lcm(&n));
            (Cow::Owned(x.embed_into(&field)), Cow::Owned(y.embed_into(&field)))
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let (x, y) = Self::aligned(self, rhs);
        CyclotomicNumber {
            field: x.field.clone(),
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(p, q)| p + q).collect(),
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let (x, y) = Self::aligned(self, rhs);
        CyclotomicNumber {
            field: x.field.clone(),
            coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(p, q)| p - q).collect(),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let (x, y) = Self::aligned(self, rhs);
        let field = &x.field;
        let d = field.degree;
        if d == 1 {
            return CyclotomicNumber {
                field: field.clone(),
                coeffs: vec![&x.coeffs[0] * &y.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, p) in x.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in y.coeffs.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                prod[i + j] += p * q;
            }
        }
        let mut coeffs: Vec<Rational> = prod.drain(..d).collect();
        for (t, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in &field.reduction[t] {
                coeffs[*i] += &c * r;
            }
        }
        CyclotomicNumber {
            field: field.clone(),
            coeffs,
        }
    }

    /// Inverse by the extended Euclidean algorithm against `Phi_N`.
    fn invert(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let field = &self.field;
        let mut r0 = trim(field.modulus.clone());
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, next_s);
        }
        // r0 is a nonzero constant because Phi_N is irreducible
        debug_assert_eq!(r0.len(), 1);
        let scale = r0[0].recip();
        let inv: Vec<Rational> = s0.into_iter().map(|c| c * &scale).collect();
        let mut padded = inv;
        if padded.is_empty() {
            padded.push(Rational::zero());
        }
        Some(CyclotomicNumber {
            field: field.clone(),
            coeffs: field.reduce_full(padded),
        })
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    trim(out)
}

fn poly_sub(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let n = p.len().max(q.len());
    let mut out = vec![Rational::zero(); n];
    for (i, a) in p.iter().enumerate() {
        out[i] += a;
    }
    for (i, b) in q.iter().enumerate() {
        out[i] -= b;
    }
    trim(out)
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (Vec::new(), trim(rem));
    }
    let lead_inv = den.last().unwrap().recip();
    let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + den.len() - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    rem.truncate(den.len() - 1);
    (trim(quot), trim(rem))
}

/// True iff `x^n = 1` and `x^d != 1` for every proper divisor `d` of `n`.
pub fn is_primitive_root(x: &CyclotomicNumber, n: u32) -> bool {
    if n == 0 || !x.pow(n).is_one() {
        return false;
    }
    divisors(n)
        .into_iter()
        .filter(|&d| d < n)
        .all(|d| !x.pow(d).is_one())
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        let (x, y) = Self::aligned(self, other);
        x.coeffs == y.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Q(zeta_{})", self, self.field.conductor)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.conductor;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("zeta({n})"),
                _ => format!("zeta({n})^{i}"),
            };
            if root.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&root)?;
            } else {
                write!(f, "{magnitude}*{root}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CyclotomicNumber> for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
        self.add_ref(rhs)
    }
}

impl Add for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
        self.add_ref(&rhs)
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
        self.sub_ref(rhs)
    }
}

impl Sub for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
        self.sub_ref(&rhs)
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
        self.mul_ref(rhs)
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
        self.mul_ref(rhs)
    }
}

impl Mul for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
        self.mul_ref(&rhs)
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(mut self) -> CyclotomicNumber {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Scalar for CyclotomicNumber {
    const IS_FIELD: bool = true;

    fn zero() -> Self {
        CyclotomicNumber::rational(Rational::zero())
    }

    fn one() -> Self {
        CyclotomicNumber::rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn from_rational(r: Rational) -> Self {
        CyclotomicNumber::rational(r)
    }

    fn inverse(&self) -> Option<Self> {
        self.invert()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
    }

    #[test]
    fn phi_12_against_direct_division() {
        // (x^12 - 1) / ((x-1)(x+1)(x^2+x+1)(x^2+1)(x^2-x+1)), multiplied out
        // by hand: the denominator is x^8 + x^6 - x^2 - 1.
        let mut num = vec![BigInt::zero(); 13];
        num[0] = BigInt::from(-1);
        num[12] = BigInt::one();
        let den = ints(&[-1, 0, -1, 0, 0, 0, 1, 0, 1]);
        assert_eq!(exact_div_monic(&num, &den), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_degrees_match_totient() {
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() as u32 - 1, euler_phi(n), "n = {n}");
        }
    }

    #[test]
    fn roots_of_unity_arithmetic() {
        let z3 = CyclotomicNumber::zeta(3, 1);
        assert!(z3.pow(3).is_one());
        assert!(!z3.is_one());
        // 1 + z + z^2 = 0
        let s = CyclotomicNumber::one() + &z3 + &z3.pow(2);
        assert!(s.is_zero());
        assert_eq!(CyclotomicNumber::zeta(2, 1), CyclotomicNumber::from_int(-1));
        assert_eq!(CyclotomicNumber::zeta(4, 2), CyclotomicNumber::from_int(-1));
        assert_eq!(CyclotomicNumber::zeta(5, -1), CyclotomicNumber::zeta(5, 4));
    }

    #[test]
    fn mixed_conductors_embed_into_lcm() {
        let z6 = CyclotomicNumber::zeta(6, 1);
        let z3 = CyclotomicNumber::zeta(3, 1);
        assert_eq!(z6.clone() * &z6, z3);
        let z4 = CyclotomicNumber::zeta(4, 1);
        let prod = z3.clone() * &z4;
        assert_eq!(prod.conductor(), 12);
        assert_eq!(prod, CyclotomicNumber::zeta(12, 7));
        assert_eq!(CyclotomicNumber::from_int(2) * &z3, z3.clone() + &z3);
    }

    #[test]
    fn inverses() {
        for n in [1u32, 3, 5, 8, 12] {
            let x = CyclotomicNumber::zeta(n, 1) + &CyclotomicNumber::from_int(2);
            let inv = x.inverse().unwrap();
            assert!((x * &inv).is_one(), "n = {n}");
        }
        assert!(CyclotomicNumber::zero().inverse().is_none());
        let half = CyclotomicNumber::rational(rat(2)).inverse().unwrap();
        assert_eq!(half.as_rational(), Some(crate::scalars::ratio(1, 2)));
    }

    #[test]
    fn primitive_roots() {
        let z3 = CyclotomicNumber::zeta(3, 1);
        assert!(is_primitive_root(&z3, 3));
        assert!(is_primitive_root(&CyclotomicNumber::one(), 1));
        assert!(!is_primitive_root(&CyclotomicNumber::one(), 3));
        // zeta_6^2 checked by repeated multiplication: powers 1, 2 differ
        // from 1 and the cube is 1.
        let z6sq = CyclotomicNumber::zeta(6, 2);
        let p1 = z6sq.clone();
        let p2 = p1.clone() * &z6sq;
        let p3 = p2.clone() * &z6sq;
        assert!(!p1.is_one() && !p2.is_one() && p3.is_one());
        assert!(is_primitive_root(&z6sq, 3));
        assert!(!is_primitive_root(&CyclotomicNumber::zeta(6, 3), 3));
        assert!(is_primitive_root(&CyclotomicNumber::from_int(-1), 2));
    }

    #[test]
    fn display() {
        assert_eq!(CyclotomicNumber::zeta(3, 1).to_string(), "zeta(3)");
        assert_eq!(CyclotomicNumber::zeta(3, 2).to_string(), "-1 - zeta(3)");
        assert_eq!(CyclotomicNumber::from_int(-1).to_string(), "-1");
        assert_eq!(CyclotomicNumber::zero().to_string(), "0");
    }
}
