use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{q_factorial, rat, ratio, Monomial, MultiPoly, Rational, Scalar, Var};

/// Parity of the total word length for orbit-size formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthParity {
    Even,
    Odd,
}

/// `|O(2^{2(n-k)}(12)^k)| = C(2n, n-k)` at even length `2n`;
/// `|O(2^{2(n-k)+1}(12)^k)| = C(2n+1, n-k)` at odd length `2n+1`.
///
/// The odd case reads the binomial as `C(2n+1, n-k)`, which is what the
/// orbit enumeration confirms (e.g. 5 at `n = 2, k = 1`).
pub fn cf_orbit_size(n: u64, k: u64, parity: LengthParity) -> Result<u64> {
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    Ok(match parity {
        LengthParity::Even => binomial(2 * n, n - k),
        LengthParity::Odd => binomial(2 * n + 1, n - k),
    })
}

fn exact(num: i128, den: i128) -> i64 {
    debug_assert_eq!(num % den, 0, "closed form {num}/{den} is not integral");
    (num / den) as i64
}

fn a_poly(terms: &[(u32, Rational)]) -> MultiPoly {
    MultiPoly::from_terms(
        terms
            .iter()
            .map(|(i, c)| (Monomial::new(*i, 0, 0), c.clone())),
    )
}

fn a_ints(terms: &[(u32, i64)]) -> MultiPoly {
    a_poly(&terms.iter().map(|&(i, c)| (i, rat(c))).collect::<Vec<_>>())
}

fn check_k(k: u32) -> Result<()> {
    if k > 5 {
        return Err(Error::OutOfRange(format!(
            "closed forms exist for k <= 5, got {k}"
        )));
    }
    Ok(())
}

/// `F~_k(1^n, 1^n)` in closed form, piecewise in `n`, for `k <= 5`.
///
/// `F~_1 = (n-2)a` is stated for `n >= 2`; below that the value is `0`.
pub fn cf_tilde_fk(k: u32, n: usize) -> Result<MultiPoly> {
    check_k(k)?;
    let m = n as i128;
    let q = |num: i128, den: i128| Rational::new(num.into(), den.into());
    Ok(match k {
        0 => MultiPoly::one(),
        1 if n >= 2 => a_ints(&[(1, (n - 2) as i64)]),
        1 => MultiPoly::zero(),
        2 if n >= 4 => a_poly(&[
            (2, q((m - 1) * (m - 4), 2)),
            (1, q(m - 3, 1)),
        ]),
        2 => MultiPoly::zero(),
        3 if n >= 6 => a_poly(&[
            (3, q((m + 1) * (m - 4) * (m - 6), 6)),
            (2, q(m * m - 4 * m - 2, 1)),
        ]),
        3 if n == 5 => a_ints(&[(2, 3)]),
        3 => MultiPoly::zero(),
        4 => match n {
            8 => a_ints(&[(2, 17), (3, 52), (4, 2)]),
            7 => a_ints(&[(2, 10), (3, 19), (4, 1)]),
            6 => a_ints(&[(2, 4), (3, 4)]),
            5 => a_ints(&[(3, 1)]),
            0..=4 => MultiPoly::zero(),
            _ => a_poly(&[
                (4, q((m - 7) * (m * m * m - 7 * m * m - 14 * m + 96), 24)),
                (3, q(m * m * m - 6 * m * m - 13 * m + 80, 2)),
                (2, q(m * m - m - 22, 2)),
            ]),
        },
        _ => match n {
            10 => a_ints(&[(5, 10), (4, 234), (3, 226), (2, 4)]),
            9 => a_ints(&[(5, 4), (4, 96), (3, 131), (2, 3)]),
            8 => a_ints(&[(4, 32), (3, 62), (2, 2)]),
            7 => a_ints(&[(4, 10), (3, 19), (2, 1)]),
            6 => a_ints(&[(3, 4)]),
            0..=5 => MultiPoly::zero(),
            _ => {
                let m2 = m * m;
                let m3 = m2 * m;
                let m4 = m3 * m;
                let m5 = m4 * m;
                a_poly(&[
                    (5, q(m5 - 20 * m4 + 75 * m3 + 740 * m2 - 5716 * m + 9360, 120)),
                    (2, q(m - 6, 1)),
                    (4, q(m4 - 9 * m3 - 34 * m2 + 474 * m - 936, 6)),
                    (3, q(m3 - m2 - 62 * m + 172, 2)),
                ])
            }
        },
    })
}

/// `E_{k,s}^n` in closed form, including the listed exceptional values, for
/// `k <= 5`. `E_{0,s}^n` is read off `F~_0 = 1`.
pub fn cf_e(k: u32, s: u32, n: usize) -> Result<i64> {
    check_k(k)?;
    let m = n as i128;
    let (m2, m3) = (m * m, m * m * m);
    let (m4, m5) = (m3 * m, m3 * m * m);
    Ok(match (k, s) {
        (0, 0) => 1,
        (1, 3) if n >= 2 => exact(m - 2, 1),
        (2, 6) if n >= 4 => exact((m - 1) * (m - 4), 2),
        (2, 4) if n >= 4 => exact(m - 3, 1),
        (3, 9) if n >= 6 => exact((m + 1) * (m - 4) * (m - 6), 6),
        (3, 7) if n >= 5 => exact(m2 - 4 * m - 2, 1),
        (4, 12) if n == 7 => 1,
        (4, 10) if n == 6 => 4,
        (4, 10) if n == 5 => 1,
        (4, 12) if n >= 8 => exact((m - 7) * (m3 - 7 * m2 - 14 * m + 96), 24),
        (4, 10) if n >= 7 => exact(m3 - 6 * m2 - 13 * m + 80, 2),
        (4, 8) if n >= 6 => exact(m2 - m - 22, 2),
        (5, 15) if n == 9 => 4,
        (5, 13) if n == 8 => 32,
        (5, 11) if n == 7 => 19,
        (5, 11) if n == 6 => 4,
        (5, 15) if n >= 10 => exact(m5 - 20 * m4 + 75 * m3 + 740 * m2 - 5716 * m + 9360, 120),
        (5, 13) if n >= 9 => exact(m4 - 9 * m3 - 34 * m2 + 474 * m - 936, 6),
        (5, 11) if n >= 8 => exact(m3 - m2 - 62 * m + 172, 2),
        (5, 9) if n >= 7 => exact(m - 6, 1),
        _ => 0,
    })
}

/// The finite-dimensional families with closed-form dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "case", content = "parameter", rename_all = "snake_case")]
pub enum DimensionCase {
    /// `b = -1`, `b^2 = ae`.
    CartanA1A1,
    /// `b^3 = 1 != b`, `b^2 = ae`.
    CartanA2,
    /// `a = e = 1`, `b` a primitive `n`-th root of unity, `n >= 2`.
    V1b1(u32),
    /// `b = -1`, `ae` a primitive `m`-th root of unity, `b^2 != ae`.
    BMinusOne(u32),
}

/// `4`, `27`, `n^2` or `4m`.
///
/// `BMinusOne(1)` is rejected: `ae = 1` would give `b^2 = ae`.
pub fn cf_dimension(case: DimensionCase) -> Result<u64> {
    match case {
        DimensionCase::CartanA1A1 => Ok(4),
        DimensionCase::CartanA2 => Ok(27),
        DimensionCase::V1b1(n) if n >= 2 => Ok(u64::from(n) * u64::from(n)),
        DimensionCase::V1b1(n) => Err(Error::HypothesisViolation(format!(
            "b must be a primitive root of order n >= 2, got n = {n}"
        ))),
        DimensionCase::BMinusOne(m) if m >= 2 => Ok(4 * u64::from(m)),
        DimensionCase::BMinusOne(m) => Err(Error::HypothesisViolation(format!(
            "m = {m} forces ae = 1 = b^2, contradicting b^2 != ae"
        ))),
    }
}

/// Which entry of `S_n` at `b = -1` to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BMinusOneVariant {
    /// `F~(1^{2m+1}|1^{2m+1}) = (1-ae)^m (m)_{ae}^!`.
    OddPower,
    /// `F~(2^{2m}|2^{2m}) = (1-ae)^{m-1} (m-1)_{ae}^!`.
    EvenDiag,
    /// `F~(2^{2m}|1^{2m}) = e^m b^{m-1} (1-ae)^{m-1} (m-1)_{ae}^!`.
    EvenCross,
}

/// The `b = -1` values as polynomials in `a, e`.
pub fn cf_bminus1_tilde(m: u32, variant: BMinusOneVariant) -> Result<MultiPoly> {
    if m == 0 {
        return Err(Error::OutOfRange("m must be positive".into()));
    }
    let ae = MultiPoly::monomial(Monomial::new(1, 0, 1), rat(1));
    let one_minus = MultiPoly::one() - &ae;
    let core = |k: u32| {
        let mut p = q_factorial(k, &ae);
        for _ in 0..k {
            p = p * &one_minus;
        }
        p
    };
    Ok(match variant {
        BMinusOneVariant::OddPower => core(m),
        BMinusOneVariant::EvenDiag => core(m - 1),
        BMinusOneVariant::EvenCross => {
            let sign = if (m - 1) % 2 == 0 { rat(1) } else { ratio(-1, 1) };
            core(m - 1).mul_monomial(Monomial::new(0, 0, m), &sign)
        }
    })
}

/// Degree of `b` and the leading coefficient in `F~(1^len|1^len)` at
/// `e = 1` predicted by the longest element of `F(1^len|1^len)`:
/// `(h(h-1), a^{h(h-1)/2})` at `len = 2h` and `(h^2, a^{h(h+1)/2})` at
/// `len = 2h+1`.
pub fn cf_longest_element(len: usize) -> (u32, MultiPoly) {
    let h = (len / 2) as u32;
    let (top, a_exp) = if len % 2 == 0 {
        (h * h.saturating_sub(1), h * h.saturating_sub(1) / 2)
    } else {
        (h * h, h * (h + 1) / 2)
    };
    (top, MultiPoly::monomial(Monomial::new(a_exp, 0, 0), rat(1)))
}

/// `(n+k)_b^! (n-k)_b^!` in `b`, the diagonal entry on
/// `2^{2(n-k)}(12)^k` at `a = e = 1`.
pub fn cf_qfactorial_product(n: u32, k: u32) -> MultiPoly {
    let b = MultiPoly::var(Var::B);
    q_factorial(n + k, &b) * q_factorial(n - k, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(cf_orbit_size(2, 0, LengthParity::Even).unwrap(), 6);
        assert_eq!(cf_orbit_size(2, 2, LengthParity::Even).unwrap(), 1);
        assert_eq!(cf_orbit_size(2, 1, LengthParity::Odd).unwrap(), 5);
        assert!(cf_orbit_size(1, 2, LengthParity::Odd).is_err());
    }

    #[test]
    fn orbit_sizes_sum_to_powers_of_two() {
        for n in 0..12u64 {
            let even: u64 = (0..=n)
                .map(|k| cf_orbit_size(n, k, LengthParity::Even).unwrap() * if k == 0 { 1 } else { 2 })
                .sum();
            assert_eq!(even, 1 << (2 * n));
            let odd: u64 = (0..=n).map(|k| 2 * cf_orbit_size(n, k, LengthParity::Odd).unwrap()).sum();
            assert_eq!(odd, 1 << (2 * n + 1));
        }
    }

    #[test]
    fn tilde_fk_examples() {
        assert_eq!(cf_tilde_fk(1, 5).unwrap(), a_ints(&[(1, 3)]));
        assert_eq!(cf_tilde_fk(4, 7).unwrap(), a_ints(&[(2, 10), (3, 19), (4, 1)]));
        assert_eq!(cf_tilde_fk(5, 6).unwrap(), a_ints(&[(3, 4)]));
        assert!(cf_tilde_fk(6, 6).is_err());
    }

    #[test]
    fn e_examples() {
        assert_eq!(cf_e(3, 7, 6).unwrap(), 10);
        assert_eq!(cf_e(4, 8, 6).unwrap(), 4);
        assert_eq!(cf_e(1, 3, 2).unwrap(), 0);
        assert_eq!(cf_e(4, 12, 7).unwrap(), 1);
        assert_eq!(cf_e(5, 15, 9).unwrap(), 4);
        assert_eq!(cf_e(5, 13, 8).unwrap(), 32);
    }

    /// The general formulas agree with the explicit lists at the boundary
    /// rows `n = 8` for `F~_4` and `n = 10` for `F~_5`.
    #[test]
    fn general_formulas_at_boundaries() {
        let general4 = |n: i128| {
            let q = |num: i128, den: i128| Rational::new(num.into(), den.into());
            a_poly(&[
                (4, q((n - 7) * (n * n * n - 7 * n * n - 14 * n + 96), 24)),
                (3, q(n * n * n - 6 * n * n - 13 * n + 80, 2)),
                (2, q(n * n - n - 22, 2)),
            ])
        };
        assert_eq!(general4(8), cf_tilde_fk(4, 8).unwrap());
        let general5 = |n: i128| {
            let q = |num: i128, den: i128| Rational::new(num.into(), den.into());
            let (n2, n3) = (n * n, n * n * n);
            let (n4, n5) = (n3 * n, n3 * n2);
            a_poly(&[
                (5, q(n5 - 20 * n4 + 75 * n3 + 740 * n2 - 5716 * n + 9360, 120)),
                (2, q(n - 6, 1)),
                (4, q(n4 - 9 * n3 - 34 * n2 + 474 * n - 936, 6)),
                (3, q(n3 - n2 - 62 * n + 172, 2)),
            ])
        };
        assert_eq!(general5(10), cf_tilde_fk(5, 10).unwrap());
        assert_ne!(general5(9), cf_tilde_fk(5, 9).unwrap());
    }

    #[test]
    fn dimensions() {
        assert_eq!(cf_dimension(DimensionCase::CartanA1A1).unwrap(), 4);
        assert_eq!(cf_dimension(DimensionCase::V1b1(4)).unwrap(), 16);
        assert_eq!(cf_dimension(DimensionCase::BMinusOne(3)).unwrap(), 12);
        assert!(matches!(
            cf_dimension(DimensionCase::BMinusOne(1)),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn bminus1_examples() {
        let ae = MultiPoly::monomial(Monomial::new(1, 0, 1), rat(1));
        let one_minus = MultiPoly::one() - &ae;
        assert_eq!(cf_bminus1_tilde(1, BMinusOneVariant::OddPower).unwrap(), one_minus);
        let expected = one_minus.clone() * &one_minus * &(MultiPoly::one() + &ae);
        assert_eq!(cf_bminus1_tilde(2, BMinusOneVariant::OddPower).unwrap(), expected);
        let expected = one_minus.mul_monomial(Monomial::new(0, 0, 2), &rat(-1));
        assert_eq!(cf_bminus1_tilde(2, BMinusOneVariant::EvenCross).unwrap(), expected);
    }

    #[test]
    fn longest_element_predictions() {
        assert_eq!(cf_longest_element(4).0, 2);
        assert_eq!(cf_longest_element(5).0, 4);
        assert_eq!(cf_longest_element(5).1, a_ints(&[(3, 1)]));
    }
}
