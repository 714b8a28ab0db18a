use super::Scalar;

/// `(n)_b = 1 + b + ... + b^(n-1)`; `(0)_b = 0`.
pub fn q_int<S: Scalar>(n: u32, b: &S) -> S {
    let mut acc = S::zero();
    let mut power = S::one();
    for _ in 0..n {
        acc = acc + &power;
        power = power * b;
    }
    acc
}

/// `(n)_b^! = (1)_b (2)_b ... (n)_b`; `(0)_b^! = 1`.
pub fn q_factorial<S: Scalar>(n: u32, b: &S) -> S {
    (1..=n).fold(S::one(), |acc, k| acc * &q_int(k, b))
}
