use super::BraidingParams;
use crate::error::{Error, Result};
use crate::scalars::{sqrt_adjoin, QuadraticElement, Scalar};

/// `b^2 = ae`.
pub fn is_diagonal_type<S: Scalar>(params: &BraidingParams<S>) -> bool {
    params.b.clone() * &params.b == params.a.clone() * &params.e
}

/// The braiding in the basis `w1 = v1 + s v2`, `w2 = v1 - s v2` with
/// `s^2 = a/b`.
#[derive(Debug, Clone)]
pub struct DiagonalBasisTable<F> {
    /// `c(w_i w_j)` expanded in the basis `w_p w_q`, indexed `[i][j][p][q]`.
    pub expansion: [[[[QuadraticElement<F>; 2]; 2]; 2]; 2],
    /// Coefficient of `w_j w_i` in `c(w_i w_j)`.
    pub q: [[QuadraticElement<F>; 2]; 2],
    /// Whether every `c(w_i w_j)` is a multiple of `w_j w_i`.
    pub transpositive: bool,
    /// Whether `q = [[b, -b], [-b, b]]`.
    pub matches_reference_q: bool,
}

/// Changes basis and reads off `c` in the `w`-basis.
///
/// Requires a field so that `a/b` and `1/s` exist. Nothing is corrected:
/// the full expansion is returned and the two flags record how it compares
/// to a diagonal table with `q = [[b, -b], [-b, b]]`.
pub fn diagonal_basis_braiding<F: Scalar>(
    params: &BraidingParams<F>,
) -> Result<DiagonalBasisTable<F>> {
    if !F::IS_FIELD {
        return Err(Error::UnsupportedMode("the basis change needs a field"));
    }
    if !is_diagonal_type(params) {
        return Err(Error::NotDiagonal);
    }
    type Q<F> = QuadraticElement<F>;
    let b_inv = params.b.inverse().ok_or(Error::ZeroParameter("b"))?;
    let a_inv = params.a.inverse().ok_or(Error::ZeroParameter("a"))?;
    let s = sqrt_adjoin(params.a.clone() * &b_inv)?;
    let base = |x: F| Q::from_base(x);
    let half = base(F::from_rational(crate::scalars::ratio(1, 2)));

    // w_p = sum_k to_v[p][k] v_k and v_k = sum_p to_w[k][p] w_p.
    let to_v = [
        [Q::one(), s.clone()],
        [Q::one(), -s.clone()],
    ];
    let t = s.clone() * &base(params.b.clone() * &a_inv) * &half;
    let to_w = [[half.clone(), half.clone()], [t.clone(), -t]];

    // c(v_k v_l) = coeff * v_k' v_l'.
    let c_v = |k: usize, l: usize| -> (Q<F>, usize, usize) {
        match (k, l) {
            (0, 0) => (base(params.a.clone()), 1, 1),
            (1, 1) => (base(params.e.clone()), 0, 0),
            _ => (base(params.b.clone()), k, l),
        }
    };

    let zero4 = || std::array::from_fn(|_| std::array::from_fn(|_| Q::zero()));
    let mut expansion: [[[[Q<F>; 2]; 2]; 2]; 2] =
        std::array::from_fn(|_| std::array::from_fn(|_| zero4()));
    for i in 0..2 {
        for j in 0..2 {
            let out = &mut expansion[i][j];
            for k in 0..2 {
                for l in 0..2 {
                    let (coeff, k2, l2) = c_v(k, l);
                    let coeff = coeff * &to_v[i][k] * &to_v[j][l];
                    for p in 0..2 {
                        for q in 0..2 {
                            let term = coeff.clone() * &to_w[k2][p] * &to_w[l2][q];
                            out[p][q] = out[p][q].clone() + term;
                        }
                    }
                }
            }
        }
    }

    let q: [[Q<F>; 2]; 2] = std::array::from_fn(|i| std::array::from_fn(|j| expansion[i][j][j][i].clone()));
    let transpositive = (0..2).all(|i| {
        (0..2).all(|j| {
            (0..2).all(|p| (0..2).all(|r| (p, r) == (j, i) || expansion[i][j][p][r].is_zero()))
        })
    });
    let b = base(params.b.clone());
    let reference = [[b.clone(), -b.clone()], [-b.clone(), b]];
    let matches_reference_q = q == reference;
    Ok(DiagonalBasisTable {
        expansion,
        q,
        transpositive,
        matches_reference_q,
    })
}
