//! The braiding of `V_abe` as operators on tensor words.

mod diagonal;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{CyclotomicNumber, Monomial, MultiPoly, ParamPoint, Scalar, Var};
use crate::sym::{Perm, Word};

pub use diagonal::{diagonal_basis_braiding, is_diagonal_type, DiagonalBasisTable};

/// The scalars `a, b, e` of the braiding. The coefficient of `c(v2 v1)` is
/// always `b`, which is exactly the condition for a braiding.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidingParams<S> {
    a: S,
    b: S,
    e: S,
}

impl<S: Scalar> BraidingParams<S> {
    pub fn new(a: S, b: S, e: S) -> Result<Self> {
        for (name, v) in [("a", &a), ("b", &b), ("e", &e)] {
            if v.is_zero() {
                return Err(Error::ZeroParameter(name));
            }
        }
        Ok(BraidingParams { a, b, e })
    }

    pub fn a(&self) -> &S {
        &self.a
    }

    pub fn b(&self) -> &S {
        &self.b
    }

    pub fn e(&self) -> &S {
        &self.e
    }

    /// `a^i b^j e^k`.
    pub fn monomial(&self, m: Monomial) -> S {
        self.a.pow(m.a) * &self.b.pow(m.b) * &self.e.pow(m.e)
    }

    /// The braiding `(ae, b, 1)`, isomorphic to this one once `sqrt(e)` is
    /// available.
    pub fn normalize_to_e1(&self) -> Self {
        BraidingParams {
            a: self.a.clone() * &self.e,
            b: self.b.clone(),
            e: S::one(),
        }
    }
}

impl BraidingParams<MultiPoly> {
    /// Formal `a, b, e`.
    pub fn symbolic() -> Self {
        BraidingParams {
            a: MultiPoly::var(Var::A),
            b: MultiPoly::var(Var::B),
            e: MultiPoly::var(Var::E),
        }
    }

    /// Formal `a, b` with `e = 1`.
    pub fn symbolic_e1() -> Self {
        BraidingParams {
            e: MultiPoly::one(),
            ..Self::symbolic()
        }
    }
}

impl BraidingParams<CyclotomicNumber> {
    pub fn specialized(pt: &ParamPoint) -> Self {
        BraidingParams {
            a: pt.a().clone(),
            b: pt.b().clone(),
            e: pt.e().clone(),
        }
    }
}

/// `coefficient * v_word`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialTerm<S> {
    pub coefficient: S,
    pub word: Word,
}

impl<S: Scalar> MonomialTerm<S> {
    pub fn basis(word: Word) -> Self {
        MonomialTerm {
            coefficient: S::one(),
            word,
        }
    }
}

impl<S: fmt::Display> fmt::Display for MonomialTerm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) v_{}", self.coefficient, self.word)
    }
}

fn check_position(i: usize, w: &Word) -> Result<()> {
    if i == 0 || i >= w.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: w.len(),
        });
    }
    Ok(())
}

/// `c_i` on a basis word: the new word and which of `a, b, e` it picks up.
pub(crate) fn step(i: usize, w: &Word) -> (Word, Var) {
    match (w.letter(i - 1), w.letter(i)) {
        (1, 1) => (w.flip_pair(i - 1), Var::A),
        (2, 2) => (w.flip_pair(i - 1), Var::E),
        _ => (*w, Var::B),
    }
}

/// `c_i = id^{i-1} (x) c (x) id^{n-i-1}` on a term, `i` 1-based.
pub fn apply_c<S: Scalar>(
    params: &BraidingParams<S>,
    i: usize,
    t: &MonomialTerm<S>,
) -> Result<MonomialTerm<S>> {
    check_position(i, &t.word)?;
    let (word, var) = step(i, &t.word);
    let factor = match var {
        Var::A => &params.a,
        Var::B => &params.b,
        Var::E => &params.e,
    };
    Ok(MonomialTerm {
        coefficient: t.coefficient.clone() * factor,
        word,
    })
}

/// Exponents of `a, b, e` collected by applying `c_{i_1} ... c_{i_k}` to
/// `v_w`, the rightmost generator first.
pub fn generator_exponents(generators: &[usize], w: &Word) -> Result<(Word, Monomial)> {
    let mut word = *w;
    let mut m = Monomial::new(0, 0, 0);
    for &i in generators.iter().rev() {
        check_position(i, &word)?;
        let (next, var) = step(i, &word);
        match var {
            Var::A => m.a += 1,
            Var::B => m.b += 1,
            Var::E => m.e += 1,
        }
        word = next;
    }
    Ok((word, m))
}

/// `c_{i_1} ... c_{i_k} (v_w)` for an arbitrary generator sequence.
pub fn apply_generators<S: Scalar>(
    params: &BraidingParams<S>,
    generators: &[usize],
    w: &Word,
) -> Result<MonomialTerm<S>> {
    let (word, m) = generator_exponents(generators, w)?;
    Ok(MonomialTerm {
        coefficient: params.monomial(m),
        word,
    })
}

/// The Matsumoto exponents of `Phi_p(v_w)`, read along the canonical
/// reduced word of `p`.
pub fn phi_exponents(p: &Perm, w: &Word) -> Result<(Word, Monomial)> {
    if p.degree() != w.len() {
        return Err(Error::LengthMismatch {
            expected: p.degree(),
            found: w.len(),
        });
    }
    generator_exponents(&p.reduced_word(), w)
}

/// `Phi_p(v_w)`: a scalar multiple of `v_{p.w}`.
pub fn phi_apply<S: Scalar>(
    params: &BraidingParams<S>,
    p: &Perm,
    w: &Word,
) -> Result<MonomialTerm<S>> {
    let (word, m) = phi_exponents(p, w)?;
    Ok(MonomialTerm {
        coefficient: params.monomial(m),
        word,
    })
}

/// A braiding table with an independent coefficient `gamma` for
/// `c(v2 v1)`. Only `gamma = b` satisfies the braid relation.
#[doc(hidden)]
#[derive(Debug, Clone)]
pub struct RawBraiding<S> {
    pub a: S,
    pub b: S,
    pub gamma: S,
    pub e: S,
}

impl<S: Scalar> RawBraiding<S> {
    fn apply(&self, i: usize, t: &MonomialTerm<S>) -> MonomialTerm<S> {
        let (word, factor) = match (t.word.letter(i - 1), t.word.letter(i)) {
            (1, 1) => (t.word.flip_pair(i - 1), &self.a),
            (1, 2) => (t.word, &self.b),
            (2, 1) => (t.word, &self.gamma),
            _ => (t.word.flip_pair(i - 1), &self.e),
        };
        MonomialTerm {
            coefficient: t.coefficient.clone() * factor,
            word,
        }
    }

    /// `c_1 c_2 c_1 = c_2 c_1 c_2` on every basis word of length 3.
    pub fn satisfies_braid_relation(&self) -> bool {
        Word::all(3).all(|w| {
            let run = |seq: [usize; 3]| {
                seq.iter()
                    .fold(MonomialTerm::basis(w), |t, &i| self.apply(i, &t))
            };
            run([1, 2, 1]) == run([2, 1, 2])
        })
    }
}

impl<S: Scalar> From<&BraidingParams<S>> for RawBraiding<S> {
    fn from(p: &BraidingParams<S>) -> Self {
        RawBraiding {
            a: p.a.clone(),
            b: p.b.clone(),
            gamma: p.b.clone(),
            e: p.e.clone(),
        }
    }
}

/// Checks the braid relation on `V^{(x)3}`.
pub fn ybe_check<S: Scalar>(params: &BraidingParams<S>) -> bool {
    RawBraiding::from(params).satisfies_braid_relation()
}

/// The point `(ae, b, 1)`. The map `v1 -> sqrt(e) v1` identifies the two
/// braided vector spaces, so graded dimensions agree.
pub fn normalize_to_e1(pt: &ParamPoint) -> ParamPoint {
    let normalized = match pt.literals() {
        Some([a, b, e]) => ParamPoint::from_literals(
            a.times(e),
            b.clone(),
            crate::scalars::parse_literal("1").expect("literal 1 parses"),
        ),
        None => ParamPoint::new(
            pt.a().clone() * pt.e(),
            pt.b().clone(),
            CyclotomicNumber::one(),
        ),
    };
    normalized.expect("a product of nonzero scalars is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use crate::sym::act;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn sym() -> BraidingParams<MultiPoly> {
        BraidingParams::symbolic()
    }

    fn var(v: Var) -> MultiPoly {
        MultiPoly::var(v)
    }

    #[test]
    fn apply_c_table() {
        let p = sym();
        let t = apply_c(&p, 1, &MonomialTerm::basis(w("11"))).unwrap();
        assert_eq!(t, MonomialTerm { coefficient: var(Var::A), word: w("22") });
        let t = apply_c(&p, 1, &MonomialTerm::basis(w("21"))).unwrap();
        assert_eq!(t, MonomialTerm { coefficient: var(Var::B), word: w("21") });
        let t = apply_c(&p, 2, &MonomialTerm::basis(w("122"))).unwrap();
        assert_eq!(t, MonomialTerm { coefficient: var(Var::E), word: w("111") });
        assert_eq!(
            apply_c(&p, 2, &MonomialTerm::basis(w("12"))),
            Err(Error::PositionOutOfRange { position: 2, len: 2 })
        );
        assert!(apply_c(&p, 0, &MonomialTerm::basis(w("12"))).is_err());
    }

    #[test]
    fn phi_examples() {
        let p = sym();
        let t = phi_apply(&p, &Perm::identity(4), &w("1212")).unwrap();
        assert_eq!(t, MonomialTerm::basis(w("1212")));
        let t = phi_apply(&p, &Perm::t(3, 1), &w("111")).unwrap();
        let abe = var(Var::A) * var(Var::B) * var(Var::E);
        assert_eq!(t, MonomialTerm { coefficient: abe, word: w("111") });
        let t = phi_apply(&p, &Perm::s(2, 1), &w("12")).unwrap();
        assert_eq!(t.coefficient, var(Var::B));
        assert!(phi_apply(&p, &Perm::s(3, 1), &w("12")).is_err());
    }

    #[test]
    fn phi_word_is_the_action() {
        for n in 1..=5 {
            for p in Perm::all(n) {
                for x in Word::all(n) {
                    let (y, m) = phi_exponents(&p, &x).unwrap();
                    assert_eq!(y, act(&p, &x).unwrap());
                    assert_eq!(m.degree() as usize, p.inversions());
                }
            }
        }
    }

    #[test]
    fn ybe() {
        assert!(ybe_check(&sym()));
        let pt = ParamPoint::ints(1, -1, -1).unwrap();
        assert!(ybe_check(&BraidingParams::specialized(&pt)));
        let pt = ParamPoint::parse("zeta(5)^2", "3/7", "zeta(3)").unwrap();
        assert!(ybe_check(&BraidingParams::specialized(&pt)));
        let mut raw = RawBraiding::from(&sym());
        raw.gamma = var(Var::B) * var(Var::B);
        assert!(!raw.satisfies_braid_relation());
        raw.gamma = MultiPoly::one();
        assert!(!raw.satisfies_braid_relation());
    }

    #[test]
    fn braid_relations_as_operators() {
        let p = sym();
        for n in 3..=6 {
            for x in Word::all(n) {
                for i in 1..n - 1 {
                    assert_eq!(
                        apply_generators(&p, &[i, i + 1, i], &x).unwrap(),
                        apply_generators(&p, &[i + 1, i, i + 1], &x).unwrap()
                    );
                }
                for i in 1..n {
                    for j in i + 2..n {
                        assert_eq!(
                            apply_generators(&p, &[i, j], &x).unwrap(),
                            apply_generators(&p, &[j, i], &x).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn normalization() {
        let n = normalize_to_e1(&ParamPoint::ints(1, -1, -1).unwrap());
        assert_eq!(n, ParamPoint::ints(-1, -1, 1).unwrap());
        let pt = ParamPoint::parse("zeta(7)^3", "2", "1").unwrap();
        assert_eq!(normalize_to_e1(&pt), pt);
        let n = normalize_to_e1(&ParamPoint::parse("zeta(3)", "-1", "zeta(3)^2").unwrap());
        assert_eq!(n, ParamPoint::ints(1, -1, 1).unwrap());
        assert_eq!(n.labels(), ["1".to_string(), "-1".to_string(), "1".to_string()]);
        let sym_n = sym().normalize_to_e1();
        assert_eq!(sym_n.a(), &(var(Var::A) * var(Var::E)));
        assert!(sym_n.e().is_one());
    }

    #[test]
    fn zero_parameters() {
        let one = MultiPoly::constant(rat(1));
        let r = BraidingParams::new(one.clone(), MultiPoly::zero(), one);
        assert_eq!(r, Err(Error::ZeroParameter("b")));
    }

    fn perm_strategy(max_n: usize) -> impl Strategy<Value = Perm> {
        (1..=max_n)
            .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Perm::from_one_line(&v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        /// Any reduced expression gives the same operator.
        #[test]
        fn matsumoto_independence(
            p in perm_strategy(8),
            bits in any::<u32>(),
            seeds in proptest::collection::vec(any::<u64>(), 10),
        ) {
            let n = p.degree();
            let x = Word::from_lex_index(n, bits & ((1u32 << n) - 1));
            let canonical = phi_exponents(&p, &x).unwrap();
            for seed in seeds {
                let mut state = seed;
                let word = p.reduced_word_with(|d| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    d[(state >> 33) as usize % d.len()]
                });
                prop_assert_eq!(word.len(), p.inversions());
                prop_assert_eq!(Perm::from_generators(n, &word), p);
                prop_assert_eq!(generator_exponents(&word, &x).unwrap(), canonical);
            }
        }
    }
}
