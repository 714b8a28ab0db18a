use proptest::prelude::*;

use nichols_core::sym::{act, fset, orbit, Limits, Perm, Word};

fn perm_and_word(max_n: usize) -> impl Strategy<Value = (Perm, Perm, Word)> {
    (1..=max_n).prop_flat_map(|n| {
        let p = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        let q = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        (p, q, 0u32..(1 << n)).prop_map(move |(p, q, bits)| {
            (
                Perm::from_one_line(&p).unwrap(),
                Perm::from_one_line(&q).unwrap(),
                Word::from_lex_index(n, bits),
            )
        })
    })
}

proptest! {
    #[test]
    fn action_is_a_group_action((p, q, w) in perm_and_word(12)) {
        let n = w.len();
        prop_assert_eq!(act(&Perm::identity(n), &w).unwrap(), w);
        prop_assert_eq!(act(&p.compose(&q), &w).unwrap(), act(&p, &act(&q, &w).unwrap()).unwrap());
        prop_assert_eq!(act(&p.inverse(), &act(&p, &w).unwrap()).unwrap(), w);
    }

    #[test]
    fn action_preserves_parity_count((p, _q, w) in perm_and_word(12)) {
        prop_assert_eq!(act(&p, &w).unwrap().parity_count(), w.parity_count());
    }

    /// Reading the generators of any reduced word on the word reproduces the
    /// closed-form action.
    #[test]
    fn generators_compose_to_the_action((p, _q, w) in perm_and_word(9)) {
        let word = p.reduced_word();
        let mut x = w;
        for &i in word.iter().rev() {
            x = nichols_core::sym::act_generator(i, &x);
        }
        prop_assert_eq!(x, act(&p, &w).unwrap());
    }
}

#[test]
fn fset_sizes_are_stabilizer_cosets() {
    let limits = Limits::default();
    for n in 1..=6 {
        for x in Word::all(n) {
            let o = orbit(&x);
            let stab = fset(&x, &x, &limits).unwrap().len();
            assert_eq!(o.len() * stab, (1..=n).product::<usize>());
            for y in &o {
                assert_eq!(fset(&x, y, &limits).unwrap().len(), stab);
            }
        }
    }
}
