mod common;

use amalgam::{eq, lambda_ball, GroupWord, LambdaMatrix, Subgroup};
use common::*;
use proptest::prelude::*;
use std::collections::BTreeSet;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn identity_decision_matches_oracle(seq in seq_strategy(8, 3)) {
        prop_assert_eq!(word(&seq).is_identity(), oracle_is_identity(&seq));
    }

    #[test]
    fn structural_equality_matches_oracle(a in seq_strategy(6, 3), b in seq_strategy(6, 3)) {
        let mut ab = a.clone();
        ab.extend(flat_inverse(&b));
        let same = oracle_is_identity(&ab);
        prop_assert_eq!(word(&a) == word(&b), same);
        prop_assert_eq!(eq(&word(&a), &word(&b)), same);
    }

    #[test]
    fn inserting_relators_preserves_the_element(
        a in seq_strategy(8, 3),
        rel in relator_strategy(3),
        pos in 0usize..9,
    ) {
        let mut b = a.clone();
        let at = pos.min(b.len());
        b.splice(at..at, rel);
        prop_assert_eq!(word(&a), word(&b));
        let mut ab = a.clone();
        ab.extend(flat_inverse(&b));
        prop_assert!(oracle_is_identity(&ab));
    }

    #[test]
    fn associativity(a in seq_strategy(8, 3), b in seq_strategy(8, 3), c in seq_strategy(8, 3)) {
        let (a, b, c) = (word(&a), word(&b), word(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn inverses_and_identity(a in seq_strategy(8, 3)) {
        let a = word(&a);
        prop_assert!(a.mul(&a.inv()).is_identity());
        prop_assert!(a.inv().mul(&a).is_identity());
        prop_assert_eq!(a.mul(&GroupWord::identity()), a.clone());
        prop_assert_eq!(GroupWord::identity().mul(&a), a);
    }

    #[test]
    fn reduce_is_idempotent(seq in seq_strategy(8, 3)) {
        let w = word(&seq);
        // re-multiplying the pieces of a reduced word gives it back
        let again = match w.as_amalgam() {
            None => w.clone(),
            Some(am) => {
                let mut acc = GroupWord::identity();
                for (x, m) in am.syllables() {
                    acc = acc.mul(x).mul(&GroupWord::stable(am.level(), m.clone()).unwrap());
                }
                acc.mul(am.tail())
            }
        };
        prop_assert_eq!(again, w);
    }

    #[test]
    fn level_is_monotone(a in seq_strategy(6, 3), b in seq_strategy(6, 3)) {
        let (a, b) = (word(&a), word(&b));
        prop_assert!(a.mul(&b).level() <= a.level().max(b.level()));
    }

    #[test]
    fn reduced_shape_invariants(seq in seq_strategy(8, 3)) {
        fn check(w: &GroupWord) -> bool {
            match w.as_amalgam() {
                None => true,
                Some(a) => {
                    let n = a.level() - 1;
                    !a.syllables().is_empty()
                        && a.syllables().iter().enumerate().all(|(i, (x, m))| {
                            let internal_ok = i == 0 || !x.is_member(Subgroup::KTail(n));
                            let lead_ok = i > 0 || !x.is_member(Subgroup::KTail(n)) || x.is_identity();
                            *m != 0.into() && x.level() < a.level() && internal_ok && lead_ok && check(x)
                        })
                        && a.tail().level() < a.level()
                        && check(a.tail())
                }
            }
        }
        prop_assert!(check(&word(&seq)));
    }

    #[test]
    fn conjugating_tail_elements_keeps_k_membership(
        c in prop::array::uniform3(0i64..5),
        idx in 0usize..3,
        conj_seq in seq_strategy(6, 3),
    ) {
        // for a in K_N and h in G_N, h a h^{-1} stays in K
        let a: GroupWord = hn(idx, c).into();
        let h = word(&conj_seq);
        let n = h.level();
        if a.is_member(Subgroup::KTail(n)) {
            prop_assert!(a.conj_by(&h).is_member(Subgroup::K));
        }
    }
}

#[test]
fn lambda_ball_two_matches_brute_force_products() {
    let gens = LambdaMatrix::generators();
    let mut all = BTreeSet::new();
    all.insert(LambdaMatrix::identity());
    for a in &gens {
        all.insert(a.clone());
        for b in &gens {
            all.insert(a * b);
        }
    }
    assert_eq!(all.len(), 121);
    assert_eq!(lambda_ball(2), all);
    // monotone
    for r in 0..3 {
        assert!(lambda_ball(r).is_subset(&lambda_ball(r + 1)));
    }
}

#[test]
fn spec_reduction_examples() {
    let h0: GroupWord = hn(0, [1, 0, 0]).into();
    let t2 = GroupWord::stable(2, 1).unwrap();
    let w = t2.mul(&h0).mul(&t2.inv());
    assert_eq!(w.level(), 2);
    assert_eq!(w.stable_count(), 2);
    assert!(!w.is_member(Subgroup::K));

    let k: GroupWord = hn(0, [1, 1, 0]).mul(&hn(2, [0, 4, 1])).into();
    let t1 = GroupWord::stable(1, 1).unwrap();
    assert_eq!(t1.mul(&k).mul(&t1.inv()), k);

    let l: GroupWord = LambdaMatrix::elementary(1, 2, -1).into();
    assert!(!eq(&t1.mul(&l).mul(&t1.inv()), &l));
    assert!(eq(&l.conj_by(&GroupWord::identity()), &l));
}
