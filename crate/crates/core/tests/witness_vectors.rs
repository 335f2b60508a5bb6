mod common;

use amalgam::witness::*;
use amalgam::*;
use common::*;
use num_rational::BigRational;
use proptest::prelude::*;

fn primes() -> PrimeSeq {
    PrimeSeq::first(5)
}

#[test]
fn xi_coefficients() {
    let p = primes();
    for (n, prime) in [(0usize, 2i64), (1, 3)] {
        let v = xi(&p, n).unwrap();
        let cube = prime * prime * prime;
        assert_eq!(v.support_len() as i64, cube);
        assert!(v.terms().all(|(_, c)| c.square() == &rational(1, cube)));
        assert_eq!(xi_identity_overlap_sq(&v), rational(1, cube));
        assert_eq!(v.norm_sq(), rational(1, 1));
        // consistent with τ(e_n)
        let e = finite::projection_en(&p, n).unwrap();
        assert_eq!(&xi_identity_overlap_sq(&v), e.trace().unwrap());
    }
    assert!((xi(&p, 0).unwrap().at_identity().unwrap().to_f64() - 2f64.powf(-1.5)).abs() < 1e-15);
}

#[test]
fn xi_invariance_over_small_balls() {
    let p = primes();
    for level in 0..=2 {
        for n in level + 1..=level + 2 {
            let indices: Vec<usize> = (0..=n).collect();
            let alphabet = level_alphabet(&p, level, &indices).unwrap();
            let v = xi(&p, n).unwrap();
            for layer in word_spheres(&alphabet, 2) {
                for g in layer {
                    assert!(g.is_member(Subgroup::Level(level)));
                    assert_eq!(adjoint_apply(&g, &v), v, "level {level} n {n} g {g}");
                }
            }
        }
    }
}

#[test]
fn lambda_and_first_stable_letter_fix_xi() {
    let p = primes();
    for n in 1..4 {
        for l in lambda_ball(2) {
            assert!(check_xi_invariance(&p, 0, n, &l.into()).unwrap());
        }
        assert!(check_xi_invariance(&p, 1, n.max(2), &GroupWord::stable(1, 1).unwrap()).unwrap());
    }
}

#[test]
fn low_index_witness_breaks_invariance() {
    let p = primes();
    // g_2 commutes only with K_1, so it moves H_0 out of K
    let w = search_xi_violation(&p, 2, 0, 1).unwrap().expect("violation within radius 1");
    assert!(w.is_member(Subgroup::Level(2)));
    let v = xi(&p, 0).unwrap();
    assert_ne!(adjoint_apply(&w, &v), v);
    // for n = N - 1 every generator of G_N commutes with or permutes H_n
    assert_eq!(search_xi_violation(&p, 2, 1, 2).unwrap(), None);
}

#[test]
fn conditional_expectation_examples() {
    let p = primes();
    let h0: GroupWord = HnVector::new(&p, 0, [1, 0, 0]).unwrap().into();
    let d = L2Vector::basis(h0, rational(1, 1));
    assert!(conditional_expectation(&d, 1).is_zero());
    let v = xi(&p, 3).unwrap();
    assert_eq!(conditional_expectation(&v, 2), v);
    assert_eq!(conditional_expectation(&v, 3), v);
    // only δ_e survives once H_3 leaves the tail
    let tail = conditional_expectation(&v, 4);
    assert_eq!(tail.support_len(), 1);
    assert_eq!(tail.at_identity(), v.at_identity());
}

fn k_vector_strategy() -> impl Strategy<Value = L2Vector<BigRational>> {
    let key = (0usize..3, prop::array::uniform3(0i64..5))
        .prop_map(|(i, c)| GroupWord::from(hn(i, c)));
    let key2 = (key.clone(), key).prop_map(|(a, b)| a.mul(&b));
    prop::collection::btree_map(key2, (-5i64..=5, 1i64..4).prop_map(|(a, b)| rational(a, b)), 0..8)
        .prop_map(L2Vector::from_map)
}

fn g_strategy() -> impl Strategy<Value = GroupWord> {
    seq_strategy(4, 2).prop_map(|s| word(&s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjoint_is_a_unitary_representation(v in k_vector_strategy(), g in g_strategy(), h in g_strategy()) {
        let lhs = adjoint_apply(&g, &adjoint_apply(&h, &v));
        let rhs = adjoint_apply(&g.mul(&h), &v);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs.norm_sq(), v.norm_sq());
    }

    #[test]
    fn expectation_is_an_orthogonal_projection(v in k_vector_strategy(), level in 0usize..4) {
        let e = conditional_expectation(&v, level);
        prop_assert_eq!(conditional_expectation(&e, level), e.clone());
        prop_assert!(e.norm_sq() <= v.norm_sq());
        prop_assert_eq!(e.at_identity(), v.at_identity());
        // E(v) ⟂ v − E(v)
        prop_assert!(e.disjoint_support(&v.sub(&e)));
    }

    #[test]
    fn expectation_commutes_with_lambda(v in k_vector_strategy(), level in 0usize..4, i in 0usize..121) {
        let l: GroupWord = lambda_ball(2).into_iter().nth(i).unwrap().into();
        prop_assert_eq!(
            conditional_expectation(&adjoint_apply(&l, &v), level),
            adjoint_apply(&l, &conditional_expectation(&v, level))
        );
    }

    #[test]
    fn orthogonality_inequality_holds(y in k_vector_strategy(), level in 1usize..3) {
        let c = orthogonality_inequality_check(&y, level).unwrap();
        prop_assert!(c.pass);
        prop_assert!(c.disjoint && c.decomposes);
        // basis-vector sanity: the stable letter moves the off-tail part out of K
        let off = y.sub(&conditional_expectation(&y, level));
        prop_assert_eq!(&c.lhs_sq, &(off.norm_sq() * rational(2, 1)));
    }

    #[test]
    fn disjointness_of_conjugated_complement(c in prop::array::uniform3(0i64..5), idx in 0usize..3, level in 1usize..4, extra in prop::array::uniform3(0i64..5)) {
        let t = GroupWord::stable(level + 1, 1).unwrap();
        let k = GroupWord::from(hn(idx, c)).mul(&GroupWord::from(hn(2, extra)));
        let conj = k.conj_by(&t);
        prop_assert_eq!(conj.is_member(Subgroup::K), k.is_member(Subgroup::KTail(level)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn conjugator_matches_generic_conjugation(g in seq_strategy(6, 3), v in k_vector_strategy()) {
        let g = word(&g);
        let mut conj = Conjugator::new(&g);
        for k in v.support() {
            prop_assert_eq!(conj.apply(k), k.conj_by(&g));
        }
        let fixed = adjoint_apply(&g, &v) == v;
        prop_assert_eq!(is_adjoint_fixed(&g, &v), fixed);
    }
}

fn single_summand_strategy() -> impl Strategy<Value = L2Vector<BigRational>> {
    (0usize..3, prop::collection::vec((prop::array::uniform3(0i64..5), -2i64..3), 1..6)).prop_map(|(idx, entries)| {
        let map = entries
            .into_iter()
            .map(|(c, w)| (GroupWord::from(hn(idx, c)), BigRational::from_integer(w.into())))
            .collect();
        L2Vector::from_map(map)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn tabulated_check_matches_direct_comparison(g in seq_strategy(6, 3), v in single_summand_strategy(), n in 0usize..3) {
        let g = word(&g);
        let check = AdjointFixedCheck::new(&v);
        prop_assert_eq!(check.check(&g), adjoint_apply(&g, &v) == v);
        let x = xi(&primes(), n).unwrap();
        prop_assert_eq!(AdjointFixedCheck::new(&x).check(&g), adjoint_apply(&g, &x) == x);
    }
}
