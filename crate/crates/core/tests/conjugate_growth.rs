use amalgam::*;

fn primes() -> PrimeSeq {
    PrimeSeq::first(3)
}

fn h(n: usize, c: [i64; 3]) -> GroupWord {
    HnVector::new(&primes(), n, c).unwrap().into()
}

#[test]
fn orbit_of_h0_vector_under_lambda() {
    // Λ-conjugates of a nonzero vector of H_0 fill H_0 ∖ {0}
    let g = h(0, [1, 0, 0]);
    let counts: Vec<usize> = (0..=4).map(|r| lambda_conjugate_count(&g, r)).collect();
    assert_eq!(*counts.last().unwrap(), 7);
    assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    let g = h(1, [1, 2, 0]);
    assert_eq!(lambda_conjugate_count(&g, 4), 26);
}

#[test]
fn growth_is_monotone_and_unbounded_across_levels() {
    let l: GroupWord = LambdaMatrix::elementary(0, 1, 1).into();
    let t1 = GroupWord::stable(1, 1).unwrap();
    let t2 = GroupWord::stable(2, 1).unwrap();
    let elems = [
        l.clone(),
        h(0, [1, 0, 0]).mul(&l),
        h(2, [0, 3, 1]),
        t1.clone(),
        t1.mul(&l),
        t2.mul(&h(0, [1, 1, 1])),
    ];
    for g in &elems {
        let profile = conjugate_growth_profile(g, 3).unwrap();
        assert_eq!(profile[0], 1);
        assert!(profile.windows(2).all(|w| w[0] <= w[1]), "{g}: {profile:?}");
        assert!(profile[3] >= 5, "{g}: {profile:?}");
    }
}

#[test]
fn conjugates_of_stable_letter_are_distinct() {
    let g = GroupWord::stable(1, 1).unwrap();
    for (r, count) in conjugate_growth_profile(&g, 3).unwrap().into_iter().enumerate() {
        assert_eq!(count, lambda_ball(r).len());
    }
}
