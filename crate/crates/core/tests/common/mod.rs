//! Test-only reference implementations that share no code with the reducer.
#![allow(dead_code)]

use amalgam::{G0Element, GroupWord, HnVector, KVector, LambdaMatrix, Syllable};
use proptest::prelude::*;

pub const PRIMES: [u64; 3] = [2, 3, 5];

#[derive(Debug, Clone, PartialEq)]
pub enum Flat {
    Base(G0Element),
    T(usize, i64),
}

pub fn flat_inverse(seq: &[Flat]) -> Vec<Flat> {
    seq.iter()
        .rev()
        .map(|s| match s {
            Flat::Base(g) => Flat::Base(g.inv()),
            Flat::T(l, m) => Flat::T(*l, -m),
        })
        .collect()
}

pub fn to_syllables(seq: &[Flat]) -> Vec<Syllable> {
    seq.iter()
        .map(|s| match s {
            Flat::Base(g) => Syllable::Base(g.clone()),
            Flat::T(l, m) => Syllable::Stable {
                level: *l,
                exponent: (*m).into(),
            },
        })
        .collect()
}

pub fn word(seq: &[Flat]) -> GroupWord {
    amalgam::reduce(&to_syllables(seq)).unwrap()
}

fn in_k_tail(g: &G0Element, n: usize) -> bool {
    g.lambda.is_identity() && g.k.components().all(|x| x.index >= n)
}

/// The value of the product if it lies in G_0, decided by the textbook
/// rewriting rules on the top stable letter: merge t-powers, and pull an
/// internal block lying in K_{top-1} through t. A block sequence with a stable
/// letter left over is a reduced word and hence outside G_{top-1}.
pub fn oracle_value(seq: &[Flat]) -> Option<G0Element> {
    let top = seq
        .iter()
        .filter_map(|s| match s {
            Flat::T(l, m) if *m != 0 => Some(*l),
            _ => None,
        })
        .max();
    let Some(top) = top else {
        return Some(seq.iter().fold(G0Element::identity(), |acc, s| match s {
            Flat::Base(g) => acc.mul(g),
            Flat::T(..) => acc,
        }));
    };
    let mut blocks: Vec<Vec<Flat>> = vec![Vec::new()];
    let mut exps: Vec<i64> = Vec::new();
    for s in seq {
        match s {
            Flat::T(l, m) if *l == top => {
                blocks.push(Vec::new());
                exps.push(*m);
            }
            Flat::T(_, 0) => {}
            other => blocks.last_mut().unwrap().push(other.clone()),
        }
    }
    loop {
        // drop zero exponents by joining the neighbouring blocks
        if let Some(i) = exps.iter().position(|&m| m == 0) {
            let right = blocks.remove(i + 1);
            blocks[i].extend(right);
            exps.remove(i);
            continue;
        }
        let mut changed = false;
        for i in 1..blocks.len().saturating_sub(1) {
            let inside = oracle_value(&blocks[i]).is_some_and(|v| in_k_tail(&v, top - 1));
            if inside {
                let moved = blocks.remove(i);
                blocks[i - 1].extend(moved);
                let m = exps.remove(i);
                exps[i - 1] += m;
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    if exps.is_empty() {
        oracle_value(&blocks[0])
    } else {
        None
    }
}

pub fn oracle_is_identity(seq: &[Flat]) -> bool {
    oracle_value(seq).is_some_and(|g| g.is_identity())
}

pub fn hn(index: usize, coords: [i64; 3]) -> G0Element {
    G0Element::from_k(KVector::from_hn(HnVector::with_prime(index, PRIMES[index], coords)))
}

pub fn base_strategy() -> impl Strategy<Value = G0Element> {
    let h = (0..3usize, prop::array::uniform3(0i64..5)).prop_map(|(i, c)| hn(i, c));
    let l = (0..3usize, 1..3usize, prop::bool::ANY).prop_map(|(i, d, s)| {
        G0Element::from_lambda(LambdaMatrix::elementary(i, (i + d) % 3, if s { 1 } else { -1 }))
    });
    prop_oneof![h.clone(), l.clone(), (h, l).prop_map(|(a, b)| a.mul(&b))]
}

pub fn flat_strategy(max_level: usize) -> impl Strategy<Value = Flat> {
    let t = (1..=max_level, prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2)])
        .prop_map(|(l, m)| Flat::T(l, m));
    prop_oneof![base_strategy().prop_map(Flat::Base), t]
}

pub fn seq_strategy(max_len: usize, max_level: usize) -> impl Strategy<Value = Vec<Flat>> {
    prop::collection::vec(flat_strategy(max_level), 0..=max_len)
}

/// A relator: a flat sequence equal to the identity in G.
pub fn relator_strategy(max_level: usize) -> impl Strategy<Value = Vec<Flat>> {
    let cancel = base_strategy().prop_map(|g| vec![Flat::Base(g.clone()), Flat::Base(g.inv())]);
    let stable = (1..=max_level, 1i64..3).prop_map(|(l, m)| vec![Flat::T(l, m), Flat::T(l, -m)]);
    // [t, k] with k in K_{level-1}
    let commute = (1..=max_level, prop::array::uniform3(0i64..5)).prop_map(|(l, c)| {
        let k = hn((l - 1).min(2), c);
        vec![Flat::T(l, 1), Flat::Base(k.clone()), Flat::T(l, -1), Flat::Base(k.inv())]
    });
    prop_oneof![cancel, stable, commute]
}
