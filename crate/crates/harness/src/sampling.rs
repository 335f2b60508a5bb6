//! Seeded generators for random group elements and vectors. Every check
//! draws from its own stream so adding a check never shifts another.

use amalgam::{GroupWord, HnVector, KVector, L2Vector, LambdaMatrix, PrimeSeq, Subgroup};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn hn_vector(rng: &mut impl Rng, primes: &PrimeSeq, index: usize) -> HnVector {
    let p = primes.get(index).expect("index is configured");
    let p = p as i64;
    let mut c = || rng.gen_range(0..p);
    HnVector::with_prime(index, p as u64, [c(), c(), c()])
}

pub fn nonzero_hn_vector(rng: &mut impl Rng, primes: &PrimeSeq, index: usize) -> HnVector {
    loop {
        let x = hn_vector(rng, primes, index);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A vector of K supported in `indices`; each summand is present with
/// probability one half.
pub fn k_vector(rng: &mut impl Rng, primes: &PrimeSeq, indices: std::ops::Range<usize>) -> KVector {
    let mut k = KVector::zero();
    for j in indices {
        if rng.gen_bool(0.5) {
            k.insert(hn_vector(rng, primes, j));
        }
    }
    k
}

/// One letter: an elementary matrix, a nonzero vector in H_j for j below
/// `k_bound`, or g_m^{±1} with 1 ≤ m ≤ `max_level`.
pub fn letter(rng: &mut impl Rng, primes: &PrimeSeq, k_bound: usize, max_level: usize) -> GroupWord {
    let k_bound = k_bound.min(primes.len());
    let kinds = 1 + usize::from(k_bound > 0) + usize::from(max_level > 0);
    match rng.gen_range(0..kinds) {
        0 => LambdaMatrix::generators().choose(rng).expect("twelve generators").clone().into(),
        1 if k_bound > 0 => {
            let j = rng.gen_range(0..k_bound);
            nonzero_hn_vector(rng, primes, j).into()
        }
        _ => {
            let m = rng.gen_range(1..=max_level);
            GroupWord::stable(m, if rng.gen_bool(0.5) { 1 } else { -1 }).expect("level is positive")
        }
    }
}

/// A product of at most `max_len` letters.
pub fn word(rng: &mut impl Rng, primes: &PrimeSeq, max_len: usize, k_bound: usize, max_level: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).fold(GroupWord::identity(), |acc, _| {
        acc.mul(&letter(rng, primes, k_bound, max_level))
    })
}

/// x_0 t^{m_1} x_1 ... t^{m_r} x_r at `level` with r ≥ 1, t = g_level, every
/// internal x_i in G_{level-1} ∖ K_{level-1} and every m_i ≠ 0. Returns the
/// product and r.
pub fn reduced_word(rng: &mut impl Rng, primes: &PrimeSeq, level: usize, k_bound: usize) -> (GroupWord, usize) {
    assert!(level >= 1);
    let r = rng.gen_range(1..=3usize);
    let mut w = word(rng, primes, 3, k_bound, level - 1);
    for i in 1..=r {
        let mut m = rng.gen_range(1..=3i64);
        if rng.gen_bool(0.5) {
            m = -m;
        }
        w = w.mul(&GroupWord::stable(level, m).expect("level is positive"));
        let x = if i < r {
            loop {
                let x = word(rng, primes, 4, k_bound, level - 1);
                if !x.is_member(Subgroup::KTail(level - 1)) {
                    break x;
                }
            }
        } else {
            word(rng, primes, 3, k_bound, level - 1)
        };
        w = w.mul(&x);
    }
    (w, r)
}

/// A finitely supported vector on K with 1 to 8 support points drawn from
/// `indices` and nonzero rational coefficients.
pub fn k_supported_vector(
    rng: &mut impl Rng,
    primes: &PrimeSeq,
    indices: std::ops::Range<usize>,
) -> L2Vector<BigRational> {
    let points = rng.gen_range(1..=8);
    let mut map = std::collections::BTreeMap::new();
    for _ in 0..points {
        let k: GroupWord = k_vector(rng, primes, indices.clone()).into();
        let mut num = rng.gen_range(1..=9i64);
        if rng.gen_bool(0.5) {
            num = -num;
        }
        let c = BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1..=4i64)));
        map.insert(k, c);
    }
    L2Vector::from_map(map)
}
