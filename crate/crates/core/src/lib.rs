//! Exact arithmetic in the groups G_N obtained from K ⋊ SL(3,Z) by repeatedly
//! amalgamating K_N × Z over K_N, together with the finite checks built on it:
//! orbit classification of the mod-p action, the Fourier picture of ℓ^∞(H_n),
//! the averaging projections e_n, and conjugation-invariant witness vectors.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod algebra;
mod error;
pub mod finite;
mod g0;
mod growth;
mod kvec;
mod lambda;
mod primes;
mod word;
pub mod witness;

pub use algebra::{rational, Coefficient, GroupAlgebraElement, L2Vector, Surd};
pub use error::{Error, Result};
pub use g0::G0Element;
pub use growth::{
    conjugate_growth, conjugate_growth_profile, conjugator_ball_for, lambda_conjugate_count,
    word_spheres, ConjugatorBall,
};
pub use kvec::{act_mod_p, HnVector, KVector};
pub use lambda::{lambda_ball, lambda_spheres, LambdaMatrix};
pub use primes::{is_prime, next_prime, PrimeSeq};
pub use word::{conj, eq, inv, membership, mul, reduce, Amalgam, GroupWord, Subgroup, Syllable};
