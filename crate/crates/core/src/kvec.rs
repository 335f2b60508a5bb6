//! Elements of H_n = (Z/p_n)^3 and of the direct sum K.

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::Result;
use crate::lambda::LambdaMatrix;
use crate::primes::PrimeSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnVector {
    pub index: usize,
    pub prime: u64,
    pub coords: [u64; 3],
}

impl HnVector {
    /// Coordinates are reduced into [0, p_n).
    pub fn new(primes: &PrimeSeq, index: usize, coords: [i64; 3]) -> Result<Self> {
        let prime = primes.get(index)?;
        Ok(Self::with_prime(index, prime, coords))
    }

    pub fn with_prime(index: usize, prime: u64, coords: [i64; 3]) -> Self {
        let p = prime as i64;
        Self {
            index,
            prime,
            coords: coords.map(|c| c.rem_euclid(p) as u64),
        }
    }

    pub fn from_bigints(primes: &PrimeSeq, index: usize, coords: &[BigInt; 3]) -> Result<Self> {
        let prime = primes.get(index)?;
        let m = BigInt::from(prime);
        Ok(Self {
            index,
            prime,
            coords: core::array::from_fn(|i| coords[i].mod_floor(&m).to_u64().expect("residue")),
        })
    }

    pub fn zero(index: usize, prime: u64) -> Self {
        Self { index, prime, coords: [0; 3] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 3]
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!((self.index, self.prime), (other.index, other.prime));
        let p = self.prime;
        Self {
            coords: core::array::from_fn(|i| (self.coords[i] + other.coords[i]) % p),
            ..*self
        }
    }

    pub fn neg(&self) -> Self {
        let p = self.prime;
        Self {
            coords: self.coords.map(|c| (p - c) % p),
            ..*self
        }
    }

    /// Mixed-radix position of the vector in the lexicographic order of H_n.
    pub fn rank(&self) -> u64 {
        let p = self.prime;
        (self.coords[0] * p + self.coords[1]) * p + self.coords[2]
    }

    pub fn from_rank(index: usize, prime: u64, rank: u64) -> Self {
        let p = prime;
        Self {
            index,
            prime,
            coords: [rank / (p * p), (rank / p) % p, rank % p],
        }
    }

    /// Every element of H_n in lexicographic order.
    pub fn all(index: usize, prime: u64) -> impl Iterator<Item = HnVector> {
        (0..prime * prime * prime).map(move |r| Self::from_rank(index, prime, r))
    }
}

/// The natural action of an integer matrix on H_n: matrix-vector product mod p_n.
pub fn act_mod_p(g: &LambdaMatrix, x: &HnVector) -> HnVector {
    act_with_residues(&g.reduce_mod(x.prime), x)
}

/// Same as [`act_mod_p`] with the matrix already reduced mod p_n.
pub fn act_with_residues(m: &[[u64; 3]; 3], x: &HnVector) -> HnVector {
    let p = x.prime as u128;
    let c = x.coords.map(u128::from);
    HnVector {
        coords: core::array::from_fn(|i| {
            ((m[i][0] as u128 * c[0] + m[i][1] as u128 * c[1] + m[i][2] as u128 * c[2]) % p) as u64
        }),
        ..*x
    }
}

/// A finitely supported element of K = ⊕ H_n; zero summands are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KVector {
    parts: BTreeMap<usize, HnVector>,
}

impl KVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_hn(x: HnVector) -> Self {
        let mut k = Self::zero();
        k.insert(x);
        k
    }

    /// Adds `x` into its summand.
    pub fn insert(&mut self, x: HnVector) {
        let sum = match self.parts.get(&x.index) {
            Some(old) => old.add(&x),
            None => x,
        };
        if sum.is_zero() {
            self.parts.remove(&x.index);
        } else {
            self.parts.insert(x.index, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn component(&self, index: usize) -> Option<&HnVector> {
        self.parts.get(&index)
    }

    pub fn components(&self) -> impl Iterator<Item = &HnVector> {
        self.parts.values()
    }

    /// Smallest index in the support, if any.
    pub fn min_index(&self) -> Option<usize> {
        self.parts.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.parts.keys().next_back().copied()
    }

    /// Membership in K_N = ⊕_{n >= N} H_n.
    pub fn in_tail(&self, level: usize) -> bool {
        self.min_index().is_none_or(|m| m >= level)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for x in other.components() {
            out.insert(*x);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            parts: self.parts.iter().map(|(&i, x)| (i, x.neg())).collect(),
        }
    }

    /// Splits into the part supported below `level` and the part in K_level.
    pub fn split_at(&self, level: usize) -> (Self, Self) {
        let mut low = self.parts.clone();
        let high = low.split_off(&level);
        (Self { parts: low }, Self { parts: high })
    }

    /// Diagonal action (g·k)_n = g·k_n.
    pub fn act(&self, g: &LambdaMatrix) -> Self {
        if g.is_identity() {
            return self.clone();
        }
        let mut cache: BTreeMap<u64, [[u64; 3]; 3]> = BTreeMap::new();
        let parts = self
            .parts
            .iter()
            .map(|(&i, x)| {
                let m = cache.entry(x.prime).or_insert_with(|| g.reduce_mod(x.prime));
                (i, act_with_residues(m, x))
            })
            .collect();
        Self { parts }
    }
}

impl fmt::Display for HnVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords;
        write!(f, "h({};{},{},{})", self.index, c[0], c[1], c[2])
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("e");
        }
        for (i, x) in self.components().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_action_mod_two() {
        let x = HnVector::with_prime(0, 2, [0, 1, 0]);
        let g = LambdaMatrix::elementary(0, 1, 1);
        assert_eq!(act_mod_p(&g, &x).coords, [1, 1, 0]);
        assert!(act_mod_p(&g, &HnVector::zero(0, 2)).is_zero());
    }

    #[test]
    fn zero_summands_vanish() {
        let x = HnVector::with_prime(3, 7, [1, 2, 3]);
        let mut k = KVector::from_hn(x);
        k.insert(x.neg());
        assert!(k.is_zero());
        assert!(k.in_tail(100));
    }

    #[test]
    fn tail_membership() {
        let k = KVector::from_hn(HnVector::with_prime(3, 7, [1, 0, 0]));
        assert!(k.in_tail(2));
        assert!(k.in_tail(3));
        assert!(!k.in_tail(5));
        let (lo, hi) = k.split_at(3);
        assert!(lo.is_zero());
        assert_eq!(hi, k);
    }

    #[test]
    fn rank_roundtrip() {
        for x in HnVector::all(1, 3) {
            assert_eq!(HnVector::from_rank(1, 3, x.rank()), x);
        }
    }
}
