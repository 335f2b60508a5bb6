use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kvec::HnVector;
use crate::primes::PrimeSeq;

/// Default cap on the number of points a finite check may enumerate.
pub const DEFAULT_SIZE_GUARD: u128 = 10_000_000;

/// An explicit product H_{i_1} × ... × H_{i_N}.
///
/// Points are numbered in mixed radix with the first factor most significant,
/// so numeric order is lexicographic order of coordinate tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductDomain {
    factors: Vec<(usize, u64)>,
}

impl ProductDomain {
    pub fn new(primes: &PrimeSeq, indices: &[usize]) -> Result<Self> {
        let mut factors = Vec::with_capacity(indices.len());
        for &i in indices {
            factors.push((i, primes.get(i)?));
        }
        Ok(Self { factors })
    }

    pub fn from_factors(factors: Vec<(usize, u64)>) -> Self {
        Self { factors }
    }

    pub fn factors(&self) -> &[(usize, u64)] {
        &self.factors
    }

    pub fn indices(&self) -> Vec<usize> {
        self.factors.iter().map(|&(i, _)| i).collect()
    }

    pub fn size(&self) -> u128 {
        self.factors.iter().map(|&(_, p)| u128::from(p).pow(3)).product()
    }

    pub fn check_guard(&self, guard: u128) -> Result<usize> {
        let points = self.size();
        if points > guard {
            Err(Error::SizeGuard { points, guard })
        } else {
            Ok(points as usize)
        }
    }

    pub fn decode(&self, mut point: usize) -> Vec<HnVector> {
        let mut out = Vec::with_capacity(self.factors.len());
        for &(i, p) in self.factors.iter().rev() {
            let n = (p * p * p) as usize;
            out.push(HnVector::from_rank(i, p, (point % n) as u64));
            point /= n;
        }
        out.reverse();
        out
    }

    pub fn encode(&self, coords: &[HnVector]) -> usize {
        coords.iter().zip(&self.factors).fold(0usize, |acc, (x, &(_, p))| {
            acc * (p * p * p) as usize + x.rank() as usize
        })
    }

    /// Bit j set iff the j-th coordinate of the point is zero.
    pub fn zero_pattern(&self, coords: &[HnVector]) -> u64 {
        coords
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_zero())
            .fold(0, |acc, (j, _)| acc | (1 << j))
    }
}
