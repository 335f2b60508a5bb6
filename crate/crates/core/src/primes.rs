use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// The sequence of distinct primes p_0, p_1, ... attached to the summands H_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSeq {
    primes: Vec<u64>,
}

impl PrimeSeq {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        for (i, &p) in primes.iter().enumerate() {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if primes[..i].contains(&p) {
                return Err(Error::DuplicatePrime(p));
            }
        }
        Ok(Self { primes })
    }

    /// The first `count` primes in increasing order.
    pub fn first(count: usize) -> Self {
        let mut primes = Vec::with_capacity(count);
        let mut p = 1;
        for _ in 0..count {
            p = next_prime(p);
            primes.push(p);
        }
        Self { primes }
    }

    /// Appends the next primes above the current maximum until `len` entries exist.
    pub fn extend_to(&mut self, len: usize) {
        while self.primes.len() < len {
            let top = self.primes.iter().copied().max().unwrap_or(1);
            self.primes.push(next_prime(top));
        }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn get(&self, n: usize) -> Result<u64> {
        self.primes.get(n).copied().ok_or(Error::IndexOutOfRange {
            index: n,
            configured: self.primes.len(),
        })
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }
}

impl Default for PrimeSeq {
    fn default() -> Self {
        Self::first(5)
    }
}
