//! The averaging projections e_n, the tail projection f_N, and the mean
//! deviation bound on the commutative algebra they generate.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::kvec::HnVector;
use crate::primes::PrimeSeq;
use crate::word::GroupWord;

fn inverse_cube(p: u64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(p).pow(3))
}

/// e_n = p_n^{-3} Σ_{h ∈ H_n} u_h with exact coefficients.
pub fn projection_en(primes: &PrimeSeq, n: usize) -> Result<GroupAlgebraElement<BigRational>> {
    let p = primes.get(n)?;
    let c = inverse_cube(p);
    Ok(GroupAlgebraElement::from_map(
        HnVector::all(n, p)
            .map(|h| (GroupWord::from(h), c.clone()))
            .collect(),
    ))
}

/// Truncated ∏_{n=first}^{last} (1 − p_n^{-3}) with a bound on what the
/// remaining factors can remove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailTrace {
    pub first: usize,
    pub last: usize,
    pub partial: BigRational,
    /// Upper bound on Σ_{n > last} p_n^{-3}, assuming the sequence continues
    /// past its configured prefix with the primes above the prefix maximum.
    /// The full product lies in [partial·(1 − bound), partial].
    pub remainder_bound: BigRational,
}

impl TailTrace {
    /// ε = 1 − τ(f_N) at this truncation.
    pub fn epsilon(&self) -> BigRational {
        BigRational::one() - &self.partial
    }
}

pub fn tail_trace(primes: &PrimeSeq, first: usize, last: usize) -> Result<TailTrace> {
    if last < first {
        return Err(Error::EmptyRange);
    }
    primes.get(last)?;
    let mut partial = BigRational::one();
    for n in first..=last {
        partial *= BigRational::one() - inverse_cube(primes.get(n)?);
    }
    let mut remainder_bound: BigRational = (last + 1..primes.len())
        .map(|n| inverse_cube(primes.as_slice()[n]))
        .fold(BigRational::zero(), |a, b| a + b);
    // Σ_{q > P} q^{-3} ≤ ∫_P^∞ x^{-3} dx = 1/(2P²)
    let top = primes.as_slice().iter().copied().max().unwrap_or(1);
    remainder_bound += BigRational::new(BigInt::one(), BigInt::from(2u64 * top * top));
    Ok(TailTrace {
        first,
        last,
        partial,
        remainder_bound,
    })
}

pub fn epsilon(primes: &PrimeSeq, first: usize, last: usize) -> Result<BigRational> {
    Ok(tail_trace(primes, first, last)?.epsilon())
}

/// The commutative algebra ⊗_{n=first}^{last} A_n as functions on {0,1}^F:
/// bit j of an atom is set when the atom lies under e_{first+j}. Atom 0 is
/// the support of f_first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSpace {
    pub first: usize,
    pub last: usize,
    masses: Vec<BigRational>,
}

impl AtomSpace {
    pub fn new(primes: &PrimeSeq, first: usize, last: usize) -> Result<Self> {
        if last < first {
            return Err(Error::EmptyRange);
        }
        let masses = (first..=last)
            .map(|n| primes.get(n).map(inverse_cube))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { first, last, masses })
    }

    pub fn factor_count(&self) -> usize {
        self.masses.len()
    }

    pub fn atom_count(&self) -> usize {
        1 << self.masses.len()
    }

    pub fn weight(&self, atom: usize) -> BigRational {
        self.masses
            .iter()
            .enumerate()
            .map(|(j, m)| {
                if atom >> j & 1 == 1 {
                    m.clone()
                } else {
                    BigRational::one() - m
                }
            })
            .fold(BigRational::one(), |a, b| a * b)
    }

    pub fn weights(&self) -> Vec<BigRational> {
        (0..self.atom_count()).map(|a| self.weight(a)).collect()
    }

    /// 1 − τ(f): the mass off atom 0.
    pub fn epsilon(&self) -> BigRational {
        BigRational::one() - self.weight(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeviationCheck {
    /// ‖a − τ(a)1‖₂
    pub lhs: f64,
    /// 4√ε
    pub bound: f64,
    pub pass: bool,
    /// (lhs², 16ε) when the check ran in exact arithmetic.
    pub exact: Option<(BigRational, BigRational)>,
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// ‖a − τ(a)1‖₂ ≤ 4√ε for a real function in the unit ball, decided exactly
/// by comparing squares.
pub fn deviation_bound_check_exact(space: &AtomSpace, values: &[BigRational]) -> Result<DeviationCheck> {
    if values.len() != space.atom_count() {
        return Err(Error::DomainMismatch);
    }
    if values.iter().any(|v| v.abs() > BigRational::one()) {
        return Err(Error::OutsideUnitBall);
    }
    let weights = space.weights();
    let mean: BigRational = weights.iter().zip(values).map(|(w, v)| w * v).sum();
    let lhs_sq: BigRational = weights
        .iter()
        .zip(values)
        .map(|(w, v)| {
            let d = v - &mean;
            w * &d * &d
        })
        .sum();
    let bound_sq = space.epsilon() * BigRational::from_integer(16.into());
    Ok(DeviationCheck {
        lhs: libm::sqrt(to_f64(&lhs_sq)),
        bound: libm::sqrt(to_f64(&bound_sq)),
        pass: lhs_sq <= bound_sq,
        exact: Some((lhs_sq, bound_sq)),
    })
}

/// Same check for complex functions in double precision.
pub fn deviation_bound_check(space: &AtomSpace, values: &[Complex64]) -> Result<DeviationCheck> {
    if values.len() != space.atom_count() {
        return Err(Error::DomainMismatch);
    }
    if values.iter().any(|v| v.norm_sqr() > 1.0 + 1e-12) {
        return Err(Error::OutsideUnitBall);
    }
    let weights: Vec<f64> = space.weights().iter().map(to_f64).collect();
    let mean: Complex64 = weights.iter().zip(values).map(|(w, v)| v * *w).sum();
    let lhs_sq: f64 = weights
        .iter()
        .zip(values)
        .map(|(w, v)| w * (v - mean).norm_sqr())
        .sum();
    let lhs = libm::sqrt(lhs_sq);
    let bound = 4.0 * libm::sqrt(to_f64(&space.epsilon()));
    Ok(DeviationCheck {
        lhs,
        bound,
        pass: lhs <= bound,
        exact: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    #[test]
    fn single_factor_tail() {
        let primes = PrimeSeq::first(3);
        let t = tail_trace(&primes, 0, 0).unwrap();
        assert_eq!(t.partial, rational(7, 8));
        assert_eq!(tail_trace(&primes, 2, 1), Err(Error::EmptyRange));
        assert!(tail_trace(&primes, 0, 3).is_err());
    }

    #[test]
    fn projection_trace_and_support() {
        let primes = PrimeSeq::first(2);
        let e0 = projection_en(&primes, 0).unwrap();
        assert_eq!(e0.trace(), Some(&rational(1, 8)));
        let e1 = projection_en(&primes, 1).unwrap();
        assert_eq!(e1.support_len(), 27);
        assert!(e1.terms().all(|(_, c)| *c == rational(1, 27)));
    }

    #[test]
    fn constants_have_zero_deviation() {
        let space = AtomSpace::new(&PrimeSeq::first(3), 0, 2).unwrap();
        let check = deviation_bound_check_exact(&space, &alloc::vec![rational(-1, 3); 8]).unwrap();
        assert_eq!(check.lhs, 0.0);
        assert!(check.pass);
    }

    #[test]
    fn rejects_outside_unit_ball() {
        let space = AtomSpace::new(&PrimeSeq::first(1), 0, 0).unwrap();
        let v = alloc::vec![rational(3, 2), rational(0, 1)];
        assert_eq!(deviation_bound_check_exact(&space, &v), Err(Error::OutsideUnitBall));
        let c = alloc::vec![Complex64::new(0.8, 0.8), Complex64::new(0.0, 0.0)];
        assert_eq!(deviation_bound_check(&space, &c), Err(Error::OutsideUnitBall));
    }
}
