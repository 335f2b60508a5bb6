//! Functions on finite products H_{i_1} × ... × H_{i_N} and the Fourier
//! isomorphism ℓ^∞(H_n) → L(H_n).
//!
//! With the pairing χ_x(y) = exp(2πi⟨x,y⟩/p) the transform is
//! α(f) = Σ_x ĉ(x) u_x where ĉ(x) = p^{-3} Σ_y f(y) conj(χ_x(y)). It sends the
//! normalized-counting trace to the coefficient at u_0 and pointwise products
//! to convolution.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::domain::ProductDomain;
use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::kvec::{act_mod_p, act_with_residues, HnVector};
use crate::lambda::LambdaMatrix;
use crate::word::GroupWord;

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteFunction {
    domain: ProductDomain,
    values: Vec<Complex64>,
}

impl FiniteFunction {
    pub fn new(domain: ProductDomain, values: Vec<Complex64>) -> Result<Self> {
        if domain.size() != values.len() as u128 {
            return Err(Error::DomainMismatch);
        }
        Ok(Self { domain, values })
    }

    pub fn from_fn(domain: ProductDomain, mut f: impl FnMut(&[HnVector]) -> Complex64) -> Self {
        let values = (0..domain.size() as usize).map(|pt| f(&domain.decode(pt))).collect();
        Self { domain, values }
    }

    pub fn constant(domain: ProductDomain, c: Complex64) -> Self {
        let n = domain.size() as usize;
        Self {
            domain,
            values: alloc::vec![c; n],
        }
    }

    /// χ_{point}
    pub fn indicator(domain: ProductDomain, point: &[HnVector]) -> Self {
        let mut f = Self::constant(domain, Complex64::new(0.0, 0.0));
        let pt = f.domain.encode(point);
        f.values[pt] = Complex64::new(1.0, 0.0);
        f
    }

    pub fn domain(&self) -> &ProductDomain {
        &self.domain
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn at(&self, point: &[HnVector]) -> Complex64 {
        self.values[self.domain.encode(point)]
    }

    /// τ(f): the average over the domain.
    pub fn trace(&self) -> Complex64 {
        self.values.iter().sum::<Complex64>() / self.values.len() as f64
    }

    /// ‖f‖₂ for the normalized counting measure.
    pub fn norm2(&self) -> f64 {
        libm::sqrt(self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / self.values.len() as f64)
    }

    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        Ok(Self {
            domain: self.domain.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// (θ_g f)(x) = f(g^{-1}·x), acting diagonally.
    pub fn theta(&self, g: &LambdaMatrix) -> Self {
        let ginv = g.inverse();
        let residues: Vec<_> = self.domain.factors().iter().map(|&(_, p)| ginv.reduce_mod(p)).collect();
        let values = (0..self.values.len())
            .map(|pt| {
                let moved: Vec<HnVector> = self
                    .domain
                    .decode(pt)
                    .iter()
                    .zip(&residues)
                    .map(|(x, m)| act_with_residues(m, x))
                    .collect();
                self.values[self.domain.encode(&moved)]
            })
            .collect();
        Self {
            domain: self.domain.clone(),
            values,
        }
    }
}

fn roots_of_unity(p: u64) -> Vec<Complex64> {
    (0..p)
        .map(|k| Complex64::cis(2.0 * PI * k as f64 / p as f64))
        .collect()
}

fn pairing(x: &HnVector, y: &HnVector) -> usize {
    let p = x.prime;
    ((x.coords[0] * y.coords[0] + x.coords[1] * y.coords[1] + x.coords[2] * y.coords[2]) % p) as usize
}

fn single_factor(domain: &ProductDomain) -> Result<(usize, u64)> {
    match domain.factors() {
        [f] => Ok(*f),
        _ => Err(Error::DomainMismatch),
    }
}

/// Fourier coefficients ĉ indexed by the rank of x in H_n. Zero values of `f`
/// are skipped, so indicator functions cost p^3.
pub fn fourier_dense(f: &FiniteFunction) -> Result<Vec<Complex64>> {
    let (index, p) = single_factor(f.domain())?;
    let roots = roots_of_unity(p);
    let n = (p * p * p) as usize;
    let scale = 1.0 / n as f64;
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); n];
    for (ry, &v) in f.values().iter().enumerate() {
        if v == Complex64::new(0.0, 0.0) {
            continue;
        }
        let y = HnVector::from_rank(index, p, ry as u64);
        for (rx, slot) in out.iter_mut().enumerate() {
            let x = HnVector::from_rank(index, p, rx as u64);
            *slot += v * roots[pairing(&x, &y)].conj() * scale;
        }
    }
    Ok(out)
}

/// α_n(f) = Σ_x ĉ(x) u_x.
pub fn fourier(f: &FiniteFunction) -> Result<GroupAlgebraElement<Complex64>> {
    let (index, p) = single_factor(f.domain())?;
    let dense = fourier_dense(f)?;
    let coeffs: BTreeMap<GroupWord, Complex64> = dense
        .into_iter()
        .enumerate()
        .map(|(r, c)| (GroupWord::from(HnVector::from_rank(index, p, r as u64)), c))
        .collect();
    Ok(GroupAlgebraElement::from_map(coeffs))
}

/// Inverse of [`fourier`]: f(y) = Σ_x ĉ(x) χ_x(y). Every key must lie in H_n.
pub fn inverse_fourier(
    a: &GroupAlgebraElement<Complex64>,
    index: usize,
    prime: u64,
) -> Result<FiniteFunction> {
    let domain = ProductDomain::from_factors(alloc::vec![(index, prime)]);
    let roots = roots_of_unity(prime);
    let mut terms = Vec::with_capacity(a.support_len());
    for (g, &c) in a.terms() {
        let x = h_component(g, index, prime).ok_or(Error::DomainMismatch)?;
        terms.push((x, c));
    }
    Ok(FiniteFunction::from_fn(domain, |pt| {
        terms
            .iter()
            .map(|(x, c)| c * roots[pairing(x, &pt[0])])
            .sum()
    }))
}

/// The H_n vector a word represents, if it lies in H_n.
fn h_component(g: &GroupWord, index: usize, prime: u64) -> Option<HnVector> {
    let b = g.as_base()?;
    if !b.lambda.is_identity() {
        return None;
    }
    let mut parts = b.k.components();
    match (parts.next(), parts.next()) {
        (None, _) => Some(HnVector::zero(index, prime)),
        (Some(x), None) if x.index == index => Some(*x),
        _ => None,
    }
}

/// σ_g(Σ c_x u_x) = Σ c_x u_{g·x} on elements supported in K.
pub fn sigma<C: crate::algebra::Coefficient>(
    g: &LambdaMatrix,
    a: &GroupAlgebraElement<C>,
) -> GroupAlgebraElement<C> {
    a.relabel(|w| match w.as_base() {
        Some(b) if b.lambda.is_identity() => GroupWord::from(b.k.act(g)),
        _ => w.clone(),
    })
}

/// sup over the indicator basis of ‖α_n(θ_g f) − σ_{(g^{-1})^T}(α_n f)‖₂.
pub fn check_intertwiner(g: &LambdaMatrix, index: usize, prime: u64) -> f64 {
    let domain = ProductDomain::from_factors(alloc::vec![(index, prime)]);
    let twist = g.inverse().transpose().reduce_mod(prime);
    let mut worst = 0.0f64;
    for y in HnVector::all(index, prime) {
        let f = FiniteFunction::indicator(domain.clone(), &[y]);
        let lhs = fourier_dense(&f.theta(g)).expect("single factor");
        let plain = fourier_dense(&f).expect("single factor");
        let mut rhs = alloc::vec![Complex64::new(0.0, 0.0); plain.len()];
        for (r, c) in plain.into_iter().enumerate() {
            let x = HnVector::from_rank(index, prime, r as u64);
            rhs[act_with_residues(&twist, &x).rank() as usize] = c;
        }
        let dev_sq: f64 = lhs.iter().zip(&rhs).map(|(a, b)| (a - b).norm_sqr()).sum();
        worst = worst.max(libm::sqrt(dev_sq));
    }
    worst
}

/// Intertwining with the untwisted action, used to show the transpose-inverse
/// is needed: returns the same deviation with σ_g in place of σ_{(g^{-1})^T}.
pub fn untwisted_deviation(g: &LambdaMatrix, index: usize, prime: u64) -> f64 {
    let domain = ProductDomain::from_factors(alloc::vec![(index, prime)]);
    let mut worst = 0.0f64;
    for y in HnVector::all(index, prime) {
        let f = FiniteFunction::indicator(domain.clone(), &[y]);
        let lhs = fourier_dense(&f.theta(g)).expect("single factor");
        let plain = fourier_dense(&f).expect("single factor");
        let mut rhs = alloc::vec![Complex64::new(0.0, 0.0); plain.len()];
        for (r, c) in plain.into_iter().enumerate() {
            let x = HnVector::from_rank(index, prime, r as u64);
            rhs[act_mod_p(g, &x).rank() as usize] = c;
        }
        let dev_sq: f64 = lhs.iter().zip(&rhs).map(|(a, b)| (a - b).norm_sqr()).sum();
        worst = worst.max(libm::sqrt(dev_sq));
    }
    worst
}
