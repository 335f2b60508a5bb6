//! Finitely supported elements of the group algebra and of ℓ²(G).

use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::word::GroupWord;

/// A scalar that can sit in front of a basis vector.
pub trait Coefficient: Clone + PartialEq {
    /// Type of |c|².
    type Real: Clone + PartialOrd + Zero;

    fn is_zero(&self) -> bool;
    fn abs_sq(&self) -> Self::Real;
}

impl Coefficient for BigRational {
    type Real = BigRational;

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn abs_sq(&self) -> BigRational {
        self * self
    }
}

impl Coefficient for Complex64 {
    type Real = f64;

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn abs_sq(&self) -> f64 {
        self.norm_sqr()
    }
}

/// A real number ±√q with q a nonnegative rational, kept exact.
///
/// Closed under multiplication only, which is all the witness vectors need.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    negative: bool,
    square: BigRational,
}

impl Surd {
    /// √q for q >= 0.
    pub fn sqrt(square: BigRational) -> Self {
        assert!(!square.is_negative(), "square root of a negative rational");
        Self {
            negative: false,
            square,
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self {
            negative: q.is_negative(),
            square: q * q,
        }
    }

    pub fn square(&self) -> &BigRational {
        &self.square
    }

    pub fn is_negative(&self) -> bool {
        self.negative && !Zero::is_zero(&self.square)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let v = libm::sqrt(self.square.to_f64().unwrap_or(f64::NAN));
        if self.is_negative() {
            -v
        } else {
            v
        }
    }
}

impl Mul for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &Surd) -> Surd {
        Surd {
            negative: self.negative != rhs.negative,
            square: &self.square * &rhs.square,
        }
    }
}

impl Neg for Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        Surd {
            negative: !self.negative,
            square: self.square,
        }
    }
}

impl Coefficient for Surd {
    type Real = BigRational;

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.square)
    }

    fn abs_sq(&self) -> BigRational {
        self.square.clone()
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn norm_sq_of<'a, C: Coefficient + 'a>(coeffs: impl Iterator<Item = &'a C>) -> C::Real
where
    C::Real: Add<Output = C::Real>,
{
    coeffs.fold(C::Real::zero(), |acc, c| acc + c.abs_sq())
}

/// A finitely supported Σ c_g u_g in the group algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupAlgebraElement<C> {
    coeffs: BTreeMap<GroupWord, C>,
}

impl<C> Default for GroupAlgebraElement<C> {
    fn default() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> GroupAlgebraElement<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// c·u_g
    pub fn monomial(g: GroupWord, c: C) -> Self {
        let mut out = Self::zero();
        if !c.is_zero() {
            out.coeffs.insert(g, c);
        }
        out
    }

    pub fn from_map(coeffs: BTreeMap<GroupWord, C>) -> Self {
        Self {
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn coefficient(&self, g: &GroupWord) -> Option<&C> {
        self.coeffs.get(g)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &C)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// τ(x) = ⟨δ_e, x δ_e⟩, the coefficient at the identity.
    pub fn trace(&self) -> Option<&C> {
        self.coeffs.get(&GroupWord::identity())
    }

    /// ‖x‖₂² = Σ |c_g|².
    pub fn norm2_sq(&self) -> C::Real
    where
        C::Real: Add<Output = C::Real>,
    {
        norm_sq_of(self.coeffs.values())
    }

    /// The vector x δ_e in ℓ²(G).
    pub fn apply_to_delta_e(&self) -> L2Vector<C> {
        L2Vector {
            coeffs: self.coeffs.clone(),
        }
    }

    /// Relabels u_g ↦ u_{f(g)}; `f` must be injective on the support.
    pub fn relabel(&self, mut f: impl FnMut(&GroupWord) -> GroupWord) -> Self {
        let coeffs: BTreeMap<_, _> = self.coeffs.iter().map(|(g, c)| (f(g), c.clone())).collect();
        debug_assert_eq!(coeffs.len(), self.coeffs.len(), "relabelling must be injective");
        Self { coeffs }
    }

    pub fn map_coefficients<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> GroupAlgebraElement<D> {
        GroupAlgebraElement::from_map(self.coeffs.iter().map(|(g, c)| (g.clone(), f(c))).collect())
    }
}

impl<C> GroupAlgebraElement<C>
where
    C: Coefficient + Zero + for<'a> Add<&'a C, Output = C>,
    for<'a> &'a C: Mul<&'a C, Output = C>,
{
    /// Convolution (Σ a_g u_g)(Σ b_h u_h) = Σ a_g b_h u_{gh}.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut out: BTreeMap<GroupWord, C> = BTreeMap::new();
        for (g, a) in &self.coeffs {
            for (h, b) in &other.coeffs {
                let gh = g.mul(h);
                let slot = out.entry(gh).or_insert_with(C::zero);
                *slot = core::mem::replace(slot, C::zero()) + &(a * b);
            }
        }
        Self::from_map(out)
    }
}

impl<C> GroupAlgebraElement<C>
where
    C: Coefficient + Zero + for<'a> Sub<&'a C, Output = C>,
{
    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (g, b) in &other.coeffs {
            let slot = out.entry(g.clone()).or_insert_with(C::zero);
            *slot = core::mem::replace(slot, C::zero()) - b;
        }
        Self::from_map(out)
    }
}

/// A finitely supported vector Σ c_k δ_k of ℓ²(G).
#[derive(Debug, Clone, PartialEq)]
pub struct L2Vector<C> {
    coeffs: BTreeMap<GroupWord, C>,
}

impl<C> Default for L2Vector<C> {
    fn default() -> Self {
        Self {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> L2Vector<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// δ_g scaled by `c`.
    pub fn basis(g: GroupWord, c: C) -> Self {
        Self::from_map(BTreeMap::from([(g, c)]))
    }

    pub fn from_map(coeffs: BTreeMap<GroupWord, C>) -> Self {
        Self {
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn coefficient(&self, g: &GroupWord) -> Option<&C> {
        self.coeffs.get(g)
    }

    /// ⟨δ_e, v⟩
    pub fn at_identity(&self) -> Option<&C> {
        self.coeffs.get(&GroupWord::identity())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &C)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupWord> {
        self.coeffs.keys()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn norm_sq(&self) -> C::Real
    where
        C::Real: Add<Output = C::Real>,
    {
        norm_sq_of(self.coeffs.values())
    }

    /// δ_k ↦ δ_{f(k)}. Returns `None` if two keys collide, which cannot happen
    /// for a bijection of G.
    pub fn relabel(&self, mut f: impl FnMut(&GroupWord) -> GroupWord) -> Option<Self> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.coeffs {
            if out.insert(f(k), c.clone()).is_some() {
                return None;
            }
        }
        Some(Self { coeffs: out })
    }

    /// Keeps the coefficients whose key satisfies `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&GroupWord) -> bool) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// True when no basis vector carries a coefficient in both.
    pub fn disjoint_support(&self, other: &Self) -> bool {
        self.coeffs.keys().all(|k| !other.coeffs.contains_key(k))
    }
}

impl<C> L2Vector<C>
where
    C: Coefficient + Zero + for<'a> Add<&'a C, Output = C> + for<'a> Sub<&'a C, Output = C>,
{
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (g, b) in &other.coeffs {
            let slot = out.entry(g.clone()).or_insert_with(C::zero);
            *slot = core::mem::replace(slot, C::zero()) + b;
        }
        Self::from_map(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.coeffs.clone();
        for (g, b) in &other.coeffs {
            let slot = out.entry(g.clone()).or_insert_with(C::zero);
            *slot = core::mem::replace(slot, C::zero()) - b;
        }
        Self::from_map(out)
    }
}
