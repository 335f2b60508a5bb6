//! The adjoint representation π(g)δ_k = δ_{gkg^{-1}} on finitely supported
//! vectors of ℓ²(G), the uniform unit vectors ξ_n over H_n, and the finite
//! checks around them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Coefficient, L2Vector, Surd};
use crate::error::{Error, Result};
use crate::finite::projection_en;
use crate::growth::word_spheres;
use crate::kvec::{act_with_residues, HnVector, KVector};
use crate::lambda::LambdaMatrix;
use crate::primes::PrimeSeq;
use crate::word::{GroupWord, Subgroup};

/// Conjugation by a fixed element, with the linear shortcut on K cached per
/// summand.
pub struct Conjugator<'a> {
    g: &'a GroupWord,
    g_inv: GroupWord,
    plans: BTreeMap<(usize, u64), Option<[[u64; 3]; 3]>>,
}

impl<'a> Conjugator<'a> {
    pub fn new(g: &'a GroupWord) -> Self {
        Self {
            g,
            g_inv: g.inv(),
            plans: BTreeMap::new(),
        }
    }

    /// g k g^{-1}
    pub fn apply(&mut self, k: &GroupWord) -> GroupWord {
        if let Some(b) = k.as_base().filter(|b| b.lambda.is_identity()) {
            let mut image = KVector::zero();
            let mut linear = true;
            for x in b.k.components() {
                let g = self.g;
                let plan = self
                    .plans
                    .entry((x.index, x.prime))
                    .or_insert_with(|| g.conjugation_on_summand(x.index, x.prime));
                match plan {
                    Some(m) => image.insert(act_with_residues(m, x)),
                    None => {
                        linear = false;
                        break;
                    }
                }
            }
            if linear {
                return image.into();
            }
        }
        self.g.mul(k).mul(&self.g_inv)
    }
}

/// δ_k ↦ δ_{g k g^{-1}}.
pub fn adjoint_apply<C: Coefficient>(g: &GroupWord, v: &L2Vector<C>) -> L2Vector<C> {
    if g.is_identity() {
        return v.clone();
    }
    let mut conj = Conjugator::new(g);
    v.relabel(|k| conj.apply(k))
        .expect("conjugation is a bijection of G")
}

/// Whether u_g v u_g^* = v. Conjugation is a bijection, so this holds iff it
/// maps the support of v into itself preserving coefficients.
pub fn is_adjoint_fixed<C: Coefficient>(g: &GroupWord, v: &L2Vector<C>) -> bool {
    AdjointFixedCheck::new(v).check(g)
}

/// Repeated fixed-point checks against one vector. When the support lies in
/// a single summand H_n the coefficients are tabulated by rank, so a check
/// costs one linear map per support point.
pub struct AdjointFixedCheck<'v, C> {
    v: &'v L2Vector<C>,
    dense: Option<DenseSummand<'v, C>>,
}

struct DenseSummand<'v, C> {
    index: usize,
    prime: u64,
    table: Vec<Option<&'v C>>,
}

impl<'v, C: Coefficient> AdjointFixedCheck<'v, C> {
    pub fn new(v: &'v L2Vector<C>) -> Self {
        Self {
            v,
            dense: Self::tabulate(v),
        }
    }

    fn tabulate(v: &'v L2Vector<C>) -> Option<DenseSummand<'v, C>> {
        let mut summand: Option<(usize, u64)> = None;
        let mut entries = Vec::with_capacity(v.support_len());
        for (k, c) in v.terms() {
            let b = k.as_base().filter(|b| b.lambda.is_identity())?;
            let mut parts = b.k.components();
            match (parts.next(), parts.next()) {
                (None, _) => entries.push((0u64, c)),
                (Some(x), None) => {
                    if summand.is_some_and(|s| s != (x.index, x.prime)) {
                        return None;
                    }
                    summand = Some((x.index, x.prime));
                    entries.push((x.rank(), c));
                }
                _ => return None,
            }
        }
        let (index, prime) = summand?;
        let mut table = alloc::vec![None; (prime * prime * prime) as usize];
        for (r, c) in entries {
            table[r as usize] = Some(c);
        }
        Some(DenseSummand { index, prime, table })
    }

    pub fn check(&self, g: &GroupWord) -> bool {
        if g.is_identity() {
            return true;
        }
        if let Some(d) = &self.dense {
            if let Some(m) = g.conjugation_on_summand(d.index, d.prime) {
                return d.table.iter().enumerate().all(|(r, c)| match c {
                    None => true,
                    Some(c) => {
                        let x = HnVector::from_rank(d.index, d.prime, r as u64);
                        d.table[act_with_residues(&m, &x).rank() as usize] == Some(*c)
                    }
                });
            }
        }
        let mut conj = Conjugator::new(g);
        self.v
            .terms()
            .all(|(k, c)| self.v.coefficient(&conj.apply(k)) == Some(c))
    }
}

/// ξ_n = p_n^{3/2} e_n δ_e = p_n^{-3/2} Σ_{h ∈ H_n} δ_h, with exact surd coefficients.
pub fn xi(primes: &PrimeSeq, n: usize) -> Result<L2Vector<Surd>> {
    let p = primes.get(n)?;
    let scale = Surd::sqrt(BigRational::from_integer(BigInt::from(p).pow(3)));
    let en = projection_en(primes, n)?;
    Ok(en
        .map_coefficients(|c| &Surd::from_rational(c) * &scale)
        .apply_to_delta_e())
}

/// Whether u_g ξ_n u_g^* = ξ_n, for g ∈ G_level and n > level.
pub fn check_xi_invariance(primes: &PrimeSeq, level: usize, n: usize, g: &GroupWord) -> Result<bool> {
    if n <= level {
        return Err(Error::ClaimNotAsserted { level, index: n });
    }
    if !g.is_member(Subgroup::Level(level)) {
        return Err(Error::NotInSubgroup { level });
    }
    let v = xi(primes, n)?;
    Ok(is_adjoint_fixed(g, &v))
}

/// E_{L K_N}: keeps the coefficients on K_N.
pub fn conditional_expectation<C: Coefficient>(v: &L2Vector<C>, level: usize) -> L2Vector<C> {
    v.restrict(|k| k.is_member(Subgroup::KTail(level)))
}

/// A finite generating alphabet for G_level: the twelve elementary matrices,
/// g_m^{±1} for 1 ≤ m ≤ level, and ±(1,0,0) in H_j for each j in `k_indices`.
pub fn level_alphabet(primes: &PrimeSeq, level: usize, k_indices: &[usize]) -> Result<Vec<GroupWord>> {
    let mut out: Vec<GroupWord> = LambdaMatrix::generators().into_iter().map(GroupWord::from).collect();
    for m in 1..=level {
        for s in [1i64, -1] {
            out.push(GroupWord::stable(m, s)?);
        }
    }
    for &j in k_indices {
        let x = HnVector::new(primes, j, [1, 0, 0])?;
        out.push(x.into());
        if x.prime != 2 {
            out.push(x.neg().into());
        }
    }
    Ok(out)
}

/// Looks for g in G_level, up to word length `radius` over [`level_alphabet`],
/// with u_g ξ_n u_g^* ≠ ξ_n. `None` means the search was inconclusive.
pub fn search_xi_violation(
    primes: &PrimeSeq,
    level: usize,
    n: usize,
    radius: usize,
) -> Result<Option<GroupWord>> {
    let v = xi(primes, n)?;
    let indices: Vec<usize> = (0..=n.max(level)).filter(|&j| j < primes.len()).collect();
    let alphabet = level_alphabet(primes, level, &indices)?;
    let fixed = AdjointFixedCheck::new(&v);
    for layer in word_spheres(&alphabet, radius) {
        for g in layer {
            if !fixed.check(&g) {
                return Ok(Some(g));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalityCheck {
    pub level: usize,
    /// ‖u_t y u_t^* − y‖₂² with t = g_{level+1}
    pub lhs_sq: BigRational,
    /// ‖y − E_{L K_level}(y)‖₂²
    pub rhs_sq: BigRational,
    /// u_t(y − E(y))u_t^* and E(y) − y share no basis vector.
    pub disjoint: bool,
    /// u_t y u_t^* − y equals the sum of those two pieces.
    pub decomposes: bool,
    pub pass: bool,
}

impl OrthogonalityCheck {
    pub fn lhs(&self) -> f64 {
        libm::sqrt(self.lhs_sq.to_f64().unwrap_or(f64::NAN))
    }

    pub fn rhs(&self) -> f64 {
        libm::sqrt(self.rhs_sq.to_f64().unwrap_or(f64::NAN))
    }
}

/// Checks ‖u_t y u_t^* − y‖₂ ≥ ‖y − E_{L K_N}(y)‖₂ for t = g_{N+1}, exactly.
pub fn orthogonality_inequality_check(y: &L2Vector<BigRational>, level: usize) -> Result<OrthogonalityCheck> {
    if y.support().any(|k| !k.is_member(Subgroup::K)) {
        return Err(Error::SupportOutsideK);
    }
    let t = GroupWord::stable(level + 1, 1)?;
    let conj = adjoint_apply(&t, y);
    let diff = conj.sub(y);
    let expectation = conditional_expectation(y, level);
    let off_tail = y.sub(&expectation);
    let moved = adjoint_apply(&t, &off_tail);
    let rest = expectation.sub(y);
    let lhs_sq = diff.norm_sq();
    let rhs_sq = off_tail.norm_sq();
    let disjoint = moved.disjoint_support(&rest);
    let decomposes = moved.add(&rest) == diff;
    let pass = disjoint && decomposes && lhs_sq >= rhs_sq;
    Ok(OrthogonalityCheck {
        level,
        lhs_sq,
        rhs_sq,
        disjoint,
        decomposes,
        pass,
    })
}

/// ⟨δ_e, ξ_n⟩², which should be p_n^{-3}.
pub fn xi_identity_overlap_sq(v: &L2Vector<Surd>) -> BigRational {
    v.at_identity().map(|c| c.square().clone()).unwrap_or_else(BigRational::zero)
}
