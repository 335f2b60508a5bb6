//! Dimension of the space of Λ-invariant functions on a finite product,
//! computed by exact elimination on the invariance equations. This route never
//! looks at orbits, so it can be checked against [`super::diagonal_orbits`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::domain::ProductDomain;
use super::orbits::{act_diagonal, generator_residues};
use crate::error::Result;
use crate::lambda::LambdaMatrix;
use crate::primes::PrimeSeq;

type SparseRow = BTreeMap<usize, BigRational>;

/// A fully reduced row basis over Q built one sparse row at a time.
///
/// Every stored row owns a pivot column with coefficient 1 that appears in no
/// other stored row, so reducing a new row takes a single pass. The pivot of a
/// new row is the column currently shared by the fewest stored rows, which
/// keeps the back-substitution cheap.
#[derive(Debug, Default)]
pub struct SparseEchelon {
    rows: Vec<SparseRow>,
    pivot_row: BTreeMap<usize, usize>,
    /// Non-pivot column -> stored rows with a nonzero entry there.
    occurrences: BTreeMap<usize, BTreeSet<usize>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Subtracts `factor * src` from stored row `target`, keeping the
    /// occurrence index in sync. `src` must not be a stored row.
    fn axpy_stored(&mut self, target: usize, factor: &BigRational, src: &SparseRow) {
        for (&col, v) in src {
            let row = &mut self.rows[target];
            let entry = row.entry(col).or_insert_with(BigRational::zero);
            let was_zero = entry.is_zero();
            *entry -= factor * v;
            let now_zero = entry.is_zero();
            if now_zero {
                row.remove(&col);
            }
            if self.pivot_row.contains_key(&col) {
                continue;
            }
            match (was_zero, now_zero) {
                (true, false) => {
                    self.occurrences.entry(col).or_default().insert(target);
                }
                (false, true) => {
                    if let Some(set) = self.occurrences.get_mut(&col) {
                        set.remove(&target);
                    }
                }
                _ => {}
            }
        }
    }

    /// Reduces `row` and stores it if it is independent. Returns whether the
    /// rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        let hits: Vec<(usize, BigRational)> = row
            .iter()
            .filter_map(|(c, v)| self.pivot_row.get(c).map(|&r| (r, v.clone())))
            .collect();
        for (r, factor) in hits {
            for (&col, v) in &self.rows[r] {
                let entry = row.entry(col).or_insert_with(BigRational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(&col);
                }
            }
        }
        let Some(pivot) = row
            .keys()
            .copied()
            .min_by_key(|c| (self.occurrences.get(c).map_or(0, |s| s.len()), *c))
        else {
            return false;
        };
        let inv = BigRational::one() / &row[&pivot];
        for v in row.values_mut() {
            *v *= &inv;
        }
        let touched = self.occurrences.remove(&pivot).unwrap_or_default();
        for r in touched {
            let factor = self.rows[r].get(&pivot).cloned().unwrap_or_default();
            self.axpy_stored(r, &factor, &row);
        }
        let id = self.rows.len();
        for &col in row.keys() {
            if col != pivot {
                self.occurrences.entry(col).or_default().insert(id);
            }
        }
        self.pivot_row.insert(pivot, id);
        self.rows.push(row);
        true
    }
}

/// dim { f : f(g·x) = f(x) for every generator g and every point x }.
///
/// Only E_ij(+1) are imposed: invariance under g already gives invariance
/// under g^{-1}.
pub fn fixed_point_dimension(primes: &PrimeSeq, indices: &[usize], guard: u128) -> Result<usize> {
    let domain = ProductDomain::new(primes, indices)?;
    let size = domain.check_guard(guard)?;
    let generators: Vec<LambdaMatrix> = LambdaMatrix::generators()
        .into_iter()
        .step_by(2)
        .collect();
    let residues = generator_residues(&domain, &generators);
    let mut echelon = SparseEchelon::new();
    for r in &residues {
        for pt in 0..size {
            let image = domain.encode(&act_diagonal(r, &domain.decode(pt)));
            if image == pt {
                continue;
            }
            let mut row = SparseRow::new();
            row.insert(image, BigRational::one());
            row.insert(pt, -BigRational::one());
            echelon.insert(row);
        }
    }
    Ok(size - echelon.rank())
}
