//! Orbits of the diagonal action of SL(3,Z) on H_{i_1} × ... × H_{i_N}.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::domain::ProductDomain;
use crate::error::Result;
use crate::kvec::{act_with_residues, HnVector};
use crate::lambda::LambdaMatrix;
use crate::primes::PrimeSeq;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitBlock {
    /// Lexicographically least point of the block.
    pub representative: Vec<HnVector>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub domain: ProductDomain,
    pub blocks: Vec<OrbitBlock>,
    /// Block id of every point, indexed by the domain's point numbering.
    pub labels: Vec<u32>,
    pub generators: Vec<LambdaMatrix>,
}

/// Per-factor residues of each generator, so the BFS never touches big integers.
pub(crate) fn generator_residues(
    domain: &ProductDomain,
    generators: &[LambdaMatrix],
) -> Vec<Vec<[[u64; 3]; 3]>> {
    generators
        .iter()
        .map(|g| domain.factors().iter().map(|&(_, p)| g.reduce_mod(p)).collect())
        .collect()
}

pub(crate) fn act_diagonal(residues: &[[[u64; 3]; 3]], point: &[HnVector]) -> Vec<HnVector> {
    point
        .iter()
        .zip(residues)
        .map(|(x, m)| act_with_residues(m, x))
        .collect()
}

/// BFS closure under the twelve elementary generators acting diagonally.
pub fn diagonal_orbits(primes: &PrimeSeq, indices: &[usize], guard: u128) -> Result<OrbitPartition> {
    let domain = ProductDomain::new(primes, indices)?;
    let size = domain.check_guard(guard)?;
    let generators = LambdaMatrix::generators();
    let residues = generator_residues(&domain, &generators);

    const UNSEEN: u32 = u32::MAX;
    let mut labels = alloc::vec![UNSEEN; size];
    let mut blocks = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..size {
        if labels[start] != UNSEEN {
            continue;
        }
        let id = blocks.len() as u32;
        labels[start] = id;
        queue.push_back(start);
        let mut count = 0usize;
        while let Some(pt) = queue.pop_front() {
            count += 1;
            let coords = domain.decode(pt);
            for r in &residues {
                let next = domain.encode(&act_diagonal(r, &coords));
                if labels[next] == UNSEEN {
                    labels[next] = id;
                    queue.push_back(next);
                }
            }
        }
        blocks.push(OrbitBlock {
            representative: domain.decode(start),
            size: count,
        });
    }
    Ok(OrbitPartition {
        domain,
        blocks,
        labels,
        generators,
    })
}

impl OrbitPartition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.size).collect()
    }

    /// Whether the blocks are exactly the sets U_1 × ... × U_N with every U_j
    /// either {0} or H_j ∖ {0}: the zero pattern of a point must determine its
    /// block and every one of the 2^N patterns must occur.
    pub fn matches_zero_pattern_classification(&self) -> bool {
        let n = self.domain.factors().len();
        let mut pattern_of_block: BTreeMap<u32, u64> = BTreeMap::new();
        let mut block_of_pattern: BTreeMap<u64, u32> = BTreeMap::new();
        for (pt, &label) in self.labels.iter().enumerate() {
            let pattern = self.domain.zero_pattern(&self.domain.decode(pt));
            if *pattern_of_block.entry(label).or_insert(pattern) != pattern {
                return false;
            }
            if *block_of_pattern.entry(pattern).or_insert(label) != label {
                return false;
            }
        }
        block_of_pattern.len() == 1usize << n && self.blocks.len() == 1usize << n
    }

    /// Each block mapped into itself by every generator.
    pub fn blocks_are_closed(&self) -> bool {
        let residues = generator_residues(&self.domain, &self.generators);
        (0..self.labels.len()).all(|pt| {
            let coords = self.domain.decode(pt);
            residues
                .iter()
                .all(|r| self.labels[self.domain.encode(&act_diagonal(r, &coords))] == self.labels[pt])
        })
    }
}
