//! Counting distinct conjugates over balls, the finite shadow of infinite
//! conjugacy classes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lambda::{lambda_spheres, LambdaMatrix};
use crate::word::{GroupWord, Subgroup};

/// How the conjugating ball is chosen for a given element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjugatorBall {
    /// Elements outside K: conjugate by the ball of Λ.
    Lambda,
    /// Elements of K ∖ K_level: conjugate by words in Λ's generators and
    /// g_{level+1}^{±1}, a ball in G_{level+1}.
    Amalgam { level: usize },
}

pub fn conjugator_ball_for(g: &GroupWord) -> ConjugatorBall {
    match g.as_base() {
        Some(b) if g.is_member(Subgroup::K) => ConjugatorBall::Amalgam {
            level: b.k.max_index().map_or(0, |m| m + 1),
        },
        _ => ConjugatorBall::Lambda,
    }
}

/// BFS layers of the word-metric ball over `alphabet`, deduplicated.
pub fn word_spheres(alphabet: &[GroupWord], radius: usize) -> Vec<Vec<GroupWord>> {
    let mut seen = BTreeSet::new();
    seen.insert(GroupWord::identity());
    let mut layers = alloc::vec![alloc::vec![GroupWord::identity()]];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in layers.last().expect("nonempty") {
            for a in alphabet {
                let v = w.mul(a);
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        layers.push(next);
    }
    layers
}

fn conjugator_layers(ball: &ConjugatorBall, radius: usize) -> Vec<Vec<GroupWord>> {
    match ball {
        ConjugatorBall::Lambda => lambda_spheres(radius)
            .into_iter()
            .map(|layer| layer.into_iter().map(GroupWord::from).collect())
            .collect(),
        ConjugatorBall::Amalgam { level } => {
            let mut alphabet: Vec<GroupWord> =
                LambdaMatrix::generators().into_iter().map(GroupWord::from).collect();
            for m in [1i64, -1] {
                alphabet.push(GroupWord::stable(level + 1, m).expect("level >= 1"));
            }
            word_spheres(&alphabet, radius)
        }
    }
}

/// Number of distinct conjugates h g h^{-1} for h in the ball of each radius
/// 0..=radius.
pub fn conjugate_growth_profile(g: &GroupWord, radius: usize) -> Result<Vec<usize>> {
    if g.is_identity() {
        return Err(Error::IdentityElement);
    }
    let ball = conjugator_ball_for(g);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(radius + 1);
    for layer in conjugator_layers(&ball, radius) {
        for h in &layer {
            seen.insert(g.conj_by(h));
        }
        out.push(seen.len());
    }
    Ok(out)
}

pub fn conjugate_growth(g: &GroupWord, radius: usize) -> Result<usize> {
    Ok(*conjugate_growth_profile(g, radius)?.last().expect("radius 0 layer"))
}

/// Distinct conjugates under the Λ-ball only, whatever g is.
pub fn lambda_conjugate_count(g: &GroupWord, radius: usize) -> usize {
    let mut seen = BTreeSet::new();
    for layer in lambda_spheres(radius) {
        for l in layer {
            seen.insert(g.conj_by(&l.into()));
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kvec::HnVector;

    #[test]
    fn radius_zero_is_one() {
        let g = GroupWord::stable(1, 1).unwrap();
        assert_eq!(conjugate_growth(&g, 0).unwrap(), 1);
        assert_eq!(conjugate_growth(&GroupWord::identity(), 2), Err(Error::IdentityElement));
    }

    #[test]
    fn stable_letter_conjugates_are_all_distinct() {
        let g = GroupWord::stable(1, 1).unwrap();
        let profile = conjugate_growth_profile(&g, 3).unwrap();
        let ball: Vec<usize> = (0..=3).map(|r| crate::lambda_ball(r).len()).collect();
        assert_eq!(profile, ball);
        assert!(profile.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn k_element_uses_amalgam_ball() {
        let g: GroupWord = HnVector::with_prime(0, 2, [1, 0, 0]).into();
        assert_eq!(conjugator_ball_for(&g), ConjugatorBall::Amalgam { level: 1 });
        // Λ alone only sees the 7 nonzero vectors of F_2^3
        assert_eq!(lambda_conjugate_count(&g, 3), 7);
        assert!(conjugate_growth(&g, 3).unwrap() > 7);
    }
}
