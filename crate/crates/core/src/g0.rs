use core::fmt;

use crate::kvec::KVector;
use crate::lambda::LambdaMatrix;

/// An element (k, λ) of G_0 = K ⋊ Λ with (k,λ)(k',λ') = (k + λ·k', λλ').
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct G0Element {
    pub k: KVector,
    pub lambda: LambdaMatrix,
}

impl G0Element {
    pub fn identity() -> Self {
        Self {
            k: KVector::zero(),
            lambda: LambdaMatrix::identity(),
        }
    }

    pub fn from_k(k: KVector) -> Self {
        Self {
            k,
            lambda: LambdaMatrix::identity(),
        }
    }

    pub fn from_lambda(lambda: LambdaMatrix) -> Self {
        Self {
            k: KVector::zero(),
            lambda,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.k.is_zero() && self.lambda.is_identity()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            k: self.k.add(&other.k.act(&self.lambda)),
            lambda: &self.lambda * &other.lambda,
        }
    }

    /// (k,λ)^{-1} = (-λ^{-1}·k, λ^{-1})
    pub fn inv(&self) -> Self {
        let lambda = self.lambda.inverse();
        Self {
            k: self.k.neg().act(&lambda),
            lambda,
        }
    }
}

impl fmt::Display for G0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k.is_zero(), self.lambda.is_identity()) {
            (true, true) => f.write_str("e"),
            (false, true) => write!(f, "{}", self.k),
            (true, false) => write!(f, "{}", self.lambda),
            (false, false) => write!(f, "{} * {}", self.k, self.lambda),
        }
    }
}
