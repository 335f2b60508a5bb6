use core::fmt;

/// Everything that can go wrong in the algebra and the finite checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    DuplicatePrime(u64),
    /// An index n with no configured prime p_n.
    IndexOutOfRange { index: usize, configured: usize },
    DeterminantNotOne,
    /// Stable letters start at level 1.
    ZeroLevel,
    /// A finite product set larger than the enumeration guard.
    SizeGuard { points: u128, guard: u128 },
    IdentityElement,
    /// The invariance of xi_n under G_N is only claimed for n > N.
    ClaimNotAsserted { level: usize, index: usize },
    NotInSubgroup { level: usize },
    SupportOutsideK,
    OutsideUnitBall,
    DomainMismatch,
    EmptyRange,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DuplicatePrime(p) => write!(f, "prime {p} appears more than once"),
            Error::IndexOutOfRange { index, configured } => write!(
                f,
                "index {index} has no configured prime ({configured} primes configured)"
            ),
            Error::DeterminantNotOne => write!(f, "matrix does not have determinant 1"),
            Error::ZeroLevel => write!(f, "stable letters are indexed from level 1"),
            Error::SizeGuard { points, guard } => {
                write!(f, "{points} points exceeds the enumeration guard of {guard}")
            }
            Error::IdentityElement => write!(f, "operation is undefined on the identity"),
            Error::ClaimNotAsserted { level, index } => write!(
                f,
                "invariance of xi_{index} under G_{level} requires index > level"
            ),
            Error::NotInSubgroup { level } => write!(f, "element does not lie in G_{level}"),
            Error::SupportOutsideK => write!(f, "vector has support outside K"),
            Error::OutsideUnitBall => write!(f, "function has sup-norm greater than 1"),
            Error::DomainMismatch => write!(f, "domains do not match"),
            Error::EmptyRange => write!(f, "empty index range"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
