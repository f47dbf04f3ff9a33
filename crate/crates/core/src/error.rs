use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bracket undefined at zero residue")]
    ZeroResidue,
    #[error("not a unit: {0}")]
    NotUnit(BigInt),
    #[error("bad degree: {0}")]
    BadDegree(String),
    #[error("not Eisenstein: {0}")]
    NotEisenstein(String),
    #[error("polynomials live over different primes or degrees")]
    Mismatch,
    #[error("classifier requires degree p")]
    DegreeNotP,
    #[error("classifier requires an odd prime")]
    EvenPrime,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed break list: {0}")]
    MalformedBreaks(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("oracle inconclusive: {0}")]
    Inconclusive(String),
}

impl Error {
    /// Errors that reflect a request outside the supported scope (as
    /// opposed to malformed input).
    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::DegreeNotP | Error::EvenPrime)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
