use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the degree computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the inputs was violated (zero where a unit is
    /// required, mismatched fields, composite modulus, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("not pointed: numerator degree {numerator} must exceed denominator degree {denominator}")]
    NotPointed {
        numerator: isize,
        denominator: isize,
    },

    #[error("not reduced: numerator and denominator share the factor {0}")]
    NotReduced(String),

    #[error("unsupported point: {0}")]
    UnsupportedPoint(String),

    #[error("unsupported vanishing locus: {0}")]
    UnsupportedVanishingLocus(String),

    /// The square class of an integer could not be certified because its
    /// factorization was out of reach.
    #[error("cannot certify the factorization of {0}")]
    Uncertified(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
