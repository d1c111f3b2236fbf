use num_rational::BigRational;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested infinite series does not converge at `x`.
    #[error("series diverges at x = {x}: requires {bound}")]
    Divergence { x: BigRational, bound: &'static str },

    /// A rational function was evaluated where its denominator vanishes.
    #[error("pole at x = {0}")]
    Pole(BigRational),

    #[error("division by the zero rational function")]
    DivisionByZero,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
