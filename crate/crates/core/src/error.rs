use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A point or surface violates the illumination model (e.g. a point
    /// outside the front half-space, a non-positive dimension).
    #[error("invalid geometry: {0}")]
    Geometry(String),

    /// A scalar argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The quadrature reference would need more cells than allowed.
    #[error("resolution budget exceeded: {needed} cells required, budget is {budget}")]
    Resolution { needed: u128, budget: u64 },

    /// A special function produced a non-finite value.
    #[error("numerical overflow in {0}")]
    Overflow(&'static str),
}
