use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact value expected to be an integer (or Gaussian integer) was not.
    #[error("value is not integral: {value}")]
    NotIntegral { value: String },

    /// A component of the raw family was not divisible by 2^n.
    #[error(
        "n = {n}: component {component} = {value} is not divisible by 2^{n} (residue {residue})"
    )]
    NotDivisible {
        n: u32,
        component: &'static str,
        value: String,
        residue: String,
    },

    /// The denominator of a generating function vanishes at 0.
    #[error("generating function denominator has zero constant term")]
    ZeroConstantTerm,
}

pub type Result<T> = std::result::Result<T, Error>;
