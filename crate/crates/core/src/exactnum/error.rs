use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactNumError {
    #[error("polynomial vanishes at an interval endpoint")]
    EndpointRoot,
    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,
    #[error("threshold value must be positive")]
    NonPositive,
    #[error("{n} is a perfect square; use a rational threshold {sqrt} instead")]
    PerfectSquare { n: BigInt, sqrt: BigInt },
}
