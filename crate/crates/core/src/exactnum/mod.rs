//! Exact integer-polynomial arithmetic, Sturm real-root counting, and
//! algebraic threshold values. Everything downstream of this module gets
//! its spectral verdicts from here, with no floating point involved.

mod error;
mod poly;
mod threshold;

pub use error::ExactNumError;
pub use poly::IntPolynomial;
pub use threshold::{sylvester_resultant, RationalInterval, SpectralThreshold};
