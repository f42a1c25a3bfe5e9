//! Parameterized series for π, π² and 1/π: exact term arithmetic, the
//! catalog of families, and certified numerical verification.
//!
//! The term and field machinery is generic over [`scalar::Scalar`]; the
//! aliases below name the instantiations used throughout.

pub mod error;
pub mod exactnum;
pub mod quadfield;
pub mod scalar;
pub mod hyperterm;
pub mod catalog;
pub mod engine;

pub use error::{Error, Result};
pub use exactnum::{ExactRational, FixedReal};
pub use quadfield::{ClosedFormConstant, QuadExt};
pub use scalar::Scalar;

pub type Rational = ExactRational;
pub type QuadQ = QuadExt<ExactRational>;
pub type QuadF64 = QuadExt<f64>;
