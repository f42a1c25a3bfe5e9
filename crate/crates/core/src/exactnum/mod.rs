//! Exact rationals, error-tracked decimal fixed point, integer square roots
//! and independent reference constants.

mod constants;
mod fixed;
mod rational;

pub use constants::{guard_digits, ln2_formulas, ln2_reference, pi_formulas, pi_reference};
pub use fixed::{fixed_sqrt, FixedReal};
pub use rational::{rat_arith, ExactRational, RatOp};

pub(crate) use fixed::pow10;
