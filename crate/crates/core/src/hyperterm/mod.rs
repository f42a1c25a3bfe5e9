//! Shifted factorials, symbolic series terms and their ratios, and exact
//! terminating hypergeometric sums.

mod pfq;
mod pochhammer;
mod poly;
mod term;

pub use pfq::{
    chu7f6_check, chu7f6_sides, default_grid, dougall_check, dougall_sides, identity_sweep,
    pfq_terminating, IdentityOutcome, IdentityRecord, MasterIdentity,
};
pub use pochhammer::{
    double_factorial_odd, factorial, gamma_quotient_reduce, pochhammer, pochhammer_has_pole,
    pochhammer_vanishes,
};
pub use poly::Poly;
pub use term::{FactFactor, LinearPoly, PochFactor, RatioForm, Side, TermSpec};
