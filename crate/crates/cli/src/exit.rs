use pifam::Error;

pub const OK: i32 = 0;
pub const FAILED: i32 = 1;
pub const USAGE: i32 = 2;
pub const CONSTRAINT: i32 = 3;
pub const INCONCLUSIVE: i32 = 4;
pub const INTERNAL: i32 = 5;
pub const ORACLE: i32 = 6;

pub fn for_error(e: &Error) -> i32 {
    match e {
        Error::UnknownFamily(_)
        | Error::UnknownGolden(_)
        | Error::ParamCount { .. }
        | Error::Parse(_)
        | Error::InvalidPrecision(_) => USAGE,
        Error::ConstraintViolation(_) => CONSTRAINT,
        Error::Inconclusive(_) => INCONCLUSIVE,
        Error::OracleDisagreement { .. } => ORACLE,
        _ => INTERNAL,
    }
}
