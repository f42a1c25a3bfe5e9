use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

/// The four field operations accepted by [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact rational arithmetic; division by zero is reported instead of panicking.
pub fn rat_arith(op: RatOp, x: &ExactRational, y: &ExactRational) -> Result<ExactRational> {
    Ok(match op {
        RatOp::Add => x + y,
        RatOp::Sub => x - y,
        RatOp::Mul => x * y,
        RatOp::Div => x.checked_div(y)?,
    })
}

impl ExactRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(numer.into(), denom)))
    }

    /// Panicking shorthand for literal constants such as `frac(5, 6)`.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("literal fraction with zero denominator")
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn from_big(inner: BigRational) -> Self {
        Self(inner)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `Some(n)` when the value is an integer that fits in `i64`.
    pub fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    pub fn ceil(&self) -> BigInt {
        -((-self.numer()).div_floor(self.denom()))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp >= 0 {
            let e = exp as u32;
            Ok(Self(BigRational::new(
                self.numer().pow(e),
                self.denom().pow(e),
            )))
        } else {
            self.recip()?.pow(-exp)
        }
    }

    pub fn to_f64(&self) -> f64 {
        // Large operands are scaled down first so the quotient does not overflow.
        let n = self.numer();
        let d = self.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(1000);
        if shift == 0 {
            return n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN);
        }
        let ns = n >> shift;
        let ds = d >> shift;
        match (ns.to_f64(), ds.to_f64()) {
            (Some(a), Some(b)) if b != 0.0 => a / b,
            (Some(_), Some(_)) => {
                // denominator underflowed after the shift; value is huge
                if n.sign() == Sign::Minus {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            }
            _ => f64::NAN,
        }
    }

    /// Approximate base-10 logarithm of |x|, for magnitude estimates only.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        log10_big(self.numer().magnitude()) - log10_big(self.denom().magnitude())
    }
}

pub(crate) fn log10_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).log10();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.log10() + shift as f64 * std::f64::consts::LOG10_2
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `n`, `n/d` and `-n/d`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_integer(parse(s)?)),
        }
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<i32> for ExactRational {
    fn from(v: i32) -> Self {
        Self::from_integer(v)
    }
}

impl From<u64> for ExactRational {
    fn from(v: u64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigInt> for ExactRational {
    fn from(v: BigInt) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigUint> for ExactRational {
    fn from(v: BigUint) -> Self {
        Self::from_integer(BigInt::from(v))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'b ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor like every other `Div`; use `checked_div` for fallible code.
forward_binop!(Div, div);

impl std::ops::Rem for ExactRational {
    type Output = ExactRational;
    fn rem(self, rhs: ExactRational) -> ExactRational {
        ExactRational(self.0 % rhs.0)
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        self.0 *= &rhs.0;
    }
}

impl Zero for ExactRational {
    fn zero() -> Self {
        Self(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for ExactRational {
    fn one() -> Self {
        Self(BigRational::one())
    }
}

impl Num for ExactRational {
    type FromStrRadixErr = <BigRational as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        BigRational::from_str_radix(s, radix).map(Self)
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for ExactRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    #[test]
    fn add_reduces() {
        // 1/3 + 2/15 = 5/15 + 2/15 = 7/15
        assert_eq!(rat_arith(RatOp::Add, &q(1, 3), &q(2, 15)).unwrap(), q(7, 15));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let x = q(-22, 7);
        assert_eq!(rat_arith(RatOp::Mul, &x, &ExactRational::one()).unwrap(), x);
    }

    #[test]
    fn div_by_zero_is_an_error() {
        let zero = q(2, 1) - q(2, 1);
        assert_eq!(
            rat_arith(RatOp::Div, &ExactRational::one(), &zero),
            Err(Error::DivisionByZero)
        );
        assert!(ExactRational::new(1, 0).is_err());
    }

    #[test]
    fn canonical_storage() {
        let x = ExactRational::new(6, -4).unwrap();
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-5/10".parse::<ExactRational>().unwrap(), q(-1, 2));
        assert_eq!("7".parse::<ExactRational>().unwrap().to_string(), "7");
        assert_eq!(q(11, 12).to_string(), "11/12");
        assert!("1/x".parse::<ExactRational>().is_err());
    }

    #[test]
    fn floor_ceil_pow() {
        assert_eq!(q(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(q(-7, 2).ceil(), BigInt::from(-3));
        assert_eq!(q(2, 3).pow(-2).unwrap(), q(9, 4));
        assert!(ExactRational::zero().pow(-1).is_err());
    }

    #[test]
    fn to_f64_handles_huge_operands() {
        let big = ExactRational::from_integer(BigInt::from(10u32).pow(400));
        let x = &big / &(&big * q(3, 1));
        assert!((x.to_f64() - 1.0 / 3.0).abs() < 1e-15);
        assert!((big.log10_abs() - 400.0).abs() < 1e-9);
    }
}

impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
