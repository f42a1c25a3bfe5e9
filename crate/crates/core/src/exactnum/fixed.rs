use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::ExactRational;
use crate::error::{Error, Result};

pub(crate) fn pow10(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

pub(crate) fn pow10u(digits: u32) -> BigUint {
    BigUint::from(10u32).pow(digits)
}

/// Ceiling of `n / d` for non-negative `n` and positive `d`.
fn ceil_div(n: &BigUint, d: &BigUint) -> BigUint {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

/// Round-to-nearest (ties away from zero) of `n / d` with `d > 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if (r << 1u32) >= *d {
        q + 1
    } else {
        q
    }
}

/// Decimal fixed-point real `mantissa * 10^-digits` carrying a rigorous bound
/// on its absolute error: the true value lies within `err_ulp` units of the
/// last place.
#[derive(Clone, PartialEq, Eq)]
pub struct FixedReal {
    mantissa: BigInt,
    digits: u32,
    err_ulp: BigUint,
}

impl FixedReal {
    pub fn new(mantissa: BigInt, digits: u32, err_ulp: BigUint) -> Self {
        Self {
            mantissa,
            digits,
            err_ulp,
        }
    }

    pub fn zero(digits: u32) -> Self {
        Self::new(BigInt::zero(), digits, BigUint::zero())
    }

    pub fn from_integer(n: impl Into<BigInt>, digits: u32) -> Self {
        Self::new(n.into() * pow10(digits), digits, BigUint::zero())
    }

    /// Rounds `x` down to `digits` decimals; err is 0 when `x` is representable and 1 otherwise.
    pub fn from_rational(x: &ExactRational, digits: u32) -> Result<Self> {
        if digits == 0 {
            return Err(Error::InvalidPrecision(0));
        }
        Ok(Self::from_ratio(x.numer(), x.denom(), digits))
    }

    /// Floor of `num / den * 10^digits`; `den` must be positive.
    pub(crate) fn from_ratio(num: &BigInt, den: &BigInt, digits: u32) -> Self {
        debug_assert!(den.is_positive());
        let (q, r) = (num * pow10(digits)).div_mod_floor(den);
        let err = if r.is_zero() { 0u32 } else { 1u32 };
        Self::new(q, digits, BigUint::from(err))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn err_ulp(&self) -> &BigUint {
        &self.err_ulp
    }

    pub fn is_exact(&self) -> bool {
        self.err_ulp.is_zero()
    }

    /// Lower and upper mantissa bounds of the enclosure.
    pub fn bounds(&self) -> (BigInt, BigInt) {
        let e = BigInt::from(self.err_ulp.clone());
        (&self.mantissa - &e, &self.mantissa + e)
    }

    /// Adds `extra` ulps to the error bound.
    pub fn widen(mut self, extra: &BigUint) -> Self {
        self.err_ulp += extra;
        self
    }

    /// Re-expresses the value at `digits` decimals. Increasing precision is
    /// exact; decreasing rounds to nearest and adds one ulp.
    pub fn with_digits(&self, digits: u32) -> Self {
        match digits.cmp(&self.digits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = pow10(digits - self.digits);
                let su = pow10u(digits - self.digits);
                Self::new(&self.mantissa * s, digits, &self.err_ulp * su)
            }
            Ordering::Less => {
                let d = self.digits - digits;
                let s = pow10(d);
                let m = round_div(&self.mantissa, &s);
                let exact = (&m * &s) == self.mantissa;
                let mut e = ceil_div(&self.err_ulp, &pow10u(d));
                if !exact {
                    e += 1u32;
                }
                Self::new(m, digits, e)
            }
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let p = self.digits.max(other.digits);
        (self.with_digits(p), other.with_digits(p))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self::new(a.mantissa + b.mantissa, a.digits, a.err_ulp + b.err_ulp)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self::new(a.mantissa - b.mantissa, a.digits, a.err_ulp + b.err_ulp)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.mantissa, self.digits, self.err_ulp.clone())
    }

    pub fn abs(&self) -> Self {
        Self::new(self.mantissa.abs(), self.digits, self.err_ulp.clone())
    }

    /// Product with error `e1(|m2|+e2) + |m1|e2` scaled back by `10^P`, rounded up, plus one rounding ulp.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let s = pow10(a.digits);
        let raw = &a.mantissa * &b.mantissa;
        let (m, r) = raw.div_mod_floor(&s);
        let m1 = a.mantissa.magnitude();
        let m2 = b.mantissa.magnitude();
        let prop = &a.err_ulp * (m2 + &b.err_ulp) + m1 * &b.err_ulp;
        let mut e = ceil_div(&prop, &pow10u(a.digits));
        if !r.is_zero() {
            e += 1u32;
        }
        Self::new(m, a.digits, e)
    }

    /// Quotient; fails when the divisor's enclosure contains zero.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other);
        let my = b.mantissa.magnitude();
        if *my <= b.err_ulp {
            return Err(Error::DivisionByZero);
        }
        let s = pow10(a.digits);
        let (m, r) = (&a.mantissa * &s).div_mod_floor(&b.mantissa);
        let mx = a.mantissa.magnitude();
        // (ex|my| + |mx|ey) 10^P / ((|my| - ey)|my|)
        let num = (&a.err_ulp * my + mx * &b.err_ulp) * pow10u(a.digits);
        let den = (my - &b.err_ulp) * my;
        let mut e = ceil_div(&num, &den);
        if !r.is_zero() {
            e += 1u32;
        }
        Ok(Self::new(m, a.digits, e))
    }

    /// Multiplies by an exact rational; one rounding ulp when the product is not representable.
    pub fn mul_rational(&self, q: &ExactRational) -> Self {
        let num = &self.mantissa * q.numer();
        let (m, r) = num.div_mod_floor(q.denom());
        let mut e = ceil_div(
            &(&self.err_ulp * q.numer().magnitude()),
            q.denom().magnitude(),
        );
        if !r.is_zero() {
            e += 1u32;
        }
        Self::new(m, self.digits, e)
    }

    pub fn powi(&self, exp: u32) -> Self {
        let mut acc = Self::from_integer(1, self.digits);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// The exact rational value of the center.
    pub fn center(&self) -> ExactRational {
        ExactRational::new(self.mantissa.clone(), pow10(self.digits)).expect("nonzero scale")
    }

    /// Half-width of the enclosure as an exact rational.
    pub fn radius(&self) -> ExactRational {
        ExactRational::new(BigInt::from(self.err_ulp.clone()), pow10(self.digits))
            .expect("nonzero scale")
    }

    pub fn to_f64(&self) -> f64 {
        self.center().to_f64()
    }

    /// True when `x` lies inside the enclosure.
    pub fn contains(&self, x: &ExactRational) -> bool {
        let d = (x - &self.center()).abs();
        d <= self.radius()
    }

    /// True when the two enclosures intersect.
    pub fn overlaps(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        let gap = (&a.mantissa - &b.mantissa).magnitude().clone();
        gap <= &a.err_ulp + &b.err_ulp
    }

    /// Upper bound on `|self - other|` over both enclosures, in ulps of the finer precision.
    pub fn max_abs_diff(&self, other: &Self) -> (BigUint, u32) {
        let (a, b) = self.aligned(other);
        let gap = (&a.mantissa - &b.mantissa).magnitude().clone();
        (gap + &a.err_ulp + &b.err_ulp, a.digits)
    }

    /// Decimal rendering of the center with exactly `digits` fractional digits.
    pub fn to_decimal_string(&self) -> String {
        let neg = self.mantissa.sign() == Sign::Minus;
        let mut s = self.mantissa.magnitude().to_string();
        let p = self.digits as usize;
        if s.len() <= p {
            s = format!("{}{}", "0".repeat(p + 1 - s.len()), s);
        }
        let split = s.len() - p;
        let out = if p == 0 {
            s
        } else {
            format!("{}.{}", &s[..split], &s[split..])
        };
        if neg {
            format!("-{out}")
        } else {
            out
        }
    }
}

impl fmt::Display for FixedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for FixedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}±{}ulp", self.to_decimal_string(), self.err_ulp)
    }
}

/// Serialized as `{"value": decimal, "err_ulp": integer string, "digits": n}`.
impl serde::Serialize for FixedReal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FixedReal", 3)?;
        st.serialize_field("value", &self.to_decimal_string())?;
        st.serialize_field("err_ulp", &self.err_ulp.to_string())?;
        st.serialize_field("digits", &self.digits)?;
        st.end()
    }
}

/// `sqrt(n)` to `digits` decimals from the integer square root of `n * 10^(2 digits)`.
pub fn fixed_sqrt(n: &BigUint, digits: u32) -> Result<FixedReal> {
    if digits == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    let scaled = n * pow10u(2 * digits);
    // num-integer's `Roots::sqrt` is Newton's iteration on integers.
    let root = scaled.sqrt();
    let exact = &root * &root == scaled;
    let err = if exact { BigUint::zero() } else { BigUint::one() };
    Ok(FixedReal::new(BigInt::from(root), digits, err))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    #[test]
    fn to_fixed_one_third() {
        let x = FixedReal::from_rational(&q(1, 3), 5).unwrap();
        assert_eq!(x.mantissa(), &BigInt::from(33333));
        assert_eq!(x.err_ulp(), &BigUint::from(1u32));
    }

    #[test]
    fn to_fixed_long_division() {
        // 22/15 = 1.4666...: long division gives 14666666666 at ten places
        let x = FixedReal::from_rational(&q(22, 15), 10).unwrap();
        assert_eq!(x.to_decimal_string(), "1.4666666666");
        assert!(x.contains(&q(22, 15)));
    }

    #[test]
    fn to_fixed_zero_and_bad_precision() {
        let z = FixedReal::from_rational(&q(0, 1), 7).unwrap();
        assert!(z.mantissa().is_zero() && z.is_exact());
        assert_eq!(
            FixedReal::from_rational(&q(1, 2), 0),
            Err(Error::InvalidPrecision(0))
        );
    }

    #[test]
    fn negative_rendering() {
        let x = FixedReal::from_rational(&q(-1, 8), 4).unwrap();
        assert_eq!(x.to_decimal_string(), "-0.1250");
        let y = FixedReal::from_rational(&q(-1, 3), 3).unwrap();
        assert_eq!(y.to_decimal_string(), "-0.334");
        assert!(y.contains(&q(-1, 3)));
    }

    #[test]
    fn sqrt_perfect_square_is_exact() {
        let r = fixed_sqrt(&BigUint::from(4u32), 12).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.to_decimal_string(), "2.000000000000");
    }

    #[test]
    fn sqrt3_ten_digits() {
        let r = fixed_sqrt(&BigUint::from(3u32), 10).unwrap();
        assert_eq!(r.to_decimal_string(), "1.7320508075");
        // square against 3 to ten places
        let sq = r.mul(&r);
        assert!(sq.contains(&q(3, 1)));
    }

    #[test]
    fn sqrt2_squared_within_bound() {
        let r = fixed_sqrt(&BigUint::from(2u32), 10).unwrap();
        let sq = r.mul(&r);
        assert!(sq.contains(&q(2, 1)));
        let (d, _) = sq.max_abs_diff(&FixedReal::from_integer(2, 10));
        assert!(d <= BigUint::from(8u32));
    }

    #[test]
    fn mul_div_enclose_exact_results() {
        let a = FixedReal::from_rational(&q(1, 7), 20).unwrap();
        let b = FixedReal::from_rational(&q(-3, 11), 20).unwrap();
        assert!(a.mul(&b).contains(&q(-3, 77)));
        assert!(a.div(&b).unwrap().contains(&q(-11, 21)));
        assert!(a.div(&FixedReal::zero(20)).is_err());
        assert!(a.mul_rational(&q(22, 3)).contains(&q(22, 21)));
    }

    #[test]
    fn with_digits_round_trip() {
        let a = FixedReal::from_rational(&q(2, 3), 30).unwrap();
        let b = a.with_digits(10);
        assert_eq!(b.to_decimal_string(), "0.6666666667");
        assert!(b.contains(&q(2, 3)));
        let c = b.with_digits(15);
        assert!(c.contains(&q(2, 3)));
    }
}
