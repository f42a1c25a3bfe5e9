//! Reference values of π and ln 2 from two independent inverse-tangent
//! decompositions each. Partial sums are exact rationals; the truncated
//! remainder is bounded by its first omitted term (alternating arctan) or a
//! geometric majorant (atanh).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::fixed::{pow10, FixedReal};
use super::rational::ExactRational;
use crate::error::{Error, Result};

/// Guard digits for an evaluation taking roughly `steps` arithmetic steps.
pub fn guard_digits(steps: u64) -> u32 {
    10 + (steps.max(1) as f64).log10().ceil() as u32
}

/// Binary splitting of Σ_{j∈[a,b)} s^j / ((2j+1) y^j) returned as `(N, P)`
/// with the sum equal to `N / (P * y^(b-1))`.
fn split(a: u64, b: u64, y: &BigInt, alternating: bool) -> (BigInt, BigInt) {
    if b - a == 1 {
        let sign = if alternating && a % 2 == 1 { -1 } else { 1 };
        return (BigInt::from(sign), BigInt::from(2 * a + 1));
    }
    let m = (a + b) / 2;
    let (n1, p1) = split(a, m, y, alternating);
    let (n2, p2) = split(m, b, y, alternating);
    let shift = y.pow((b - m) as u32);
    (n1 * shift * &p2 + n2 * &p1, p1 * p2)
}

/// One inverse-tangent-type series at argument 1/x with its exact partial sum
/// and a rigorous bound on the discarded tail.
struct RecipSeries {
    partial: ExactRational,
    tail_bound: ExactRational,
}

/// `atan(1/x)` (alternating) or `atanh(1/x)` summed until the tail is below `10^-(digits+1) / weight`.
fn recip_series(x: u64, digits: u32, weight: u64, alternating: bool) -> RecipSeries {
    let xb = BigInt::from(x);
    let y = &xb * &xb;
    let target = pow10(digits + 1) * BigInt::from(weight);
    // first guess from magnitudes, then tighten with exact comparisons
    let est = ((digits as f64 + 1.0 + (weight as f64).log10()) / (2.0 * (x as f64).log10()))
        .ceil()
        .max(1.0) as u64;
    let mut terms = est.saturating_sub(2).max(1);
    let tail_den = |j: u64| -> BigInt {
        // (2j+1) x^(2j+1), shrunk by (1 - 1/x^2) for the non-alternating majorant
        let base = BigInt::from(2 * j + 1) * xb.pow((2 * j + 1) as u32);
        if alternating {
            base
        } else {
            base * (&y - 1u32) / &y
        }
    };
    while tail_den(terms) < target {
        terms += 1;
    }
    let (n, p) = split(0, terms, &y, alternating);
    let den = p * y.pow((terms - 1) as u32) * &xb;
    let partial = ExactRational::new(n, den).expect("positive denominator");
    let tail_bound = if alternating {
        ExactRational::new(
            BigInt::one(),
            BigInt::from(2 * terms + 1) * xb.pow((2 * terms + 1) as u32),
        )
    } else {
        ExactRational::new(
            y.clone(),
            BigInt::from(2 * terms + 1) * xb.pow((2 * terms + 1) as u32) * (&y - 1u32),
        )
    }
    .expect("positive denominator");
    RecipSeries {
        partial,
        tail_bound,
    }
}

/// Σ weight_i · series(x_i) as an enclosure at `digits` decimals.
fn combine(parts: &[(i64, u64)], digits: u32, alternating: bool) -> FixedReal {
    let mut value = ExactRational::zero();
    let mut bound = ExactRational::zero();
    for &(w, x) in parts {
        let s = recip_series(x, digits, w.unsigned_abs(), alternating);
        let wq = ExactRational::from(w);
        value += &(&wq * &s.partial);
        bound += &(&wq.abs() * &s.tail_bound);
    }
    let fixed = FixedReal::from_rational(&value, digits).expect("digits >= 1");
    let extra = (&bound * &ExactRational::from_integer(pow10(digits))).ceil();
    fixed.widen(&extra.to_biguint().unwrap_or_default())
}

/// Rounds a wide enclosure to `digits` places; the result is within one ulp
/// provided the wide error is below half an ulp of the target.
fn finish(wide: &FixedReal, digits: u32) -> FixedReal {
    let drop = wide.digits() - digits;
    debug_assert!(drop >= 2);
    let s = pow10(drop);
    let (q, r) = num_integer::Integer::div_mod_floor(wide.mantissa(), &s);
    let m = if (r << 1u32) >= s { q + 1 } else { q };
    FixedReal::new(m, digits, BigUint::one())
}

fn check_agree(a: &FixedReal, b: &FixedReal, digits: u32) -> Result<()> {
    let (gap, p) = a.max_abs_diff(b);
    let limit = BigUint::from(10u32).pow(p - digits);
    if a.overlaps(b) && gap <= limit {
        Ok(())
    } else {
        Err(Error::OracleDisagreement { digits })
    }
}

/// The two independent π evaluations at `digits` decimals (each with its own error bound):
/// `16 atan(1/5) - 4 atan(1/239)` and `4 atan(1/2) + 4 atan(1/3)`.
pub fn pi_formulas(digits: u32) -> Result<(FixedReal, FixedReal)> {
    if digits == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    let machin = combine(&[(16, 5), (-4, 239)], digits, true);
    let euler = combine(&[(4, 2), (4, 3)], digits, true);
    Ok((machin, euler))
}

/// π to `digits` decimals with `|result - π| <= 10^-digits`. Fails if the two
/// internal formulas disagree.
pub fn pi_reference(digits: u32) -> Result<FixedReal> {
    if digits == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    let steps = (digits as u64 + 12) * 4;
    let wide = digits + guard_digits(steps);
    let (machin, euler) = pi_formulas(wide)?;
    check_agree(&machin, &euler, digits)?;
    Ok(finish(&machin, digits))
}

/// The two independent ln 2 evaluations: `2 atanh(1/3)` and `4 atanh(1/7) + 2 atanh(1/17)`.
pub fn ln2_formulas(digits: u32) -> Result<(FixedReal, FixedReal)> {
    if digits == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    let a = combine(&[(2, 3)], digits, false);
    let b = combine(&[(4, 7), (2, 17)], digits, false);
    Ok((a, b))
}

/// ln 2 to `digits` decimals, cross-checked like [`pi_reference`].
pub fn ln2_reference(digits: u32) -> Result<FixedReal> {
    if digits == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    let steps = (digits as u64 + 12) * 3;
    let wide = digits + guard_digits(steps);
    let (a, b) = ln2_formulas(wide)?;
    check_agree(&a, &b, digits)?;
    Ok(finish(&a, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_twenty_digits() {
        let p = pi_reference(20).unwrap();
        assert_eq!(p.to_decimal_string(), "3.14159265358979323846");
        assert_eq!(p.err_ulp(), &BigUint::one());
    }

    #[test]
    fn pi_one_digit() {
        assert_eq!(pi_reference(1).unwrap().to_decimal_string(), "3.1");
    }

    #[test]
    fn formulas_agree() {
        for d in [5, 10, 50, 200] {
            let (a, b) = pi_formulas(d).unwrap();
            assert!(a.overlaps(&b), "disagree at {d}");
            let (gap, _) = a.max_abs_diff(&b);
            assert!(gap <= BigUint::from(10u32), "gap {gap} at {d}");
        }
    }

    #[test]
    fn ln2_digits() {
        assert_eq!(
            ln2_reference(30).unwrap().to_decimal_string(),
            "0.693147180559945309417232121458"
        );
    }

    #[test]
    fn zero_digits_rejected() {
        assert_eq!(pi_reference(0), Err(Error::InvalidPrecision(0)));
    }
}
