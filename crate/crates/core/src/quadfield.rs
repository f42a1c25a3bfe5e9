//! Exact arithmetic in Q(√2, √3) with basis {1, √2, √3, √6}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{fixed_sqrt, guard_digits, ExactRational, FixedReal};
use crate::scalar::Scalar;

/// `a + b√2 + c√3 + d√6`. The basis is linearly independent over Q, so
/// equality and the zero test are coefficient-wise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadExt<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> QuadExt<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn rational(a: T) -> Self {
        Self::new(a, T::zero(), T::zero(), T::zero())
    }

    pub fn sqrt2() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn sqrt3() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn sqrt6() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    /// Conjugate under √3 ↦ -√3 (hence √6 ↦ -√6).
    pub fn conj3(&self) -> Self {
        Self::new(
            self.a.clone(),
            self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    /// Conjugate under √2 ↦ -√2 (hence √6 ↦ -√6).
    pub fn conj2(&self) -> Self {
        Self::new(
            self.a.clone(),
            -self.b.clone(),
            self.c.clone(),
            -self.d.clone(),
        )
    }

    /// Multiplicative inverse by successive conjugation: multiplying by the
    /// √3-conjugate leaves an element of Q(√2), whose √2-conjugate then
    /// leaves a rational norm.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let c3 = self.conj3();
        let in_q2 = self.clone() * c3.clone();
        let c2 = in_q2.conj2();
        let norm = in_q2 * c2.clone();
        debug_assert!(norm.is_rational());
        if norm.a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let inv_norm = T::one() / norm.a;
        Ok((c3 * c2).scale(&inv_norm))
    }

    pub fn to_f64(&self) -> f64 {
        self.a.approx_f64()
            + self.b.approx_f64() * std::f64::consts::SQRT_2
            + self.c.approx_f64() * 3f64.sqrt()
            + self.d.approx_f64() * 6f64.sqrt()
    }
}

impl<T: Scalar> Add for QuadExt<T> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl<T: Scalar> Sub for QuadExt<T> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.a - r.a, self.b - r.b, self.c - r.c, self.d - r.d)
    }
}

impl<T: Scalar> Neg for QuadExt<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<T: Scalar> Mul for QuadExt<T> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let two = T::from_i64(2);
        let three = T::from_i64(3);
        let six = T::from_i64(6);
        let (a1, b1, c1, d1) = (self.a, self.b, self.c, self.d);
        let (a2, b2, c2, d2) = (r.a, r.b, r.c, r.d);
        // √2√3 = √6, √2√6 = 2√3, √3√6 = 3√2
        let a = a1.clone() * a2.clone()
            + two.clone() * b1.clone() * b2.clone()
            + three.clone() * c1.clone() * c2.clone()
            + six * d1.clone() * d2.clone();
        let b = a1.clone() * b2.clone()
            + b1.clone() * a2.clone()
            + three * (c1.clone() * d2.clone() + d1.clone() * c2.clone());
        let c = a1.clone() * c2.clone()
            + c1.clone() * a2.clone()
            + two * (b1.clone() * d2.clone() + d1.clone() * b2.clone());
        let d = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
        Self::new(a, b, c, d)
    }
}

/// Operations accepted by [`quad_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
}

pub fn quad_arith<T: Scalar>(op: QuadOp, x: &QuadExt<T>, y: &QuadExt<T>) -> QuadExt<T> {
    let (x, y) = (x.clone(), y.clone());
    match op {
        QuadOp::Add => x + y,
        QuadOp::Sub => x - y,
        QuadOp::Mul => x * y,
    }
}

pub fn quad_inverse<T: Scalar>(x: &QuadExt<T>) -> Result<QuadExt<T>> {
    x.inverse()
}

/// Enclosure of the real value at `digits` decimals, error at most 10 ulps
/// (square roots are taken with guard digits).
pub fn quad_embed(x: &QuadExt<ExactRational>, digits: u32) -> Result<FixedReal> {
    if digits == 0 {
        return Err(Error::InvalidPrecision(0));
    }
    let wide = digits + guard_digits(16);
    let mut acc = FixedReal::from_rational(&x.a, wide)?;
    for (coef, n) in [(&x.b, 2u32), (&x.c, 3), (&x.d, 6)] {
        if coef.is_zero() {
            continue;
        }
        let root = fixed_sqrt(&BigUint::from(n), wide)?;
        acc = acc.add(&root.mul_rational(coef));
    }
    Ok(acc.with_digits(digits))
}

impl fmt::Debug for QuadExt<ExactRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QuadExt<ExactRational> {
    /// Plain text such as `3/2*sqrt(3)` or `2 - sqrt(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, unit) in [
            (&self.a, ""),
            (&self.b, "sqrt(2)"),
            (&self.c, "sqrt(3)"),
            (&self.d, "sqrt(6)"),
        ] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            let body = if unit.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                unit.to_string()
            } else {
                format!("{mag}*{unit}")
            };
            if out.is_empty() {
                out = if neg { format!("-{body}") } else { body };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `coeff · π^pi_power`, the closed form on one side of each identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedFormConstant {
    coeff: QuadExt<ExactRational>,
    pi_power: i32,
}

impl ClosedFormConstant {
    pub fn new(coeff: QuadExt<ExactRational>, pi_power: i32) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::InvalidTerm("closed form with zero coefficient".into()));
        }
        if !(-1..=2).contains(&pi_power) {
            return Err(Error::InvalidTerm(format!(
                "pi power {pi_power} outside -1..=2"
            )));
        }
        Ok(Self { coeff, pi_power })
    }

    pub fn coeff(&self) -> &QuadExt<ExactRational> {
        &self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    /// Multiplies the coefficient by a nonzero rational.
    pub fn scaled(&self, s: &ExactRational) -> Self {
        Self {
            coeff: self.coeff.scale(s),
            pi_power: self.pi_power,
        }
    }

    /// Enclosure of the value at `digits`, given an enclosure of π at the same precision.
    pub fn evaluate(&self, pi: &FixedReal, digits: u32) -> Result<FixedReal> {
        let c = quad_embed(&self.coeff, digits)?;
        let pi = pi.with_digits(digits);
        Ok(match self.pi_power {
            0 => c,
            1 => c.mul(&pi),
            2 => c.mul(&pi.mul(&pi)),
            -1 => c.div(&pi)?,
            p => unreachable!("pi power {p} rejected at construction"),
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * std::f64::consts::PI.powi(self.pi_power)
    }
}
