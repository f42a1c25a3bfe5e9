use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::catalog::ConcreteSeries;
use crate::error::{Error, Result};
use crate::exactnum::{pow10, ExactRational, FixedReal};
use crate::hyperterm::{Poly, RatioForm};

/// Extra decimals carried above the requested precision.
pub const GUARD: u32 = 20;

pub fn working_digits(digits: u32) -> u32 {
    digits + GUARD
}

pub fn check_digits(digits: u32) -> Result<()> {
    if digits == 0 || digits > 1000 {
        return Err(Error::InvalidPrecision(digits));
    }
    Ok(())
}

/// A series split as `head + Σ_{k>=k0} T_k` with `T_{k+1} = T_k·R(k)` exact for `k >= k0`.
pub struct Prepared {
    pub rf: RatioForm,
    pub p: Poly,
    pub q: Poly,
    pub start: i64,
    pub k0: i64,
    /// `prefactor·(correction + Σ_{start<=k<k0} t_k)`
    pub head: ExactRational,
    /// `prefactor·t_{k0}`
    pub t0: ExactRational,
}

impl Prepared {
    pub fn new(s: &ConcreteSeries) -> Result<Self> {
        let rf = s.term.ratio_form();
        let start = s.term.start_index as i64;
        let k0 = s.term.regular_index();
        let mut head = s.correction.clone();
        for k in start..k0 {
            head += &s.term.term_value(k)?;
        }
        Ok(Self {
            p: rf.numerator(),
            q: rf.denominator(),
            rf,
            start,
            k0,
            head: head * &s.prefactor,
            t0: s.term.term_value(k0)? * &s.prefactor,
        })
    }

    pub fn ratio_at(&self, k: i64) -> ExactRational {
        let kk = ExactRational::from(k);
        self.p.eval(&kk) / self.q.eval(&kk)
    }

    /// Whether the series reduces to `head + t0`.
    pub fn is_finite(&self) -> bool {
        self.t0.is_zero() || self.rf.lead.is_zero()
    }

    pub fn walker(&self, w: u32) -> Result<Walker<'_>> {
        Ok(Walker {
            prep: self,
            k: self.k0,
            t: FixedReal::from_rational(&self.t0, w)?,
            partial: FixedReal::from_rational(&self.head, w)?,
        })
    }
}

/// Running position in `Σ_{k>=k0} T_k`: `t` is `T_k`, `partial` is the sum of everything before it.
pub struct Walker<'a> {
    prep: &'a Prepared,
    pub k: i64,
    pub t: FixedReal,
    pub partial: FixedReal,
}

impl Walker<'_> {
    pub fn step(&mut self) {
        self.partial = self.partial.add(&self.t);
        self.t = self.t.mul_rational(&self.prep.ratio_at(self.k));
        self.k += 1;
    }

    pub fn advance_to(&mut self, k: i64) {
        while self.k < k {
            self.step();
        }
    }
}

/// `(|mantissa| + err) / 10^digits`
pub fn upper_abs(x: &FixedReal) -> ExactRational {
    let m = BigInt::from(x.mantissa().magnitude().clone()) + BigInt::from(x.err_ulp().clone());
    ExactRational::new(m, pow10(x.digits())).expect("nonzero scale")
}

/// `ceil(|x|·10^digits)` as ulps.
pub fn ulps(x: &ExactRational, digits: u32) -> BigUint {
    let scaled = x.abs() * ExactRational::from_integer(pow10(digits));
    scaled.ceil().magnitude().clone()
}

/// `10^-e`
pub fn ten_pow_neg(e: u32) -> ExactRational {
    ExactRational::new(BigInt::one(), pow10(e)).expect("nonzero")
}

/// Smallest multiple of `10^-6` that is `>= x`.
pub fn round_up_micro(x: &ExactRational) -> ExactRational {
    let m = ExactRational::from(1_000_000);
    ExactRational::new((x * &m).ceil(), BigInt::from(1_000_000)).expect("nonzero")
}

pub fn inconclusive(msg: impl Into<String>) -> Error {
    Error::Inconclusive(msg.into())
}
