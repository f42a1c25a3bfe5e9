use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::pochhammer::{pochhammer, pochhammer_has_pole, pochhammer_vanishes};
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::exactnum::ExactRational;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Numerator,
    Denominator,
}

/// `(base)_{k+offset}` on one side of the fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PochFactor {
    pub base: ExactRational,
    pub offset: i64,
    pub side: Side,
}

/// `(k+offset)!` on one side of the fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactFactor {
    pub offset: i64,
    pub side: Side,
}

/// `alpha·k + beta`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearPoly {
    pub alpha: i64,
    pub beta: ExactRational,
}

impl PochFactor {
    pub fn num(base: ExactRational, offset: i64) -> Self {
        Self { base, offset, side: Side::Numerator }
    }
    pub fn den(base: ExactRational, offset: i64) -> Self {
        Self { base, offset, side: Side::Denominator }
    }
}

impl FactFactor {
    pub fn num(offset: i64) -> Self {
        Self { offset, side: Side::Numerator }
    }
    pub fn den(offset: i64) -> Self {
        Self { offset, side: Side::Denominator }
    }
}

impl LinearPoly {
    pub fn new(alpha: i64, beta: ExactRational) -> Self {
        Self { alpha, beta }
    }

    pub fn int(alpha: i64, beta: i64) -> Self {
        Self::new(alpha, beta.into())
    }

    pub fn eval(&self, k: i64) -> ExactRational {
        ExactRational::from(self.alpha * k) + &self.beta
    }

    /// Integer `k >= from` where the polynomial vanishes, if any.
    pub fn integer_zero_from(&self, from: i64) -> Option<i64> {
        if self.alpha == 0 {
            return None;
        }
        let r = -self.beta.clone() / ExactRational::from(self.alpha);
        r.to_i64_exact().filter(|&k| k >= from)
    }
}

/// Symbolic general term
/// `scale · z^k · ∏poly_num/∏poly_den · ∏(base)_{k+o}^{±1} · ∏(k+o)!^{±1}`,
/// summed over `k >= start_index`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermSpec {
    pub poch: Vec<PochFactor>,
    pub fact: Vec<FactFactor>,
    pub poly_num: Vec<LinearPoly>,
    pub poly_den: Vec<LinearPoly>,
    pub geo_base: ExactRational,
    pub scale: ExactRational,
    pub start_index: u64,
}

impl Default for TermSpec {
    fn default() -> Self {
        Self {
            poch: Vec::new(),
            fact: Vec::new(),
            poly_num: Vec::new(),
            poly_den: Vec::new(),
            geo_base: ExactRational::one(),
            scale: ExactRational::one(),
            start_index: 0,
        }
    }
}

impl TermSpec {
    /// Checks that every factor is finite and every denominator nonzero for
    /// all `k >= start_index`.
    pub fn validate(&self) -> Result<()> {
        let k0 = self.start_index as i64;
        if self.geo_base.abs() > ExactRational::one() {
            return Err(Error::InvalidTerm(format!("|z| = |{}| > 1", self.geo_base)));
        }
        for f in &self.fact {
            if k0 + f.offset < 0 {
                return Err(Error::PoleAtInstantiation(format!("(k{:+})! at k={k0}", f.offset)));
            }
        }
        for p in &self.poch {
            let n0 = k0 + p.offset;
            if pochhammer_has_pole(&p.base, n0) {
                return Err(Error::PoleAtInstantiation(format!(
                    "({})_(k{:+}) at k={k0}",
                    p.base, p.offset
                )));
            }
            if p.side == Side::Denominator && p.base.is_integer() && !p.base.is_positive() {
                return Err(Error::PoleAtInstantiation(format!(
                    "1/({})_(k{:+}) vanishes eventually",
                    p.base, p.offset
                )));
            }
        }
        for l in &self.poly_den {
            if l.alpha == 0 && l.beta.is_zero() {
                return Err(Error::PoleAtInstantiation("constant zero denominator".into()));
            }
            if let Some(k) = l.integer_zero_from(k0) {
                return Err(Error::PoleAtInstantiation(format!(
                    "{}k{:+} = 0 at k={k}",
                    l.alpha, l.beta
                )));
            }
        }
        if self.scale.is_zero() {
            return Err(Error::InvalidTerm("zero scale".into()));
        }
        Ok(())
    }

    fn check_index(&self, k: i64) -> Result<()> {
        if k < self.start_index as i64 {
            return Err(Error::InvalidTerm(format!(
                "k = {k} below start index {}",
                self.start_index
            )));
        }
        Ok(())
    }

    /// Exact `term(k)`.
    pub fn term_value(&self, k: i64) -> Result<ExactRational> {
        self.check_index(k)?;
        self.term_value_as::<ExactRational>(k)
    }

    /// `term(k)` computed in an arbitrary scalar field.
    pub fn term_value_as<T: Scalar>(&self, k: i64) -> Result<T> {
        let mut num = T::from_rational(&self.scale);
        let mut den = T::one();
        let z = T::from_rational(&self.geo_base);
        for _ in 0..k.max(0) {
            num = num * z.clone();
        }
        for l in &self.poly_num {
            num = num * T::from_rational(&l.eval(k));
        }
        for l in &self.poly_den {
            den = den * T::from_rational(&l.eval(k));
        }
        for p in &self.poch {
            let v: T = pochhammer(&T::from_rational(&p.base), k + p.offset)?;
            match p.side {
                Side::Numerator => num = num * v,
                Side::Denominator => den = den * v,
            }
        }
        for f in &self.fact {
            let n = k + f.offset;
            if n < 0 {
                return Err(Error::Pole(format!("({n})!")));
            }
            let v: T = pochhammer(&T::one(), n)?;
            match f.side {
                Side::Numerator => num = num * v,
                Side::Denominator => den = den * v,
            }
        }
        if den.is_zero() {
            return Err(Error::Pole(format!("term denominator vanishes at k={k}")));
        }
        Ok(num / den)
    }

    /// Exact `term(k+1)/term(k)` from the factor recurrences
    /// `(x)_{n+1}/(x)_n = x+n` and `(n+1)!/n! = n+1`.
    pub fn term_ratio(&self, k: i64) -> Result<ExactRational> {
        self.check_index(k)?;
        let mut num = self.geo_base.clone();
        let mut den = ExactRational::one();
        let kk = ExactRational::from(k);
        for l in &self.poly_num {
            let now = l.eval(k);
            if now.is_zero() {
                return Err(Error::InvalidTerm(format!("term vanishes at k={k}")));
            }
            num *= &l.eval(k + 1);
            den *= &now;
        }
        for l in &self.poly_den {
            let next = l.eval(k + 1);
            if next.is_zero() {
                return Err(Error::Pole(format!("poly denominator at k={}", k + 1)));
            }
            num *= &l.eval(k);
            den *= &next;
        }
        for p in &self.poch {
            let n = k + p.offset;
            let step = &p.base + &ExactRational::from(n);
            match p.side {
                Side::Numerator => {
                    if pochhammer_vanishes(&p.base, n) {
                        return Err(Error::InvalidTerm(format!("term vanishes at k={k}")));
                    }
                    num *= &step;
                }
                Side::Denominator => {
                    if pochhammer_vanishes(&p.base, n + 1) {
                        return Err(Error::Pole(format!("({})_{}", p.base, n + 1)));
                    }
                    den *= &step;
                }
            }
        }
        for f in &self.fact {
            let step = &kk + &ExactRational::from(f.offset + 1);
            match f.side {
                Side::Numerator => num *= &step,
                Side::Denominator => den *= &step,
            }
        }
        if den.is_zero() {
            return Err(Error::Pole(format!("ratio at k={k}")));
        }
        if num.is_zero() && !self.geo_base.is_zero() {
            return Err(Error::InvalidTerm(format!("term vanishes at k={}", k + 1)));
        }
        Ok(num / den)
    }

    /// The term ratio as a reduced rational function of `k`.
    pub fn ratio_form(&self) -> RatioForm {
        let (num_roots, den_roots) = self.raw_ratio_roots();
        RatioForm::new(self.geo_base.clone(), num_roots, den_roots)
    }

    /// First index `>= start_index` beyond every root of every factor of the
    /// ratio, cancelled or not; from there on the recurrence `t(k+1) = t(k)·R(k)` is exact.
    pub fn regular_index(&self) -> i64 {
        let (n, d) = self.raw_ratio_roots();
        n.iter()
            .chain(&d)
            .map(|r| num_traits::ToPrimitive::to_i64(&r.floor()).unwrap_or(i64::MAX - 1) + 1)
            .fold(self.start_index as i64, i64::max)
    }

    fn raw_ratio_roots(&self) -> (Vec<ExactRational>, Vec<ExactRational>) {
        let mut num_roots = Vec::new();
        let mut den_roots = Vec::new();
        for l in self.poly_num.iter().filter(|l| l.alpha != 0) {
            let a = ExactRational::from(l.alpha);
            num_roots.push(-(&l.beta + &a) / &a);
            den_roots.push(-l.beta.clone() / &a);
        }
        for l in self.poly_den.iter().filter(|l| l.alpha != 0) {
            let a = ExactRational::from(l.alpha);
            num_roots.push(-l.beta.clone() / &a);
            den_roots.push(-(&l.beta + &a) / &a);
        }
        for p in &self.poch {
            let r = -(&p.base + &ExactRational::from(p.offset));
            match p.side {
                Side::Numerator => num_roots.push(r),
                Side::Denominator => den_roots.push(r),
            }
        }
        for f in &self.fact {
            let r = ExactRational::from(-f.offset - 1);
            match f.side {
                Side::Numerator => num_roots.push(r),
                Side::Denominator => den_roots.push(r),
            }
        }
        (num_roots, den_roots)
    }
}

/// `R(k) = lead · ∏(k - r_i) / ∏(k - s_j)` with no common roots.
#[derive(Clone, PartialEq, Eq)]
pub struct RatioForm {
    pub lead: ExactRational,
    pub num_roots: Vec<ExactRational>,
    pub den_roots: Vec<ExactRational>,
}

impl RatioForm {
    pub fn new(
        lead: ExactRational,
        mut num_roots: Vec<ExactRational>,
        mut den_roots: Vec<ExactRational>,
    ) -> Self {
        num_roots.sort();
        den_roots.sort();
        let (mut i, mut j) = (0, 0);
        let (mut nr, mut dr) = (Vec::new(), Vec::new());
        while i < num_roots.len() && j < den_roots.len() {
            match num_roots[i].cmp(&den_roots[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => {
                    nr.push(num_roots[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    dr.push(den_roots[j].clone());
                    j += 1;
                }
            }
        }
        nr.extend_from_slice(&num_roots[i..]);
        dr.extend_from_slice(&den_roots[j..]);
        if lead.is_zero() {
            nr.clear();
            dr.clear();
        }
        Self { lead, num_roots: nr, den_roots: dr }
    }

    pub fn numerator(&self) -> Poly {
        Poly::from_roots(&self.lead, &self.num_roots)
    }

    pub fn denominator(&self) -> Poly {
        Poly::from_roots(&ExactRational::one(), &self.den_roots)
    }

    pub fn eval(&self, k: &ExactRational) -> Result<ExactRational> {
        let d = self.denominator().eval(k);
        if d.is_zero() {
            return Err(Error::Pole(format!("ratio at k={k}")));
        }
        Ok(self.numerator().eval(k) / d)
    }

    pub fn eval_as<T: Scalar>(&self, k: i64) -> T {
        let kk = T::from_i64(k);
        let mut v = T::from_rational(&self.lead);
        for r in &self.num_roots {
            v = v * (kk.clone() - T::from_rational(r));
        }
        for s in &self.den_roots {
            v = v / (kk.clone() - T::from_rational(s));
        }
        v
    }

    /// `lim_{k→∞} R(k)`, or `None` when the ratio grows without bound.
    pub fn limit(&self) -> Option<ExactRational> {
        if self.lead.is_zero() || self.num_roots.len() < self.den_roots.len() {
            Some(ExactRational::zero())
        } else if self.num_roots.len() == self.den_roots.len() {
            Some(self.lead.clone())
        } else {
            None
        }
    }

    /// `σ` in `R(k) = L(1 - σ/k + O(k^-2))` for equal degrees.
    pub fn raabe(&self) -> ExactRational {
        let sr: ExactRational = self.num_roots.iter().cloned().sum();
        let ss: ExactRational = self.den_roots.iter().cloned().sum();
        sr - ss
    }

    /// Smallest integer beyond every root (and at least `from`).
    pub fn regular_from(&self, from: i64) -> i64 {
        self.num_roots
            .iter()
            .chain(&self.den_roots)
            .map(|r| num_traits::ToPrimitive::to_i64(&r.floor()).unwrap_or(i64::MAX - 1) + 1)
            .fold(from, i64::max)
    }
}

impl fmt::Debug for RatioForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * prod(k-{:?}) / prod(k-{:?})",
            self.lead, self.num_roots, self.den_roots
        )
    }
}
