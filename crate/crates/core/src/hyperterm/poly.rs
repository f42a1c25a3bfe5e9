use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactnum::ExactRational;

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<ExactRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    /// `k - r`
    pub fn linear_root(r: &ExactRational) -> Self {
        Self::new(vec![-r.clone(), ExactRational::one()])
    }

    /// `lead · ∏ (k - r_i)`
    pub fn from_roots(lead: &ExactRational, roots: &[ExactRational]) -> Self {
        roots
            .iter()
            .fold(Self::constant(lead.clone()), |acc, r| acc * Self::linear_root(r))
    }

    /// `k^n`
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![ExactRational::zero(); n + 1];
        c[n] = ExactRational::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> ExactRational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, k: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_f64(&self, k: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * k + c.to_f64())
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `p(k + h)` by repeated synthetic division.
    pub fn shift(&self, h: &ExactRational) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * h;
                c[j] += &t;
            }
        }
        Self::new(c)
    }

    /// Sufficient test for `p(k) >= 0` on `[from, ∞)`: every coefficient of
    /// `p(k + from)` is non-negative.
    pub fn certified_nonneg_from(&self, from: &ExactRational) -> bool {
        self.shift(from).coeffs.iter().all(|c| !c.is_negative())
    }

    /// Upper bound on `|p(k)| / k^deg` valid for all `k >= from > 0`.
    pub fn abs_sum_scaled(&self, from: &ExactRational) -> ExactRational {
        let d = match self.degree() {
            Some(d) => d as i64,
            None => return ExactRational::zero(),
        };
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.abs() * from.pow(i as i64 - d).expect("from > 0"))
            .sum()
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, r: Poly) -> Poly {
        let n = self.coeffs.len().max(r.coeffs.len());
        let z = ExactRational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + r.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, r: Poly) -> Poly {
        self + (-r)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, r: Poly) -> Poly {
        if self.is_zero() || r.is_zero() {
            return Poly::default();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + r.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in r.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] += &t;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})k^{i}"))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> ExactRational {
        ExactRational::from(v)
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = Poly::new(vec![q(3), q(-2), q(0), q(5)]);
        let s = p.shift(&q(4));
        for k in -3..4 {
            assert_eq!(s.eval(&q(k)), p.eval(&q(k + 4)));
        }
    }

    #[test]
    fn roots_and_product() {
        let p = Poly::from_roots(&q(2), &[q(1), q(-3)]);
        assert_eq!(p, Poly::new(vec![q(-6), q(4), q(2)]));
        assert!(p.eval(&q(1)).is_zero());
    }

    #[test]
    fn nonneg_certificate() {
        // (k-2)(k-3) is positive beyond 3 but not from 2.5
        let p = Poly::from_roots(&q(1), &[q(2), q(3)]);
        assert!(p.certified_nonneg_from(&q(3)));
        assert!(!p.certified_nonneg_from(&ExactRational::frac(5, 2)));
    }
}
