//! Rigorous tails for ratios tending to `±1`.
//!
//! With `T_{k+1} = R(k)·T_k` the exact tail ratio `H(k) = Σ_{j>=k} T_j / T_k`
//! satisfies `H(k) = 1 + R(k)·H(k+1)`. A truncated asymptotic solution `h`
//! leaves a residual `ρ(k) = h(k) - R(k)h(k+1) - 1`, and
//! `Σ_{j>=K} T_j = T_K·h(K) - Σ_{j>=K} ρ(j)·T_j`, so bounding `ρ` bounds the error.

use num_traits::{One, Zero};

use super::prepare::{inconclusive, ten_pow_neg, ulps, upper_abs, Prepared};
use crate::error::Result;
use crate::exactnum::{ExactRational, FixedReal};
use crate::hyperterm::Poly;

const ORDERS: [usize; 7] = [6, 10, 14, 20, 28, 40, 56];
const MAX_K: i64 = 1 << 16;

/// Power series coefficients of `P(1/x)x^m / (Q(1/x)x^m)` up to `x^order`.
fn ratio_series(p: &Poly, q: &Poly, order: usize) -> Vec<ExactRational> {
    let m = q.degree().unwrap_or(0);
    let rev = |poly: &Poly| -> Vec<ExactRational> {
        (0..=order)
            .map(|i| {
                if i > m {
                    ExactRational::zero()
                } else {
                    poly.coeffs().get(m - i).cloned().unwrap_or_default()
                }
            })
            .collect()
    };
    let (pn, qn) = (rev(p), rev(q));
    let mut out = vec![ExactRational::zero(); order + 1];
    for i in 0..=order {
        let mut acc = pn[i].clone();
        for j in 1..=i {
            acc -= &(&qn[j] * &out[i - j]);
        }
        out[i] = acc / &qn[0];
    }
    out
}

/// Coefficients of `(1+x)^alpha` up to `x^order`.
fn binomial_series(alpha: i64, order: usize) -> Vec<ExactRational> {
    let mut out = vec![ExactRational::one(); order + 1];
    for i in 1..=order {
        out[i] = &out[i - 1] * &ExactRational::frac(alpha - (i as i64 - 1), i as i64);
    }
    out
}

fn mul_series(a: &[ExactRational], b: &[ExactRational]) -> Vec<ExactRational> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|i| (0..=i).map(|j| &a[j] * &b[i - j]).sum())
        .collect()
}

/// Truncated solution `h = A(k)/k^d` and its residual `ρ = N/D`.
struct Expansion {
    a: Poly,
    d: usize,
    n: Poly,
    den: Poly,
}

impl Expansion {
    /// `J` coefficients of `h(k) = Σ c_j k^{1-j}` (unit limit) or `Σ c_j k^{-j}` (limit `-1`).
    fn new(p: &Poly, q: &Poly, order: usize, alternating: bool) -> Option<Self> {
        let o = usize::from(!alternating);
        let r = ratio_series(p, q, order + 2);
        let g: Vec<Vec<ExactRational>> = (0..order)
            .map(|j| {
                let alpha = if alternating { -(j as i64) } else { 1 - j as i64 };
                let mut v = mul_series(&r, &binomial_series(alpha, order + 2));
                for x in v.iter_mut() {
                    *x = -x.clone();
                }
                v[0] += &ExactRational::one();
                v
            })
            .collect();
        let mut c: Vec<ExactRational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut rhs = if n == 0 { ExactRational::one() } else { ExactRational::zero() };
            for (j, cj) in c.iter().enumerate() {
                rhs -= &(cj * &g[j][n + o - j]);
            }
            let pivot = &g[n][o];
            if pivot.is_zero() {
                return None;
            }
            c.push(rhs / pivot);
        }
        let mut coeffs = vec![ExactRational::zero(); order];
        for (j, cj) in c.into_iter().enumerate() {
            coeffs[order - 1 - j] = cj;
        }
        let a = Poly::new(coeffs);
        let d = order - 1 - o;
        let kd = Poly::monomial(d);
        let k1d = kd.shift(&ExactRational::one());
        let n = a.clone() * q.clone() * k1d.clone()
            - p.clone() * a.shift(&ExactRational::one()) * kd.clone()
            - q.clone() * kd.clone() * k1d.clone();
        let den = q.clone() * kd * k1d;
        Some(Self { a, d, n, den })
    }

    fn h(&self, k: i64) -> ExactRational {
        let kk = ExactRational::from(k);
        self.a.eval(&kk) / kk.pow(self.d as i64).expect("k > 0")
    }

    /// `(C, b - a)` with `|ρ(k)| <= C·k^{a-b}` for all `k >= from`, if the
    /// leading denominator term dominates there.
    fn residual_bound(&self, from: i64) -> Option<(ExactRational, i64)> {
        let Some(a) = self.n.degree() else {
            return Some((ExactRational::zero(), i64::MAX));
        };
        let b = self.den.degree()?;
        let kf = ExactRational::from(from);
        let lead = self.den.lead().abs();
        let lower = &lead + &lead - self.den.abs_sum_scaled(&kf);
        if !lower.is_positive() || b <= a {
            return None;
        }
        Some((self.n.abs_sum_scaled(&kf) / lower, (b - a) as i64))
    }
}

/// Whether `Q(k)·k^d·(k+1)^d` stays within a factor 2 of its leading term on
/// `[from, ∞)`, the precondition of [`Expansion::residual_bound`]. Grows harder with `d`.
fn den_dominates(q: &Poly, d: usize, from: i64) -> bool {
    let kf = ExactRational::from(from);
    let ratio = q.abs_sum_scaled(&kf) / q.lead().abs();
    let growth = (ExactRational::one() + kf.recip().expect("from > 0")).pow(d as i64).expect("nonzero");
    ratio * growth < ExactRational::from(2)
}

pub struct TailResult {
    /// Full series value, error bound included.
    pub value: FixedReal,
    pub k: i64,
    /// Sums through `T_{k-1}` and through `T_k`.
    pub partial_k: FixedReal,
    pub partial_k1: FixedReal,
}

/// Sums directly up to some `K` and adds `T_K·h(K)` with a rigorous remainder
/// bound below `10^-(digits+2)`.
pub fn asymptotic_tail(pr: &Prepared, w: u32, digits: u32, alternating: bool) -> Result<TailResult> {
    let sigma = pr.rf.raabe();
    let expected = if alternating { -ExactRational::one() } else { ExactRational::one() };
    if pr.rf.limit() != Some(expected) {
        return Err(inconclusive("ratio limit is not the expected unit value"));
    }
    let threshold = if alternating { ExactRational::zero() } else { ExactRational::one() };
    if sigma <= threshold {
        return Err(inconclusive(format!("Raabe exponent {sigma} too small for convergence")));
    }
    // |R(k)| <= 1 - s/k with s strictly above the threshold.
    let s = (&sigma + &threshold) / ExactRational::from(2);
    let k = Poly::monomial(1);
    let signed_p = if alternating { -pr.p.clone() } else { pr.p.clone() };
    let raabe_cert = k.clone() * pr.q.clone() - k * signed_p - pr.q.scale(&s);

    let target = ten_pow_neg(digits + 2);
    let mut expansions: Vec<Option<Expansion>> = Vec::new();
    let mut walker = pr.walker(w)?;
    let mut kk = pr.k0.max(16);
    while kk <= MAX_K {
        walker.advance_to(kk);
        if raabe_cert.certified_nonneg_from(&ExactRational::from(kk)) {
            for (i, &order) in ORDERS.iter().enumerate() {
                if !den_dominates(&pr.q, order - 1 - usize::from(!alternating), kk) {
                    break;
                }
                if expansions.len() <= i {
                    expansions.push(Expansion::new(&pr.p, &pr.q, order, alternating));
                }
                let Some(e) = &expansions[i] else { continue };
                let Some((c, gap)) = e.residual_bound(kk) else { continue };
                let kr = ExactRational::from(kk);
                let approx = walker.t.mul_rational(&e.h(kk));
                let err = if gap == i64::MAX {
                    ExactRational::zero()
                } else if alternating {
                    if gap < 2 {
                        continue;
                    }
                    let sum_pow = kr.pow(-gap).expect("k > 0")
                        + kr.pow(1 - gap).expect("k > 0") / ExactRational::from(gap - 1);
                    upper_abs(&walker.t) * c * sum_pow
                } else {
                    let rho = c * kr.pow(-gap).expect("k > 0");
                    if rho >= ExactRational::frac(1, 2) {
                        continue;
                    }
                    &rho * upper_abs(&approx) / (ExactRational::one() - &rho)
                };
                if err < target {
                    let partial_k = walker.partial.clone();
                    let partial_k1 = partial_k.add(&walker.t);
                    let value = partial_k.add(&approx).widen(&ulps(&err, w));
                    return Ok(TailResult { value, k: kk, partial_k, partial_k1 });
                }
            }
        }
        kk *= 2;
    }
    Err(inconclusive(format!("no certified asymptotic tail up to k = {MAX_K}")))
}
