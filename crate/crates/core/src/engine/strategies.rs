use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::asymptotic::{asymptotic_tail, TailResult};
use super::prepare::{check_digits, inconclusive, round_up_micro, ten_pow_neg, ulps, upper_abs, working_digits, Prepared};
use crate::catalog::ConcreteSeries;
use crate::error::Result;
use crate::exactnum::{ExactRational, FixedReal};
use crate::scalar::Scalar;

const MAX_TERMS: i64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Geometric,
    AlternatingAccel,
    AsymptoticTail,
    DirectPartial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ErrorClaim {
    /// The true sum lies within `value ± bound`.
    Rigorous { bound: ExactRational },
    /// Error estimate from the acceleration scheme, cross-checked against a
    /// rigorous evaluation to `crosscheck_digits` digits.
    Heuristic { estimate: ExactRational, crosscheck_digits: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalReport {
    pub value: FixedReal,
    pub strategy: Strategy,
    pub terms_used: u64,
    pub error_claim: ErrorClaim,
}

fn exact_report(x: &ExactRational, w: u32, k: i64, start: i64) -> Result<EvalReport> {
    let value = FixedReal::from_rational(x, w)?;
    Ok(EvalReport {
        error_claim: ErrorClaim::Rigorous { bound: value.radius() },
        value,
        strategy: Strategy::Geometric,
        terms_used: (k - start).max(1) as u64,
    })
}

/// Certified `(K, r*)` with `|R(k)| <= r* < 1` for every `k >= K`.
fn certify_ratio(pr: &Prepared, limit: &ExactRational) -> Result<(i64, ExactRational)> {
    let mut k = pr.k0.max(1);
    for _ in 0..24 {
        let rk = pr.ratio_at(k).abs();
        let peak = if rk > limit.abs() { rk } else { limit.abs() };
        let r = round_up_micro(&(peak * ExactRational::frac(101, 100)));
        if r < ExactRational::one() {
            let rq = pr.q.scale(&r);
            let from = ExactRational::from(k);
            if (rq.clone() - pr.p.clone()).certified_nonneg_from(&from)
                && (rq + pr.p.clone()).certified_nonneg_from(&from)
            {
                return Ok((k, r));
            }
        }
        k *= 2;
    }
    Err(inconclusive("could not certify a ratio bound below 1"))
}

/// Direct summation with the rigorous geometric tail `|T_N|/(1 - r*)`.
pub fn sum_geometric(s: &ConcreteSeries, digits: u32) -> Result<EvalReport> {
    check_digits(digits)?;
    let w = working_digits(digits);
    let pr = Prepared::new(s)?;
    if pr.is_finite() {
        return exact_report(&(&pr.head + &pr.t0), w, pr.k0 + 1, pr.start);
    }
    let limit = pr.rf.limit().ok_or_else(|| inconclusive("term ratio is unbounded"))?;
    if limit.abs() >= ExactRational::one() {
        return Err(inconclusive(format!("ratio limit {limit} is not below 1 in magnitude")));
    }
    let (kc, r) = certify_ratio(&pr, &limit)?;
    let margin = ExactRational::one() - &r;
    let target = ten_pow_neg(digits + 2);
    let mut walker = pr.walker(w)?;
    loop {
        if walker.k >= kc {
            let tail = upper_abs(&walker.t) / &margin;
            if tail < target {
                let value = walker.partial.clone().widen(&ulps(&tail, w));
                return Ok(EvalReport {
                    error_claim: ErrorClaim::Rigorous { bound: value.radius() },
                    value,
                    strategy: Strategy::Geometric,
                    terms_used: (walker.k - pr.start) as u64,
                });
            }
        }
        if walker.k - pr.k0 > MAX_TERMS {
            return Err(inconclusive("geometric tail did not shrink within the term budget"));
        }
        walker.step();
    }
}

/// Rigorous evaluation of a positive unit-ratio series by the asymptotic tail.
pub fn sum_asymptotic(s: &ConcreteSeries, digits: u32) -> Result<EvalReport> {
    check_digits(digits)?;
    let w = working_digits(digits);
    let pr = Prepared::new(s)?;
    if pr.is_finite() {
        return exact_report(&(&pr.head + &pr.t0), w, pr.k0 + 1, pr.start);
    }
    let alternating = pr.rf.limit() == Some(-ExactRational::one());
    let t = asymptotic_tail(&pr, w, digits, alternating)?;
    Ok(EvalReport {
        error_claim: ErrorClaim::Rigorous { bound: t.value.radius() },
        value: t.value,
        strategy: Strategy::AsymptoticTail,
        terms_used: (t.k - pr.start) as u64,
    })
}

/// `(n, weights c_j, d)` of the Chebyshev scheme: `Σ(-1)^j a_j ≈ Σ c_j a_j / d`.
pub fn cvz_weights(n: usize) -> (Vec<ExactRational>, ExactRational) {
    let (mut d_prev, mut d) = (BigInt::one(), BigInt::from(3));
    if n == 0 {
        d = BigInt::one();
    }
    for _ in 1..n {
        let next = &d * 6 - &d_prev;
        d_prev = std::mem::replace(&mut d, next);
    }
    let d = ExactRational::from_integer(d);
    let nn = n as i64;
    let mut b = -ExactRational::one();
    let mut c = -d.clone();
    let mut out = Vec::with_capacity(n);
    for k in 0..nn {
        c = &b - &c;
        out.push(c.clone());
        b = b * ExactRational::from((k + nn) * (k - nn)) / (ExactRational::frac(2 * k + 1, 2) * ExactRational::from(k + 1));
    }
    (out, d)
}

/// Accelerated length for `digits` decimals when the first term has magnitude `10^log10_a0`.
pub fn cvz_len(digits: u32, log10_a0: f64) -> usize {
    let scale = 2f64.log10() + log10_a0.max(0.0);
    ((digits as f64 + 2.0 + scale) / (3.0 + 8f64.sqrt()).log10()).ceil() as usize
}

/// First `k >= k0` from which `|T_k|` is certified non-increasing.
fn certify_decreasing(pr: &Prepared) -> Result<i64> {
    let mut k = pr.k0;
    let sum = pr.q.clone() + pr.p.clone();
    for _ in 0..16 {
        if sum.certified_nonneg_from(&ExactRational::from(k)) {
            return Ok(k);
        }
        k = (2 * k).max(k + 1);
    }
    Err(inconclusive("term magnitudes are not eventually decreasing"))
}

/// Correct decimals of `a` as an approximation of `b` given `b`'s enclosure.
fn agreement_digits(a: &FixedReal, b: &FixedReal) -> u32 {
    let (gap, w) = a.max_abs_diff(b);
    if gap.is_zero() {
        return w;
    }
    let len = gap.to_string().len() as u32;
    w.saturating_sub(len)
}

fn within_hull(x: &FixedReal, lo: &FixedReal, hi: &FixedReal) -> bool {
    let (a, b) = if lo.center() <= hi.center() { (lo, hi) } else { (hi, lo) };
    let xc = x.center();
    xc >= a.center() - a.radius() - x.radius() && xc <= b.center() + b.radius() + x.radius()
}

/// Chebyshev-weighted acceleration for `R(k) → -1`, with a mandatory
/// cross-check against the rigorous asymptotic-tail evaluation and the
/// alternating bracket `[S_K, S_{K+1}]`.
pub fn sum_alternating_accel(s: &ConcreteSeries, digits: u32) -> Result<EvalReport> {
    check_digits(digits)?;
    let w = working_digits(digits);
    let pr = Prepared::new(s)?;
    if pr.is_finite() {
        return exact_report(&(&pr.head + &pr.t0), w, pr.k0 + 1, pr.start);
    }
    if pr.rf.limit() != Some(-ExactRational::one()) {
        return Err(inconclusive("term ratio does not tend to -1"));
    }
    let k1 = certify_decreasing(&pr)?;
    let mut walker = pr.walker(w)?;
    walker.advance_to(k1);
    let head_value = walker.partial.clone();
    let a0 = upper_abs(&walker.t);
    let n = cvz_len(digits, a0.log10_abs());
    let (weights, d) = cvz_weights(n);
    let mut acc = FixedReal::zero(w);
    let mut sign_flip = false;
    for c in &weights {
        let a = if sign_flip { walker.t.neg() } else { walker.t.clone() };
        acc = acc.add(&a.mul_rational(c));
        sign_flip = !sign_flip;
        walker.step();
    }
    let estimate = ExactRational::from(2) * a0 / &d;
    let value = head_value.add(&acc.mul_rational(&d.recip()?)).widen(&ulps(&estimate, w));

    let TailResult { value: rigorous, partial_k, partial_k1, .. } = asymptotic_tail(&pr, w, digits.div_ceil(5) + 4, true)?;
    let agreed = agreement_digits(&value, &rigorous).min(digits + 2);
    let needed = digits.div_ceil(5);
    if agreed < needed {
        return Err(inconclusive(format!(
            "accelerated value {} agrees with the asymptotic cross-check {} to only {agreed} digits",
            value.with_digits(digits + 2),
            rigorous.with_digits(digits + 2)
        )));
    }
    if !within_hull(&value, &partial_k, &partial_k1) {
        return Err(inconclusive("accelerated value escapes the alternating bracket"));
    }
    Ok(EvalReport {
        value,
        strategy: Strategy::AlternatingAccel,
        terms_used: (k1 - pr.start) as u64 + n as u64,
        error_claim: ErrorClaim::Heuristic { estimate, crosscheck_digits: agreed },
    })
}

/// Picks the strategy from the limit of the term ratio.
pub fn evaluate(s: &ConcreteSeries, digits: u32) -> Result<EvalReport> {
    check_digits(digits)?;
    let rf = s.term.ratio_form();
    match rf.limit() {
        None => Err(inconclusive("term ratio is unbounded: divergent")),
        Some(l) if l.abs() < ExactRational::one() => sum_geometric(s, digits),
        Some(l) if l == -ExactRational::one() => sum_alternating_accel(s, digits),
        Some(l) if l.is_one() => sum_asymptotic(s, digits),
        Some(l) => Err(inconclusive(format!("ratio limit {l} exceeds 1 in magnitude"))),
    }
}

/// `prefactor·(correction + Σ_{start <= k < start+n} t_k)` in any scalar type,
/// stepping with the reduced ratio past the regular index.
pub fn direct_partial<T: Scalar>(s: &ConcreteSeries, n: u64) -> Result<T> {
    let start = s.term.start_index as i64;
    let end = start + n as i64;
    let k0 = s.term.regular_index().min(end);
    let rf = s.term.ratio_form();
    let mut acc = T::from_rational(&s.correction);
    for k in start..k0 {
        acc = acc + s.term.term_value_as::<T>(k)?;
    }
    if k0 < end {
        let mut t: T = s.term.term_value_as(k0)?;
        for k in k0..end {
            acc = acc + t.clone();
            t = t * rf.eval_as::<T>(k);
        }
    }
    Ok(acc * T::from_rational(&s.prefactor))
}

/// Plain partial sum as an [`EvalReport`]; the estimate is the size of the last term.
pub fn sum_direct(s: &ConcreteSeries, n: u64, digits: u32) -> Result<EvalReport> {
    check_digits(digits)?;
    let w = working_digits(digits);
    let pr = Prepared::new(s)?;
    let mut walker = pr.walker(w)?;
    let end = pr.start + n as i64;
    walker.advance_to(end.max(pr.k0));
    let mut value = walker.partial.clone();
    if end < pr.k0 {
        let mut exact = s.correction.clone();
        for k in pr.start..end {
            exact += &s.term.term_value(k)?;
        }
        value = FixedReal::from_rational(&(exact * &s.prefactor), w)?;
    }
    Ok(EvalReport {
        value,
        strategy: Strategy::DirectPartial,
        terms_used: n,
        error_claim: ErrorClaim::Heuristic { estimate: upper_abs(&walker.t), crosscheck_digits: 0 },
    })
}
