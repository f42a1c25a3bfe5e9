//! The printed example series, stored literally with their printed start index.

use num_traits::{One, Zero};

use super::family::{ClosedFormSpec, ConcreteSeries, QuadQ};
use crate::error::{Error, Result};
use crate::exactnum::ExactRational;
use crate::hyperterm::{double_factorial_odd, factorial, pochhammer, FactFactor, LinearPoly, PochFactor, Side, TermSpec};

/// One factor of a printed summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiteralFactor {
    /// `((c·k + d)!)^power`
    Fact { c: i64, d: i64, power: u32, side: Side },
    /// `(c·k + d)!!` with `c` even and `d` odd
    OddDoubleFact { c: i64, d: i64, side: Side },
    /// `((base)_k)^power`
    Poch { base: ExactRational, power: u32, side: Side },
    /// `alpha·k + beta`
    Linear { alpha: i64, beta: i64, side: Side },
    /// `base^k`
    Power { base: ExactRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenSeries {
    pub label: &'static str,
    pub caption: &'static str,
    /// Family and parameters the example is drawn from, if any.
    pub source: Option<(&'static str, Vec<i64>)>,
    pub start: u64,
    pub factors: Vec<LiteralFactor>,
    pub lhs: ClosedFormSpec,
}

fn side_mul(acc: &mut ExactRational, v: &ExactRational, side: Side) -> Result<()> {
    match side {
        Side::Numerator => *acc *= v,
        Side::Denominator => *acc = acc.checked_div(v)?,
    }
    Ok(())
}

impl GoldenSeries {
    /// The summand evaluated straight from the printed factors.
    pub fn literal_term(&self, k: u64) -> Result<ExactRational> {
        let kk = k as i64;
        let mut acc = ExactRational::one();
        for f in &self.factors {
            match f {
                LiteralFactor::Fact { c, d, power, side } => {
                    let n = c * kk + d;
                    if n < 0 {
                        return Err(Error::Pole(format!("({c}k+{d})! at k={k}")));
                    }
                    let v = ExactRational::from(factorial(n as u64)).pow(*power as i64)?;
                    side_mul(&mut acc, &v, *side)?;
                }
                LiteralFactor::OddDoubleFact { c, d, side } => {
                    let n = c * kk + d;
                    if n < 0 || n % 2 == 0 {
                        return Err(Error::InvalidTerm(format!("({c}k+{d})!! at k={k}")));
                    }
                    let v = ExactRational::from(double_factorial_odd(((n - 1) / 2) as u64));
                    side_mul(&mut acc, &v, *side)?;
                }
                LiteralFactor::Poch { base, power, side } => {
                    let v = pochhammer(base, kk)?.pow(*power as i64)?;
                    side_mul(&mut acc, &v, *side)?;
                }
                LiteralFactor::Linear { alpha, beta, side } => {
                    side_mul(&mut acc, &ExactRational::from(alpha * kk + beta), *side)?;
                }
                LiteralFactor::Power { base } => acc *= &base.pow(kk)?,
            }
        }
        Ok(acc)
    }

    /// Normal form: `(ck+d)!` is split by Gauss multiplication into `d!·c^{ck}·∏((d+1+i)/c)_k`.
    pub fn term_spec(&self) -> Result<TermSpec> {
        let mut t = TermSpec { start_index: self.start, ..TermSpec::default() };
        for f in &self.factors {
            match f {
                LiteralFactor::Fact { c, d, power, side } => {
                    for _ in 0..*power {
                        push_fact(&mut t, *c, *d, *side)?;
                    }
                }
                LiteralFactor::OddDoubleFact { c, d, side } => {
                    if c % 2 != 0 || d % 2 == 0 || *c <= 0 {
                        return Err(Error::InvalidTerm(format!("({c}k+{d})!! is not odd-indexed")));
                    }
                    // (2j+1)!! = (2j+1)! / (2^j j!), j = (c/2)k + (d-1)/2
                    let (c2, d2) = (c / 2, (d - 1) / 2);
                    push_fact(&mut t, *c, *d, *side)?;
                    let inv = flip(*side);
                    push_fact(&mut t, c2, d2, inv)?;
                    let two = ExactRational::from(2);
                    apply(&mut t.geo_base, &two.pow(c2)?, inv)?;
                    apply(&mut t.scale, &two.pow(d2)?, inv)?;
                }
                LiteralFactor::Poch { base, power, side } => {
                    for _ in 0..*power {
                        t.poch.push(PochFactor { base: base.clone(), offset: 0, side: *side });
                    }
                }
                LiteralFactor::Linear { alpha, beta, side } => {
                    let p = LinearPoly::int(*alpha, *beta);
                    match side {
                        Side::Numerator => t.poly_num.push(p),
                        Side::Denominator => t.poly_den.push(p),
                    }
                }
                LiteralFactor::Power { base } => t.geo_base *= base,
            }
        }
        t.validate()?;
        Ok(t)
    }

    pub fn lhs_constant(&self) -> Result<crate::quadfield::ClosedFormConstant> {
        self.lhs.evaluate(&[])
    }

    /// The example as a series with unit prefactor.
    pub fn to_series(&self) -> Result<ConcreteSeries> {
        Ok(ConcreteSeries {
            term: self.term_spec()?,
            lhs: self.lhs_constant()?,
            prefactor: ExactRational::one(),
            correction: ExactRational::zero(),
            family_id: self.label.to_string(),
            params: Vec::new(),
        })
    }
}

fn flip(side: Side) -> Side {
    match side {
        Side::Numerator => Side::Denominator,
        Side::Denominator => Side::Numerator,
    }
}

fn apply(target: &mut ExactRational, v: &ExactRational, side: Side) -> Result<()> {
    side_mul(target, v, side)
}

fn push_fact(t: &mut TermSpec, c: i64, d: i64, side: Side) -> Result<()> {
    if c <= 0 {
        return Err(Error::InvalidTerm(format!("factorial slope {c}")));
    }
    if c == 1 {
        t.fact.push(FactFactor { offset: d, side });
        return Ok(());
    }
    if d < 0 {
        return Err(Error::InvalidTerm(format!("({c}k{d})! with negative offset")));
    }
    apply(&mut t.scale, &ExactRational::from(factorial(d as u64)), side)?;
    apply(&mut t.geo_base, &ExactRational::from(c).pow(c)?, side)?;
    for i in 0..c {
        t.poch.push(PochFactor { base: ExactRational::frac(d + 1 + i, c), offset: 0, side });
    }
    Ok(())
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::frac(n, d)
}

fn quad(a: i64, b: i64, c: i64, d: i64) -> QuadQ {
    QuadQ::new(a.into(), b.into(), c.into(), d.into())
}

use LiteralFactor as L;
use Side::{Denominator as D, Numerator as N};

fn fact(c: i64, d: i64, side: Side) -> L {
    L::Fact { c, d, power: 1, side }
}

fn fact_pow(c: i64, d: i64, power: u32, side: Side) -> L {
    L::Fact { c, d, power, side }
}

fn dfact(c: i64, d: i64) -> L {
    L::OddDoubleFact { c, d, side: D }
}

fn poch(base: ExactRational, side: Side) -> L {
    L::Poch { base, power: 1, side }
}

fn lin(alpha: i64, beta: i64) -> L {
    L::Linear { alpha, beta, side: N }
}

fn quarter() -> L {
    L::Power { base: q(1, 4) }
}

/// `(1)_k(a)_k(b)_k / ((3/2)_k(c)_k(d)_k) · (3k+β)/4^k`
fn quarter_series(a: ExactRational, b: ExactRational, c: ExactRational, d: ExactRational, beta: i64) -> Vec<L> {
    vec![
        poch(q(1, 1), N),
        poch(a, N),
        poch(b, N),
        poch(q(3, 2), D),
        poch(c, D),
        poch(d, D),
        lin(3, beta),
        quarter(),
    ]
}

fn pi_over(num_scale: i64, num: QuadQ, den_scale: i64, den: QuadQ) -> ClosedFormSpec {
    ClosedFormSpec::new(num_scale, num, den_scale, den, 1)
}

pub(super) fn all_goldens() -> Vec<GoldenSeries> {
    let one = quad(1, 0, 0, 0);
    let r3 = quad(0, 0, 1, 0);
    let two_minus_r3 = quad(2, 0, -1, 0);
    let two_plus_r3 = quad(2, 0, 1, 0);
    let g = |label, caption, source: Option<(&'static str, Vec<i64>)>, start, factors, lhs| GoldenSeries {
        label,
        caption,
        source,
        start,
        factors,
        lhs,
    };
    vec![
        g("known-a", "classical", Some(("thm-2.1", vec![0, 0])), 0, vec![fact(1, 0, N), dfact(2, 1)], pi_over(1, one.clone(), 2, one.clone())),
        g("known-b", "classical", Some(("thm-2.3", vec![1, 1, 0])), 0, vec![fact_pow(1, 0, 2, N), fact(2, 1, D)], pi_over(2, one.clone(), 3, r3.clone())),
        g("thm-2.1/ex-1", "m=1, n=0", Some(("thm-2.1", vec![1, 0])), 1, vec![fact(1, 1, N), dfact(2, 1)], pi_over(1, one.clone(), 2, one.clone())),
        g("thm-2.1/ex-2", "m=2, n=0", Some(("thm-2.1", vec![2, 0])), 2, vec![fact(1, 2, N), dfact(2, 1)], pi_over(3, one.clone(), 2, one.clone())),
        g("thm-2.2/ex-1", "m=n=1, p=0", Some(("thm-2.2", vec![1, 1, 0])), 0, vec![fact(2, 0, N), dfact(4, 3), lin(3, 2)], pi_over(1, one.clone(), 4, one.clone())),
        g("thm-2.2/ex-2", "m=2, n=p=1", Some(("thm-2.2", vec![2, 1, 1])), 1, vec![fact(2, 0, N), dfact(4, 1), lin(3, 1)], pi_over(1, one.clone(), 4, one.clone())),
        g(
            "chu-6f5-limit",
            "surprising series",
            None,
            0,
            vec![fact(1, 0, N), fact(2, 0, N), fact(3, 2, D), lin(5, 3), L::Power { base: q(1, 2) }],
            pi_over(1, one.clone(), 2, one.clone()),
        ),
        g("thm-2.3/ex-1", "m=2, n=p=1", Some(("thm-2.3", vec![2, 1, 1])), 1, vec![fact_pow(1, 0, 2, N), fact(2, 1, D), lin(3, 2)], pi_over(2, one.clone(), 3, r3.clone())),
        g(
            "thm-2.3/ex-2",
            "m=3, n=2, p=1",
            Some(("thm-2.3", vec![3, 2, 1])),
            2,
            vec![fact_pow(1, 0, 2, N), fact(2, 1, D), lin(3, 1), lin(1, 0)],
            pi_over(4, one.clone(), 9, r3.clone()),
        ),
        g("thm-2.4/ex-1", "m=n=1, p=0", Some(("thm-2.4", vec![1, 1, 0])), 0, quarter_series(q(1, 3), q(5, 3), q(7, 6), q(11, 6), 2), pi_over(5, one.clone(), 4, r3.clone())),
        g("thm-2.4/ex-2", "m=2, n=p=1", Some(("thm-2.4", vec![2, 1, 1])), 1, quarter_series(q(2, 3), q(4, 3), q(5, 6), q(7, 6), 1), pi_over(1, one.clone(), 2, r3.clone())),
        g(
            "thm-2.5/ex-1",
            "m=n=1, p=0",
            Some(("thm-2.5", vec![1, 1, 0])),
            0,
            quarter_series(q(1, 6), q(11, 6), q(13, 12), q(23, 12), 2),
            pi_over(11, one.clone(), 60, two_minus_r3.clone()),
        ),
        g(
            "thm-2.5/ex-2",
            "m=2, n=p=1",
            Some(("thm-2.5", vec![2, 1, 1])),
            1,
            quarter_series(q(5, 6), q(7, 6), q(11, 12), q(13, 12), 1),
            pi_over(1, one.clone(), 12, two_minus_r3),
        ),
        g(
            "thm-2.6/ex-1",
            "m=n=1, p=0",
            Some(("thm-2.6", vec![1, 1, 0])),
            0,
            quarter_series(q(5, 6), q(7, 6), q(17, 12), q(19, 12), 2),
            pi_over(35, one.clone(), 12, two_plus_r3.clone()),
        ),
        g(
            "thm-2.6/ex-2",
            "m=2, n=p=1 (caption names thm-2.5)",
            Some(("thm-2.6", vec![2, 1, 1])),
            1,
            quarter_series(q(1, 6), q(11, 6), q(7, 12), q(17, 12), 1),
            pi_over(5, one.clone(), 12, two_plus_r3),
        ),
        g(
            "thm-2.7/ex-1",
            "m=n=p=0",
            Some(("thm-2.7", vec![0, 0, 0])),
            0,
            vec![
                L::Poch { base: q(1, 1), power: 3, side: N },
                L::Poch { base: q(3, 2), power: 3, side: D },
                lin(3, 2),
                quarter(),
            ],
            ClosedFormSpec::new(1, one.clone(), 4, one.clone(), 2),
        ),
        g(
            "thm-2.7/ex-2",
            "m=2, n=p=1",
            Some(("thm-2.7", vec![2, 1, 1])),
            2,
            vec![
                L::Poch { base: q(1, 1), power: 3, side: N },
                L::Poch { base: q(1, 2), power: 2, side: D },
                poch(q(3, 2), D),
                lin(1, 0),
                quarter(),
            ],
            ClosedFormSpec::new(1, one.clone(), 12, one, 2),
        ),
    ]
}

/// Exact value of `Σ_{k<n}` of the literal summand from its start index.
pub fn literal_partial_sum(g: &GoldenSeries, n: u64) -> Result<ExactRational> {
    (g.start..g.start + n).try_fold(ExactRational::zero(), |acc, k| Ok(acc + g.literal_term(k)?))
}
