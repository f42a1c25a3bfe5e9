use num_traits::{One, Zero};

use super::linear::{LinearForm, PARAM_NAMES};
use crate::error::{Error, Result, Violation};
use crate::exactnum::ExactRational;
use crate::hyperterm::{factorial, pochhammer, FactFactor, LinearPoly, PochFactor, Side, TermSpec};
use crate::quadfield::ClosedFormConstant;

pub use crate::QuadQ;

/// One factor of a family's summand, indices written relative to `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SummandFactor {
    /// `(base)_{k+offset}`
    Poch { base: ExactRational, offset: LinearForm, side: Side },
    /// `(k+offset)!`
    Fact { offset: LinearForm, side: Side },
    /// `(2k+2·offset+1)!!`
    OddDoubleFact { offset: LinearForm, side: Side },
    /// `alpha·k + beta`
    Linear { alpha: i64, beta: LinearForm, side: Side },
    /// `base^{k+offset}`
    Power { base: ExactRational, offset: LinearForm },
}

/// One factor of a family's constant prefactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrefactorFactor {
    /// `(base)_{index}`
    Poch { base: ExactRational, index: LinearForm, side: Side },
    /// `(index)!`
    Fact { index: LinearForm, side: Side },
}

/// `num_scale·num / (den_scale·den) · base^exp · π^pi_power`, kept in printed shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormSpec {
    pub num_scale: ExactRational,
    pub num: QuadQ,
    pub den_scale: ExactRational,
    pub den: QuadQ,
    pub pi_power: i32,
    /// Optional `base^{exp}` with a parameter-dependent exponent.
    pub power: Option<(ExactRational, LinearForm)>,
}

impl ClosedFormSpec {
    pub fn new(num_scale: i64, num: QuadQ, den_scale: i64, den: QuadQ, pi_power: i32) -> Self {
        Self {
            num_scale: num_scale.into(),
            num,
            den_scale: den_scale.into(),
            den,
            pi_power,
            power: None,
        }
    }

    pub fn evaluate(&self, params: &[i64]) -> Result<ClosedFormConstant> {
        let inv = self.den.scale(&self.den_scale).inverse()?;
        let mut coeff = self.num.scale(&self.num_scale) * inv;
        if let Some((base, exp)) = &self.power {
            coeff = coeff.scale(&base.pow(exp.eval(params))?);
        }
        ClosedFormConstant::new(coeff, self.pi_power)
    }
}

/// A parameterized identity `lhs = prefactor · Σ_{k≥0} summand(k)`.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family_id: &'static str,
    pub param_names: Vec<char>,
    /// Each form must be `>= 0`.
    pub constraints: Vec<LinearForm>,
    pub lhs: ClosedFormSpec,
    pub prefactor: Vec<PrefactorFactor>,
    pub summand: Vec<SummandFactor>,
}

/// Summary row for listings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySummary {
    pub family_id: &'static str,
    pub param_names: Vec<char>,
    pub constraints: Vec<String>,
    pub pi_power: i32,
}

/// A fully instantiated identity `lhs = prefactor · (correction + Σ_{k≥start} term(k))`.
///
/// `correction` is nonzero only where a summand factor pair such as
/// `(3k+2m)/(k+m)` is `0/0` at one index and must take its value from the
/// parametric limit rather than from the reduced ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteSeries {
    pub term: TermSpec,
    pub lhs: ClosedFormConstant,
    pub prefactor: ExactRational,
    pub correction: ExactRational,
    pub family_id: String,
    pub params: Vec<i64>,
}

impl FamilySpec {
    pub fn arity(&self) -> usize {
        self.param_names.len()
    }

    pub fn summary(&self) -> FamilySummary {
        FamilySummary {
            family_id: self.family_id,
            param_names: self.param_names.clone(),
            constraints: self.constraints.iter().map(|c| c.to_string()).collect(),
            pi_power: self.lhs.pi_power,
        }
    }

    fn check_arity(&self, params: &[i64]) -> Result<()> {
        if params.len() != self.arity() {
            return Err(Error::ParamCount {
                family: self.family_id.to_string(),
                expected: self.arity(),
                got: params.len(),
            });
        }
        Ok(())
    }

    pub fn violations(&self, params: &[i64]) -> Result<Vec<Violation>> {
        self.check_arity(params)?;
        Ok(self
            .constraints
            .iter()
            .filter_map(|c| {
                let v = c.eval(params);
                (v < 0).then(|| Violation { form: c.to_string(), value: v })
            })
            .collect())
    }

    pub fn check_constraints(&self, params: &[i64]) -> Result<()> {
        let v = self.violations(params)?;
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::ConstraintViolation(v))
        }
    }

    fn prefactor_value(&self, params: &[i64]) -> Result<ExactRational> {
        let mut acc = ExactRational::one();
        for f in &self.prefactor {
            let (v, side) = match f {
                PrefactorFactor::Poch { base, index, side } => {
                    let n = index.eval(params);
                    let v = pochhammer(base, n).map_err(|_| {
                        Error::PoleAtInstantiation(format!("({base})_{{{index}}} with {index} = {n}"))
                    })?;
                    (v, *side)
                }
                PrefactorFactor::Fact { index, side } => {
                    let n = index.eval(params);
                    if n < 0 {
                        return Err(Error::PoleAtInstantiation(format!("({index})! with {index} = {n}")));
                    }
                    (ExactRational::from(factorial(n as u64)), *side)
                }
            };
            match side {
                Side::Numerator => acc *= &v,
                Side::Denominator => {
                    acc = acc.checked_div(&v).map_err(|_| {
                        Error::PoleAtInstantiation(format!("prefactor denominator {f:?} vanishes"))
                    })?
                }
            }
        }
        if acc.is_zero() {
            return Err(Error::PoleAtInstantiation("prefactor vanishes".into()));
        }
        Ok(acc)
    }

    /// Builds the concrete series at `params` (constraints already checked
    /// by [`instantiate`](Self::instantiate)).
    fn build(&self, params: &[i64]) -> Result<ConcreteSeries> {
        let mut term = TermSpec::default();
        let two = ExactRational::from(2);
        let mut lin_num: Vec<(i64, LinearForm)> = Vec::new();
        let mut lin_den: Vec<(i64, LinearForm)> = Vec::new();
        for f in &self.summand {
            match f {
                SummandFactor::Poch { base, offset, side } => term.poch.push(PochFactor {
                    base: base.clone(),
                    offset: offset.eval(params),
                    side: *side,
                }),
                SummandFactor::Fact { offset, side } => term.fact.push(FactFactor {
                    offset: offset.eval(params),
                    side: *side,
                }),
                SummandFactor::OddDoubleFact { offset, side } => {
                    // (2j+1)!! = 2^j (3/2)_j
                    let o = offset.eval(params);
                    term.poch.push(PochFactor { base: ExactRational::frac(3, 2), offset: o, side: *side });
                    let p = two.pow(o)?;
                    match side {
                        Side::Numerator => {
                            term.geo_base *= &two;
                            term.scale *= &p;
                        }
                        Side::Denominator => {
                            term.geo_base = &term.geo_base / &two;
                            term.scale = &term.scale / &p;
                        }
                    }
                }
                SummandFactor::Linear { alpha, beta, side } => match side {
                    Side::Numerator => lin_num.push((*alpha, *beta)),
                    Side::Denominator => lin_den.push((*alpha, *beta)),
                },
                SummandFactor::Power { base, offset } => {
                    term.geo_base *= base;
                    term.scale *= &base.pow(offset.eval(params))?;
                }
            }
        }

        // 0/0 pairs at an integer index: keep the reduced ratio for every k
        // and patch the single index with the parametric limit.
        let mut correction_ratio: Option<(i64, ExactRational, ExactRational)> = None;
        let mut i = 0;
        while i < lin_den.len() {
            let (a, form) = lin_den[i];
            let beta = form.eval(params);
            let zero_at = (a != 0 && beta % a == 0).then(|| -beta / a).filter(|&k| k >= 0);
            let Some(kstar) = zero_at else {
                i += 1;
                continue;
            };
            let partner = lin_num.iter().position(|&(a2, f2)| {
                a2 != 0 && a2 * kstar + f2.eval(params) == 0 && f2.param_ratio(&form).is_some()
            });
            let Some(j) = partner else {
                return Err(Error::PoleAtInstantiation(format!(
                    "{} vanishes at k={kstar}",
                    form.with_k(a)
                )));
            };
            let (a2, f2) = lin_num.remove(j);
            lin_den.remove(i);
            let (ln, ld) = f2.param_ratio(&form).expect("checked above");
            let reduced = ExactRational::frac(a2, a);
            let limit = ExactRational::frac(ln, ld);
            term.scale *= &reduced;
            if correction_ratio.is_some() {
                return Err(Error::Unsupported("more than one removable singularity".into()));
            }
            correction_ratio = Some((kstar, reduced, limit));
        }
        for (a, f) in lin_num {
            term.poly_num.push(LinearPoly::new(a, f.eval(params).into()));
        }
        for (a, f) in lin_den {
            term.poly_den.push(LinearPoly::new(a, f.eval(params).into()));
        }
        term.validate()?;

        let correction = match correction_ratio {
            Some((kstar, reduced, limit)) if limit != reduced => {
                let t = term.term_value(kstar)?;
                (limit / reduced - ExactRational::one()) * t
            }
            _ => ExactRational::zero(),
        };

        Ok(ConcreteSeries {
            term,
            lhs: self.lhs.evaluate(params)?,
            prefactor: self.prefactor_value(params)?,
            correction,
            family_id: self.family_id.to_string(),
            params: params.to_vec(),
        })
    }

    pub fn instantiate(&self, params: &[i64]) -> Result<ConcreteSeries> {
        self.check_constraints(params)?;
        self.build(params)
    }

    /// All constraint-passing tuples with `max|param| <= bound`, in lexicographic order.
    pub fn feasible_tuples(&self, bound: i64) -> Vec<Vec<i64>> {
        if bound < 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = vec![-bound; self.arity()];
        loop {
            if self.violations(&cur).map(|v| v.is_empty()).unwrap_or(false) {
                out.push(cur.clone());
            }
            let mut idx = cur.len();
            loop {
                if idx == 0 {
                    return out;
                }
                idx -= 1;
                if cur[idx] < bound {
                    cur[idx] += 1;
                    for c in cur.iter_mut().skip(idx + 1) {
                        *c = -bound;
                    }
                    break;
                }
            }
        }
    }

    pub fn param_list(&self) -> String {
        self.param_names.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl ConcreteSeries {
    /// `prefactor · (correction + Σ term)` expressed as one factor on the sum.
    pub fn total_scale(&self) -> ExactRational {
        &self.prefactor * &self.term.scale
    }
}

pub(super) fn check_param_names(names: &[char]) -> bool {
    names.iter().zip(PARAM_NAMES).all(|(a, b)| *a == b)
}
