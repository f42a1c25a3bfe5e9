use num_traits::{One, Zero};
use serde::Serialize;

use super::pochhammer::gamma_quotient_reduce;
use crate::error::{Error, Result};
use crate::exactnum::ExactRational;

/// Exact value of a terminating `pFq(num; den; z)`. The series stops after
/// the index set by the numerator parameter in `{0,-1,-2,...}` of least
/// absolute value.
pub fn pfq_terminating(
    num_params: &[ExactRational],
    den_params: &[ExactRational],
    z: &ExactRational,
) -> Result<ExactRational> {
    let last = num_params
        .iter()
        .filter_map(|a| a.to_i64_exact().filter(|&v| v <= 0))
        .map(|v| -v)
        .min()
        .ok_or(Error::NonTerminating)?;
    for b in den_params {
        if let Some(v) = b.to_i64_exact() {
            if v <= 0 && -v < last {
                return Err(Error::Pole(format!(
                    "denominator parameter {b} reached before termination at k={last}"
                )));
            }
        }
    }
    let mut sum = ExactRational::zero();
    let mut t = ExactRational::one();
    for k in 0..=last {
        sum += &t;
        if k == last {
            break;
        }
        let kq = ExactRational::from(k);
        for a in num_params {
            t *= &(a + &kq);
        }
        for b in den_params {
            t = t / (b + &kq);
        }
        t = t * z / ExactRational::from(k + 1);
    }
    Ok(sum)
}

/// Outcome of one exact identity evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum IdentityOutcome {
    Equal { value: String },
    Mismatch { lhs: String, rhs: String },
    /// Parameters excluded because a side hits a pole or the proviso fails.
    Skipped { reason: String },
}

impl IdentityOutcome {
    fn compare(lhs: Result<ExactRational>, rhs: Result<ExactRational>) -> Self {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => IdentityOutcome::Equal { value: l.to_string() },
            (Ok(l), Ok(r)) => IdentityOutcome::Mismatch { lhs: l.to_string(), rhs: r.to_string() },
            (Err(e), _) | (_, Err(e)) => IdentityOutcome::Skipped { reason: e.to_string() },
        }
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self, IdentityOutcome::Mismatch { .. })
    }
}

fn half() -> ExactRational {
    ExactRational::frac(1, 2)
}

/// Dougall's ₅F₄ at `d = -s`: both sides exactly.
pub fn dougall_sides(
    a: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
    s: u32,
) -> (Result<ExactRational>, Result<ExactRational>) {
    let one = ExactRational::one();
    let s_q = ExactRational::from(s as i64);
    let d = -s_q.clone();
    let a_half = a / &ExactRational::from(2);
    let lhs = pfq_terminating(
        &[a.clone(), &one + &a_half, b.clone(), c.clone(), d.clone()],
        &[
            a_half.clone(),
            &one + a - b,
            &one + a - c,
            &one + a - &d,
        ],
        &one,
    );
    let s = s as i64;
    let rhs = gamma_quotient_reduce(&[
        (&one + a, s),
        (&one + a - b - c, s),
        (&one + a - b + &s_q, -s),
        (&one + a - c + &s_q, -s),
    ]);
    (lhs, rhs)
}

pub fn dougall_check(a: &ExactRational, b: &ExactRational, c: &ExactRational, s: u32) -> IdentityOutcome {
    let proviso = ExactRational::one() + a - b - c + ExactRational::from(s as i64);
    if !proviso.is_positive() {
        return IdentityOutcome::Skipped {
            reason: format!("1+a-b-c-d = {proviso} is not positive"),
        };
    }
    let (l, r) = dougall_sides(a, b, c, s);
    IdentityOutcome::compare(l, r)
}

/// Chu's terminating ₇F₆: both sides exactly.
pub fn chu7f6_sides(
    a: &ExactRational,
    b: &ExactRational,
    c: &ExactRational,
    s: u32,
) -> (Result<ExactRational>, Result<ExactRational>) {
    let one = ExactRational::one();
    let two = ExactRational::from(2);
    let three = ExactRational::from(3);
    let h = half();
    let s_q = ExactRational::from(s as i64);
    let num = [
        a - &h,
        (&two * a + &two) / &three,
        &two * b - &one,
        &two * c - &one,
        &two + &two * a - &two * b - &two * c,
        a + &s_q,
        -s_q.clone(),
    ];
    let den = [
        (&two * a - &one) / &three,
        &one + a - b,
        &one + a - c,
        b + c - &h,
        &two * a + &two * &s_q,
        -(&two * &s_q),
    ];
    let lhs = pfq_terminating(&num, &den, &one);
    let s = s as i64;
    let rhs = (|| {
        let top = gamma_quotient_reduce(&[
            (&h + a, s),
            (b.clone(), s),
            (c.clone(), s),
            (a - b - c + ExactRational::frac(3, 2), s),
        ])?;
        let bottom = gamma_quotient_reduce(&[
            (h.clone(), s),
            (&one + a - b, s),
            (&one + a - c, s),
            (b + c - &h, s),
        ])?;
        top.checked_div(&bottom)
            .map_err(|_| Error::Pole("Chu right-hand side denominator".into()))
    })();
    (lhs, rhs)
}

pub fn chu7f6_check(a: &ExactRational, b: &ExactRational, c: &ExactRational, s: u32) -> IdentityOutcome {
    let (l, r) = chu7f6_sides(a, b, c, s);
    IdentityOutcome::compare(l, r)
}

/// Which master identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MasterIdentity {
    Dougall,
    Chu7f6,
}

impl MasterIdentity {
    pub fn name(self) -> &'static str {
        match self {
            MasterIdentity::Dougall => "dougall",
            MasterIdentity::Chu7f6 => "chu7f6",
        }
    }

    pub fn check(self, a: &ExactRational, b: &ExactRational, c: &ExactRational, s: u32) -> IdentityOutcome {
        match self {
            MasterIdentity::Dougall => dougall_check(a, b, c, s),
            MasterIdentity::Chu7f6 => chu7f6_check(a, b, c, s),
        }
    }
}

/// The fixed rational grid for `(a, b, c)`.
pub fn default_grid() -> Vec<(ExactRational, ExactRational, ExactRational)> {
    let q = ExactRational::frac;
    let a_vals = [q(-3, 7), q(1, 5), q(2, 1), q(7, 3), q(11, 4)];
    let b_vals = [q(1, 2), q(1, 3), q(-1, 4), q(2, 5), q(5, 4)];
    let c_vals = [q(1, 3), q(-2, 3), q(3, 5), q(7, 6)];
    let mut grid = Vec::new();
    for a in &a_vals {
        for b in &b_vals {
            for c in &c_vals {
                grid.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    grid
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityRecord {
    pub identity: MasterIdentity,
    pub s: u32,
    pub a: String,
    pub b: String,
    pub c: String,
    #[serde(flatten)]
    pub outcome: IdentityOutcome,
}

/// Runs `identity` over `grid` for `s = 0..=s_max`, in grid order.
pub fn identity_sweep(
    identity: MasterIdentity,
    s_max: u32,
    grid: &[(ExactRational, ExactRational, ExactRational)],
) -> Vec<IdentityRecord> {
    use rayon::prelude::*;
    let jobs: Vec<(u32, usize)> = (0..=s_max)
        .flat_map(|s| (0..grid.len()).map(move |i| (s, i)))
        .collect();
    jobs.par_iter()
        .map(|&(s, i)| {
            let (a, b, c) = &grid[i];
            IdentityRecord {
                identity,
                s,
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
                outcome: identity.check(a, b, c, s),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::frac(n, d)
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(pfq_terminating(&[r(0, 1), r(3, 7)], &[r(1, 2)], &r(5, 1)).unwrap(), r(1, 1));
        let (b, c) = (r(2, 3), r(5, 7));
        assert_eq!(
            pfq_terminating(&[r(-1, 1), b.clone()], &[c.clone()], &r(1, 1)).unwrap(),
            r(1, 1) - b / c
        );
        assert_eq!(pfq_terminating(&[r(1, 2)], &[r(1, 3)], &r(1, 1)), Err(Error::NonTerminating));
        assert!(matches!(
            pfq_terminating(&[r(-3, 1)], &[r(-1, 1)], &r(1, 1)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn chu_example() {
        let (l, rr) = chu7f6_sides(&r(3, 1), &r(5, 4), &r(7, 4), 2);
        assert_eq!(l.unwrap(), r(21, 13));
        assert_eq!(rr.unwrap(), r(21, 13));
    }

    #[test]
    fn dougall_example() {
        let (l, rr) = dougall_sides(&r(2, 1), &r(1, 2), &r(1, 3), 2);
        assert_eq!(l.unwrap(), r(741, 770));
        assert_eq!(rr.unwrap(), r(741, 770));
    }

    #[test]
    fn s_zero_is_one() {
        for id in [MasterIdentity::Dougall, MasterIdentity::Chu7f6] {
            assert_eq!(
                id.check(&r(2, 1), &r(1, 3), &r(3, 5), 0),
                IdentityOutcome::Equal { value: "1".into() }
            );
        }
    }
}
