//! The family table, transcribed factor by factor from the displayed
//! identities. Index offsets are written relative to `k`.

use super::family::{ClosedFormSpec, FamilySpec, PrefactorFactor as Pf, QuadQ, SummandFactor as Sf};
use super::linear::LinearForm;
use crate::exactnum::ExactRational;
use crate::hyperterm::Side::{Denominator as D, Numerator as N};

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::frac(n, d)
}

fn lf(s: &str) -> LinearForm {
    LinearForm::of(s)
}

fn quad(a: i64, b: i64, c: i64, d: i64) -> QuadQ {
    QuadQ::new(a.into(), b.into(), c.into(), d.into())
}

fn one() -> QuadQ {
    quad(1, 0, 0, 0)
}

fn poch(base: ExactRational, off: &str, side: crate::hyperterm::Side) -> Sf {
    Sf::Poch { base, offset: lf(off), side }
}

fn fact(off: &str, side: crate::hyperterm::Side) -> Sf {
    Sf::Fact { offset: lf(off), side }
}

fn lin(alpha: i64, beta: &str, side: crate::hyperterm::Side) -> Sf {
    Sf::Linear { alpha, beta: lf(beta), side }
}

fn pow(base: ExactRational, off: &str) -> Sf {
    Sf::Power { base, offset: lf(off) }
}

fn ppoch(base: ExactRational, idx: &str, side: crate::hyperterm::Side) -> Pf {
    Pf::Poch { base, index: lf(idx), side }
}

fn pfact(idx: &str, side: crate::hyperterm::Side) -> Pf {
    Pf::Fact { index: lf(idx), side }
}

fn forms(list: &[&str]) -> Vec<LinearForm> {
    list.iter().map(|s| lf(s)).collect()
}

const MNP: [char; 3] = ['m', 'n', 'p'];
const MNPQ: [char; 4] = ['m', 'n', 'p', 'q'];

fn thm_2_1() -> FamilySpec {
    let mut lhs = ClosedFormSpec::new(1, one(), 1, one(), 1);
    lhs.power = Some((q(1, 2), lf("m+n+1")));
    FamilySpec {
        family_id: "thm-2.1",
        param_names: vec!['m', 'n'],
        constraints: forms(&["m", "n"]),
        lhs,
        prefactor: vec![pfact("m", N), pfact("n", N), pfact("2m", D), pfact("2n", D)],
        summand: vec![
            fact("2m", N),
            fact("2n", N),
            fact("0", D),
            Sf::OddDoubleFact { offset: lf("m+n"), side: D },
        ],
    }
}

/// The shared shape of the five three-parameter π families:
/// coefficients `(nb, pb)` in the prefactor, `(b1, b2)` and `(c1, c2)` in the summand.
#[allow(clippy::too_many_arguments)]
fn shifted_quarter(
    id: &'static str,
    lhs: ClosedFormSpec,
    nb: ExactRational,
    pb: ExactRational,
    b1: ExactRational,
    b2: ExactRational,
    c1: ExactRational,
    c2: ExactRational,
    constraints: &[&str],
) -> FamilySpec {
    FamilySpec {
        family_id: id,
        param_names: MNP.to_vec(),
        constraints: forms(constraints),
        lhs,
        prefactor: vec![ppoch(nb, "n", D), ppoch(pb, "p", D), ppoch(q(1, 2), "m-n-p", D)],
        summand: vec![
            poch(b1, "2n", N),
            poch(b2, "2p", N),
            fact("m", N),
            fact("2m-2n-2p", N),
            poch(c1, "m-n", D),
            poch(c2, "m-p", D),
            poch(q(1, 2), "n+p", D),
            fact("0", D),
            lin(3, "2m", N),
            lin(1, "m", D),
            pow(q(1, 4), "m"),
        ],
    }
}

fn thm_2_7() -> FamilySpec {
    FamilySpec {
        family_id: "thm-2.7",
        param_names: MNP.to_vec(),
        constraints: forms(&["n", "p", "m-n-p"]),
        lhs: ClosedFormSpec::new(1, one(), 1, one(), 2),
        prefactor: vec![ppoch(q(1, 2), "n", D), ppoch(q(1, 2), "p", D), ppoch(q(1, 2), "m-n-p", D)],
        summand: vec![
            fact("m", N),
            fact("2n", N),
            fact("2p", N),
            fact("2m-2n-2p", N),
            poch(q(3, 2), "m-n", D),
            poch(q(3, 2), "m-p", D),
            poch(q(3, 2), "n+p", D),
            fact("0", D),
            lin(3, "2m+2", N),
            pow(q(1, 4), "m-1"),
        ],
    }
}

/// Alternating three-parameter `1/π` families with base `x` and complement `comp`.
fn alternating3(
    id: &'static str,
    lhs: ClosedFormSpec,
    x: ExactRational,
    comp: ExactRational,
    last_constraint: &str,
    alpha: i64,
    beta: &str,
) -> FamilySpec {
    FamilySpec {
        family_id: id,
        param_names: MNP.to_vec(),
        constraints: forms(&["m-n", "m-p", last_constraint]),
        lhs,
        prefactor: vec![ppoch(comp, "m-n-p", N), ppoch(x.clone(), "n", D), ppoch(x.clone(), "p", D)],
        summand: vec![
            pow(q(-1, 1), "0"),
            poch(x.clone(), "m", N),
            poch(x.clone(), "n", N),
            poch(x, "p", N),
            fact("0", D),
            fact("m-n", D),
            fact("m-p", D),
            lin(alpha, beta, N),
        ],
    }
}

/// Four-parameter families with `c = x + p` and `d = 1/2 + q`.
#[allow(clippy::too_many_arguments)]
fn dougall_half(
    id: &'static str,
    lhs: ClosedFormSpec,
    x: ExactRational,
    comp: ExactRational,
    d4: ExactRational,
    d4_index: &str,
    e: ExactRational,
    alpha: i64,
    beta: &str,
) -> FamilySpec {
    let h = q(1, 2);
    FamilySpec {
        family_id: id,
        param_names: MNPQ.to_vec(),
        constraints: forms(&["m-n", "m-p", d4_index]),
        lhs,
        prefactor: vec![
            ppoch(comp, "m-n-p", N),
            ppoch(h.clone(), "m-n-q", N),
            ppoch(h.clone(), "m-p-q", N),
            ppoch(d4, d4_index, D),
            ppoch(x.clone(), "n", D),
            ppoch(x.clone(), "p", D),
            ppoch(h.clone(), "q", D),
        ],
        summand: vec![
            poch(x.clone(), "m", N),
            poch(x.clone(), "n", N),
            poch(x, "p", N),
            poch(h, "q", N),
            fact("0", D),
            fact("m-n", D),
            fact("m-p", D),
            poch(e, "m-q", D),
            lin(alpha, beta, N),
        ],
    }
}

/// Four-parameter families with `a = 1/2 + m`, `b = 1/2 + n`.
#[allow(clippy::too_many_arguments)]
fn dougall_pair(
    id: &'static str,
    lhs: ClosedFormSpec,
    c: ExactRational,
    d: ExactRational,
    a1: ExactRational,
    a2: ExactRational,
    dp: ExactRational,
    dq: ExactRational,
) -> FamilySpec {
    let h = q(1, 2);
    FamilySpec {
        family_id: id,
        param_names: MNPQ.to_vec(),
        constraints: forms(&["m-n", "m-n-p-q-1"]),
        lhs,
        prefactor: vec![
            ppoch(a1, "m-n-p", N),
            ppoch(a2, "m-n-q", N),
            ppoch(h.clone(), "m-p-q", N),
            pfact("m-n-p-q-1", D),
            ppoch(h.clone(), "n", D),
            ppoch(c.clone(), "p", D),
            ppoch(d.clone(), "q", D),
        ],
        summand: vec![
            poch(h.clone(), "m", N),
            poch(h, "n", N),
            poch(c, "p", N),
            poch(d, "q", N),
            fact("0", D),
            fact("m-n", D),
            poch(dp, "m-p", D),
            poch(dq, "m-q", D),
            lin(4, "2m+1", N),
        ],
    }
}

/// `num_scale·num / (den_scale·den·π)`
fn inv_pi(num_scale: i64, num: QuadQ, den_scale: i64, den: QuadQ) -> ClosedFormSpec {
    ClosedFormSpec::new(num_scale, num, den_scale, den, -1)
}

/// `num_scale·num·π / (den_scale·den)`
fn times_pi(num_scale: i64, num: QuadQ, den_scale: i64, den: QuadQ) -> ClosedFormSpec {
    ClosedFormSpec::new(num_scale, num, den_scale, den, 1)
}

pub(super) fn all_families() -> Vec<FamilySpec> {
    let r2 = quad(0, 1, 0, 0);
    let r3 = quad(0, 0, 1, 0);
    let two_minus_r3 = quad(2, 0, -1, 0);
    let two_plus_r3 = quad(2, 0, 1, 0);
    let r6_minus_r2 = quad(0, -1, 0, 1);
    let r6_plus_r2 = quad(0, 1, 0, 1);
    let c22 = ["m", "m-n-p"];
    let c26 = ["n", "p", "m-n-p"];
    vec![
        thm_2_1(),
        shifted_quarter("thm-2.2", times_pi(1, one(), 2, one()), q(-1, 4), q(1, 4), q(-1, 2), q(1, 2), q(5, 4), q(3, 4), &c22),
        shifted_quarter("thm-2.3", times_pi(2, one(), 3, r3.clone()), q(-1, 3), q(1, 3), q(-2, 3), q(2, 3), q(4, 3), q(2, 3), &c22),
        shifted_quarter("thm-2.4", times_pi(1, one(), 1, r3.clone()), q(-1, 6), q(1, 6), q(-1, 3), q(1, 3), q(7, 6), q(5, 6), &c22),
        shifted_quarter("thm-2.5", times_pi(1, one(), 6, two_minus_r3.clone()), q(-1, 12), q(1, 12), q(-1, 6), q(1, 6), q(13, 12), q(11, 12), &c22),
        shifted_quarter("thm-2.6", times_pi(5, one(), 6, two_plus_r3.clone()), q(-5, 12), q(5, 12), q(-5, 6), q(5, 6), q(17, 12), q(7, 12), &c26),
        thm_2_7(),
        alternating3("chu", inv_pi(2, one(), 1, one()), q(1, 2), q(1, 2), "m-2n-2p", 4, "2m+1"),
        alternating3("thm-3.aa", inv_pi(3, one(), 1, one()), q(1, 6), q(5, 6), "m-2n-2p+1", 12, "6m+1"),
        alternating3("thm-3.bb", inv_pi(3, one(), 1, one()), q(5, 6), q(1, 6), "m-2n-2p-1", 12, "6m+5"),
        alternating3("thm-3.cc", inv_pi(2, r2.clone(), 1, one()), q(1, 4), q(3, 4), "m-2n-2p+1", 8, "4m+1"),
        alternating3("thm-3.dd", inv_pi(2, r2.clone(), 1, one()), q(3, 4), q(1, 4), "m-2n-2p-1", 8, "4m+3"),
        alternating3("thm-3.ee", inv_pi(3, r3.clone(), 2, one()), q(1, 3), q(2, 3), "m-2n-2p", 6, "3m+1"),
        alternating3("thm-3.ff", inv_pi(3, r3.clone(), 2, one()), q(2, 3), q(1, 3), "m-2n-2p-1", 6, "3m+2"),
        alternating3("thm-3.gg", inv_pi(3, r6_minus_r2.clone(), 1, one()), q(1, 12), q(11, 12), "m-2n-2p+1", 24, "12m+1"),
        alternating3("thm-3.hh", inv_pi(3, r6_plus_r2.clone(), 1, one()), q(5, 12), q(7, 12), "m-2n-2p", 24, "12m+5"),
        alternating3("thm-3.ii", inv_pi(3, r6_plus_r2, 1, one()), q(7, 12), q(5, 12), "m-2n-2p", 24, "12m+7"),
        alternating3("thm-3.jj", inv_pi(3, r6_minus_r2, 1, one()), q(11, 12), q(1, 12), "m-2n-2p-1", 24, "12m+11"),
        dougall_half("thm-3.a", inv_pi(4, one(), 1, one()), q(1, 4), q(3, 4), q(1, 4), "m-n-p-q", q(3, 4), 8, "4m+1"),
        dougall_half("thm-3.b", inv_pi(1, one(), 1, one()), q(3, 4), q(1, 4), q(3, 4), "m-n-p-q-1", q(5, 4), 8, "4m+3"),
        dougall_pair("thm-3.c", inv_pi(1, one(), 2, one()), q(1, 4), q(3, 4), q(3, 4), q(1, 4), q(5, 4), q(3, 4)),
        dougall_half("thm-3.d", inv_pi(3, r3.clone(), 1, one()), q(1, 3), q(2, 3), q(1, 6), "m-n-p-q", q(5, 6), 6, "3m+1"),
        dougall_half("thm-3.e", inv_pi(1, r3.clone(), 2, one()), q(2, 3), q(1, 3), q(5, 6), "m-n-p-q-1", q(7, 6), 6, "3m+2"),
        dougall_half("thm-3.g", inv_pi(2, r3.clone(), 1, one()), q(1, 6), q(5, 6), q(1, 3), "m-n-p-q", q(2, 3), 12, "6m+1"),
        dougall_half("thm-3.h", inv_pi(2, r3.clone(), 3, one()), q(5, 6), q(1, 6), q(2, 3), "m-n-p-q-1", q(4, 3), 12, "6m+5"),
        dougall_pair("thm-3.i", inv_pi(2, r3.clone(), 9, one()), q(1, 6), q(5, 6), q(5, 6), q(1, 6), q(4, 3), q(2, 3)),
        dougall_half("thm-3.j", inv_pi(12, two_minus_r3.clone(), 1, one()), q(1, 12), q(11, 12), q(5, 12), "m-n-p-q", q(7, 12), 24, "12m+1"),
        dougall_half("thm-3.k", inv_pi(12, two_plus_r3.clone(), 1, one()), q(5, 12), q(7, 12), q(1, 12), "m-n-p-q", q(11, 12), 24, "12m+5"),
        dougall_half("thm-3.l", inv_pi(1, two_plus_r3.clone(), 1, one()), q(7, 12), q(5, 12), q(11, 12), "m-n-p-q-1", q(13, 12), 24, "12m+7"),
        dougall_half("thm-3.m", inv_pi(5, two_minus_r3.clone(), 1, one()), q(11, 12), q(1, 12), q(7, 12), "m-n-p-q-1", q(17, 12), 24, "12m+11"),
        dougall_pair("thm-3.n", inv_pi(5, two_minus_r3, 6, one()), q(1, 12), q(11, 12), q(11, 12), q(1, 12), q(17, 12), q(7, 12)),
        dougall_pair("thm-3.o", inv_pi(1, two_plus_r3, 6, one()), q(5, 12), q(7, 12), q(7, 12), q(5, 12), q(13, 12), q(11, 12)),
        dougall_pair("liu", inv_pi(1, r3, 3, one()), q(1, 3), q(2, 3), q(2, 3), q(1, 3), q(7, 6), q(5, 6)),
    ]
}
