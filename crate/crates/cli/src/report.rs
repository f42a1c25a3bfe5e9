use pifam::catalog::SCHEMA_VERSION;
use pifam::engine::{Strategy, Verdict, VerifyReport};
use pifam::hyperterm::{IdentityOutcome, IdentityRecord};
use serde::Serialize;

/// One structured output line: the schema version and record kind in front
/// of the payload's own fields.
#[derive(Serialize)]
struct Line<'a, T: Serialize> {
    schema_version: u32,
    kind: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

pub fn json_line<T: Serialize>(kind: &str, body: &T) -> String {
    let line = Line { schema_version: SCHEMA_VERSION, kind, body };
    serde_json::to_string(&line).expect("records serialize")
}

pub fn params_str(p: &[i64]) -> String {
    let v: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "verified",
        Verdict::Failed => "FAILED",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn strategy_str(s: Option<Strategy>) -> &'static str {
    match s {
        Some(Strategy::Geometric) => "geometric",
        Some(Strategy::AlternatingAccel) => "alternating_accel",
        Some(Strategy::AsymptoticTail) => "asymptotic_tail",
        Some(Strategy::DirectPartial) => "direct_partial",
        None => "-",
    }
}

pub fn verify_text(r: &VerifyReport) -> String {
    let mut out = format!(
        "{} {} {} [{}, {} terms, {} digits]\n",
        r.family_id,
        params_str(&r.params),
        verdict_str(r.verdict),
        strategy_str(r.strategy),
        r.terms_used,
        r.requested_digits
    );
    if let Some(l) = &r.lhs_value {
        out += &format!("  lhs {}\n", l.with_digits(r.requested_digits));
    }
    if let Some(v) = &r.rhs_value {
        out += &format!("  rhs {}\n", v.with_digits(r.requested_digits));
    }
    if !r.details.is_empty() {
        out += &format!("  {}\n", r.details);
    }
    out
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('%', "\\%").replace('#', "\\#")
}

pub fn verify_latex(reports: &[VerifyReport]) -> String {
    let mut out = String::from(
        "\\documentclass{article}\n\\begin{document}\n\\begin{tabular}{llllr}\nfamily & params & verdict & strategy & terms \\\\\n\\hline\n",
    );
    for r in reports {
        out += &format!(
            "{} & ${}$ & {} & {} & {} \\\\\n",
            r.family_id,
            params_str(&r.params),
            verdict_str(r.verdict),
            latex_escape(strategy_str(r.strategy)),
            r.terms_used
        );
    }
    out += "\\end{tabular}\n\\end{document}\n";
    out
}

#[derive(Serialize, Default)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

impl Summary {
    pub fn of(reports: &[VerifyReport]) -> Self {
        let mut s = Summary { total: reports.len(), ..Default::default() };
        for r in reports {
            match r.verdict {
                Verdict::Verified => s.verified += 1,
                Verdict::Failed => s.failed += 1,
                Verdict::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }

    pub fn text(&self) -> String {
        format!(
            "{} reports: {} verified, {} failed, {} inconclusive\n",
            self.total, self.verified, self.failed, self.inconclusive
        )
    }
}

pub fn identity_text(r: &IdentityRecord) -> String {
    let head = format!("{} s={} a={} b={} c={}", r.identity.name(), r.s, r.a, r.b, r.c);
    match &r.outcome {
        IdentityOutcome::Equal { value } => format!("{head}: equal {value}\n"),
        IdentityOutcome::Mismatch { lhs, rhs } => {
            format!("{head}: MISMATCH lhs {lhs} rhs {rhs}\n")
        }
        IdentityOutcome::Skipped { reason } => format!("{head}: skipped ({reason})\n"),
    }
}

#[derive(Serialize)]
pub struct BenchRow {
    pub family_id: String,
    pub params: Vec<i64>,
    pub digits: u32,
    pub strategy: Option<Strategy>,
    pub verdict: Verdict,
    pub terms_used: u64,
    pub digits_per_term: f64,
    pub wall_ms: f64,
}

pub fn bench_text(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<14} {:<12} {:>6} {:<18} {:<13} {:>8} {:>10} {:>10}\n",
        "family", "params", "digits", "strategy", "verdict", "terms", "dig/term", "ms"
    );
    for r in rows {
        out += &format!(
            "{:<14} {:<12} {:>6} {:<18} {:<13} {:>8} {:>10.3} {:>10.1}\n",
            r.family_id,
            params_str(&r.params),
            r.digits,
            strategy_str(r.strategy),
            verdict_str(r.verdict),
            r.terms_used,
            r.digits_per_term,
            r.wall_ms
        );
    }
    out
}
