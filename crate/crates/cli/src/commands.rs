use std::fmt;
use std::io::Write;
use std::time::Instant;

use pifam::catalog::{self, Format};
use pifam::engine::{self, Verdict, VerifyReport};
use pifam::hyperterm::{default_grid, identity_sweep, IdentityOutcome, MasterIdentity};
use pifam::{Error, ExactRational};

use crate::args::{Command, Identity, Output, OutputFormat};
use crate::exit;
use crate::report::{self, json_line, BenchRow, Summary};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Core(e) => exit::for_error(e),
            CliError::Io(_) => exit::INTERNAL,
            CliError::Usage(_) => exit::USAGE,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn verdict_code(reports: &[VerifyReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Failed) {
        exit::FAILED
    } else if reports.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        exit::INCONCLUSIVE
    } else {
        exit::OK
    }
}

fn text_format(f: OutputFormat) -> Format {
    if f == OutputFormat::Latex {
        Format::Latex
    } else {
        Format::Text
    }
}

pub fn dispatch(cmd: &Command) -> Result<i32> {
    match cmd {
        Command::List { output } => list(output),
        Command::Render { id, params, output } => render(id, params.as_ref().map(|p| p.0.as_slice()), output),
        Command::Verify { id, params, digits, output } => verify(id, params.as_ref().map(|p| p.0.as_slice()), *digits, output),
        Command::Sweep { id, bound, digits, output } => sweep(id, *bound, *digits, output),
        Command::IdentityCheck { identity, s_max, a, b, c, output } => {
            identity_check(*identity, *s_max, [a, b, c], output)
        }
        Command::Bench { families, digits, output } => bench(families, *digits, output),
    }
}

fn list(output: &Output) -> Result<i32> {
    let fams = catalog::families();
    let golds = catalog::goldens();
    let text = match output.format {
        OutputFormat::Latex => catalog::latex_document(fams, golds),
        OutputFormat::Structured => {
            let mut s = String::new();
            for f in fams {
                s += &serde_json::to_string(&catalog::family_record(f)).expect("serializes");
                s.push('\n');
            }
            for g in golds {
                s += &serde_json::to_string(&catalog::golden_record(g)).expect("serializes");
                s.push('\n');
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!("{} families\n", fams.len());
            for f in fams {
                let r = catalog::family_record(f);
                s += &format!(
                    "{:<10} ({}) lhs {}  [{}]\n",
                    r.id,
                    r.params.join(","),
                    r.lhs,
                    r.constraints.join(", ")
                );
            }
            s += &format!("{} golden series\n", golds.len());
            for g in golds {
                s += &format!("{:<14} {}\n", g.label, catalog::render_golden(g, Format::Text));
            }
            s
        }
    };
    emit(output, &text)?;
    Ok(exit::OK)
}

fn render(id: &str, params: Option<&[i64]>, output: &Output) -> Result<i32> {
    let fmt = text_format(output.format);
    let text = if let Ok(g) = catalog::golden(id) {
        if params.is_some() {
            return Err(CliError::Usage(format!("golden series `{id}` takes no parameters")));
        }
        match output.format {
            OutputFormat::Structured => serde_json::to_string(&catalog::golden_record(g)).expect("serializes"),
            _ => catalog::render_golden(g, fmt),
        }
    } else {
        let f = catalog::find(id)?;
        match (params, output.format) {
            (None, OutputFormat::Structured) => {
                serde_json::to_string(&catalog::family_record(f)).expect("serializes")
            }
            (None, _) => catalog::render_family(f, fmt),
            (Some(p), _) => {
                f.check_constraints(p)?;
                let s = f.instantiate(p)?;
                let body = catalog::render_series(&s, fmt);
                if output.format == OutputFormat::Structured {
                    #[derive(serde::Serialize)]
                    struct Instance<'a> {
                        id: &'a str,
                        params: &'a [i64],
                        formula: String,
                    }
                    json_line("instance", &Instance { id, params: p, formula: body })
                } else {
                    body
                }
            }
        }
    };
    emit(output, &format!("{text}\n"))?;
    Ok(exit::OK)
}

fn write_reports(reports: &[VerifyReport], output: &Output, with_summary: bool) -> Result<()> {
    let summary = Summary::of(reports);
    let text = match output.format {
        OutputFormat::Structured => {
            let mut s = String::new();
            for r in reports {
                s += &json_line("verify_report", r);
                s.push('\n');
            }
            if with_summary {
                s += &json_line("summary", &summary);
                s.push('\n');
            }
            s
        }
        OutputFormat::Latex => report::verify_latex(reports),
        OutputFormat::Text => {
            let mut s: String = reports.iter().map(report::verify_text).collect();
            if with_summary {
                s += &summary.text();
            }
            s
        }
    };
    emit(output, &text)
}

fn verify(id: &str, params: Option<&[i64]>, digits: u32, output: &Output) -> Result<i32> {
    let r = match (catalog::golden(id), params) {
        (Ok(_), None) => engine::verify_golden(id, digits)?,
        (Ok(_), Some(_)) => return Err(CliError::Usage(format!("golden series `{id}` takes no parameters"))),
        (Err(_), p) => engine::verify(id, p.unwrap_or(&[]), digits)?,
    };
    let reports = [r];
    write_reports(&reports, output, false)?;
    Ok(verdict_code(&reports))
}

fn sweep(id: &str, bound: i64, digits: u32, output: &Output) -> Result<i32> {
    let reports = if id == "all" {
        let mut all = Vec::new();
        for f in catalog::families() {
            all.extend(engine::sweep(f.family_id, bound, digits)?);
        }
        all
    } else {
        engine::sweep(id, bound, digits)?
    };
    write_reports(&reports, output, true)?;
    for r in reports.iter().filter(|r| r.verdict == Verdict::Failed) {
        eprintln!("finding: {} {} {}", r.family_id, report::params_str(&r.params), r.details);
    }
    Ok(verdict_code(&reports))
}

fn parse_values(s: &str) -> Result<Vec<ExactRational>> {
    s.split(',')
        .map(|v| v.trim().parse::<ExactRational>().map_err(CliError::from))
        .collect()
}

fn identity_check(identity: Identity, s_max: u32, axes: [&Option<String>; 3], output: &Output) -> Result<i32> {
    let id = match identity {
        Identity::Dougall => MasterIdentity::Dougall,
        Identity::Chu7f6 => MasterIdentity::Chu7f6,
    };
    let grid = if axes.iter().all(|a| a.is_none()) {
        default_grid()
    } else {
        let defaults = default_grid();
        let mut vals: [Vec<ExactRational>; 3] = Default::default();
        for (i, axis) in axes.iter().enumerate() {
            vals[i] = match axis {
                Some(s) => parse_values(s)?,
                None => {
                    let mut v: Vec<ExactRational> = defaults
                        .iter()
                        .map(|t| [&t.0, &t.1, &t.2][i].clone())
                        .collect();
                    v.sort();
                    v.dedup();
                    v
                }
            };
        }
        let mut g = Vec::new();
        for a in &vals[0] {
            for b in &vals[1] {
                for c in &vals[2] {
                    g.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        g
    };
    let records = identity_sweep(id, s_max, &grid);
    let (mut equal, mut skipped, mut mismatched) = (0usize, 0usize, 0usize);
    for r in &records {
        match r.outcome {
            IdentityOutcome::Equal { .. } => equal += 1,
            IdentityOutcome::Skipped { .. } => skipped += 1,
            IdentityOutcome::Mismatch { .. } => mismatched += 1,
        }
    }
    #[derive(serde::Serialize)]
    struct IdentitySummary {
        identity: MasterIdentity,
        s_max: u32,
        equal: usize,
        skipped: usize,
        mismatched: usize,
    }
    let summary = IdentitySummary { identity: id, s_max, equal, skipped, mismatched };
    let text = match output.format {
        OutputFormat::Structured => {
            let mut s = String::new();
            for r in &records {
                s += &json_line("identity_check", r);
                s.push('\n');
            }
            s + &json_line("identity_summary", &summary) + "\n"
        }
        _ => {
            let mut s: String = records.iter().map(report::identity_text).collect();
            s += &format!(
                "{} s<= {}: {equal} equal, {skipped} skipped, {mismatched} mismatched\n",
                id.name(),
                s_max
            );
            s
        }
    };
    emit(output, &text)?;
    Ok(if mismatched == 0 { exit::OK } else { exit::FAILED })
}

fn expand_set(names: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for n in names {
        match n.as_str() {
            "section2" => out.extend((1..=7).map(|i| format!("thm-2.{i}"))),
            "all" => out.extend(catalog::families().iter().map(|f| f.family_id.to_string())),
            other => out.push(other.to_string()),
        }
    }
    out
}

/// The origin when feasible, else the first feasible tuple with entries in `[-2, 2]`.
fn bench_params(id: &str) -> Result<Vec<i64>> {
    let f = catalog::find(id)?;
    let origin = vec![0; f.arity()];
    if f.violations(&origin)?.is_empty() {
        return Ok(origin);
    }
    f.feasible_tuples(2)
        .into_iter()
        .next()
        .ok_or_else(|| CliError::Usage(format!("`{id}` has no feasible tuple with entries in [-2, 2]")))
}

fn bench(families: &[String], digits: u32, output: &Output) -> Result<i32> {
    let mut rows = Vec::new();
    for id in expand_set(families) {
        let t = Instant::now();
        let r = if catalog::golden(&id).is_ok() {
            engine::verify_golden(&id, digits)?
        } else {
            engine::verify(&id, &bench_params(&id)?, digits)?
        };
        let wall_ms = t.elapsed().as_secs_f64() * 1e3;
        rows.push(BenchRow {
            digits_per_term: if r.terms_used == 0 { 0.0 } else { digits as f64 / r.terms_used as f64 },
            family_id: r.family_id,
            params: r.params,
            digits,
            strategy: r.strategy,
            verdict: r.verdict,
            terms_used: r.terms_used,
            wall_ms,
        });
    }
    let text = match output.format {
        OutputFormat::Structured => rows.iter().map(|r| json_line("bench", r) + "\n").collect(),
        _ => report::bench_text(&rows),
    };
    emit(output, &text)?;
    Ok(exit::OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pifam::error::Violation;

    fn report(v: Verdict) -> VerifyReport {
        let mut r = engine::verify("thm-2.1", &[0, 0], 5).unwrap();
        r.verdict = v;
        r
    }

    #[test]
    fn exit_codes_partition_outcomes() {
        assert_eq!(verdict_code(&[]), exit::OK);
        assert_eq!(verdict_code(&[report(Verdict::Verified)]), exit::OK);
        assert_eq!(verdict_code(&[report(Verdict::Verified), report(Verdict::Inconclusive)]), exit::INCONCLUSIVE);
        assert_eq!(verdict_code(&[report(Verdict::Inconclusive), report(Verdict::Failed)]), exit::FAILED);
        let cases = [
            (Error::UnknownFamily("x".into()), exit::USAGE),
            (Error::ConstraintViolation(vec![Violation { form: "m".into(), value: -1 }]), exit::CONSTRAINT),
            (Error::Inconclusive("x".into()), exit::INCONCLUSIVE),
            (Error::OracleDisagreement { digits: 10 }, exit::ORACLE),
            (Error::DivisionByZero, exit::INTERNAL),
        ];
        for (e, c) in cases {
            assert_eq!(CliError::from(e).code(), c);
        }
        let codes = [exit::OK, exit::FAILED, exit::USAGE, exit::CONSTRAINT, exit::INCONCLUSIVE, exit::INTERNAL, exit::ORACLE];
        let mut uniq = codes.to_vec();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), codes.len());
    }

    #[test]
    fn set_expansion() {
        assert_eq!(expand_set(&["section2".into()]).len(), 7);
        assert_eq!(expand_set(&["all".into()]).len(), 33);
        assert!(expand_set(&[]).is_empty());
    }
}
