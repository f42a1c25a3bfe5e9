use std::process::{Command, Output};

use serde_json::Value;

fn pifam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pifam")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("valid json line")).collect()
}

/// Balanced braces, matching environments and `\left`/`\right` pairs.
fn latex_well_formed(doc: &str) -> Result<(), String> {
    let mut depth = 0i64;
    let mut prev = ' ';
    for ch in doc.chars() {
        if prev != '\\' {
            match ch {
                '{' => depth += 1,
                '}' => depth -= 1,
                _ => {}
            }
        }
        if depth < 0 {
            return Err("unbalanced `}`".into());
        }
        prev = if prev == '\\' && ch == '\\' { ' ' } else { ch };
    }
    if depth != 0 {
        return Err(format!("{depth} unclosed braces"));
    }
    let mut envs = Vec::new();
    for (i, _) in doc.match_indices("\\begin{").chain(doc.match_indices("\\end{")) {
        envs.push(i);
    }
    envs.sort();
    let mut stack = Vec::new();
    for i in envs {
        let rest = &doc[i..];
        let open = rest.starts_with("\\begin{");
        let start = rest.find('{').unwrap() + 1;
        let name = &rest[start..start + rest[start..].find('}').unwrap()];
        if open {
            stack.push(name.to_string());
        } else if stack.pop().as_deref() != Some(name) {
            return Err(format!("mismatched \\end{{{name}}}"));
        }
    }
    if !stack.is_empty() {
        return Err(format!("unclosed environments {stack:?}"));
    }
    if doc.matches("\\left").count() != doc.matches("\\right").count() {
        return Err("unpaired \\left/\\right".into());
    }
    Ok(())
}

#[test]
fn list_text_covers_registry() {
    let o = pifam(&["list"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.starts_with("33 families\n"));
    assert!(s.contains("17 golden series\n"));
    for id in ["thm-2.1", "thm-2.7", "chu", "thm-3.aa", "thm-3.jj", "thm-3.a", "thm-3.o", "liu", "known-a", "known-b"] {
        assert!(s.lines().any(|l| l.starts_with(&format!("{id} "))), "missing {id}");
    }
}

#[test]
fn list_structured_one_record_per_entry() {
    let o = pifam(&["list", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 50);
    assert_eq!(recs.iter().filter(|r| r["kind"] == "family").count(), 33);
    for r in &recs {
        assert_eq!(r["schema_version"], 1);
        for field in ["id", "params", "constraints", "lhs", "pi_power", "formula"] {
            assert!(r.get(field).is_some(), "{field} missing from {r}");
        }
    }
    let chu = recs.iter().find(|r| r["id"] == "chu").unwrap();
    assert_eq!(chu["constraints"].as_array().unwrap().len(), 3);
    assert_eq!(chu["pi_power"], -1);
}

#[test]
fn list_latex_is_a_document() {
    let o = pifam(&["list", "--format", "latex"]);
    assert_eq!(code(&o), 0);
    let doc = stdout(&o);
    assert!(doc.starts_with("\\documentclass"));
    assert!(doc.trim_end().ends_with("\\end{document}"));
    latex_well_formed(&doc).unwrap();
    assert_eq!(doc.matches("\\min\\{").count(), 33);
}

#[test]
fn list_latex_compiles_when_tex_is_installed() {
    let Ok(probe) = Command::new("pdflatex").arg("--version").output() else {
        eprintln!("pdflatex not installed; compile step skipped");
        return;
    };
    assert!(probe.status.success());
    let dir = tempfile::tempdir().unwrap();
    let tex = dir.path().join("catalog.tex");
    let o = pifam(&["list", "--format", "latex", "--out", tex.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let run = Command::new("pdflatex")
        .args(["-interaction=nonstopmode", "-halt-on-error", "catalog.tex"])
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stdout));
}

#[test]
fn verify_example_instance() {
    let o = pifam(&["verify", "thm-2.1", "--params", "1,0", "--digits", "30"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("thm-2.1 (1,0) verified"));
}

#[test]
fn verify_golden_label() {
    let o = pifam(&["verify", "known-b", "--digits", "30"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn constraint_violation_exit_code() {
    let o = pifam(&["verify", "chu", "--params", "0,1,0"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("m-n = -1"));
}

#[test]
fn usage_errors() {
    assert_eq!(code(&pifam(&["verify", "thm-9.9", "--params", "0"])), 2);
    assert_eq!(code(&pifam(&["verify", "thm-2.1", "--params", "1"])), 2);
    assert_eq!(code(&pifam(&["verify", "thm-2.1", "--params", "1,0", "--digits", "0"])), 2);
    assert_eq!(code(&pifam(&["verify", "thm-2.1", "--params", "1,0", "--digits", "1001"])), 2);
    assert_eq!(code(&pifam(&["verify", "thm-2.1", "--params", "1,x"])), 2);
    assert_eq!(code(&pifam(&["frobnicate"])), 2);
    assert_eq!(code(&pifam(&["sweep", "nope"])), 2);
}

#[test]
fn sweep_small_bound() {
    let o = pifam(&["sweep", "thm-3.dd", "--bound", "1", "--digits", "20", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let recs = json_lines(&o);
    let (reports, summary) = recs.split_at(recs.len() - 1);
    assert!(reports.len() >= 5);
    assert_eq!(summary[0]["kind"], "summary");
    assert_eq!(summary[0]["verified"], reports.len());
    let fields = [
        "family_id",
        "params",
        "requested_digits",
        "lhs_value",
        "rhs_value",
        "verdict",
        "strategy",
        "terms_used",
        "error_claim",
        "details",
    ];
    let mut prev: Option<Vec<i64>> = None;
    for r in reports {
        assert_eq!(r["schema_version"], 1);
        assert_eq!(r["kind"], "verify_report");
        for f in fields {
            assert!(r.get(f).is_some(), "{f} missing");
        }
        assert_eq!(r["verdict"], "verified");
        let p: Vec<i64> = serde_json::from_value(r["params"].clone()).unwrap();
        if let Some(q) = &prev {
            assert!(q < &p, "params out of order");
        }
        prev = Some(p);
    }
}

#[test]
fn structured_reports_are_byte_identical() {
    let args = ["sweep", "thm-2.7", "--bound", "2", "--digits", "25", "--format", "structured"];
    let a = pifam(&args);
    let mut with_jobs = vec!["--jobs", "2"];
    with_jobs.extend(args);
    let b = pifam(&with_jobs);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_negative_bound_is_empty() {
    let o = pifam(&["sweep", "thm-2.2", "--bound", "-1", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["total"], 0);
}

#[test]
fn report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let o = pifam(&["verify", "thm-2.7", "--params", "2,1,1", "--digits", "30", "--format", "structured", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let r: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(r["verdict"], "verified");
    assert_eq!(r["strategy"], "geometric");
    assert_eq!(r["error_claim"]["kind"], "rigorous");
}

#[test]
fn identity_checks() {
    for id in ["dougall", "chu7f6"] {
        let o = pifam(&["identity-check", id, "--s-max", "8", "--format", "structured"]);
        assert_eq!(code(&o), 0);
        let recs = json_lines(&o);
        let summary = recs.last().unwrap();
        assert_eq!(summary["mismatched"], 0);
        assert!(summary["equal"].as_u64().unwrap() >= 9 * 50, "{summary}");
    }
    let o = pifam(&["identity-check", "dougall", "--s-max", "0", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let recs = json_lines(&o);
    for r in &recs[..recs.len() - 1] {
        if r["status"] == "equal" {
            assert_eq!(r["value"], "1");
        }
    }
}

#[test]
fn identity_check_custom_grid() {
    let o = pifam(&["identity-check", "chu7f6", "--s-max", "3", "--a", "5/2,-1/3", "--b", "1/7", "--c", "2/9"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chu7f6 s<= 3: 8 equal"));
    assert_eq!(code(&pifam(&["identity-check", "chu7f6", "--a", "x/2"])), 2);
}

#[test]
fn bench_term_counts() {
    let o = pifam(&["bench", "section2", "--digits", "30", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 7);
    for r in &rows {
        assert!(r["terms_used"].as_u64().unwrap() <= 150, "{r}");
        assert_eq!(r["verdict"], "verified");
    }
    let o = pifam(&["bench", "chu", "--digits", "25", "--format", "structured"]);
    let rows = json_lines(&o);
    assert!(rows[0]["terms_used"].as_u64().unwrap() <= 60);
    assert_eq!(rows[0]["strategy"], "alternating_accel");
    let o = pifam(&["bench"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn render_instance_and_golden() {
    let o = pifam(&["render", "chu", "--params", "0,0,0"]);
    assert_eq!(
        stdout(&o).trim(),
        "2/pi = sum_{k>=0} (-1)^k*(1/2)_k*(1/2)_k*(1/2)_k*(4k+1)/(k!*k!*k!)"
    );
    let o = pifam(&["render", "known-a"]);
    assert_eq!(stdout(&o).trim(), "sum_{k>=0} k!/(2k+1)!! = pi/2");
    assert_eq!(code(&pifam(&["render", "known-a", "--params", "1"])), 2);
    assert_eq!(code(&pifam(&["render", "chu", "--params", "0,1,0"])), 3);
}
