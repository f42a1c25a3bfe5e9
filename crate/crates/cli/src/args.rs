use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "pifam", version, about = "List, render and verify parameterized series for pi, pi^2 and 1/pi")]
pub struct Cli {
    /// Worker threads for sweeps and identity checks (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Latex,
    Structured,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Dougall,
    Chu7f6,
}

/// Comma-separated integers in the family's parameter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params(pub Vec<i64>);

fn parse_params(s: &str) -> Result<Params, String> {
    if s.trim().is_empty() {
        return Ok(Params(Vec::new()));
    }
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Params)
}

fn parse_digits(s: &str) -> Result<u32, String> {
    let d: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=1000).contains(&d) {
        Ok(d)
    } else {
        Err(format!("{d} is outside 1..=1000"))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every family with its constraints, then the golden series.
    List {
        #[command(flatten)]
        output: Output,
    },
    /// One family, an instance of it, or a golden series.
    Render {
        id: String,
        /// Comma-separated integers in the family's parameter order.
        #[arg(long, value_parser = parse_params, allow_hyphen_values = true)]
        params: Option<Params>,
        #[command(flatten)]
        output: Output,
    },
    /// Verify one instance (or a golden label) against its closed form.
    Verify {
        id: String,
        #[arg(long, value_parser = parse_params, allow_hyphen_values = true)]
        params: Option<Params>,
        #[arg(long, value_parser = parse_digits, default_value = "20")]
        digits: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Verify every constraint-passing tuple with max|param| <= bound.
    Sweep {
        /// Family id, or `all`.
        id: String,
        #[arg(long, default_value = "2", allow_hyphen_values = true)]
        bound: i64,
        #[arg(long, value_parser = parse_digits, default_value = "20")]
        digits: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Exact checks of a terminating master identity over a rational grid.
    IdentityCheck {
        #[arg(value_enum)]
        identity: Identity,
        #[arg(long, default_value = "8")]
        s_max: u32,
        /// Grid values for a, b and c as comma-separated rationals; each
        /// defaults to the built-in grid.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Terms and wall time per family. `section2` and `all` expand to sets.
    Bench {
        families: Vec<String>,
        #[arg(long, value_parser = parse_digits, default_value = "30")]
        digits: u32,
        #[command(flatten)]
        output: Output,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        assert_eq!(parse_params("0,0,0,-1").unwrap().0, vec![0, 0, 0, -1]);
        assert_eq!(parse_params(" 1, 2").unwrap().0, vec![1, 2]);
        assert!(parse_params("1,x").is_err());
        assert!(parse_params("").unwrap().0.is_empty());
    }

    #[test]
    fn digits_range() {
        assert!(parse_digits("0").is_err());
        assert!(parse_digits("1001").is_err());
        assert_eq!(parse_digits("1000").unwrap(), 1000);
    }
}
