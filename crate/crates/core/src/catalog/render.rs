use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::family::{ClosedFormSpec, ConcreteSeries, FamilySpec, PrefactorFactor, QuadQ, SummandFactor};
use super::golden::{GoldenSeries, LiteralFactor};
use super::linear::LinearForm;
use crate::exactnum::ExactRational;
use crate::hyperterm::{Side, TermSpec};
use crate::quadfield::ClosedFormConstant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
}

/// Version of the structured records emitted by [`family_record`].
pub const SCHEMA_VERSION: u32 = 1;

fn rat(r: &ExactRational, fmt: Format) -> String {
    match fmt {
        Format::Text => r.to_string(),
        Format::Latex if r.is_integer() => r.to_string(),
        Format::Latex => {
            let sign = if r.is_negative() { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
        }
    }
}

/// Wraps in parentheses when the expression is a sum.
fn group(s: &str, fmt: Format) -> String {
    let inner = s.trim_start_matches('-');
    if inner.contains('+') || inner.contains('-') {
        match fmt {
            Format::Text => format!("({s})"),
            Format::Latex => format!("\\left({s}\\right)"),
        }
    } else {
        s.to_string()
    }
}

fn index(s: &str, fmt: Format) -> String {
    match fmt {
        Format::Text if s.len() == 1 => s.to_string(),
        _ => format!("{{{s}}}"),
    }
}

fn poch_str(base: &ExactRational, idx: &str, power: u32, fmt: Format) -> String {
    let b = rat(base, fmt);
    let mut s = format!("({b})_{}", index(idx, fmt));
    if power > 1 {
        s = match fmt {
            Format::Text => format!("({s})^{power}"),
            Format::Latex => format!("{s}^{{{power}}}"),
        };
    }
    s
}

fn fact_str(idx: &str, bang: &str) -> String {
    if idx.len() == 1 {
        format!("{idx}{bang}")
    } else {
        format!("({idx}){bang}")
    }
}

fn geo_str(base: &ExactRational, exponent: &str, fmt: Format) -> String {
    let e = match fmt {
        Format::Text if exponent.len() == 1 => exponent.to_string(),
        Format::Text => format!("({exponent})"),
        Format::Latex => format!("{{{exponent}}}"),
    };
    let b = if base.is_integer() && !base.is_negative() {
        base.to_string()
    } else {
        group_always(&rat(base, fmt), fmt)
    };
    format!("{b}^{e}")
}

fn group_always(s: &str, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("({s})"),
        Format::Latex => format!("\\left({s}\\right)"),
    }
}

/// Collected factors of a summand before assembly.
#[derive(Default)]
struct Parts {
    sign: Option<String>,
    num: Vec<String>,
    den: Vec<String>,
    poly_num: Vec<String>,
    poly_den: Vec<String>,
}

impl Parts {
    fn push(&mut self, s: String, side: Side) {
        match side {
            Side::Numerator => self.num.push(s),
            Side::Denominator => self.den.push(s),
        }
    }

    fn push_poly(&mut self, s: String, side: Side) {
        match side {
            Side::Numerator => self.poly_num.push(s),
            Side::Denominator => self.poly_den.push(s),
        }
    }

    /// `base^{exponent}` with a negative base split into `(-1)^{exponent}·|base|^{exponent}`
    /// and `1/n` moved under the fraction bar.
    fn push_geo(&mut self, base: &ExactRational, exponent: &str, fmt: Format) {
        if base.is_one() {
            return;
        }
        let mut b = base.clone();
        if b.is_negative() {
            self.sign = Some(geo_str(&ExactRational::from(-1), exponent, fmt));
            b = -b;
        }
        if b.is_one() {
            return;
        }
        if b.numer().is_one() {
            let inv = ExactRational::from_integer(b.denom().clone());
            self.poly_den.push(geo_str(&inv, exponent, fmt));
        } else {
            self.poly_num.push(geo_str(&b, exponent, fmt));
        }
    }

    fn assemble(&self, fmt: Format) -> String {
        let sign = self.sign.clone().unwrap_or_default();
        match fmt {
            Format::Text => {
                let mut num: Vec<String> = self.num.clone();
                num.extend(self.poly_num.iter().map(|s| group(s, fmt)));
                let mut den: Vec<String> = self.den.clone();
                den.extend(self.poly_den.iter().map(|s| group(s, fmt)));
                let n = if num.is_empty() { "1".to_string() } else { num.join("*") };
                let mut out = if sign.is_empty() { n } else { format!("{sign}*{n}") };
                if !den.is_empty() {
                    let d = den.join("*");
                    if den.len() > 1 {
                        out = format!("{out}/({d})");
                    } else {
                        out = format!("{out}/{d}");
                    }
                }
                out
            }
            Format::Latex => {
                let mut out = sign;
                out.push_str(&latex_frac(&self.num, &self.den, false));
                if !self.poly_num.is_empty() || !self.poly_den.is_empty() {
                    out.push_str(&latex_frac(&self.poly_num, &self.poly_den, true));
                }
                if out.is_empty() {
                    out.push('1');
                }
                out
            }
        }
    }
}

fn latex_join(items: &[String], polys: bool) -> String {
    if items.is_empty() {
        return "1".into();
    }
    if items.len() == 1 {
        return items[0].clone();
    }
    items
        .iter()
        .map(|s| if polys && !s.contains('^') { group(s, Format::Text) } else { s.clone() })
        .collect::<Vec<_>>()
        .join("\\,")
}

fn latex_frac(num: &[String], den: &[String], polys: bool) -> String {
    if num.is_empty() && den.is_empty() {
        return String::new();
    }
    if den.is_empty() && polys {
        return num
            .iter()
            .map(|s| if s.contains('^') { s.clone() } else { group(s, Format::Latex) })
            .collect::<Vec<_>>()
            .join("\\,");
    }
    if den.is_empty() {
        return latex_join(num, polys);
    }
    format!("\\frac{{{}}}{{{}}}", latex_join(num, polys), latex_join(den, polys))
}

fn linear_str(alpha: i64, beta: &ExactRational) -> String {
    let mut s = match alpha {
        0 => String::new(),
        1 => "k".into(),
        -1 => "-k".into(),
        a => format!("{a}k"),
    };
    if !beta.is_zero() || s.is_empty() {
        if !s.is_empty() && !beta.is_negative() {
            s.push('+');
        }
        s.push_str(&beta.to_string());
    }
    s
}

fn quad_latex(x: &QuadQ) -> String {
    let mut out = String::new();
    for (c, root) in [(&x.a, ""), (&x.b, "\\sqrt{2}"), (&x.c, "\\sqrt{3}"), (&x.d, "\\sqrt{6}")] {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !(mag.is_one() && !root.is_empty()) {
            out.push_str(&rat(&mag, Format::Latex));
        }
        out.push_str(root);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn quad_str(x: &QuadQ, fmt: Format) -> String {
    match fmt {
        Format::Text => x.to_string(),
        Format::Latex => quad_latex(x),
    }
}

fn pi_str(power: i32, fmt: Format) -> String {
    let p = if fmt == Format::Latex { "\\pi" } else { "pi" };
    match power.abs() {
        0 => String::new(),
        1 => p.to_string(),
        e => format!("{p}^{e}"),
    }
}

fn product(parts: &[String], fmt: Format) -> String {
    let parts: Vec<&String> = parts.iter().filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        return "1".into();
    }
    let sep = if fmt == Format::Latex { "\\," } else { "*" };
    parts.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(sep)
}

fn fraction(num: &str, den: &str, fmt: Format) -> String {
    if den == "1" {
        return num.to_string();
    }
    match fmt {
        Format::Text => {
            if den.contains('*') || den.contains(' ') {
                format!("{num}/({den})")
            } else {
                format!("{num}/{den}")
            }
        }
        Format::Latex => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

/// Symbolic closed form, e.g. `2*pi/(3*sqrt(3))`.
pub fn render_closed_form(c: &ClosedFormSpec, fmt: Format) -> String {
    let coeff_part = |scale: &ExactRational, q: &QuadQ| -> Vec<String> {
        let mut v = Vec::new();
        if !scale.is_one() {
            v.push(rat(scale, fmt));
        }
        if !q.is_rational() || !q.a.is_one() {
            v.push(group(&quad_str(q, fmt), fmt));
        }
        v
    };
    let mut num = coeff_part(&c.num_scale, &c.num);
    let mut den = coeff_part(&c.den_scale, &c.den);
    if c.pi_power > 0 {
        num.push(pi_str(c.pi_power, fmt));
    } else if c.pi_power < 0 {
        den.push(pi_str(c.pi_power, fmt));
    }
    if let Some((base, exp)) = &c.power {
        if base.numer().is_one() && !base.is_one() {
            den.push(geo_str(&ExactRational::from_integer(base.denom().clone()), &exp.to_string(), fmt));
        } else {
            num.push(geo_str(base, &exp.to_string(), fmt));
        }
    }
    fraction(&product(&num, fmt), &product(&den, fmt), fmt)
}

/// Concrete closed form `coeff·π^e`.
pub fn render_constant(c: &ClosedFormConstant, fmt: Format) -> String {
    let q = c.coeff();
    let pi = pi_str(c.pi_power(), fmt);
    if q.is_rational() {
        let r = &q.a;
        let n = ExactRational::from_integer(r.numer().clone());
        let d = ExactRational::from_integer(r.denom().clone());
        let mut num = Vec::new();
        if !n.is_one() || c.pi_power() <= 0 {
            num.push(rat(&n, fmt));
        }
        let mut den = Vec::new();
        if !d.is_one() {
            den.push(rat(&d, fmt));
        }
        if c.pi_power() > 0 {
            num.push(pi);
        } else if c.pi_power() < 0 {
            den.push(pi);
        }
        return fraction(&product(&num, fmt), &product(&den, fmt), fmt);
    }
    let coeff = group(&quad_str(q, fmt), fmt);
    match c.pi_power() {
        0 => coeff,
        p if p > 0 => product(&[coeff, pi], fmt),
        _ => fraction(&coeff, &pi, fmt),
    }
}

fn sum_str(start: u64, body: &str, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("sum_{{k>={start}}} {body}"),
        Format::Latex => format!("\\sum_{{k={start}}}^{{\\infty}} {body}"),
    }
}

fn literal_fact_index(c: i64, d: i64) -> String {
    linear_str(c, &ExactRational::from(d))
}

pub fn render_golden(g: &GoldenSeries, fmt: Format) -> String {
    let mut parts = Parts::default();
    for f in &g.factors {
        match f {
            LiteralFactor::Fact { c, d, power, side } => {
                let mut s = fact_str(&literal_fact_index(*c, *d), "!");
                if *power > 1 {
                    s = match fmt {
                        Format::Text => format!("({s})^{power}"),
                        Format::Latex => format!("({s})^{{{power}}}"),
                    };
                }
                parts.push(s, *side);
            }
            LiteralFactor::OddDoubleFact { c, d, side } => {
                parts.push(fact_str(&literal_fact_index(*c, *d), "!!"), *side)
            }
            LiteralFactor::Poch { base, power, side } => parts.push(poch_str(base, "k", *power, fmt), *side),
            LiteralFactor::Linear { alpha, beta, side } => {
                parts.push_poly(linear_str(*alpha, &ExactRational::from(*beta)), *side)
            }
            LiteralFactor::Power { base } => parts.push_geo(base, "k", fmt),
        }
    }
    let body = sum_str(g.start, &parts.assemble(fmt), fmt);
    format!("{body} = {}", render_closed_form(&g.lhs, fmt))
}

fn term_parts(t: &TermSpec, fmt: Format) -> Parts {
    let mut parts = Parts::default();
    let k_plus = |o: i64| linear_str(1, &ExactRational::from(o));
    for p in &t.poch {
        parts.push(poch_str(&p.base, &k_plus(p.offset), 1, fmt), p.side);
    }
    for f in &t.fact {
        parts.push(fact_str(&k_plus(f.offset), "!"), f.side);
    }
    for p in &t.poly_num {
        parts.push_poly(linear_str(p.alpha, &p.beta), Side::Numerator);
    }
    for p in &t.poly_den {
        parts.push_poly(linear_str(p.alpha, &p.beta), Side::Denominator);
    }
    parts.push_geo(&t.geo_base, "k", fmt);
    parts
}

/// `lhs = c·Σ term` for an instantiated family member.
pub fn render_series(s: &ConcreteSeries, fmt: Format) -> String {
    let body = sum_str(s.term.start_index, &term_parts(&s.term, fmt).assemble(fmt), fmt);
    let c = s.total_scale();
    let mut rhs = body;
    if !s.correction.is_zero() {
        let corr = rat(&(&s.correction * &s.term.scale.recip().expect("nonzero scale")), fmt);
        rhs = format!("{} + {rhs}", corr);
        rhs = group_always(&rhs, fmt);
    }
    if !c.is_one() {
        let sep = if fmt == Format::Latex { "\\," } else { "*" };
        rhs = format!("{}{sep}{rhs}", group(&rat(&c, fmt), fmt));
    }
    format!("{} = {rhs}", render_constant(&s.lhs, fmt))
}

fn form_k(offset: &LinearForm) -> String {
    offset.with_k(1)
}

/// Parametric rendering of a family, constraints included.
pub fn render_family(f: &FamilySpec, fmt: Format) -> String {
    let mut parts = Parts::default();
    for s in &f.summand {
        match s {
            SummandFactor::Poch { base, offset, side } => parts.push(poch_str(base, &form_k(offset), 1, fmt), *side),
            SummandFactor::Fact { offset, side } => parts.push(fact_str(&form_k(offset), "!"), *side),
            SummandFactor::OddDoubleFact { offset, side } => {
                let mut two = *offset;
                two.coeffs.iter_mut().for_each(|c| *c *= 2);
                two.constant = 2 * two.constant + 1;
                parts.push(fact_str(&two.with_k(2), "!!"), *side)
            }
            SummandFactor::Linear { alpha, beta, side } => parts.push_poly(beta.with_k(*alpha), *side),
            SummandFactor::Power { base, offset } => parts.push_geo(base, &form_k(offset), fmt),
        }
    }
    let mut pre = Parts::default();
    for p in &f.prefactor {
        match p {
            PrefactorFactor::Poch { base, index, side } => pre.push(poch_str(base, &index.to_string(), 1, fmt), *side),
            PrefactorFactor::Fact { index, side } => pre.push(fact_str(&index.to_string(), "!"), *side),
        }
    }
    let mut rhs = sum_str(0, &parts.assemble(fmt), fmt);
    if !pre.num.is_empty() || !pre.den.is_empty() {
        let sep = if fmt == Format::Latex { "\\," } else { "*" };
        let p = pre.assemble(fmt);
        let p = if fmt == Format::Text && !pre.den.is_empty() { group_always(&p, fmt) } else { p };
        rhs = format!("{p}{sep}{rhs}");
    }
    let cons: Vec<String> = f.constraints.iter().map(|c| c.to_string()).collect();
    let cond = match fmt {
        Format::Text => format!("  [min{{{}}} >= 0]", cons.join(", ")),
        Format::Latex => format!("\\qquad \\min\\{{{}\\}}\\geq 0", cons.join(",")),
    };
    format!("{} = {rhs}{cond}", render_closed_form(&f.lhs, fmt))
}

/// One line of the structured catalog export.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FamilyRecord {
    pub schema_version: u32,
    pub kind: &'static str,
    pub id: String,
    pub params: Vec<String>,
    pub constraints: Vec<String>,
    pub lhs: String,
    pub pi_power: i32,
    pub formula: String,
}

pub fn family_record(f: &FamilySpec) -> FamilyRecord {
    FamilyRecord {
        schema_version: SCHEMA_VERSION,
        kind: "family",
        id: f.family_id.to_string(),
        params: f.param_names.iter().map(|c| c.to_string()).collect(),
        constraints: f.constraints.iter().map(|c| format!("{c} >= 0")).collect(),
        lhs: render_closed_form(&f.lhs, Format::Text),
        pi_power: f.lhs.pi_power,
        formula: render_family(f, Format::Text),
    }
}

pub fn golden_record(g: &GoldenSeries) -> FamilyRecord {
    FamilyRecord {
        schema_version: SCHEMA_VERSION,
        kind: "golden",
        id: g.label.to_string(),
        params: Vec::new(),
        constraints: Vec::new(),
        lhs: render_closed_form(&g.lhs, Format::Text),
        pi_power: g.lhs.pi_power,
        formula: render_golden(g, Format::Text),
    }
}

/// Standalone LaTeX document listing every family and golden series.
pub fn latex_document(families: &[FamilySpec], goldens: &[GoldenSeries]) -> String {
    let mut out = String::from(
        "\\documentclass{article}\n\\usepackage{amsmath}\n\\usepackage[margin=1cm,landscape]{geometry}\n\\begin{document}\n\\section*{Families}\n",
    );
    for f in families {
        out.push_str(&format!(
            "\\paragraph{{{}}}\n\\begin{{multline*}}\n{}\n\\end{{multline*}}\n",
            f.family_id,
            render_family(f, Format::Latex)
        ));
    }
    out.push_str("\\section*{Example series}\n");
    for g in goldens {
        out.push_str(&format!(
            "\\paragraph{{{}}}\n\\[\n{}\n\\]\n",
            g.label,
            render_golden(g, Format::Latex)
        ));
    }
    out.push_str("\\end{document}\n");
    out
}
