//! Registry of the parameterized families and the printed example series.

mod families;
mod family;
mod golden;
mod linear;
mod render;

use std::sync::OnceLock;

pub use family::{
    ClosedFormSpec, ConcreteSeries, FamilySpec, FamilySummary, PrefactorFactor, QuadQ, SummandFactor,
};
pub use golden::{literal_partial_sum, GoldenSeries, LiteralFactor};
pub use linear::{LinearForm, PARAM_NAMES};
pub use render::{
    family_record, golden_record, latex_document, render_closed_form, render_constant, render_family,
    render_golden, render_series, FamilyRecord, Format, SCHEMA_VERSION,
};

use crate::error::{Error, Result, Violation};

static FAMILIES: OnceLock<Vec<FamilySpec>> = OnceLock::new();
static GOLDENS: OnceLock<Vec<GoldenSeries>> = OnceLock::new();

pub fn families() -> &'static [FamilySpec] {
    FAMILIES.get_or_init(|| {
        let all = families::all_families();
        debug_assert!(all.iter().all(|f| family::check_param_names(&f.param_names)));
        all
    })
}

pub fn goldens() -> &'static [GoldenSeries] {
    GOLDENS.get_or_init(golden::all_goldens)
}

pub fn find(family_id: &str) -> Result<&'static FamilySpec> {
    families()
        .iter()
        .find(|f| f.family_id == family_id)
        .ok_or_else(|| Error::UnknownFamily(family_id.to_string()))
}

pub fn golden(label: &str) -> Result<&'static GoldenSeries> {
    goldens()
        .iter()
        .find(|g| g.label == label)
        .ok_or_else(|| Error::UnknownGolden(label.to_string()))
}

pub fn list_families() -> Vec<FamilySummary> {
    families().iter().map(FamilySpec::summary).collect()
}

/// Empty when every constraint holds.
pub fn check_constraints(family_id: &str, params: &[i64]) -> Result<Vec<Violation>> {
    find(family_id)?.violations(params)
}

pub fn instantiate(family_id: &str, params: &[i64]) -> Result<ConcreteSeries> {
    find(family_id)?.instantiate(params)
}

#[cfg(test)]
mod tests;
