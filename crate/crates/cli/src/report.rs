use clawcolor::{AtomTree, C5Structure, C7Structure, Route, Witness};
use serde::Serialize;

/// The JSON document printed by `--json`. Absent fields are omitted; field
/// order is fixed.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_class: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chromatic_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_prime: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_colors: Option<Vec<EdgeColor>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub atoms: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<Vec<AtomTree>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes: Option<Vec<Route>>,
    /// A maximum clique; its size certifies optimality when it equals the
    /// number of colors.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clique: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    pub timing_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct EdgeColor {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

#[derive(Debug, Serialize)]
#[serde(tag = "hole", rename_all = "snake_case")]
pub enum StructureReport {
    C5 {
        classes: C5Structure,
        violations: Vec<String>,
    },
    C7 {
        classes: C7Structure,
    },
    None,
}
