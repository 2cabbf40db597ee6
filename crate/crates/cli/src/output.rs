use std::fmt::Write;
use std::str::FromStr;

use chipfire::{BigInt, CriticalGroup, IntPoly};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    /// Aligned `key  value` lines.
    Table,
}

impl Format {
    pub fn render(self, record: &OutputRecord) -> String {
        match self {
            Format::Json => serde_json::to_string(record).expect("records serialize"),
            Format::Table => render_table(record),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub input_summary: String,
    pub result: Payload,
}

impl OutputRecord {
    /// False only for a verification whose check failed.
    pub fn holds(&self) -> bool {
        match &self.result {
            Payload::Group(_) => true,
            Payload::Cone(r) => r.holds,
            Payload::Tree(r) => r.holds,
            Payload::Join(r) => r.holds,
            Payload::Eigen(r) => r.holds,
            Payload::Sample(r) => r.holds,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Group(GroupPayload),
    Cone(ConePayload),
    Tree(TreePayload),
    Join(JoinPayload),
    Eigen(EigenPayload),
    Sample(SamplePayload),
}

/// Invariant factors as exact JSON integers, the order as a decimal string.
#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub invariant_factors: Vec<Number>,
    pub order: String,
}

impl From<&CriticalGroup> for GroupSummary {
    fn from(g: &CriticalGroup) -> Self {
        GroupSummary {
            invariant_factors: g.invariant_factors().iter().map(number).collect(),
            order: g.order().to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupPayload {
    pub vertices: usize,
    pub edges: usize,
    pub removed_vertex: usize,
    pub group: GroupSummary,
    pub spanning_trees: String,
    /// Ascending coefficients of `det(xI − L)/x`.
    pub char_poly: Vec<Number>,
    pub char_poly_text: String,
}

impl GroupPayload {
    pub fn new(
        vertices: usize,
        edges: usize,
        removed_vertex: usize,
        group: &CriticalGroup,
        spanning_trees: &BigInt,
        char_poly: &IntPoly,
    ) -> Self {
        GroupPayload {
            vertices,
            edges,
            removed_vertex,
            group: group.into(),
            spanning_trees: spanning_trees.to_string(),
            char_poly: char_poly.coefficients().iter().map(number).collect(),
            char_poly_text: char_poly.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConePayload {
    pub base_vertices: usize,
    pub cone_size: usize,
    pub pic0: GroupSummary,
    pub subgroup: GroupSummary,
    pub quotient_h: GroupSummary,
    pub p_at_minus_n: String,
    pub order_formula_holds: bool,
    pub subgroup_is_expected: bool,
    pub size_formula_holds: bool,
    pub splits: bool,
    pub h_generator_count: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TreePayload {
    pub cone_size: usize,
    pub leaf_count: usize,
    pub h_generators: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct JoinPayload {
    pub factor_vertex_counts: Vec<usize>,
    pub total_vertices: usize,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenPayload {
    pub cone_size: usize,
    pub eigenvalue: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SamplePayload {
    pub which: String,
    pub seed: u64,
    pub graphs: usize,
    pub max_vertices: usize,
    pub max_cone_size: usize,
    pub instances: usize,
    pub failures: usize,
    /// Cone checks only: instances whose sequence does not split.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_split: Option<usize>,
    pub holds: bool,
}

fn number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("decimal integers are valid JSON numbers")
}

fn render_table(record: &OutputRecord) -> String {
    let value = serde_json::to_value(record).expect("records serialize");
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (key, value) in rows {
        writeln!(out, "{key:<width$}  {value}").unwrap();
    }
    out.pop();
    out
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}
