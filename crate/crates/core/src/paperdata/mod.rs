//! Catalogue of the explicit structures: parametric families for Bₙ and
//! Dₙ, printed small-rank rows, exceptional matrices and product examples,
//! together with closed-form trace values for the families.
//!
//! The catalogue lives in versioned JSON under `data/`. The files are
//! embedded at build time; `BEAUVILLE_DATA_DIR` points at a replacement
//! directory with the same layout.

mod families;
mod realize;
mod traces;

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::algebra::MatrixLiteral;
use crate::beauville::BeauvilleError;
use crate::groups::{CoxeterType, GroupError};

pub use families::{bn_even, bn_odd, bn_odd_effective, dn_even, dn_odd, dn_odd_corrected, Family};
pub use realize::{parse_structure, record_group, verify_record, verify_record_in, RecordOutcome, RecordVerdict};
pub use traces::{trace_oracle, TraceCase, TraceRole, TraceTable};

pub const DATA_SCHEMA_VERSION: u32 = 1;

const STRUCTURE_FILES: [(&str, &str); 4] = [
    ("b_small.json", include_str!("../../../../data/structures/b_small.json")),
    ("d_small.json", include_str!("../../../../data/structures/d_small.json")),
    ("exceptional.json", include_str!("../../../../data/structures/exceptional.json")),
    ("products.json", include_str!("../../../../data/structures/products.json")),
];
const TRACES: &str = include_str!("../../../../data/oracles/traces.json");

#[derive(Debug, thiserror::Error)]
pub enum PaperError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed catalogue file {file}: {message}")]
    Data { file: String, message: String },
    #[error("out of range: {0}")]
    Range(String),
    #[error("no catalogue entry: {0}")]
    Missing(String),
    #[error("malformed element {name}: {message}")]
    Malformed { name: String, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Beauville(#[from] BeauvilleError),
}

/// One element as stored: cycle notation or an exact matrix literal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementText {
    Cycles(String),
    Matrix(MatrixLiteral),
}

impl From<String> for ElementText {
    fn from(s: String) -> Self {
        ElementText::Cycles(s)
    }
}

impl ElementText {
    pub fn cycles(&self) -> Option<&str> {
        match self {
            ElementText::Cycles(s) => Some(s),
            ElementText::Matrix(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Notation {
    /// Cycles with `_` marking a point whose column carries −1.
    Signed,
    /// Ordinary permutations of `realization.degree` points.
    Plain,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Family,
    Table,
    Figure,
    Product,
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Printed,
    Corrected,
    Replacement,
}

/// What verification of a record is known to give.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
    /// The element strings themselves are invalid.
    Malformed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Elements {
    pub x1: ElementText,
    pub y1: ElementText,
    pub t1: ElementText,
    pub x2: ElementText,
    pub y2: ElementText,
    pub t2: ElementText,
}

impl Elements {
    pub fn named(&self) -> [(&'static str, &ElementText); 6] {
        [("x1", &self.x1), ("y1", &self.y1), ("t1", &self.t1), ("x2", &self.x2), ("y2", &self.y2), ("t2", &self.t2)]
    }
}

/// Permutation realization of a group that is not built from its Coxeter
/// presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Realization {
    pub degree: usize,
    pub generators: Vec<String>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureRecord {
    pub id: String,
    /// `B12`, `E8`, or a product such as `H3xH3`.
    pub group: String,
    pub notation: Notation,
    pub origin: Origin,
    pub status: Status,
    pub expect: Expect,
    pub elements: Elements,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<Realization>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct CatalogueFile {
    schema_version: u32,
    records: Vec<StructureRecord>,
}

fn data_dir() -> Option<PathBuf> {
    std::env::var_os("BEAUVILLE_DATA_DIR").map(PathBuf::from)
}

/// Contents of `data/<sub>/<name>`, from the override directory if set.
fn read_data(sub: &str, name: &str, embedded: &str) -> Result<String, PaperError> {
    match data_dir() {
        Some(dir) => {
            let path = dir.join(sub).join(name);
            std::fs::read_to_string(&path)
                .map_err(|e| PaperError::Io { path: path.display().to_string(), message: e.to_string() })
        }
        None => Ok(embedded.to_string()),
    }
}

fn parse_versioned<T: serde::de::DeserializeOwned>(file: &str, text: &str) -> Result<T, PaperError> {
    let data = |message: String| PaperError::Data { file: file.to_string(), message };
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| data(e.to_string()))?;
    let version = value.get("schemaVersion").and_then(|v| v.as_u64());
    if version != Some(u64::from(DATA_SCHEMA_VERSION)) {
        return Err(data(format!("schemaVersion {version:?}, expected {DATA_SCHEMA_VERSION}")));
    }
    serde_json::from_value(value).map_err(|e| data(e.to_string()))
}

/// Every stored record, in file order. Ids are unique.
pub fn catalogue() -> Result<Vec<StructureRecord>, PaperError> {
    let mut out: Vec<StructureRecord> = Vec::new();
    for (name, embedded) in STRUCTURE_FILES {
        let text = read_data("structures", name, embedded)?;
        let file: CatalogueFile = parse_versioned(name, &text)?;
        debug_assert_eq!(file.schema_version, DATA_SCHEMA_VERSION);
        out.extend(file.records);
    }
    let mut seen = BTreeMap::new();
    for r in &out {
        if seen.insert(r.id.as_str(), ()).is_some() {
            return Err(PaperError::Data { file: "structures".into(), message: format!("duplicate id {}", r.id) });
        }
    }
    Ok(out)
}

pub fn record(id: &str) -> Result<StructureRecord, PaperError> {
    catalogue()?.into_iter().find(|r| r.id == id).ok_or_else(|| PaperError::Missing(id.to_string()))
}

/// The small-rank row as printed: B for 5 ≤ n ≤ 10, D for 5 ≤ n ≤ 9.
pub fn small_case(family: Family, n: usize) -> Result<StructureRecord, PaperError> {
    let range = match family {
        Family::B => 5..=10,
        Family::D => 5..=9,
    };
    if !range.contains(&n) {
        return Err(PaperError::Range(format!("{family}{n}: small cases cover {range:?}")));
    }
    record(&format!("{family}{n}-printed"))
}

/// The exceptional structure as printed; see [`paper_structure`] for the
/// one that verifies.
pub fn exceptional(t: CoxeterType) -> Result<StructureRecord, PaperError> {
    match t {
        CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 | CoxeterType::H4 => record(&format!("{t}-printed")),
        _ => Err(PaperError::Range(format!("{t} has no printed matrices"))),
    }
}

pub fn product_examples() -> Result<Vec<StructureRecord>, PaperError> {
    Ok(catalogue()?.into_iter().filter(|r| r.origin == Origin::Product).collect())
}

/// The record expected to verify for `t`: the corrected form where the
/// printed one has a typo, a flagged replacement where no typo explains the
/// failure, and the printed structure otherwise.
pub fn paper_structure(t: CoxeterType) -> Result<StructureRecord, PaperError> {
    let stored = |name: String| -> Result<StructureRecord, PaperError> {
        let all = catalogue()?;
        ["corrected", "replacement", "printed"]
            .iter()
            .find_map(|s| all.iter().find(|r| r.id == format!("{name}-{s}")).cloned())
            .ok_or(PaperError::Missing(name))
    };
    match t {
        CoxeterType::B(n) if (5..=10).contains(&n) => stored(t.to_string()),
        CoxeterType::B(n) if n >= 11 && n % 2 == 0 => bn_even(n),
        CoxeterType::B(n) if n >= 11 => bn_odd_effective(n),
        CoxeterType::D(n) if (5..=9).contains(&n) => stored(t.to_string()),
        CoxeterType::D(n) if n >= 10 && n % 2 == 0 => dn_even(n),
        CoxeterType::D(n) if n >= 10 => dn_odd_corrected(n),
        CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 | CoxeterType::H4 => stored(t.to_string()),
        _ => Err(PaperError::Missing(format!("no explicit structure for {t}"))),
    }
}

/// Product record by group name, e.g. `H3xH3`.
pub fn paper_product(name: &str) -> Result<StructureRecord, PaperError> {
    product_examples()?
        .into_iter()
        .find(|r| r.group == name && r.expect == Expect::Pass)
        .ok_or_else(|| PaperError::Missing(name.to_string()))
}

/// The trace tables.
pub fn trace_tables() -> Result<BTreeMap<TraceCase, TraceTable>, PaperError> {
    let text = read_data("oracles", "traces.json", TRACES)?;
    traces::parse_tables(&text)
}
