//! Embedded data: simple-module catalogues with construction recipes,
//! Brauer trees, exceptional-group trace and dimension tables, and unipotent
//! Jordan-block tables.
//!
//! Files live under `data/` and are compiled in; `data/SHA256SUMS` records
//! their checksums.

mod build;
mod catalogue;
mod embedded;
pub mod recipe;
mod targets;
mod torus;
mod trees;

pub use build::{audit, build_catalogue, p_regular_classes};
pub use catalogue::{
    catalogued, construct, construction, constructions, realize, simple, simples, splitting_field, Construction,
    SimpleInfo,
};
pub use embedded::checksum_mismatches;
pub use targets::{
    dims, fact, jordan_table, load_trace_file, parse_trace_file, target, JordanEntry, JordanTable, ModuleKind,
    TableScope, TargetGroupInfo, TraceRow, TraceValue,
};
pub use torus::{torus_trace_rows, trace_file_text, weights, MAX_TORUS_POINTS};
pub use trees::{brauer_tree, brauer_trees, parse_tree, BrauerTreeLine};

use serde::{Deserialize, Serialize};

/// One line of a `data/simples/<n>_<p>.csv` file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct Row {
    pub label: String,
    pub dim: usize,
    pub h1: usize,
    pub block: usize,
    pub field: String,
    pub dual: String,
    pub out_orbit: String,
    pub recipe: String,
    pub fingerprint: String,
}

/// `sha256  name` lines for every file, for writing `data/SHA256SUMS`.
pub fn checksum_line(name: &str, text: &str) -> String {
    format!("{}  {name}", embedded::sha256_hex(text))
}
