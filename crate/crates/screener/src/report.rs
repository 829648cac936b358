//! Case reports and their text and JSON renderings. The JSON layout is
//! described by `schema/report-v1.json`.

use altsieve::sieve::LineRule;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

pub const SCHEMA_VERSION: &str = "report-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub schema: String,
    pub config: ConfigEcho,
    pub provenance: Provenance,
    pub candidates: Vec<Candidate>,
    pub summary: Summary,
}

impl Default for CaseReport {
    fn default() -> Self {
        CaseReport {
            schema: SCHEMA_VERSION.to_string(),
            config: ConfigEcho::default(),
            provenance: Provenance::default(),
            candidates: vec![],
            summary: Summary::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub group: String,
    pub cover: String,
    pub target: String,
    pub prime: u32,
    pub module: String,
    pub trace_file: Option<String>,
    pub torus_traces: bool,
    pub strict_parity: bool,
    pub collapse_out_orbits: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// Trace tables merged into the constraints, in load order.
    pub trace_sources: Vec<String>,
    /// Element orders constrained on each module (`vmin`, `lg`).
    pub constrained_orders: BTreeMap<String, Vec<u64>>,
    /// Orders whose table lists every class, irrational values included.
    pub complete_orders: Vec<u64>,
    /// p'-element orders of the subgroup with no trace data.
    pub missing_orders: Vec<u64>,
    /// `E7 p=5 (quoted)` etc.
    pub jordan_table: Option<String>,
    /// The p-element used by the sweep, or why the sweep was skipped.
    pub jordan_sweep: String,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub candidates: usize,
    pub fixes_line: usize,
    pub eliminated_by_jordan: usize,
    pub survives: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub vmin: Option<String>,
    pub lg: Option<String>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    FixesLine {
        /// Module on which the rule applies.
        module: String,
        rule: LineRule,
        anchor: String,
        detail: String,
    },
    EliminatedByJordan {
        detail: String,
    },
    Survives {
        structures: Vec<Structure>,
        caveats: Vec<String>,
    },
}

impl Verdict {
    pub fn survives(&self) -> bool {
        matches!(self, Verdict::Survives { .. })
    }
}

/// A realization on one module with the Jordan type of the p-element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub module: String,
    /// Further realizations with the same Jordan type.
    pub alternatives: Vec<String>,
    pub jordan: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structure {
    pub vmin: Option<Shape>,
    pub lg: Option<Shape>,
    /// Unipotent classes consistent with the Jordan types, when identified.
    pub classes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl CaseReport {
    pub fn survivors(&self) -> impl Iterator<Item = &Candidate> {
        self.candidates.iter().filter(|c| c.verdict.survives())
    }

    pub(crate) fn tally(&mut self) {
        let mut s = Summary { candidates: self.candidates.len(), ..Summary::default() };
        for c in &self.candidates {
            match c.verdict {
                Verdict::FixesLine { .. } => s.fixes_line += 1,
                Verdict::EliminatedByJordan { .. } => s.eliminated_by_jordan += 1,
                Verdict::Survives { .. } => s.survives += 1,
            }
        }
        self.summary = s;
    }
}

fn module_name(kind: &str) -> &str {
    match kind {
        "vmin" => "V_min",
        "lg" => "L(G)",
        k => k,
    }
}

pub fn render_report(r: &CaseReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut v = serde_json::to_vec_pretty(r).expect("report serializes");
            v.push(b'\n');
            v
        }
        Format::Text => render_text(r).into_bytes(),
    }
}

fn render_text(r: &CaseReport) -> String {
    let mut s = String::new();
    let c = &r.config;
    if c.group.is_empty() {
        return "empty report\n".to_string();
    }
    let _ = writeln!(s, "{} in {}, p = {}, module {}", c.group, c.target, c.prime, c.module);
    let pv = &r.provenance;
    let _ = writeln!(s, "traces: {}", pv.trace_sources.join("; "));
    for (k, orders) in &pv.constrained_orders {
        let o: Vec<String> = orders.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "constrained orders on {}: {}", module_name(k), o.join(","));
    }
    if !pv.missing_orders.is_empty() {
        let o: Vec<String> = pv.missing_orders.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "no trace data for orders: {}", o.join(","));
    }
    let _ = writeln!(s, "Jordan sweep: {}", pv.jordan_sweep);
    for n in &pv.notes {
        let _ = writeln!(s, "note: {n}");
    }
    for (i, cand) in r.candidates.iter().enumerate() {
        let mut head = Vec::new();
        if let Some(v) = &cand.vmin {
            head.push(format!("V_min {v}"));
        }
        if let Some(l) = &cand.lg {
            head.push(format!("L(G) {l}"));
        }
        let _ = writeln!(s, "\n[{}] {}", i + 1, head.join(" | "));
        match &cand.verdict {
            Verdict::FixesLine { module, rule, anchor, detail } => {
                let _ = writeln!(s, "    fixes a line on {}: {rule} [{anchor}]", module_name(module));
                if !detail.is_empty() {
                    let _ = writeln!(s, "    {detail}");
                }
            }
            Verdict::EliminatedByJordan { detail } => {
                let _ = writeln!(s, "    eliminated by Jordan blocks: {detail}");
            }
            Verdict::Survives { structures, caveats } => {
                let _ = writeln!(s, "    survives");
                for st in structures {
                    let mut parts = Vec::new();
                    for (name, sh) in [("V_min", &st.vmin), ("L(G)", &st.lg)] {
                        if let Some(sh) = sh {
                            let mut all = vec![sh.module.clone()];
                            all.extend(sh.alternatives.iter().cloned());
                            parts.push(format!("{name} {} ({})", all.join(" or "), sh.jordan));
                        }
                    }
                    if !st.classes.is_empty() {
                        parts.push(format!("class {}", st.classes.join(" or ")));
                    }
                    let _ = writeln!(s, "      {}", parts.join("; "));
                }
                for cv in caveats {
                    let _ = writeln!(s, "      caveat: {cv}");
                }
            }
        }
    }
    let m = &r.summary;
    let _ = writeln!(
        s,
        "\n{} candidates: {} fix a line, {} eliminated by Jordan blocks, {} survive",
        m.candidates, m.fixes_line, m.eliminated_by_jordan, m.survives
    );
    s
}
