//! Exceptional target groups: module dimensions, semisimple traces and
//! unipotent Jordan tables.
//!
//! Trace files are CSV with header `group,order,class_id,kind,trace`. The
//! trace column is an integer, an eigenvalue-multiplicity vector
//! `[a0;a1;...;a_{m-1}]` (a_j counts the eigenvalue ζ_m^j), or a cyclotomic
//! integer `c[c0;c1;...]` in the power basis of ℚ(ζ_m) reduced modulo Φ_m.
//! Rows sharing `(order, class_id)` describe one class, so its V_min and
//! L(G) values are paired.

use super::embedded;
use crate::error::{parse_err, Error, Result};
use crate::jordan::JordanType;
use crate::meataxe::Cyclo;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Vmin,
    Lg,
}

impl ModuleKind {
    pub fn parse(s: &str) -> Option<ModuleKind> {
        match s {
            "vmin" => Some(ModuleKind::Vmin),
            "lg" => Some(ModuleKind::Lg),
            _ => None,
        }
    }
    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Vmin => "vmin",
            ModuleKind::Lg => "lg",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TraceValue {
    Int(i64),
    Eigen(Vec<u32>),
    Cyclo(Vec<i64>),
}

impl TraceValue {
    /// The value as a cyclotomic integer for elements of order m.
    pub fn to_cyclo(&self, m: u64) -> Cyclo {
        match self {
            TraceValue::Int(n) => Cyclo::integer(m, *n),
            TraceValue::Eigen(v) => Cyclo::from_counts(v),
            TraceValue::Cyclo(c) => {
                let mut z = Cyclo::integer(m, 0);
                for (i, &x) in c.iter().enumerate().take(z.coeffs.len()) {
                    z.coeffs[i] = x;
                }
                z
            }
        }
    }

    fn shift(&self, by: i64) -> TraceValue {
        match self {
            TraceValue::Int(n) => TraceValue::Int(n + by),
            TraceValue::Eigen(v) => {
                let mut v = v.clone();
                v[0] = (v[0] as i64 + by).max(0) as u32;
                TraceValue::Eigen(v)
            }
            TraceValue::Cyclo(c) => {
                let mut c = c.clone();
                c[0] += by;
                TraceValue::Cyclo(c)
            }
        }
    }

    fn parse(s: &str, order: u64) -> std::result::Result<TraceValue, String> {
        let list = |body: &str| -> std::result::Result<Vec<i64>, String> {
            body.split(';').map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad entry {x}"))).collect()
        };
        let s = s.trim();
        if let Some(body) = s.strip_prefix("c[").and_then(|b| b.strip_suffix(']')) {
            return Ok(TraceValue::Cyclo(list(body)?));
        }
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let v = list(body)?;
            if v.len() as u64 != order {
                return Err(format!("eigenvalue vector needs {order} entries"));
            }
            if v.iter().any(|&x| x < 0) {
                return Err("negative multiplicity".into());
            }
            return Ok(TraceValue::Eigen(v.into_iter().map(|x| x as u32).collect()));
        }
        s.parse::<i64>().map(TraceValue::Int).map_err(|_| format!("bad trace {s}"))
    }
}

impl std::fmt::Display for TraceValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: Vec<String>| v.join(";");
        match self {
            TraceValue::Int(n) => write!(f, "{n}"),
            TraceValue::Eigen(v) => write!(f, "[{}]", join(v.iter().map(|x| x.to_string()).collect())),
            TraceValue::Cyclo(v) => write!(f, "c[{}]", join(v.iter().map(|x| x.to_string()).collect())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TraceRow {
    pub order: u64,
    pub class_id: String,
    pub kind: ModuleKind,
    pub value: TraceValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableScope {
    /// Only classes whose action differs from the generic pattern are listed.
    Nongeneric,
    /// All classes of the given order are listed.
    Complete,
    /// Individual classes cited for specific arguments.
    Quoted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanEntry {
    pub module: ModuleKind,
    pub class: String,
    pub blocks: JordanType,
    pub scope: TableScope,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanTable {
    pub group: String,
    /// Characteristic, except that `4` names the order-4 table in characteristic 2.
    pub key: u32,
    pub entries: Vec<JordanEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetGroupInfo {
    pub name: String,
    /// Characteristic the dimensions and traces are adjusted for, if any.
    pub p: Option<u32>,
    pub dim_vmin: usize,
    pub dim_lg: usize,
    pub traces: Vec<TraceRow>,
    /// Sources the trace rows came from, in load order.
    pub trace_sources: Vec<String>,
}

impl TargetGroupInfo {
    pub fn dim(&self, kind: ModuleKind) -> usize {
        match kind {
            ModuleKind::Vmin => self.dim_vmin,
            ModuleKind::Lg => self.dim_lg,
        }
    }

    /// Integer traces of elements of the given order on one module.
    pub fn trace_table(&self, order: u64, kind: ModuleKind) -> Result<BTreeSet<i64>> {
        let set: BTreeSet<i64> = self
            .traces
            .iter()
            .filter(|r| r.order == order && r.kind == self.effective(kind))
            .filter_map(|r| r.value.to_cyclo(order).as_int())
            .collect();
        if set.is_empty() {
            return Err(Error::NotCatalogued(format!("{} traces of order {order} on {}", self.name, kind.name())));
        }
        Ok(set)
    }

    /// E8 has V_min = L(G); its traces are stored under `lg`.
    pub fn effective(&self, kind: ModuleKind) -> ModuleKind {
        if self.name == "E8" {
            ModuleKind::Lg
        } else {
            kind
        }
    }

    /// Element orders with trace data.
    pub fn orders(&self) -> BTreeSet<u64> {
        self.traces.iter().map(|r| r.order).collect()
    }

    /// Classes of the given order: class id → (kind → values).
    pub fn classes(&self, order: u64) -> BTreeMap<String, BTreeMap<ModuleKind, BTreeSet<TraceValue>>> {
        let mut out: BTreeMap<String, BTreeMap<ModuleKind, BTreeSet<TraceValue>>> = BTreeMap::new();
        for r in self.traces.iter().filter(|r| r.order == order) {
            out.entry(r.class_id.clone()).or_default().entry(r.kind).or_default().insert(r.value.clone());
        }
        out
    }

    fn merge(&mut self, rows: Vec<TraceRow>, source: String) {
        for r in rows {
            if !self.traces.contains(&r) {
                self.traces.push(r);
            }
        }
        self.traces.sort();
        self.trace_sources.push(source);
    }
}

#[derive(Deserialize)]
struct DimRow {
    group: String,
    kind: String,
    dim: usize,
    minus_one_in_char: Option<u32>,
}

fn csv_reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes())
}

/// (dimension, characteristic in which one trivial factor is lost) for a module.
pub fn dims(group: &str, kind: ModuleKind) -> Result<(usize, Option<u32>)> {
    let text = embedded::get("dims.csv").unwrap();
    for r in csv_reader(text).deserialize::<DimRow>() {
        let r = r.map_err(|e| parse_err(0, e.to_string()))?;
        if r.group == group && r.kind == kind.name() {
            return Ok((r.dim, r.minus_one_in_char));
        }
    }
    Err(Error::NotCatalogued(format!("dimension of {} for {group}", kind.name())))
}

/// Parse trace rows; rows for other groups are rejected.
pub fn parse_trace_file(text: &str, group: &str) -> Result<Vec<TraceRow>> {
    let mut rdr = csv_reader(text);
    let headers = rdr.headers().map_err(|e| parse_err(1, e.to_string()))?.clone();
    let want = ["group", "order", "class_id", "kind", "trace"];
    if !headers.is_empty() && headers.iter().collect::<Vec<_>>() != want {
        return Err(parse_err(1, format!("expected header {}", want.join(","))));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| parse_err(e.position().map(|p| p.line() as usize).unwrap_or(0), e.to_string()))?;
        let ln = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        if rec.len() != 5 {
            return Err(parse_err(ln, "expected 5 columns"));
        }
        if &rec[0] != group {
            return Err(parse_err(ln, format!("row for {} in a {group} table", &rec[0])));
        }
        let order: u64 = rec[1].parse().map_err(|_| parse_err(ln, format!("bad order {}", &rec[1])))?;
        if order < 2 {
            return Err(parse_err(ln, "order must be at least 2"));
        }
        let kind = ModuleKind::parse(&rec[3]).ok_or_else(|| parse_err(ln, format!("bad kind {}", &rec[3])))?;
        let value = TraceValue::parse(&rec[4], order).map_err(|m| parse_err(ln, m))?;
        out.push(TraceRow { order, class_id: rec[2].to_string(), kind, value });
    }
    Ok(out)
}

/// Shipped data for a target group, adjusted for characteristic p when given.
pub fn target(name: &str, p: Option<u32>) -> Result<TargetGroupInfo> {
    let file = format!("traces/{name}.csv");
    let text = embedded::get(&file).ok_or_else(|| Error::NotCatalogued(format!("target group {name}")))?;
    let (dv, cv) = dims(name, ModuleKind::Vmin)?;
    let (dl, cl) = dims(name, ModuleKind::Lg)?;
    let drop = |c: Option<u32>| p.is_some() && c == p;
    let mut t = TargetGroupInfo {
        name: name.to_string(),
        p,
        dim_vmin: dv - drop(cv) as usize,
        dim_lg: dl - drop(cl) as usize,
        traces: Vec::new(),
        trace_sources: Vec::new(),
    };
    let rows = parse_trace_file(text, name)?;
    t.merge(adjust(rows, p, cv, cl), file);
    Ok(t)
}

fn adjust(rows: Vec<TraceRow>, p: Option<u32>, cv: Option<u32>, cl: Option<u32>) -> Vec<TraceRow> {
    rows.into_iter()
        .filter(|r| p.is_none_or(|p| r.order % p as u64 != 0))
        .map(|mut r| {
            let c = if r.kind == ModuleKind::Vmin { cv } else { cl };
            if p.is_some() && c == p {
                r.value = r.value.shift(-1);
            }
            r
        })
        .collect()
}

/// Merge a user trace file into a copy of `base`.
pub fn load_trace_file(path: &Path, base: &TargetGroupInfo) -> Result<TargetGroupInfo> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Unsupported(format!("{}: {e}", path.display())))?;
    let rows = parse_trace_file(&text, &base.name)?;
    base.with_rows(rows, path.display().to_string())
}

impl TargetGroupInfo {
    /// Copy with extra characteristic-0 rows, adjusted like the shipped ones.
    pub fn with_rows(&self, rows: Vec<TraceRow>, source: String) -> Result<TargetGroupInfo> {
        let (_, cv) = dims(&self.name, ModuleKind::Vmin)?;
        let (_, cl) = dims(&self.name, ModuleKind::Lg)?;
        let mut t = self.clone();
        t.merge(adjust(rows, self.p, cv, cl), source);
        Ok(t)
    }
}

#[derive(Deserialize)]
struct JordanRow {
    scope: TableScope,
    module: ModuleKind,
    class: String,
    blocks: String,
}

/// Unipotent Jordan-block table for a group; `key` is the characteristic,
/// or 4 for elements of order 4 in characteristic 2.
pub fn jordan_table(group: &str, key: u32) -> Result<JordanTable> {
    let name = format!("jordan/{group}_{key}.csv");
    let text = embedded::get(&name).ok_or_else(|| Error::NotCatalogued(format!("Jordan table {group}, {key}")))?;
    let mut entries = Vec::new();
    for (i, r) in csv_reader(text).deserialize::<JordanRow>().enumerate() {
        let r = r.map_err(|e| parse_err(i + 2, e.to_string()))?;
        let blocks = JordanType::parse(&r.blocks).ok_or_else(|| parse_err(i + 2, format!("bad blocks {}", r.blocks)))?;
        entries.push(JordanEntry { module: r.module, class: r.class, blocks, scope: r.scope });
    }
    Ok(JordanTable { group: group.to_string(), key, entries })
}

/// Scalar datum from `data/facts.csv`.
pub fn fact(key: &str) -> Result<String> {
    let text = embedded::get("facts.csv").unwrap();
    for r in csv_reader(text).records() {
        let r = r.map_err(|e| parse_err(0, e.to_string()))?;
        if &r[0] == key {
            return Ok(r[1].to_string());
        }
    }
    Err(Error::NotCatalogued(key.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_trace_values() {
        let f4 = target("F4", None).unwrap();
        assert_eq!(f4.trace_table(2, ModuleKind::Vmin).unwrap(), BTreeSet::from([2, -6]));
        let e8 = target("E8", None).unwrap();
        assert_eq!(e8.trace_table(3, ModuleKind::Lg).unwrap(), BTreeSet::from([-4, 5, 14, 77]));
        let e7 = target("E7", None).unwrap();
        assert_eq!(e7.trace_table(5, ModuleKind::Vmin).unwrap(), BTreeSet::from([6]));
        assert!(matches!(e7.trace_table(7, ModuleKind::Vmin), Err(Error::NotCatalogued(_))));
    }

    #[test]
    fn characteristic_adjustments() {
        assert_eq!(target("F4", Some(3)).unwrap().dim_vmin, 25);
        assert_eq!(target("F4", Some(5)).unwrap().dim_vmin, 26);
        assert_eq!(target("E6", Some(3)).unwrap().dim_lg, 77);
        let e7 = target("E7", Some(2)).unwrap();
        assert_eq!(e7.dim_lg, 132);
        assert_eq!(e7.trace_table(3, ModuleKind::Lg).unwrap(), BTreeSet::from([-3, 6, 33, 51]));
        // elements of order p are not semisimple
        assert!(e7.orders().iter().all(|o| o % 2 != 0));
    }

    #[test]
    fn trace_file_errors_and_merge() {
        let ok = "group,order,class_id,kind,trace\nE7,7,7a,vmin,[8;8;8;8;8;8;8]\n";
        let rows = parse_trace_file(ok, "E7").unwrap();
        assert_eq!(rows[0].value.to_cyclo(7).as_int(), Some(0));
        let bad = "group,order,class_id,kind,trace\nE7,3,3a,vmin,2\nE7,3,3b,vmin,x\n";
        match parse_trace_file(bad, "E7") {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_trace_file("group,order,class_id,kind,trace\nE8,2,2a,lg,1\n", "E7").is_err());
        assert!(parse_trace_file("group,order,class_id,kind,trace\nE7,4,4a,lg,[1;2]\n", "E7").is_err());
        let mut base = target("E7", None).unwrap();
        let before = base.traces.clone();
        base.merge(parse_trace_file(embedded::get("traces/E7.csv").unwrap(), "E7").unwrap(), "again".into());
        assert_eq!(base.traces, before);
    }

    #[test]
    fn jordan_tables_partition_dims() {
        for (g, key) in [("E8", 3), ("E8", 4), ("E8", 5), ("E6", 5), ("E7", 5)] {
            let t = jordan_table(g, key).unwrap();
            let p = if key == 4 { 2 } else { key };
            for e in &t.entries {
                let d = target(g, Some(p)).unwrap().dim(e.module);
                assert_eq!(e.blocks.dim(), d, "{g} {key} {}", e.class);
            }
        }
        assert!(jordan_table("F4", 7).is_err());
    }

    #[test]
    fn facts() {
        assert_eq!(fact("alt10_p2_projective_cover_of_8_socle_layers").unwrap(), "19");
    }
}
