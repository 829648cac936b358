//! Simple-module catalogues: loading, realization from recipes, and the
//! auxiliary construction table.

use super::recipe::Expr;
use super::{embedded, Row};
use crate::error::{Error, Result};
use crate::exactlinalg::{field_make, Field};
use crate::gmod::GModule;
use crate::meataxe::{chop, fingerprint, Fingerprint};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleInfo {
    pub label: String,
    pub dim: usize,
    pub h1_dim: usize,
    pub dual_label: String,
    /// Labels in the orbit of the outer automorphism group, including this one.
    pub out_orbit: Vec<String>,
    pub block_id: usize,
    /// Field (p, k) over which the recipe realizes the module.
    pub field: (u32, u32),
    pub recipe: String,
    pub fingerprint: Fingerprint,
}

impl SimpleInfo {
    pub fn is_self_dual(&self) -> bool {
        self.dual_label == self.label
    }
}

pub(crate) fn parse_field(s: &str) -> Option<(u32, u32)> {
    let (p, k) = s.split_once('^')?;
    Some((p.parse().ok()?, k.parse().ok()?))
}

pub(crate) fn read_rows(text: &str) -> Result<Vec<Row>> {
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in rdr.deserialize::<Row>().enumerate() {
        out.push(rec.map_err(|e| {
            let line = e.position().map(|p| p.line() as usize).unwrap_or(i + 2);
            Error::ParseError { line, msg: e.to_string() }
        })?);
    }
    Ok(out)
}

fn to_info(r: &Row) -> Result<SimpleInfo> {
    let bad = |m: &str| Error::ParseError { line: 0, msg: format!("{}: {m}", r.label) };
    Ok(SimpleInfo {
        label: r.label.clone(),
        dim: r.dim,
        h1_dim: r.h1,
        dual_label: if r.dual.is_empty() { r.label.clone() } else { r.dual.clone() },
        out_orbit: if r.out_orbit.is_empty() {
            vec![r.label.clone()]
        } else {
            r.out_orbit.split(';').map(str::to_string).collect()
        },
        block_id: r.block,
        field: parse_field(&r.field).ok_or_else(|| bad("bad field"))?,
        recipe: r.recipe.clone(),
        fingerprint: Fingerprint::decode(r.dim, &r.fingerprint).ok_or_else(|| bad("bad fingerprint"))?,
    })
}

type Catalogues = HashMap<(usize, u32), Vec<SimpleInfo>>;

fn catalogues() -> &'static Catalogues {
    static CATS: OnceLock<Catalogues> = OnceLock::new();
    CATS.get_or_init(|| {
        let mut m = HashMap::new();
        for (name, text) in embedded::FILES {
            let Some(stem) = name.strip_prefix("simples/").and_then(|s| s.strip_suffix(".csv")) else {
                continue;
            };
            let (n, p) = stem.split_once('_').expect("simples file name is <n>_<p>.csv");
            let rows = read_rows(text).unwrap_or_else(|e| panic!("embedded {name}: {e}"));
            let infos = rows.iter().map(to_info).collect::<Result<Vec<_>>>().unwrap_or_else(|e| panic!("{name}: {e}"));
            m.insert((n.parse().unwrap(), p.parse().unwrap()), infos);
        }
        m
    })
}

/// Catalogued simple modules of Alt(n) in characteristic p.
pub fn simples(n: usize, p: u32) -> Result<&'static [SimpleInfo]> {
    catalogues()
        .get(&(n, p))
        .map(|v| v.as_slice())
        .ok_or_else(|| Error::NotCatalogued(format!("simple modules of Alt({n}) in characteristic {p}")))
}

pub fn simple(n: usize, p: u32, label: &str) -> Result<&'static SimpleInfo> {
    simples(n, p)?
        .iter()
        .find(|s| s.label == label)
        .ok_or_else(|| Error::UnknownSimple(format!("{label} for Alt({n}) in characteristic {p}")))
}

/// Catalogued pairs (n, p), sorted.
pub fn catalogued() -> Vec<(usize, u32)> {
    let mut v: Vec<_> = catalogues().keys().copied().collect();
    v.sort_unstable();
    v
}

/// Field over which the catalogue for (n, p) realizes its simples.
pub fn splitting_field(n: usize, p: u32) -> Result<&'static Field> {
    let s = simples(n, p)?.first().ok_or_else(|| Error::NotCatalogued(format!("Alt({n}) p={p}")))?;
    field_make(s.field.0, s.field.1)
}

fn cache() -> &'static Mutex<HashMap<(usize, u32, String), GModule>> {
    static C: OnceLock<Mutex<HashMap<(usize, u32, String), GModule>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The factor of `m` with the given fingerprint.
pub(crate) fn factor_with(m: &GModule, fp: &Fingerprint) -> Option<GModule> {
    chop(m, 0).factors.into_iter().map(|(s, _)| s).find(|s| fingerprint(s).ok().as_ref() == Some(fp))
}

/// Explicit certified matrices for a catalogued simple, built from its recipe.
pub fn realize(n: usize, p: u32, label: &str) -> Result<GModule> {
    let key = (n, p, label.to_string());
    if let Some(m) = cache().lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let info = simple(n, p, label)?;
    let f = field_make(info.field.0, info.field.1)?;
    let expr = Expr::parse(&info.recipe)?;
    let m = expr.eval(n, f, &|l| realize(n, p, l))?;
    let s = factor_with(&m, &info.fingerprint)
        .ok_or_else(|| Error::UnknownSimple(format!("recipe {} does not yield {label}", info.recipe)))?;
    cache().lock().unwrap().insert(key, s.clone());
    Ok(s)
}

/// Evaluate a recipe over the catalogue field for (n, p), resolving labels
/// through the catalogue.
pub fn construct(n: usize, p: u32, recipe: &str) -> Result<GModule> {
    let expr = Expr::parse(recipe)?;
    expr.eval(n, splitting_field(n, p)?, &|l| realize(n, p, l))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub n: usize,
    pub p: u32,
    pub name: String,
    pub recipe: String,
}

/// Named non-simple constructions, e.g. projective covers realized explicitly.
pub fn constructions() -> Result<Vec<Construction>> {
    let text = embedded::get("constructions.csv").ok_or_else(|| Error::NotCatalogued("constructions".into()))?;
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    rdr.deserialize::<Construction>()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| Error::ParseError { line: i + 2, msg: e.to_string() }))
        .collect()
}

pub fn construction(n: usize, p: u32, name: &str) -> Result<GModule> {
    let c = constructions()?
        .into_iter()
        .find(|c| c.n == n && c.p == p && c.name == name)
        .ok_or_else(|| Error::NotCatalogued(format!("construction {name} for Alt({n}) p={p}")))?;
    construct(n, p, &c.recipe)
}
