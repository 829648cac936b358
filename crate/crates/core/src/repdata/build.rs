//! Catalogue build: a closure search over permutation modules, tensor
//! products, exterior squares, duals and outer twists, chopping each
//! construction and keeping the new simple factors. Labels come from the
//! transcribed rows of the catalogue file; the recipes, duals, outer orbits
//! and fingerprints are computed here and written back.

use super::catalogue::{parse_field, read_rows};
use super::recipe::Expr;
use super::{embedded, Row};
use crate::error::{Error, Result};
use crate::exactlinalg::{field_make, Field};
use crate::gmod::{dual, twist, GModule};
use crate::groups::{alt_group, Perm};
use crate::meataxe::{chop, fingerprint};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

struct Found {
    module: GModule,
    key: String,
    expr: Expr,
}

struct Search {
    n: usize,
    field: &'static Field,
    max_dim: usize,
    wanted: BTreeMap<usize, usize>,
    found: Vec<Found>,
    index: HashMap<String, usize>,
    queue: BinaryHeap<Reverse<(usize, usize)>>,
    exprs: Vec<Expr>,
}

fn r(i: usize) -> Expr {
    Expr::Label(format!("#{i}"))
}

impl Search {
    fn lookup(&self, l: &str) -> Result<GModule> {
        let i: usize = l
            .strip_prefix('#')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::UnknownSimple(l.to_string()))?;
        Ok(self.found[i].module.clone())
    }

    fn eval(&self, e: &Expr) -> Result<GModule> {
        e.eval(self.n, self.field, &|l| self.lookup(l))
    }

    fn push(&mut self, e: Expr, dim: usize) {
        if dim == 0 || dim > self.max_dim {
            return;
        }
        self.exprs.push(e);
        self.queue.push(Reverse((dim, self.exprs.len() - 1)));
    }

    fn done(&self) -> bool {
        self.wanted.iter().all(|(d, k)| self.found.iter().filter(|f| f.module.dim() == *d).count() >= *k)
    }

    /// Record a simple module; returns its index if it is new.
    fn admit(&mut self, s: GModule, expr: Expr, log: &mut dyn FnMut(&str)) -> Result<Option<usize>> {
        if !self.wanted.contains_key(&s.dim()) {
            return Ok(None);
        }
        let fp = fingerprint(&s)?;
        let key = fp.encode();
        if self.index.contains_key(&key) {
            return Ok(None);
        }
        let i = self.found.len();
        log(&format!("  simple #{i} of dim {} from {expr}", s.dim()));
        self.index.insert(key.clone(), i);
        self.found.push(Found { module: s, key, expr });
        Ok(Some(i))
    }

    fn process(&mut self, e: Expr, log: &mut dyn FnMut(&str)) -> Result<()> {
        let m = self.eval(&e)?;
        let new: Vec<usize> = {
            let mut v = Vec::new();
            for (s, _) in chop(&m, 0).factors {
                if let Some(i) = self.admit(s, e.clone(), log)? {
                    v.push(i);
                }
            }
            v
        };
        for i in new {
            let d = self.found[i].module.dim();
            self.push(Expr::Dual(Box::new(r(i))), d);
            self.push(Expr::Twist(Box::new(r(i))), d);
            if d >= 3 {
                self.push(Expr::Ext2(Box::new(r(i))), d * (d - 1) / 2);
            }
            if d > 1 {
                for j in 0..=i {
                    let dj = self.found[j].module.dim();
                    if dj > 1 {
                        self.push(Expr::Tensor(Box::new(r(j)), Box::new(r(i))), d * dj);
                    }
                }
            }
        }
        Ok(())
    }

    fn key_of(&self, m: &GModule) -> Result<Option<usize>> {
        Ok(self.index.get(&fingerprint(m)?.encode()).copied())
    }
}

/// Number of classes of Alt(n) of order prime to p.
pub fn p_regular_classes(n: usize, p: u32) -> Result<usize> {
    Ok(alt_group(n)?.classes.iter().filter(|c| c.order % p as u64 != 0).count())
}

/// Run the search for Alt(n) in characteristic p and return the completed
/// catalogue file text.
pub fn build_catalogue(n: usize, p: u32, max_dim: usize, log: &mut dyn FnMut(&str)) -> Result<String> {
    let name = format!("simples/{n}_{p}.csv");
    let text = embedded::get(&name).ok_or_else(|| Error::NotCatalogued(name.clone()))?;
    let rows = read_rows(text)?;
    let (fp_, fk) = rows
        .first()
        .and_then(|r| parse_field(&r.field))
        .ok_or_else(|| Error::NotCatalogued(format!("{name}: no rows")))?;
    let field = field_make(fp_, fk)?;
    let mut wanted = BTreeMap::new();
    for r in &rows {
        *wanted.entry(r.dim).or_insert(0) += 1;
    }
    let mut s = Search {
        n,
        field,
        max_dim,
        wanted,
        found: Vec::new(),
        index: HashMap::new(),
        queue: BinaryHeap::new(),
        exprs: Vec::new(),
    };
    s.push(Expr::Label("1".into()), 1);
    s.push(Expr::Perm, n);
    for k in 2..=3 {
        let c = (0..k).fold(1, |a, i| a * (n - i) / (i + 1));
        s.push(Expr::Subsets(k), c);
    }
    while !s.done() {
        let Some(Reverse((d, i))) = s.queue.pop() else {
            let have: Vec<usize> = s.found.iter().map(|f| f.module.dim()).collect();
            return Err(Error::NotCatalogued(format!(
                "search for Alt({n}) p={p} exhausted below dim {max_dim}; found dims {have:?}"
            )));
        };
        let e = s.exprs[i].clone();
        log(&format!("chop {e} (dim {d})"));
        s.process(e, log)?;
    }
    // duals and twists of everything found are simple and must be present
    let sigma = Perm::from_cycles(n, &[&[1, 2]]);
    let mut duals = Vec::new();
    let mut twists = Vec::new();
    for f in &s.found {
        let d = s.key_of(&dual(&f.module))?;
        let t = s.key_of(&twist(&f.module, &sigma))?;
        match (d, t) {
            (Some(d), Some(t)) => {
                duals.push(d);
                twists.push(t);
            }
            _ => return Err(Error::PreconditionViolated("dual or twist of a found simple is missing".into())),
        }
    }
    let labels = assign_labels(n, p, &s, &rows, &duals)?;
    let label = |i: usize| labels[&i].clone();
    let by_label: HashMap<&str, usize> = labels.iter().map(|(i, l)| (l.as_str(), *i)).collect();

    let mut out = String::new();
    for l in text.lines().take_while(|l| l.starts_with('#')) {
        out.push_str(l);
        out.push('\n');
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        let i = by_label[row.label.as_str()];
        let mut orbit = vec![row.label.clone(), label(twists[i])];
        if n == 6 {
            // the exceptional outer automorphisms also act; they swap the
            // members of each same-dimension pair
            orbit.extend(s.found.iter().enumerate().filter(|(_, f)| f.module.dim() == row.dim).map(|(j, _)| label(j)));
        }
        orbit.sort_by(|a, b| crate::multiset::label_cmp(a, b));
        orbit.dedup();
        let recipe = s.found[i].expr.map_labels(&|l| match l.strip_prefix('#') {
            Some(k) => label(k.parse().unwrap()),
            None => l.to_string(),
        });
        w.serialize(Row {
            label: row.label.clone(),
            dim: row.dim,
            h1: row.h1,
            block: row.block,
            field: row.field.clone(),
            dual: label(duals[i]),
            out_orbit: orbit.join(";"),
            recipe: recipe.to_string(),
            fingerprint: s.found[i].key.clone(),
        })
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    }
    out.push_str(&String::from_utf8(w.into_inner().map_err(|e| Error::Unsupported(e.to_string()))?).unwrap());
    Ok(out)
}

/// Central character value |K|·χ(g)/χ(1) for every p'-class, in the field.
fn central_character(m: &GModule) -> Option<Vec<u32>> {
    let f = m.field();
    let d = f.from_int(m.dim() as i64);
    if d == 0 {
        return None;
    }
    let inv = f.inv(d);
    Some(
        m.group()
            .classes
            .iter()
            .map(|c| {
                let size = f.from_int((c.size % f.p() as u64) as i64);
                f.mul(f.mul(size, m.action(&c.rep).trace()), inv)
            })
            .collect(),
    )
}

/// Match found simples to the transcribed labels.
///
/// Conventions: a dual pair `d`, `d*` gives the unstarred label to the
/// smaller fingerprint encoding; same-dimension self-dual simples take
/// `_1`, `_2`, ... in fingerprint order, after the fixed choices below.
fn assign_labels(n: usize, p: u32, s: &Search, rows: &[Row], duals: &[usize]) -> Result<HashMap<usize, String>> {
    let mut out: HashMap<usize, String> = HashMap::new();
    let mut dims: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for r in rows {
        dims.entry(r.dim).or_default().push(&r.label);
    }
    // fixed choices among same-dimension self-dual simples
    let mut fixed: Vec<(String, usize)> = Vec::new();
    let occurs = |e: &str, d: usize| -> Result<Vec<usize>> {
        let m = s.eval(&Expr::parse(e)?)?;
        let mut v = Vec::new();
        for (f, _) in chop(&m, 0).factors {
            if f.dim() == d {
                if let Some(i) = s.key_of(&f)? {
                    v.push(i);
                }
            }
        }
        Ok(v)
    };
    let unique_dim = |d: usize| s.found.iter().position(|f| f.module.dim() == d).unwrap();
    match (n, p) {
        (9, 2) => {
            // the 8 inside the natural permutation module
            let v = occurs("perm", 8)?;
            fixed.push(("8_3".into(), v[0]));
        }
        (7, 7) => {
            let five = unique_dim(5);
            let v = occurs(&format!("tensor(#{five},#{five})"), 14)?;
            if v.len() != 1 {
                return Err(Error::PreconditionViolated("expected one 14 in 5 x 5".into()));
            }
            fixed.push(("14_1".into(), v[0]));
        }
        (8, 5) => {
            // the 21 in the principal block: same central character as 1
            let triv = central_character(&s.found[unique_dim(1)].module).unwrap();
            let hits: Vec<usize> = (0..s.found.len())
                .filter(|&i| s.found[i].module.dim() == 21)
                .filter(|&i| central_character(&s.found[i].module).as_ref() == Some(&triv))
                .collect();
            if hits.len() != 1 {
                return Err(Error::PreconditionViolated("expected one principal-block 21".into()));
            }
            fixed.push(("21_1".into(), hits[0]));
        }
        _ => {}
    }
    for (d, labels) in dims {
        let idx: Vec<usize> = (0..s.found.len()).filter(|&i| s.found[i].module.dim() == d).collect();
        if idx.len() != labels.len() {
            return Err(Error::PreconditionViolated(format!(
                "Alt({n}) p={p}: found {} simples of dim {d}, table has {}",
                idx.len(),
                labels.len()
            )));
        }
        let key = |i: &usize| s.found[*i].key.clone();
        let mut pairs: Vec<(usize, usize)> = idx
            .iter()
            .filter(|&&i| duals[i] != i && key(&i) < key(&duals[i]))
            .map(|&i| (i, duals[i]))
            .collect();
        pairs.sort_by_key(|(i, _)| key(i));
        let mut starred: Vec<&str> =
            labels.iter().copied().filter(|l| l.ends_with('*')).map(|l| l.trim_end_matches('*')).collect();
        starred.sort_unstable();
        if starred.len() != pairs.len() {
            return Err(Error::PreconditionViolated(format!("Alt({n}) p={p}: dual pairs of dim {d} do not match")));
        }
        for ((a, b), base) in pairs.iter().zip(&starred) {
            out.insert(*a, base.to_string());
            out.insert(*b, format!("{base}*"));
        }
        let paired: Vec<&str> = starred.iter().flat_map(|b| [*b]).collect();
        let mut selfdual_labels: Vec<&str> = labels
            .iter()
            .copied()
            .filter(|l| !l.ends_with('*') && !paired.contains(l))
            .collect();
        let mut selfdual: Vec<usize> = idx.iter().copied().filter(|&i| duals[i] == i).collect();
        for (l, i) in &fixed {
            if let Some(pos) = selfdual_labels.iter().position(|x| x == l) {
                if duals[*i] != *i || !selfdual.contains(i) {
                    return Err(Error::PreconditionViolated(format!("{l} is not self-dual")));
                }
                selfdual_labels.remove(pos);
                selfdual.retain(|x| x != i);
                out.insert(*i, l.clone());
            }
        }
        selfdual.sort_by_key(key);
        selfdual_labels.sort_unstable();
        for (i, l) in selfdual.iter().zip(&selfdual_labels) {
            out.insert(*i, l.to_string());
        }
    }
    if out.len() != s.found.len() {
        return Err(Error::PreconditionViolated(format!("Alt({n}) p={p}: unlabelled simples remain")));
    }
    Ok(out)
}

/// Rebuild each simple from its recipe and check it is identified under its
/// own label. Returns (label, identified label) for every mismatch.
pub fn audit(n: usize, p: u32) -> Result<Vec<(String, String)>> {
    let mut bad = Vec::new();
    for s in super::simples(n, p)? {
        let m = super::realize(n, p, &s.label)?;
        let got = crate::meataxe::identify(&m).unwrap_or_else(|e| e.to_string());
        if got != s.label {
            bad.push((s.label.clone(), got));
        }
    }
    Ok(bad)
}
