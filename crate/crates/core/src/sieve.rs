//! Composition-factor sieve: enumerate multisets of simple modules whose
//! Brauer characters are consistent with the semisimple traces of the
//! target group, then apply the line-fixing criteria.

use crate::error::{Error, Result};
use crate::groups::alt_group;
use crate::meataxe::Cyclo;
use crate::multiset::CompFactorMultiset;
use crate::repdata::{ModuleKind, SimpleInfo, TargetGroupInfo, TraceValue};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Allowed trace values on one class of the subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassConstraint {
    pub class: String,
    pub order: u64,
    pub allowed: BTreeSet<Cyclo>,
    /// When false only integral traces are listed, so an irrational value
    /// is not excluded.
    pub complete: bool,
}

impl ClassConstraint {
    pub fn admits(&self, v: &Cyclo) -> bool {
        self.allowed.contains(v) || (!self.complete && v.as_int().is_none())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceConstraint {
    pub classes: Vec<ClassConstraint>,
}

/// A table is complete for an order once it lists a non-integral value.
fn order_complete(target: &TargetGroupInfo, order: u64) -> bool {
    target.traces.iter().any(|r| r.order == order && !matches!(r.value, TraceValue::Int(_)))
}

impl TraceConstraint {
    pub fn none() -> Self {
        Self::default()
    }

    /// Constraints on Alt(n) in characteristic p acting on one module of
    /// the target: every p'-class of an order with trace data.
    pub fn new(n: usize, p: u32, target: &TargetGroupInfo, kind: ModuleKind) -> Result<Self> {
        let g = alt_group(n)?;
        let kind = target.effective(kind);
        let mut classes = Vec::new();
        for c in &g.classes {
            if c.order == 1 || c.order % p as u64 == 0 {
                continue;
            }
            let allowed: BTreeSet<Cyclo> = target
                .traces
                .iter()
                .filter(|r| r.order == c.order && r.kind == kind)
                .map(|r| r.value.to_cyclo(c.order))
                .collect();
            if allowed.is_empty() {
                continue;
            }
            classes.push(ClassConstraint {
                class: c.label.clone(),
                order: c.order,
                allowed,
                complete: order_complete(target, c.order),
            });
        }
        Ok(TraceConstraint { classes })
    }

    /// Orders of the constrained classes.
    pub fn orders(&self) -> BTreeSet<u64> {
        self.classes.iter().map(|c| c.order).collect()
    }
}

fn trace_of(s: &SimpleInfo, class: &str, order: u64) -> Cyclo {
    s.fingerprint.trace(class).unwrap_or_else(|| Cyclo::integer(order, 0))
}

/// Brauer character value of a multiset on a class.
pub fn multiset_trace(m: &CompFactorMultiset, catalogue: &[SimpleInfo], class: &str, order: u64) -> Result<Cyclo> {
    let mut t = Cyclo::integer(order, 0);
    for (l, k) in m.iter() {
        let s = catalogue.iter().find(|s| s.label == l).ok_or_else(|| Error::UnknownSimple(l.to_string()))?;
        t = t.add(&trace_of(s, class, order).scale(k as i64));
    }
    Ok(t)
}

/// Whether a multiset meets every class constraint.
pub fn satisfies(m: &CompFactorMultiset, catalogue: &[SimpleInfo], c: &TraceConstraint) -> Result<bool> {
    for cc in &c.classes {
        if !cc.admits(&multiset_trace(m, catalogue, &cc.class, cc.order)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Enum<'a> {
    simples: Vec<&'a SimpleInfo>,
    // traces[i][c]
    traces: Vec<Vec<Cyclo>>,
    cons: &'a TraceConstraint,
    // per class: whether every simple has an integral value there
    rational: Vec<bool>,
    // bounds[i][c] = (min, max) of trace/dim over simples i.., as fractions
    bounds: Vec<Vec<((i64, i64), (i64, i64))>>,
    // gcd of the dimensions of simples i..
    gcds: Vec<usize>,
    mult: Vec<usize>,
    out: Vec<CompFactorMultiset>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Enum<'_> {
    fn feasible(&self, i: usize, left: usize, partial: &[Cyclo]) -> bool {
        if !left.is_multiple_of(self.gcds[i]) {
            return false;
        }
        for (c, cc) in self.cons.classes.iter().enumerate() {
            if !self.rational[c] {
                continue;
            }
            let now = partial[c].coeffs[0] as i128;
            let ((tmin, dmin), (tmax, dmax)) = self.bounds[i][c];
            let r = left as i128;
            let ok = cc.allowed.iter().filter_map(|a| a.as_int()).any(|a| {
                let need = a as i128 - now;
                need * dmin as i128 >= r * tmin as i128 && need * dmax as i128 <= r * tmax as i128
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn go(&mut self, i: usize, left: usize, partial: &mut Vec<Cyclo>) {
        if i == self.simples.len() {
            if left == 0 && self.cons.classes.iter().zip(partial.iter()).all(|(cc, v)| cc.admits(v)) {
                let pairs: Vec<(&str, usize)> =
                    self.simples.iter().zip(&self.mult).map(|(s, &k)| (s.label.as_str(), k)).collect();
                self.out.push(CompFactorMultiset::from_pairs(&pairs));
            }
            return;
        }
        if !self.feasible(i, left, partial) {
            return;
        }
        let d = self.simples[i].dim;
        for k in (0..=left / d).rev() {
            for (c, t) in self.traces[i].iter().enumerate() {
                partial[c] = partial[c].add(&t.scale(k as i64));
            }
            self.mult[i] = k;
            self.go(i + 1, left - k * d, partial);
            for (c, t) in self.traces[i].iter().enumerate() {
                partial[c] = partial[c].add(&t.scale(-(k as i64)));
            }
        }
        self.mult[i] = 0;
    }
}

/// Every multiset of catalogued simples with total dimension `total_dim`
/// meeting the trace constraints, in canonical order.
pub fn enumerate_factor_sets(
    catalogue: &[SimpleInfo],
    total_dim: usize,
    constraints: &TraceConstraint,
) -> Vec<CompFactorMultiset> {
    let mut simples: Vec<&SimpleInfo> = catalogue.iter().collect();
    simples.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.label.cmp(&b.label)));
    let traces: Vec<Vec<Cyclo>> = simples
        .iter()
        .map(|s| constraints.classes.iter().map(|cc| trace_of(s, &cc.class, cc.order)).collect())
        .collect();
    let nc = constraints.classes.len();
    let rational: Vec<bool> = (0..nc).map(|c| traces.iter().all(|t| t[c].as_int().is_some())).collect();
    let ns = simples.len();
    let mut bounds = vec![vec![((0, 1), (0, 1)); nc]; ns + 1];
    let mut gcds = vec![0; ns + 1];
    for i in (0..ns).rev() {
        gcds[i] = gcd(gcds[i + 1], simples[i].dim);
        for c in 0..nc {
            if !rational[c] {
                continue;
            }
            let r = (traces[i][c].coeffs[0], simples[i].dim as i64);
            let ((a, b), (x, y)) = if i + 1 < ns { bounds[i + 1][c] } else { (r, r) };
            // compare fractions with positive denominators
            let lo = if (r.0 as i128) * (b as i128) < (a as i128) * (r.1 as i128) { r } else { (a, b) };
            let hi = if (r.0 as i128) * (y as i128) > (x as i128) * (r.1 as i128) { r } else { (x, y) };
            bounds[i][c] = (lo, hi);
        }
    }
    // nothing left to place: any remaining dimension must be 0
    gcds[ns] = 0;
    let mut e = Enum {
        simples,
        traces,
        cons: constraints,
        rational,
        bounds,
        gcds,
        mult: vec![0; ns],
        out: Vec::new(),
    };
    if ns == 0 {
        return if total_dim == 0 { vec![CompFactorMultiset::new()] } else { vec![] };
    }
    let mut partial: Vec<Cyclo> = constraints.classes.iter().map(|cc| Cyclo::integer(cc.order, 0)).collect();
    e.go(0, total_dim, &mut partial);
    let mut out = e.out;
    out.sort();
    out
}

/// Exhaustive reference enumeration with no pruning, for testing.
pub fn brute_force_factor_sets(
    catalogue: &[SimpleInfo],
    total_dim: usize,
    constraints: &TraceConstraint,
) -> Vec<CompFactorMultiset> {
    fn all(c: &[SimpleInfo], left: usize) -> Vec<Vec<usize>> {
        match c.split_first() {
            None => {
                if left == 0 {
                    vec![vec![]]
                } else {
                    vec![]
                }
            }
            Some((s, rest)) => {
                let mut out = Vec::new();
                for k in 0..=left / s.dim {
                    for mut tail in all(rest, left - k * s.dim) {
                        tail.insert(0, k);
                        out.push(tail);
                    }
                }
                out
            }
        }
    }
    let mut out: Vec<CompFactorMultiset> = all(catalogue, total_dim)
        .into_iter()
        .map(|ks| {
            let pairs: Vec<(&str, usize)> = catalogue.iter().zip(ks).map(|(s, k)| (s.label.as_str(), k)).collect();
            CompFactorMultiset::from_pairs(&pairs)
        })
        .filter(|m| satisfies(m, catalogue, constraints).unwrap())
        .collect();
    out.sort();
    out
}

/// Whether V_min and L(G) candidates can come from the same embedding:
/// each class of the subgroup must land in one class of the target whose
/// paired traces match both.
pub fn consistent_pair(
    n: usize,
    p: u32,
    target: &TargetGroupInfo,
    catalogue: &[SimpleInfo],
    vmin: &CompFactorMultiset,
    lg: &CompFactorMultiset,
) -> Result<bool> {
    let g = alt_group(n)?;
    for c in g.classes.iter().filter(|c| c.order > 1 && c.order % p as u64 != 0) {
        let rows = target.classes(c.order);
        if rows.is_empty() {
            continue;
        }
        let complete = order_complete(target, c.order);
        let v = multiset_trace(vmin, catalogue, &c.label, c.order)?;
        let l = multiset_trace(lg, catalogue, &c.label, c.order)?;
        let fits = |vals: Option<&BTreeSet<TraceValue>>, x: &Cyclo| match vals {
            Some(vals) => vals.iter().any(|t| t.to_cyclo(c.order) == *x) || (!complete && x.as_int().is_none()),
            None => true,
        };
        // an irrational value on either side may come from an unlisted class
        let unlisted = !complete && (v.as_int().is_none() || l.as_int().is_none());
        let ok = unlisted
            || rows.values().any(|k| fits(k.get(&ModuleKind::Vmin), &v) && fits(k.get(&ModuleKind::Lg), &l));
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Eigenvalue multiplicities of a class on a multiset, as exponents of the
/// catalogue's primitive root of unity.
pub fn multiset_eigencounts(
    m: &CompFactorMultiset,
    catalogue: &[SimpleInfo],
    class: &str,
    order: u64,
) -> Result<Vec<u32>> {
    let mut h = vec![0u32; order as usize];
    for (l, k) in m.iter() {
        let s = catalogue.iter().find(|s| s.label == l).ok_or_else(|| Error::UnknownSimple(l.to_string()))?;
        match s.fingerprint.eigcounts.get(class) {
            Some(c) if c.len() == h.len() => h.iter_mut().zip(c).for_each(|(a, b)| *a += b * k as u32),
            Some(_) => return Err(Error::PreconditionViolated(format!("fingerprint of {l} on class {class}"))),
            // trivial-character simples have no entry
            None => h[0] += (s.dim * k) as u32,
        }
    }
    Ok(h)
}

/// Whether every p'-class of the subgroup acts on the given modules with the
/// eigenvalues of a single semisimple element of the target. Only orders
/// with eigenvalue rows (generated torus tables) are checked; those rows list
/// every element of the order, and the list is closed under Galois action, so
/// membership is exact. This also forces consistency under power maps.
pub fn eigen_consistent(
    n: usize,
    p: u32,
    target: &TargetGroupInfo,
    catalogue: &[SimpleInfo],
    modules: &[(ModuleKind, &CompFactorMultiset)],
) -> Result<bool> {
    let g = alt_group(n)?;
    for c in g.classes.iter().filter(|c| c.order > 1 && c.order % p as u64 != 0) {
        let rows = target.classes(c.order);
        let eigen_rows: Vec<_> = rows
            .values()
            .filter(|k| k.values().flatten().all(|v| matches!(v, TraceValue::Eigen(_))))
            .collect();
        if eigen_rows.is_empty() {
            continue;
        }
        let mut want = Vec::new();
        for &(kind, m) in modules {
            want.push((target.effective(kind), TraceValue::Eigen(multiset_eigencounts(m, catalogue, &c.label, c.order)?)));
        }
        let ok = eigen_rows.iter().any(|k| want.iter().all(|(kind, v)| k.get(kind).is_some_and(|vals| vals.contains(v))));
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PressureReport {
    pub value: i64,
    pub h1_total: usize,
    pub trivial_count: usize,
    /// h1(S) = h1(S*) for every factor.
    pub applicable: bool,
}

pub fn pressure(factors: &CompFactorMultiset, catalogue: &[SimpleInfo]) -> Result<PressureReport> {
    let find = |l: &str| catalogue.iter().find(|s| s.label == l).ok_or_else(|| Error::UnknownSimple(l.to_string()));
    let mut h1_total = 0;
    let mut applicable = true;
    for (l, k) in factors.iter() {
        let s = find(l)?;
        h1_total += s.h1_dim * k;
        if let Ok(d) = find(&s.dual_label) {
            applicable &= d.h1_dim == s.h1_dim;
        }
    }
    let trivial_count = factors.count("1");
    Ok(PressureReport { value: h1_total as i64 - trivial_count as i64, h1_total, trivial_count, applicable })
}

/// Reason a module must have a trivial submodule or quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum LineRule {
    NonPositivePressure { pressure: i64 },
    CohomologyExceedsPressure { label: String, h1: usize, pressure: i64 },
    TooFewHiders { detail: String },
    TooFewTwos { twos: usize, needed: usize },
    Alt8Without20 { trivials: usize },
    TooFewFours { fours: usize, needed: usize },
}

impl LineRule {
    /// Short name of the criterion.
    pub fn anchor(&self) -> &'static str {
        match self {
            LineRule::NonPositivePressure { .. } => "pressure: trivial factors with non-positive pressure",
            LineRule::CohomologyExceedsPressure { .. } => "pressure: a factor's H^1 exceeds the pressure",
            LineRule::TooFewHiders { .. } => "cyclic block: trivials not covered by projective hiders",
            LineRule::TooFewTwos { .. } => "Alt(5), p=2: count of 2-dimensional factors",
            LineRule::Alt8Without20 { .. } => "Alt(8), p=2 without 20s: 14^n,6^(n+1) or 14^(n+1),6^n needed",
            LineRule::TooFewFours { .. } => "Alt(6), p=3: count of 4-dimensional factors",
        }
    }
}

impl fmt::Display for LineRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineRule::NonPositivePressure { pressure } => write!(f, "pressure {pressure} with trivial factors"),
            LineRule::CohomologyExceedsPressure { label, h1, pressure } => {
                write!(f, "h1({label}) = {h1} exceeds pressure {pressure}")
            }
            LineRule::TooFewHiders { detail } => write!(f, "{detail}"),
            LineRule::TooFewTwos { twos, needed } => write!(f, "{twos} factors of dimension 2, need {needed}"),
            LineRule::Alt8Without20 { trivials } => {
                write!(f, "{trivials} trivials but neither 14^n,6^(n+1) nor 14^(n+1),6^n with n = {trivials}")
            }
            LineRule::TooFewFours { fours, needed } => write!(f, "{fours} factors of dimension 4, need {needed}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineVerdict {
    FixesLine(LineRule),
    Inconclusive,
}

impl LineVerdict {
    pub fn fixes_line(&self) -> bool {
        matches!(self, LineVerdict::FixesLine(_))
    }
}

pub fn pressure_verdict(factors: &CompFactorMultiset, catalogue: &[SimpleInfo]) -> Result<LineVerdict> {
    let r = pressure(factors, catalogue)?;
    if !r.applicable || r.trivial_count == 0 {
        return Ok(LineVerdict::Inconclusive);
    }
    if r.value <= 0 {
        return Ok(LineVerdict::FixesLine(LineRule::NonPositivePressure { pressure: r.value }));
    }
    let mut worst: Option<&SimpleInfo> = None;
    for (l, _) in factors.iter() {
        let s = catalogue.iter().find(|s| s.label == l).unwrap();
        if worst.is_none_or(|w| s.h1_dim > w.h1_dim) {
            worst = Some(s);
        }
    }
    match worst {
        Some(s) if s.h1_dim as i64 > r.value => Ok(LineVerdict::FixesLine(LineRule::CohomologyExceedsPressure {
            label: s.label.clone(),
            h1: s.h1_dim,
            pressure: r.value,
        })),
        _ => Ok(LineVerdict::Inconclusive),
    }
}

fn twos(factors: &CompFactorMultiset) -> usize {
    factors.count("2_1") + factors.count("2_2")
}

/// Alt(5) in characteristic 2, where an involution has at least
/// `min_blocks_of_1` Jordan blocks of size 1: with a + 2b trivial factors a
/// module with no trivial submodule or quotient has at least 2a + 3b
/// factors of dimension 2.
pub fn alt5_p2_bound(factors: &CompFactorMultiset, min_blocks_of_1: usize) -> Result<LineVerdict> {
    if factors.labels().any(|l| !["1", "2_1", "2_2", "4"].contains(&l)) {
        return Err(Error::PreconditionViolated("not a multiset of Alt(5) modules in characteristic 2".into()));
    }
    let t = factors.count("1");
    // the number of size-1 blocks has the parity of the trivial count
    let a = min_blocks_of_1 + (t + min_blocks_of_1) % 2;
    if t == 0 || a > t {
        return Ok(LineVerdict::Inconclusive);
    }
    let b = (t - a) / 2;
    let needed = 2 * a + 3 * b;
    let have = twos(factors);
    Ok(if have < needed { LineVerdict::FixesLine(LineRule::TooFewTwos { twos: have, needed }) } else { LineVerdict::Inconclusive })
}

/// Alt(8) in characteristic 2 with no factor of dimension 20: n trivial
/// factors need 14^n,6^(n+1) or 14^(n+1),6^n.
pub fn alt8_p2_no20_check(factors: &CompFactorMultiset) -> Result<LineVerdict> {
    if factors.count("20") + factors.count("20*") > 0 {
        return Err(Error::PreconditionViolated("factors of dimension 20 present".into()));
    }
    let n = factors.count("1");
    if n == 0 {
        return Ok(LineVerdict::Inconclusive);
    }
    let (a, b) = (factors.count("14"), factors.count("6"));
    Ok(if (a >= n && b > n) || (a > n && b >= n) {
        LineVerdict::Inconclusive
    } else {
        LineVerdict::FixesLine(LineRule::Alt8Without20 { trivials: n })
    })
}

/// Alt(6) in characteristic 3: a module with no trivial submodule or
/// quotient has at least as many 4s as 1s. With `strict_parity`, an odd
/// number 2n-1 of trivials needs 2n 4s.
pub fn alt6_p3_four_rule(factors: &CompFactorMultiset, strict_parity: bool) -> LineVerdict {
    let t = factors.count("1");
    let have = factors.count("4");
    let needed = if strict_parity && t % 2 == 1 { t + 1 } else { t };
    if t > 0 && have < needed {
        LineVerdict::FixesLine(LineRule::TooFewFours { fours: have, needed })
    } else {
        LineVerdict::Inconclusive
    }
}

/// Labels per out-orbit image: the multiset with every label moved by the
/// outer automorphism that swaps each two-element orbit.
pub fn out_image(m: &CompFactorMultiset, catalogue: &[SimpleInfo]) -> CompFactorMultiset {
    let map: BTreeMap<&str, &str> = catalogue
        .iter()
        .map(|s| {
            let other = s.out_orbit.iter().find(|l| **l != s.label).unwrap_or(&s.label);
            (s.label.as_str(), other.as_str())
        })
        .collect();
    m.map_labels(|l| map.get(l).copied().unwrap_or(l).to_string())
}

/// Keep one multiset from each outer-automorphism pair.
pub fn collapse_out_orbits(sets: Vec<CompFactorMultiset>, catalogue: &[SimpleInfo]) -> Vec<CompFactorMultiset> {
    let mut out: Vec<CompFactorMultiset> = Vec::new();
    for m in sets {
        let img = out_image(&m, catalogue);
        if !out.contains(&img) {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdata::{simples, target};

    fn ms(s: &str) -> CompFactorMultiset {
        CompFactorMultiset::parse(s).unwrap()
    }

    #[test]
    fn alt5_f4() {
        let t = target("F4", Some(5)).unwrap();
        let cat = simples(5, 5).unwrap();
        let c = TraceConstraint::new(5, 5, &t, ModuleKind::Vmin).unwrap();
        assert_eq!(c.orders(), [2, 3].into());
        let got = enumerate_factor_sets(cat, 26, &c);
        assert_eq!(got, [ms("5^3,3^3,1^2"), ms("5,3^7"), ms("3^6,1^8")]);
        assert_eq!(brute_force_factor_sets(cat, 26, &c), got);
    }

    #[test]
    fn alt5_e8() {
        let t = target("E8", Some(5)).unwrap();
        let cat = simples(5, 5).unwrap();
        let c = TraceConstraint::new(5, 5, &t, ModuleKind::Lg).unwrap();
        let got = enumerate_factor_sets(cat, 248, &c);
        assert_eq!(got.len(), 7);
        assert_eq!(got[0], ms("5^28,3^28,1^24"));
        assert_eq!(got[6], ms("5,3^55,1^78"));
    }

    #[test]
    fn empty() {
        let cat = simples(5, 5).unwrap();
        assert_eq!(enumerate_factor_sets(cat, 0, &TraceConstraint::none()), [CompFactorMultiset::new()]);
        assert_eq!(enumerate_factor_sets(&[], 3, &TraceConstraint::none()), Vec::<CompFactorMultiset>::new());
    }

    #[test]
    fn pressures() {
        let cat = simples(9, 2).unwrap();
        let sets = [
            "26,8_1^8,8_2^8,8_3^8,1^30",
            "26^8,8_1,8_2,8_3,1^16",
            "26^4,20^2,20*^2,8_1^5,8_2^2,1^8",
            "48^2,26^4,8_3^5,1^8",
            "48,26^2,20^2,20*^2,8_1^3,8_2^3,8_3^2,1^4",
        ];
        let p: Vec<i64> = sets.iter().map(|s| pressure(&ms(s), cat).unwrap().value).collect();
        assert_eq!(p, [-28, 0, 4, 0, 4]);
        assert!(pressure_verdict(&ms(sets[0]), cat).unwrap().fixes_line());
        assert_eq!(pressure(&ms("8_3,48"), cat).unwrap().value, 0);
        let cat3 = simples(9, 3).unwrap();
        assert_eq!(pressure_verdict(&ms("35^2,27,21^5,7^6,1^4"), cat3).unwrap(), LineVerdict::Inconclusive);
        assert_eq!(pressure_verdict(&ms("35,27"), cat3).unwrap(), LineVerdict::Inconclusive);
    }

    #[test]
    fn bespoke_rules() {
        assert!(alt5_p2_bound(&ms("2_1^8,2_2^8,4^40,1^20"), 8).unwrap().fixes_line());
        assert_eq!(alt5_p2_bound(&ms("4^5"), 0).unwrap(), LineVerdict::Inconclusive);
        assert_eq!(alt5_p2_bound(&ms("2_1^20,2_2^20,1^8"), 8).unwrap(), LineVerdict::Inconclusive);
        assert!(alt5_p2_bound(&ms("7,1"), 0).is_err());
        assert!(alt8_p2_no20_check(&ms("14^8,6^17,4^2,4*^2,1^18")).unwrap().fixes_line());
        assert_eq!(alt8_p2_no20_check(&ms("14")).unwrap(), LineVerdict::Inconclusive);
        assert_eq!(alt8_p2_no20_check(&ms("14^2,6^3,1^2")).unwrap(), LineVerdict::Inconclusive);
        assert!(alt8_p2_no20_check(&ms("20,1")).is_err());
        assert_eq!(alt6_p3_four_rule(&ms("9,4^3,3_1,1^3"), false), LineVerdict::Inconclusive);
        assert!(alt6_p3_four_rule(&ms("9,4^3,3_1,1^3"), true).fixes_line());
    }

    #[test]
    fn collapse() {
        let cat = simples(6, 3).unwrap();
        let sets = vec![ms("9,3_1^3,3_2^3"), ms("4^3,3_1^3,3_2^2"), ms("4^3,3_1^2,3_2^3")];
        assert_eq!(collapse_out_orbits(sets, cat).len(), 2);
    }
}
