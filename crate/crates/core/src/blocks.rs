//! Blocks with cyclic defect group whose Brauer tree is a line: projective
//! covers, the full list of non-projective indecomposables, and the counting
//! rule for hiding trivial composition factors.

use crate::error::{Error, Result};
use crate::multiset::{label_cmp, CompFactorMultiset};
use crate::repdata::BrauerTreeLine;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Layer description of a module, top layer first (as in `8/1,8/8`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleShape {
    pub layers: Vec<CompFactorMultiset>,
    pub uniserial_flag: bool,
    /// `P(S)` for projective covers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl ModuleShape {
    pub fn new(layers: Vec<CompFactorMultiset>) -> Self {
        let layers: Vec<_> = layers.into_iter().filter(|l| !l.is_empty()).collect();
        let uniserial_flag = layers.iter().all(|l| l.total() == 1);
        ModuleShape { layers, uniserial_flag, name: None }
    }

    pub fn simple(label: &str) -> Self {
        Self::new(vec![CompFactorMultiset::from_pairs(&[(label, 1)])])
    }

    fn named(mut self, name: String) -> Self {
        self.name = Some(name);
        self
    }

    pub fn is_projective(&self) -> bool {
        self.name.is_some()
    }

    pub fn top(&self) -> &CompFactorMultiset {
        &self.layers[0]
    }

    pub fn socle(&self) -> &CompFactorMultiset {
        self.layers.last().unwrap()
    }

    pub fn factors(&self) -> CompFactorMultiset {
        self.layers.iter().fold(CompFactorMultiset::new(), |a, l| a.union(l))
    }

    pub fn dim(&self) -> usize {
        self.factors().dim()
    }

    /// Dual shape, for blocks whose simple modules are self-dual.
    pub fn dual(&self) -> Self {
        let mut d = Self::new(self.layers.iter().rev().cloned().collect());
        d.name = self.name.clone();
        d
    }

    pub fn parse(s: &str) -> Option<Self> {
        let layers = s
            .split('/')
            .map(|l| {
                let mut m = CompFactorMultiset::new();
                for part in l.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    m.add(part, 1);
                }
                m
            })
            .collect::<Vec<_>>();
        if layers.iter().any(|l| l.is_empty()) {
            return None;
        }
        Some(Self::new(layers))
    }
}

impl fmt::Display for ModuleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let layers: Vec<String> = self
            .layers
            .iter()
            .map(|l| {
                let mut v: Vec<&str> = l.iter().flat_map(|(s, k)| std::iter::repeat_n(s, k)).collect();
                v.sort_by(|a, b| label_cmp(b, a));
                v.join(",")
            })
            .collect();
        write!(f, "{}", layers.join("/"))
    }
}

fn layer(labels: &[&str]) -> CompFactorMultiset {
    let mut m = CompFactorMultiset::new();
    for l in labels {
        m.add(l, 1);
    }
    m
}

/// Projective cover of the edge `s`: top and socle `s`, heart the sum of
/// the two uniserial arms read off by walking round each end vertex.
pub fn pim(tree: &BrauerTreeLine, s: &str) -> Result<ModuleShape> {
    let i = tree.position(s).ok_or_else(|| Error::UnknownEdge(s.to_string()))?;
    let mut arms: Vec<Vec<&str>> = Vec::new();
    for v in [i, i + 1] {
        let around: Vec<&str> =
            [v.checked_sub(1), Some(v)].into_iter().flatten().filter(|&j| j < tree.e()).map(|j| &*tree.edges[j]).collect();
        // clockwise from s, so s first
        let mut order: Vec<&str> = vec![s];
        order.extend(around.iter().filter(|&&l| l != s));
        let n = if tree.exceptional_position == Some(v) { tree.exceptional_multiplicity } else { 1 };
        let walk: Vec<&str> = order.iter().copied().cycle().take(order.len() * n).skip(1).collect();
        arms.push(walk);
    }
    let depth = arms.iter().map(|a| a.len()).max().unwrap();
    let mut layers = vec![layer(&[s])];
    for k in 0..depth {
        let here: Vec<&str> = arms.iter().filter_map(|a| a.get(k).copied()).collect();
        layers.push(layer(&here));
    }
    layers.push(layer(&[s]));
    Ok(ModuleShape::new(layers).named(format!("P({s})")))
}

/// Edge sequence of the line, unfolded about an exceptional end vertex of
/// multiplicity 2 so that the block behaves like one of multiplicity 1.
fn unfolded(tree: &BrauerTreeLine) -> Result<Vec<&str>> {
    let e: Vec<&str> = tree.edges.iter().map(|s| s.as_str()).collect();
    match (tree.exceptional_position, tree.exceptional_multiplicity) {
        (_, 1) => Ok(e),
        (Some(v), 2) => {
            let mut r = e.clone();
            r.reverse();
            Ok(if v == 0 { [r, e].concat() } else { [e, r].concat() })
        }
        (_, m) => Err(Error::Unsupported(format!("exceptional multiplicity {m}"))),
    }
}

/// Every non-projective indecomposable module of the block: the simple
/// modules and the two-layer modules whose factors run along a segment of
/// the line, alternating between top and socle. There are (|D|-1)e of them.
pub fn indecomposables(tree: &BrauerTreeLine) -> Result<Vec<ModuleShape>> {
    tree.check()?;
    let u = unfolded(tree)?;
    let len = u.len();
    let folded = len != tree.e();
    let mirror = |a: usize, b: usize| (len - 1 - b, len - 1 - a);
    let mut out = Vec::new();
    for a in 0..len {
        for b in a..len {
            // orientation: whether edge a is in the socle
            for low in [true, false] {
                if a == b && !low {
                    continue;
                }
                if folded {
                    // keep one representative of each mirror pair
                    let (ma, mb) = mirror(a, b);
                    let m_low = if a == b { true } else { low == ((b - a) % 2 == 0) };
                    if (ma, mb, !m_low) < (a, b, !low) {
                        continue;
                    }
                    if (ma, mb, m_low) == (a, b, low) && a != b {
                        unreachable!("a segment of an unfolded line is never its own mirror image");
                    }
                }
                if a == b {
                    out.push(ModuleShape::simple(u[a]));
                    continue;
                }
                let (mut soc, mut top) = (Vec::new(), Vec::new());
                for (k, l) in u[a..=b].iter().enumerate() {
                    if (k % 2 == 0) == low {
                        soc.push(*l);
                    } else {
                        top.push(*l);
                    }
                }
                out.push(ModuleShape::new(vec![layer(&top), layer(&soc)]));
            }
        }
    }
    Ok(out)
}

/// The projective covers that contain a trivial factor but have no trivial
/// submodule or quotient: P(T) for each T adjacent to the trivial edge.
pub fn trivial_hiders(tree: &BrauerTreeLine) -> Result<Vec<ModuleShape>> {
    tree.check()?;
    let i = tree.position("1").ok_or_else(|| Error::UnknownEdge("1".into()))?;
    if tree.exceptional_multiplicity > 2 {
        return Err(Error::Unsupported(format!("exceptional multiplicity {}", tree.exceptional_multiplicity)));
    }
    let mut out = Vec::new();
    for j in [i.checked_sub(1), Some(i + 1)].into_iter().flatten().filter(|&j| j < tree.e()) {
        let p = pim(tree, &tree.edges[j])?;
        if p.top().count("1") == 0 && p.socle().count("1") == 0 {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HidingVerdict {
    MustFixLine,
    CanHide,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HidingCertificate {
    pub verdict: HidingVerdict,
    /// Factors used up per hidden trivial, one entry per hider.
    pub consumed: Vec<(String, CompFactorMultiset)>,
    /// Hiders used and the semisimple remainder.
    pub witness_shape: Option<Vec<(ModuleShape, usize)>>,
}

impl HidingCertificate {
    /// `10⊕10⊕P(8)⊕P(8)⊕8`-style rendering of the witness.
    pub fn witness_string(&self) -> Option<String> {
        let w = self.witness_shape.as_ref()?;
        let mut parts = Vec::new();
        for (s, k) in w {
            let name = s.name.clone().unwrap_or_else(|| s.to_string());
            parts.extend(std::iter::repeat_n(name, *k));
        }
        Some(parts.join("⊕"))
    }
}

/// Decide whether `factors` can be the composition factors of a module with
/// no trivial submodule or quotient. Every trivial factor has to sit inside
/// its own hider (a projective cover of a neighbour of the trivial edge), and
/// the hiders are disjoint summands.
pub fn can_hide_trivials(factors: &CompFactorMultiset, trees: &[BrauerTreeLine]) -> Result<HidingCertificate> {
    let t = factors.count("1");
    let mut rest = factors.clone();
    rest.remove("1", t);
    if t == 0 {
        return Ok(HidingCertificate {
            verdict: HidingVerdict::CanHide,
            consumed: vec![],
            witness_shape: Some(semisimple(&rest)),
        });
    }
    let tree = trees
        .iter()
        .find(|tr| tr.position("1").is_some())
        .ok_or_else(|| Error::PreconditionViolated("no cyclic block contains the trivial module".into()))?;
    let hiders = trivial_hiders(tree)?;
    let costs: Vec<CompFactorMultiset> = hiders
        .iter()
        .map(|h| {
            let mut c = h.factors();
            c.remove("1", 1);
            c
        })
        .collect();
    let consumed = hiders.iter().zip(&costs).map(|(h, c)| (h.name.clone().unwrap(), c.clone())).collect();
    let mut counts = vec![0; hiders.len()];
    if !distribute(0, t, &costs, &mut rest, &mut counts) {
        return Ok(HidingCertificate { verdict: HidingVerdict::MustFixLine, consumed, witness_shape: None });
    }
    let mut witness: Vec<(ModuleShape, usize)> = semisimple(&rest);
    for (h, k) in hiders.into_iter().zip(counts) {
        if k > 0 {
            witness.push((h, k));
        }
    }
    // by top, projectives before the simple of the same top
    witness.sort_by(|a, b| {
        let key = |s: &ModuleShape| s.top().sorted()[0].0.clone();
        label_cmp(&key(&a.0), &key(&b.0)).then_with(|| b.0.is_projective().cmp(&a.0.is_projective()))
    });
    Ok(HidingCertificate { verdict: HidingVerdict::CanHide, consumed, witness_shape: Some(witness) })
}

fn semisimple(m: &CompFactorMultiset) -> Vec<(ModuleShape, usize)> {
    m.sorted().into_iter().map(|(l, k)| (ModuleShape::simple(&l), k)).collect()
}

// Assign `left` trivials to hiders from index i on, spending `rest`.
fn distribute(
    i: usize,
    left: usize,
    costs: &[CompFactorMultiset],
    rest: &mut CompFactorMultiset,
    counts: &mut [usize],
) -> bool {
    if left == 0 {
        return true;
    }
    if i == costs.len() {
        return false;
    }
    let max = costs[i].iter().map(|(l, k)| rest.count(l) / k).min().unwrap_or(left).min(left);
    for k in (0..=max).rev() {
        for (l, c) in costs[i].iter() {
            rest.remove(l, c * k);
        }
        counts[i] = k;
        if distribute(i + 1, left - k, costs, rest, counts) {
            return true;
        }
        for (l, c) in costs[i].iter() {
            rest.add(l, c * k);
        }
    }
    counts[i] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdata::{brauer_tree, brauer_trees};

    fn ms(s: &str) -> CompFactorMultiset {
        CompFactorMultiset::parse(s).unwrap()
    }

    #[test]
    fn projective_covers() {
        let t = brauer_tree(6, 5, "0").unwrap();
        assert_eq!(pim(&t, "8").unwrap().to_string(), "8/1,8/8");
        let t = brauer_tree(5, 5, "0").unwrap();
        assert_eq!(pim(&t, "1").unwrap().to_string(), "1/3/1");
        assert_eq!(pim(&t, "3").unwrap().factors(), ms("3^3,1"));
        let t = brauer_tree(7, 7, "0").unwrap();
        let p: Vec<String> = ["1", "5", "10"].iter().map(|s| pim(&t, s).unwrap().to_string()).collect();
        assert_eq!(p, ["1/5/1", "5/1,10/5", "10/5,10/10"]);
        assert_eq!(pim(&brauer_tree(8, 5, "0").unwrap(), "13").unwrap().to_string(), "13/1,43/13");
        assert_eq!(pim(&t, "8"), Err(Error::UnknownEdge("8".into())));
    }

    #[test]
    fn pim_dims_divisible_by_defect() {
        for (name, t) in brauer_trees() {
            for s in &t.edges {
                assert_eq!(pim(&t, s).unwrap().dim() % t.defect_order, 0, "{name} P({s})");
            }
        }
    }

    #[test]
    fn indecomposable_counts() {
        for (name, t) in brauer_trees() {
            let ind = indecomposables(&t).unwrap();
            assert_eq!(ind.len(), (t.defect_order - 1) * t.e(), "{name}");
            for s in &t.edges {
                assert!(ind.contains(&ModuleShape::simple(s)));
            }
            for m in &ind {
                let d = m.dual();
                assert_eq!(
                    ind.iter().filter(|x| **x == d).count(),
                    ind.iter().filter(|x| *x == m).count(),
                    "{name}: dual of {m}"
                );
            }
        }
        let a5: Vec<String> = indecomposables(&brauer_tree(5, 5, "0").unwrap())
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        for s in ["1", "3", "3/1", "1/3", "3/3", "1,3/3", "3/1,3", "1,3/1,3"] {
            assert!(a5.contains(&s.to_string()), "{s} missing from {a5:?}");
        }
    }

    #[test]
    fn hiders() {
        let h = |n, p| -> Vec<String> {
            trivial_hiders(&brauer_tree(n, p, "0").unwrap()).unwrap().iter().map(|m| m.to_string()).collect()
        };
        assert_eq!(h(6, 5), ["8/1,8/8"]);
        assert_eq!(h(5, 5), ["3/1,3/3"]);
        assert_eq!(h(7, 5), ["13/1,8/13"]);
        assert_eq!(h(8, 5), ["13/1,43/13"]);
        assert_eq!(h(8, 7), ["19/1,45/19"]);
    }

    #[test]
    fn hiding() {
        let trees = [brauer_tree(5, 5, "0").unwrap()];
        let c = can_hide_trivials(&ms("3^6,1^8"), &trees).unwrap();
        assert_eq!(c.verdict, HidingVerdict::MustFixLine);
        assert_eq!(can_hide_trivials(&ms("5,3^7"), &trees).unwrap().verdict, HidingVerdict::CanHide);
        let trees = [brauer_tree(6, 5, "0").unwrap()];
        let c = can_hide_trivials(&ms("10^2,8^7,1^2"), &trees).unwrap();
        assert_eq!(c.verdict, HidingVerdict::CanHide);
        assert_eq!(c.witness_string().unwrap(), "10⊕10⊕P(8)⊕P(8)⊕8");
        assert_eq!(can_hide_trivials(&ms("8^5,1^2"), &trees).unwrap().verdict, HidingVerdict::MustFixLine);
    }

    #[test]
    fn explicit_projectives_match_shapes() {
        use crate::gmod::socle_series;
        use crate::repdata::{construction, constructions};
        let all = constructions().unwrap();
        assert_eq!(all.len(), 4);
        for c in all {
            let m = construction(c.n, c.p, &c.name).unwrap();
            let s = c.name.trim_start_matches("P(").trim_end_matches(')');
            let shape = pim(&brauer_tree(c.n, c.p, "0").unwrap(), s).unwrap();
            assert_eq!(crate::meataxe::chop_labels(&m, 0), shape.factors(), "{}", c.name);
            let mut layers = socle_series(&m).unwrap().layers;
            layers.reverse();
            assert_eq!(layers, shape.layers, "{}", c.name);
        }
    }

    #[test]
    fn shape_parse() {
        let s = ModuleShape::parse("8/1,8/8").unwrap();
        assert_eq!(s.factors(), ms("8^3,1"));
        assert!(!s.uniserial_flag);
        assert!(ModuleShape::parse("1/3/1").unwrap().uniserial_flag);
        assert!(ModuleShape::parse("8//8").is_none());
    }
}
