//! Direct-sum realizations of a composition-factor multiset with no trivial
//! submodule or quotient, and the Jordan types of a p-cycle on them.
//!
//! Only for Alt(n) with p <= n < 2p, where the Sylow p-subgroup is cyclic of
//! order p and every block is either a Brauer-tree line or of defect zero.

use altsieve::blocks::{indecomposables, pim, ModuleShape};
use altsieve::jordan::{cyclic_sylow_type, JordanType};
use altsieve::multiset::label_cmp;
use altsieve::repdata::{brauer_tree, BrauerTreeLine, SimpleInfo};
use altsieve::{CompFactorMultiset, Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Examples kept per Jordan type.
const EXAMPLES: usize = 4;
/// Search nodes before a block enumeration gives up.
const NODE_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug)]
enum Block {
    /// Tree and whether its edge labels are closed under duality.
    Tree(BrauerTreeLine, bool),
    DefectZero(String),
}

/// Block structure of the catalogue.
#[derive(Clone, Debug)]
pub struct Layout {
    p: usize,
    blocks: Vec<Block>,
    duals: BTreeMap<String, String>,
}

/// A summand with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub shape: ModuleShape,
    pub projective: bool,
    pub count: usize,
}

/// One direct-sum decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization(pub Vec<Part>);

#[derive(Clone, Debug, Default)]
pub struct Sweep {
    /// Jordan type of the p-cycle, with a few realizations giving it.
    pub by_type: BTreeMap<JordanType, Vec<Realization>>,
    pub count: usize,
    pub truncated: bool,
}

impl Layout {
    /// `Ok(None)` when the Sylow p-subgroup is not cyclic of order p.
    pub fn new(n: usize, p: u32, catalogue: &[SimpleInfo]) -> Result<Option<Layout>> {
        let pu = p as usize;
        if !(pu <= n && n < 2 * pu) {
            return Ok(None);
        }
        let mut ids: BTreeMap<usize, Vec<&SimpleInfo>> = BTreeMap::new();
        for s in catalogue {
            ids.entry(s.block_id).or_default().push(s);
        }
        let mut blocks = Vec::new();
        for (id, members) in ids {
            match brauer_tree(n, p, &id.to_string()) {
                Ok(t) => {
                    let mut want: Vec<&str> = members.iter().map(|s| s.label.as_str()).collect();
                    let mut have: Vec<&str> = t.edges.iter().map(|s| s.as_str()).collect();
                    want.sort();
                    have.sort();
                    if want != have {
                        return Err(Error::PreconditionViolated(format!(
                            "tree of block {id} has edges {have:?}, catalogue has {want:?}"
                        )));
                    }
                    let closed = members.iter().all(|s| t.edges.contains(&s.dual_label));
                    blocks.push(Block::Tree(t, closed));
                }
                Err(Error::NotCatalogued(_)) if members.len() == 1 && members[0].dim % pu == 0 => {
                    blocks.push(Block::DefectZero(members[0].label.clone()))
                }
                Err(Error::NotCatalogued(_)) => {
                    return Err(Error::NotCatalogued(format!("Brauer tree of block {id} of Alt({n}), p = {p}")))
                }
                Err(e) => return Err(e),
            }
        }
        let duals = catalogue.iter().map(|s| (s.label.clone(), s.dual_label.clone())).collect();
        Ok(Some(Layout { p: pu, blocks, duals }))
    }

    pub fn trees(&self) -> Vec<BrauerTreeLine> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Block::Tree(t, _) => Some(t.clone()),
                _ => None,
            })
            .collect()
    }

    /// All realizations of `factors` as sums of indecomposables with no
    /// trivial module in any top or socle. With `self_dual`, only sums
    /// isomorphic to their dual are kept.
    pub fn sweep(&self, factors: &CompFactorMultiset, self_dual: bool) -> Result<Sweep> {
        let mut acc: BTreeMap<JordanType, Vec<Realization>> = BTreeMap::new();
        acc.insert(JordanType::new(), vec![Realization(vec![])]);
        let (mut count, mut truncated) = (1usize, false);
        let mut seen = CompFactorMultiset::new();
        for b in &self.blocks {
            let part = match b {
                Block::DefectZero(l) => {
                    let k = factors.count(l);
                    seen.add(l, k);
                    let mut s = Sweep::default();
                    let parts = if k == 0 {
                        vec![]
                    } else {
                        vec![Part { shape: ModuleShape::simple(l), projective: true, count: k }]
                    };
                    s.by_type.insert(self.type_of(&parts)?, vec![Realization(parts)]);
                    s.count = 1;
                    s
                }
                Block::Tree(t, closed) => {
                    let mut sub = CompFactorMultiset::new();
                    for e in &t.edges {
                        sub.add(e, factors.count(e));
                    }
                    seen = seen.union(&sub);
                    self.block_sweep(t, &sub, self_dual && *closed)?
                }
            };
            truncated |= part.truncated;
            count = count.saturating_mul(part.count);
            let mut next: BTreeMap<JordanType, Vec<Realization>> = BTreeMap::new();
            for (ta, ra) in &acc {
                for (tb, rb) in &part.by_type {
                    let slot = next.entry(ta.union(tb)).or_default();
                    for x in ra {
                        for y in rb {
                            if slot.len() < EXAMPLES {
                                let mut v = x.0.clone();
                                v.extend(y.0.iter().cloned());
                                slot.push(Realization(v));
                            }
                        }
                    }
                }
            }
            acc = next;
        }
        if seen != *factors {
            return Err(Error::UnknownSimple(format!("factors {factors} outside the catalogued blocks")));
        }
        for rs in acc.values_mut() {
            for r in rs.iter_mut() {
                r.0.sort_by(part_cmp);
            }
            rs.sort_by_key(|r| r.to_string());
        }
        if count == 0 {
            acc.clear();
        }
        Ok(Sweep { by_type: acc, count, truncated })
    }

    fn type_of(&self, parts: &[Part]) -> Result<JordanType> {
        let mut t = JordanType::new();
        for part in parts {
            t = t.union(&cyclic_sylow_type(part.shape.dim(), part.projective, self.p)?.scaled(part.count));
        }
        Ok(t)
    }

    fn dual_shape(&self, s: &ModuleShape) -> ModuleShape {
        let mut d = s.dual();
        for l in d.layers.iter_mut() {
            *l = l.map_labels(|x| self.duals.get(x).cloned().unwrap_or_else(|| x.to_string()));
        }
        d
    }

    fn block_sweep(&self, tree: &BrauerTreeLine, target: &CompFactorMultiset, self_dual: bool) -> Result<Sweep> {
        let mut options: Vec<(ModuleShape, bool)> = Vec::new();
        for e in &tree.edges {
            options.push((pim(tree, e)?, true));
        }
        for s in indecomposables(tree)? {
            if !options.iter().any(|(o, _)| *o == s) {
                options.push((s, false));
            }
        }
        options.retain(|(s, _)| s.top().count("1") == 0 && s.socle().count("1") == 0);
        // larger summands first
        options.sort_by(|a, b| b.0.dim().cmp(&a.0.dim()).then_with(|| a.0.to_string().cmp(&b.0.to_string())));
        let factors: Vec<CompFactorMultiset> = options.iter().map(|(s, _)| s.factors()).collect();
        let dual_of: Option<Vec<usize>> = if self_dual {
            let idx = options
                .iter()
                .map(|(s, _)| {
                    let d = self.dual_shape(s);
                    options.iter().position(|(o, _)| *o == d)
                })
                .collect::<Option<Vec<usize>>>();
            if idx.is_none() {
                return Err(Error::PreconditionViolated("indecomposable list not closed under duality".into()));
            }
            idx
        } else {
            None
        };
        let mut st = BlockSearch {
            layout: self,
            options: &options,
            dual_of: dual_of.as_deref(),
            factors: &factors,
            counts: vec![0; options.len()],
            out: Sweep::default(),
            nodes: 0,
        };
        let mut rest = target.clone();
        st.go(0, &mut rest)?;
        Ok(st.out)
    }
}

struct BlockSearch<'a> {
    layout: &'a Layout,
    options: &'a [(ModuleShape, bool)],
    /// Index of each option's dual, when only self-dual sums are wanted.
    dual_of: Option<&'a [usize]>,
    factors: &'a [CompFactorMultiset],
    counts: Vec<usize>,
    out: Sweep,
    nodes: usize,
}

impl BlockSearch<'_> {
    fn go(&mut self, i: usize, rest: &mut CompFactorMultiset) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            self.out.truncated = true;
            return Ok(());
        }
        if rest.is_empty() {
            if let Some(d) = self.dual_of {
                if (0..self.counts.len()).any(|i| self.counts[i] != self.counts[d[i]]) {
                    return Ok(());
                }
            }
            let parts: Vec<Part> = self
                .options
                .iter()
                .zip(&self.counts)
                .filter(|(_, &k)| k > 0)
                .map(|((s, proj), &k)| Part { shape: s.clone(), projective: *proj, count: k })
                .collect();
            let t = self.layout.type_of(&parts)?;
            let slot = self.out.by_type.entry(t).or_default();
            if slot.len() < EXAMPLES {
                slot.push(Realization(parts));
            }
            self.out.count += 1;
            return Ok(());
        }
        if i == self.options.len() {
            return Ok(());
        }
        let f = &self.factors[i];
        let max = f.iter().map(|(l, k)| rest.count(l) / k).min().unwrap_or(0);
        for k in (0..=max).rev() {
            for (l, c) in f.iter() {
                rest.remove(l, c * k);
            }
            self.counts[i] = k;
            self.go(i + 1, rest)?;
            for (l, c) in f.iter() {
                rest.add(l, c * k);
            }
        }
        self.counts[i] = 0;
        Ok(())
    }
}

// projective simples, then projective covers, then the rest; larger first
fn part_cmp(a: &Part, b: &Part) -> Ordering {
    let rank = |p: &Part| match (p.projective, p.shape.is_projective()) {
        (true, false) => 0,
        (true, true) => 1,
        _ => 2,
    };
    let top = |p: &Part| p.shape.top().sorted()[0].0.clone();
    rank(a)
        .cmp(&rank(b))
        .then_with(|| label_cmp(&top(a), &top(b)))
        .then_with(|| b.shape.dim().cmp(&a.shape.dim()))
        .then_with(|| a.shape.to_string().cmp(&b.shape.to_string()))
}

impl std::fmt::Display for Realization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                s.push('⊕');
            }
            let name = p.shape.name.clone().unwrap_or_else(|| p.shape.to_string());
            let name = if p.count > 1 && name.contains(['/', ',']) { format!("({name})") } else { name };
            write!(s, "{name}").unwrap();
            if p.count > 1 {
                write!(s, "^{}", p.count).unwrap();
            }
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use altsieve::repdata::simples;

    fn ms(s: &str) -> CompFactorMultiset {
        CompFactorMultiset::parse(s).unwrap()
    }

    #[test]
    fn alt6_e7_shapes() {
        let cat = simples(6, 5).unwrap();
        let lay = Layout::new(6, 5, cat).unwrap().unwrap();
        let lg = lay.sweep(&ms("10^2,8^10,5_1^3,5_2^3,1^3"), true).unwrap();
        assert_eq!(lg.count, 1);
        let (t, r) = lg.by_type.iter().next().unwrap();
        assert_eq!(t.to_string(), "5^26,3");
        assert_eq!(r[0].to_string(), "10^2⊕5_1^3⊕5_2^3⊕P(8)^3⊕8");
        let v = lay.sweep(&ms("10^4,8^2"), true).unwrap();
        let got: BTreeMap<String, String> =
            v.by_type.iter().map(|(t, r)| (t.to_string(), r[0].to_string())).collect();
        assert_eq!(got.len(), 2);
        assert_eq!(got["5^10,3^2"], "10^4⊕8^2");
        assert_eq!(got["5^11,1"], "10^4⊕8/8");
    }

    #[test]
    fn trivial_alone_has_no_realization() {
        let lay = Layout::new(6, 5, simples(6, 5).unwrap()).unwrap().unwrap();
        assert_eq!(lay.sweep(&ms("8,1"), false).unwrap().count, 0);
        assert!(lay.sweep(&ms("8,1"), false).unwrap().by_type.is_empty());
        assert_eq!(lay.sweep(&ms("8^3,1"), false).unwrap().by_type.keys().next().unwrap().to_string(), "5^5");
    }

    #[test]
    fn self_dual_filter() {
        let lay = Layout::new(7, 5, simples(7, 5).unwrap()).unwrap().unwrap();
        let m = ms("35^4,15^4,10,10*,8^2,6^2");
        let all: Vec<String> = lay.sweep(&m, false).unwrap().by_type.values().flatten().map(|r| r.to_string()).collect();
        let sd: Vec<String> = lay.sweep(&m, true).unwrap().by_type.values().flatten().map(|r| r.to_string()).collect();
        assert!(all.contains(&"35^4⊕15^4⊕10⊕10*⊕(6/8)^2".to_string()));
        assert!(sd.contains(&"35^4⊕15^4⊕10⊕10*⊕8/6⊕6/8".to_string()));
        assert!(sd.iter().all(|r| !r.contains("(6/8)^2") && !r.contains("(8/6)^2")));
    }

    #[test]
    fn non_cyclic_has_no_layout() {
        assert!(Layout::new(6, 3, simples(6, 3).unwrap()).unwrap().is_none());
        assert!(Layout::new(5, 3, simples(5, 3).unwrap()).unwrap().is_some());
    }
}
