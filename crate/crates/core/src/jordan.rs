//! Jordan types of p-elements on modules, predicted types of direct sums,
//! and lookup in the unipotent class tables.

use crate::error::{Error, Result};
use crate::exactlinalg::Mat;
use crate::gmod::GModule;
use crate::groups::Perm;
use crate::repdata::{jordan_table, ModuleKind, TableScope};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Multiset of Jordan block sizes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JordanType(BTreeMap<usize, usize>);

impl JordanType {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_blocks(blocks: &[usize]) -> Self {
        let mut t = Self::new();
        for &b in blocks {
            t.add(b, 1);
        }
        t
    }

    /// Parse `5^26,3` (also accepts `5^{26}`).
    pub fn parse(s: &str) -> Option<Self> {
        let mut t = Self::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (b, k) = match part.split_once('^') {
                Some((b, k)) => (b, k.trim_matches(|c| c == '{' || c == '}').parse().ok()?),
                None => (part, 1),
            };
            t.add(b.parse().ok()?, k);
        }
        Some(t)
    }

    pub fn add(&mut self, size: usize, count: usize) {
        if size > 0 && count > 0 {
            *self.0.entry(size).or_insert(0) += count;
        }
    }

    pub fn count(&self, size: usize) -> usize {
        self.0.get(&size).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(|(s, k)| s * k).sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.0.values().sum()
    }

    pub fn largest(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut t = self.clone();
        for (&s, &k) in &other.0 {
            t.add(s, k);
        }
        t
    }

    pub fn scaled(&self, times: usize) -> Self {
        JordanType(self.0.iter().map(|(&s, &k)| (s, k * times)).filter(|(_, k)| *k > 0).collect())
    }

    /// Block sizes in decreasing order, with repetition.
    pub fn blocks(&self) -> Vec<usize> {
        self.0.iter().rev().flat_map(|(&s, &k)| std::iter::repeat_n(s, k)).collect()
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().rev().map(|(s, k)| if *k == 1 { s.to_string() } else { format!("{s}^{k}") }).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Jordan type of a nilpotent matrix from its rank sequence.
pub fn jordan_type_of_nilpotent(a: &Mat) -> Result<JordanType> {
    let n = a.rows();
    let mut ranks = vec![n];
    let mut pw = Mat::identity(a.field(), n);
    while *ranks.last().unwrap() > 0 {
        pw = pw.mul(a);
        let r = pw.rank();
        if r == *ranks.last().unwrap() {
            return Err(Error::PreconditionViolated("matrix is not nilpotent".into()));
        }
        ranks.push(r);
    }
    ranks.push(0);
    let mut t = JordanType::new();
    for s in 1..ranks.len() - 1 {
        let k = ranks[s - 1] + ranks[s + 1] - 2 * ranks[s];
        t.add(s, k);
    }
    Ok(t)
}

/// Jordan type of a p-power-order element on a module.
pub fn jordan_type(m: &GModule, g: &Perm) -> Result<JordanType> {
    let p = m.field().p() as u64;
    let mut o = g.order();
    while o.is_multiple_of(p) {
        o /= p;
    }
    if o != 1 {
        return Err(Error::PreconditionViolated(format!("element of order {} is not a {p}-element", g.order())));
    }
    let a = m.action(g).add_scalar(m.field().neg(1));
    jordan_type_of_nilpotent(&a)
}

/// A direct summand for Jordan-type prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeSummand {
    pub name: String,
    pub dim: usize,
    pub projective: bool,
    pub count: usize,
}

/// Jordan type of a direct sum of summands, using `types` for the
/// non-projective ones; projective summands act freely with blocks of size
/// `element_order`.
pub fn jordan_of_shape(
    summands: &[ShapeSummand],
    element_order: usize,
    types: &BTreeMap<String, JordanType>,
) -> Result<JordanType> {
    let mut t = JordanType::new();
    for s in summands {
        let part = if s.projective {
            if s.dim % element_order != 0 {
                return Err(Error::PreconditionViolated(format!("projective {} of dim {} not free", s.name, s.dim)));
            }
            JordanType::from_blocks(&vec![element_order; s.dim / element_order])
        } else {
            types.get(&s.name).cloned().ok_or_else(|| Error::MissingTypeData(s.name.clone()))?
        };
        t = t.union(&part.scaled(s.count));
    }
    Ok(t)
}

/// Type of an element of order p when the Sylow p-subgroup is cyclic of
/// order p: free on a projective module, and on a non-projective
/// indecomposable of dimension d, free plus one block of size d mod p.
pub fn cyclic_sylow_type(dim: usize, projective: bool, p: usize) -> Result<JordanType> {
    let r = dim % p;
    if projective != (r == 0) {
        return Err(Error::PreconditionViolated(format!(
            "dimension {dim} is {}divisible by {p}",
            if projective { "not " } else { "" }
        )));
    }
    let mut t = JordanType::from_blocks(&vec![p; dim / p]);
    t.add(r, 1);
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLookup {
    pub classes: Vec<String>,
    /// Set when the table does not list every class, so an empty answer
    /// only excludes the listed ones.
    pub caveat: Option<TableScope>,
}

/// Unipotent classes of `group` acting on a module with exactly this type.
/// `key` is the characteristic, or 4 for order-4 elements in characteristic 2.
pub fn class_lookup(group: &str, key: u32, t: &JordanType) -> Result<ClassLookup> {
    class_lookup_on(group, key, t, None)
}

pub fn class_lookup_on(group: &str, key: u32, t: &JordanType, module: Option<ModuleKind>) -> Result<ClassLookup> {
    let table = jordan_table(group, key)?;
    let classes = table
        .entries
        .iter()
        .filter(|e| module.is_none_or(|m| m == e.module) && e.blocks == *t)
        .map(|e| e.class.clone())
        .collect();
    let caveat = table.entries.iter().map(|e| e.scope).find(|s| *s != TableScope::Complete);
    Ok(ClassLookup { classes, caveat })
}

/// Regular unipotent of SL2 on ⊕ L(a): one block of size a+1 per weight.
pub fn sl2_jordan(weights: &[u32], p: u32) -> Result<JordanType> {
    let mut t = JordanType::new();
    for &a in weights {
        if a >= p {
            return Err(Error::NotPRestricted { weight: a, p });
        }
        t.add(a as usize + 1, 1);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;
    use crate::gmod::perm_module;

    #[test]
    fn parse_print() {
        let t = JordanType::parse("5^{26},3").unwrap();
        assert_eq!(t.to_string(), "5^26,3");
        assert_eq!(t.dim(), 133);
        assert_eq!(JordanType::parse("").unwrap(), JordanType::new());
        assert!(JordanType::parse("a^2").is_none());
    }

    #[test]
    fn perm_cycle() {
        let f = field_make(5, 1).unwrap();
        let m = perm_module(5, f).unwrap();
        let u = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(jordan_type(&m, &u).unwrap().to_string(), "5");
        assert_eq!(jordan_type(&m, &Perm::identity(5)).unwrap().to_string(), "1^5");
        let x = Perm::from_cycles(5, &[&[1, 2, 3]]);
        assert!(matches!(jordan_type(&m, &x), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn lookups() {
        let r = class_lookup("E8", 5, &JordanType::parse("5^45,1^23").unwrap()).unwrap();
        assert_eq!(r.classes, ["A4"]);
        assert_eq!(r.caveat, Some(TableScope::Nongeneric));
        assert!(class_lookup("E8", 5, &JordanType::parse("5^46,3^6").unwrap()).unwrap().classes.is_empty());
        let r = class_lookup("E8", 4, &JordanType::parse("4^60,2^4").unwrap()).unwrap();
        assert_eq!((r.classes, r.caveat), (vec!["2A3".to_string()], None));
        let two = class_lookup("E8", 4, &JordanType::parse("4^40,3^12,2^18,1^16").unwrap()).unwrap();
        assert_eq!(two.classes, ["A2+A1", "2A2+A1"]);
        assert_eq!(
            class_lookup("E7", 5, &JordanType::parse("5^26,3").unwrap()).unwrap().classes,
            ["A4+A2"]
        );
        assert!(matches!(class_lookup("G2", 5, &JordanType::new()), Err(Error::NotCatalogued(_))));
    }

    #[test]
    fn sl2() {
        assert_eq!(sl2_jordan(&[1, 3], 5).unwrap(), JordanType::from_blocks(&[2, 4]));
        assert_eq!(sl2_jordan(&[0], 2).unwrap().to_string(), "1");
        assert_eq!(sl2_jordan(&[6], 7).unwrap().to_string(), "7");
        assert_eq!(sl2_jordan(&[7], 7), Err(Error::NotPRestricted { weight: 7, p: 7 }));
    }

    #[test]
    fn shapes() {
        let mut types = BTreeMap::new();
        types.insert("8".to_string(), JordanType::parse("5,3").unwrap());
        let p8 = ShapeSummand { name: "P(8)".into(), dim: 25, projective: true, count: 3 };
        let eight = ShapeSummand { name: "8".into(), dim: 8, projective: false, count: 1 };
        let t = jordan_of_shape(&[p8, eight.clone()], 5, &types).unwrap();
        assert_eq!(t.to_string(), "5^16,3");
        assert_eq!(jordan_of_shape(&[], 5, &types).unwrap(), JordanType::new());
        let mut unknown = eight;
        unknown.name = "10".into();
        assert!(matches!(jordan_of_shape(&[unknown], 5, &types), Err(Error::MissingTypeData(_))));
    }

    #[test]
    fn cyclic_sylow_rule_matches_explicit_modules() {
        use crate::gmod::radical_wrt;
        use crate::repdata::{construct, construction, realize, simples};
        for (n, p) in [(5, 5), (6, 5), (7, 5), (7, 7)] {
            let cycle: Vec<usize> = (1..=p as usize).collect();
            let u = Perm::from_cycles(n, &[&cycle]);
            for s in simples(n, p).unwrap() {
                let m = realize(n, p, &s.label).unwrap();
                let want = cyclic_sylow_type(s.dim, s.dim % p as usize == 0, p as usize).unwrap();
                assert_eq!(jordan_type(&m, &u).unwrap(), want, "Alt({n}) p={p} {}", s.label);
            }
        }
        let u = Perm::from_cycles(6, &[&[1, 2, 3, 4, 5]]);
        let p8 = construction(6, 5, "P(8)").unwrap();
        assert_eq!(jordan_type(&p8, &u).unwrap(), cyclic_sylow_type(25, true, 5).unwrap());
        // the uniserial 8/8 inside P(8)
        let m = radical_wrt(&p8, &["8"]).unwrap();
        assert_eq!(m.dim(), 16);
        assert_eq!(jordan_type(&m, &u).unwrap().to_string(), "5^3,1");
        let p1 = construct(5, 5, "perm").unwrap();
        let u5 = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(jordan_type(&p1, &u5).unwrap().to_string(), "5");
        assert!(cyclic_sylow_type(10, false, 5).is_err());
    }
}
