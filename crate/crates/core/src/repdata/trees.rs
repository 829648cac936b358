//! Brauer trees of cyclic-defect blocks. Every tree here is a line.
//!
//! File format (`data/trees/<n>_<p>_<block>.txt`):
//! ```text
//! defect 5
//! edges 1 13 8 6
//! vertices 1 14 21 14 6      # ordinary degrees, informational
//! exceptional 2 2            # vertex index, multiplicity (optional)
//! ```

use super::embedded;
use crate::error::{parse_err, Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerTreeLine {
    /// Edge labels in order along the line; vertex i joins edges i-1 and i.
    pub edges: Vec<String>,
    /// Vertex index in 0..=edges.len().
    pub exceptional_position: Option<usize>,
    pub exceptional_multiplicity: usize,
    pub defect_order: usize,
    pub vertex_degrees: Vec<usize>,
}

impl BrauerTreeLine {
    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|l| l == label)
    }

    pub fn check(&self) -> Result<()> {
        let e = self.e();
        if e == 0 || e * self.exceptional_multiplicity != self.defect_order - 1 {
            return Err(Error::PreconditionViolated(format!(
                "e = {e}, multiplicity {} and |D| = {} do not satisfy e*m = |D|-1",
                self.exceptional_multiplicity, self.defect_order
            )));
        }
        if let Some(v) = self.exceptional_position {
            if v != 0 && v != e {
                return Err(Error::Unsupported("exceptional vertex away from the end of the line".into()));
            }
        } else if self.exceptional_multiplicity != 1 {
            return Err(Error::PreconditionViolated("multiplicity > 1 without an exceptional vertex".into()));
        }
        Ok(())
    }
}

pub fn parse_tree(text: &str) -> Result<BrauerTreeLine> {
    let mut t = BrauerTreeLine {
        edges: vec![],
        exceptional_position: None,
        exceptional_multiplicity: 1,
        defect_order: 0,
        vertex_degrees: vec![],
    };
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let key = it.next().unwrap();
        let vals: Vec<&str> = it.collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| parse_err(ln, format!("bad number {s}")));
        match key {
            "defect" => t.defect_order = num(vals.first().ok_or_else(|| parse_err(ln, "missing value"))?)?,
            "edges" => t.edges = vals.iter().map(|s| s.to_string()).collect(),
            "vertices" => t.vertex_degrees = vals.iter().map(|s| num(s)).collect::<Result<_>>()?,
            "exceptional" => {
                if vals.len() != 2 {
                    return Err(parse_err(ln, "exceptional needs vertex and multiplicity"));
                }
                t.exceptional_position = Some(num(vals[0])?);
                t.exceptional_multiplicity = num(vals[1])?;
            }
            _ => return Err(parse_err(ln, format!("unknown key {key}"))),
        }
    }
    t.check()?;
    Ok(t)
}

/// All shipped trees as (file stem, tree), e.g. ("7_5_0", ...).
pub fn brauer_trees() -> Vec<(String, BrauerTreeLine)> {
    embedded::FILES
        .iter()
        .filter_map(|(name, text)| {
            let stem = name.strip_prefix("trees/")?.strip_suffix(".txt")?;
            Some((stem.to_string(), parse_tree(text).unwrap_or_else(|e| panic!("{name}: {e}"))))
        })
        .collect()
}

/// Tree of block `block` ("0" is the principal block, "cover3" the faithful
/// blocks of the triple cover) of Alt(n) in characteristic p.
pub fn brauer_tree(n: usize, p: u32, block: &str) -> Result<BrauerTreeLine> {
    let name = format!("trees/{n}_{p}_{block}.txt");
    let text = embedded::get(&name)
        .ok_or_else(|| Error::NotCatalogued(format!("Brauer tree for Alt({n}) p={p} block {block}")))?;
    parse_tree(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_trees_are_consistent() {
        let trees = brauer_trees();
        assert_eq!(trees.len(), 9);
        for (name, t) in &trees {
            t.check().unwrap();
            assert_eq!(t.vertex_degrees.len(), t.e() + 1, "{name}");
        }
        let t = brauer_tree(8, 7, "0").unwrap();
        assert_eq!(t.edges, ["1", "19", "45"]);
        assert_eq!(t.exceptional_multiplicity, 2);
        assert!(matches!(brauer_tree(9, 5, "0"), Err(Error::NotCatalogued(_))));
    }

    #[test]
    fn vertex_degrees_match_edges() {
        // an ordinary character is the sum of the simples on its edges, with
        // the exceptional characters sharing the end edge
        for (name, t) in brauer_trees() {
            let d: Vec<usize> = t.edges.iter().map(|l| crate::multiset::label_dim(l)).collect();
            for v in 0..=t.e() {
                let sum = if v > 0 { d[v - 1] } else { 0 } + if v < t.e() { d[v] } else { 0 };
                assert_eq!(t.vertex_degrees[v], sum, "{name} vertex {v}");
            }
        }
    }

    #[test]
    fn bad_trees() {
        assert!(parse_tree("defect 5\nedges 1 3\n").is_err());
        assert!(parse_tree("defect 7\nedges 1 5 10\nexceptional 1 2\n").is_err());
        match parse_tree("defect 5\nedges 1 3\nbogus 1\n") {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }
}
