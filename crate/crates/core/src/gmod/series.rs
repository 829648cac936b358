//! Socles, socle series, I-radicals and I-residuals.
//!
//! The socle of M is the sum of the images of Hom(S, M) over the distinct
//! composition factors S of M. Higher layers are socles of quotients.

use super::{dual, hom_space, GModule};
use crate::error::Result;
use crate::exactlinalg::Echelon;
use crate::meataxe::labelled_factors;
use crate::multiset::CompFactorMultiset;
use serde::{Deserialize, Serialize};

/// Socle layers, bottom first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleSeries {
    pub layers: Vec<CompFactorMultiset>,
}

impl SocleSeries {
    pub fn dim(&self) -> usize {
        self.layers.iter().map(|l| l.dim()).sum()
    }
}

/// Top-down slash notation, e.g. `1/8/1`.
impl std::fmt::Display for SocleSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.layers.iter().rev().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("/"))
    }
}

/// Sum of the images of Hom(S, m) for S in `simples`; also returns the
/// dimension of each isotypic part.
fn isotypic_socle(m: &GModule, simples: &[GModule]) -> Result<(Echelon, Vec<usize>)> {
    let mut total = Echelon::new(m.field(), m.dim());
    let mut parts = Vec::with_capacity(simples.len());
    for s in simples {
        let mut e = Echelon::new(m.field(), m.dim());
        for x in hom_space(s, m)? {
            for r in 0..x.rows() {
                e.add(x.row(r).to_vec());
            }
        }
        parts.push(e.rank());
        for r in e.rows() {
            total.add(r.clone());
        }
    }
    Ok((total, parts))
}

/// Lift vectors of the quotient m / sub (complement on the non-pivot columns).
fn lift_into(sub: &mut Echelon, quot_rows: &[Vec<u16>]) {
    let np = sub.non_pivots();
    let d = sub.ncols();
    let lifted: Vec<Vec<u16>> = quot_rows
        .iter()
        .map(|q| {
            let mut v = vec![0u16; d];
            for (i, &c) in np.iter().enumerate() {
                v[c] = q[i];
            }
            v
        })
        .collect();
    for v in lifted {
        sub.add(v);
    }
}

/// Socle of m as a subspace.
pub fn socle(m: &GModule) -> Result<Echelon> {
    let simples: Vec<GModule> = labelled_factors(m).into_iter().map(|(s, _)| s).collect();
    Ok(isotypic_socle(m, &simples)?.0)
}

pub fn socle_series(m: &GModule) -> Result<SocleSeries> {
    let simples = labelled_factors(m);
    let mods: Vec<GModule> = simples.iter().map(|(s, _)| s.clone()).collect();
    let mut below = Echelon::new(m.field(), m.dim());
    let mut layers = Vec::new();
    while below.rank() < m.dim() {
        let q = m.quotient(&below);
        let (soc, parts) = isotypic_socle(&q, &mods)?;
        let mut layer = CompFactorMultiset::new();
        for ((s, label), &r) in simples.iter().zip(&parts) {
            layer.add(label, r / s.dim());
        }
        debug_assert!(soc.rank() > 0);
        lift_into(&mut below, soc.rows());
        layers.push(layer);
    }
    Ok(SocleSeries { layers })
}

/// Largest submodule whose composition factors lie among `simples`.
pub(crate) fn radical_space(m: &GModule, simples: &[GModule]) -> Result<Echelon> {
    let mut r = Echelon::new(m.field(), m.dim());
    if simples.is_empty() {
        return Ok(r);
    }
    while r.rank() < m.dim() {
        let q = m.quotient(&r);
        let (soc, _) = isotypic_socle(&q, simples)?;
        if soc.rank() == 0 {
            break;
        }
        lift_into(&mut r, soc.rows());
    }
    Ok(r)
}

fn factors_in(m: &GModule, labels: &[&str], dualize: bool) -> Vec<GModule> {
    labelled_factors(m)
        .into_iter()
        .filter(|(s, l)| {
            if dualize {
                // s is a factor of M*; keep it if its dual carries a label in I
                let d = crate::meataxe::label_of(&dual(s));
                labels.contains(&d.as_str())
            } else {
                labels.contains(&l.as_str())
            }
        })
        .map(|(s, _)| s)
        .collect()
}

/// The I-radical: largest submodule with all composition factors labelled in I.
pub fn radical_wrt(m: &GModule, labels: &[&str]) -> Result<GModule> {
    let simples = factors_in(m, labels, false);
    let r = radical_space(m, &simples)?;
    Ok(m.submodule(&r))
}

/// The I-residual: smallest submodule whose quotient has all factors labelled in I.
/// It is the annihilator in M of the I*-radical of M*.
pub fn residual_wrt(m: &GModule, labels: &[&str]) -> Result<GModule> {
    Ok(m.submodule(&residual_space(m, labels)?))
}

pub(crate) fn residual_space(m: &GModule, labels: &[&str]) -> Result<Echelon> {
    let md = dual(m);
    let simples = factors_in(&md, labels, true);
    let r = radical_space(&md, &simples)?;
    let ann = r.to_mat().right_kernel();
    Ok(Echelon::from_rows(m.field(), m.dim(), ann.row_vecs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;
    use crate::gmod::perm_module;

    #[test]
    fn perm10_layers() {
        let f = field_make(2, 1).unwrap();
        let p = perm_module(10, f).unwrap();
        let s = socle_series(&p).unwrap();
        assert_eq!(s.to_string(), "1/8/1");
        assert_eq!(radical_wrt(&p, &["1"]).unwrap().dim(), 1);
        assert_eq!(residual_wrt(&p, &["1"]).unwrap().dim(), 9);
        assert_eq!(radical_wrt(&p, &["1", "8"]).unwrap().dim(), 10);
    }
}
