//! Modules for Alt(n) over finite fields, given by the matrices of the two
//! standard generators acting on row vectors, and the functors used on them.

mod hom;
mod io;
mod series;

pub use hom::hom_space;
pub use io::{load_module, read_module, save_module, write_module};
pub use series::{radical_wrt, residual_wrt, socle, socle_series, SocleSeries};

use crate::error::{Error, Result};
use crate::exactlinalg::{Echelon, Elt, Field, Mat};
use crate::groups::{perm_matrix, Group, Perm, SubgroupEmbedding};
use crate::meataxe::IrredCert;
use std::sync::Arc;

#[derive(Clone)]
pub struct GModule {
    group: Group,
    field: &'static Field,
    dim: usize,
    gens: Arc<Vec<Mat>>,
    invs: Arc<Vec<Mat>>,
    pub(crate) cert: Option<Arc<IrredCert>>,
}

impl std::fmt::Debug for GModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GModule(alt{}, GF({}), dim {})", self.group.n, self.field.name(), self.dim)
    }
}

impl GModule {
    /// Module from generator matrices; checks invertibility and element orders.
    pub fn new(group: Group, field: &'static Field, gens: Vec<Mat>) -> Result<GModule> {
        let m = Self::from_gens_unchecked(group, field, gens)?;
        m.check_relations()?;
        Ok(m)
    }

    pub(crate) fn from_gens_unchecked(group: Group, field: &'static Field, gens: Vec<Mat>) -> Result<GModule> {
        if gens.len() != group.generators.len() {
            return Err(Error::PreconditionViolated("wrong number of generator matrices".into()));
        }
        let dim = gens.first().map(|g| g.rows()).unwrap_or(0);
        let mut invs = Vec::new();
        for g in &gens {
            if g.rows() != dim || g.cols() != dim || g.field() != field {
                return Err(Error::PreconditionViolated("generator matrix shape or field mismatch".into()));
            }
            invs.push(g.inverse().ok_or_else(|| Error::PreconditionViolated("singular generator".into()))?);
        }
        Ok(GModule { group, field, dim, gens: Arc::new(gens), invs: Arc::new(invs), cert: None })
    }

    /// Check that short relators of the permutation generators hold on the matrices.
    pub fn check_relations(&self) -> Result<()> {
        let g = &self.group;
        let words: [&[u8]; 6] = [&[0], &[1], &[0, 1], &[0, 3], &[0, 1, 2, 3], &[0, 0, 1]];
        for w in words {
            let perm = g.eval_word(w);
            let ord = perm.order();
            let m = self.word_matrix(w).pow(ord);
            if m != Mat::identity(self.field, self.dim) {
                return Err(Error::PreconditionViolated(format!("relator of order {ord} fails")));
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Group {
        &self.group
    }
    pub fn field(&self) -> &'static Field {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn gens(&self) -> &[Mat] {
        &self.gens
    }
    pub fn is_certified_irreducible(&self) -> bool {
        self.cert.is_some()
    }

    fn letter(&self, l: u8) -> &Mat {
        match l {
            0 | 1 => &self.gens[l as usize],
            _ => &self.invs[(l - 2) as usize],
        }
    }

    pub fn word_matrix(&self, w: &[u8]) -> Mat {
        let mut acc = Mat::identity(self.field, self.dim);
        for &l in w {
            acc = acc.mul(self.letter(l));
        }
        acc
    }

    /// Matrix of a group element.
    pub fn action(&self, g: &Perm) -> Mat {
        let w = self.group.word_for(g);
        self.word_matrix(&w)
    }

    /// Apply a group element to a row vector.
    pub fn act_vec(&self, v: &[u16], g: &Perm) -> Vec<u16> {
        let w = self.group.word_for(g);
        let mut out = v.to_vec();
        for &l in w.iter() {
            out = self.letter(l).apply(&out);
        }
        out
    }

    pub fn trivial(group: Group, field: &'static Field) -> GModule {
        let gens = vec![Mat::identity(field, 1); group.generators.len()];
        Self::from_gens_unchecked(group, field, gens).unwrap()
    }

    pub fn zero(group: Group, field: &'static Field) -> GModule {
        let gens = vec![Mat::zero(field, 0, 0); group.generators.len()];
        Self::from_gens_unchecked(group, field, gens).unwrap()
    }

    pub fn is_compatible(&self, other: &GModule) -> bool {
        self.group.n == other.group.n && self.field == other.field
    }

    fn require_compatible(&self, other: &GModule) -> Result<()> {
        if self.is_compatible(other) {
            Ok(())
        } else {
            Err(Error::IncompatibleModules(format!("{self:?} vs {other:?}")))
        }
    }

    pub fn extend_scalars(&self, big: &'static Field) -> Result<GModule> {
        if big.p() != self.field.p() || !big.k().is_multiple_of(self.field.k()) {
            return Err(Error::IncompatibleModules(format!(
                "GF({}) is not a subfield of GF({})",
                self.field.name(),
                big.name()
            )));
        }
        let gens = self.gens.iter().map(|m| m.extend_scalars(big)).collect();
        let invs = self.invs.iter().map(|m| m.extend_scalars(big)).collect();
        Ok(GModule {
            group: self.group.clone(),
            field: big,
            dim: self.dim,
            gens: Arc::new(gens),
            invs: Arc::new(invs),
            cert: None,
        })
    }

    /// Submodule spanned by an invariant subspace (rows of `ech`), in the echelon basis.
    pub fn submodule(&self, ech: &Echelon) -> GModule {
        let k = ech.rank();
        let f = self.field;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Mat::zero(f, k, k);
                for (i, b) in ech.rows().iter().enumerate() {
                    let img = g.apply(b);
                    let c = ech.coords(&img).expect("subspace not invariant");
                    for (j, &x) in c.iter().enumerate() {
                        m.set(i, j, x);
                    }
                }
                m
            })
            .collect();
        Self::from_gens_unchecked(self.group.clone(), f, gens).unwrap()
    }

    /// Quotient by an invariant subspace, on the complement spanned by the
    /// standard basis vectors at non-pivot columns.
    pub fn quotient(&self, ech: &Echelon) -> GModule {
        let np = ech.non_pivots();
        let f = self.field;
        let k = np.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Mat::zero(f, k, k);
                for (i, &c) in np.iter().enumerate() {
                    let mut img = g.row(c).to_vec();
                    ech.reduce(&mut img);
                    for (j, &cc) in np.iter().enumerate() {
                        m.set(i, j, img[cc] as Elt);
                    }
                }
                m
            })
            .collect();
        Self::from_gens_unchecked(self.group.clone(), f, gens).unwrap()
    }

    /// Smallest invariant subspace containing the seeds.
    pub fn spin_space(&self, seeds: &[Vec<u16>]) -> Echelon {
        spin_with(self.field, self.dim, &self.gens, seeds, usize::MAX)
    }
}

/// Closure of `seeds` under the matrices `gens`; stops early once `limit` is reached.
pub(crate) fn spin_with(f: &'static Field, dim: usize, gens: &[Mat], seeds: &[Vec<u16>], limit: usize) -> Echelon {
    let mut ech = Echelon::new(f, dim);
    let mut queue: Vec<Vec<u16>> = Vec::new();
    for s in seeds {
        let mut v = s.clone();
        ech.reduce(&mut v);
        if ech.push_reduced(v) {
            queue.push(ech.rows().last().unwrap().clone());
        }
    }
    let mut head = 0;
    while head < queue.len() && ech.rank() < limit.min(dim) {
        let v = queue[head].clone();
        head += 1;
        for g in gens {
            let mut w = g.apply(&v);
            ech.reduce(&mut w);
            if ech.push_reduced(w) {
                queue.push(ech.rows().last().unwrap().clone());
                if ech.rank() >= limit.min(dim) {
                    break;
                }
            }
        }
    }
    ech
}

/// Submodule generated by `seeds`, with the inclusion map (rows = images of the
/// submodule basis in M).
pub fn spin(m: &GModule, seeds: &[Vec<u16>]) -> Result<(GModule, Mat)> {
    if seeds.iter().any(|s| s.len() != m.dim) {
        return Err(Error::PreconditionViolated("seed length differs from module dimension".into()));
    }
    let ech = m.spin_space(seeds);
    let sub = m.submodule(&ech);
    Ok((sub, ech.to_mat()))
}

/// Permutation module on n points.
pub fn perm_module(n: usize, f: &'static Field) -> Result<GModule> {
    let g = crate::groups::alt_group(n)?;
    let gens = g.generators.iter().map(|p| perm_matrix(p, f)).collect();
    GModule::from_gens_unchecked(g, f, gens)
}

/// Permutation module on the k-subsets of n points (subsets in lexicographic order).
pub fn perm_subsets_module(n: usize, k: usize, f: &'static Field) -> Result<GModule> {
    let g = crate::groups::alt_group(n)?;
    let subsets = k_subsets(n, k);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let gens = g
        .generators
        .iter()
        .map(|p| {
            let mut m = Mat::zero(f, subsets.len(), subsets.len());
            for (i, s) in subsets.iter().enumerate() {
                let mut img: Vec<usize> = s.iter().map(|&x| p.image(x)).collect();
                img.sort_unstable();
                m.set(i, index[&img], 1);
            }
            m
        })
        .collect();
    GModule::from_gens_unchecked(g, f, gens)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Dual module: g acts by the inverse transpose.
pub fn dual(m: &GModule) -> GModule {
    let gens: Vec<Mat> = m.invs.iter().map(|x| x.transpose()).collect();
    let invs: Vec<Mat> = m.gens.iter().map(|x| x.transpose()).collect();
    GModule {
        group: m.group.clone(),
        field: m.field,
        dim: m.dim,
        gens: Arc::new(gens),
        invs: Arc::new(invs),
        cert: None,
    }
}

pub fn direct_sum(a: &GModule, b: &GModule) -> Result<GModule> {
    a.require_compatible(b)?;
    let gens = a.gens.iter().zip(b.gens.iter()).map(|(x, y)| x.block_diag(y)).collect();
    let invs = a.invs.iter().zip(b.invs.iter()).map(|(x, y)| x.block_diag(y)).collect();
    Ok(GModule {
        group: a.group.clone(),
        field: a.field,
        dim: a.dim + b.dim,
        gens: Arc::new(gens),
        invs: Arc::new(invs),
        cert: None,
    })
}

/// Direct sum of a list of modules (empty list gives the zero module of `group`).
pub fn direct_sum_all(group: &Group, f: &'static Field, parts: &[GModule]) -> Result<GModule> {
    let mut acc = GModule::zero(group.clone(), f);
    for p in parts {
        acc = direct_sum(&acc, p)?;
    }
    Ok(acc)
}

/// Tensor product on the basis e_i ⊗ f_j ordered by (i, j).
pub fn tensor(a: &GModule, b: &GModule) -> Result<GModule> {
    a.require_compatible(b)?;
    let gens = a.gens.iter().zip(b.gens.iter()).map(|(x, y)| x.kron(y)).collect();
    let invs = a.invs.iter().zip(b.invs.iter()).map(|(x, y)| x.kron(y)).collect();
    Ok(GModule {
        group: a.group.clone(),
        field: a.field,
        dim: a.dim * b.dim,
        gens: Arc::new(gens),
        invs: Arc::new(invs),
        cert: None,
    })
}

/// Matrix of g on the exterior square, basis e_i ∧ e_j (i < j) in lexicographic order.
fn wedge_matrix(g: &Mat) -> Mat {
    let f = g.field();
    let d = g.rows();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let idx = |i: usize, j: usize| -> usize {
        // position of (i, j), i < j, in lexicographic order
        i * d - i * (i + 1) / 2 + (j - i - 1)
    };
    let n = pairs.len();
    let mut out = Mat::zero(f, n, n);
    for (r, &(i, j)) in pairs.iter().enumerate() {
        let gi = g.row(i);
        let gj = g.row(j);
        let row = out.row_mut(r);
        // (e_i g) ∧ (e_j g) = Σ_{k<l} (g_ik g_jl − g_il g_jk) e_k ∧ e_l
        for k in 0..d {
            let a = gi[k] as Elt;
            let b = gj[k] as Elt;
            if a == 0 && b == 0 {
                continue;
            }
            for l in k + 1..d {
                let c = gj[l] as Elt;
                let e = gi[l] as Elt;
                let v = f.sub(f.mul(a, c), f.mul(e, b));
                if v != 0 {
                    let t = idx(k, l);
                    row[t] = f.add(row[t] as Elt, v) as u16;
                }
            }
        }
    }
    out
}

pub fn ext_square(m: &GModule) -> GModule {
    let gens: Vec<Mat> = m.gens.iter().map(wedge_matrix).collect();
    let invs: Vec<Mat> = m.invs.iter().map(wedge_matrix).collect();
    let dim = m.dim * m.dim.saturating_sub(1) / 2;
    GModule { group: m.group.clone(), field: m.field, dim, gens: Arc::new(gens), invs: Arc::new(invs), cert: None }
}

/// Restriction along a subgroup embedding.
pub fn restrict(m: &GModule, e: &SubgroupEmbedding) -> Result<GModule> {
    if e.ambient.n != m.group.n {
        return Err(Error::IncompatibleModules(format!(
            "embedding ambient alt{} but module for alt{}",
            e.ambient.n, m.group.n
        )));
    }
    let gens = e.images.iter().map(|p| m.action(p)).collect();
    GModule::from_gens_unchecked(e.sub.clone(), m.field, gens)
}

/// The module twisted by conjugation with a permutation of the same degree
/// (outer automorphism when the permutation is odd).
pub fn twist(m: &GModule, by: &Perm) -> GModule {
    let inv = by.inverse();
    let gens = m
        .group
        .generators
        .iter()
        .map(|g| m.action(&by.mul(g).mul(&inv)))
        .collect();
    GModule::from_gens_unchecked(m.group.clone(), m.field, gens).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;

    #[test]
    fn wedge_of_two_dim_is_det() {
        let f = field_make(5, 1).unwrap();
        let g = Mat::from_ints(f, 2, 2, &[1, 2, 3, 4]);
        let w = wedge_matrix(&g);
        assert_eq!(w.get(0, 0), f.from_int(4 - 6));
    }

    #[test]
    fn wedge_is_homomorphism() {
        let f = field_make(3, 2).unwrap();
        let m = perm_module(6, f).unwrap();
        let a = &m.gens()[0];
        let b = &m.gens()[1];
        assert_eq!(wedge_matrix(&a.mul(b)), wedge_matrix(a).mul(&wedge_matrix(b)));
        let e = ext_square(&m);
        assert_eq!(e.dim(), 15);
        e.check_relations().unwrap();
    }

    #[test]
    fn ext_square_of_line_is_zero() {
        let f = field_make(2, 1).unwrap();
        let g = crate::groups::alt_group(5).unwrap();
        assert_eq!(ext_square(&GModule::trivial(g, f)).dim(), 0);
    }

    #[test]
    fn spin_examples() {
        let f = field_make(5, 1).unwrap();
        let m = perm_module(5, f).unwrap();
        let (s, inc) = spin(&m, &[vec![1; 5]]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(inc.rows(), 1);
        let (z, _) = spin(&m, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        let basis: Vec<Vec<u16>> = Mat::identity(f, 5).row_vecs();
        assert_eq!(spin(&m, &basis).unwrap().0.dim(), 5);
    }

    #[test]
    fn incompatible() {
        let m = perm_module(5, field_make(2, 1).unwrap()).unwrap();
        let n = perm_module(5, field_make(3, 1).unwrap()).unwrap();
        assert!(matches!(tensor(&m, &n), Err(Error::IncompatibleModules(_))));
        let e = crate::groups::point_stabilizer_embedding(7).unwrap();
        assert!(matches!(restrict(&m, &e), Err(Error::IncompatibleModules(_))));
    }
}
