//! Homomorphism spaces. A homomorphism M → N is a dim M × dim N matrix X
//! with ρ_M(g)·X = X·ρ_N(g) (row vectors, right action).
//!
//! M is spun from seed vectors; the unknowns are the images of the seeds,
//! and every non-tree edge of the spinning forest gives linear conditions.

use super::GModule;
use crate::error::Result;
use crate::exactlinalg::{Echelon, Mat};

struct Node {
    seed: usize,
    parent: Option<(usize, usize)>,
}

pub fn hom_space(m: &GModule, n: &GModule) -> Result<Vec<Mat>> {
    m.require_compatible(n)?;
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(Vec::new());
    }
    if let Some(cert) = &m.cert {
        // images of the certificate vector lie in ker f(ξ) on N
        let k = cert.kernel_on(n);
        return Ok(solve(m, n, std::slice::from_ref(&cert.vec), vec![k]));
    }
    let f = m.field();
    let ident = Mat::identity(f, n.dim());
    let basis = Mat::identity(f, m.dim()).row_vecs();
    Ok(solve_with_identity(m, n, &basis, &ident))
}

fn solve_with_identity(m: &GModule, n: &GModule, candidates: &[Vec<u16>], ident: &Mat) -> Vec<Mat> {
    // seeds are chosen lazily from the candidates while spinning
    let f = m.field();
    let d = m.dim();
    let mut ech = Echelon::new(f, d);
    let mut seeds: Vec<Vec<u16>> = Vec::new();
    for c in candidates {
        if ech.rank() == d {
            break;
        }
        if ech.contains(c) {
            continue;
        }
        seeds.push(c.clone());
        ech = m.spin_space(&seeds);
    }
    let spaces = vec![ident.clone(); seeds.len()];
    solve(m, n, &seeds, spaces)
}

/// Solve for homomorphisms whose seed images lie in the row spaces of `spaces`.
fn solve(m: &GModule, n: &GModule, seeds: &[Vec<u16>], spaces: Vec<Mat>) -> Vec<Mat> {
    let f = m.field();
    let d = m.dim();
    let nd = n.dim();
    let offsets: Vec<usize> = spaces
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s.rows();
            Some(o)
        })
        .collect();
    let total: usize = spaces.iter().map(|s| s.rows()).sum();
    if total == 0 {
        return Vec::new();
    }

    // spinning forest of M
    let mut ech = Echelon::new(f, d);
    let mut vecs: Vec<Vec<u16>> = Vec::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut images: Vec<Mat> = Vec::new(); // image of node as (rows of its seed space) × nd
    for (j, s) in seeds.iter().enumerate() {
        if !ech.add(s.clone()) {
            continue;
        }
        let start = vecs.len();
        vecs.push(s.clone());
        nodes.push(Node { seed: j, parent: None });
        images.push(spaces[j].clone());
        let mut head = start;
        while head < vecs.len() {
            for (gi, g) in m.gens().iter().enumerate() {
                let w = g.apply(&vecs[head]);
                if ech.add(w.clone()) {
                    vecs.push(w);
                    nodes.push(Node { seed: j, parent: Some((head, gi)) });
                    images.push(images[head].mul(&n.gens()[gi]));
                }
            }
            head += 1;
        }
    }
    if vecs.len() != d {
        // seeds do not generate M; fall back to adding standard vectors
        let mut more = seeds.to_vec();
        let mut sp = spaces;
        for i in 0..d {
            let mut e = vec![0u16; d];
            e[i] = 1;
            if !ech.contains(&e) {
                ech.add(e.clone());
                more.push(e);
                sp.push(Mat::identity(f, nd));
            }
        }
        return solve(m, n, &more, sp);
    }
    let bmat = Mat::from_rows(f, d, &vecs);
    let binv = bmat.inverse().expect("spinning basis is a basis");

    let tree: std::collections::HashSet<(usize, usize)> =
        nodes.iter().filter_map(|nd| nd.parent).collect();

    let mut cons = Echelon::new(f, total);
    'outer: for k in 0..d {
        for (gi, g) in m.gens().iter().enumerate() {
            if tree.contains(&(k, gi)) {
                continue;
            }
            // φ(b_k g) − Σ c_l φ(b_l) = 0
            let w = g.apply(&vecs[k]);
            let c = binv.apply(&w);
            let mut big = Mat::zero(f, total, nd);
            let lhs = images[k].mul(&n.gens()[gi]);
            add_block(&mut big, offsets[nodes[k].seed], &lhs, 1);
            for (l, &cl) in c.iter().enumerate() {
                if cl != 0 {
                    add_block(&mut big, offsets[nodes[l].seed], &images[l], f.neg(cl as u32));
                }
            }
            let bt = big.transpose();
            for r in 0..bt.rows() {
                cons.add(bt.row(r).to_vec());
                if cons.is_full() {
                    break 'outer;
                }
            }
        }
    }
    let sols = cons.to_mat().right_kernel();
    let mut out = Vec::new();
    for s in 0..sols.rows() {
        let y = sols.row(s);
        let mut phi = Mat::zero(f, d, nd);
        for k in 0..d {
            let j = nodes[k].seed;
            let part = &y[offsets[j]..offsets[j] + spaces[j].rows()];
            let v = images[k].apply(part);
            phi.row_mut(k).copy_from_slice(&v);
        }
        out.push(binv.mul(&phi));
    }
    out
}

fn add_block(big: &mut Mat, off: usize, blk: &Mat, s: u32) {
    let f = big.field();
    for r in 0..blk.rows() {
        let src = blk.row(r).to_vec();
        f.axpy(big.row_mut(off + r), &src, s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;
    use crate::gmod::{dual, perm_module};
    use crate::groups::alt_group;

    fn check_hom(m: &GModule, n: &GModule, x: &Mat) {
        for (a, b) in m.gens().iter().zip(n.gens()) {
            assert_eq!(a.mul(x), x.mul(b));
        }
    }

    #[test]
    fn trivial_into_perm() {
        let f = field_make(2, 1).unwrap();
        let g = alt_group(10).unwrap();
        let one = GModule::trivial(g, f);
        let p = perm_module(10, f).unwrap();
        let h = hom_space(&one, &p).unwrap();
        assert_eq!(h.len(), 1);
        check_hom(&one, &p, &h[0]);
        assert_eq!(hom_space(&p, &one).unwrap().len(), 1);
    }

    #[test]
    fn end_of_perm_module() {
        // End(perm module of a 2-transitive group) has dimension 2
        let f = field_make(3, 1).unwrap();
        let p = perm_module(6, f).unwrap();
        let h = hom_space(&p, &p).unwrap();
        assert_eq!(h.len(), 2);
        for x in &h {
            check_hom(&p, &p, x);
        }
        let pd = dual(&p);
        assert_eq!(hom_space(&pd, &pd).unwrap().len(), 2);
    }
}
