//! Composition factors of modules (chop), isomorphism of simples, and
//! identification of simples by Brauer-character fingerprints.

mod fingerprint;

pub use fingerprint::{fingerprint, Cyclo, Fingerprint};

use crate::error::{Error, Result};
use crate::exactlinalg::poly::{charpoly, factor, Poly};
use crate::exactlinalg::{Echelon, Elt, Mat};
use crate::gmod::{hom_space, GModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;

/// Element of the group algebra: Σ c·(word in a, b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElt {
    pub terms: Vec<(Elt, Vec<u8>)>,
}

impl AlgElt {
    pub fn eval(&self, m: &GModule) -> Mat {
        let f = m.field();
        let mut acc = Mat::zero(f, m.dim(), m.dim());
        for (c, w) in &self.terms {
            acc.axpy(&m.word_matrix(w), *c);
        }
        acc
    }

    fn random<R: Rng>(rng: &mut R, q: u32) -> AlgElt {
        let nterms = rng.gen_range(2..=4);
        let mut terms = Vec::new();
        for _ in 0..nterms {
            let len = rng.gen_range(0..=4);
            let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2u8)).collect();
            let c = rng.gen_range(1..q);
            terms.push((c, w));
        }
        AlgElt { terms }
    }
}

impl fmt::Display for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| {
                let word: String = w.iter().map(|&l| if l == 0 { 'a' } else { 'b' }).collect();
                format!("{c}*{}", if word.is_empty() { "1".to_string() } else { word })
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Irreducibility certificate: f(ξ) has nullity deg f, a kernel vector spins
/// the module and a kernel vector of the transpose spins the dual.
#[derive(Clone, Debug)]
pub struct IrredCert {
    pub xi: AlgElt,
    pub poly: Poly,
    pub vec: Vec<u16>,
}

impl IrredCert {
    /// Row space of ker f(ξ) on another module over the same field.
    pub fn kernel_on(&self, n: &GModule) -> Mat {
        let a = self.xi.eval(n);
        a.poly_eval(self.poly.coeffs()).left_kernel()
    }
}

#[derive(Clone, Debug)]
pub struct ChopResult {
    pub factors: Vec<(GModule, usize)>,
    pub transcript: Vec<String>,
}

impl ChopResult {
    pub fn dims(&self) -> Vec<(usize, usize)> {
        self.factors.iter().map(|(s, k)| (s.dim(), *k)).collect()
    }
}

enum Step {
    Split(Echelon),
    Irreducible(IrredCert),
}

const MAX_FACTOR_DEGREE: usize = 12;

fn transpose_spin(m: &GModule, w: Vec<u16>) -> Echelon {
    let gt: Vec<Mat> = m.gens().iter().map(|g| g.transpose()).collect();
    crate::gmod::spin_with(m.field(), m.dim(), &gt, &[w], usize::MAX)
}

fn one_dim_cert(m: &GModule) -> IrredCert {
    let f = m.field();
    let lam = m.gens()[0].get(0, 0);
    IrredCert {
        xi: AlgElt { terms: vec![(1, vec![0])] },
        poly: Poly::new(vec![f.neg(lam), 1]),
        vec: vec![1],
    }
}

fn split_or_certify<R: Rng>(m: &GModule, rng: &mut R, log: &mut Vec<String>) -> Step {
    let f = m.field();
    let d = m.dim();
    if d == 1 {
        return Step::Irreducible(one_dim_cert(m));
    }
    let mut attempt = 0;
    loop {
        attempt += 1;
        let xi = AlgElt::random(rng, f.q());
        let a = xi.eval(m);
        let cp = charpoly(&a);
        let mut facs = factor(f, &cp, rng);
        // simple factors first, then by degree
        facs.sort_by_key(|(p, k)| (*k > 1, p.deg()));
        for (p, _) in facs.iter().take(3) {
            if p.deg() > MAX_FACTOR_DEGREE {
                continue;
            }
            let na = a.poly_eval(p.coeffs());
            let ker = na.left_kernel();
            let nullity = ker.rows();
            let v = ker.row(0).to_vec();
            let sp = m.spin_space(std::slice::from_ref(&v));
            if sp.rank() < d {
                log.push(format!("dim {d}: xi={xi} f={:?} nullity {nullity}: submodule of dim {}", p.0, sp.rank()));
                return Step::Split(sp);
            }
            if nullity == p.deg() {
                let kt = na.transpose().left_kernel();
                let w = kt.row(0).to_vec();
                let st = transpose_spin(m, w);
                if st.rank() < d {
                    let ann = st.to_mat().right_kernel();
                    log.push(format!(
                        "dim {d}: xi={xi} f={:?}: dual test gives submodule of dim {}",
                        p.0,
                        ann.rows()
                    ));
                    return Step::Split(Echelon::from_rows(f, d, ann.row_vecs()));
                }
                log.push(format!("dim {d}: irreducible, xi={xi} f={:?} (attempt {attempt})", p.0));
                return Step::Irreducible(IrredCert { xi, poly: p.clone(), vec: v });
            }
            // try a few more kernel vectors before giving up on this element
            for r in 1..ker.rows().min(4) {
                let sp = m.spin_space(&[ker.row(r).to_vec()]);
                if sp.rank() < d {
                    log.push(format!("dim {d}: xi={xi} f={:?}: submodule of dim {}", p.0, sp.rank()));
                    return Step::Split(sp);
                }
            }
        }
    }
}

/// Attach an irreducibility certificate, or report a proper submodule.
pub fn certify(m: &GModule, seed: u64) -> std::result::Result<GModule, Echelon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = Vec::new();
    match split_or_certify(m, &mut rng, &mut log) {
        Step::Irreducible(c) => {
            let mut s = m.clone();
            s.cert = Some(Arc::new(c));
            Ok(s)
        }
        Step::Split(e) => Err(e),
    }
}

/// Cheap isomorphism invariants: dimension and traces of a few words.
fn invariants(m: &GModule) -> Vec<Elt> {
    let words: [&[u8]; 5] = [&[0], &[1], &[0, 1], &[0, 1, 1], &[0, 0, 1, 1]];
    let mut v = vec![m.dim() as Elt];
    v.extend(words.iter().map(|w| m.word_matrix(w).trace()));
    v
}

fn same_simple(s: &GModule, t: &GModule) -> bool {
    s.dim() == t.dim() && hom_space(s, t).map(|h| !h.is_empty()).unwrap_or(false)
}

/// Composition factors with multiplicities, each carrying an irreducibility
/// certificate. The multiset does not depend on `seed`; the order is by
/// dimension, then by first appearance.
pub fn chop(m: &GModule, seed: u64) -> ChopResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut transcript = vec![format!("chop seed {seed}, dim {}", m.dim())];
    let mut found: Vec<(GModule, usize, Vec<Elt>)> = Vec::new();
    let mut work = vec![m.clone()];
    while let Some(x) = work.pop() {
        if x.dim() == 0 {
            continue;
        }
        if let Some(c) = &x.cert {
            // already certified (e.g. a catalogued simple)
            let _ = c;
            add_factor(&mut found, x);
            continue;
        }
        match split_or_certify(&x, &mut rng, &mut transcript) {
            Step::Split(sub) => {
                work.push(x.quotient(&sub));
                work.push(x.submodule(&sub));
            }
            Step::Irreducible(c) => {
                let mut s = x;
                s.cert = Some(Arc::new(c));
                add_factor(&mut found, s);
            }
        }
    }
    let mut factors: Vec<(GModule, usize)> = found.into_iter().map(|(s, k, _)| (s, k)).collect();
    factors.sort_by_key(|(s, _)| s.dim());
    ChopResult { factors, transcript }
}

fn add_factor(found: &mut Vec<(GModule, usize, Vec<Elt>)>, s: GModule) {
    let inv = invariants(&s);
    for (t, k, ti) in found.iter_mut() {
        if *ti == inv && same_simple(t, &s) {
            *k += 1;
            return;
        }
    }
    found.push((s, 1, inv));
}

/// Composition factor dimensions as a sorted list (with repetition).
pub fn chop_dims(m: &GModule, seed: u64) -> Vec<usize> {
    let mut v: Vec<usize> =
        chop(m, seed).factors.iter().flat_map(|(s, k)| std::iter::repeat_n(s.dim(), *k)).collect();
    v.sort_unstable();
    v
}

/// Isomorphism test for certified simples, with an explicit witness.
pub fn isomorphism(s: &GModule, t: &GModule) -> Result<Option<Mat>> {
    if s.cert.is_none() || t.cert.is_none() {
        return Err(Error::PreconditionViolated("is_isomorphic needs certified irreducible modules".into()));
    }
    if !s.is_compatible(t) {
        return Err(Error::IncompatibleModules(format!("{s:?} vs {t:?}")));
    }
    if s.dim() != t.dim() {
        return Ok(None);
    }
    Ok(hom_space(s, t)?.into_iter().next())
}

pub fn is_isomorphic(s: &GModule, t: &GModule) -> Result<bool> {
    Ok(isomorphism(s, t)?.is_some())
}

/// Label from the catalogue for (group, characteristic).
pub fn identify(s: &GModule) -> Result<String> {
    let cat = crate::repdata::simples(s.group().n, s.field().p())?;
    let fp = fingerprint(s)?;
    let hits: Vec<String> =
        cat.iter().filter(|e| e.fingerprint == fp).map(|e| e.label.clone()).collect();
    match hits.len() {
        0 => Err(Error::UnknownSimple(format!("{:?}", s))),
        1 => Ok(hits.into_iter().next().unwrap()),
        _ => Err(Error::AmbiguousLabel(hits)),
    }
}

/// Catalogue label, or `?<dim>` when the module is not catalogued.
pub fn label_of(s: &GModule) -> String {
    identify(s).unwrap_or_else(|_| format!("?{}", s.dim()))
}

/// Distinct composition factors with labels.
pub fn labelled_factors(m: &GModule) -> Vec<(GModule, String)> {
    chop(m, 0).factors.into_iter().map(|(s, _)| {
        let l = label_of(&s);
        (s, l)
    }).collect()
}

/// Composition factors as a labelled multiset.
pub fn chop_labels(m: &GModule, seed: u64) -> crate::multiset::CompFactorMultiset {
    let mut out = crate::multiset::CompFactorMultiset::new();
    for (s, k) in chop(m, seed).factors {
        out.add(&label_of(&s), k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;
    use crate::gmod::{direct_sum, ext_square, perm_module, tensor};

    #[test]
    fn perm_module_factors() {
        let f = field_make(3, 1).unwrap();
        assert_eq!(chop_dims(&perm_module(5, f).unwrap(), 1), vec![1, 4]);
        let f2 = field_make(2, 1).unwrap();
        assert_eq!(chop_dims(&perm_module(10, f2).unwrap(), 3), vec![1, 1, 8]);
        let p6 = perm_module(6, f2).unwrap();
        assert_eq!(chop_dims(&p6, 2), vec![1, 1, 4]);
    }

    #[test]
    fn seed_independent_and_additive() {
        let f = field_make(2, 1).unwrap();
        let p = perm_module(7, f).unwrap();
        let e = ext_square(&p);
        let base = chop_dims(&e, 0);
        for s in 1..4 {
            assert_eq!(chop_dims(&e, s), base);
        }
        let sum = direct_sum(&p, &e).unwrap();
        let mut both = chop_dims(&p, 0);
        both.extend(base);
        both.sort_unstable();
        assert_eq!(chop_dims(&sum, 9), both);
    }

    #[test]
    fn iso_needs_certificates() {
        let f = field_make(5, 1).unwrap();
        let p = perm_module(5, f).unwrap();
        assert!(matches!(is_isomorphic(&p, &p), Err(Error::PreconditionViolated(_))));
        let t = tensor(&p, &p).unwrap();
        let c = chop(&t, 4);
        assert_eq!(c.factors.iter().map(|(s, k)| s.dim() * k).sum::<usize>(), 25);
        for (s, _) in &c.factors {
            assert!(is_isomorphic(s, s).unwrap());
        }
    }
}
