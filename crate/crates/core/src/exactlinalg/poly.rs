//! Univariate polynomials over a small field: arithmetic, characteristic
//! polynomials and factorisation (square-free, distinct-degree, Cantor–Zassenhaus).

use super::field::{Elt, Field};
use super::mat::{Echelon, Mat};
use rand::Rng;

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(pub Vec<Elt>);

impl Poly {
    pub fn new(mut c: Vec<Elt>) -> Poly {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }
    pub fn one() -> Poly {
        Poly(vec![1])
    }
    pub fn x() -> Poly {
        Poly(vec![0, 1])
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    /// Degree; the zero polynomial reports 0.
    pub fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    pub fn lead(&self) -> Elt {
        *self.0.last().unwrap_or(&0)
    }
    pub fn coeffs(&self) -> &[Elt] {
        &self.0
    }
}

pub fn padd(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let n = a.0.len().max(b.0.len());
    let c = (0..n)
        .map(|i| f.add(*a.0.get(i).unwrap_or(&0), *b.0.get(i).unwrap_or(&0)))
        .collect();
    Poly::new(c)
}

pub fn psub(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let nb = Poly(b.0.iter().map(|&x| f.neg(x)).collect());
    padd(f, a, &nb)
}

pub fn pmul(f: &Field, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly(vec![]);
    }
    let mut c = vec![0; a.0.len() + b.0.len() - 1];
    for (i, &x) in a.0.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.0.iter().enumerate() {
            c[i + j] = f.add(c[i + j], f.mul(x, y));
        }
    }
    Poly::new(c)
}

pub fn pdivrem(f: &Field, a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_zero(), "division by zero polynomial");
    let mut r = a.0.clone();
    let db = b.deg();
    if r.len() <= db {
        return (Poly(vec![]), Poly::new(r));
    }
    let inv = f.inv(b.lead());
    let mut q = vec![0; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = f.mul(r[i + db], inv);
        q[i] = c;
        if c != 0 {
            for (j, &y) in b.0.iter().enumerate() {
                r[i + j] = f.sub(r[i + j], f.mul(c, y));
            }
        }
    }
    r.truncate(db);
    (Poly::new(q), Poly::new(r))
}

pub fn prem(f: &Field, a: &Poly, b: &Poly) -> Poly {
    pdivrem(f, a, b).1
}

pub fn monic(f: &Field, a: &Poly) -> Poly {
    if a.is_zero() {
        return a.clone();
    }
    let inv = f.inv(a.lead());
    Poly(a.0.iter().map(|&x| f.mul(x, inv)).collect())
}

pub fn pgcd(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = prem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub fn ppowmod(f: &Field, base: &Poly, mut e: u128, m: &Poly) -> Poly {
    let mut acc = Poly::one();
    let mut b = prem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = prem(f, &pmul(f, &acc, &b), m);
        }
        e >>= 1;
        if e > 0 {
            b = prem(f, &pmul(f, &b, &b), m);
        }
    }
    prem(f, &acc, m)
}

fn derivative(f: &Field, a: &Poly) -> Poly {
    let c = a.0.iter().enumerate().skip(1).map(|(i, &x)| f.mul(f.from_int(i as i64), x)).collect();
    Poly::new(c)
}

/// p-th root of a polynomial whose exponents are all multiples of p.
fn pth_root(f: &Field, a: &Poly) -> Poly {
    let p = f.p() as usize;
    // the Frobenius inverse on coefficients is x ↦ x^(q/p)
    let e = (f.q() / f.p()) as u64;
    let c = a.0.iter().step_by(p).map(|&x| f.pow(x, e)).collect();
    Poly::new(c)
}

/// Square-free decomposition: list of (square-free factor, multiplicity).
fn squarefree(f: &Field, a: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let a = monic(f, a);
    if a.deg() == 0 {
        return out;
    }
    let d = derivative(f, &a);
    if d.is_zero() {
        for (g, m) in squarefree(f, &pth_root(f, &a)) {
            out.push((g, m * f.p() as usize));
        }
        return out;
    }
    let mut c = pgcd(f, &a, &d);
    let mut w = pdivrem(f, &a, &c).0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = pgcd(f, &w, &c);
        let z = pdivrem(f, &w, &y).0;
        if z.deg() > 0 {
            out.push((monic(f, &z), i));
        }
        i += 1;
        w = y;
        c = pdivrem(f, &c, &w).0;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree(f, &pth_root(f, &c)) {
            out.push((g, m * f.p() as usize));
        }
    }
    out
}

/// Distinct-degree factorisation of a monic square-free polynomial.
fn distinct_degree(f: &Field, a: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = a.clone();
    let mut h = Poly::x();
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = ppowmod(f, &h, f.q() as u128, &rest);
        let g = pgcd(f, &rest, &psub(f, &h, &Poly::x()));
        if g.deg() > 0 {
            out.push((g.clone(), d));
            rest = pdivrem(f, &rest, &g).0;
            h = prem(f, &h, &rest);
        }
    }
    if rest.deg() > 0 {
        let dd = rest.deg();
        out.push((rest, dd));
    }
    out
}

fn equal_degree<R: Rng>(f: &Field, a: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    if a.deg() == d {
        return vec![monic(f, a)];
    }
    loop {
        let n = a.deg();
        let r = Poly::new((0..n).map(|_| rng.gen_range(0..f.q())).collect());
        if r.deg() == 0 {
            continue;
        }
        let g = if f.p() == 2 {
            // trace map x + x^2 + ... + x^(2^(kd-1))
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..(f.k() as usize * d) {
                t = prem(f, &pmul(f, &t, &t), a);
                acc = padd(f, &acc, &t);
            }
            pgcd(f, &acc, a)
        } else {
            let e = ((f.q() as u128).pow(d as u32) - 1) / 2;
            let t = ppowmod(f, &r, e, a);
            pgcd(f, &psub(f, &t, &Poly::one()), a)
        };
        if g.deg() > 0 && g.deg() < a.deg() {
            let h = pdivrem(f, a, &g).0;
            let mut v = equal_degree(f, &g, d, rng);
            v.extend(equal_degree(f, &h, d, rng));
            return v;
        }
    }
}

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
pub fn factor<R: Rng>(f: &Field, a: &Poly, rng: &mut R) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (sf, m) in squarefree(f, a) {
        for (g, d) in distinct_degree(f, &sf) {
            for h in equal_degree(f, &g, d, rng) {
                out.push((h, m));
            }
        }
    }
    out.sort_by(|x, y| (x.0.deg(), &x.0 .0).cmp(&(y.0.deg(), &y.0 .0)));
    // merge equal factors arising from different square-free parts
    let mut merged: Vec<(Poly, usize)> = Vec::new();
    for (p, m) in out {
        match merged.last_mut() {
            Some(last) if last.0 == p => last.1 += m,
            _ => merged.push((p, m)),
        }
    }
    merged
}

/// Characteristic polynomial by spinning cyclic subspaces.
pub fn charpoly(a: &Mat) -> Poly {
    let f = a.field();
    let n = a.rows();
    let mut w = Echelon::new(f, n);
    let mut result = Poly::one();
    for start in 0..n {
        let mut e = vec![0u16; n];
        e[start] = 1;
        w.reduce(&mut e);
        if e.iter().all(|&x| x == 0) {
            continue;
        }
        // chain t_0 = e, t_i = reduce_W(t_{i-1} A); track combinations in x^j
        let mut chain = Echelon::new(f, n);
        let mut combos: Vec<Vec<Elt>> = Vec::new(); // chain row i as combination of t_0..t_i
        let mut t = e;
        loop {
            let k = combos.len();
            let mut v = t.clone();
            let c = chain.reduce_with_coeffs(&mut v);
            // v = t_k - Σ c_i row_i; row_i = Σ combos[i][j] t_j
            let mut combo = vec![0; k + 1];
            combo[k] = 1;
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    for (j, &x) in combos[i].iter().enumerate() {
                        combo[j] = f.sub(combo[j], f.mul(ci, x));
                    }
                }
            }
            if v.iter().all(|&x| x == 0) {
                // relation: Σ combo_j t_j = 0 is the minimal polynomial on this quotient
                result = pmul(f, &result, &Poly::new(combo));
                break;
            }
            // normalise the same way the echelon does
            let pc = v.iter().position(|&x| x != 0).unwrap();
            let inv = f.inv(v[pc] as Elt);
            for x in combo.iter_mut() {
                *x = f.mul(*x, inv);
            }
            chain.push_reduced(v);
            combos.push(combo);
            let mut next = a.apply(&t);
            w.reduce(&mut next);
            t = next;
        }
        for r in chain.rows() {
            w.add(r.clone());
        }
        if w.is_full() {
            break;
        }
    }
    monic(f, &result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factor_x5_minus_1_gf4() {
        let f = field_make(2, 2).unwrap();
        let a = Poly::new(vec![f.neg(1), 0, 0, 0, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fac = factor(f, &a, &mut rng);
        let degs: Vec<usize> = fac.iter().map(|(p, _)| p.deg()).collect();
        assert_eq!(degs, vec![1, 2, 2]);
        let prod = fac.iter().fold(Poly::one(), |acc, (p, m)| {
            (0..*m).fold(acc, |a2, _| pmul(f, &a2, p))
        });
        assert_eq!(prod, a);
    }

    #[test]
    fn charpoly_companion() {
        let f = field_make(5, 1).unwrap();
        // companion of x^3 + 2x + 3
        let m = Mat::from_ints(f, 3, 3, &[0, 1, 0, 0, 0, 1, -3, -2, 0]);
        assert_eq!(charpoly(&m), Poly::new(vec![3, 2, 0, 1]));
        let i = Mat::identity(f, 4);
        assert_eq!(charpoly(&i), Poly::new(vec![1, 1, 1, 1, 1]));
    }
}
