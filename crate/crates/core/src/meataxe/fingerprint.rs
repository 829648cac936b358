//! Brauer-character fingerprints: eigenvalue multiplicities of p'-class
//! representatives against the canonical roots of unity of the Conway fields.

use crate::error::{Error, Result};
use crate::exactlinalg::poly::{charpoly, pdivrem, pmul, Poly};
use crate::exactlinalg::{gcd, mult_order, Field};
use crate::gmod::GModule;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// `eigcounts[class][j]` = multiplicity of ω_m^j as an eigenvalue, m the class order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub eigcounts: BTreeMap<String, Vec<u32>>,
}

impl Fingerprint {
    pub fn trace(&self, class: &str) -> Option<Cyclo> {
        self.eigcounts.get(class).map(|a| Cyclo::from_counts(a))
    }

    /// Compact text form `class:a0;a1;...|class:...`.
    pub fn encode(&self) -> String {
        let parts: Vec<String> = self
            .eigcounts
            .iter()
            .map(|(c, a)| {
                let v: Vec<String> = a.iter().map(|x| x.to_string()).collect();
                format!("{c}:{}", v.join(";"))
            })
            .collect();
        parts.join("|")
    }

    pub fn decode(dim: usize, s: &str) -> Option<Fingerprint> {
        let mut eigcounts = BTreeMap::new();
        for part in s.split('|').filter(|p| !p.is_empty()) {
            let (c, v) = part.split_once(':')?;
            let a: Option<Vec<u32>> = v.split(';').map(|x| x.parse().ok()).collect();
            eigcounts.insert(c.to_string(), a?);
        }
        Some(Fingerprint { dim, eigcounts })
    }
}

/// Element of ℤ[ζ_m] in the power basis 1, ζ, …, ζ^{φ(m)−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cyclo {
    pub m: u64,
    pub coeffs: Vec<i64>,
}

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(m: u64) -> Vec<i64> {
    // x^m − 1 divided by Φ_d for proper divisors d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = int_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn int_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db] / b[db];
        q[i] = c;
        for (j, &y) in b.iter().enumerate() {
            r[i + j] -= c * y;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

impl Cyclo {
    pub fn integer(m: u64, n: i64) -> Cyclo {
        let phi = cyclotomic_poly(m).len() - 1;
        let mut coeffs = vec![0; phi];
        coeffs[0] = n;
        Cyclo { m, coeffs }
    }

    /// Σ_j counts[j]·ζ^j reduced modulo Φ_m.
    pub fn from_counts(counts: &[u32]) -> Cyclo {
        let m = counts.len() as u64;
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        let mut v: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
        for i in (deg..v.len()).rev() {
            let c = v[i];
            if c != 0 {
                for (j, &y) in phi.iter().enumerate() {
                    v[i - deg + j] -= c * y;
                }
            }
        }
        v.truncate(deg);
        Cyclo { m, coeffs: v }
    }

    pub fn as_int(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        assert_eq!(self.m, other.m);
        Cyclo { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: i64) -> Cyclo {
        Cyclo { m: self.m, coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_int() {
            return write!(f, "{n}");
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => c.to_string(),
                1 => format!("{c}z{}", self.m),
                _ => format!("{c}z{}^{i}", self.m),
            });
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Minimal polynomials over GF(q) of the q-orbits on ℤ/m, as (orbit, poly).
fn orbit_polys(f: &'static Field, m: u64) -> Result<Vec<(Vec<u64>, Poly)>> {
    let p = f.p();
    let l = {
        let a = f.k() as u64;
        let b = mult_order(p as u64, m) as u64;
        a / gcd(a, b) * b
    };
    if !Field::available(p, l as u32) {
        return Err(Error::Unsupported(format!("roots of unity of order {m} need GF({p}^{l})")));
    }
    let big = Field::get(p, l as u32);
    let w = big.root_of_unity(m).expect("order divides the group order");
    let q = f.q() as u64;
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for j in 0..m {
        if seen[j as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = j;
        while !seen[i as usize] {
            seen[i as usize] = true;
            orbit.push(i);
            i = i * q % m;
        }
        let mut poly = Poly::one();
        for &i in &orbit {
            let root = big.pow(w, i);
            poly = pmul(big, &poly, &Poly::new(vec![big.neg(root), 1]));
        }
        let coeffs: Vec<u32> = poly
            .coeffs()
            .iter()
            .map(|&c| big.restrict_to(f, c).expect("orbit polynomial lies over the base field"))
            .collect();
        out.push((orbit, Poly::new(coeffs)));
    }
    Ok(out)
}

pub fn fingerprint(s: &GModule) -> Result<Fingerprint> {
    let f = s.field();
    let p = f.p() as u64;
    let g = s.group();
    let mut eigcounts = BTreeMap::new();
    for c in &g.classes {
        let m = c.order;
        if m % p == 0 {
            continue;
        }
        let mut counts = vec![0u32; m as usize];
        if s.dim() > 0 {
            let a = s.action(&c.rep);
            let mut cp = charpoly(&a);
            for (orbit, mu) in orbit_polys(f, m)? {
                let mut k = 0;
                loop {
                    let (qq, r) = pdivrem(f, &cp, &mu);
                    if !r.is_zero() {
                        break;
                    }
                    cp = qq;
                    k += 1;
                }
                for &i in &orbit {
                    counts[i as usize] = k;
                }
            }
            let total: u32 = counts.iter().sum();
            if total as usize != s.dim() {
                return Err(Error::PreconditionViolated(format!(
                    "class {} does not act semisimply with order-{m} eigenvalues",
                    c.label
                )));
            }
        }
        eigcounts.insert(c.label.clone(), counts);
    }
    Ok(Fingerprint { dim: s.dim(), eigcounts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cyclo_reduction() {
        // 1 + ζ + … + ζ^4 = 0 for m = 5
        assert_eq!(Cyclo::from_counts(&[1, 1, 1, 1, 1]).as_int(), Some(0));
        // ζ_3 + ζ_3² = −1
        assert_eq!(Cyclo::from_counts(&[0, 1, 1]).as_int(), Some(-1));
        assert_eq!(Cyclo::from_counts(&[3, 0]).as_int(), Some(3));
        assert_eq!(Cyclo::from_counts(&[0, 2]).as_int(), Some(-2));
        assert!(Cyclo::from_counts(&[0, 1, 0, 0, 1]).as_int().is_none());
    }
}
