//! Small finite fields GF(p^k) with log/antilog tables.
//!
//! Elements are encoded as integers `Σ c_i p^i` where `c_i` is the coefficient of
//! `α^i` and `α` is a root of the Conway polynomial. Zero is 0 and one is 1, so the
//! prime subfield is encoded by the integers `0..p`.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub type Elt = u32;

const ZECH_NONE: u32 = u32::MAX;

/// Conway polynomials, coefficients from the constant term upwards (monic).
fn conway(p: u32, k: u32) -> Option<&'static [u32]> {
    let c: &'static [u32] = match (p, k) {
        (2, 1) => &[1, 1],
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 1, 1, 0, 1],
        (3, 1) => &[1, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (3, 4) => &[2, 0, 0, 2, 1],
        (3, 5) => &[1, 2, 0, 0, 0, 1],
        (3, 6) => &[2, 2, 1, 0, 2, 0, 1],
        (5, 1) => &[3, 1],
        (5, 2) => &[2, 4, 1],
        (5, 3) => &[3, 3, 0, 1],
        (5, 4) => &[2, 4, 4, 0, 1],
        (5, 5) => &[3, 4, 0, 0, 0, 1],
        (5, 6) => &[2, 0, 1, 4, 1, 0, 1],
        (7, 1) => &[4, 1],
        (7, 2) => &[3, 6, 1],
        (7, 3) => &[4, 0, 6, 1],
        (7, 4) => &[3, 4, 5, 0, 1],
        (7, 5) => &[4, 1, 0, 0, 0, 1],
        (7, 6) => &[3, 6, 4, 5, 1, 0, 1],
        _ => return None,
    };
    Some(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Two,
    Prime,
    Ext,
}

/// A finite field descriptor. Obtain one with [`field_make`]; descriptors are
/// interned so equal `(p, k)` give the same reference.
#[derive(Debug)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    kind: Kind,
    conway: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    neg: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}
impl Eq for Field {}

static REGISTRY: OnceLock<Mutex<HashMap<(u32, u32), &'static Field>>> = OnceLock::new();

/// Canonical GF(p^k) for p in {2,3,5,7}, 1 <= k <= 4.
pub fn field_make(p: u32, k: u32) -> Result<&'static Field> {
    if !matches!(p, 2 | 3 | 5 | 7) || !(1..=4).contains(&k) {
        return Err(Error::UnsupportedField { p, k });
    }
    Ok(Field::get(p, k))
}

impl Field {
    /// Internal access allowing degrees up to 6 (used for roots of unity).
    pub(crate) fn get(p: u32, k: u32) -> &'static Field {
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = reg.lock().unwrap();
        if let Some(f) = map.get(&(p, k)) {
            return f;
        }
        let f: &'static Field = Box::leak(Box::new(Field::build(p, k)));
        map.insert((p, k), f);
        f
    }

    /// Whether `GF(p^k)` (any k up to 6) has tables available internally.
    pub(crate) fn available(p: u32, k: u32) -> bool {
        conway(p, k).is_some()
    }

    fn build(p: u32, k: u32) -> Field {
        let c = conway(p, k).unwrap_or_else(|| panic!("no Conway polynomial for {p}^{k}"));
        let q = p.pow(k);
        let kind = if p == 2 && k == 1 {
            Kind::Two
        } else if k == 1 {
            Kind::Prime
        } else {
            Kind::Ext
        };
        // powers of alpha as digit vectors
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u32; k as usize];
        cur[0] = 1;
        for i in 0..(q - 1) as usize {
            let code = encode(&cur, p);
            exp[i] = code;
            log[code as usize] = i as u32;
            // multiply by alpha
            if k == 1 {
                let root = (p - c[0]) % p;
                cur[0] = cur[0] * root % p;
            } else {
                let top = cur[k as usize - 1];
                for j in (1..k as usize).rev() {
                    cur[j] = cur[j - 1];
                }
                cur[0] = 0;
                for j in 0..k as usize {
                    cur[j] = (cur[j] + (p - c[j]) * top) % p;
                }
            }
        }
        for i in 0..(q - 1) as usize {
            exp[i + (q - 1) as usize] = exp[i];
        }
        let mut neg = vec![0u32; q as usize];
        for a in 0..q {
            let d = decode(a, p, k);
            let nd: Vec<u32> = d.iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = encode(&nd, p);
        }
        let mut zech = vec![ZECH_NONE; (q - 1) as usize];
        for n in 0..(q - 1) as usize {
            let a = exp[n];
            let s = add_digits(a, 1, p, k);
            if s != 0 {
                zech[n] = log[s as usize];
            }
        }
        Field { p, k, q, kind, conway: c.to_vec(), exp, log, zech, neg }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn conway_poly(&self) -> &[u32] {
        &self.conway
    }
    pub fn is_prime(&self) -> bool {
        self.k == 1
    }
    /// The fixed multiplicative generator (root of the Conway polynomial).
    pub fn generator(&self) -> Elt {
        self.exp[1 % (self.q as usize - 1).max(1)]
    }
    pub fn name(&self) -> String {
        format!("{}^{}", self.p, self.k)
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        match self.kind {
            Kind::Two => a ^ b,
            Kind::Prime => {
                let s = a + b;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            }
            Kind::Ext => {
                if a == 0 {
                    return b;
                }
                if b == 0 {
                    return a;
                }
                let la = self.log[a as usize];
                let lb = self.log[b as usize];
                let d = if lb >= la { lb - la } else { lb + self.q - 1 - la };
                let z = self.zech[d as usize];
                if z == ZECH_NONE {
                    0
                } else {
                    self.exp[(la + z) as usize]
                }
            }
        }
    }
    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        self.neg[a as usize]
    }
    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        match self.kind {
            Kind::Two => a & b,
            Kind::Prime => a * b % self.p,
            Kind::Ext => {
                if a == 0 || b == 0 {
                    0
                } else {
                    self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
                }
            }
        }
    }
    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: Elt) -> Elt {
        assert!(a != 0, "inverse of zero");
        let l = self.log[a as usize];
        self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
    }
    pub fn div(&self, a: Elt, b: Elt) -> Elt {
        self.mul(a, self.inv(b))
    }
    pub fn pow(&self, a: Elt, e: u64) -> Elt {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1)) % (self.q as u64 - 1);
        self.exp[l as usize]
    }
    /// Discrete logarithm base the generator; `None` for zero.
    pub fn log(&self, a: Elt) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.log[a as usize])
        }
    }
    /// Generator raised to `e` (exponent taken modulo q−1).
    pub fn exp(&self, e: u64) -> Elt {
        self.exp[(e % (self.q as u64 - 1)) as usize]
    }
    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elt {
        n.rem_euclid(self.p as i64) as Elt
    }
    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elt) -> u64 {
        let l = self.log[a as usize] as u64;
        let n = self.q as u64 - 1;
        n / gcd(n, l)
    }
    /// The canonical element of order m (requires m | q−1).
    pub fn root_of_unity(&self, m: u64) -> Option<Elt> {
        let n = self.q as u64 - 1;
        if m == 0 || !n.is_multiple_of(m) {
            return None;
        }
        Some(self.exp(n / m))
    }

    /// Embed an element of the subfield `sub` (which must satisfy sub.k | self.k).
    pub fn embed_from(&self, sub: &Field, a: Elt) -> Elt {
        assert!(sub.p == self.p && self.k.is_multiple_of(sub.k), "not a subfield");
        if a == 0 {
            return 0;
        }
        let ratio = (self.q as u64 - 1) / (sub.q as u64 - 1);
        self.exp(sub.log[a as usize] as u64 * ratio)
    }
    /// Inverse of [`embed_from`]: `None` if `a` is not in the subfield.
    pub fn restrict_to(&self, sub: &Field, a: Elt) -> Option<Elt> {
        if a == 0 {
            return Some(0);
        }
        let ratio = (self.q as u64 - 1) / (sub.q as u64 - 1);
        let l = self.log[a as usize] as u64;
        if !l.is_multiple_of(ratio) {
            return None;
        }
        Some(sub.exp(l / ratio))
    }

    // ---- row kernels -------------------------------------------------

    /// dst += s * src
    #[inline]
    pub fn axpy(&self, dst: &mut [u16], src: &[u16], s: Elt) {
        if s == 0 {
            return;
        }
        match self.kind {
            Kind::Two => {
                for (d, &x) in dst.iter_mut().zip(src) {
                    *d ^= x;
                }
            }
            Kind::Prime => {
                let p = self.p as u16;
                let s = s as u16;
                for (d, &x) in dst.iter_mut().zip(src) {
                    *d = (*d + s * x) % p;
                }
            }
            Kind::Ext => {
                let ls = self.log[s as usize];
                for (d, &x) in dst.iter_mut().zip(src) {
                    if x != 0 {
                        let t = self.exp[(self.log[x as usize] + ls) as usize];
                        *d = self.add(*d as Elt, t) as u16;
                    }
                }
            }
        }
    }

    #[inline]
    pub fn scale(&self, v: &mut [u16], s: Elt) {
        if s == 1 {
            return;
        }
        for x in v.iter_mut() {
            *x = self.mul(*x as Elt, s) as u16;
        }
    }

    pub fn dot(&self, a: &[u16], b: &[u16]) -> Elt {
        match self.kind {
            Kind::Two => {
                let mut acc = 0u16;
                for (&x, &y) in a.iter().zip(b) {
                    acc ^= x & y;
                }
                acc as Elt
            }
            Kind::Prime => {
                let mut acc = 0u64;
                for (&x, &y) in a.iter().zip(b) {
                    acc += x as u64 * y as u64;
                }
                (acc % self.p as u64) as Elt
            }
            Kind::Ext => {
                let mut acc = 0;
                for (&x, &y) in a.iter().zip(b) {
                    acc = self.add(acc, self.mul(x as Elt, y as Elt));
                }
                acc
            }
        }
    }
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn decode(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = vec![0; k as usize];
    for x in d.iter_mut() {
        *x = a % p;
        a /= p;
    }
    d
}

fn add_digits(a: u32, b: u32, p: u32, k: u32) -> u32 {
    let da = decode(a, p, k);
    let db = decode(b, p, k);
    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    encode(&s, p)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Multiplicative order of `q` modulo `m` (m coprime to q).
pub(crate) fn mult_order(q: u64, m: u64) -> u32 {
    if m == 1 {
        return 1;
    }
    let mut x = q % m;
    let mut d = 1;
    while x != 1 {
        x = x * q % m;
        d += 1;
        assert!(d <= m as u32, "q not invertible mod m");
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_generator_relation() {
        let f = field_make(2, 2).unwrap();
        let w = f.generator();
        let w2 = f.mul(w, w);
        assert_eq!(f.add(f.add(w2, w), 1), 0);
    }

    #[test]
    fn gf25_generator_order_by_powering() {
        let f = field_make(5, 2).unwrap();
        let g = f.generator();
        let mut x = 1;
        let mut n = 0;
        loop {
            x = f.mul(x, g);
            n += 1;
            if x == 1 {
                break;
            }
        }
        assert_eq!(n, 24);
    }

    #[test]
    fn unsupported() {
        assert_eq!(field_make(11, 1), Err(Error::UnsupportedField { p: 11, k: 1 }));
        assert!(field_make(2, 5).is_err());
        assert!(field_make(3, 0).is_err());
    }

    #[test]
    fn interned() {
        assert!(std::ptr::eq(field_make(3, 2).unwrap(), field_make(3, 2).unwrap()));
    }

    #[test]
    fn conway_compatibility() {
        // the norm of a generator down to a subfield is the subfield's generator
        for &(p, k) in &[(2u32, 6u32), (3, 6), (5, 6), (7, 6), (2, 4), (3, 4), (5, 4), (7, 4)] {
            let big = Field::get(p, k);
            for d in 1..k {
                if k % d != 0 {
                    continue;
                }
                let small = Field::get(p, d);
                let img = big.embed_from(small, small.generator());
                let ratio = (big.q() as u64 - 1) / (small.q() as u64 - 1);
                assert_eq!(img, big.exp(ratio));
                // the image satisfies the small Conway polynomial
                let mut acc = 0;
                let mut pw = 1;
                for &c in small.conway_poly() {
                    acc = big.add(acc, big.mul(c, pw));
                    pw = big.mul(pw, img);
                }
                assert_eq!(acc, 0, "{p}^{k} over {p}^{d}");
            }
        }
    }

    #[test]
    fn generators_primitive() {
        for p in [2u32, 3, 5, 7] {
            for k in 1..=6 {
                let f = Field::get(p, k);
                assert_eq!(f.order(f.generator()), f.q() as u64 - 1);
            }
        }
    }
}
