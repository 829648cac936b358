//! Permutation data for Alt(n), 5 ≤ n ≤ 10: standard generators, named class
//! representatives, the full list of conjugacy classes, point-stabilizer
//! embeddings and short words in the generators.
//!
//! Points are 0-based internally and permutations act on the right:
//! `(g*h)(i) = h(g(i))`. Cycle notation in strings and docs is 1-based.

use crate::error::{Error, Result};
use crate::exactlinalg::{Field, Mat};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }
    pub fn from_images(images: Vec<u8>) -> Perm {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!seen[i as usize], "not a permutation");
            seen[i as usize] = true;
        }
        Perm(images)
    }
    /// Build from 1-based cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Perm {
        let mut img: Vec<u8> = (0..n as u8).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                img[a - 1] = (b - 1) as u8;
            }
        }
        Perm::from_images(img)
    }
    /// Parse 1-based cycle notation such as `(1,2,3)(4,5)`.
    pub fn parse(n: usize, s: &str) -> Result<Perm> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for part in s.split('(').skip(1) {
            let body = part.trim_end().trim_end_matches(')');
            let c: std::result::Result<Vec<usize>, _> =
                body.split(',').map(|x| x.trim().parse::<usize>()).collect();
            let c = c.map_err(|_| Error::PreconditionViolated(format!("bad cycle {s}")))?;
            if c.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::PreconditionViolated(format!("point out of range in {s}")));
            }
            cycles.push(c);
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Ok(Perm::from_cycles(n, &refs))
    }
    pub fn degree(&self) -> usize {
        self.0.len()
    }
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }
    pub fn images(&self) -> &[u8] {
        &self.0
    }
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }
    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }
    /// Cycles (0-based), each starting at its smallest point, including fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.image(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.image(j);
            }
            out.push(c);
        }
        out
    }
    /// Cycle type as a partition in decreasing order (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
    pub fn order(&self) -> u64 {
        self.cycle_type().iter().fold(1u64, |acc, &l| lcm(acc, l as u64))
    }
    pub fn pow(&self, e: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    fn pack(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &x| (acc << 4) | x as u64)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cyc: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cyc.is_empty() {
            return write!(f, "()");
        }
        for c in cyc {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / crate::exactlinalg::gcd(a, b) * b
}

/// Conjugacy class of Alt(n).
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub label: String,
    pub cycle_type: Vec<usize>,
    pub rep: Perm,
    pub order: u64,
    pub size: u64,
    pub split: bool,
}

#[derive(Debug)]
pub struct GroupData {
    pub n: usize,
    pub generators: Vec<Perm>,
    pub named_reps: BTreeMap<String, Perm>,
    pub order: u64,
    pub classes: Vec<ClassInfo>,
    words: Mutex<HashMap<Perm, Arc<Vec<u8>>>>,
}

pub type Group = Arc<GroupData>;

impl PartialEq for GroupData {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

const NAMED: [(&str, &[&[usize]]); 7] = [
    ("t", &[&[1, 2], &[3, 4]]),
    ("u", &[&[1, 2, 3, 4, 5]]),
    ("v", &[&[1, 2, 3, 4], &[5, 6]]),
    ("w", &[&[1, 2, 3, 4, 5, 6, 7]]),
    ("x", &[&[1, 2, 3]]),
    ("y", &[&[1, 2, 3], &[4, 5, 6]]),
    ("z", &[&[1, 2, 3, 4, 5, 6, 7, 8, 9]]),
];

static GROUPS: OnceLock<Mutex<HashMap<usize, Group>>> = OnceLock::new();

/// Alt(n) with generators (1,2,3) and (1,…,n) for odd n, (2,…,n) for even n.
pub fn alt_group(n: usize) -> Result<Group> {
    if !(5..=10).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    let reg = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = reg.lock().unwrap();
    if let Some(g) = map.get(&n) {
        return Ok(g.clone());
    }
    let a = Perm::from_cycles(n, &[&[1, 2, 3]]);
    let long: Vec<usize> = if n % 2 == 1 { (1..=n).collect() } else { (2..=n).collect() };
    let b = Perm::from_cycles(n, &[&long]);
    let mut named = BTreeMap::new();
    for (name, cyc) in NAMED {
        if cyc.iter().flat_map(|c| c.iter()).all(|&x| x <= n) {
            named.insert(name.to_string(), Perm::from_cycles(n, cyc));
        }
    }
    let order = (1..=n as u64).product::<u64>() / 2;
    let g = Arc::new(GroupData {
        n,
        generators: vec![a, b],
        named_reps: named,
        order,
        classes: alt_classes(n),
        words: Mutex::new(HashMap::new()),
    });
    map.insert(n, g.clone());
    Ok(g)
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            let mut p = vec![first];
            p.append(&mut rest);
            out.push(p);
        }
    }
    out
}

/// Label for a cycle type: non-trivial parts in decreasing order with exponents,
/// e.g. `2^2`, `5`, `4.2`, `3^3`.
pub fn cycle_type_label(ct: &[usize]) -> String {
    let parts: Vec<usize> = ct.iter().copied().filter(|&x| x > 1).collect();
    if parts.is_empty() {
        return "1".to_string();
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if j - i > 1 {
            out.push(format!("{}^{}", parts[i], j - i));
        } else {
            out.push(parts[i].to_string());
        }
        i = j;
    }
    out.join(".")
}

fn canonical_rep(n: usize, ct: &[usize]) -> Perm {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut next = 1;
    for &l in ct {
        if l > 1 {
            cycles.push((next..next + l).collect());
        }
        next += l;
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Perm::from_cycles(n, &refs)
}

fn centralizer_order_sym(ct: &[usize]) -> u64 {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &l in ct {
        *counts.entry(l).or_default() += 1;
    }
    counts.iter().fold(1u64, |acc, (&l, &m)| {
        acc * (l as u64).pow(m as u32) * (1..=m).product::<u64>()
    })
}

fn alt_classes(n: usize) -> Vec<ClassInfo> {
    let sym_order: u64 = (1..=n as u64).product();
    let mut out = Vec::new();
    for ct in partitions(n, n) {
        let even_parts = ct.iter().filter(|&&l| l % 2 == 0).count();
        if even_parts % 2 == 1 {
            continue;
        }
        let distinct_odd = ct.iter().all(|&l| l % 2 == 1)
            && ct.windows(2).all(|w| w[0] != w[1]);
        let split = distinct_odd && !ct.is_empty() && ct.iter().any(|&l| l > 1);
        let rep = canonical_rep(n, &ct);
        let sym_size = sym_order / centralizer_order_sym(&ct);
        let base = cycle_type_label(&ct);
        let order = rep.order();
        if split {
            let tr = Perm::from_cycles(n, &[&[n - 1, n]]);
            let rep2 = tr.mul(&rep).mul(&tr);
            out.push(ClassInfo {
                label: format!("{base}A"),
                cycle_type: ct.clone(),
                rep,
                order,
                size: sym_size / 2,
                split: true,
            });
            out.push(ClassInfo {
                label: format!("{base}B"),
                cycle_type: ct.clone(),
                rep: rep2,
                order,
                size: sym_size / 2,
                split: true,
            });
        } else {
            out.push(ClassInfo { label: base, cycle_type: ct.clone(), rep, order, size: sym_size, split: false });
        }
    }
    out.sort_by(|a, b| (a.order, a.cycle_type.iter().filter(|&&x| x > 1).count(), &a.label).cmp(&(b.order, b.cycle_type.iter().filter(|&&x| x > 1).count(), &b.label)));
    out
}

impl GroupData {
    pub fn name(&self) -> String {
        format!("alt{}", self.n)
    }

    /// Index into `classes` of the class containing `g`.
    pub fn class_of(&self, g: &Perm) -> usize {
        let ct = g.cycle_type();
        let cands: Vec<usize> =
            (0..self.classes.len()).filter(|&i| self.classes[i].cycle_type == ct).collect();
        assert!(!cands.is_empty(), "odd permutation has no Alt(n) class");
        if cands.len() == 1 {
            return cands[0];
        }
        // split class: conjugating element from the first rep to g
        let r = &self.classes[cands[0]].rep;
        let mut rc: Vec<Vec<usize>> = r.cycles();
        let mut gc: Vec<Vec<usize>> = g.cycles();
        rc.sort_by_key(|c| std::cmp::Reverse(c.len()));
        gc.sort_by_key(|c| std::cmp::Reverse(c.len()));
        let mut sigma = vec![0u8; self.n];
        for (a, b) in rc.iter().zip(&gc) {
            for (x, y) in a.iter().zip(b) {
                sigma[*x] = *y as u8;
            }
        }
        if Perm::from_images(sigma).is_even() {
            cands[0]
        } else {
            cands[1]
        }
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        if let Some(p) = self.named_reps.get(label) {
            return Some(self.class_of(p));
        }
        self.classes.iter().position(|c| c.label == label)
    }

    /// Label of a class, using the named letter when the class has one.
    pub fn class_display(&self, idx: usize) -> String {
        for (name, p) in &self.named_reps {
            if self.class_of(p) == idx {
                return name.clone();
            }
        }
        self.classes[idx].label.clone()
    }

    /// A word in the letters 0=a, 1=b, 2=a⁻¹, 3=b⁻¹ evaluating to `g`,
    /// shortest with respect to that generating set.
    pub fn word_for(&self, g: &Perm) -> Arc<Vec<u8>> {
        assert_eq!(g.degree(), self.n);
        if let Some(w) = self.words.lock().unwrap().get(g) {
            return w.clone();
        }
        let w = Arc::new(self.bfs_word(g));
        self.words.lock().unwrap().insert(g.clone(), w.clone());
        w
    }

    fn letters(&self) -> [Perm; 4] {
        let a = self.generators[0].clone();
        let b = self.generators[1].clone();
        [a.clone(), b.clone(), a.inverse(), b.inverse()]
    }

    fn bfs_word(&self, target: &Perm) -> Vec<u8> {
        if target.is_identity() {
            return vec![];
        }
        let letters = self.letters();
        let mut parent: HashMap<u64, (u64, u8)> = HashMap::new();
        let start = Perm::identity(self.n);
        let key0 = start.pack();
        parent.insert(key0, (key0, 255));
        let mut queue = VecDeque::new();
        queue.push_back(start);
        let goal = target.pack();
        while let Some(p) = queue.pop_front() {
            let pk = p.pack();
            for (li, l) in letters.iter().enumerate() {
                let q = p.mul(l);
                let qk = q.pack();
                if parent.contains_key(&qk) {
                    continue;
                }
                parent.insert(qk, (pk, li as u8));
                if qk == goal {
                    let mut word = Vec::new();
                    let mut cur = qk;
                    while cur != key0 {
                        let (par, l) = parent[&cur];
                        word.push(l);
                        cur = par;
                    }
                    word.reverse();
                    return word;
                }
                queue.push_back(q);
            }
        }
        panic!("element {target} not reached; not in the group?");
    }

    pub fn eval_word(&self, w: &[u8]) -> Perm {
        let letters = self.letters();
        w.iter().fold(Perm::identity(self.n), |acc, &l| acc.mul(&letters[l as usize]))
    }
}

/// Permutation matrix of the point action on row vectors: e_i ↦ e_{g(i)}.
pub fn perm_matrix(g: &Perm, f: &'static Field) -> Mat {
    let n = g.degree();
    let mut m = Mat::zero(f, n, n);
    for i in 0..n {
        m.set(i, g.image(i), 1);
    }
    m
}

#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    pub ambient: Group,
    pub sub: Group,
    pub images: Vec<Perm>,
}

/// Alt(n−1) as the stabilizer of the last point of Alt(n).
pub fn point_stabilizer_embedding(n: usize) -> Result<SubgroupEmbedding> {
    if !(6..=10).contains(&n) {
        return Err(Error::UnsupportedDegree(n));
    }
    let ambient = alt_group(n)?;
    let sub = alt_group(n - 1)?;
    let images = sub
        .generators
        .iter()
        .map(|g| {
            let mut img = g.images().to_vec();
            img.push((n - 1) as u8);
            Perm::from_images(img)
        })
        .collect();
    Ok(SubgroupEmbedding { ambient, sub, images })
}

impl SubgroupEmbedding {
    pub fn index(&self) -> u64 {
        self.ambient.order / self.sub.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;

    #[test]
    fn named_reps_by_degree() {
        let g5 = alt_group(5).unwrap();
        assert_eq!(g5.named_reps.keys().cloned().collect::<Vec<_>>(), vec!["t", "u", "x"]);
        let g7 = alt_group(7).unwrap();
        assert_eq!(g7.named_reps.keys().cloned().collect::<Vec<_>>(), vec!["t", "u", "v", "w", "x", "y"]);
        assert_eq!(alt_group(9).unwrap().order, 181440);
        assert_eq!(alt_group(4).unwrap_err(), Error::UnsupportedDegree(4));
    }

    #[test]
    fn class_sizes_sum_to_order() {
        for n in 5..=10 {
            let g = alt_group(n).unwrap();
            let total: u64 = g.classes.iter().map(|c| c.size).sum();
            assert_eq!(total, g.order, "n={n}");
        }
        assert_eq!(alt_group(5).unwrap().classes.len(), 5);
        assert_eq!(alt_group(8).unwrap().classes.len(), 14);
        assert_eq!(alt_group(9).unwrap().classes.len(), 18);
    }

    #[test]
    fn split_reps_in_distinct_classes() {
        for n in 5..=10 {
            let g = alt_group(n).unwrap();
            for (i, c) in g.classes.iter().enumerate() {
                assert_eq!(g.class_of(&c.rep), i, "{} in alt{n}", c.label);
            }
        }
    }

    #[test]
    fn words_evaluate() {
        let g = alt_group(7).unwrap();
        for c in &g.classes {
            let w = g.word_for(&c.rep);
            assert_eq!(g.eval_word(&w), c.rep);
        }
    }

    #[test]
    fn perm_matrix_examples() {
        let f2 = field_make(2, 1).unwrap();
        let g = alt_group(5).unwrap();
        assert_eq!(perm_matrix(&g.named_reps["t"], f2).trace(), 1);
        let f5 = field_make(5, 1).unwrap();
        let u = perm_matrix(&g.named_reps["u"], f5);
        assert_eq!(u.sub(&Mat::identity(f5, 5)).rank(), 4);
        assert_eq!(perm_matrix(&Perm::identity(5), f5), Mat::identity(f5, 5));
    }

    #[test]
    fn embedding_fixes_last_point() {
        let e = point_stabilizer_embedding(9).unwrap();
        assert!(e.images.iter().all(|p| p.image(8) == 8));
        assert_eq!(point_stabilizer_embedding(10).unwrap().index(), 10);
        let e6 = point_stabilizer_embedding(6).unwrap();
        assert_eq!(e6.images[0], Perm::from_cycles(6, &[&[1, 2, 3]]));
        assert_eq!(e6.images[1], Perm::from_cycles(6, &[&[1, 2, 3, 4, 5]]));
    }
}
