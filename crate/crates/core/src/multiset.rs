//! Multisets of simple-module labels.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Leading dimension of a label such as `8_1`, `20*` or `21_2*`.
pub fn label_dim(label: &str) -> usize {
    label.chars().take_while(|c| c.is_ascii_digit()).collect::<String>().parse().unwrap_or(0)
}

/// Order used for printing: decreasing dimension, then label.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    label_dim(b).cmp(&label_dim(a)).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompFactorMultiset(BTreeMap<String, usize>);

impl CompFactorMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<S: AsRef<str>>(pairs: &[(S, usize)]) -> Self {
        let mut m = Self::new();
        for (l, k) in pairs {
            m.add(l.as_ref(), *k);
        }
        m
    }

    /// Parse `10^2,8^7,1^2` (also accepts spaces and `x²`-free ASCII only).
    pub fn parse(s: &str) -> Option<Self> {
        let mut m = Self::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (l, k) = match part.split_once('^') {
                Some((l, k)) => (l.trim(), k.trim().parse().ok()?),
                None => (part, 1),
            };
            m.add(l, k);
        }
        Some(m)
    }

    pub fn add(&mut self, label: &str, k: usize) {
        if k > 0 {
            *self.0.entry(label.to_string()).or_insert(0) += k;
        }
    }

    pub fn remove(&mut self, label: &str, k: usize) -> bool {
        match self.0.get_mut(label) {
            Some(c) if *c >= k => {
                *c -= k;
                if *c == 0 {
                    self.0.remove(label);
                }
                true
            }
            _ => false,
        }
    }

    pub fn count(&self, label: &str) -> usize {
        self.0.get(label).copied().unwrap_or(0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (l, &k) in &other.0 {
            m.add(l, k);
        }
        m
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.0.iter().all(|(l, &k)| self.count(l) >= k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.0.iter().map(|(l, &k)| (l.as_str(), k))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(|s| s.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Dimension, using the leading integer of each label.
    pub fn dim(&self) -> usize {
        self.0.iter().map(|(l, &k)| label_dim(l) * k).sum()
    }

    /// Entries in printing order.
    pub fn sorted(&self) -> Vec<(String, usize)> {
        let mut v: Vec<(String, usize)> = self.0.iter().map(|(l, &k)| (l.clone(), k)).collect();
        v.sort_by(|a, b| label_cmp(&a.0, &b.0));
        v
    }

    pub fn map_labels(&self, f: impl Fn(&str) -> String) -> Self {
        let mut m = Self::new();
        for (l, &k) in &self.0 {
            m.add(&f(l), k);
        }
        m
    }
}

impl fmt::Display for CompFactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sorted()
            .into_iter()
            .map(|(l, k)| if k == 1 { l } else { format!("{l}^{k}") })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl PartialOrd for CompFactorMultiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: compare multiplicities label by label in printing order,
/// larger multiplicities first.
impl Ord for CompFactorMultiset {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut labels: Vec<&String> = self.0.keys().chain(other.0.keys()).collect();
        labels.sort_by(|a, b| label_cmp(a, b));
        labels.dedup();
        for l in labels {
            let c = other.count(l).cmp(&self.count(l));
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let m = CompFactorMultiset::parse("1^8, 3^6").unwrap();
        assert_eq!(m.to_string(), "3^6,1^8");
        assert_eq!(m.dim(), 26);
        let n = CompFactorMultiset::parse("20*,8_1,20,1^4").unwrap();
        assert_eq!(n.to_string(), "20,20*,8_1,1^4");
    }

    #[test]
    fn ordering() {
        let a = CompFactorMultiset::parse("5^28,3^28,1^24").unwrap();
        let b = CompFactorMultiset::parse("5^25,3^31,1^30").unwrap();
        let c = CompFactorMultiset::parse("5,3^55,1^78").unwrap();
        let mut v = vec![c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c]);
    }
}
