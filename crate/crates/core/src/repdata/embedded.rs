//! Data files compiled into the library, with SHA-256 verification against
//! `data/SHA256SUMS`.

use sha2::{Digest, Sha256};

macro_rules! files {
    ($($name:literal),* $(,)?) => {
        pub(crate) const FILES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../../../data/", $name))),)*
        ];
    };
}

files!(
    "constructions.csv",
    "dims.csv",
    "facts.csv",
    "jordan/E6_5.csv",
    "jordan/E7_5.csv",
    "jordan/E8_3.csv",
    "jordan/E8_4.csv",
    "jordan/E8_5.csv",
    "simples/10_2.csv",
    "simples/5_2.csv",
    "simples/5_3.csv",
    "simples/5_5.csv",
    "simples/6_2.csv",
    "simples/6_3.csv",
    "simples/6_5.csv",
    "simples/7_2.csv",
    "simples/7_3.csv",
    "simples/7_5.csv",
    "simples/7_7.csv",
    "simples/8_2.csv",
    "simples/8_3.csv",
    "simples/8_5.csv",
    "simples/8_7.csv",
    "simples/9_2.csv",
    "simples/9_3.csv",
    "traces/2E6.csv",
    "traces/E6.csv",
    "traces/E7.csv",
    "traces/E8.csv",
    "traces/F4.csv",
    "trees/5_3_0.txt",
    "trees/5_5_0.txt",
    "trees/6_5_0.txt",
    "trees/7_5_0.txt",
    "trees/7_5_cover3.txt",
    "trees/7_7_0.txt",
    "trees/8_5_0.txt",
    "trees/8_5_1.txt",
    "trees/8_7_0.txt",
);

const SUMS: &str = include_str!("../../../../data/SHA256SUMS");

pub(crate) fn get(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub(crate) fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Names of embedded files whose checksum is missing or does not match.
pub fn checksum_mismatches() -> Vec<String> {
    let sums: Vec<(&str, &str)> = SUMS.lines().filter_map(|l| l.split_once("  ")).collect();
    let mut bad = Vec::new();
    for (name, text) in FILES {
        match sums.iter().find(|(_, n)| n == name) {
            Some((h, _)) if *h == sha256_hex(text) => {}
            _ => bad.push(name.to_string()),
        }
    }
    bad
}
