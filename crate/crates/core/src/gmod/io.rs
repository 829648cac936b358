//! Text format for modules.
//!
//! ```text
//! group=alt5 field=2^2 dim=4
//! <dim rows of dim integers: generator a>
//!
//! <dim rows of dim integers: generator b>
//! ```
//!
//! Entries are field-element indices (Σ c_i p^i over the Conway root).
//! Blank lines and lines starting with `#` are ignored.

use super::GModule;
use crate::error::{parse_err, Error, Result};
use crate::exactlinalg::{field_make, Mat};
use crate::groups::alt_group;
use std::fmt::Write as _;
use std::path::Path;

pub fn write_module(m: &GModule) -> String {
    let f = m.field();
    let mut s = String::new();
    let _ = writeln!(s, "group=alt{} field={}^{} dim={}", m.group().n, f.p(), f.k(), m.dim());
    for (i, g) in m.gens().iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        for r in 0..g.rows() {
            let row: Vec<String> = g.row(r).iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
    }
    s
}

pub fn read_module(text: &str) -> Result<GModule> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "empty module file"))?;
    let mut n = None;
    let mut pk = None;
    let mut dim = None;
    for kv in header.split_whitespace() {
        let (k, v) = kv.split_once('=').ok_or_else(|| parse_err(hl, format!("bad header field {kv}")))?;
        match k {
            "group" => {
                let d = v.strip_prefix("alt").ok_or_else(|| parse_err(hl, "group must be alt<n>"))?;
                n = Some(d.parse::<usize>().map_err(|_| parse_err(hl, "bad degree"))?);
            }
            "field" => {
                let (p, k) = v.split_once('^').ok_or_else(|| parse_err(hl, "field must be <p>^<k>"))?;
                let p = p.parse::<u32>().map_err(|_| parse_err(hl, "bad p"))?;
                let k = k.parse::<u32>().map_err(|_| parse_err(hl, "bad k"))?;
                pk = Some((p, k));
            }
            "dim" => dim = Some(v.parse::<usize>().map_err(|_| parse_err(hl, "bad dim"))?),
            _ => return Err(parse_err(hl, format!("unknown header key {k}"))),
        }
    }
    let (n, (p, k), dim) = match (n, pk, dim) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Err(parse_err(hl, "header needs group, field and dim")),
    };
    let group = alt_group(n)?;
    let f = field_make(p, k)?;
    let mut gens = Vec::new();
    for _ in 0..group.generators.len() {
        let mut data = Vec::with_capacity(dim * dim);
        for _ in 0..dim {
            let (ln, l) = lines.next().ok_or_else(|| parse_err(0, "unexpected end of file"))?;
            let before = data.len();
            for tok in l.split_whitespace() {
                let x: u32 = tok.parse().map_err(|_| parse_err(ln, format!("bad entry {tok}")))?;
                if x >= f.q() {
                    return Err(parse_err(ln, format!("entry {x} outside GF({})", f.q())));
                }
                data.push(x as u16);
            }
            if data.len() - before != dim {
                return Err(parse_err(ln, format!("expected {dim} entries")));
            }
        }
        gens.push(Mat::from_data(f, dim, dim, data));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailing data"));
    }
    GModule::new(group, f, gens)
}

pub fn save_module(m: &GModule, path: &Path) -> Result<()> {
    std::fs::write(path, write_module(m)).map_err(|e| Error::Unsupported(format!("{}: {e}", path.display())))
}

pub fn load_module(path: &Path) -> Result<GModule> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Unsupported(format!("{}: {e}", path.display())))?;
    read_module(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmod::{ext_square, perm_module};

    #[test]
    fn round_trip() {
        let f = field_make(3, 2).unwrap();
        let m = ext_square(&perm_module(5, f).unwrap());
        let text = write_module(&m);
        let back = read_module(&text).unwrap();
        assert_eq!(back.gens(), m.gens());
        assert_eq!(write_module(&back), text);
    }

    #[test]
    fn errors_carry_lines() {
        let bad = "group=alt5 field=2^1 dim=1\n1\n\nx\n";
        match read_module(bad) {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        assert!(read_module("group=alt5 field=11^1 dim=1\n1\n1\n").is_err());
    }
}
