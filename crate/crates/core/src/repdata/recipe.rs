//! Construction recipes for modules, e.g. `tensor(8_1,ext2(8_3))`.
//!
//! Grammar:
//! ```text
//! expr  := name | name '(' args ')'
//! args  := expr (',' expr)*
//! ```
//! Atoms are `perm`, simple labels (`1`, `8_1`, `20*`) and the functions
//! `subsets(k)`, `tensor(A,B)`, `ext2(A)`, `dual(A)`, `twist(A)`,
//! `sum(A,B,...)`, `rad(A,l1,l2,...)` and `res(A,l1,l2,...)`.

use crate::error::{Error, Result};
use crate::exactlinalg::Field;
use crate::gmod::{
    direct_sum_all, dual, ext_square, perm_module, perm_subsets_module, radical_wrt, residual_wrt, tensor,
    twist, GModule,
};
use crate::groups::alt_group;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Perm,
    Subsets(usize),
    Label(String),
    Tensor(Box<Expr>, Box<Expr>),
    Ext2(Box<Expr>),
    Dual(Box<Expr>),
    Twist(Box<Expr>),
    Sum(Vec<Expr>),
    Rad(Box<Expr>, Vec<String>),
    Res(Box<Expr>, Vec<String>),
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr> {
        let toks = tokenize(s)?;
        let mut pos = 0;
        let e = parse_expr(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(Error::Unsupported(format!("trailing input in recipe {s:?}")));
        }
        Ok(e)
    }

    /// Rewrite every label through `f`.
    pub fn map_labels(&self, f: &dyn Fn(&str) -> String) -> Expr {
        use Expr::*;
        match self {
            Perm => Perm,
            Subsets(k) => Subsets(*k),
            Label(l) => Label(f(l)),
            Tensor(a, b) => Tensor(Box::new(a.map_labels(f)), Box::new(b.map_labels(f))),
            Ext2(a) => Ext2(Box::new(a.map_labels(f))),
            Dual(a) => Dual(Box::new(a.map_labels(f))),
            Twist(a) => Twist(Box::new(a.map_labels(f))),
            Sum(v) => Sum(v.iter().map(|e| e.map_labels(f)).collect()),
            Rad(a, ls) => Rad(Box::new(a.map_labels(f)), ls.iter().map(|l| f(l)).collect()),
            Res(a, ls) => Res(Box::new(a.map_labels(f)), ls.iter().map(|l| f(l)).collect()),
        }
    }

    /// Evaluate for Alt(n) over `field`; labels are resolved by `lookup`.
    pub fn eval(
        &self,
        n: usize,
        field: &'static Field,
        lookup: &dyn Fn(&str) -> Result<GModule>,
    ) -> Result<GModule> {
        use Expr::*;
        let ev = |e: &Expr| e.eval(n, field, lookup);
        Ok(match self {
            Perm => perm_module(n, field)?,
            Subsets(k) => perm_subsets_module(n, *k, field)?,
            Label(l) if l == "1" => GModule::trivial(alt_group(n)?, field),
            Label(l) => lookup(l)?,
            Tensor(a, b) => tensor(&ev(a)?, &ev(b)?)?,
            Ext2(a) => ext_square(&ev(a)?),
            Dual(a) => dual(&ev(a)?),
            Twist(a) => twist(&ev(a)?, &crate::groups::Perm::from_cycles(n, &[&[1, 2]])),
            Sum(v) => {
                let parts = v.iter().map(ev).collect::<Result<Vec<_>>>()?;
                direct_sum_all(&alt_group(n)?, field, &parts)?
            }
            Rad(a, ls) => {
                let ls: Vec<&str> = ls.iter().map(|s| s.as_str()).collect();
                radical_wrt(&ev(a)?, &ls)?
            }
            Res(a, ls) => {
                let ls: Vec<&str> = ls.iter().map(|s| s.as_str()).collect();
                residual_wrt(&ev(a)?, &ls)?
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Expr::*;
        match self {
            Perm => write!(f, "perm"),
            Subsets(k) => write!(f, "subsets({k})"),
            Label(l) => write!(f, "{l}"),
            Tensor(a, b) => write!(f, "tensor({a},{b})"),
            Ext2(a) => write!(f, "ext2({a})"),
            Dual(a) => write!(f, "dual({a})"),
            Twist(a) => write!(f, "twist({a})"),
            Sum(v) => {
                let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
                write!(f, "sum({})", parts.join(","))
            }
            Rad(a, ls) => write!(f, "rad({a},{})", ls.join(",")),
            Res(a, ls) => write!(f, "res({a},{})", ls.join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Open,
    Close,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let flush = |cur: &mut String, out: &mut Vec<Tok>| {
        if !cur.is_empty() {
            out.push(Tok::Name(std::mem::take(cur)));
        }
    };
    for c in s.chars() {
        match c {
            '(' | ')' | ',' => {
                flush(&mut cur, &mut out);
                out.push(match c {
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    _ => Tok::Comma,
                });
            }
            c if c.is_whitespace() => flush(&mut cur, &mut out),
            c if c.is_ascii_alphanumeric() || c == '_' || c == '*' || c == '#' => cur.push(c),
            _ => return Err(Error::Unsupported(format!("bad character {c:?} in recipe {s:?}"))),
        }
    }
    flush(&mut cur, &mut out);
    Ok(out)
}

fn parse_expr(t: &[Tok], pos: &mut usize) -> Result<Expr> {
    let bad = |msg: &str| Error::Unsupported(format!("recipe: {msg}"));
    let name = match t.get(*pos) {
        Some(Tok::Name(n)) => n.clone(),
        _ => return Err(bad("expected a name")),
    };
    *pos += 1;
    if t.get(*pos) != Some(&Tok::Open) {
        return Ok(if name == "perm" { Expr::Perm } else { Expr::Label(name) });
    }
    *pos += 1;
    let mut args = vec![parse_expr(t, pos)?];
    while t.get(*pos) == Some(&Tok::Comma) {
        *pos += 1;
        args.push(parse_expr(t, pos)?);
    }
    if t.get(*pos) != Some(&Tok::Close) {
        return Err(bad("expected ')'"));
    }
    *pos += 1;
    let labels = |v: &[Expr]| -> Result<Vec<String>> {
        v.iter()
            .map(|e| match e {
                Expr::Label(l) => Ok(l.clone()),
                _ => Err(bad("expected a label")),
            })
            .collect()
    };
    let one = |args: Vec<Expr>| -> Result<Box<Expr>> {
        match <[Expr; 1]>::try_from(args) {
            Ok([a]) => Ok(Box::new(a)),
            Err(_) => Err(bad(&format!("{name} takes one argument"))),
        }
    };
    Ok(match name.as_str() {
        "subsets" => match &args[..] {
            [Expr::Label(k)] => Expr::Subsets(k.parse().map_err(|_| bad("subsets needs an integer"))?),
            _ => return Err(bad("subsets takes one integer")),
        },
        "tensor" => match <[Expr; 2]>::try_from(args) {
            Ok([a, b]) => Expr::Tensor(Box::new(a), Box::new(b)),
            Err(_) => return Err(bad("tensor takes two arguments")),
        },
        "ext2" => Expr::Ext2(one(args)?),
        "dual" => Expr::Dual(one(args)?),
        "twist" => Expr::Twist(one(args)?),
        "sum" => Expr::Sum(args),
        "rad" | "res" => {
            let mut it = args.into_iter();
            let a = Box::new(it.next().unwrap());
            let ls = labels(&it.collect::<Vec<_>>())?;
            if name == "rad" {
                Expr::Rad(a, ls)
            } else {
                Expr::Res(a, ls)
            }
        }
        _ => return Err(bad(&format!("unknown function {name}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["perm", "1", "subsets(2)", "tensor(8_1,ext2(20*))", "rad(subsets(2),1,8)", "sum(5_1,dual(4))"] {
            assert_eq!(Expr::parse(s).unwrap().to_string(), s);
        }
        assert!(Expr::parse("tensor(1)").is_err());
        assert!(Expr::parse("foo(1)").is_err());
        assert!(Expr::parse("perm)").is_err());
    }
}
