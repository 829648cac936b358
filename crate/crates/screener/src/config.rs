use altsieve::repdata::ModuleKind;
use altsieve::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cover {
    #[default]
    None,
    Double,
    Triple,
}

impl FromStr for Cover {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Cover::None),
            "double" => Ok(Cover::Double),
            "triple" => Ok(Cover::Triple),
            _ => Err(Error::Unsupported(format!("cover {s:?} (expected none, double or triple)"))),
        }
    }
}

impl fmt::Display for Cover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cover::None => "none",
            Cover::Double => "double",
            Cover::Triple => "triple",
        })
    }
}

/// Which modules of the target are screened.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleSel {
    Vmin,
    Lg,
    Both,
}

impl ModuleSel {
    pub fn kinds(self) -> Vec<ModuleKind> {
        match self {
            ModuleSel::Vmin => vec![ModuleKind::Vmin],
            ModuleSel::Lg => vec![ModuleKind::Lg],
            ModuleSel::Both => vec![ModuleKind::Vmin, ModuleKind::Lg],
        }
    }
}

impl FromStr for ModuleSel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vmin" => Ok(ModuleSel::Vmin),
            "lg" => Ok(ModuleSel::Lg),
            "both" => Ok(ModuleSel::Both),
            _ => Err(Error::Unsupported(format!("module {s:?} (expected vmin, lg or both)"))),
        }
    }
}

impl fmt::Display for ModuleSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleSel::Vmin => "vmin",
            ModuleSel::Lg => "lg",
            ModuleSel::Both => "both",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    /// Alt(6), p = 3: an odd number 2n-1 of trivials needs 2n factors 4.
    pub strict_parity: bool,
    /// Report one candidate per outer-automorphism orbit.
    pub collapse_out_orbits: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseConfig {
    pub group_n: usize,
    pub cover: Cover,
    pub target: String,
    pub p: u32,
    pub module_kind: ModuleSel,
    pub trace_file: Option<PathBuf>,
    pub flags: Flags,
    /// Add traces of torus elements for every p'-element order of Alt(n).
    pub torus_traces: bool,
}

impl CaseConfig {
    pub fn new(group_n: usize, target: &str, p: u32, module_kind: ModuleSel) -> Self {
        CaseConfig {
            group_n,
            cover: Cover::None,
            target: target.to_string(),
            p,
            module_kind,
            trace_file: None,
            flags: Flags::default(),
            torus_traces: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match (self.cover, self.target.as_str()) {
            (Cover::None, _) => Ok(()),
            (Cover::Triple, "E6" | "2E6") | (Cover::Double, "E7") => Err(Error::NotCatalogued(format!(
                "simple modules of the {} cover of Alt({})",
                self.cover, self.group_n
            ))),
            (Cover::Triple, _) => Err(Error::PreconditionViolated("a triple cover needs target E6".into())),
            (Cover::Double, _) => Err(Error::PreconditionViolated("a double cover needs target E7".into())),
        }
    }
}

/// `alt7` or `7`.
pub fn parse_group(s: &str) -> Result<usize> {
    let d = s.strip_prefix("alt").or_else(|| s.strip_prefix("Alt")).unwrap_or(s);
    d.trim_matches(|c| c == '(' || c == ')')
        .parse()
        .map_err(|_| Error::Unsupported(format!("group {s:?} (expected e.g. alt7)")))
}
