use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field GF({p}^{k})")]
    UnsupportedField { p: u32, k: u32 },
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("incompatible modules: {0}")]
    IncompatibleModules(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no catalogued simple matches the module ({0})")]
    UnknownSimple(String),
    #[error("fingerprint matches several labels: {0:?}")]
    AmbiguousLabel(Vec<String>),
    #[error("not catalogued: {0}")]
    NotCatalogued(String),
    #[error("parse error on line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("label {0} is not an edge of the tree")]
    UnknownEdge(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no Jordan type data for summand {0}")]
    MissingTypeData(String),
    #[error("weight {weight} is not p-restricted for p = {p}")]
    NotPRestricted { weight: u32, p: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::ParseError { line, msg: msg.into() }
}
