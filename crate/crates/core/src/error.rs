use std::fmt;

use thiserror::Error;

/// Category of a problem found while reading or validating a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Syntax,
    WrongVisitCount,
    AlphabetMismatch,
    InconsistentSign,
    Structure,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::Syntax => "syntax-error",
            ViolationKind::WrongVisitCount => "crossing-visited-wrong-number-of-times",
            ViolationKind::AlphabetMismatch => "alphabet-mismatch",
            ViolationKind::InconsistentSign => "inconsistent-sign",
            ViolationKind::Structure => "invalid-structure",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub line: Option<usize>,
    pub kind: ViolationKind,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}: {}", self.kind, self.message),
            None => write!(f, "{}: {}", self.kind, self.message),
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator '{0}'")]
    UnknownGenerator(char),
    #[error("bad word '{0}'")]
    WordSyntax(String),
    #[error("trivial kappa has no primitive root")]
    TrivialKappa,
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("{}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("trace line {line}: {message}")]
    TraceSyntax { line: usize, message: String },
    #[error("unknown crossing '{0}'")]
    UnknownCrossing(String),
    #[error("crossing '{0}' is not a self-crossing")]
    NotASelfCrossing(String),
    #[error("component '{0}' is not closed")]
    ComponentNotClosed(String),
    #[error("role mismatch: {0}")]
    RoleMismatch(String),
    #[error("missing role choice for crossing '{0}'")]
    MissingChoice(String),
    #[error("invalid move site: {0}")]
    InvalidSite(String),
    #[error("path not on diagram: {0}")]
    PathNotOnDiagram(String),
    #[error("unsupported coarsening: {0}")]
    UnsupportedCoarsening(String),
    #[error("undecided within exponent bound {0}")]
    Undecided(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
