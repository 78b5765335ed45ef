use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at evaluation point: denominator vanishes{}", at_var(.0))]
    PoleAtPoint(Option<String>),

    #[error("no value assigned to central variable `{0}`")]
    UnboundVariable(String),

    #[error("alphabet mismatch: operands are over different generator sets")]
    AlphabetError,

    #[error("substitution leaves generator `{0}` unbound")]
    UnboundGenerator(String),

    #[error("cannot orient relation `{relation}`: {reason}")]
    Orientation { relation: String, reason: String },

    #[error("relations `{first}` and `{second}` orient to the same left-hand side {lhs}")]
    DuplicateRule {
        first: String,
        second: String,
        lhs: String,
    },

    #[error("normalization exceeded {limit} rule applications; last reductions: {}", .chain.join(" -> "))]
    NonTermination { limit: usize, chain: Vec<String> },

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("unknown algebra family `{0}`")]
    UnknownFamily(String),

    #[error("not Ore-shaped: {0}")]
    NotOreShaped(String),

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown symbol `{name}`{}", suggest(.suggestion))]
    UnknownSymbol {
        name: String,
        suggestion: Option<String>,
    },

    #[error("presentation schema error at {path}: {msg}")]
    Schema { path: String, msg: String },

    #[error("oracle explored more than {0} words")]
    OracleOverflow(usize),

    #[error("reduction paths diverge on {word}: {first} vs {second}")]
    OracleDivergence {
        word: String,
        first: String,
        second: String,
    },

    #[error("selection `{0}` matches no verification case")]
    EmptySelection(String),
}

fn at_var(v: &Option<String>) -> String {
    match v {
        Some(v) => format!(" (substituting `{v}`)"),
        None => String::new(),
    }
}

fn suggest(s: &Option<String>) -> String {
    match s {
        Some(s) => format!("; did you mean `{s}`?"),
        None => String::new(),
    }
}

impl Error {
    /// Coarse category used by the command-line exit codes.
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Parse { .. } | Error::UnknownSymbol { .. } | Error::Schema { .. } => {
                ErrorCategory::Parse
            }
            Error::Orientation { .. }
            | Error::DuplicateRule { .. }
            | Error::NonTermination { .. }
            | Error::NotOreShaped(_)
            | Error::OracleOverflow(_)
            | Error::OracleDivergence { .. }
            | Error::DivisionByZero
            | Error::PoleAtPoint(_)
            | Error::UnboundVariable(_)
            | Error::AlphabetError
            | Error::UnboundGenerator(_) => ErrorCategory::Engine,
            Error::Param(_) | Error::UnknownFamily(_) | Error::EmptySelection(_) => {
                ErrorCategory::Usage
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Usage,
    Parse,
    Engine,
}
