use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arithmetic overflow while multiplying {lhs} by {rhs}")]
    Overflow { lhs: String, rhs: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parameters out of order: expected {expected}, got {got:?}")]
    ParameterOrder {
        expected: &'static str,
        got: Vec<u32>,
    },

    #[error("degenerate interval pair: {0} and {1} have the same ratio")]
    DegeneratePair(String, String),

    #[error("cannot parse system spec near `{token}`: {reason}")]
    SpecParse { token: String, reason: String },

    #[error("invalid target system: {0}")]
    InvalidSystem(String),

    #[error("bracket [{lo}, {hi}] does not contain the minimizer")]
    Bracket { lo: f64, hi: f64 },

    #[error("search needs a finite upper bound for every parameter ({arity} expected)")]
    BoundsRequired { arity: usize },

    #[error("nothing to render: report list is empty")]
    EmptyReports,

    #[error("malformed .scl data at line {line}: {reason}")]
    SclParse { line: usize, reason: String },

    #[error("output: {0}")]
    Output(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
