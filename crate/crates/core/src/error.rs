use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// A series hit its term limit before reaching the requested tolerance.
    #[error("precision error: {message} (degraded accuracy: {degraded})")]
    Precision { message: String, degraded: bool },

    #[error("pole: {0}")]
    Pole(String),

    #[error("singular linear system: pivot {pivot:e} below {threshold:e}")]
    SingularSystem { pivot: f64, threshold: f64 },

    #[error("degree-1 product has no critical values")]
    NoCriticalValues,

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("denominator near zero in identity {0}")]
    DenominatorNearZero(String),

    #[error("monodromy representation is not transitive")]
    NotTransitive,

    #[error("monodromy representation is not a tree")]
    NotTree,

    #[error("degree {n} exceeds the equivalence search limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

impl Error {
    /// Stable snake-case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Precision { .. } => "precision",
            Error::Pole(_) => "pole",
            Error::SingularSystem { .. } => "singular_system",
            Error::NoCriticalValues => "no_critical_values",
            Error::RootFinding(_) => "root_finding",
            Error::DenominatorNearZero(_) => "denominator_near_zero",
            Error::NotTransitive => "not_transitive",
            Error::NotTree => "not_tree",
            Error::SizeLimit { .. } => "size_limit",
            Error::Parse { .. } => "parse",
            Error::Postcondition(_) => "postcondition",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}
