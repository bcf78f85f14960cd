use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("order {order} outside supported range {min}..={max}")]
    OrderOutOfRange {
        order: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid parameters for family {family}: {reason}")]
    FamilyParams { family: String, reason: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("canonical search exceeded its node budget ({0} nodes)")]
    CanonBudget(usize),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("subset must be non-empty, strictly inside 0..{order} and repetition-free")]
    BadSubset { order: usize },

    #[error(
        "spectrum has an irrational residual factor; formula applies to integral spectra only"
    )]
    ResidualPresent,

    #[error("eigenvalue {alpha} has multiplicity {found}, expected {expected}")]
    Multiplicity {
        alpha: i64,
        found: usize,
        expected: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("eigenvalue of multiplicity {0} is not an integer")]
    NonIntegralMultiple(usize),

    #[error("no catalog for order {n} and multiplicity {k}")]
    UnsupportedCatalog { n: usize, k: usize },

    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
