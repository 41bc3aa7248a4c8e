use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-exact division: {0}")]
    NonExactDivision(String),
    #[error("pole at evaluation point")]
    PoleAtPoint,
    #[error("negative exponent {0} in the series regime")]
    NegativeExponent(i64),
    #[error("series has zero constant term and cannot be inverted")]
    NonUnitSeries,
    #[error("series precision exhausted: known to q^{known}, needed q^{needed}")]
    PrecisionLoss { known: i64, needed: i64 },
    #[error("divergent series specification: {0}")]
    DivergentSpec(String),
    #[error("parts {parts:?} do not sum to {n}")]
    InvalidComposition { n: i64, parts: Vec<i64> },
    #[error("partition {0} is not contained in the rectangle")]
    NotInRectangle(String),
    #[error("unsupported field F_{p}^{k}")]
    UnsupportedField { p: u32, k: u32 },
    #[error("subspace is not T-invariant")]
    NotTInvariant,
    #[error("enumeration too large: dimension {dim} over F_{q} exceeds cap {cap}")]
    TooLarge { dim: usize, q: u32, cap: usize },
    #[error("two formulas disagree: {0}")]
    FormMismatch(String),
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
