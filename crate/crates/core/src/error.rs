use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not multihomogeneous in the column variables")]
    NotMultihomogeneous,
    #[error("polynomial is not isobaric: terms carry different row weights")]
    NotIsobaric,
    #[error("tableau has {rows} rows but the matrix has only {n}")]
    ShapeTooTall { rows: usize, n: usize },
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("instance too large: weight space of dimension {dim} exceeds bound {bound}")]
    InstanceTooLarge { dim: usize, bound: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
