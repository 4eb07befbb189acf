use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a Lie algebra: {0}")]
    InvalidLieAlgebra(String),
    #[error("endomorphism does not square to minus the identity")]
    NotAComplexStructure,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("ideal is not stable under the complex structure")]
    NotJStable,
    #[error("Lie algebra is not solvable")]
    NotSolvable,
    #[error("operation requires a nonzero algebra")]
    ZeroAlgebra,
    #[error("complex structure is not abelian")]
    NotAbelian,
    #[error("algebra is not associative: (e{0}·e{1})·e{2} ≠ e{0}·(e{1}·e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("invalid complex structure on the associative algebra: {0}")]
    InvalidComplexAlgebra(String),
    #[error("map is not a derivation: D[e{0},e{1}] ≠ [De{0},e{1}] + [e{0},De{1}]")]
    NotADerivation(usize, usize),
    #[error("compatibility violated for T{0}, T{1}: T_i T_j ≠ −T_i J T_j J")]
    CompatibilityViolation(usize, usize),
    #[error("endomorphisms T{0}, T{1} do not commute")]
    NonCommutingFamily(usize, usize),
    #[error("algebra is not two-step nilpotent")]
    NotTwoStepNilpotent,
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("hypothesis not satisfied: {0}")]
    HypothesisViolated(String),
    #[error("odd dimension {0} admits no complex structure")]
    OddDimension(usize),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("certificate check failed: {0}")]
    Certificate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// Malformed or unreadable input, as opposed to a mathematical failure.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Io(_)
                | Error::UnknownName(_)
                | Error::DimensionMismatch { .. }
                | Error::ShapeMismatch { .. }
                | Error::NotSquare { .. }
        )
    }
}
