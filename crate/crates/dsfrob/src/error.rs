//! Crate-wide error type. Variant names follow the failure modes of the
//! pipeline stages that raise them.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("unsupported simple type: {0}")]
    UnsupportedType(String),
    #[error("rank {rank} exceeds configured bound {bound} for type {ty}")]
    RankBound { ty: char, rank: usize, bound: usize },
    #[error("linear solve failed: {0}")]
    SolveFailure(String),
    #[error("odd ad-h eigenvalue found; grading is not principal")]
    OddDegree,
    #[error("kernel of ad f has wrong dimension: got {got}, want {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("cannot normalize module {module}: pairing {value} is not +/- a rational square")]
    NormalizationFailure { module: usize, value: String },
    #[error("cyclic element is not regular semisimple: {0}")]
    NotRegularSemisimple(String),
    #[error("graded ansatz for the opposite Cartan basis is unsolvable at module {0}")]
    AnsatzUnsolvable(usize),
    #[error("graded gauge-fixing solve failed at degree {0}")]
    GradedSolveFailure(i64),
    #[error("reduced bracket coefficient is not expressible on the slice: {0}")]
    NotInvariant(String),
    #[error("no dispersionless limit: ultralocal part of {0} is nonzero")]
    NoDispersionlessLimit(String),
    #[error("no ordered basis with the required pairing structure: {0}")]
    OrderingFailure(String),
    #[error("constraint block of the slice matrix is singular")]
    SingularBlock,
    #[error("pencil axiom violated: {0}")]
    AxiomFailure(String),
    #[error("mixed partials of the Hessian candidate are inconsistent")]
    IntegrabilityFailure,
    #[error("flat coordinate ansatz is inconsistent at generator {0}")]
    AnsatzExhausted(usize),
    #[error("malformed report: {0}")]
    MalformedReport(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
