use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown arrow or vertex `{name}` at line {line}")]
    UnknownName { name: String, line: usize },
    #[error("non-composable word `{word}` at line {line}")]
    NonComposable { word: String, line: usize },
    #[error("inhomogeneous relation at line {line}: terms have different endpoints")]
    Inhomogeneous { line: usize },
    #[error("relation ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("paths survive at length bound {0}; algebra is not finite dimensional within the bound")]
    NotFiniteDimensional(usize),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),
    #[error("semisimple quotient does not split over the ground field")]
    NonSplit,
    #[error("algebra is not basic")]
    NotBasic,
    #[error("no faithful projective-injective module: {0}")]
    NoFaithfulProjInj(String),
    #[error("level is not central in the corner algebra: {0}")]
    LevelNotCentral(String),
    #[error("search budget exceeded after {0} candidates")]
    SearchBudgetExceeded(u64),
    #[error("complex has a non-projective term in degree {0}")]
    NonProjectiveTerm(i32),
    #[error("complex has nonzero cohomology in positive degree {0}")]
    PositiveCohomology(i32),
    #[error("differential mismatch: {0}")]
    DifferentialMismatch(String),
    #[error("malformed witness step {step}: {reason}")]
    MalformedWitness { step: usize, reason: String },
    #[error("algebra check failed: {0}")]
    AlgebraViolation(String),
    #[error("module check failed: {0}")]
    ModuleViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
