use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {0} is not a power of two in 2..=8")]
    InvalidDimension(usize),
    #[error("tensor product dimension {0} exceeds the 8-dimensional cap")]
    DimensionOverflow(usize),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("trace is {0} (expected 1)")]
    NotUnitTrace(f64),
    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("invalid qubit selection {keep:?} for a {num_qubits}-qubit system")]
    InvalidSelection { keep: Vec<usize>, num_qubits: usize },
    #[error("operation requires {expected} qubits, got {got}")]
    WrongQubitCount { expected: usize, got: usize },
    #[error("qubit index {index} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { index: usize, num_qubits: usize },
    #[error("controlled-NOT control and target are both qubit {0}")]
    ControlIsTarget(usize),
    #[error("gate {position} ({gate}): {source}")]
    Gate {
        position: usize,
        gate: String,
        #[source]
        source: Box<Error>,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("reference state is not pure (purity {0})")]
    NotPure(f64),
    #[error("copy count {0} outside 1..=3")]
    CopyCount(usize),
    #[error("no preparation angles found (best residual {best_residual:e})")]
    NoAngleSolution { best_residual: f64 },
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
