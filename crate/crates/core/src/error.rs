use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit count {qubits} outside supported range [{min}, {max}]")]
    QubitsOutOfRange { qubits: u32, min: u32, max: u32 },

    #[error("target {target} outside search space of size {size}")]
    TargetOutOfRange { target: u64, size: u64 },

    #[error("qubit index {index} out of range for {qubits} qubits")]
    QubitIndexOutOfRange { index: u32, qubits: u32 },

    #[error("state is not normalized (squared norm {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("expected a vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("Bloch vector length {0} outside [0, 1]")]
    BlochLengthOutOfRange(f64),

    #[error("purity parameter {0} outside [0, 1]")]
    EpsilonOutOfRange(f64),

    #[error("search space size {0} too small (need at least 2)")]
    SizeTooSmall(u64),

    #[error("operator is not traceless (trace {0})")]
    NotTraceless(f64),

    #[error("operator is not Hermitian")]
    NotHermitian,

    #[error("dimension {size} exceeds the dense-matrix limit {limit}")]
    TooLargeToMaterialize { size: u64, limit: u64 },

    #[error("no purity parameter gives a speed-up at {qubits} qubits")]
    NoSpeedup { qubits: u32 },

    #[error("invalid qubit range [{min}, {max}]: {reason}")]
    InvalidRange {
        min: u32,
        max: u32,
        reason: &'static str,
    },
}
