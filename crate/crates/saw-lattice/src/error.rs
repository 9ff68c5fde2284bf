use thiserror::Error;

/// Crate-wide error type. Variants map onto the CLI exit codes:
/// usage problems exit 2, budget overruns exit 3, verification
/// failures exit 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be >= 1, got {0}")]
    InvalidDimension(usize),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("walk length {n} not available (max {max})")]
    LengthOutOfRange { n: usize, max: usize },

    #[error("walks of length {0} are not materialized")]
    NotMaterialized(usize),

    #[error("pair index out of range: j={j}, k={k}, n={n}")]
    PairOutOfRange { j: usize, k: usize, n: usize },

    #[error("zero table too short: need m <= {have}, requested {want}")]
    TableTooShort { have: usize, want: usize },

    #[error("failed to bracket zero #{index} of J_{nu}")]
    BracketingFailure { nu: f64, index: usize },

    #[error("argument {arg} outside validated domain [0, {max}]")]
    DomainExceeded { arg: f64, max: f64 },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI: 1 verification failure,
    /// 2 usage error, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VerificationFailed(_) => 1,
            Error::BudgetExceeded(_) | Error::DomainExceeded { .. } => 3,
            _ => 2,
        }
    }

    /// Short machine-parsable reason token for CLI diagnostics.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::InvalidDimension(_) => "dimension",
            Error::BudgetExceeded(_) => "budget",
            Error::LengthOutOfRange { .. } => "length",
            Error::NotMaterialized(_) => "not-materialized",
            Error::PairOutOfRange { .. } => "pair-index",
            Error::TableTooShort { .. } => "zero-table",
            Error::BracketingFailure { .. } => "bracketing",
            Error::DomainExceeded { .. } => "domain",
            Error::DegenerateFit(_) => "degenerate-fit",
            Error::InsufficientData(_) => "insufficient-data",
            Error::InvalidArgument(_) => "argument",
            Error::VerificationFailed(_) => "verification",
            Error::Io(_) => "io",
        }
    }
}
