use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the numerical core and its file formats.
///
/// Variants split into two families: malformed input (files, flags) and
/// numeric preconditions that the data or parameters fail to meet. The CLI
/// maps the first family to exit code 2 and the second to exit code 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("im must be positive (line {line}: im = {value})")]
    NonPositiveIm { line: usize, value: f64 },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("profile undefined: zero set is empty")]
    EmptyZeroSet,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("truncation radius {given} too small; need more than {required}")]
    TruncationTooSmall { given: f64, required: f64 },

    #[error("non-finite value {value} at t = {t}")]
    NonFinite { t: f64, value: f64 },

    #[error("window {given} too small; need at least {required}")]
    WindowTooSmall { given: f64, required: f64 },

    #[error("interval [{a}, {b}] outside grid [{lo}, {hi}]")]
    OutOfGrid { a: f64, b: f64, lo: f64, hi: f64 },

    #[error("not monotone: g decreases by {drop} at t = {t}")]
    NotMonotone { t: f64, drop: f64 },

    #[error("insufficient jump: g(a+1) - g(a) = {jump} < M = {required}")]
    InsufficientJump { jump: f64, required: f64 },

    #[error("Helson-Szego bound violated: sup |v| = {v_sup} >= pi/2")]
    HelsonSzego { v_sup: f64 },

    #[error("growth window verification failed at a = {a}: increment {increment} < {required}")]
    GrowthVerification { a: f64, increment: f64, required: f64 },

    #[error("singular log-modulus: {0}")]
    Singular(String),

    #[error("precision: {0}")]
    Precision(String),
}

impl Error {
    /// Process exit code for the CLI: 2 for input errors, 3 for numeric
    /// precondition failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. }
            | Error::NonPositiveIm { .. }
            | Error::Input(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            _ => 3,
        }
    }
}
