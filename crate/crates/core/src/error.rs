use thiserror::Error;

/// Errors shared by every layer of the library.
///
/// The CLI maps these onto its exit-code protocol: parse and usage problems
/// exit 3, violated preconditions exit 2, cap overflows exit 4.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgError {
    #[error("element {element} out of range for universe of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("operation `{op}`: expected {expected} arguments, got {got}")]
    ArityMismatch {
        op: String,
        expected: usize,
        got: usize,
    },

    #[error("unknown operation symbol `{0}`")]
    UnknownOperation(String),

    #[error("variable v{0} is not covered by the argument tuple")]
    UnboundVariable(usize),

    #[error("operation `{op}` has a malformed table: expected {expected} entries, got {got}")]
    BadTable {
        op: String,
        expected: usize,
        got: usize,
    },

    #[error("{what} exceeded the configured cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error(
        "partition is not compatible with operation `{op}`: \
         arguments {left:?} and {right:?} are related but map to {out_left} / {out_right}"
    )]
    NotCompatible {
        op: String,
        left: Vec<usize>,
        right: Vec<usize>,
        out_left: usize,
        out_right: usize,
    },

    #[error("subset is not closed under `{op}`: {args:?} maps to {value} outside the subset")]
    NotClosed {
        op: String,
        args: Vec<usize>,
        value: usize,
    },

    #[error("universe size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("{file}:{line}: parse error near `{token}`: {msg}")]
    Parse {
        file: String,
        line: usize,
        token: String,
        msg: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("type classification is ambiguous: {0}")]
    Ambiguous(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, AlgError>;

impl AlgError {
    pub fn cap(what: impl Into<String>, cap: usize) -> Self {
        AlgError::CapExceeded {
            what: what.into(),
            cap,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, AlgError::CapExceeded { .. })
    }
}
