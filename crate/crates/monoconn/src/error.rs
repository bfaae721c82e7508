use thiserror::Error;

/// Library-wide error type. The CLI maps variants onto its exit codes:
/// hypothesis/parameter problems are recoverable caller errors, `Internal`
/// means a proof-replay invariant fired (a bug), `Resource` means a guarded
/// limit was hit.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed parameters (n too small, colour out of range, ...).
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A documented hypothesis of the operation does not hold for the input.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// An internal invariant that the underlying argument guarantees was
    /// violated. This must never fire on inputs that pass the hypothesis
    /// checks; seeing it means the implementation is wrong.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    /// A resource guard (enumeration size, vertex limit) refused the input.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

/// Check an internal invariant, returning `Error::Internal` when it fails.
///
/// Used for facts the surrounding argument proves must hold; they are checked
/// anyway so that a bug surfaces as a clean error instead of a wrong witness.
#[macro_export]
macro_rules! internal_check {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::Error::Internal(format!($($arg)*)));
        }
    };
}

/// Check a caller-facing hypothesis, returning `Error::Hypothesis` when it
/// fails.
#[macro_export]
macro_rules! hypothesis_check {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::Error::Hypothesis(format!($($arg)*)));
        }
    };
}
