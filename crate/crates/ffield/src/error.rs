//! Error taxonomy shared by the whole crate.

use alloc::string::String;

/// Every fallible operation in this crate returns one of these.
///
/// `TheoremViolation` is special: it marks an exact computation contradicting
/// a statement that is proved to hold, so it always indicates a bug (or a
/// genuine counterexample, which would be far more interesting). Callers such
/// as the CLI reserve a dedicated exit code for it and must never swallow it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Precondition failure on user-facing input.
    InvalidInput(String),
    /// A function is not an S-unit; carries a printable witness (a squarefree
    /// factor outside S, or "inf").
    NotAnSUnit { witness: String },
    /// Derivation frame construction failed (base point not in S, or S does
    /// not contain infinity).
    InvalidFrame(String),
    /// The image of a morphism meets the boundary divisor outside S.
    ImageMeetsDivisor { place: String },
    /// An exact identity or inequality guaranteed by a proved statement
    /// failed. Always a defect.
    TheoremViolation(String),
    /// A vanishing subsum was found where none is allowed; carries the
    /// 1-based index set.
    VanishingSubsum { subset: alloc::vec::Vec<usize> },
    /// Configured size cap exceeded (e.g. Wronskian dimension).
    ResourceLimit(String),
    /// Internal cross-validation failed; indicates a bug in this crate.
    Internal(String),
    /// Expression parse error with byte offset into the input.
    Parse { offset: usize, message: String },
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::NotAnSUnit { witness } => {
                write!(f, "not an S-unit: support outside S, witness {witness}")
            }
            Error::InvalidFrame(m) => write!(f, "invalid derivation frame: {m}"),
            Error::ImageMeetsDivisor { place } => {
                write!(f, "image meets the divisor outside S at {place}")
            }
            Error::TheoremViolation(m) => write!(f, "theorem violation: {m}"),
            Error::VanishingSubsum { subset } => {
                write!(f, "vanishing subsum at indices {subset:?}")
            }
            Error::ResourceLimit(m) => write!(f, "resource limit: {m}"),
            Error::Internal(m) => write!(f, "internal error: {m}"),
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
