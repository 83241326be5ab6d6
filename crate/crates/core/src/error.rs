use std::fmt;

use crate::bicomplex::Class;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which idempotent component(s) of a matrix, map or system caused a failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Components {
    Minus,
    Plus,
    Both,
}

impl Components {
    /// Builds the failure set from per-component failure flags; `None` when neither failed.
    pub fn from_flags(minus_failed: bool, plus_failed: bool) -> Option<Self> {
        match (minus_failed, plus_failed) {
            (true, true) => Some(Components::Both),
            (true, false) => Some(Components::Minus),
            (false, true) => Some(Components::Plus),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Components {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Components::Minus => "minus",
            Components::Plus => "plus",
            Components::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    Dimension {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("bicomplex number is not invertible ({0:?})")]
    ScalarNotInvertible(Class),

    #[error("not invertible: {0} component singular")]
    NotInvertible(Components),

    #[error("no solution: {0} component inconsistent")]
    NoSolution(Components),

    #[error("complex matrix is singular")]
    Singular,

    #[error("complex system is inconsistent")]
    Inconsistent,

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn dim(
        op: &'static str,
        expected: impl fmt::Display,
        found: impl fmt::Display,
    ) -> Self {
        Error::Dimension {
            op,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Short machine-readable kind, used for structured CLI errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Dimension { .. } => "dimension",
            Error::ScalarNotInvertible(_) | Error::NotInvertible(_) | Error::Singular => {
                "not-invertible"
            }
            Error::NoSolution(_) | Error::Inconsistent => "no-solution",
            Error::InvalidBasis(_) => "invalid-basis",
            Error::Parse { .. } => "parse",
        }
    }
}
