use thiserror::Error;

use crate::lattice::LatticeKind;

/// Errors raised by the algebra, automata and format layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice mismatch: {left} vs {right}")]
    LatticeMismatch { left: LatticeKind, right: LatticeKind },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("value {value} is not an element of the {lattice} structure")]
    InvalidValue { lattice: LatticeKind, value: String },

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("alphabet mismatch")]
    AlphabetMismatch,

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid state cap {0}: must be at least 1")]
    InvalidCap(usize),

    #[error("invalid crisp-deterministic automaton: {0}")]
    InvalidCdfa(String),

    #[error("relation is not reflexive: entry ({0}, {0}) is not 1")]
    PsiNotReflexive(usize),

    #[error("relation is not left invariant: {0}")]
    PsiNotLeftInvariant(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        kind: ParseErrorKind,
        message: String,
    },
}

/// Category of a text-format error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Dimension,
    InvalidValue,
    DuplicateBlock,
    MissingBlock,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
