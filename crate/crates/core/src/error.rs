use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    NotPrime(u32),
    TooManyVariables(usize),
    DuplicateVariable(String),
    DimensionMismatch { expected: usize, found: usize },
    RingMismatch,
    RankMismatch { expected: usize, found: usize },
    ZeroPolynomial,
    NotHomogeneous(String),
    NotMonomial,
    /// `length(A/B)` requested with `B` not inside `A`.
    NotContained,
    /// `A/B` has positive dimension, so its length is infinite.
    InfiniteLength { pole_order: usize },
    /// Dimension of the zero ring requested.
    EmptyRing,
    ZeroModule,
    /// The ideal is not primary to the irrelevant maximal ideal on the module.
    NotMPrimary,
    /// No polynomial fit reproduced the window before `n_max`.
    NotStabilized { n_max: usize },
    WrongParameterCount { expected: usize, found: usize },
    NotDistinguished,
    SopExhausted { slot: usize, tries: usize },
    /// An internal consistency check failed; always a bug.
    Internal(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AlgebraError::*;
        match self {
            NotPrime(p) => write!(f, "{p} is not a prime below 2^31"),
            TooManyVariables(n) => write!(f, "{n} variables exceeds the supported maximum"),
            DuplicateVariable(v) => write!(f, "duplicate variable {v}"),
            DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} variables, found {found}")
            }
            RingMismatch => write!(f, "operands live in different rings"),
            RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            ZeroPolynomial => write!(f, "the zero polynomial has no leading term"),
            NotHomogeneous(g) => write!(f, "generator is not homogeneous: {g}"),
            NotMonomial => write!(f, "ideal is not monomial"),
            NotContained => write!(f, "submodule is not contained in the ambient module"),
            InfiniteLength { pole_order } => {
                write!(f, "quotient has infinite length (pole of order {pole_order} at t = 1)")
            }
            EmptyRing => write!(f, "empty ring: the ideal is the unit ideal"),
            ZeroModule => write!(f, "the module is zero"),
            NotMPrimary => write!(f, "ideal is not primary to the maximal ideal on the module"),
            NotStabilized { n_max } => write!(
                f,
                "Hilbert function did not stabilize by n = {n_max}; increase n_max"
            ),
            WrongParameterCount { expected, found } => {
                write!(f, "expected {expected} parameters, got {found}")
            }
            NotDistinguished => write!(f, "parameter system is not distinguished"),
            SopExhausted { slot, tries } => write!(
                f,
                "no parameter system found after {tries} tries (first failing slot x_{slot})"
            ),
            Internal(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for AlgebraError {}

pub type Result<T> = core::result::Result<T, AlgebraError>;
