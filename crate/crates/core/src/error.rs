use thiserror::Error;

/// Errors raised by sequence construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("symbol {symbol} is not a residue mod {modulus}")]
    InvalidSymbol { symbol: u8, modulus: u8 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("shift {tau} out of range for length {len}")]
    ShiftOutOfRange { tau: usize, len: usize },

    #[error("support index {index} out of range for length {len}")]
    SupportOutOfRange { index: usize, len: usize },

    #[error("sequence length {0} must be even")]
    OddLength(usize),

    #[error("sequence length {0} must be odd")]
    EvenLength(usize),

    #[error("no out-of-phase shifts in a length-1 spectrum")]
    NoOutOfPhaseShift,

    #[error("shift 0 has no cyclotomic class")]
    ZeroShift,

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("{n} is not congruent to 1 mod 4")]
    NotOneModFour { n: usize },

    #[error("{candidate} does not generate the multiplicative group of Z_{n}")]
    NotGenerator { candidate: usize, n: usize },

    #[error("convention {target} unreachable for n={n}; achievable (x, y) pairs: {achievable}")]
    ConventionUnreachable {
        n: usize,
        target: String,
        achievable: String,
    },

    #[error("polynomial {poly:#b} of degree {degree} is not primitive")]
    NotPrimitive { poly: u64, degree: usize },

    #[error("pair convention mismatch for {family}: {detail}")]
    PairConventionMismatch { family: String, detail: String },

    #[error("pair construction unresolved for {family}: {detail}")]
    PairUnresolved { family: String, detail: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("theorem hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
