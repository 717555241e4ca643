use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. Everything that can go wrong is loud and typed;
/// no operation silently degrades precision or guesses a value.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("mixed field specs: {0}")]
    SpecMismatch(String),

    #[error("insufficient precision: need {needed} guaranteed coefficients, have {available} ({context})")]
    InsufficientPrecision {
        needed: usize,
        available: usize,
        context: String,
    },

    #[error("constructed quadratic polynomial is degenerate: {0}")]
    DegenerateQuadratic(String),

    #[error("quadratic is inseparable; conjugate distance undefined")]
    InseparableQuadratic,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("degree certificate failed at coefficient {index}: expected valuation {expected}, computed {computed}")]
    CertificateFailed {
        index: usize,
        expected: i64,
        computed: i64,
    },

    #[error("parameter search exhausted within the bounded window: {0}")]
    SearchExhausted(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolated(String),

    #[error("threshold violated: {0}")]
    ThresholdViolated(String),

    #[error("enumeration too large: {count_bits} bits of candidates exceeds the 2^{limit_bits} guard")]
    EnumerationTooLarge { count_bits: u32, limit_bits: u32 },

    #[error("hypothesis violated at record {index}: {what}")]
    HypothesisViolated { index: usize, what: String },

    #[error("side condition violated: {0}")]
    SideConditionViolated(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error: {0}")]
    Parse(String),
}
