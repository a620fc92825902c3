use thiserror::Error;

/// Errors raised by the census library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series truncation bounds differ: {left:?} vs {right:?}")]
    MismatchedBounds { left: Vec<u32>, right: Vec<u32> },

    #[error("exponents {exponents:?} lie beyond truncation bounds {bounds:?}")]
    OutOfBounds {
        exponents: Vec<u32>,
        bounds: Vec<u32>,
    },

    #[error("geometric reciprocal needs a zero constant term")]
    NonzeroConstantTerm,

    #[error("power substitution exponent must be at least 1, got {0}")]
    NonPositivePower(i64),

    #[error("fixed-point iteration for {series} did not converge in {iterations} passes")]
    NonConvergence {
        series: &'static str,
        iterations: usize,
    },

    #[error("coefficient of {series} at {exponents:?} is {value}, expected a nonnegative integer")]
    NotACount {
        series: &'static str,
        exponents: Vec<u32>,
        value: String,
    },

    #[error("{series} disagrees with its closed form at {exponents:?}: {computed} vs {expected}")]
    ClosedFormMismatch {
        series: &'static str,
        exponents: Vec<u32>,
        computed: String,
        expected: String,
    },

    #[error("argument {name} = {value} out of range: {expected}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: String,
    },

    #[error("diagonal ({0}, {1}) is not part of the dissection")]
    MissingDiagonal(usize, usize),

    #[error("invalid dissection: {0}")]
    InvalidDissection(String),

    #[error("{what} for n = {n} is refused: exhaustive search limited to n <= {limit}")]
    Infeasible {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("group order {order} does not divide {numerator}")]
    NonDivisible { order: String, numerator: String },

    #[error("empty type signature")]
    EmptySignature,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(name: &'static str, value: i64, lo: i64, hi: i64) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange {
            name,
            value,
            expected: format!("{lo}..={hi}"),
        });
    }
    Ok(())
}
