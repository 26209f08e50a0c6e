use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `gcd(n, k) != 1`.
    NotCoprime { n: i64, k: i64 },
    /// `n < 2`, `k < 2` or `n == k`.
    Degenerate { n: i64, k: i64 },
    /// A mins array that does not describe a Γ-stable set.
    InvalidModule(String),
    InvalidArgument(String),
    /// A cell dimension formula produced a negative number.
    NegativeDimension { value: i64 },
    /// The truncated series left terms outside the allowed q-degree window.
    TailNotCancelled { e_a: i32, e_q: i32, e_t: i32 },
    /// Polynomial division left a remainder.
    NonExactDivision { remainder: String },
    DivisionByZero,
    /// Divisor numerator is not a product of cyclotomic binomials.
    UnsupportedDivisor,
    /// A partition sum did not clear its denominators.
    NonPolynomial { detail: String },
    NoFormula { r: i64, n: i64, shape: Vec<usize> },
    /// Two computations that should agree did not.
    Mismatch { what: String, detail: String },
}

impl Error {
    /// True for outcomes that contradict a conjectured identity rather than
    /// indicating a bug in the engine.
    pub fn is_conjecture_failure(&self) -> bool {
        matches!(self, Error::NonPolynomial { .. } | Error::Mismatch { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotCoprime { n, k } => {
                write!(f, "n and k must be coprime (got n={n}, k={k})")
            }
            Error::Degenerate { n, k } => {
                write!(f, "need n, k >= 2 and n != k (got n={n}, k={k})")
            }
            Error::InvalidModule(s) => write!(f, "invalid module: {s}"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::NegativeDimension { value } => {
                write!(f, "cell dimension came out negative ({value})")
            }
            Error::TailNotCancelled { e_a, e_q, e_t } => write!(
                f,
                "truncation tail did not cancel: term a^{e_a}*q^{e_q}*t^{e_t} survives"
            ),
            Error::NonExactDivision { remainder } => {
                write!(f, "division is not exact, remainder {remainder}")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::UnsupportedDivisor => {
                f.write_str("divisor is not a product of cyclotomic binomials")
            }
            Error::NonPolynomial { detail } => {
                write!(f, "partition sum is not a Laurent polynomial: {detail}")
            }
            Error::NoFormula { r, n, shape } => {
                write!(f, "no g formula for r={r}, n={n}, shape {shape:?}")
            }
            Error::Mismatch { what, detail } => write!(f, "{what} mismatch: {detail}"),
        }
    }
}

impl core::error::Error for Error {}
