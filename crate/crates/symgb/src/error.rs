use std::fmt;

/// Everything that can go wrong across the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arithmetic mixed coefficients from different domains.
    DomainMismatch(String),
    /// Division by zero, in scalar arithmetic or in a parsed coefficient.
    DivisionByZero,
    /// Leading term of the zero polynomial requested.
    ZeroPolynomial,
    /// A zero polynomial where a nonzero generator or reducer is required.
    ZeroElement(&'static str),
    /// Monomial division `u / v` attempted with `v` not dividing `u`.
    NotDivisible { dividend: String, divisor: String },
    /// The permutation applied in an sg step does not send the reducer's
    /// leading monomial onto a divisor of the target's leading monomial.
    BadSgStep(String),
    /// Malformed cycle notation or a non-bijective mapping.
    BadPermutation(String),
    /// Input text rejected by the polynomial parser; `position` is a byte
    /// offset into the input.
    Parse { position: usize, message: String },
    /// Input exceeds what the brute-force comparison oracle will enumerate.
    OracleScale { max_index: u32, limit: u32 },
    /// Orbit search exceeded its work cap.
    OrbitSearchExceeded { cap: u64 },
    /// A variable index exceeds the truncation order in play.
    IndexAboveOrder { index: u32, order: u32 },
    /// Stabilization was not reached before `max_order`; the offending run's
    /// report (with its last basis) is carried along.
    MaxOrderExceeded(Box<crate::engine::GbReport>),
    /// Membership testing requires a basis flagged as a Groebner basis.
    NotGroebner,
    /// Empty generator or monomial list.
    EmptyInput,
    /// An invariant the algorithms rely on was observed to fail at runtime.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DomainMismatch(what) => write!(f, "coefficient domain mismatch: {what}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroPolynomial => write!(f, "zero polynomial has no leading term"),
            Error::ZeroElement(role) => write!(f, "zero polynomial is not a valid {role}"),
            Error::NotDivisible { dividend, divisor } => {
                write!(f, "{divisor} does not divide {dividend}")
            }
            Error::BadSgStep(msg) => write!(f, "invalid sg step: {msg}"),
            Error::BadPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::OracleScale { max_index, limit } => write!(
                f,
                "brute-force oracle refuses max index {max_index} (limit {limit})"
            ),
            Error::OrbitSearchExceeded { cap } => {
                write!(f, "orbit search exceeded work cap of {cap} assignments")
            }
            Error::IndexAboveOrder { index, order } => {
                write!(f, "variable index {index} exceeds truncation order {order}")
            }
            Error::MaxOrderExceeded(report) => write!(
                f,
                "no stabilization after order {}; last basis has {} elements",
                report.orders_visited.last().copied().unwrap_or(0),
                report.basis.elements.len()
            ),
            Error::NotGroebner => {
                write!(f, "membership test requires a basis flagged as Groebner")
            }
            Error::EmptyInput => write!(f, "empty input"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
