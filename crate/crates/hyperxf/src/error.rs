//! Error type shared across the crate.
//!
//! Degeneracies are *named*: the verifier's rejection sampling surfaces the
//! message of the predicate that fired, so every error carries enough context
//! to identify the vanishing denominator or Pochhammer factor.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Binary power-series operation on series of different truncation orders.
    #[error("power series order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    /// Series inversion with vanishing constant coefficient.
    #[error("not invertible as a power series: constant term is zero")]
    NotInvertible,

    /// A denominator Pochhammer factor vanished while summing a series.
    #[error("degenerate lower parameter {param} at k = {k}")]
    DegenerateLower { param: String, k: u32 },

    /// An auxiliary-parameter formula divided by zero.
    #[error("aux denominator zero in {name} = {formula}")]
    AuxDenominatorZero { name: String, formula: String },

    /// A closed form's denominator Pochhammer vanished.
    #[error("degenerate closed form: ({symbol})_{n} = 0")]
    DegenerateClosedForm { symbol: String, n: u32 },

    /// Division by zero while evaluating a catalog expression.
    #[error("division by zero evaluating {expr}")]
    DivisionByZero { expr: String },

    /// Exponentiation with a non-integer exponent.
    #[error("non-integer exponent {exponent} in {expr}")]
    NonIntegerExponent { exponent: String, expr: String },

    /// A symbol referenced by an expression is not bound in the environment.
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),

    /// No catalog entry with the given id.
    #[error("unknown identity id {0:?}")]
    UnknownEntry(String),

    /// An entry's structural precondition failed on the given environment.
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),

    /// A series spec breaks one of its mode invariants.
    #[error("invalid series spec: {0}")]
    InvalidSpec(String),

    /// Rejection sampling ran out of attempts.
    #[error("no admissible sample found after {attempts} attempts; last rejection: {reason}")]
    SamplingExhausted { attempts: u32, reason: String },

    /// Malformed rational literal or series-spec JSON field.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
