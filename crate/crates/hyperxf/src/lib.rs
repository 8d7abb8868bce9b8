//! Exact-arithmetic evaluation and machine verification of terminating
//! hypergeometric summation and transformation identities.
//!
//! The library has five layers, plus a [`cli`] front end:
//!
//! - [`exact`] — arbitrary-precision rationals, Pochhammer products and
//!   truncated formal power series; the scalar substrate.
//! - [`series`] — concrete ₚFq instances evaluated as exact terminating
//!   sums, exact partial sums, or formal power series in the argument.
//! - [`summations`] — closed forms for the ₃F₂, ₄F₃ and ₉F₈ summation
//!   theorems plus the classical Chu–Vandermonde, Pfaff–Saalschütz and
//!   Dougall baselines they specialize to.
//! - [`catalog`] — the identity registry: each entry carries its free
//!   parameters, derived-parameter chain, both sides as evaluable
//!   templates, and its check mode.
//! - [`verifier`] — deterministic seeded sampling of admissible parameter
//!   environments, residual evaluation, structural and specialization
//!   cross-checks, canonical JSON reports.
//!
//! Every exact-mode check compares left and right sides as rationals and
//! demands a residual of exactly zero; quadratic transformations are checked
//! as truncated power-series identities; the two alternating-argument
//! corollaries get a documented, non-exact partial-sum check.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod exact;
pub mod series;
pub mod summations;
pub mod verifier;

pub use cli::cli_main;
pub use error::{Error, Result};
