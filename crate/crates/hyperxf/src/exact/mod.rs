//! Exact scalar arithmetic: rationals, rising factorials, truncated power
//! series. Everything downstream is built on these three pieces; no floating
//! point appears anywhere in the crate.

mod poch;
mod ps;
mod rat;

pub use poch::{factorial, paired_poch, poch};
pub use ps::{binomial_one_minus_x, PowerSeries};
pub use rat::{rat, ratio, Rat};
