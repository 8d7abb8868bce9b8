//! Partial-sum checks for the nonterminating corollaries.
//!
//! The two numeric-soft entries compare an alternating series at `z = -1`
//! against a closed factor times a unit-argument series whose parametric
//! excess is 1/2 (slow algebraic decay). Everything is exact rational
//! arithmetic; "soft" refers to the truncation, not the number type.
//!
//! Heuristics, recorded in every report:
//! - alternating side: averaged consecutive partial sums, `(S_M + S_{M+1})/2`;
//! - unit-argument side: partial sum plus the last-term tail proxy
//!   `t_M · M / ω`, with `ω` the exact parametric excess;
//! - both sides iterate checkpoints `M = 64, 128, 256, ...` (capped at
//!   `soft_terms`) until two consecutive estimates agree within an eighth
//!   of the tolerance.
//!
//! The check passes when `|LHS - closed·RHS| <= tol · max(|LHS|, |closed·RHS|)`.

use serde::Serialize;

use crate::catalog::{IdentityInstance, InstanceKind, SoftSide};
use crate::error::{Error, Result};
use crate::exact::{rat, Rat};
use crate::series::{Arg, SeriesSpec, TermStream};

use super::VerifyConfig;

/// Diagnostics of one soft comparison. Decimal strings are rendered from
/// exact rationals (6 significant digits) for readability; the pass/fail
/// decision itself is exact.
#[derive(Clone, Debug, Serialize)]
pub struct SoftOutcome {
    pub pass: bool,
    pub lhs_estimate: String,
    pub rhs_estimate: String,
    pub discrepancy: String,
    pub tolerance: String,
    pub lhs_terms: u32,
    pub rhs_terms: u32,
    pub lhs_last_term: String,
    pub rhs_last_term: String,
    pub rhs_tail_estimate: String,
    pub lhs_stabilized: bool,
    pub rhs_stabilized: bool,
}

struct SideEstimate {
    value: Rat,
    terms: u32,
    last_term: Rat,
    tail_estimate: Rat,
    stabilized: bool,
}

enum TailRule {
    /// `(S_M + S_{M+1})/2` for the alternating side.
    AveragedPartialSums,
    /// `S_M + t_M · M/ω` for the unit-argument side.
    ExcessTail(Rat),
}

fn close_enough(a: &Rat, b: &Rat, rel: &Rat) -> bool {
    let diff = (a - b).abs();
    diff.is_zero() || diff <= rel * (a.abs() + b.abs())
}

fn estimate(spec: &SeriesSpec, cap: u32, tol: &Rat, rule: &TailRule) -> Result<SideEstimate> {
    let mut stream = TermStream::new(spec)?;
    let stop_rel = tol / rat(8);
    let mut sum = Rat::zero();
    let mut count: u32 = 0;
    let mut last;
    let mut checkpoint = 64u32.min(cap);
    let mut prev: Option<Rat> = None;
    loop {
        let Some(t) = stream.next_term()? else {
            // the series terminated: the partial sum is the exact value
            return Ok(SideEstimate {
                value: sum,
                terms: count,
                last_term: Rat::zero(),
                tail_estimate: Rat::zero(),
                stabilized: true,
            });
        };
        if count == checkpoint {
            // `t` is the first unsummed term t_M with M = count
            let (est, tail) = match rule {
                TailRule::AveragedPartialSums => (&sum + &t / rat(2), &t / rat(2)),
                TailRule::ExcessTail(omega) => {
                    let tail = &t * rat(count as i64) / omega;
                    (&sum + &tail, tail)
                }
            };
            if let Some(p) = &prev {
                if close_enough(&est, p, &stop_rel) {
                    return Ok(SideEstimate {
                        value: est,
                        terms: count,
                        last_term: t,
                        tail_estimate: tail,
                        stabilized: true,
                    });
                }
            }
            prev = Some(est);
            checkpoint = checkpoint.saturating_mul(2).min(cap);
        }
        last = t.clone();
        sum += t;
        count += 1;
        if count >= cap {
            // budget exhausted without two agreeing checkpoints
            let (est, tail) = match rule {
                TailRule::AveragedPartialSums => (sum.clone(), &last / rat(2)),
                TailRule::ExcessTail(omega) => {
                    let tail = &last * rat(count as i64) / omega;
                    (&sum + &tail, tail)
                }
            };
            return Ok(SideEstimate {
                value: est,
                terms: count,
                last_term: last,
                tail_estimate: tail,
                stabilized: false,
            });
        }
    }
}

fn estimate_side(side: &SoftSide, cap: u32, tol: &Rat) -> Result<SideEstimate> {
    let alternating = match &side.spec.argument {
        Arg::Value(z) => z.is_negative(),
        _ => {
            return Err(Error::InvalidSpec(
                "soft sides need a rational argument".into(),
            ))
        }
    };
    let rule = if alternating {
        TailRule::AveragedPartialSums
    } else {
        let omega = side.spec.excess();
        if omega.is_zero() || omega.is_negative() {
            return Err(Error::ConstraintViolated(format!(
                "unit-argument side has nonpositive excess {omega}"
            )));
        }
        TailRule::ExcessTail(omega)
    };
    estimate(&side.spec, cap, tol, &rule)
}

/// Run the soft comparison for a numeric-soft instance.
pub fn check(instance: &IdentityInstance, config: &VerifyConfig) -> Result<SoftOutcome> {
    let InstanceKind::Soft { lhs, rhs } = &instance.kind else {
        return Err(Error::InvalidSpec(
            "soft check requires a numeric-soft instance".into(),
        ));
    };
    let tol = &config.soft_rel_tol;
    let left = estimate_side(lhs, config.soft_terms, tol)?;
    let right = estimate_side(rhs, config.soft_terms, tol)?;
    let lhs_value = &left.value * &lhs.closed;
    let rhs_value = &right.value * &rhs.closed;
    let discrepancy = (&lhs_value - &rhs_value).abs();
    let scale = if lhs_value.abs() >= rhs_value.abs() {
        lhs_value.abs()
    } else {
        rhs_value.abs()
    };
    let pass = discrepancy.is_zero() || discrepancy <= tol * &scale;
    let dec = |r: &Rat| r.to_decimal_string(6);
    Ok(SoftOutcome {
        pass,
        lhs_estimate: dec(&lhs_value),
        rhs_estimate: dec(&rhs_value),
        discrepancy: dec(&discrepancy),
        tolerance: tol.to_string(),
        lhs_terms: left.terms,
        rhs_terms: right.terms,
        lhs_last_term: dec(&left.last_term),
        rhs_last_term: dec(&right.last_term),
        rhs_tail_estimate: dec(&right.tail_estimate),
        lhs_stabilized: left.stabilized,
        rhs_stabilized: right.stabilized,
    })
}
