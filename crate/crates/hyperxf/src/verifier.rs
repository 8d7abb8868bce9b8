//! Deterministic randomized verification.
//!
//! For each catalog entry the verifier draws admissible parameter
//! environments (rejection sampling with named degeneracy reasons),
//! evaluates the residual in the entry's check mode, and aggregates a
//! serializable report. Reports are a pure function of `(catalog, config)`:
//! per-sample RNG streams are derived as `SHA-256(seed, entry id, index)`,
//! so parallel evaluation cannot perturb the output.

mod soft;

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::catalog::{
    self, f_tilde, instantiate, is_saalschutzian, is_very_well_poised, reflect_12p2, CheckMode,
    ExactBody, IdentityEntry, InstanceKind, ParamEnv, Residual,
};
use crate::error::{Error, Result};
use crate::exact::{rat, ratio, Rat};
use crate::summations;

pub use soft::SoftOutcome;

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: u32,
    pub n_max: u32,
    pub ps_order: u32,
    pub numerator_range: (i64, i64),
    pub denominator_set: Vec<u32>,
    pub max_rejects: u32,
    pub soft_terms: u32,
    pub soft_rel_tol: Rat,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            samples: 25,
            n_max: 5,
            ps_order: 12,
            numerator_range: (-9, 9),
            denominator_set: vec![1, 2, 3, 4, 5],
            max_rejects: 1000,
            soft_terms: 200_000,
            soft_rel_tol: ratio(1, 100),
        }
    }
}

// ---------------------------------------------------------------------------
// Report structure
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Rejected,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub sample: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub env: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub soft: Option<SoftOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub passes: u32,
    pub fails: u32,
    pub rejects: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub entry: String,
    pub config: VerifyConfig,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.fails == 0
    }
}

/// Canonical JSON: object keys sorted, rationals as canonical `num/den`
/// strings. Two runs with the same config produce byte-identical output.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&v).expect("serializable")
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

fn rng_for(seed: u64, entry_id: &str, sample_index: u32) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update(entry_id.as_bytes());
    hasher.update(sample_index.to_le_bytes());
    let digest = hasher.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

fn env_strings(env: &ParamEnv) -> BTreeMap<String, String> {
    env.bindings
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect()
}

fn draw_rat(rng: &mut ChaCha8Rng, range: (i64, i64), denoms: &[u32]) -> Rat {
    let num = rng.gen_range(range.0..=range.1);
    let den = denoms[rng.gen_range(0..denoms.len())];
    Rat::new(num, den as i64)
}

/// Validation horizon for a single sampled environment: exact entries must
/// be admissible for every `n` in `0..=n_max`, formal entries at the
/// truncation order, soft entries for their (nonterminating) series.
fn validate_env(entry: &IdentityEntry, env: &ParamEnv, config: &VerifyConfig) -> Result<()> {
    match entry.mode {
        CheckMode::ExactTerminating => {
            for n in 0..=config.n_max {
                instantiate(entry.id, &env.with_n(n))?;
            }
            Ok(())
        }
        CheckMode::FormalPS => {
            instantiate(entry.id, &env.with_n(config.ps_order))?;
            Ok(())
        }
        CheckMode::NumericSoft => {
            let inst = instantiate(entry.id, &env.with_n(0))?;
            let ext = &inst.env;
            for (expr, bound, what) in &entry.sampling.min_value {
                if expr.eval(ext)? < *bound {
                    return Err(Error::ConstraintViolated(format!(
                        "{what}: {expr} < {bound}"
                    )));
                }
            }
            Ok(())
        }
    }
}

/// Outcome of sampling one environment: the admissible env plus one record
/// per rejected draw (named reasons).
pub struct SampleOutcome {
    pub env: ParamEnv,
    pub rejected: Vec<(BTreeMap<String, String>, String)>,
}

/// Draw an admissible environment for `entry`, deterministically in
/// `(seed, entry id, sample_index)`. Rejected draws redraw from the same
/// stream; the attempt budget is `config.max_rejects`.
pub fn sample_env(
    entry: &IdentityEntry,
    sample_index: u32,
    config: &VerifyConfig,
) -> Result<SampleOutcome> {
    let mut rng = rng_for(config.seed, entry.id, sample_index);
    let range = entry
        .sampling
        .numerator_range
        .unwrap_or(config.numerator_range);
    let denoms = entry
        .sampling
        .denominators
        .clone()
        .unwrap_or_else(|| config.denominator_set.clone());
    let mut rejected = Vec::new();
    for _attempt in 0..config.max_rejects {
        let mut env = ParamEnv::empty(config.n_max);
        for name in &entry.free_params {
            let value = if entry.sampling.integer_params.contains(name) {
                Rat::from(rng.gen_range(range.0..=range.1))
            } else {
                draw_rat(&mut rng, range, &denoms)
            };
            env.bind(name, value);
        }
        if entry.extra_lists {
            // cycle r through {0,1,2} by sample index so every list length
            // is exercised; s is drawn
            let r = sample_index % 3;
            let s = rng.gen_range(0..=2u32);
            for i in 1..=r {
                let v = draw_rat(&mut rng, range, &denoms);
                env.bind(&format!("a{i}"), v);
            }
            for i in 1..=s {
                let v = draw_rat(&mut rng, range, &denoms);
                env.bind(&format!("b{i}"), v);
            }
        }
        match validate_env(entry, &env, config) {
            Ok(()) => return Ok(SampleOutcome { env, rejected }),
            Err(e) => rejected.push((env_strings(&env), e.to_string())),
        }
    }
    let reason = rejected
        .last()
        .map(|(_, r)| r.clone())
        .unwrap_or_else(|| "no attempts".into());
    Err(Error::SamplingExhausted {
        attempts: config.max_rejects,
        reason,
    })
}

// ---------------------------------------------------------------------------
// Entry verification
// ---------------------------------------------------------------------------

fn push_rejects(
    records: &mut Vec<Record>,
    sample: u32,
    rejected: Vec<(BTreeMap<String, String>, String)>,
) -> u32 {
    let count = rejected.len() as u32;
    for (env, reason) in rejected {
        records.push(Record {
            sample,
            n: None,
            env,
            status: Status::Rejected,
            reason: Some(reason),
            residual: None,
            soft: None,
        });
    }
    count
}

/// Verify a single catalog entry.
///
/// Exact entries evaluate every sample at every `n` in `0..=n_max`; formal
/// entries evaluate one residual series per sample at `ps_order`;
/// numeric-soft entries run the partial-sum driver and are capped at
/// `min(samples, 8)` samples, since each one sums thousands of exact
/// rational terms.
pub fn verify_entry(id: &str, config: &VerifyConfig) -> Result<VerificationReport> {
    let entry = catalog::find(id)?;
    let mut records = Vec::new();
    let mut summary = Summary {
        passes: 0,
        fails: 0,
        rejects: 0,
    };
    // soft entries use exact partial sums over many terms; cap the sample
    // count so default runs stay fast (documented heuristic)
    let samples = match entry.mode {
        CheckMode::NumericSoft => config.samples.min(8),
        _ => config.samples,
    };
    for sample in 0..samples {
        let outcome = match sample_env(entry, sample, config) {
            Ok(o) => o,
            Err(e) => {
                records.push(Record {
                    sample,
                    n: None,
                    env: BTreeMap::new(),
                    status: Status::Rejected,
                    reason: Some(e.to_string()),
                    residual: None,
                    soft: None,
                });
                summary.rejects += 1;
                continue;
            }
        };
        summary.rejects += push_rejects(&mut records, sample, outcome.rejected);
        let env = outcome.env;
        match entry.mode {
            CheckMode::ExactTerminating => {
                for n in 0..=config.n_max {
                    let inst = instantiate(entry.id, &env.with_n(n))?;
                    let res = catalog::residual(&inst)?;
                    let ok = res.is_zero();
                    let residual = match res {
                        Residual::Exact(r) => r.to_string(),
                        Residual::Formal(s) => s.to_string(),
                    };
                    records.push(Record {
                        sample,
                        n: Some(n),
                        env: env_strings(&env),
                        status: if ok { Status::Pass } else { Status::Fail },
                        reason: None,
                        residual: Some(residual),
                        soft: None,
                    });
                    if ok {
                        summary.passes += 1;
                    } else {
                        summary.fails += 1;
                    }
                }
            }
            CheckMode::FormalPS => {
                let inst = instantiate(entry.id, &env.with_n(config.ps_order))?;
                let res = catalog::residual(&inst)?;
                let ok = res.is_zero();
                let residual = match res {
                    Residual::Exact(r) => r.to_string(),
                    Residual::Formal(s) => format!("{s}"),
                };
                records.push(Record {
                    sample,
                    n: None,
                    env: env_strings(&env),
                    status: if ok { Status::Pass } else { Status::Fail },
                    reason: None,
                    residual: Some(residual),
                    soft: None,
                });
                if ok {
                    summary.passes += 1;
                } else {
                    summary.fails += 1;
                }
            }
            CheckMode::NumericSoft => {
                let inst = instantiate(entry.id, &env.with_n(0))?;
                let outcome = soft::check(&inst, config)?;
                let ok = outcome.pass;
                records.push(Record {
                    sample,
                    n: None,
                    env: env_strings(&env),
                    status: if ok { Status::Pass } else { Status::Fail },
                    reason: None,
                    residual: None,
                    soft: Some(outcome),
                });
                if ok {
                    summary.passes += 1;
                } else {
                    summary.fails += 1;
                }
            }
        }
    }
    Ok(VerificationReport {
        entry: id.to_string(),
        config: config.clone(),
        records,
        summary,
    })
}

// ---------------------------------------------------------------------------
// Cross-check suite
// ---------------------------------------------------------------------------

/// A catalog entry re-verified with one free parameter pinned to another
/// (the specialization checks: `p = b`, `q = e`).
pub fn verify_specialized(
    base_id: &str,
    report_id: &str,
    pin: (&str, &str),
    config: &VerifyConfig,
) -> Result<VerificationReport> {
    let base = catalog::find(base_id)?;
    let (pinned, to) = pin;
    let mut records = Vec::new();
    let mut summary = Summary {
        passes: 0,
        fails: 0,
        rejects: 0,
    };
    for sample in 0..config.samples {
        let mut rng = rng_for(config.seed, report_id, sample);
        let range = config.numerator_range;
        let denoms = &config.denominator_set;
        let mut found = false;
        let mut local_rejects = Vec::new();
        for _attempt in 0..config.max_rejects {
            let mut env = ParamEnv::empty(config.n_max);
            for name in &base.free_params {
                if *name == pinned {
                    continue;
                }
                let v = draw_rat(&mut rng, range, denoms);
                env.bind(name, v);
            }
            let to_value = env.get(to).expect("pin target drawn");
            env.bind(pinned, to_value);
            if let Err(e) = validate_env(base, &env, config) {
                local_rejects.push((env_strings(&env), e.to_string()));
                continue;
            }
            summary.rejects += push_rejects(&mut records, sample, local_rejects);
            for n in 0..=config.n_max {
                let inst = instantiate(base_id, &env.with_n(n))?;
                let res = catalog::residual(&inst)?;
                let ok = res.is_zero();
                records.push(Record {
                    sample,
                    n: Some(n),
                    env: env_strings(&env),
                    status: if ok { Status::Pass } else { Status::Fail },
                    reason: None,
                    residual: Some(match res {
                        Residual::Exact(r) => r.to_string(),
                        Residual::Formal(s) => s.to_string(),
                    }),
                    soft: None,
                });
                if ok {
                    summary.passes += 1;
                } else {
                    summary.fails += 1;
                }
            }
            found = true;
            break;
        }
        if !found {
            records.push(Record {
                sample,
                n: None,
                env: BTreeMap::new(),
                status: Status::Rejected,
                reason: Some("no admissible specialized sample".into()),
                residual: None,
                soft: None,
            });
            summary.rejects += 1;
        }
    }
    Ok(VerificationReport {
        entry: report_id.to_string(),
        config: config.clone(),
        records,
        summary,
    })
}

/// `sum_rakha_rathie(a,b,c,p=b,n)` equals the Pfaff–Saalschütz value with
/// `b` shifted by one (the `(b, p)` parameter pair telescopes), and
/// `sum_svf_9f8(a,b,c,d,p=b,n)` equals Dougall's value likewise.
pub fn verify_classical_specializations(
    report_id: &str,
    config: &VerifyConfig,
) -> VerificationReport {
    let mut records = Vec::new();
    let mut summary = Summary {
        passes: 0,
        fails: 0,
        rejects: 0,
    };
    for sample in 0..config.samples {
        let mut rng = rng_for(config.seed, report_id, sample);
        let range = config.numerator_range;
        let denoms = &config.denominator_set;
        let mut emitted = false;
        for _attempt in 0..config.max_rejects {
            let a = draw_rat(&mut rng, range, denoms);
            let b = draw_rat(&mut rng, range, denoms);
            let c = draw_rat(&mut rng, range, denoms);
            let d = draw_rat(&mut rng, range, denoms);
            let n = rng.gen_range(0..=config.n_max);
            let rr = summations::sum_rakha_rathie(&a, &b, &c, &b, n).and_then(|cf| {
                summations::pfaff_saalschutz(&a, &(&b + rat(1)), &c, n).map(|ps| (cf.value, ps))
            });
            let svf = summations::sum_svf_9f8(&a, &b, &c, &d, &b, n).and_then(|cf| {
                summations::dougall(&a, &(&b + rat(1)), &c, &d, n).map(|dg| (cf.value, dg))
            });
            let (rr, svf) = match (rr, svf) {
                (Ok(rr), Ok(svf)) => (rr, svf),
                (Err(e), _) | (_, Err(e)) => {
                    let mut env = BTreeMap::new();
                    for (k, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
                        env.insert(k.to_string(), v.to_string());
                    }
                    records.push(Record {
                        sample,
                        n: Some(n),
                        env,
                        status: Status::Rejected,
                        reason: Some(e.to_string()),
                        residual: None,
                        soft: None,
                    });
                    summary.rejects += 1;
                    continue;
                }
            };
            let mut env = BTreeMap::new();
            for (k, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
                env.insert(k.to_string(), v.to_string());
            }
            let ok = rr.0 == rr.1 && svf.0 == svf.1;
            records.push(Record {
                sample,
                n: Some(n),
                env,
                status: if ok { Status::Pass } else { Status::Fail },
                reason: None,
                residual: Some(format!(
                    "rakha-rathie(p=b) - pfaff-saalschutz = {}; svf-9f8(p=b) - dougall = {}",
                    &rr.0 - &rr.1,
                    &svf.0 - &svf.1
                )),
                soft: None,
            });
            if ok {
                summary.passes += 1;
            } else {
                summary.fails += 1;
            }
            emitted = true;
            break;
        }
        if !emitted {
            records.push(Record {
                sample,
                n: None,
                env: BTreeMap::new(),
                status: Status::Rejected,
                reason: Some("no admissible specialization sample".into()),
                residual: None,
                soft: None,
            });
            summary.rejects += 1;
        }
    }
    VerificationReport {
        entry: report_id.to_string(),
        config: config.clone(),
        records,
        summary,
    }
}

/// The reflection property of the normalized Saalschützian ₆F₅:
/// `F̃(env) = (-1)^n F̃(reflect(env))`, plus value agreement after a double
/// reflection. Environments are sampled through `remark-1R12P2`, whose
/// admissibility already covers both sides.
pub fn verify_reflection(report_id: &str, config: &VerifyConfig) -> Result<VerificationReport> {
    let entry = catalog::find("remark-1R12P2")?;
    let mut records = Vec::new();
    let mut summary = Summary {
        passes: 0,
        fails: 0,
        rejects: 0,
    };
    for sample in 0..config.samples {
        let outcome = match sample_env(entry, sample, config) {
            Ok(o) => o,
            Err(e) => {
                records.push(Record {
                    sample,
                    n: None,
                    env: BTreeMap::new(),
                    status: Status::Rejected,
                    reason: Some(e.to_string()),
                    residual: None,
                    soft: None,
                });
                summary.rejects += 1;
                continue;
            }
        };
        summary.rejects += push_rejects(&mut records, sample, outcome.rejected);
        let env = outcome.env;
        for n in 0..=config.n_max {
            let env_n = env.with_n(n);
            let check = (|| -> Result<(Rat, Option<Rat>)> {
                let original = f_tilde(&env_n)?;
                let reflected_env = reflect_12p2(&env_n)?;
                let reflected = f_tilde(&reflected_env)?;
                let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
                let residual = &original - sign * reflected;
                // double reflection: value agreement when admissible
                let double = reflect_12p2(&reflected_env)
                    .and_then(|e2| f_tilde(&e2))
                    .ok()
                    .map(|v| v - &original);
                Ok((residual, double))
            })();
            match check {
                Ok((residual, double)) => {
                    let double_ok = double.as_ref().map(Rat::is_zero).unwrap_or(true);
                    let ok = residual.is_zero() && double_ok;
                    records.push(Record {
                        sample,
                        n: Some(n),
                        env: env_strings(&env),
                        status: if ok { Status::Pass } else { Status::Fail },
                        reason: None,
                        residual: Some(match double {
                            Some(d) => format!("reflection: {residual}; double reflection: {d}"),
                            None => {
                                format!("reflection: {residual}; double reflection: inadmissible")
                            }
                        }),
                        soft: None,
                    });
                    if ok {
                        summary.passes += 1;
                    } else {
                        summary.fails += 1;
                    }
                }
                Err(e) => {
                    records.push(Record {
                        sample,
                        n: Some(n),
                        env: env_strings(&env),
                        status: Status::Rejected,
                        reason: Some(e.to_string()),
                        residual: None,
                        soft: None,
                    });
                    summary.rejects += 1;
                }
            }
        }
    }
    Ok(VerificationReport {
        entry: report_id.to_string(),
        config: config.clone(),
        records,
        summary,
    })
}

/// Structural suite: excess exactly 1 on every Saalschützian-flagged side,
/// and the very-well-poised pairing on every flagged side.
pub fn verify_structural(report_id: &str, config: &VerifyConfig) -> Result<VerificationReport> {
    let mut records = Vec::new();
    let mut summary = Summary {
        passes: 0,
        fails: 0,
        rejects: 0,
    };
    let structural_samples = config.samples.min(10);
    for entry in catalog::entries() {
        let f = entry.flags;
        if !(f.saalschutzian_lhs
            || f.saalschutzian_rhs
            || f.very_well_poised_lhs
            || f.very_well_poised_rhs)
        {
            continue;
        }
        for sample in 0..structural_samples {
            let outcome = match sample_env(entry, sample, config) {
                Ok(o) => o,
                Err(e) => {
                    records.push(Record {
                        sample,
                        n: None,
                        env: BTreeMap::new(),
                        status: Status::Rejected,
                        reason: Some(format!("{}: {e}", entry.id)),
                        residual: None,
                        soft: None,
                    });
                    summary.rejects += 1;
                    continue;
                }
            };
            let n = config.n_max.max(1);
            let inst = instantiate(entry.id, &outcome.env.with_n(n))?;
            let InstanceKind::Exact { lhs, rhs } = &inst.kind else {
                continue;
            };
            let mut failures = Vec::new();
            let mut check =
                |flag: bool,
                 side: &ExactBody,
                 what: &str,
                 pred: &dyn Fn(&crate::series::SeriesSpec) -> bool| {
                    if !flag {
                        return;
                    }
                    match side {
                        ExactBody::Series(s) => {
                            if !pred(s) {
                                failures.push(format!("{} {what}", entry.id));
                            }
                        }
                        _ => failures
                            .push(format!("{} {what}: side is not a plain series", entry.id)),
                    }
                };
            check(
                f.saalschutzian_lhs,
                &lhs.body,
                "lhs not Saalschutzian",
                &is_saalschutzian,
            );
            check(
                f.saalschutzian_rhs,
                &rhs.body,
                "rhs not Saalschutzian",
                &is_saalschutzian,
            );
            check(
                f.very_well_poised_lhs,
                &lhs.body,
                "lhs not very-well-poised",
                &is_very_well_poised,
            );
            check(
                f.very_well_poised_rhs,
                &rhs.body,
                "rhs not very-well-poised",
                &is_very_well_poised,
            );
            let ok = failures.is_empty();
            records.push(Record {
                sample,
                n: Some(n),
                env: env_strings(&outcome.env),
                status: if ok { Status::Pass } else { Status::Fail },
                reason: if ok { None } else { Some(failures.join("; ")) },
                residual: Some(format!("{}: structural flags", entry.id)),
                soft: None,
            });
            if ok {
                summary.passes += 1;
            } else {
                summary.fails += 1;
            }
        }
    }
    Ok(VerificationReport {
        entry: report_id.to_string(),
        config: config.clone(),
        records,
        summary,
    })
}

/// Verify every catalog entry plus the cross-check suite (specializations,
/// reflection, structural flags). One report per entry, in registry order,
/// followed by the cross-check reports.
pub fn verify_all(config: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    let entry_reports: Vec<Result<VerificationReport>> = catalog::entries()
        .par_iter()
        .map(|e| verify_entry(e.id, config))
        .collect();
    let mut reports = entry_reports.into_iter().collect::<Result<Vec<_>>>()?;
    reports.push(verify_specialized(
        "cor-1C12P2",
        "xcheck-cor-1C12P2-p-eq-b",
        ("p", "b"),
        config,
    )?);
    reports.push(verify_specialized(
        "prop-13P3",
        "xcheck-prop-13P3-q-eq-e",
        ("q", "e"),
        config,
    )?);
    reports.push(verify_classical_specializations(
        "xcheck-classical-specializations",
        config,
    ));
    reports.push(verify_reflection(
        "xcheck-remark-1R12P2-reflection",
        config,
    )?);
    reports.push(verify_structural("xcheck-structural-flags", config)?);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic() {
        let config = VerifyConfig::default();
        let entry = catalog::find("prop-12P2").unwrap();
        let a = sample_env(entry, 3, &config).unwrap();
        let b = sample_env(entry, 3, &config).unwrap();
        assert_eq!(a.env, b.env);
        assert_eq!(a.rejected.len(), b.rejected.len());
        // a different index draws a different env (overwhelmingly)
        let c = sample_env(entry, 4, &config).unwrap();
        assert_ne!(a.env, c.env);
    }

    #[test]
    fn sampled_env_satisfies_the_balance_constraint() {
        let config = VerifyConfig::default();
        let entry = catalog::find("prop-12P2").unwrap();
        for index in 0..5 {
            let env = sample_env(entry, index, &config).unwrap().env;
            for n in 0..=config.n_max {
                let ext = entry.extend_env(&env.with_n(n)).unwrap();
                let balance = ext.get("d").unwrap() + ext.get("e").unwrap() + ext.get("f").unwrap()
                    - ext.get("a").unwrap()
                    - ext.get("b").unwrap()
                    - ext.get("c").unwrap()
                    + Rat::from(n);
                assert_eq!(balance, rat(3));
            }
        }
    }

    #[test]
    fn soft_sampler_draws_integer_a_with_q_off_the_excluded_line() {
        let config = VerifyConfig::default();
        let entry = catalog::find("cor-3C6P1").unwrap();
        for index in 0..5 {
            let env = sample_env(entry, index, &config).unwrap().env;
            let a = env.get("a").unwrap();
            let q = env.get("q").unwrap();
            assert!(a.is_integer());
            assert_ne!(rat(2) * q, a);
        }
    }

    #[test]
    fn unknown_entry_is_an_error() {
        assert!(verify_entry("nope", &VerifyConfig::default()).is_err());
    }

    #[test]
    fn n_max_zero_passes_trivially() {
        let config = VerifyConfig {
            samples: 3,
            n_max: 0,
            ..VerifyConfig::default()
        };
        let report = verify_entry("prop-3P16", &config).unwrap();
        assert_eq!(report.summary.fails, 0);
        assert_eq!(report.summary.passes, 3);
    }
}
