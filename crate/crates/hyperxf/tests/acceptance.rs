//! Acceptance suite.
//!
//! One test per criterion; each prints a `criterion N ...: PASS/FAIL` line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).
//! Residual checks are exact: a rational residual must be the zero rational,
//! a power-series residual the zero series. The only non-exact suite is the
//! numeric-soft one (criterion 7), which the catalog documents as a
//! heuristic diagnostic and which is non-gating by design.

use std::time::Instant;

use hyperxf::catalog::{self, instantiate, is_saalschutzian, is_very_well_poised, InstanceKind};
use hyperxf::summations::{
    ext_chu_vandermonde_lhs, rakha_rathie_lhs, rr_form_a_lhs, rr_form_b_lhs,
    sum_ext_chu_vandermonde, sum_rakha_rathie, sum_rr_form_a, sum_rr_form_b, sum_svf_9f8,
    sum_svf_form_b, svf_9f8_lhs, svf_form_b_lhs,
};
use hyperxf::verifier::{
    sample_env, to_canonical_json, verify_all, verify_classical_specializations, verify_entry,
    verify_reflection, verify_specialized, verify_structural, VerifyConfig,
};

fn line(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

/// Criterion 1 — summation suite: each closed form equals direct summation
/// of its left-hand series, exactly, over 100 admissible samples and
/// n in 0..=6.
#[test]
fn criterion_1_summation_suite() {
    let t0 = Instant::now();
    let config = VerifyConfig {
        samples: 100,
        n_max: 6,
        ..VerifyConfig::default()
    };
    let ids = [
        "sum-ext-chu-vandermonde",
        "sum-rakha-rathie",
        "sum-rr-form-a",
        "sum-rr-form-b",
        "sum-svf-9f8",
        "sum-svf-form-b",
    ];
    let mut all_ok = true;
    for id in ids {
        let report = verify_entry(id, &config).unwrap();
        let ok = report.summary.fails == 0 && report.summary.passes == 100 * 7;
        all_ok &= ok;
        assert!(
            ok,
            "{id}: passes={} fails={}",
            report.summary.passes, report.summary.fails
        );
        // drive the module-level closed forms over the same sampled envs:
        // value must equal direct summation of the corresponding series
        let entry = catalog::find(id).unwrap();
        for sample in 0..10 {
            let env = sample_env(entry, sample, &config).unwrap().env;
            let g = |s: &str| env.get(s).unwrap();
            for n in 0..=config.n_max {
                let (cf, lhs) = match id {
                    "sum-ext-chu-vandermonde" => {
                        let cf = sum_ext_chu_vandermonde(&g("a"), &g("b"), &g("p"), n).unwrap();
                        let lhs = ext_chu_vandermonde_lhs(&g("a"), &g("b"), &g("p"), n);
                        (cf, lhs)
                    }
                    "sum-rakha-rathie" => {
                        let cf = sum_rakha_rathie(&g("a"), &g("b"), &g("c"), &g("p"), n).unwrap();
                        let lhs = rakha_rathie_lhs(&g("a"), &g("b"), &g("c"), &g("p"), n);
                        (cf, lhs)
                    }
                    "sum-rr-form-a" => {
                        let cf = sum_rr_form_a(&g("a"), &g("b"), &g("c"), &g("p"), n).unwrap();
                        let lhs = rr_form_a_lhs(&g("a"), &g("b"), &g("c"), &cf.aux["gamma1"], n);
                        (cf, lhs)
                    }
                    "sum-rr-form-b" => {
                        let cf = sum_rr_form_b(&g("a"), &g("b"), &g("c"), &g("p"), n).unwrap();
                        let lhs = rr_form_b_lhs(&g("a"), &g("b"), &g("c"), &cf.aux["gamma2"], n);
                        (cf, lhs)
                    }
                    "sum-svf-9f8" => {
                        let cf =
                            sum_svf_9f8(&g("a"), &g("b"), &g("c"), &g("d"), &g("p"), n).unwrap();
                        let lhs = svf_9f8_lhs(&g("a"), &g("b"), &g("c"), &g("d"), &g("p"), n);
                        (cf, lhs)
                    }
                    _ => {
                        let cf =
                            sum_svf_form_b(&g("a"), &g("b"), &g("c"), &g("d"), &g("p"), n).unwrap();
                        let lhs = svf_form_b_lhs(
                            &g("a"),
                            &g("b"),
                            &g("c"),
                            &g("d"),
                            &cf.aux["lambda"],
                            &cf.aux["gamma_sq"],
                            n,
                        );
                        (cf, lhs)
                    }
                };
                assert_eq!(
                    lhs.eval_terminating().unwrap(),
                    cf.value,
                    "{id} sample {sample} n {n}"
                );
            }
        }
    }
    line(
        "1 (summation suite)",
        all_ok,
        &format!(
            "6 closed forms x 100 samples x n in 0..=6, residual exactly 0; \
             module closed forms checked on 10 envs each ({} ms)",
            t0.elapsed().as_millis()
        ),
    );
}

/// Criterion 2 — specialization suite: the Saalschützian ₄F₃ sum at p=b
/// equals Pfaff–Saalschütz and the ₉F₈ sum at p=b equals Dougall, exactly
/// (both with the telescoped b+1), 50 samples each; plus the catalog's
/// pinned specializations (the 5F4 transform at p=b, the 13F12 transform
/// at q=e) with zero residual.
#[test]
fn criterion_2_specialization_suite() {
    let t0 = Instant::now();
    let config = VerifyConfig {
        samples: 50,
        ..VerifyConfig::default()
    };
    let report = verify_classical_specializations("acceptance-specializations", &config);
    let ok = report.summary.fails == 0 && report.summary.passes == 50;
    assert!(ok, "summary: {:?}", report.summary);

    let pinned = VerifyConfig::default();
    for (base, tag, pin) in [
        ("cor-1C12P2", "acceptance-1C12P2-p-eq-b", ("p", "b")),
        ("prop-13P3", "acceptance-13P3-q-eq-e", ("q", "e")),
    ] {
        let r = verify_specialized(base, tag, pin, &pinned).unwrap();
        assert!(
            r.summary.fails == 0 && r.summary.passes == 25 * 6,
            "{base} at {}={}: {:?}",
            pin.0,
            pin.1,
            r.summary
        );
    }
    line(
        "2 (specialization suite)",
        ok,
        &format!(
            "p=b reproduces Pfaff-Saalschutz and Dougall exactly (50 samples); \
             pinned p=b / q=e entry residuals exactly 0 ({} ms)",
            t0.elapsed().as_millis()
        ),
    );
}

/// Criterion 3 — transformation suite: every exact-mode catalog entry has
/// residual exactly 0 for 25 admissible samples x n in 0..=5; the general
/// expansions also exercise extra parameter lists of lengths 0, 1 and 2.
#[test]
fn criterion_3_transformation_suite() {
    let t0 = Instant::now();
    let config = VerifyConfig::default(); // samples 25, n_max 5
    let ids = [
        "prop-11P1",
        "prop-3P16",
        "cor-1C3P16",
        "cor-2C3P16",
        "prop-11P2",
        "eq-1e1C11P2",
        "prop-12P1",
        "prop-12P2",
        "cor-1C12P2",
        "cor-2C12P2",
        "eq-3e2C12P2",
        "prop-13P1",
        "prop-13P3",
        "prop-13P4",
        "cor-1C13P4",
    ];
    let mut all_ok = true;
    for id in ids {
        let report = verify_entry(id, &config).unwrap();
        let ok = report.summary.fails == 0 && report.summary.passes == 25 * 6;
        all_ok &= ok;
        assert!(
            ok,
            "{id}: passes={} fails={}",
            report.summary.passes, report.summary.fails
        );
        if matches!(id, "prop-11P1" | "prop-12P1" | "prop-13P1") {
            // both extra lists must be exercised at lengths 0, 1 and 2
            // among the passing records (length = number of a<i> / b<i>
            // bindings in the sampled env)
            let mut seen_upper = [false; 3];
            let mut seen_lower = [false; 3];
            for rec in report
                .records
                .iter()
                .filter(|r| r.status == hyperxf::verifier::Status::Pass)
            {
                for (prefix, seen) in [("a", &mut seen_upper), ("b", &mut seen_lower)] {
                    let len = (1..=3)
                        .take_while(|i| rec.env.contains_key(&format!("{prefix}{i}")))
                        .count();
                    if len < 3 {
                        seen[len] = true;
                    }
                }
            }
            assert!(
                seen_upper.iter().all(|&s| s) && seen_lower.iter().all(|&s| s),
                "{id}: extra-list lengths exercised: upper {seen_upper:?} lower {seen_lower:?}"
            );
        }
    }
    line(
        "3 (transformation suite)",
        all_ok,
        &format!(
            "15 exact entries x 25 samples x n in 0..=5, residual exactly 0; \
             list lengths 0..2 exercised ({} ms)",
            t0.elapsed().as_millis()
        ),
    );
}

/// Criterion 4 — reflection suite: F̃_n(env) = (-1)^n F̃_n(reflect(env))
/// exactly, 25 samples x n in 0..=5, plus value agreement after a double
/// reflection wherever the doubly-reflected environment is admissible.
#[test]
fn criterion_4_reflection_suite() {
    let t0 = Instant::now();
    let config = VerifyConfig::default();
    let report = verify_reflection("acceptance-reflection", &config).unwrap();
    let ok = report.summary.fails == 0 && report.summary.passes == 25 * 6;
    line(
        "4 (reflection suite)",
        ok,
        &format!(
            "normalized 6F5 reflection exact over 25 samples x n in 0..=5 ({} ms)",
            t0.elapsed().as_millis()
        ),
    );
    assert!(ok, "summary: {:?}", report.summary);
}

/// Criterion 5 — quadratic suite: the five quadratic-transformation entries
/// cancel to the zero power series at order 12 for 10 admissible samples.
#[test]
fn criterion_5_quadratic_suite() {
    let t0 = Instant::now();
    let config = VerifyConfig {
        samples: 10,
        ps_order: 12,
        ..VerifyConfig::default()
    };
    let ids = ["prop-6P1", "cor-1C6P1", "cor-2C6P1", "eq-1e6", "eq-2e6"];
    let mut all_ok = true;
    for id in ids {
        let report = verify_entry(id, &config).unwrap();
        let ok = report.summary.fails == 0 && report.summary.passes == 10;
        all_ok &= ok;
        assert!(ok, "{id}: {:?}", report.summary);
    }
    line(
        "5 (quadratic suite)",
        all_ok,
        &format!(
            "5 formal entries, zero series to order 12, 10 samples each ({} ms)",
            t0.elapsed().as_millis()
        ),
    );
}

/// Criterion 6 — structural suite: excess exactly 1 on every
/// Saalschützian-flagged series and the very-well-poised pairing on every
/// flagged side (including both 13F12 sides).
#[test]
fn criterion_6_structural_suite() {
    let t0 = Instant::now();
    let config = VerifyConfig::default();
    let report = verify_structural("acceptance-structural", &config).unwrap();
    let flags_ok = report.summary.fails == 0 && report.summary.passes > 0;

    // spot-check the named sides directly, on sampler-drawn admissible envs
    let series_of = |id: &str, lhs_side: bool| {
        let entry = catalog::find(id).unwrap();
        let env = sample_env(entry, 0, &config).unwrap().env;
        let inst =
            instantiate(id, &env.with_n(config.n_max)).unwrap_or_else(|e| panic!("{id}: {e}"));
        let InstanceKind::Exact { lhs, rhs } = inst.kind else {
            panic!("{id}: exact entry expected");
        };
        let side = if lhs_side { lhs } else { rhs };
        match side.body {
            catalog::ExactBody::Series(s) => s,
            _ => panic!("{id}: plain series expected"),
        }
    };
    assert!(is_saalschutzian(&series_of("prop-3P16", false)));
    assert!(is_saalschutzian(&series_of("prop-12P2", true)));
    assert!(is_saalschutzian(&series_of("prop-12P2", false)));
    assert!(is_saalschutzian(&series_of("prop-13P4", true)));
    assert!(is_very_well_poised(&series_of("prop-13P3", true)));
    assert!(is_very_well_poised(&series_of("prop-13P3", false)));
    line(
        "6 (structural suite)",
        flags_ok,
        &format!(
            "excess = 1 on Saalschutzian-flagged sides; very-well-poised pairing on both \
             13F12 sides ({} passes, {} ms)",
            report.summary.passes,
            t0.elapsed().as_millis()
        ),
    );
    assert!(flags_ok, "summary: {:?}", report.summary);
}

/// Criterion 7 — soft numeric suite (optional, non-gating): the two
/// nonterminating corollaries with integer `a`, partial sums capped at
/// 2·10⁵ exact-rational terms, tail diagnostics reported.
///
/// `eq-3e6` meets the 1e-2 relative tolerance and is asserted. The general
/// alternating corollary `cor-3C6P1` is reported but not gated: on
/// nonterminating samples the identity as cataloged is genuinely off by a
/// surviving tail contribution of its x-dependent parameter pair (exact
/// counterexample in the entry's constraint note), so the suite asserts
/// instead that every terminating-domain sample agrees exactly and that
/// every tolerance miss carries the nonterminating fingerprint.
#[test]
fn criterion_7_soft_numeric_suite() {
    let t0 = Instant::now();
    let config = VerifyConfig {
        soft_terms: 200_000,
        ..VerifyConfig::default()
    };

    let whipple = verify_entry("eq-3e6", &config).unwrap();
    let whipple_ok = whipple.summary.fails == 0 && whipple.summary.passes > 0;
    assert!(whipple_ok, "eq-3e6: {:?}", whipple.summary);

    let general = verify_entry("cor-3C6P1", &config).unwrap();
    let mut terminating_all_exact = true;
    let mut misses_are_nonterminating = true;
    let mut terminating_seen = 0u32;
    for rec in &general.records {
        let Some(soft) = &rec.soft else { continue };
        println!(
            "  cor-3C6P1 sample {}: {} lhs={} rhs={} disc={} terms=({},{})",
            rec.sample,
            if soft.pass { "pass" } else { "miss" },
            soft.lhs_estimate,
            soft.rhs_estimate,
            soft.discrepancy,
            soft.lhs_terms,
            soft.rhs_terms
        );
        // rhs_terms below the first checkpoint means the right side
        // terminated, where the identity is valid and the check exact
        if soft.rhs_terms < 64 {
            terminating_seen += 1;
            terminating_all_exact &= soft.pass && soft.discrepancy == "0";
        } else if !soft.pass {
            // tolerance misses must carry the nonterminating fingerprint
            misses_are_nonterminating &= soft.rhs_terms >= 64;
        }
    }
    assert!(terminating_seen > 0, "no terminating-domain sample drawn");
    assert!(
        terminating_all_exact,
        "terminating-domain samples must agree exactly"
    );
    assert!(misses_are_nonterminating);
    line(
        "7 (soft numeric suite, non-gating)",
        whipple_ok,
        &format!(
            "eq-3e6 within 1e-2 on all samples; cor-3C6P1: {} fails on nonterminating \
             samples (documented identity defect, exact counterexample in catalog), \
             terminating-domain samples exact ({} ms)",
            general.summary.fails,
            t0.elapsed().as_millis()
        ),
    );
}

/// Criterion 8 — determinism: verify-all run twice with seed 42 produces
/// byte-identical canonical JSON.
#[test]
fn criterion_8_determinism() {
    let t0 = Instant::now();
    let config = VerifyConfig {
        seed: 42,
        samples: 4,
        n_max: 2,
        ps_order: 6,
        soft_terms: 20_000,
        ..VerifyConfig::default()
    };
    let first = to_canonical_json(&verify_all(&config).unwrap());
    let second = to_canonical_json(&verify_all(&config).unwrap());
    let ok = first == second;
    line(
        "8 (determinism)",
        ok,
        &format!(
            "verify-all twice with seed 42: byte-identical canonical JSON, {} bytes ({} ms)",
            first.len(),
            t0.elapsed().as_millis()
        ),
    );
    assert!(ok);
    // report count: one per catalog entry plus the five cross-check suites
    let reports: Vec<serde_json::Value> = serde_json::from_str(&first).unwrap();
    assert_eq!(reports.len(), catalog::entries().len() + 5);
}
