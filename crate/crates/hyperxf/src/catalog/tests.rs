use std::collections::BTreeMap;

use super::*;
use crate::exact::ratio;

fn env_of(pairs: &[(&str, Rat)], n: u32) -> ParamEnv {
    let mut bindings = BTreeMap::new();
    for (k, v) in pairs {
        bindings.insert(k.to_string(), v.clone());
    }
    ParamEnv::new(bindings, n)
}

fn exact_residual(id: &str, env: &ParamEnv) -> Rat {
    let inst = instantiate(id, env).unwrap_or_else(|e| panic!("{id}: {e}"));
    match residual(&inst).unwrap() {
        Residual::Exact(r) => r,
        Residual::Formal(_) => panic!("expected exact residual"),
    }
}

#[test]
fn registry_contents() {
    let ids: Vec<&str> = entries().iter().map(|e| e.id).collect();
    assert!(ids.contains(&"prop-3P16"));
    assert!(ids.len() >= 24, "registry has {} entries", ids.len());
    let soft = find("cor-3C6P1").unwrap();
    assert_eq!(soft.mode, CheckMode::NumericSoft);
    // ids are unique
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
}

#[test]
fn unknown_id_is_an_error() {
    assert!(matches!(
        instantiate("no-such-id", &ParamEnv::empty(0)),
        Err(Error::UnknownEntry(_))
    ));
}

#[test]
fn n_zero_collapses_every_exact_entry() {
    // at n = 0 every Pochhammer prefactor is 1 and both sides are single
    // terms; pick simple generic values for each entry's free parameters
    let generic: &[(&str, Rat)] = &[
        ("a", ratio(9, 2)),
        ("b", ratio(1, 3)),
        ("c", ratio(-5, 4)),
        ("d", ratio(13, 3)),
        ("e", ratio(2, 5)),
        ("f", ratio(7, 5)),
        ("p", ratio(5, 3)),
        ("q", ratio(-7, 3)),
        ("w", ratio(11, 4)),
        ("x", ratio(2, 3)),
    ];
    for entry in entries() {
        if entry.mode != CheckMode::ExactTerminating {
            continue;
        }
        let pairs: Vec<(&str, Rat)> = entry
            .free_params
            .iter()
            .map(|name| {
                let v = generic
                    .iter()
                    .find(|(k, _)| k == name)
                    .map(|(_, v)| v.clone())
                    .unwrap();
                (*name, v)
            })
            .collect();
        let env = env_of(&pairs, 0);
        let r = exact_residual(entry.id, &env);
        assert!(r.is_zero(), "{}: residual {r} at n = 0", entry.id);
    }
}

#[test]
fn prop_11p1_with_extra_lists() {
    // x = 2/3, n = 2, one extra upper and one extra lower parameter
    let env = env_of(
        &[
            ("a", ratio(5, 2)),
            ("b", ratio(1, 3)),
            ("c", ratio(-1, 2)),
            ("p", ratio(3, 4)),
            ("x", ratio(2, 3)),
            ("a1", ratio(7, 5)),
            ("b1", ratio(9, 4)),
        ],
        2,
    );
    assert!(exact_residual("prop-11P1", &env).is_zero());
    // and with empty lists
    let env = env_of(
        &[
            ("a", ratio(5, 2)),
            ("b", ratio(1, 3)),
            ("c", ratio(-1, 2)),
            ("p", ratio(3, 4)),
            ("x", ratio(2, 3)),
        ],
        2,
    );
    assert!(exact_residual("prop-11P1", &env).is_zero());
}

#[test]
fn sheppard_thomae_point() {
    // 3F2 relation at a=1, c=1, d=2, e=2, n=1: both sides 3/4
    let env = env_of(
        &[("a", rat(1)), ("c", rat(1)), ("d", rat(2)), ("e", rat(2))],
        1,
    );
    let inst = instantiate("eq-3e2C12P2", &env).unwrap();
    let InstanceKind::Exact { lhs, rhs } = &inst.kind else {
        panic!("exact entry");
    };
    assert_eq!(lhs.value().unwrap(), ratio(3, 4));
    assert_eq!(rhs.value().unwrap(), ratio(3, 4));
}

#[test]
fn whipple_extension_residual_zero() {
    let env = env_of(
        &[
            ("a", ratio(1, 2)),
            ("b", ratio(-1, 3)),
            ("c", ratio(5, 4)),
            ("d", ratio(7, 2)),
            ("e", ratio(-3, 4)),
            ("p", ratio(2, 5)),
            ("q", ratio(8, 3)),
        ],
        3,
    );
    assert!(exact_residual("prop-12P2", &env).is_zero());
}

#[test]
fn thirteen_f_twelve_residual_zero() {
    let env = env_of(
        &[
            ("a", ratio(-7, 2)),
            ("b", ratio(1, 3)),
            ("c", ratio(-1, 4)),
            ("d", ratio(2, 5)),
            ("e", ratio(1, 2)),
            ("f", ratio(-2, 3)),
            ("p", ratio(5, 4)),
            ("q", ratio(-5, 3)),
        ],
        2,
    );
    assert!(exact_residual("prop-13P3", &env).is_zero());
}

#[test]
fn double_sum_transform_residual_zero() {
    // the 9F8 -> double-sum transformation with all three shifted pairs
    let env = env_of(
        &[
            ("a", ratio(3, 2)),
            ("b", ratio(-1, 3)),
            ("c", ratio(3, 4)),
            ("d", ratio(-1, 2)),
            ("e", ratio(4, 3)),
            ("p", ratio(2, 3)),
            ("q", ratio(-3, 5)),
            ("w", ratio(7, 3)),
        ],
        2,
    );
    assert!(exact_residual("prop-11P2", &env).is_zero());
}

#[test]
fn aux_denominator_errors_are_named() {
    // p = a makes the extended Chu-Vandermonde q-denominator vanish
    let env = env_of(&[("a", rat(2)), ("b", rat(5)), ("p", rat(2))], 1);
    match instantiate("sum-ext-chu-vandermonde", &env) {
        Err(Error::AuxDenominatorZero { name, formula }) => {
            assert_eq!(name, "q");
            assert!(formula.contains("(2e3f2)"));
        }
        Err(other) => panic!("expected aux denominator error, got {other}"),
        Ok(_) => panic!("expected aux denominator error, got an instance"),
    }
}

#[test]
fn formal_entries_cancel_to_order_12() {
    let env = env_of(
        &[
            ("a", ratio(3, 4)),
            ("b", ratio(-1, 2)),
            ("c", ratio(5, 3)),
            ("p", ratio(2, 5)),
            ("q", ratio(2, 3)),
        ],
        12,
    );
    for id in ["prop-6P1", "cor-1C6P1", "cor-2C6P1", "eq-1e6", "eq-2e6"] {
        let inst = instantiate(id, &env).unwrap_or_else(|e| panic!("{id}: {e}"));
        match residual(&inst).unwrap() {
            Residual::Formal(s) => assert!(s.is_zero(), "{id}: residual {s}"),
            Residual::Exact(_) => panic!("expected formal residual"),
        }
    }
}

#[test]
fn reflection_identity_holds() {
    let env = env_of(
        &[
            ("a", ratio(1, 2)),
            ("b", ratio(-1, 3)),
            ("c", ratio(5, 4)),
            ("d", ratio(7, 2)),
            ("e", ratio(-3, 4)),
            ("p", ratio(2, 5)),
            ("q", ratio(8, 3)),
        ],
        3,
    );
    // the entry form (exact residual)
    assert!(exact_residual("remark-1R12P2", &env).is_zero());
    // the operational form: F~(env) = (-1)^n F~(reflect(env))
    let original = f_tilde(&env).unwrap();
    let reflected_env = reflect_12p2(&env).unwrap();
    let reflected = f_tilde(&reflected_env).unwrap();
    assert_eq!(original, rat(-1) * &reflected); // n = 3 is odd
                                                // double reflection gives an env with the original value
    let twice = reflect_12p2(&reflected_env).unwrap();
    assert_eq!(f_tilde(&twice).unwrap(), original);
}

#[test]
fn structural_predicates() {
    // Saalschutzian flags on prop-12P2 (both sides are 6F5 with excess 1)
    let env = env_of(
        &[
            ("a", ratio(1, 2)),
            ("b", ratio(-1, 3)),
            ("c", ratio(5, 4)),
            ("d", ratio(7, 2)),
            ("e", ratio(-3, 4)),
            ("p", ratio(2, 5)),
            ("q", ratio(8, 3)),
        ],
        3,
    );
    let inst = instantiate("prop-12P2", &env).unwrap();
    let InstanceKind::Exact { lhs, rhs } = &inst.kind else {
        panic!("exact entry");
    };
    assert!(is_saalschutzian(lhs.series().unwrap()));
    assert!(is_saalschutzian(rhs.series().unwrap()));

    // very-well-poised pairing on both 13F12 sides, pairs included
    let env = env_of(
        &[
            ("a", ratio(-7, 2)),
            ("b", ratio(1, 3)),
            ("c", ratio(-1, 4)),
            ("d", ratio(2, 5)),
            ("e", ratio(1, 2)),
            ("f", ratio(-2, 3)),
            ("p", ratio(5, 4)),
            ("q", ratio(-5, 3)),
        ],
        2,
    );
    let inst = instantiate("prop-13P3", &env).unwrap();
    let InstanceKind::Exact { lhs, rhs } = &inst.kind else {
        panic!("exact entry");
    };
    assert!(is_very_well_poised(lhs.series().unwrap()));
    assert!(is_very_well_poised(rhs.series().unwrap()));
    // and a negative case: the Saalschutzian 6F5 is not very-well-poised
    let inst = instantiate(
        "prop-12P2",
        &env_of(
            &[
                ("a", ratio(1, 2)),
                ("b", ratio(-1, 3)),
                ("c", ratio(5, 4)),
                ("d", ratio(7, 2)),
                ("e", ratio(-3, 4)),
                ("p", ratio(2, 5)),
                ("q", ratio(8, 3)),
            ],
            3,
        ),
    )
    .unwrap();
    let InstanceKind::Exact { lhs, .. } = &inst.kind else {
        panic!("exact entry");
    };
    assert!(!is_very_well_poised(lhs.series().unwrap()));
}

#[test]
fn soft_precondition_is_enforced() {
    // q = a/2 violates the alternating corollary's precondition
    let env = env_of(
        &[
            ("a", rat(2)),
            ("b", ratio(-1, 3)),
            ("c", ratio(1, 4)),
            ("p", ratio(1, 2)),
            ("q", rat(1)),
        ],
        0,
    );
    assert!(matches!(
        instantiate("cor-3C6P1", &env),
        Err(Error::ConstraintViolated(_))
    ));
}
