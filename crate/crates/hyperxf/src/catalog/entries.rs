//! The identity table.
//!
//! One entry per catalog identity: six summation theorems, the exact
//! terminating transformations, the quadratic transformations (formal
//! power series), and the two alternating/unit-argument corollaries
//! (numeric-soft). Formulas are transcribed in the entry's own symbols;
//! `source_eq` records the equation labels the entry implements.

use super::*;

fn x(src: &str) -> Expr {
    Expr::parse(src)
}

fn exprs(list: &[&str]) -> Vec<Expr> {
    list.iter().map(|s| Expr::parse(s)).collect()
}

fn expr_pairs(list: &[(&str, &str)]) -> Vec<(Expr, Expr)> {
    list.iter()
        .map(|(c, g2)| (Expr::parse(c), Expr::parse(g2)))
        .collect()
}

fn dp(name: &'static str, formula: &'static str, eq_label: &'static str) -> DerivedParam {
    DerivedParam {
        name,
        formula: Expr::parse(formula),
        formula_src: formula,
        eq_label,
    }
}

fn pr(num: &str, den: &str) -> Factor {
    Factor::PochRatio {
        num: x(num),
        den: x(den),
    }
}

fn pf(base: &str) -> Factor {
    Factor::Poch(x(base))
}

fn ppr(num_center: &str, den_center: &str, square: &str) -> Factor {
    Factor::PairedPochRatio {
        num_center: x(num_center),
        den_center: x(den_center),
        square: x(square),
    }
}

/// Series template with a rational argument expression.
fn series(upper: &[&str], lower: &[&str], arg: &str) -> SeriesTemplate {
    SeriesTemplate {
        upper: exprs(upper),
        lower: exprs(lower),
        upper_pairs: vec![],
        lower_pairs: vec![],
        arg: ArgTemplate::Expr(x(arg)),
        extra_shift: None,
        per_term: None,
    }
}

fn series_with_pairs(
    upper: &[&str],
    upper_pairs: &[(&str, &str)],
    lower: &[&str],
    lower_pairs: &[(&str, &str)],
    arg: &str,
) -> SeriesTemplate {
    SeriesTemplate {
        upper: exprs(upper),
        lower: exprs(lower),
        upper_pairs: expr_pairs(upper_pairs),
        lower_pairs: expr_pairs(lower_pairs),
        arg: ArgTemplate::Expr(x(arg)),
        extra_shift: None,
        per_term: None,
    }
}

fn shifted(mut t: SeriesTemplate, shift: &str) -> SeriesTemplate {
    t.extra_shift = Some(x(shift));
    t
}

/// Formal series in the plain variable `x`.
fn formal(upper: &[&str], lower: &[&str]) -> SeriesTemplate {
    SeriesTemplate {
        upper: exprs(upper),
        lower: exprs(lower),
        upper_pairs: vec![],
        lower_pairs: vec![],
        arg: ArgTemplate::FormalX,
        extra_shift: None,
        per_term: None,
    }
}

/// Formal series in the quadratic argument `-4x/(1-x)²`.
fn quad(upper: &[&str], lower: &[&str]) -> SeriesTemplate {
    SeriesTemplate {
        upper: exprs(upper),
        lower: exprs(lower),
        upper_pairs: vec![],
        lower_pairs: vec![],
        arg: ArgTemplate::FormalQuad,
        extra_shift: None,
        per_term: None,
    }
}

/// Attach the x-dependent lower-parameter factor
/// `(δ+k)/δ = (q+(a-q)x + k(1+x))/(q+(a-q)x)`.
fn with_delta_factor(mut t: SeriesTemplate) -> SeriesTemplate {
    t.per_term = Some(PerTermTemplate {
        base_c0: x("q"),
        base_c1: x("a-q"),
        step_c0: x("1"),
        step_c1: x("1"),
    });
    t
}

fn side(prefactor: Vec<Factor>, body: Body) -> SideSpec {
    SideSpec { prefactor, body }
}

fn closed_side(prefactor: Vec<Factor>) -> SideSpec {
    SideSpec {
        prefactor,
        body: Body::One,
    }
}

fn free(list: &[&'static str]) -> Vec<&'static str> {
    list.to_vec()
}

#[allow(clippy::vec_init_then_push)]
pub(super) fn build() -> Vec<IdentityEntry> {
    let mut v = Vec::new();

    // -- summation theorems -------------------------------------------------

    v.push(IdentityEntry {
        id: "sum-ext-chu-vandermonde",
        source_eq: "(1e3f2), (2e3f2)",
        description: "Extended Chu-Vandermonde sum of a 3F2(1) with a unit-shifted pair",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "p"]),
        constraint_note: "p != a; (b)_n, (q)_n nonzero",
        derived: vec![dp("q", "p*(b-a-1)/(p-a)", "(2e3f2)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(&["a", "p+1", "-n"], &["b", "p"], "1")),
        ),
        rhs: closed_side(vec![pr("b-a-1", "b"), pr("q+1", "q")]),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "sum-rakha-rathie",
        source_eq: "(e1R1C1P18), (e2R1C1P18)",
        description: "Saalschutzian 4F3(1) sum extending Pfaff-Saalschutz",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "p"]),
        constraint_note: "ab + p(c-a-b-1) != 0; (c)_n, (c-a-b-1)_n, (q)_n nonzero",
        derived: vec![dp(
            "q",
            "p*(c-a-1)*(c-b-1)/(a*b+p*(c-a-b-1))",
            "(e2R1C1P18)",
        )],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "p+1", "-n"],
                &["c", "p", "2+a+b-c-n"],
                "1",
            )),
        ),
        rhs: closed_side(vec![
            pr("c-a-1", "c"),
            pr("c-b-1", "c-a-b-1"),
            pr("q+1", "q"),
        ]),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "sum-rr-form-a",
        source_eq: "(e3R1C1P18), (e4R1C1P18)",
        description: "First rewrite of the 4F3(1) sum (well-poised-style parameters)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "p"]),
        constraint_note: "bc - p(a-p) != 0",
        derived: vec![dp("gamma1", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(e4R1C1P18)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a-b-c", "gamma1+1", "a+n", "-n"],
                &["1+a-b", "1+a-c", "gamma1"],
                "1",
            )),
        ),
        rhs: closed_side(vec![
            pr("b", "1+a-b"),
            pr("c", "1+a-c"),
            pr("a-p+1", "p"),
            pr("p+1", "a-p"),
        ]),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "sum-rr-form-b",
        source_eq: "(e5R1C1P18), (e6R1C1P18)",
        description: "Second rewrite of the 4F3(1) sum",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "p"]),
        constraint_note: "ab + p(c-a-b-1) != 0; gamma2 coincides with the q of (e2R1C1P18)",
        derived: vec![dp(
            "gamma2",
            "p*(c-a-1)*(c-b-1)/(a*b+p*(c-a-b-1))",
            "(e6R1C1P18)",
        )],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["c-a-1", "c-b-1", "gamma2+1", "-n"],
                &["c", "gamma2", "c-a-b-n"],
                "1",
            )),
        ),
        rhs: closed_side(vec![pr("a", "c"), pr("b", "1+a+b-c"), pr("p+1", "p")]),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "sum-svf-9f8",
        source_eq: "(1e1R3C11P2), (2e1R3C11P2)",
        description: "Very-well-poised 9F8(1) sum extending Dougall's theorem",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "p"]),
        constraint_note: "(2a-b-c-d+n)(bcd + p(a-p)(a-b-c-d)) != 0",
        derived: vec![dp(
            "alpha",
            "p*(a-p)*(a-b-c)*(a-b-d)*(a-c-d)/((2*a-b-c-d+n)*(b*c*d+p*(a-p)*(a-b-c-d)))",
            "(2e1R3C11P2)",
        )],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &[
                    "a",
                    "1+a/2",
                    "b",
                    "c",
                    "d",
                    "2*a-b-c-d+n",
                    "a-p+1",
                    "p+1",
                    "-n",
                ],
                &[
                    "a/2",
                    "1+a-b",
                    "1+a-c",
                    "1+a-d",
                    "1+b+c+d-a-n",
                    "p",
                    "a-p",
                    "1+a+n",
                ],
                "1",
            )),
        ),
        rhs: closed_side(vec![
            pr("1+a", "1+a-b"),
            pr("a-b-c", "1+a-c"),
            pr("a-b-d", "1+a-d"),
            pr("a-c-d", "a-b-c-d"),
            pr("alpha+1", "alpha"),
        ]),
        flags: EntryFlags {
            very_well_poised_lhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "sum-svf-form-b",
        source_eq: "(1e2R3C11P2)-(3e2R3C11P2)",
        description: "Conjugate-pair rewrite of the 9F8(1) sum (only gamma^2 is rational)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "p"]),
        constraint_note: "bcd + p(a-p)(a-b-c-d) != 0; pairs lambda/2 +- gamma enter via gamma^2",
        derived: vec![
            dp("lambda", "2*a-b-c-d", "(2e2R3C11P2)"),
            dp(
                "gamma2",
                "lambda^2/4-p*(a-p)*(a-b-c)*(a-b-d)*(a-c-d)/(b*c*d+p*(a-p)*(a-b-c-d))",
                "(3e2R3C11P2)",
            ),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series_with_pairs(
                &[
                    "lambda",
                    "1+lambda/2",
                    "lambda+b-a",
                    "lambda+c-a",
                    "lambda+d-a",
                    "a+n",
                    "-n",
                ],
                &[("lambda/2+1", "gamma2")],
                &[
                    "lambda/2",
                    "1+a-b",
                    "1+a-c",
                    "1+a-d",
                    "1+lambda-a-n",
                    "1+lambda+n",
                ],
                &[("lambda/2", "gamma2")],
                "1",
            )),
        ),
        rhs: closed_side(vec![
            pr("1+lambda", "a-lambda"),
            pr("b", "1+a-b"),
            pr("c", "1+a-c"),
            pr("d", "1+a-d"),
            pr("a-p+1", "p"),
            pr("p+1", "a-p"),
        ]),
        flags: EntryFlags {
            very_well_poised_lhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    // -- transformations to Saalschutzian series -----------------------------

    v.push(IdentityEntry {
        id: "prop-11P1",
        source_eq: "(1e11P1), (2e11P1)",
        description: "General expansion of an (r+6)F(s+4)(x) into a sum of (r+2)Fs(x) pieces",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "p", "x"]),
        constraint_note: "bc - p(a-p) != 0; extra lists a_i (upper) and b_i (lower) allowed",
        derived: vec![dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(1e11P1)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(shifted(
                series(
                    &["a", "b", "c", "a-p+1", "p+1", "-n"],
                    &["1+a-b", "1+a-c", "p", "a-p"],
                    "x",
                ),
                "0",
            )),
        ),
        rhs: side(
            vec![],
            Body::DoubleSum {
                outer: shifted(
                    series(
                        &["a/2", "(a+1)/2", "a-b-c", "gamma+1", "-n"],
                        &["1+a-b", "1+a-c", "gamma"],
                        "-4*x",
                    ),
                    "0",
                ),
                inner: shifted(series(&["a+2*m", "-n+m"], &[], "x"), "m"),
                inner_n: x("n-m"),
            },
        ),
        flags: EntryFlags::default(),
        extra_lists: true,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "prop-3P16",
        source_eq: "(1e3P16)-(4e3P16)",
        description: "7F6(1) with two unit-shifted pairs to a Saalschutzian 7F6(1)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "p", "q", "w"]),
        constraint_note: "a != q; 1+2q-w+n != 0; bc - p(a-p) != 0",
        derived: vec![
            dp("alpha", "q*(1+a-w)/(a-q)", "(2e3P16)"),
            dp("beta", "(q*(1+a-w)+n*(a-q))/(1+2*q-w+n)", "(3e3P16)"),
            dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(4e3P16)"),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "a-p+1", "p+1", "q+1", "-n"],
                &["1+a-b", "1+a-c", "p", "a-p", "q", "w"],
                "1",
            )),
        ),
        rhs: side(
            vec![pr("w-a-1", "w"), pr("alpha+1", "alpha")],
            Body::Series(series(
                &[
                    "1+a-w", "a/2", "(a+1)/2", "a-b-c", "beta+1", "gamma+1", "-n",
                ],
                &[
                    "1+a-b",
                    "1+a-c",
                    "(2+a-w-n)/2",
                    "(3+a-w-n)/2",
                    "beta",
                    "gamma",
                ],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "cor-1C3P16",
        source_eq: "(1e1C3P16), (2e1C3P16)",
        description: "6F5(1) with one unit-shifted pair to a Saalschutzian 6F5(1)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "p", "w"]),
        constraint_note: "bc - p(a-p) != 0",
        derived: vec![dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(2e1C3P16)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "a-p+1", "p+1", "-n"],
                &["1+a-b", "1+a-c", "p", "a-p", "w"],
                "1",
            )),
        ),
        rhs: side(
            vec![pr("w-a", "w")],
            Body::Series(series(
                &["1+a-w", "a/2", "(a+1)/2", "a-b-c", "gamma+1", "-n"],
                &["1+a-b", "1+a-c", "(1+a-w-n)/2", "(2+a-w-n)/2", "gamma"],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "cor-2C3P16",
        source_eq: "(1e2C3P16)-(3e2C3P16)",
        description: "Nearly-poised-style 5F4(1) to a Saalschutzian 6F5(1)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "q", "w"]),
        constraint_note: "a != q; 1+2q-w+n != 0",
        derived: vec![
            dp("alpha", "q*(1+a-w)/(a-q)", "(2e2C3P16)"),
            dp("beta", "(q*(1+a-w)+n*(a-q))/(1+2*q-w+n)", "(3e2C3P16)"),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "q+1", "-n"],
                &["1+a-b", "1+a-c", "q", "w"],
                "1",
            )),
        ),
        rhs: side(
            vec![pr("w-a-1", "w"), pr("alpha+1", "alpha")],
            Body::Series(series(
                &["1+a-w", "a/2", "(a+1)/2", "1+a-b-c", "beta+1", "-n"],
                &["1+a-b", "1+a-c", "(2+a-w-n)/2", "(3+a-w-n)/2", "beta"],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "prop-11P2",
        source_eq: "(1e11P2)-(4e11P2)",
        description:
            "9F8(1) with three unit-shifted pairs to a double sum over Saalschutzian 5F4(1)s",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "e", "p", "q", "w"]),
        constraint_note: "a != q; 1+2q-w+n != 0; bc - p(a-p) != 0; d+e-a not in {1..n}",
        derived: vec![
            dp("alpha", "q*(1+a-w)/(a-q)", "(2e11P2)"),
            dp("beta", "(q*(1+a-w)+n*(a-q))/(1+2*q-w+n)", "(3e11P2)"),
            dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(4e11P2)"),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "d", "e", "a-p+1", "p+1", "q+1", "-n"],
                &["1+a-b", "1+a-c", "1+a-d", "1+a-e", "p", "a-p", "q", "w"],
                "1",
            )),
        ),
        rhs: side(
            vec![pr("w-a-1", "w"), pr("alpha+1", "alpha")],
            Body::DoubleSum {
                outer: series(
                    &["-n", "a/2", "(a+1)/2", "1+a-w", "1+a-d-e", "beta+1"],
                    &["1+a-d", "1+a-e", "(2+a-w-n)/2", "(3+a-w-n)/2", "beta"],
                    "1",
                ),
                inner: series(
                    &["-m", "a-b-c", "d", "e", "gamma+1"],
                    &["1+a-b", "1+a-c", "d+e-a-m", "gamma"],
                    "1",
                ),
                inner_n: x("m"),
            },
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "eq-1e1C11P2",
        source_eq: "(1e1C11P2), (2e1C11P3)",
        description: "Very-well-poised 9F8(1) to a Saalschutzian 5F4(1)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "e", "p"]),
        constraint_note: "bc - p(a-p) != 0; d+e-a not in {1..n}",
        derived: vec![dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(2e1C11P3)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "1+a/2", "b", "c", "d", "e", "a-p+1", "p+1", "-n"],
                &[
                    "a/2", "1+a-b", "1+a-c", "1+a-d", "1+a-e", "p", "a-p", "1+a+n",
                ],
                "1",
            )),
        ),
        rhs: side(
            vec![pr("1+a", "1+a-d"), pr("1+a-d-e", "1+a-e")],
            Body::Series(series(
                &["a-b-c", "d", "e", "gamma+1", "-n"],
                &["1+a-b", "1+a-c", "d+e-a-n", "gamma"],
                "1",
            )),
        ),
        flags: EntryFlags {
            very_well_poised_lhs: true,
            saalschutzian_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    // -- Saalschutzian to Saalschutzian ---------------------------------------

    v.push(IdentityEntry {
        id: "prop-12P1",
        source_eq: "(1e12P1), (2e12P1)",
        description: "General expansion of an (r+4)F(s+2)(x) into a sum of (r+2)Fs(x) pieces",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "p", "x"]),
        constraint_note: "ab + p(c-a-b-1) != 0; extra lists a_i (upper) and b_i (lower) allowed",
        derived: vec![dp(
            "gamma",
            "p*(c-a-1)*(c-b-1)/(a*b+p*(c-a-b-1))",
            "(1e12P1)",
        )],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(shifted(
                series(&["a", "b", "p+1", "-n"], &["c", "p"], "x"),
                "0",
            )),
        ),
        rhs: side(
            vec![],
            Body::DoubleSum {
                outer: shifted(
                    series(&["c-a-1", "c-b-1", "gamma+1", "-n"], &["c", "gamma"], "x"),
                    "0",
                ),
                inner: shifted(series(&["1+a+b-c", "-n+m"], &[], "x"), "m"),
                inner_n: x("n-m"),
            },
        ),
        flags: EntryFlags::default(),
        extra_lists: true,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "prop-12P2",
        source_eq: "(1e12P2)-(5e12P2)",
        description: "Saalschutzian 6F5(1) to Saalschutzian 6F5(1), two unit-shifted pairs each",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "e", "p", "q"]),
        constraint_note: "d+e+f-a-b-c+n = 3 (f derived); c != q; d-a-b-1 != 0",
        derived: vec![
            dp("f", "3+a+b+c-d-e-n", "(2e12P2)"),
            dp("alpha", "q*(e-c-1)*(f-c-1)/((c-q)*(d-a-b-1))", "(3e12P2)"),
            dp("gamma", "p*(d-a-1)*(d-b-1)/(a*b+p*(d-a-b-1))", "(4e12P2)"),
            dp(
                "delta",
                "(q*(e-c-1)*(f-c-1)+n*(c-q)*(d-a-b-1))/((e-c-1)*(f-c-1)-(c-q)*(d-a-b-1))",
                "(5e12P2)",
            ),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "p+1", "q+1", "-n"],
                &["d", "e", "f", "p", "q"],
                "1",
            )),
        ),
        rhs: side(
            vec![pr("e-c-1", "e"), pr("f-c-1", "f"), pr("alpha+1", "alpha")],
            Body::Series(series(
                &["d-a-1", "d-b-1", "c", "gamma+1", "delta+1", "-n"],
                &["d", "2+c-e-n", "2+c-f-n", "gamma", "delta"],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_lhs: true,
            saalschutzian_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "remark-1R12P2",
        source_eq: "(1e1R12P2), (2e1R12P2)",
        description: "Reflection symmetry of the normalized Saalschutzian 6F5(1): F~ = (-1)^n F~(reflected)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "e", "p", "q"]),
        constraint_note: "d+e+f-a-b-c+n = 3 (f derived); alpha of the reflected side built from the reflected parameters",
        derived: vec![
            dp("f", "3+a+b+c-d-e-n", "(2e12P2)"),
            dp(
                "alpha",
                "q*(e-c-1)*(f-c-1)/((c-q)*(d-a-b-1))",
                "(3e12P2)",
            ),
            dp(
                "gamma",
                "p*(d-a-1)*(d-b-1)/(a*b+p*(d-a-b-1))",
                "(4e12P2)",
            ),
            dp(
                "delta",
                "(q*(e-c-1)*(f-c-1)+n*(c-q)*(d-a-b-1))/((e-c-1)*(f-c-1)-(c-q)*(d-a-b-1))",
                "(5e12P2)",
            ),
            // alpha formula applied to the reflected arguments
            dp(
                "alpha_r",
                "delta*(1-e-n)*(1-f-n)/((c-delta)*(1+a+b-d))",
                "(3e12P2) at (2e1R12P2)",
            ),
        ],
        preconditions: vec![],
        lhs: side(
            vec![pf("d"), pf("e"), pf("f"), pf("alpha")],
            Body::Series(series(
                &["a", "b", "c", "p+1", "q+1", "-n"],
                &["d", "e", "f", "p", "q"],
                "1",
            )),
        ),
        rhs: side(
            vec![
                Factor::SignPower,
                pf("d"),
                pf("2+c-e-n"),
                pf("2+c-f-n"),
                pf("alpha_r"),
            ],
            Body::Series(series(
                &["d-a-1", "d-b-1", "c", "gamma+1", "delta+1", "-n"],
                &["d", "2+c-e-n", "2+c-f-n", "gamma", "delta"],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_lhs: true,
            saalschutzian_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "cor-1C12P2",
        source_eq: "(1e1C12P2)-(3e1C12P2)",
        description: "Saalschutzian 5F4(1) to Saalschutzian 5F4(1), one unit-shifted pair each",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "e", "p"]),
        constraint_note: "d+e+f-a-b-c+n = 2 (f derived); ab + p(d-a-b-1) != 0",
        derived: vec![
            dp("f", "2+a+b+c-d-e-n", "(2e1C12P2)"),
            dp("gamma", "p*(d-a-1)*(d-b-1)/(a*b+p*(d-a-b-1))", "(3e1C12P2)"),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "p+1", "-n"],
                &["d", "e", "f", "p"],
                "1",
            )),
        ),
        rhs: side(
            vec![pr("e-c", "e"), pr("f-c", "f")],
            Body::Series(series(
                &["d-a-1", "d-b-1", "c", "gamma+1", "-n"],
                &["d", "1+c-e-n", "1+c-f-n", "gamma"],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_lhs: true,
            saalschutzian_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "cor-2C12P2",
        source_eq: "(1e2C12P2), (2e2C12P2)",
        description: "4F3(1) with one unit-shifted pair transformed with reversed e-parameter",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "c", "d", "e", "p"]),
        constraint_note: "p != a",
        derived: vec![dp("gamma", "p*(d-a-1)/(p-a)", "(2e2C12P2)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(&["a", "c", "p+1", "-n"], &["d", "e", "p"], "1")),
        ),
        rhs: side(
            vec![pr("e-c", "e")],
            Body::Series(series(
                &["d-a-1", "c", "gamma+1", "-n"],
                &["d", "1+c-e-n", "gamma"],
                "1",
            )),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "eq-3e2C12P2",
        source_eq: "(3e2C12P2)",
        description: "Classical terminating 3F2(1) two-term relation",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "c", "d", "e"]),
        constraint_note: "none beyond series admissibility",
        derived: vec![],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(&["a", "c", "-n"], &["d", "e"], "1")),
        ),
        rhs: side(
            vec![pr("e-c", "e")],
            Body::Series(series(&["d-a", "c", "-n"], &["d", "1+c-e-n"], "1")),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    // -- transformations to very-well-poised series ---------------------------

    v.push(IdentityEntry {
        id: "prop-13P1",
        source_eq: "(1e13P1)-(3e13P1)",
        description: "General expansion of an (r+7)F(s+5)(x) into very-well-poised outer terms",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "p", "x"]),
        constraint_note: "bcd + p(a-p)(a-b-c-d) != 0; pairs lambda/2 +- gamma via gamma^2",
        derived: vec![
            dp("lambda", "2*a-b-c-d", "(1e13P1)"),
            dp(
                "gamma2",
                "lambda^2/4-p*(a-p)*(a-b-c)*(a-b-d)*(a-c-d)/(b*c*d+p*(a-p)*(a-b-c-d))",
                "(3e13P1)",
            ),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(shifted(
                series(
                    &["a", "b", "c", "d", "a-p+1", "p+1", "-n"],
                    &["1+a-b", "1+a-c", "1+a-d", "p", "a-p"],
                    "x",
                ),
                "0",
            )),
        ),
        rhs: side(
            vec![],
            Body::DoubleSum {
                outer: shifted(
                    series_with_pairs(
                        &[
                            "lambda",
                            "lambda+b-a",
                            "lambda+c-a",
                            "lambda+d-a",
                            "a/2",
                            "(a+1)/2",
                            "-n",
                        ],
                        &[("lambda/2+1", "gamma2")],
                        &["lambda/2", "(lambda+1)/2", "1+a-b", "1+a-c", "1+a-d"],
                        &[("lambda/2", "gamma2")],
                        "x",
                    ),
                    "0",
                ),
                inner: shifted(
                    series(&["a+2*m", "a-lambda", "-n+m"], &["1+lambda+2*m"], "x"),
                    "m",
                ),
                inner_n: x("n-m"),
            },
        ),
        flags: EntryFlags::default(),
        extra_lists: true,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "prop-13P3",
        source_eq: "(1e13P3)-(7e13P3)",
        description: "Very-well-poised 13F12(1) to very-well-poised 13F12(1)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "e", "f", "p", "q"]),
        constraint_note: "3a = b+c+d+e+f+g-n (g derived); squares gamma^2, delta^2, epsilon^2 enter via pairs",
        derived: vec![
            dp("g", "3*a+n-b-c-d-e-f", "(1e13P3)"),
            dp("lambda", "2*a-b-c-d", "(3e13P3)"),
            dp("mu", "2*a-e-f-g", "(4e13P3)"),
            dp(
                "gamma2",
                "lambda^2/4-p*(a-p)*(a-b-c)*(a-b-d)*(a-c-d)/(b*c*d+p*(a-p)*(a-b-c-d))",
                "(5e13P3)",
            ),
            dp(
                "delta2",
                "mu^2/4-q*(a-q)*(a-e-f)*(a-e-g)*(a-f-g)/(e*f*g+q*(a-q)*(a-e-f-g))",
                "(6e13P3)",
            ),
            dp(
                "epsilon2",
                "lambda^2/4-(q*(a-q)*(a-e-f)*(a-e-g)*(a-f-g)+n*(mu+n)*(e*f*g+q*(a-q)*(a-e-f-g)))/((a-e-f)*(a-e-g)*(a-f-g)-(mu+n)*(e*f+e*g+f*g+a*(a-e-f-g)-q*(a-q)))",
                "(7e13P3)",
            ),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &[
                    "a", "1+a/2", "b", "c", "d", "e", "f", "g", "a-p+1", "p+1",
                    "a-q+1", "q+1", "-n",
                ],
                &[
                    "a/2", "1+a-b", "1+a-c", "1+a-d", "1+a-e", "1+a-f", "1+a-g",
                    "p", "a-p", "q", "a-q", "1+a+n",
                ],
                "1",
            )),
        ),
        rhs: side(
            vec![
                pr("1+a", "1+lambda"),
                pr("1+lambda-e", "1+a-e"),
                pr("1+lambda-f", "1+a-f"),
                pr("1+lambda-g", "1+a-g"),
                ppr("mu/2+1", "mu/2", "delta2"),
            ],
            Body::Series(series_with_pairs(
                &[
                    "lambda",
                    "1+lambda/2",
                    "lambda+b-a",
                    "lambda+c-a",
                    "lambda+d-a",
                    "e",
                    "f",
                    "g",
                    "-n",
                ],
                &[("lambda/2+1", "gamma2"), ("lambda/2+1", "epsilon2")],
                &[
                    "lambda/2",
                    "1+a-b",
                    "1+a-c",
                    "1+a-d",
                    "1+lambda-e",
                    "1+lambda-f",
                    "1+lambda-g",
                    "1+lambda+n",
                ],
                &[("lambda/2", "gamma2"), ("lambda/2", "epsilon2")],
                "1",
            )),
        ),
        flags: EntryFlags {
            very_well_poised_lhs: true,
            very_well_poised_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "prop-13P4",
        source_eq: "(1e13P4)-(6e13P4)",
        description: "Saalschutzian 8F7(1) to very-well-poised 13F12(1)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "p", "q"]),
        constraint_note: "w = 1+2a-2lambda-n (derived); 2q != a",
        derived: vec![
            dp("lambda", "2*a-b-c-d", "(2e13P4)"),
            dp("w", "1+2*a-2*lambda-n", "(3e13P4)"),
            dp("alpha", "q*(2*lambda-a)/(2*q-a)", "(4e13P4)"),
            dp(
                "gamma2",
                "lambda^2/4-p*(a-p)*(a-b-c)*(a-b-d)*(a-c-d)/(b*c*d+p*(a-p)*(a-b-c-d))",
                "(5e13P4)",
            ),
            dp(
                "delta2",
                "lambda^2/4-(q*(2*lambda-a)+n*(2*q-a))/2",
                "(6e13P4)",
            ),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "d", "a-p+1", "p+1", "q+1", "-n"],
                &["1+a-b", "1+a-c", "1+a-d", "p", "a-p", "q", "w"],
                "1",
            )),
        ),
        rhs: side(
            vec![
                pr("2*lambda-a", "1+lambda"),
                pr("lambda-a", "2*lambda-2*a"),
                pr("alpha+1", "alpha"),
            ],
            Body::Series(series_with_pairs(
                &[
                    "lambda",
                    "1+lambda/2",
                    "a/2",
                    "(a+1)/2",
                    "lambda+b-a",
                    "lambda+c-a",
                    "lambda+d-a",
                    "1+a-w",
                    "-n",
                ],
                &[("lambda/2+1", "gamma2"), ("lambda/2+1", "delta2")],
                &[
                    "lambda/2",
                    "(2+2*lambda-a)/2",
                    "(1+2*lambda-a)/2",
                    "1+a-b",
                    "1+a-c",
                    "1+a-d",
                    "lambda+w-a",
                    "1+lambda+n",
                ],
                &[("lambda/2", "gamma2"), ("lambda/2", "delta2")],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_lhs: true,
            very_well_poised_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "cor-1C13P4",
        source_eq: "(1e1C13P4)-(5e1C13P4)",
        description: "Saalschutzian 6F5(1) with two well-poisedness deviations to a very-well-poised 11F10(1)",
        mode: CheckMode::ExactTerminating,
        free_params: free(&["a", "b", "c", "d", "q"]),
        constraint_note: "lambda = 1+2a-b-c-d; w = 1+2a-2lambda-n (derived); 2q != a",
        derived: vec![
            dp("lambda", "1+2*a-b-c-d", "(2e1C13P4)"),
            dp("w", "1+2*a-2*lambda-n", "(3e1C13P4)"),
            dp("alpha", "q*(2*lambda-a)/(2*q-a)", "(4e1C13P4)"),
            dp(
                "delta2",
                "lambda^2/4-(q*(2*lambda-a)+n*(2*q-a))/2",
                "(5e1C13P4)",
            ),
        ],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "d", "q+1", "-n"],
                &["1+a-b", "1+a-c", "1+a-d", "q", "w"],
                "1",
            )),
        ),
        rhs: side(
            vec![
                pr("2*lambda-a", "1+lambda"),
                pr("lambda-a", "2*lambda-2*a"),
                pr("alpha+1", "alpha"),
            ],
            Body::Series(series_with_pairs(
                &[
                    "lambda",
                    "1+lambda/2",
                    "a/2",
                    "(a+1)/2",
                    "lambda+b-a",
                    "lambda+c-a",
                    "lambda+d-a",
                    "1+a-w",
                    "-n",
                ],
                &[("lambda/2+1", "delta2")],
                &[
                    "lambda/2",
                    "(2+2*lambda-a)/2",
                    "(1+2*lambda-a)/2",
                    "1+a-b",
                    "1+a-c",
                    "1+a-d",
                    "lambda+w-a",
                    "1+lambda+n",
                ],
                &[("lambda/2", "delta2")],
                "1",
            )),
        ),
        flags: EntryFlags {
            saalschutzian_lhs: true,
            very_well_poised_rhs: true,
            ..Default::default()
        },
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    // -- quadratic transformations (formal power series) ----------------------

    v.push(IdentityEntry {
        id: "prop-6P1",
        source_eq: "(1e6P1)-(3e6P1)",
        description: "Quadratic transformation of a 6F5(x) with x-dependent lower parameter delta",
        mode: CheckMode::FormalPS,
        free_params: free(&["a", "b", "c", "p", "q"]),
        constraint_note: "bc - p(a-p) != 0; q != 0; delta = (q+(a-q)x)/(1+x) handled per term",
        derived: vec![dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(2e6P1)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(formal(
                &["a", "b", "c", "a-p+1", "p+1", "q+1"],
                &["1+a-b", "1+a-c", "p", "a-p", "q"],
            )),
        ),
        rhs: side(
            vec![
                Factor::PsLinear {
                    c0: x("1"),
                    c1: x("(a-q)/q"),
                },
                Factor::PsBinomial(x("-a-1")),
            ],
            Body::Series(with_delta_factor(quad(
                &["a/2", "(a+1)/2", "a-b-c", "gamma+1"],
                &["1+a-b", "1+a-c", "gamma"],
            ))),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "cor-1C6P1",
        source_eq: "(1e1C6P1), (2e1C6P1)",
        description: "Quadratic transformation of a 5F4(x) with one unit-shifted pair",
        mode: CheckMode::FormalPS,
        free_params: free(&["a", "b", "c", "p"]),
        constraint_note: "bc - p(a-p) != 0",
        derived: vec![dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(2e1C6P1)")],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(formal(
                &["a", "b", "c", "a-p+1", "p+1"],
                &["1+a-b", "1+a-c", "p", "a-p"],
            )),
        ),
        rhs: side(
            vec![Factor::PsBinomial(x("-a"))],
            Body::Series(quad(
                &["a/2", "(a+1)/2", "a-b-c", "gamma+1"],
                &["1+a-b", "1+a-c", "gamma"],
            )),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "cor-2C6P1",
        source_eq: "(1e2C6P1), (2e2C6P1)",
        description: "Quadratic transformation of a 4F3(x) with x-dependent lower parameter delta",
        mode: CheckMode::FormalPS,
        free_params: free(&["a", "b", "c", "q"]),
        constraint_note: "q != 0; delta = (q+(a-q)x)/(1+x) handled per term",
        derived: vec![],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(formal(&["a", "b", "c", "q+1"], &["1+a-b", "1+a-c", "q"])),
        ),
        rhs: side(
            vec![
                Factor::PsLinear {
                    c0: x("1"),
                    c1: x("(a-q)/q"),
                },
                Factor::PsBinomial(x("-a-1")),
            ],
            Body::Series(with_delta_factor(quad(
                &["a/2", "(a+1)/2", "1+a-b-c"],
                &["1+a-b", "1+a-c"],
            ))),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "eq-1e6",
        source_eq: "(1e6)",
        description: "Classical quadratic transformation of a well-poised 3F2(x)",
        mode: CheckMode::FormalPS,
        free_params: free(&["a", "b", "c"]),
        constraint_note: "none beyond series admissibility",
        derived: vec![],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(formal(&["a", "b", "c"], &["1+a-b", "1+a-c"])),
        ),
        rhs: side(
            vec![Factor::PsBinomial(x("-a"))],
            Body::Series(quad(&["a/2", "(a+1)/2", "1+a-b-c"], &["1+a-b", "1+a-c"])),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    v.push(IdentityEntry {
        id: "eq-2e6",
        source_eq: "(2e6)",
        description: "Companion quadratic transformation of a very-well-poised 4F3(x)",
        mode: CheckMode::FormalPS,
        free_params: free(&["a", "b", "c"]),
        constraint_note: "none beyond series admissibility",
        derived: vec![],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(formal(
                &["a", "1+a/2", "b", "c"],
                &["a/2", "1+a-b", "1+a-c"],
            )),
        ),
        rhs: side(
            vec![
                Factor::PsLinear {
                    c0: x("1"),
                    c1: x("1"),
                },
                Factor::PsBinomial(x("-a-1")),
            ],
            Body::Series(quad(
                &["(a+1)/2", "(a+2)/2", "1+a-b-c"],
                &["1+a-b", "1+a-c"],
            )),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy::default(),
    });

    // -- numeric-soft corollaries (nonterminating, argument ±1) ---------------

    v.push(IdentityEntry {
        id: "cor-3C6P1",
        source_eq: "(1e3C6P1), (2e3C6P1)",
        description: "Alternating 6F5(-1) against a unit-argument 4F3(1) with closed factor (2q-a)2^(-a-1)/q",
        mode: CheckMode::NumericSoft,
        free_params: free(&["a", "b", "c", "p", "q"]),
        constraint_note: "q != a/2; integer a keeps 2^(-a-1) rational; partial-sum check only. \
            Holds when the right-hand 4F3 terminates (e.g. integer a <= 0); on the \
            nonterminating domain the x -> -1 limiting step behind this identity drops \
            a surviving tail contribution of the x-dependent pair (about 2^(-a)*sqrt(pi)*C/q \
            with C the 4F3 term-asymptotics constant), and the soft check reports the \
            discrepancy: exact counterexample a=4, b=1, c=0, p=1, q=-2/3 gives LHS 1, RHS 4",
        derived: vec![dp("gamma", "p*(a-p)*(b+c-a)/(b*c-p*(a-p))", "(2e3C6P1)")],
        preconditions: vec![(x("2*q-a"), "q = a/2 excluded")],
        lhs: side(
            vec![],
            Body::Series(series(
                &["a", "b", "c", "a-p+1", "p+1", "q+1"],
                &["1+a-b", "1+a-c", "p", "a-p", "q"],
                "-1",
            )),
        ),
        rhs: side(
            vec![Factor::Closed(x("(2*q-a)*2^(-a-1)/q"))],
            Body::Series(series(
                &["a/2", "(a+1)/2", "a-b-c", "gamma+1"],
                &["1+a-b", "1+a-c", "gamma"],
                "1",
            )),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy {
            integer_params: vec!["a"],
            numerator_range: Some((-4, 4)),
            denominators: Some(vec![1, 2, 3]),
            min_value: vec![(
                x("a-2*b-2*c-1"),
                crate::exact::ratio(1, 2),
                "alternating-side excess margin",
            )],
        },
    });

    v.push(IdentityEntry {
        id: "eq-3e6",
        source_eq: "(3e6)",
        description: "Alternating well-poised 3F2(-1) against a unit-argument 3F2(1) with closed factor 2^(-a)",
        mode: CheckMode::NumericSoft,
        free_params: free(&["a", "b", "c"]),
        constraint_note: "integer a keeps 2^(-a) rational; partial-sum check only",
        derived: vec![],
        preconditions: vec![],
        lhs: side(
            vec![],
            Body::Series(series(&["a", "b", "c"], &["1+a-b", "1+a-c"], "-1")),
        ),
        rhs: side(
            vec![Factor::Closed(x("2^(-a)"))],
            Body::Series(series(
                &["a/2", "(a+1)/2", "1+a-b-c"],
                &["1+a-b", "1+a-c"],
                "1",
            )),
        ),
        flags: EntryFlags::default(),
        extra_lists: false,
        sampling: SamplingPolicy {
            integer_params: vec!["a"],
            numerator_range: Some((-4, 4)),
            denominators: Some(vec![1, 2, 3]),
            min_value: vec![(
                x("2+a-2*b-2*c"),
                crate::exact::ratio(1, 2),
                "alternating-side excess margin",
            )],
        },
    });

    v
}
