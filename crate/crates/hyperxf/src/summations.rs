//! Closed-form evaluations of the summation theorems and the classical
//! formulas they specialize to.
//!
//! Each closed form validates its own preconditions and returns named
//! errors instead of poisoned values, so the verifier's rejection sampling
//! can read the degeneracy reason off the error. Every closed form here is
//! paired with a direct-summation oracle in the tests: the left-hand series
//! is summed term by term and must match exactly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{poch, rat, Rat};
use crate::series::SeriesSpec;

/// A closed-form value together with the auxiliary parameters that were
/// computed on the way (e.g. the `q` of the extended Chu–Vandermonde sum).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub value: Rat,
    pub aux: BTreeMap<String, Rat>,
}

impl ClosedForm {
    fn new(value: Rat, aux: &[(&str, Rat)]) -> Self {
        ClosedForm {
            value,
            aux: aux
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }
}

/// `(base)_n`, required nonzero (it sits in a denominator).
fn poch_nonzero(base: &Rat, n: u32, symbol: &str) -> Result<Rat> {
    let p = poch(base, n);
    if p.is_zero() {
        return Err(Error::DegenerateClosedForm {
            symbol: symbol.to_string(),
            n,
        });
    }
    Ok(p)
}

fn nonzero_divisor(value: Rat, name: &str, formula: &str) -> Result<Rat> {
    if value.is_zero() {
        return Err(Error::AuxDenominatorZero {
            name: name.to_string(),
            formula: formula.to_string(),
        });
    }
    Ok(value)
}

/// Checks that `(base)_k != 0` for all `k <= n`, i.e. that `base` is an
/// admissible lower parameter of a series terminating at `n`.
fn lower_admissible(base: &Rat, n: u32, symbol: &str) -> Result<()> {
    poch_nonzero(base, n, symbol).map(|_| ())
}

/// Σ of a ₃F₂(1) with a unit-shifted parameter pair:
///
/// ```text
/// ₃F₂(a, p+1, -n; b, p; 1) = (b-a-1)_n (q+1)_n / ((b)_n (q)_n),
/// q = p(b-a-1)/(p-a)
/// ```
pub fn sum_ext_chu_vandermonde(a: &Rat, b: &Rat, p: &Rat, n: u32) -> Result<ClosedForm> {
    let q = p * (b - a - rat(1)) / nonzero_divisor(p - a, "q", "p(b-a-1)/(p-a)")?;
    lower_admissible(p, n, "p")?;
    let den = poch_nonzero(b, n, "b")? * poch_nonzero(&q, n, "q")?;
    let value = poch(&(b - a - rat(1)), n) * poch(&(&q + rat(1)), n) / den;
    Ok(ClosedForm::new(value, &[("q", q)]))
}

/// Σ of a Saalschützian ₄F₃(1) with a unit-shifted parameter pair:
///
/// ```text
/// ₄F₃(a, b, p+1, -n; c, p, 2+a+b-c-n; 1)
///   = (c-a-1)_n (c-b-1)_n (q+1)_n / ((c)_n (c-a-b-1)_n (q)_n),
/// q = p(c-a-1)(c-b-1) / (ab + p(c-a-b-1))
/// ```
pub fn sum_rakha_rathie(a: &Rat, b: &Rat, c: &Rat, p: &Rat, n: u32) -> Result<ClosedForm> {
    let q_den = nonzero_divisor(
        a * b + p * (c - a - b - rat(1)),
        "q",
        "p(c-a-1)(c-b-1)/(ab+p(c-a-b-1))",
    )?;
    let q = p * (c - a - rat(1)) * (c - b - rat(1)) / q_den;
    lower_admissible(p, n, "p")?;
    let den = poch_nonzero(c, n, "c")?
        * poch_nonzero(&(c - a - b - rat(1)), n, "c-a-b-1")?
        * poch_nonzero(&q, n, "q")?;
    let value =
        poch(&(c - a - rat(1)), n) * poch(&(c - b - rat(1)), n) * poch(&(&q + rat(1)), n) / den;
    Ok(ClosedForm::new(value, &[("q", q)]))
}

/// First rewrite of [`sum_rakha_rathie`]: sums
///
/// ```text
/// ₄F₃(a-b-c, γ₁+1, a+n, -n; 1+a-b, 1+a-c, γ₁; 1)
///   = (b)_n (c)_n (a-p+1)_n (p+1)_n / ((1+a-b)_n (1+a-c)_n (p)_n (a-p)_n),
/// γ₁ = p(a-p)(b+c-a) / (bc - p(a-p))
/// ```
pub fn sum_rr_form_a(a: &Rat, b: &Rat, c: &Rat, p: &Rat, n: u32) -> Result<ClosedForm> {
    let g_den = nonzero_divisor(b * c - p * (a - p), "gamma1", "p(a-p)(b+c-a)/(bc-p(a-p))")?;
    let gamma1 = p * (a - p) * (b + c - a) / g_den;
    let den = poch_nonzero(&(rat(1) + a - b), n, "1+a-b")?
        * poch_nonzero(&(rat(1) + a - c), n, "1+a-c")?
        * poch_nonzero(p, n, "p")?
        * poch_nonzero(&(a - p), n, "a-p")?;
    let value = poch(b, n) * poch(c, n) * poch(&(a - p + rat(1)), n) * poch(&(p + rat(1)), n) / den;
    Ok(ClosedForm::new(value, &[("gamma1", gamma1)]))
}

/// Second rewrite of [`sum_rakha_rathie`]: sums
///
/// ```text
/// ₄F₃(c-a-1, c-b-1, γ₂+1, -n; c, γ₂, c-a-b-n; 1)
///   = (a)_n (b)_n (p+1)_n / ((c)_n (1+a+b-c)_n (p)_n),
/// γ₂ = p(c-a-1)(c-b-1) / (ab + p(c-a-b-1))
/// ```
pub fn sum_rr_form_b(a: &Rat, b: &Rat, c: &Rat, p: &Rat, n: u32) -> Result<ClosedForm> {
    let g_den = nonzero_divisor(
        a * b + p * (c - a - b - rat(1)),
        "gamma2",
        "p(c-a-1)(c-b-1)/(ab+p(c-a-b-1))",
    )?;
    let gamma2 = p * (c - a - rat(1)) * (c - b - rat(1)) / g_den;
    let den = poch_nonzero(c, n, "c")?
        * poch_nonzero(&(rat(1) + a + b - c), n, "1+a+b-c")?
        * poch_nonzero(p, n, "p")?;
    let value = poch(a, n) * poch(b, n) * poch(&(p + rat(1)), n) / den;
    Ok(ClosedForm::new(value, &[("gamma2", gamma2)]))
}

/// Σ of a very-well-poised ₉F₈(1) extending Dougall's theorem:
///
/// ```text
/// ₉F₈(a, 1+a/2, b, c, d, 2a-b-c-d+n, a-p+1, p+1, -n;
///     a/2, 1+a-b, 1+a-c, 1+a-d, 1+b+c+d-a-n, p, a-p, 1+a+n; 1)
///   = (1+a)_n (a-b-c)_n (a-b-d)_n (a-c-d)_n (α+1)_n
///     / ((1+a-b)_n (1+a-c)_n (1+a-d)_n (a-b-c-d)_n (α)_n)
/// α = p(a-p)(a-b-c)(a-b-d)(a-c-d) / ((2a-b-c-d+n)(bcd + p(a-p)(a-b-c-d)))
/// ```
pub fn sum_svf_9f8(a: &Rat, b: &Rat, c: &Rat, d: &Rat, p: &Rat, n: u32) -> Result<ClosedForm> {
    let alpha_den = nonzero_divisor(
        (rat(2) * a - b - c - d + Rat::from(n)) * (b * c * d + p * (a - p) * (a - b - c - d)),
        "alpha",
        "p(a-p)(a-b-c)(a-b-d)(a-c-d)/((2a-b-c-d+n)(bcd+p(a-p)(a-b-c-d)))",
    )?;
    let alpha = p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d) / alpha_den;
    let den = poch_nonzero(&(rat(1) + a - b), n, "1+a-b")?
        * poch_nonzero(&(rat(1) + a - c), n, "1+a-c")?
        * poch_nonzero(&(rat(1) + a - d), n, "1+a-d")?
        * poch_nonzero(&(a - b - c - d), n, "a-b-c-d")?
        * poch_nonzero(&alpha, n, "alpha")?;
    let value = poch(&(rat(1) + a), n)
        * poch(&(a - b - c), n)
        * poch(&(a - b - d), n)
        * poch(&(a - c - d), n)
        * poch(&(&alpha + rat(1)), n)
        / den;
    Ok(ClosedForm::new(value, &[("alpha", alpha)]))
}

/// Conjugate-pair rewrite of [`sum_svf_9f8`]: the left side carries the
/// parameter pair `λ/2 ± γ` with only `γ²` rational; see
/// [`svf_form_b_lhs`] for the series it sums.
///
/// ```text
/// value = (1+λ)_n (b)_n (c)_n (d)_n (a-p+1)_n (p+1)_n
///         / ((a-λ)_n (1+a-b)_n (1+a-c)_n (1+a-d)_n (p)_n (a-p)_n)
/// λ = 2a-b-c-d,   γ² = λ²/4 - p(a-p)(a-b-c)(a-b-d)(a-c-d)/(bcd+p(a-p)(a-b-c-d))
/// ```
pub fn sum_svf_form_b(a: &Rat, b: &Rat, c: &Rat, d: &Rat, p: &Rat, n: u32) -> Result<ClosedForm> {
    let lambda = rat(2) * a - b - c - d;
    let g_den = nonzero_divisor(
        b * c * d + p * (a - p) * (a - b - c - d),
        "gamma^2",
        "lambda^2/4 - p(a-p)(a-b-c)(a-b-d)(a-c-d)/(bcd+p(a-p)(a-b-c-d))",
    )?;
    let gamma_sq =
        &lambda * &lambda / rat(4) - p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d) / g_den;
    let den = poch_nonzero(&(a - &lambda), n, "a-lambda")?
        * poch_nonzero(&(rat(1) + a - b), n, "1+a-b")?
        * poch_nonzero(&(rat(1) + a - c), n, "1+a-c")?
        * poch_nonzero(&(rat(1) + a - d), n, "1+a-d")?
        * poch_nonzero(p, n, "p")?
        * poch_nonzero(&(a - p), n, "a-p")?;
    let value = poch(&(rat(1) + &lambda), n)
        * poch(b, n)
        * poch(c, n)
        * poch(d, n)
        * poch(&(a - p + rat(1)), n)
        * poch(&(p + rat(1)), n)
        / den;
    Ok(ClosedForm::new(
        value,
        &[("lambda", lambda), ("gamma_sq", gamma_sq)],
    ))
}

// ---------------------------------------------------------------------------
// Classical baselines (independent implementations, not limits)
// ---------------------------------------------------------------------------

/// Chu–Vandermonde: `₂F₁(a, -n; b; 1) = (b-a)_n / (b)_n`.
pub fn chu_vandermonde(a: &Rat, b: &Rat, n: u32) -> Result<Rat> {
    Ok(poch(&(b - a), n) / poch_nonzero(b, n, "b")?)
}

/// Pfaff–Saalschütz: `₃F₂(a, b, -n; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)`.
pub fn pfaff_saalschutz(a: &Rat, b: &Rat, c: &Rat, n: u32) -> Result<Rat> {
    let den = poch_nonzero(c, n, "c")? * poch_nonzero(&(c - a - b), n, "c-a-b")?;
    Ok(poch(&(c - a), n) * poch(&(c - b), n) / den)
}

/// Dougall: the 2-balanced very-well-poised ₇F₆(1) sum,
/// `(1+a)_n (1+a-b-c)_n (1+a-b-d)_n (1+a-c-d)_n /
///  ((1+a-b)_n (1+a-c)_n (1+a-d)_n (1+a-b-c-d)_n)`.
pub fn dougall(a: &Rat, b: &Rat, c: &Rat, d: &Rat, n: u32) -> Result<Rat> {
    let den = poch_nonzero(&(rat(1) + a - b), n, "1+a-b")?
        * poch_nonzero(&(rat(1) + a - c), n, "1+a-c")?
        * poch_nonzero(&(rat(1) + a - d), n, "1+a-d")?
        * poch_nonzero(&(rat(1) + a - b - c - d), n, "1+a-b-c-d")?;
    Ok(poch(&(rat(1) + a - b - c), n)
        * poch(&(rat(1) + a - b - d), n)
        * poch(&(rat(1) + a - c - d), n)
        * poch(&(rat(1) + a), n)
        / den)
}

// ---------------------------------------------------------------------------
// Left-hand series builders (the direct-summation side of each theorem)
// ---------------------------------------------------------------------------

/// LHS of [`sum_ext_chu_vandermonde`].
pub fn ext_chu_vandermonde_lhs(a: &Rat, b: &Rat, p: &Rat, n: u32) -> SeriesSpec {
    SeriesSpec::terminating(
        vec![a.clone(), p + rat(1), -Rat::from(n)],
        vec![b.clone(), p.clone()],
        rat(1),
        n,
    )
}

/// LHS of [`sum_rakha_rathie`].
pub fn rakha_rathie_lhs(a: &Rat, b: &Rat, c: &Rat, p: &Rat, n: u32) -> SeriesSpec {
    SeriesSpec::terminating(
        vec![a.clone(), b.clone(), p + rat(1), -Rat::from(n)],
        vec![c.clone(), p.clone(), rat(2) + a + b - c - Rat::from(n)],
        rat(1),
        n,
    )
}

/// LHS of [`sum_rr_form_a`]; `gamma1` comes from the closed form's aux map.
pub fn rr_form_a_lhs(a: &Rat, b: &Rat, c: &Rat, gamma1: &Rat, n: u32) -> SeriesSpec {
    SeriesSpec::terminating(
        vec![a - b - c, gamma1 + rat(1), a + Rat::from(n), -Rat::from(n)],
        vec![rat(1) + a - b, rat(1) + a - c, gamma1.clone()],
        rat(1),
        n,
    )
}

/// LHS of [`sum_rr_form_b`]; `gamma2` comes from the closed form's aux map.
pub fn rr_form_b_lhs(a: &Rat, b: &Rat, c: &Rat, gamma2: &Rat, n: u32) -> SeriesSpec {
    SeriesSpec::terminating(
        vec![
            c - a - rat(1),
            c - b - rat(1),
            gamma2 + rat(1),
            -Rat::from(n),
        ],
        vec![c.clone(), gamma2.clone(), c - a - b - Rat::from(n)],
        rat(1),
        n,
    )
}

/// LHS of [`sum_svf_9f8`].
pub fn svf_9f8_lhs(a: &Rat, b: &Rat, c: &Rat, d: &Rat, p: &Rat, n: u32) -> SeriesSpec {
    let nn = Rat::from(n);
    SeriesSpec::terminating(
        vec![
            a.clone(),
            rat(1) + a / rat(2),
            b.clone(),
            c.clone(),
            d.clone(),
            rat(2) * a - b - c - d + &nn,
            a - p + rat(1),
            p + rat(1),
            -nn.clone(),
        ],
        vec![
            a / rat(2),
            rat(1) + a - b,
            rat(1) + a - c,
            rat(1) + a - d,
            rat(1) + b + c + d - a - &nn,
            p.clone(),
            a - p,
            rat(1) + a + &nn,
        ],
        rat(1),
        n,
    )
}

/// LHS of [`sum_svf_form_b`]: the conjugate-pair form, built with
/// `(λ/2+1 ± γ)` upper and `(λ/2 ± γ)` lower pairs carrying `γ²`.
pub fn svf_form_b_lhs(
    a: &Rat,
    b: &Rat,
    c: &Rat,
    d: &Rat,
    lambda: &Rat,
    gamma_sq: &Rat,
    n: u32,
) -> SeriesSpec {
    let nn = Rat::from(n);
    let half_lambda = lambda / rat(2);
    SeriesSpec {
        upper: vec![
            lambda.clone(),
            rat(1) + &half_lambda,
            lambda + b - a,
            lambda + c - a,
            lambda + d - a,
            a + &nn,
            -nn.clone(),
        ],
        lower: vec![
            half_lambda.clone(),
            rat(1) + a - b,
            rat(1) + a - c,
            rat(1) + a - d,
            rat(1) + lambda - a - &nn,
            rat(1) + lambda + &nn,
        ],
        upper_pairs: vec![(&half_lambda + rat(1), gamma_sq.clone())],
        lower_pairs: vec![(half_lambda, gamma_sq.clone())],
        argument: crate::series::Arg::Value(rat(1)),
        mode: crate::series::Mode::Terminating(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn ext_chu_vandermonde_example() {
        // a=1, b=3, p=2, n=1: q = 2, value = 1/2
        let cf = sum_ext_chu_vandermonde(&rat(1), &rat(3), &rat(2), 1).unwrap();
        assert_eq!(cf.aux["q"], rat(2));
        assert_eq!(cf.value, ratio(1, 2));
        // direct summation of ₃F₂(1,3,-1;3,2;1) = 1 - 1/2
        let lhs = ext_chu_vandermonde_lhs(&rat(1), &rat(3), &rat(2), 1);
        assert_eq!(lhs.eval_terminating().unwrap(), ratio(1, 2));
    }

    #[test]
    fn ext_chu_vandermonde_edges() {
        // n = 0
        let cf = sum_ext_chu_vandermonde(&ratio(1, 2), &rat(4), &ratio(-3, 5), 0).unwrap();
        assert_eq!(cf.value, rat(1));
        // a vanishing numerator Pochhammer gives 0 when q stays admissible:
        // b - a - 1 = -1, n = 2 has (b-a-1)_2 = 0 with q = -5/3
        let cf = sum_ext_chu_vandermonde(&rat(2), &rat(2), &rat(5), 2).unwrap();
        assert_eq!(cf.value, rat(0));
        let lhs = ext_chu_vandermonde_lhs(&rat(2), &rat(2), &rat(5), 2);
        assert_eq!(lhs.eval_terminating().unwrap(), rat(0));
        // b - a - 1 = 0 forces q = 0, where the closed form is 0/0: the
        // named degeneracy, not a value (the series itself sums to 1/10
        // at a=2, b=3, p=5, n=2, so returning 0 would be wrong)
        assert!(matches!(
            sum_ext_chu_vandermonde(&rat(2), &rat(3), &rat(5), 2),
            Err(Error::DegenerateClosedForm { .. })
        ));
        let lhs = ext_chu_vandermonde_lhs(&rat(2), &rat(3), &rat(5), 2);
        assert_eq!(lhs.eval_terminating().unwrap(), ratio(1, 10));
        // p = a is the named aux degeneracy
        assert!(matches!(
            sum_ext_chu_vandermonde(&rat(2), &rat(3), &rat(2), 1),
            Err(Error::AuxDenominatorZero { .. })
        ));
    }

    #[test]
    fn rakha_rathie_example() {
        // a=1/2, b=1, c=3, p=1/3, n=1: q = 3/4, value = 7/3
        let cf = sum_rakha_rathie(&ratio(1, 2), &rat(1), &rat(3), &ratio(1, 3), 1).unwrap();
        assert_eq!(cf.aux["q"], ratio(3, 4));
        assert_eq!(cf.value, ratio(7, 3));
        // direct summation of the ₄F₃ gives 1 + 4/3
        let lhs = rakha_rathie_lhs(&ratio(1, 2), &rat(1), &rat(3), &ratio(1, 3), 1);
        assert_eq!(lhs.eval_terminating().unwrap(), ratio(7, 3));
    }

    #[test]
    fn rakha_rathie_specializes_to_pfaff_saalschutz() {
        // p = b telescopes the (b, p) pair: equals Pfaff–Saalschütz at b+1
        let (a, b, c) = (ratio(1, 2), ratio(2, 3), rat(4));
        for n in 0..5 {
            let cf = sum_rakha_rathie(&a, &b, &c, &b, n).unwrap();
            let ps = pfaff_saalschutz(&a, &(&b + rat(1)), &c, n).unwrap();
            assert_eq!(cf.value, ps, "n = {n}");
        }
    }

    #[test]
    fn svf_9f8_specializes_to_dougall() {
        // p = b telescopes the (b, p) pair: equals Dougall at b+1
        let (a, b, c, d) = (rat(5), ratio(1, 2), ratio(1, 3), ratio(-3, 2));
        for n in 0..5 {
            let cf = sum_svf_9f8(&a, &b, &c, &d, &b, n).unwrap();
            let dg = dougall(&a, &(&b + rat(1)), &c, &d, n).unwrap();
            assert_eq!(cf.value, dg, "n = {n}");
        }
    }

    #[test]
    fn form_b_gamma2_equals_rakha_rathie_q() {
        let (a, b, c, p) = (ratio(1, 2), rat(1), rat(3), ratio(1, 3));
        let q = sum_rakha_rathie(&a, &b, &c, &p, 2).unwrap().aux["q"].clone();
        let g2 = sum_rr_form_b(&a, &b, &c, &p, 2).unwrap().aux["gamma2"].clone();
        assert_eq!(q, g2);
    }

    #[test]
    fn direct_summation_oracles() {
        // a handful of fixed admissible points; the verifier covers the
        // randomized sweep
        let (a, b, c, d, p) = (rat(4), ratio(1, 2), ratio(-1, 3), ratio(3, 2), ratio(5, 2));
        for n in 0..4u32 {
            let cf = sum_rr_form_a(&a, &b, &c, &p, n).unwrap();
            let lhs = rr_form_a_lhs(&a, &b, &c, &cf.aux["gamma1"], n);
            assert_eq!(lhs.eval_terminating().unwrap(), cf.value, "form A, n = {n}");

            let cf = sum_rr_form_b(&a, &b, &c, &p, n).unwrap();
            let lhs = rr_form_b_lhs(&a, &b, &c, &cf.aux["gamma2"], n);
            assert_eq!(lhs.eval_terminating().unwrap(), cf.value, "form B, n = {n}");

            let cf = sum_svf_9f8(&a, &b, &c, &d, &p, n).unwrap();
            let lhs = svf_9f8_lhs(&a, &b, &c, &d, &p, n);
            assert_eq!(lhs.eval_terminating().unwrap(), cf.value, "9F8, n = {n}");

            let cf = sum_svf_form_b(&a, &b, &c, &d, &p, n).unwrap();
            let lhs = svf_form_b_lhs(&a, &b, &c, &d, &cf.aux["lambda"], &cf.aux["gamma_sq"], n);
            assert_eq!(
                lhs.eval_terminating().unwrap(),
                cf.value,
                "form B 9F8, n = {n}"
            );
        }
    }

    #[test]
    fn form_b_pair_splits_when_gamma_sq_is_a_square() {
        // when γ² = t², the paired series equals the split series with λ/2 ± t
        let (a, b, c, d) = (rat(4), ratio(1, 2), ratio(-1, 3), ratio(3, 2));
        // search a p that makes gamma_sq a perfect square
        let mut tested = false;
        for pn in -12i64..=12 {
            for pd in 1i64..=4 {
                if pn == 0 {
                    continue;
                }
                let p = ratio(pn, pd);
                let Ok(cf) = sum_svf_form_b(&a, &b, &c, &d, &p, 2) else {
                    continue;
                };
                let g2 = &cf.aux["gamma_sq"];
                let Some(t) = g2.sqrt_exact() else { continue };
                let lambda = &cf.aux["lambda"];
                let paired = svf_form_b_lhs(&a, &b, &c, &d, lambda, g2, 2);
                let mut split = paired.clone();
                split.upper_pairs.clear();
                split.lower_pairs.clear();
                let half = lambda / rat(2);
                split.upper.push(&half + rat(1) - &t);
                split.upper.push(&half + rat(1) + &t);
                split.lower.push(&half - &t);
                split.lower.push(&half + &t);
                assert_eq!(
                    paired.eval_terminating().unwrap(),
                    split.eval_terminating().unwrap()
                );
                tested = true;
            }
        }
        assert!(tested, "no perfect-square gamma_sq found in the probe grid");
    }
}
