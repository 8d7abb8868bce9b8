//! The identity registry.
//!
//! Each [`IdentityEntry`] declares an identity's free parameters, its
//! derived-parameter chain (auxiliary formulas evaluated in order), both
//! sides as evaluable templates, and a check mode:
//!
//! - `ExactTerminating` — both sides are rationals; the residual must be
//!   exactly zero for every admissible environment and every `n`.
//! - `FormalPS` — both sides are truncated power series in `x`; the residual
//!   must be the zero series to the requested order.
//! - `NumericSoft` — nonterminating unit/alternating-argument corollaries;
//!   checked by the verifier's partial-sum driver with tail diagnostics.
//!
//! Templates are written in a small formula language (see [`Expr`]) so the
//! registry reads like the identities themselves.

mod entries;
mod expr;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial_one_minus_x, paired_poch, poch, rat, PowerSeries, Rat};
use crate::series::{Arg, Mode, SeriesSpec};

pub use expr::{Expr, ParamEnv};

// ---------------------------------------------------------------------------
// Entry structure
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    ExactTerminating,
    FormalPS,
    NumericSoft,
}

impl std::fmt::Display for CheckMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckMode::ExactTerminating => write!(f, "exact-terminating"),
            CheckMode::FormalPS => write!(f, "formal-ps"),
            CheckMode::NumericSoft => write!(f, "numeric-soft"),
        }
    }
}

/// A derived (auxiliary) parameter: evaluated in declaration order, each
/// formula may reference free parameters, `n`, and earlier derived names.
pub struct DerivedParam {
    pub name: &'static str,
    pub formula: Expr,
    pub formula_src: &'static str,
    pub eq_label: &'static str,
}

/// One multiplicative factor of a side's prefactor.
pub enum Factor {
    /// `(num)_n / (den)_n`
    PochRatio { num: Expr, den: Expr },
    /// `(base)_n`
    Poch(Expr),
    /// `paired(num_center, square)_n / paired(den_center, square)_n`
    PairedPochRatio {
        num_center: Expr,
        den_center: Expr,
        square: Expr,
    },
    /// `(-1)^n`
    SignPower,
    /// A plain scalar factor.
    Closed(Expr),
    /// `(1-x)^alpha` (formal mode only).
    PsBinomial(Expr),
    /// `c0 + c1·x` (formal mode only).
    PsLinear { c0: Expr, c1: Expr },
}

/// Argument slot of a series template.
pub enum ArgTemplate {
    Expr(Expr),
    FormalX,
    FormalQuad,
}

/// Per-term rational-function factor `(base + k·step)/base` where `base`
/// and `step` are linear polynomials in `x`. This carries the series whose
/// lower parameter depends on `x` (the `δ` of the general quadratic
/// transformation): `(δ+k)/δ = (q+(a-q)x + k(1+x))/(q+(a-q)x)`.
pub struct PerTermTemplate {
    pub base_c0: Expr,
    pub base_c1: Expr,
    pub step_c0: Expr,
    pub step_c1: Expr,
}

/// Template for one ₚFq series; instantiated against a `ParamEnv`.
pub struct SeriesTemplate {
    pub upper: Vec<Expr>,
    pub lower: Vec<Expr>,
    pub upper_pairs: Vec<(Expr, Expr)>,
    pub lower_pairs: Vec<(Expr, Expr)>,
    pub arg: ArgTemplate,
    /// For entries with extra parameter lists `a_1..a_r` / `b_1..b_s`:
    /// append each list element shifted by this expression (`0` on the
    /// identity's own sides, `m` inside a double sum).
    pub extra_shift: Option<Expr>,
    pub per_term: Option<PerTermTemplate>,
}

#[allow(clippy::large_enum_variant)]
pub enum Body {
    /// Pure closed form: the side is its prefactor.
    One,
    Series(SeriesTemplate),
    /// `Σ_m outer_term(m) · inner_series(m)`, the inner series terminating
    /// at `inner_n(m)`. The order of summation is the displayed one; the
    /// inner templates may reference the outer index `m`.
    DoubleSum {
        outer: SeriesTemplate,
        inner: SeriesTemplate,
        inner_n: Expr,
    },
}

pub struct SideSpec {
    pub prefactor: Vec<Factor>,
    pub body: Body,
}

#[derive(Clone, Copy, Default)]
pub struct EntryFlags {
    pub saalschutzian_lhs: bool,
    pub saalschutzian_rhs: bool,
    pub very_well_poised_lhs: bool,
    pub very_well_poised_rhs: bool,
}

/// Sampling policy knobs a particular entry needs beyond the verifier's
/// global configuration.
#[derive(Default)]
pub struct SamplingPolicy {
    /// Parameters drawn as integers (e.g. `a` for the soft entries, so the
    /// closed factors `2^{-a}` stay rational).
    pub integer_params: Vec<&'static str>,
    /// Narrower numerator range, when the entry needs small parameters.
    pub numerator_range: Option<(i64, i64)>,
    /// Denominator override.
    pub denominators: Option<Vec<u32>>,
    /// Sampler-only lower bounds `expr >= bound` (convergence margins for
    /// the soft entries; documented heuristics, not identity preconditions).
    pub min_value: Vec<(Expr, Rat, &'static str)>,
}

pub struct IdentityEntry {
    pub id: &'static str,
    /// Source equation label(s) for this identity.
    pub source_eq: &'static str,
    pub description: &'static str,
    pub mode: CheckMode,
    pub free_params: Vec<&'static str>,
    pub constraint_note: &'static str,
    pub derived: Vec<DerivedParam>,
    /// Entry preconditions that must evaluate nonzero (enforced by
    /// `instantiate`), e.g. `2q - a` for the alternating-argument corollary.
    pub preconditions: Vec<(Expr, &'static str)>,
    pub lhs: SideSpec,
    pub rhs: SideSpec,
    pub flags: EntryFlags,
    /// Whether the entry carries the extra parameter lists `a_i` / `b_i`.
    pub extra_lists: bool,
    pub sampling: SamplingPolicy,
}

/// Serializable entry metadata (the `list` surface).
#[derive(Clone, Debug, Serialize)]
pub struct EntrySummary {
    pub id: String,
    pub source_eq: String,
    pub mode: CheckMode,
    pub free_params: Vec<String>,
    pub constraints: String,
    pub description: String,
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

static REGISTRY: OnceLock<Vec<IdentityEntry>> = OnceLock::new();

/// All catalog entries, in stable order.
pub fn entries() -> &'static [IdentityEntry] {
    REGISTRY.get_or_init(entries::build)
}

/// Look up an entry by id.
pub fn find(id: &str) -> Result<&'static IdentityEntry> {
    entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Summaries of the full registry, in registry order.
pub fn list_entries() -> Vec<EntrySummary> {
    entries()
        .iter()
        .map(|e| EntrySummary {
            id: e.id.to_string(),
            source_eq: e.source_eq.to_string(),
            mode: e.mode,
            free_params: e.free_params.iter().map(|s| s.to_string()).collect(),
            constraints: e.constraint_note.to_string(),
            description: e.description.to_string(),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Instantiation
// ---------------------------------------------------------------------------

pub struct IdentityInstance {
    pub entry_id: String,
    /// The sampled environment extended with all derived parameters.
    pub env: ParamEnv,
    pub kind: InstanceKind,
}

pub enum InstanceKind {
    Exact {
        lhs: ExactSide,
        rhs: ExactSide,
    },
    Formal {
        order: u32,
        lhs: FormalSide,
        rhs: FormalSide,
    },
    Soft {
        lhs: SoftSide,
        rhs: SoftSide,
    },
}

pub struct ExactSide {
    pub prefactor: Rat,
    pub body: ExactBody,
}

pub enum ExactBody {
    One,
    Series(SeriesSpec),
    DoubleSum {
        outer: SeriesSpec,
        inners: Vec<SeriesSpec>,
    },
}

pub struct FormalSide {
    pub factors: Vec<PowerSeries>,
    pub spec: SeriesSpec,
    pub per_term: Option<PerTermInstance>,
}

pub struct PerTermInstance {
    pub base: PowerSeries,
    pub step: PowerSeries,
}

pub struct SoftSide {
    pub closed: Rat,
    pub spec: SeriesSpec,
}

/// Residual carrier for the exact and formal modes; numeric-soft residuals
/// are produced by the verifier's partial-sum driver.
pub enum Residual {
    Exact(Rat),
    Formal(PowerSeries),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Exact(r) => r.is_zero(),
            Residual::Formal(s) => s.is_zero(),
        }
    }
}

/// Instantiate entry `id` at `env`.
///
/// For exact entries `env.n` is the termination index; for formal entries
/// it is the truncation order; soft entries ignore it.
pub fn instantiate(id: &str, env: &ParamEnv) -> Result<IdentityInstance> {
    find(id)?.instantiate(env)
}

/// Residual (LHS - RHS) of an exact or formal instance.
pub fn residual(instance: &IdentityInstance) -> Result<Residual> {
    match &instance.kind {
        InstanceKind::Exact { lhs, rhs } => Ok(Residual::Exact(lhs.value()? - rhs.value()?)),
        InstanceKind::Formal { order, lhs, rhs } => Ok(Residual::Formal(
            lhs.series(*order)?.sub(&rhs.series(*order)?)?,
        )),
        InstanceKind::Soft { .. } => Err(Error::InvalidSpec(
            "numeric-soft residuals are computed by the verifier's partial-sum driver".into(),
        )),
    }
}

impl IdentityEntry {
    /// Evaluate the derived-parameter chain, in order, on top of `env`.
    pub fn extend_env(&self, env: &ParamEnv) -> Result<ParamEnv> {
        let mut ext = env.clone();
        for d in &self.derived {
            let value = d.formula.eval(&ext).map_err(|e| match e {
                Error::DivisionByZero { .. } | Error::NonIntegerExponent { .. } => {
                    Error::AuxDenominatorZero {
                        name: d.name.to_string(),
                        formula: format!("{} {}", d.formula_src, d.eq_label),
                    }
                }
                other => other,
            })?;
            ext.bind(d.name, value);
        }
        for (pred, desc) in &self.preconditions {
            if pred.eval(&ext)?.is_zero() {
                return Err(Error::ConstraintViolated(format!(
                    "{desc} (requires {pred} != 0)"
                )));
            }
        }
        Ok(ext)
    }

    pub fn instantiate(&self, env: &ParamEnv) -> Result<IdentityInstance> {
        let ext = self.extend_env(env)?;
        let kind = match self.mode {
            CheckMode::ExactTerminating => InstanceKind::Exact {
                lhs: instantiate_exact_side(&self.lhs, &ext)?,
                rhs: instantiate_exact_side(&self.rhs, &ext)?,
            },
            CheckMode::FormalPS => {
                let order = ext.n;
                InstanceKind::Formal {
                    order,
                    lhs: instantiate_formal_side(&self.lhs, &ext, order)?,
                    rhs: instantiate_formal_side(&self.rhs, &ext, order)?,
                }
            }
            CheckMode::NumericSoft => InstanceKind::Soft {
                lhs: instantiate_soft_side(&self.lhs, &ext)?,
                rhs: instantiate_soft_side(&self.rhs, &ext)?,
            },
        };
        Ok(IdentityInstance {
            entry_id: self.id.to_string(),
            env: ext,
            kind,
        })
    }
}

fn instantiate_series(template: &SeriesTemplate, env: &ParamEnv, mode: Mode) -> Result<SeriesSpec> {
    let mut upper: Vec<Rat> = template
        .upper
        .iter()
        .map(|e| e.eval(env))
        .collect::<Result<_>>()?;
    let mut lower: Vec<Rat> = template
        .lower
        .iter()
        .map(|e| e.eval(env))
        .collect::<Result<_>>()?;
    if let Some(shift) = &template.extra_shift {
        let s = shift.eval(env)?;
        for v in env.extra_list("a") {
            upper.push(v + &s);
        }
        for v in env.extra_list("b") {
            lower.push(v + &s);
        }
    }
    let upper_pairs = template
        .upper_pairs
        .iter()
        .map(|(c, g2)| Ok((c.eval(env)?, g2.eval(env)?)))
        .collect::<Result<_>>()?;
    let lower_pairs = template
        .lower_pairs
        .iter()
        .map(|(c, g2)| Ok((c.eval(env)?, g2.eval(env)?)))
        .collect::<Result<_>>()?;
    let argument = match &template.arg {
        ArgTemplate::Expr(e) => Arg::Value(e.eval(env)?),
        ArgTemplate::FormalX => Arg::FormalX,
        ArgTemplate::FormalQuad => Arg::FormalQuad,
    };
    let spec = SeriesSpec {
        upper,
        lower,
        upper_pairs,
        lower_pairs,
        argument,
        mode,
    };
    spec.validate()?;
    Ok(spec)
}

fn exact_factor_value(factor: &Factor, env: &ParamEnv) -> Result<Rat> {
    let n = env.n;
    match factor {
        Factor::PochRatio { num, den } => {
            let den_base = den.eval(env)?;
            let den_p = poch(&den_base, n);
            if den_p.is_zero() {
                return Err(Error::DegenerateClosedForm {
                    symbol: den.to_string(),
                    n,
                });
            }
            Ok(poch(&num.eval(env)?, n) / den_p)
        }
        Factor::Poch(base) => Ok(poch(&base.eval(env)?, n)),
        Factor::PairedPochRatio {
            num_center,
            den_center,
            square,
        } => {
            let sq = square.eval(env)?;
            let den_p = paired_poch(&den_center.eval(env)?, &sq, n);
            if den_p.is_zero() {
                return Err(Error::DegenerateClosedForm {
                    symbol: format!("pair({den_center}, {square})"),
                    n,
                });
            }
            Ok(paired_poch(&num_center.eval(env)?, &sq, n) / den_p)
        }
        Factor::SignPower => Ok(if n.is_multiple_of(2) { rat(1) } else { rat(-1) }),
        Factor::Closed(e) => e.eval(env),
        Factor::PsBinomial(_) | Factor::PsLinear { .. } => Err(Error::InvalidSpec(
            "power-series prefactor in an exact-mode side".into(),
        )),
    }
}

fn instantiate_exact_side(side: &SideSpec, env: &ParamEnv) -> Result<ExactSide> {
    let mut prefactor = Rat::one();
    for f in &side.prefactor {
        prefactor *= exact_factor_value(f, env)?;
    }
    let body = match &side.body {
        Body::One => ExactBody::One,
        Body::Series(t) => ExactBody::Series(instantiate_series(t, env, Mode::Terminating(env.n))?),
        Body::DoubleSum {
            outer,
            inner,
            inner_n,
        } => {
            let outer_spec = instantiate_series(outer, env, Mode::Terminating(env.n))?;
            let mut inners = Vec::with_capacity(env.n as usize + 1);
            for m in 0..=env.n {
                let mut env_m = env.clone();
                env_m.bind("m", Rat::from(m));
                let nm_val = inner_n.eval(&env_m)?;
                let nm = nm_val.to_u32().ok_or_else(|| {
                    Error::ConstraintViolated(format!(
                        "inner termination index {inner_n} = {nm_val} is not a non-negative integer"
                    ))
                })?;
                inners.push(instantiate_series(inner, &env_m, Mode::Terminating(nm))?);
            }
            ExactBody::DoubleSum {
                outer: outer_spec,
                inners,
            }
        }
    };
    Ok(ExactSide { prefactor, body })
}

impl ExactSide {
    pub fn value(&self) -> Result<Rat> {
        let body = match &self.body {
            ExactBody::One => Rat::one(),
            ExactBody::Series(s) => s.eval_terminating()?,
            ExactBody::DoubleSum { outer, inners } => {
                let mut acc = Rat::zero();
                for (m, inner) in inners.iter().enumerate() {
                    let t = outer.term(m as u32)?;
                    if !t.is_zero() {
                        acc += t * inner.eval_terminating()?;
                    }
                }
                acc
            }
        };
        Ok(&self.prefactor * body)
    }

    /// The plain series of this side, when it has one (structural checks).
    pub fn series(&self) -> Option<&SeriesSpec> {
        match &self.body {
            ExactBody::Series(s) => Some(s),
            _ => None,
        }
    }
}

fn instantiate_formal_side(side: &SideSpec, env: &ParamEnv, order: u32) -> Result<FormalSide> {
    let mut factors = Vec::new();
    for f in &side.prefactor {
        match f {
            Factor::PsBinomial(alpha) => {
                factors.push(binomial_one_minus_x(&alpha.eval(env)?, order));
            }
            Factor::PsLinear { c0, c1 } => {
                factors.push(PowerSeries::linear(c0.eval(env)?, c1.eval(env)?, order));
            }
            Factor::Closed(e) => {
                factors.push(PowerSeries::one(order).scale(&e.eval(env)?));
            }
            _ => {
                return Err(Error::InvalidSpec(
                    "non-series prefactor in a formal-mode side".into(),
                ))
            }
        }
    }
    let Body::Series(t) = &side.body else {
        return Err(Error::InvalidSpec(
            "formal-mode sides must be plain series".into(),
        ));
    };
    let spec = instantiate_series(t, env, Mode::Formal(order))?;
    let per_term = match &t.per_term {
        None => None,
        Some(pt) => {
            let base = PowerSeries::linear(pt.base_c0.eval(env)?, pt.base_c1.eval(env)?, order);
            if base.coeff(0).is_zero() {
                return Err(Error::NotInvertible);
            }
            let step = PowerSeries::linear(pt.step_c0.eval(env)?, pt.step_c1.eval(env)?, order);
            Some(PerTermInstance { base, step })
        }
    };
    Ok(FormalSide {
        factors,
        spec,
        per_term,
    })
}

impl FormalSide {
    pub fn series(&self, order: u32) -> Result<PowerSeries> {
        let mut acc = match &self.per_term {
            None => self.spec.eval_formal(order)?,
            Some(pt) => {
                // Σ_k coeff_k · (-4x)^k (1-x)^{-2k} · (base + k·step)/base
                if !matches!(self.spec.argument, Arg::FormalQuad) {
                    return Err(Error::InvalidSpec(
                        "per-term factors are defined for the quadratic argument".into(),
                    ));
                }
                let step_over_base = pt.step.mul(&pt.base.invert()?)?;
                let quad_step = PowerSeries::linear(Rat::zero(), rat(-4), order)
                    .mul(&binomial_one_minus_x(&rat(-2), order))?;
                let mut arg_power = PowerSeries::one(order);
                let mut acc = PowerSeries::zero(order);
                for k in 0..=order {
                    let c = self.spec.coefficient(k)?;
                    if !c.is_zero() {
                        let factor_k =
                            PowerSeries::one(order).add(&step_over_base.scale(&Rat::from(k)))?;
                        acc = acc.add(&arg_power.mul(&factor_k)?.scale(&c))?;
                    }
                    if k < order {
                        arg_power = arg_power.mul(&quad_step)?;
                    }
                }
                acc
            }
        };
        for f in &self.factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }
}

fn instantiate_soft_side(side: &SideSpec, env: &ParamEnv) -> Result<SoftSide> {
    let mut closed = Rat::one();
    for f in &side.prefactor {
        match f {
            Factor::Closed(e) => closed *= e.eval(env)?,
            _ => {
                return Err(Error::InvalidSpec(
                    "soft-mode prefactors must be closed scalars".into(),
                ))
            }
        }
    }
    let Body::Series(t) = &side.body else {
        return Err(Error::InvalidSpec(
            "soft-mode sides must be plain series".into(),
        ));
    };
    // mode is a placeholder here; the verifier drives the partial sums
    let spec = instantiate_series(t, env, Mode::Partial(1))?;
    check_lower_nonterminating(&spec)?;
    Ok(SoftSide { closed, spec })
}

/// For a nonterminating series, every plain lower parameter must avoid all
/// of `{0, -1, -2, ...}` and no lower pair may vanish at any shift.
fn check_lower_nonterminating(spec: &SeriesSpec) -> Result<()> {
    for l in &spec.lower {
        if l.is_nonpositive_integer() {
            return Err(Error::DegenerateLower {
                param: l.to_string(),
                k: (-l).to_u32().unwrap_or(0) + 1,
            });
        }
    }
    for (c, g2) in &spec.lower_pairs {
        if let Some(t) = g2.sqrt_exact() {
            for root in [&t - c, -&t - c] {
                if root.is_integer() && !root.is_negative() {
                    return Err(Error::DegenerateLower {
                        param: format!("pair({c}, {g2})"),
                        k: root.to_u32().unwrap_or(0) + 1,
                    });
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

/// Saalschützian: parametric excess exactly 1.
pub fn is_saalschutzian(spec: &SeriesSpec) -> bool {
    spec.excess() == rat(1)
}

/// Very-well-poised: with `a₁` the first upper parameter, the remaining
/// numerator parameters pair off with the denominator parameters so that
/// each pair sums to `1 + a₁`, and some numerator parameter equals
/// `1 + a₁/2`. Conjugate pairs match pairwise: an upper pair `(c, g2)`
/// matches a lower pair `(c', g2)` with `c + c' = 1 + a₁`.
pub fn is_very_well_poised(spec: &SeriesSpec) -> bool {
    if spec.upper.is_empty() || spec.num_upper() != spec.num_lower() + 1 {
        return false;
    }
    let a1 = &spec.upper[0];
    let target = rat(1) + a1;
    // multiset-match plain parameters
    let mut uppers: BTreeMap<&Rat, usize> = BTreeMap::new();
    for u in &spec.upper[1..] {
        *uppers.entry(u).or_insert(0) += 1;
    }
    for l in &spec.lower {
        let want = &target - l;
        match uppers.get_mut(&want) {
            Some(count) if *count > 0 => *count -= 1,
            _ => return false,
        }
    }
    if uppers.values().any(|&c| c != 0) {
        return false;
    }
    // match conjugate pairs by square
    if spec.upper_pairs.len() != spec.lower_pairs.len() {
        return false;
    }
    let mut lower_pairs: Vec<(Rat, Rat)> = spec.lower_pairs.clone();
    for (cu, g2u) in &spec.upper_pairs {
        let pos = lower_pairs
            .iter()
            .position(|(cl, g2l)| g2l == g2u && cu + cl == target);
        match pos {
            Some(i) => {
                lower_pairs.remove(i);
            }
            None => return false,
        }
    }
    // the distinguished second parameter 1 + a₁/2
    let a2 = rat(1) + a1 / rat(2);
    spec.upper[1..].contains(&a2)
}

// ---------------------------------------------------------------------------
// The Saalschützian ₆F₅ reflection
// ---------------------------------------------------------------------------

/// `F̃_n(a,b,c;d,e,f;p,q) = (d)_n (e)_n (f)_n (α)_n ·
///  ₆F₅(a,b,c,p+1,q+1,-n; d,e,f,p,q; 1)` with
/// `α = q(e-c-1)(f-c-1)/((c-q)(d-a-b-1))`, under the balance constraint
/// `d+e+f-a-b-c+n = 3`.
///
/// The environment must bind `a,b,c,d,e,p,q`; `f` is derived from the
/// constraint. Only `f` and `α` are computed here (not the reflection's
/// `γ`, `δ`), so `F̃` is evaluable on any environment where the series
/// itself is admissible. Errors are named degeneracies.
pub fn f_tilde(env: &ParamEnv) -> Result<Rat> {
    static F_ALPHA: OnceLock<(Expr, Expr)> = OnceLock::new();
    let (f_expr, alpha_expr) = F_ALPHA.get_or_init(|| {
        (
            Expr::parse("3+a+b+c-d-e-n"),
            Expr::parse("q*(e-c-1)*(f-c-1)/((c-q)*(d-a-b-1))"),
        )
    });
    let mut ext = env.clone();
    ext.bind("f", f_expr.eval(&ext)?);
    let alpha = alpha_expr.eval(&ext).map_err(|e| match e {
        Error::DivisionByZero { .. } => Error::AuxDenominatorZero {
            name: "alpha".into(),
            formula: "q*(e-c-1)*(f-c-1)/((c-q)*(d-a-b-1)) (3e12P2)".into(),
        },
        other => other,
    })?;
    let get = |s: &str| ext.get(s);
    let n = ext.n;
    let series = SeriesSpec::terminating(
        vec![
            get("a")?,
            get("b")?,
            get("c")?,
            get("p")? + rat(1),
            get("q")? + rat(1),
            -Rat::from(n),
        ],
        vec![get("d")?, get("e")?, get("f")?, get("p")?, get("q")?],
        rat(1),
        n,
    );
    let value = poch(&get("d")?, n)
        * poch(&get("e")?, n)
        * poch(&get("f")?, n)
        * poch(&alpha, n)
        * series.eval_terminating()?;
    Ok(value)
}

/// The reflection of a `prop-12P2` environment:
/// `(a,b,c;d,e,f;p,q) -> (d-a-1, d-b-1, c; d, 2+c-e-n, 2+c-f-n; γ, δ)`
/// with `γ`, `δ` the entry's derived parameters. The reflected environment
/// satisfies the balance constraint automatically.
pub fn reflect_12p2(env: &ParamEnv) -> Result<ParamEnv> {
    let entry = find("prop-12P2")?;
    let ext = entry.extend_env(env)?;
    let get = |s: &str| ext.get(s);
    let n = Rat::from(ext.n);
    let mut reflected = ParamEnv::empty(ext.n);
    reflected.bind("a", get("d")? - get("a")? - rat(1));
    reflected.bind("b", get("d")? - get("b")? - rat(1));
    reflected.bind("c", get("c")?);
    reflected.bind("d", get("d")?);
    reflected.bind("e", rat(2) + get("c")? - get("e")? - &n);
    // f is re-derived by the entry from the balance constraint; it equals
    // 2+c-f-n by construction
    reflected.bind("p", get("gamma")?);
    reflected.bind("q", get("delta")?);
    Ok(reflected)
}

#[cfg(test)]
mod tests;
