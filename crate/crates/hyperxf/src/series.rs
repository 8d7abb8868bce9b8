//! Concrete ₚFq series instances and their evaluation modes.
//!
//! A [`SeriesSpec`] is the series
//!
//! ```text
//!          ∞   ∏ᵢ (uᵢ)_k · ∏ⱼ ((cⱼ+0)²-g2ⱼ)···((cⱼ+k-1)²-g2ⱼ)
//! F(z) =   Σ   ─────────────────────────────────────────────── z^k
//!         k=0     k! · ∏ᵢ (lᵢ)_k · ∏ⱼ (paired lower factors)
//! ```
//!
//! with plain numerator parameters `upper`, plain denominator parameters
//! `lower`, and conjugate-pair parameters `(center, square)` on either side
//! contributing `(center-γ)_k (center+γ)_k` with `γ² = square`. Pairs are
//! first-class so that series whose `±γ` parameters have an irrational (or
//! imaginary) `γ` still evaluate in pure rational arithmetic.
//!
//! Evaluation modes: exact terminating sum, exact partial sum of the first
//! `M` terms, and formal power series in the argument variable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial_one_minus_x, factorial, paired_poch, poch, rat, PowerSeries, Rat};

/// Series argument: a rational value, the formal variable `x`, or the
/// quadratic-transformation argument `-4x/(1-x)²` (formal modes only).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Value(Rat),
    FormalX,
    FormalQuad,
}

/// Evaluation mode.
///
/// - `Terminating(n)`: some upper parameter is exactly `-n`; sum `k = 0..n`.
/// - `Partial(M)`: exact sum of the first `M` terms (tail diagnostics).
/// - `Formal(N)`: power series in `x` truncated at order `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Terminating(u32),
    Partial(u32),
    Formal(u32),
}

/// A concrete ₚFq instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub upper: Vec<Rat>,
    pub lower: Vec<Rat>,
    pub upper_pairs: Vec<(Rat, Rat)>,
    pub lower_pairs: Vec<(Rat, Rat)>,
    pub argument: Arg,
    pub mode: Mode,
}

impl SeriesSpec {
    /// Terminating spec with plain parameters only.
    pub fn terminating(upper: Vec<Rat>, lower: Vec<Rat>, z: Rat, n: u32) -> Self {
        SeriesSpec {
            upper,
            lower,
            upper_pairs: vec![],
            lower_pairs: vec![],
            argument: Arg::Value(z),
            mode: Mode::Terminating(n),
        }
    }

    /// Number of numerator parameters, counting each pair as two.
    pub fn num_upper(&self) -> usize {
        self.upper.len() + 2 * self.upper_pairs.len()
    }

    /// Number of denominator parameters, counting each pair as two.
    pub fn num_lower(&self) -> usize {
        self.lower.len() + 2 * self.lower_pairs.len()
    }

    /// Check the mode invariants.
    ///
    /// Terminating(n): some upper parameter equals `-n` exactly, and no
    /// denominator Pochhammer vanishes for `k <= n`. Partial(M): no
    /// denominator Pochhammer vanishes for `k < M`. Formal(N): same bound
    /// with `k <= N`, plus a formal argument.
    pub fn validate(&self) -> Result<()> {
        match self.mode {
            Mode::Terminating(n) => {
                // n = 0 is a single term regardless of the parameters
                let neg_n = -Rat::from(n);
                if n > 0 && !self.upper.contains(&neg_n) {
                    return Err(Error::InvalidSpec(format!(
                        "terminating mode requires an upper parameter equal to -{n}"
                    )));
                }
                if matches!(self.argument, Arg::FormalX | Arg::FormalQuad) {
                    return Err(Error::InvalidSpec(
                        "terminating mode requires a rational argument".into(),
                    ));
                }
                self.check_lower_nonzero(n)
            }
            Mode::Partial(m) => {
                if m == 0 {
                    return Err(Error::InvalidSpec("partial mode requires M >= 1".into()));
                }
                if matches!(self.argument, Arg::FormalX | Arg::FormalQuad) {
                    return Err(Error::InvalidSpec(
                        "partial mode requires a rational argument".into(),
                    ));
                }
                self.check_lower_nonzero(m - 1)
            }
            Mode::Formal(order) => {
                if matches!(self.argument, Arg::Value(_)) {
                    return Err(Error::InvalidSpec(
                        "formal mode requires a formal argument".into(),
                    ));
                }
                self.check_lower_nonzero(order)
            }
        }
    }

    /// No plain lower parameter in `{0, -1, ..., -(k_max-1)}` and no lower
    /// pair factor vanishing at shifts `0..k_max`.
    fn check_lower_nonzero(&self, k_max: u32) -> Result<()> {
        for l in &self.lower {
            if l.is_nonpositive_integer() {
                if let Some(v) = (-l).to_u32() {
                    if v < k_max {
                        return Err(Error::DegenerateLower {
                            param: l.to_string(),
                            k: v + 1,
                        });
                    }
                }
            }
        }
        for (center, square) in &self.lower_pairs {
            for j in 0..k_max {
                let shifted = center + Rat::from(j);
                if &shifted * &shifted == *square {
                    return Err(Error::DegenerateLower {
                        param: format!("pair({center}, {square})"),
                        k: j + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// The `k`-th term, including the argument power `z^k`.
    pub fn term(&self, k: u32) -> Result<Rat> {
        let z = match &self.argument {
            Arg::Value(z) => z,
            _ => {
                return Err(Error::InvalidSpec(
                    "term() requires a rational argument".into(),
                ))
            }
        };
        Ok(self.coefficient(k)? * z.pow(k as i64)?)
    }

    /// The `k`-th coefficient: the term without the `z^k` factor.
    pub fn coefficient(&self, k: u32) -> Result<Rat> {
        let mut num = Rat::one();
        for u in &self.upper {
            num *= poch(u, k);
        }
        for (c, g2) in &self.upper_pairs {
            num *= paired_poch(c, g2, k);
        }
        let mut den = factorial(k);
        for l in &self.lower {
            let p = poch(l, k);
            if p.is_zero() {
                return Err(Error::DegenerateLower {
                    param: l.to_string(),
                    k,
                });
            }
            den *= p;
        }
        for (c, g2) in &self.lower_pairs {
            let p = paired_poch(c, g2, k);
            if p.is_zero() {
                return Err(Error::DegenerateLower {
                    param: format!("pair({c}, {g2})"),
                    k,
                });
            }
            den *= p;
        }
        Ok(num / den)
    }

    /// Exact sum of a terminating series, `k = 0..n`.
    pub fn eval_terminating(&self) -> Result<Rat> {
        let n = match self.mode {
            Mode::Terminating(n) => n,
            _ => {
                return Err(Error::InvalidSpec(
                    "eval_terminating requires terminating mode".into(),
                ))
            }
        };
        self.validate()?;
        let mut stream = TermStream::new(self)?;
        let mut acc = Rat::zero();
        for _ in 0..=n {
            match stream.next_term()? {
                Some(t) => acc += t,
                // stream ends early only when a numerator factor hit zero;
                // the remaining terms are exactly zero
                None => break,
            }
        }
        Ok(acc)
    }

    /// Exact sum of the first `M` terms plus the last term as a tail proxy.
    ///
    /// Works on any spec with a rational argument whose denominator
    /// Pochhammers stay nonzero for `k < M` (terminating series padded
    /// with zero terms are fine).
    pub fn eval_partial(&self, m: u32) -> Result<(Rat, Rat)> {
        if m == 0 {
            return Err(Error::InvalidSpec("partial sum needs M >= 1".into()));
        }
        let mut stream = TermStream::new(self)?;
        let mut acc = Rat::zero();
        let mut last = Rat::zero();
        for _ in 0..m {
            match stream.next_term()? {
                Some(t) => {
                    last = t.clone();
                    acc += t;
                }
                None => {
                    last = Rat::zero();
                    break;
                }
            }
        }
        Ok((acc, last))
    }

    /// Formal power series in `x` to order `N`.
    ///
    /// With argument `x`, term `k` contributes `coefficient_k · x^k`. With
    /// argument `-4x/(1-x)²`, term `k` contributes
    /// `coefficient_k · (-4)^k x^k (1-x)^{-2k}`, which has `x`-order >= k,
    /// so `k` ranges over `0..N` in both cases.
    pub fn eval_formal(&self, order: u32) -> Result<PowerSeries> {
        self.validate()?;
        match self.argument {
            Arg::FormalX => {
                let mut coeffs = Vec::with_capacity(order as usize + 1);
                for k in 0..=order {
                    coeffs.push(self.coefficient(k)?);
                }
                Ok(PowerSeries::from_coeffs(coeffs))
            }
            Arg::FormalQuad => {
                // accumulate u_k = (-4x)^k (1-x)^{-2k} truncated at `order`
                let step = PowerSeries::linear(Rat::zero(), rat(-4), order)
                    .mul(&binomial_one_minus_x(&rat(-2), order))?;
                let mut arg_power = PowerSeries::one(order);
                let mut acc = PowerSeries::zero(order);
                for k in 0..=order {
                    let c = self.coefficient(k)?;
                    if !c.is_zero() {
                        acc = acc.add(&arg_power.scale(&c))?;
                    }
                    if k < order {
                        arg_power = arg_power.mul(&step)?;
                    }
                }
                Ok(acc)
            }
            Arg::Value(_) => Err(Error::InvalidSpec(
                "eval_formal requires a formal argument".into(),
            )),
        }
    }

    /// Parametric excess `ω = Σ lower - Σ upper`; each pair `(c, g2)`
    /// contributes `2c` to its side (the `±γ` parts cancel).
    pub fn excess(&self) -> Rat {
        let mut w = Rat::zero();
        for l in &self.lower {
            w += l;
        }
        for (c, _) in &self.lower_pairs {
            w += c + c;
        }
        for u in &self.upper {
            w -= u;
        }
        for (c, _) in &self.upper_pairs {
            w -= &(c + c);
        }
        w
    }
}

/// Incremental term generator: `t_0 = 1` and
/// `t_{k+1} = t_k · ∏(u+k) ∏((c+k)²-g2) · z / ((k+1) ∏(l+k) ∏(...))`.
///
/// Yields `None` once a numerator factor has hit zero (every later term is
/// exactly zero); reports a named error when a denominator factor vanishes.
pub struct TermStream<'a> {
    spec: &'a SeriesSpec,
    z: Rat,
    k: u32,
    current: Option<Rat>,
}

impl<'a> TermStream<'a> {
    pub fn new(spec: &'a SeriesSpec) -> Result<Self> {
        let z = match &spec.argument {
            Arg::Value(z) => z.clone(),
            _ => {
                return Err(Error::InvalidSpec(
                    "term stream requires a rational argument".into(),
                ))
            }
        };
        Ok(TermStream {
            spec,
            z,
            k: 0,
            current: Some(Rat::one()),
        })
    }

    /// Index of the term the next call will return.
    pub fn next_index(&self) -> u32 {
        self.k
    }

    pub fn next_term(&mut self) -> Result<Option<Rat>> {
        let Some(t) = self.current.take() else {
            return Ok(None);
        };
        let k = self.k;
        let kr = Rat::from(k);
        let mut ratio_num = self.z.clone();
        for u in &self.spec.upper {
            ratio_num *= u + &kr;
        }
        for (c, g2) in &self.spec.upper_pairs {
            let s = c + &kr;
            ratio_num *= &s * &s - g2;
        }
        self.current = if ratio_num.is_zero() {
            None
        } else {
            let mut ratio_den = Rat::from(k + 1);
            for l in &self.spec.lower {
                let f = l + &kr;
                if f.is_zero() {
                    return Err(Error::DegenerateLower {
                        param: l.to_string(),
                        k: k + 1,
                    });
                }
                ratio_den *= f;
            }
            for (c, g2) in &self.spec.lower_pairs {
                let s = c + &kr;
                let f = &s * &s - g2;
                if f.is_zero() {
                    return Err(Error::DegenerateLower {
                        param: format!("pair({c}, {g2})"),
                        k: k + 1,
                    });
                }
                ratio_den *= f;
            }
            Some(&t * ratio_num / ratio_den)
        };
        self.k += 1;
        Ok(Some(t))
    }
}

// ---------------------------------------------------------------------------
// JSON representation
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SeriesSpecJson {
    #[serde(default)]
    upper: Vec<Rat>,
    #[serde(default)]
    lower: Vec<Rat>,
    #[serde(default)]
    upper_pairs: Vec<(Rat, Rat)>,
    #[serde(default)]
    lower_pairs: Vec<(Rat, Rat)>,
    arg: String,
    mode: Mode,
}

impl Serialize for SeriesSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let arg = match &self.argument {
            Arg::Value(z) => z.to_string(),
            Arg::FormalX => "x".to_string(),
            Arg::FormalQuad => "-4x/(1-x)^2".to_string(),
        };
        SeriesSpecJson {
            upper: self.upper.clone(),
            lower: self.lower.clone(),
            upper_pairs: self.upper_pairs.clone(),
            lower_pairs: self.lower_pairs.clone(),
            arg,
            mode: self.mode,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SeriesSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = SeriesSpecJson::deserialize(de)?;
        let argument = match raw.arg.as_str() {
            "x" => Arg::FormalX,
            "-4x/(1-x)^2" => Arg::FormalQuad,
            s => Arg::Value(s.parse().map_err(serde::de::Error::custom)?),
        };
        Ok(SeriesSpec {
            upper: raw.upper,
            lower: raw.lower,
            upper_pairs: raw.upper_pairs,
            lower_pairs: raw.lower_pairs,
            argument,
            mode: raw.mode,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn f21_example() -> SeriesSpec {
        // ₂F₁(-2, 1; 1; 1/3)
        SeriesSpec::terminating(vec![rat(-2), rat(1)], vec![rat(1)], ratio(1, 3), 2)
    }

    #[test]
    fn term_k0_is_one() {
        let spec = f21_example();
        assert_eq!(spec.term(0).unwrap(), rat(1));
    }

    #[test]
    fn term_values() {
        let spec = f21_example();
        // (-2)(1)(1/3) / (1·1) = -2/3
        assert_eq!(spec.term(1).unwrap(), ratio(-2, 3));
        // pair in the numerator: (-1)·(1-4)·1 = 3
        let spec = SeriesSpec {
            upper: vec![rat(-1)],
            lower: vec![],
            upper_pairs: vec![(rat(1), rat(4))],
            lower_pairs: vec![],
            argument: Arg::Value(rat(1)),
            mode: Mode::Terminating(1),
        };
        assert_eq!(spec.term(1).unwrap(), rat(3));
    }

    #[test]
    fn terminating_binomial_oracle() {
        // ₂F₁(-2,1;1;z) = (1-z)² by the binomial theorem
        assert_eq!(f21_example().eval_terminating().unwrap(), ratio(4, 9));
        // ₁F₀(-3;;1) = (1-1)³ = 0
        let spec = SeriesSpec::terminating(vec![rat(-3)], vec![], rat(1), 3);
        assert_eq!(spec.eval_terminating().unwrap(), rat(0));
        // n = 0: single term
        let spec = SeriesSpec::terminating(vec![rat(0), ratio(7, 2)], vec![ratio(5, 3)], rat(9), 0);
        assert_eq!(spec.eval_terminating().unwrap(), rat(1));
    }

    #[test]
    fn terminating_requires_minus_n_upper() {
        let spec = SeriesSpec::terminating(vec![rat(-3)], vec![], rat(1), 2);
        assert!(matches!(
            spec.eval_terminating(),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn degenerate_lower_is_named() {
        // lower parameter -1 vanishes at k = 2
        let spec = SeriesSpec::terminating(vec![rat(-3), rat(2)], vec![rat(-1)], rat(1), 3);
        match spec.eval_terminating() {
            Err(Error::DegenerateLower { param, k }) => {
                assert_eq!(param, "-1");
                assert_eq!(k, 2);
            }
            other => panic!("expected degenerate lower, got {other:?}"),
        }
    }

    #[test]
    fn partial_sums() {
        // M = 1 on anything is (1, 1)
        let spec =
            SeriesSpec::terminating(vec![rat(-5), ratio(1, 2)], vec![ratio(3, 4)], rat(2), 5);
        assert_eq!(spec.eval_partial(1).unwrap(), (rat(1), rat(1)));
        // geometric ₁F₀(1;;1/2), M = 4 -> 15/8 with last term 1/8
        let geo = SeriesSpec {
            upper: vec![rat(1)],
            lower: vec![],
            upper_pairs: vec![],
            lower_pairs: vec![],
            argument: Arg::Value(ratio(1, 2)),
            mode: Mode::Partial(4),
        };
        assert_eq!(geo.eval_partial(4).unwrap(), (ratio(15, 8), ratio(1, 8)));
        // terminating series padded with zero terms
        assert_eq!(
            f21_example().eval_partial(10).unwrap(),
            (ratio(4, 9), rat(0))
        );
    }

    #[test]
    fn formal_plain_argument() {
        // ₁F₀(a;;x) to order 2: [1, a, a(a+1)/2]
        let a = ratio(5, 3);
        let spec = SeriesSpec {
            upper: vec![a.clone()],
            lower: vec![],
            upper_pairs: vec![],
            lower_pairs: vec![],
            argument: Arg::FormalX,
            mode: Mode::Formal(2),
        };
        let ps = spec.eval_formal(2).unwrap();
        assert_eq!(ps.coeff(0), &rat(1));
        assert_eq!(ps.coeff(1), &a);
        assert_eq!(ps.coeff(2), &(&a * (&a + rat(1)) / rat(2)));
        // N = 0
        let spec = SeriesSpec {
            mode: Mode::Formal(0),
            ..spec
        };
        assert_eq!(spec.eval_formal(0).unwrap(), PowerSeries::one(0));
    }

    #[test]
    fn formal_quadratic_argument_single_term() {
        // upper contains -1: series is 1 + c₁·(-4)(x + 2x²) at order 2
        let spec = SeriesSpec {
            upper: vec![rat(-1), ratio(1, 2)],
            lower: vec![ratio(4, 3)],
            upper_pairs: vec![],
            lower_pairs: vec![],
            argument: Arg::FormalQuad,
            mode: Mode::Formal(2),
        };
        let c1 = spec.coefficient(1).unwrap();
        let ps = spec.eval_formal(2).unwrap();
        assert_eq!(ps.coeff(0), &rat(1));
        assert_eq!(ps.coeff(1), &(&c1 * rat(-4)));
        assert_eq!(ps.coeff(2), &(&c1 * rat(-8)));
    }

    #[test]
    fn excess_definition() {
        let spec = SeriesSpec::terminating(
            vec![rat(2), rat(3), rat(-4)],
            vec![rat(7), ratio(1, 2)],
            rat(1),
            4,
        );
        // c+d-a-b+n with a=2,b=3,n=4: 7 + 1/2 - 2 - 3 + 4
        assert_eq!(spec.excess(), ratio(13, 2));
        // pairs contribute twice their center
        let spec = SeriesSpec {
            upper: vec![],
            lower: vec![rat(2)],
            upper_pairs: vec![(rat(1), rat(5))],
            lower_pairs: vec![],
            argument: Arg::Value(rat(1)),
            mode: Mode::Terminating(0),
        };
        assert_eq!(spec.excess(), rat(0));
    }

    #[test]
    fn json_round_trip() {
        let spec = SeriesSpec {
            upper: vec![rat(-2), rat(1)],
            lower: vec![rat(1)],
            upper_pairs: vec![(ratio(1, 2), ratio(-3, 4))],
            lower_pairs: vec![],
            argument: Arg::Value(ratio(1, 3)),
            mode: Mode::Terminating(2),
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"terminating\":2"));
        let back: SeriesSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);

        let parsed: SeriesSpec = serde_json::from_str(
            r#"{"upper":["-2","1"],"lower":["1"],"arg":"1/3","mode":{"terminating":2}}"#,
        )
        .unwrap();
        assert_eq!(parsed.eval_terminating().unwrap(), ratio(4, 9));
    }
}
