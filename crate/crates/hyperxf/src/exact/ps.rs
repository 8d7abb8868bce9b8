//! Truncated formal power series over the rationals.
//!
//! A `PowerSeries` of order `N` holds the coefficients of `x⁰..x^N`; all
//! binary operations require equal orders and produce a series of that
//! order. This is the carrier for the quadratic-transformation checks,
//! where series arguments like `-4x/(1-x)²` are assembled term by term.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::poch::{factorial, poch};
use crate::exact::rat::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// The zero series of the given truncation order.
    pub fn zero(order: u32) -> Self {
        PowerSeries {
            coeffs: vec![Rat::zero(); order as usize + 1],
        }
    }

    /// The multiplicative identity `1 + 0·x + ...`.
    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// The linear polynomial `c0 + c1·x`, padded to the given order.
    pub fn linear(c0: Rat, c1: Rat, order: u32) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c0;
        if order >= 1 {
            s.coeffs[1] = c1;
        }
        s
    }

    /// Build from explicit coefficients (`len = order + 1`, must be nonempty).
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs a constant term");
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, k: u32) -> &Rat {
        &self.coeffs[k as usize]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PowerSeries { coeffs })
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rat) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Ok(PowerSeries { coeffs })
    }

    /// Multiplicative inverse to the same order.
    ///
    /// Uses the recurrence `c_0 = 1/a_0`, `c_k = -(1/a_0) Σ_{j=1}^{k} a_j c_{k-j}`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_a0 = a0.recip().expect("nonzero");
        let n = self.coeffs.len();
        let mut out = vec![Rat::zero(); n];
        out[0] = inv_a0.clone();
        for k in 1..n {
            let mut s = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -(s * &inv_a0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Substitute a rational value for `x` (polynomial evaluation of the
    /// truncated series). Used by cross-checks of formal against exact sums.
    pub fn eval_at(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Binomial series `(1-x)^alpha` to the given order.
///
/// Coefficient of `x^k` is `(-alpha)_k / k!`; the sign convention makes
/// `(1-x)^{-1}` the all-ones series.
pub fn binomial_one_minus_x(alpha: &Rat, order: u32) -> PowerSeries {
    let neg_alpha = -alpha;
    let coeffs = (0..=order)
        .map(|k| poch(&neg_alpha, k) / factorial(k))
        .collect();
    PowerSeries { coeffs }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, ratio};

    fn ps(vals: &[i64]) -> PowerSeries {
        PowerSeries::from_coeffs(vals.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn mul_truncates() {
        // (1+x)(1-x) = 1 - x² at order 2
        let a = ps(&[1, 1, 0]);
        let b = ps(&[1, -1, 0]);
        assert_eq!(a.mul(&b).unwrap(), ps(&[1, 0, -1]));
        // x·x = x²
        assert_eq!(ps(&[0, 1, 0]).mul(&ps(&[0, 1, 0])).unwrap(), ps(&[0, 0, 1]));
    }

    #[test]
    fn mul_identity() {
        let a = PowerSeries::from_coeffs(vec![ratio(3, 7), rat(-2), ratio(1, 5)]);
        let one = PowerSeries::one(2);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = ps(&[1, 1]);
        let b = ps(&[1, 1, 1]);
        assert!(matches!(
            a.mul(&b),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        ));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn invert_known_series() {
        // 1/(1+x) = 1 - x + x² - x³
        assert_eq!(ps(&[1, 1, 0, 0]).invert().unwrap(), ps(&[1, -1, 1, -1]));
        // constant
        assert_eq!(
            ps(&[2, 0, 0]).invert().unwrap(),
            PowerSeries::from_coeffs(vec![ratio(1, 2), rat(0), rat(0)])
        );
        // geometric
        assert_eq!(ps(&[1, -1, 0]).invert().unwrap(), ps(&[1, 1, 1]));
        assert!(matches!(ps(&[0, 1]).invert(), Err(Error::NotInvertible)));
    }

    #[test]
    fn binomial_known_expansions() {
        // (1-x)^{-1}: geometric series
        assert_eq!(binomial_one_minus_x(&rat(-1), 3), ps(&[1, 1, 1, 1]));
        // (1-x)^{-2}
        assert_eq!(binomial_one_minus_x(&rat(-2), 3), ps(&[1, 2, 3, 4]));
        // (1-x)^{1/2}
        assert_eq!(
            binomial_one_minus_x(&ratio(1, 2), 2),
            PowerSeries::from_coeffs(vec![rat(1), ratio(-1, 2), ratio(-1, 8)])
        );
    }

    #[test]
    fn binomial_satisfies_its_ode_recurrence() {
        // independent route: (1-x)y' = -alpha·y forces
        // c_{k+1} = c_k (k - alpha)/(k+1)
        let alpha = ratio(-7, 3);
        let s = binomial_one_minus_x(&alpha, 8);
        let mut c = Rat::one();
        for k in 0..8u32 {
            assert_eq!(s.coeff(k), &c);
            c = c * (rat(k as i64) - &alpha) / rat(k as i64 + 1);
        }
    }

    #[test]
    fn eval_at_substitutes() {
        let s = ps(&[1, 2, 3]);
        assert_eq!(s.eval_at(&ratio(1, 2)), ratio(11, 4));
    }
}
