//! Rising factorials, plain and conjugate-paired.

use crate::exact::rat::Rat;

/// Rising factorial `(a)_k = a(a+1)···(a+k-1)`, with `(a)_0 = 1`.
///
/// Zero results are legal values: `(a)_k = 0` whenever `a` is a nonpositive
/// integer with `-a < k`.
pub fn poch(a: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut factor = a.clone();
    for _ in 0..k {
        if factor.is_zero() {
            return Rat::zero();
        }
        acc *= &factor;
        factor += Rat::one();
    }
    acc
}

/// Conjugate-pair rising factorial: `∏_{j=0}^{k-1} ((s+j)² - g2)`.
///
/// Equals `(s-t)_k (s+t)_k` whenever `g2 = t²` for rational `t`, but is
/// defined — and rational — for every rational `g2`, including negative
/// values where no rational (or real) square root exists. This is the only
/// mechanism by which `±γ` parameter pairs enter a series term; a square
/// root is never extracted.
pub fn paired_poch(s: &Rat, g2: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut center = s.clone();
    for _ in 0..k {
        acc *= &center * &center - g2;
        if acc.is_zero() {
            return Rat::zero();
        }
        center += Rat::one();
    }
    acc
}

/// `k!` as a `Rat`.
pub fn factorial(k: u32) -> Rat {
    poch(&Rat::one(), k)
}
