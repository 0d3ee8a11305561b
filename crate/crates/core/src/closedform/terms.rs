//! Building blocks shared by the theorem and corollary evaluators.

use crate::specfun::{phi_fp, reduced_fp, theta, ConstKind, Rational, RealScalar, Sign};

/// `Φ(c, q, num/den)`, finite part at `(1, 1, ·)`, continuation values at `q = 0`.
pub(crate) fn phi(c: Sign, q: u32, num: u64, den: u64) -> RealScalar {
    let alpha = Rational::new(num, den).expect("nonzero denominator");
    phi_fp(c, q, alpha)
}

/// `Φ(c, q, 1)`.
pub(crate) fn phi1(c: Sign, q: u32) -> RealScalar {
    phi(c, q, 1, 1)
}

/// `Φ(c, q, 1/2)`.
pub(crate) fn phi_half(c: Sign, q: u32) -> RealScalar {
    phi(c, q, 1, 2)
}

/// `Θ(c, k, s, r)`; arguments inside the double sums always satisfy `0 < s/r < 1`.
pub(crate) fn th(c: Sign, k: u32, s: u64, r: u64) -> RealScalar {
    theta(c, k, s, r).expect("Θ arguments in range")
}

pub(crate) fn zeta(s: u32) -> RealScalar {
    reduced_fp(ConstKind::Zeta, s)
}

pub(crate) fn eta(s: u32) -> RealScalar {
    reduced_fp(ConstKind::Eta, s)
}

pub(crate) fn lambda(s: u32) -> RealScalar {
    reduced_fp(ConstKind::Lambda, s)
}

pub(crate) fn beta(s: u32) -> RealScalar {
    reduced_fp(ConstKind::Beta, s)
}

/// `(-1)^k` as a float.
pub(crate) fn m1(k: i64) -> f64 {
    Sign::parity(k).f()
}

/// `x^e` for a signed integer base and exponent.
pub(crate) fn powi(x: f64, e: i64) -> f64 {
    x.powi(e as i32)
}

/// `s^k` for a sign.
pub(crate) fn sp(s: Sign, k: i64) -> f64 {
    s.pow(k).f()
}
