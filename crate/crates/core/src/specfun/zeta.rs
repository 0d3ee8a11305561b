//! Hurwitz zeta, digamma and the Lerch transcendent at `c = ±1`.

use std::f64::consts::{LN_2, PI};
use std::sync::OnceLock;

use super::tables::bernoulli_f64;
use super::types::{LerchPoint, Rational, RealScalar, Sign};
use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Shift length and Bernoulli order of the Euler-Maclaurin evaluation.
const EM_SHIFT: usize = 20;
const EM_ORDER: usize = 8;

fn factorial_f64(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `ζ(q, x) = Σ_{n≥0} (n + x)^{-q}` for integer `q ≥ 2` and real `x > 0`.
pub(crate) fn hurwitz_f64(q: u32, x: f64) -> RealScalar {
    hurwitz_with(q, x, EM_SHIFT)
}

pub(crate) fn hurwitz_with(q: u32, x: f64, shift: usize) -> RealScalar {
    debug_assert!(q >= 2 && x > 0.0);
    let s = q as f64;
    let mut head = 0.0;
    let mut abs = 0.0;
    for k in (0..shift).rev() {
        let t = (k as f64 + x).powi(-(q as i32));
        head += t;
        abs += t;
    }
    let w = shift as f64 + x;
    let wq = w.powi(-(q as i32));
    let mut tail = w * wq / (s - 1.0) + 0.5 * wq;
    // rising factorial (q)_{2j-1} and w^{-q-2j+1}
    let mut rising = s;
    let mut wpow = wq / w;
    let mut last = 0.0;
    for j in 1..=EM_ORDER {
        let term = bernoulli_f64(2 * j) / factorial_f64(2 * j) * rising * wpow;
        tail += term;
        last = term;
        rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
        wpow /= w * w;
    }
    let value = head + tail;
    let err = last.abs() + 4.0 * f64::EPSILON * (abs + tail.abs());
    RealScalar::new(value, err)
}

/// `ψ(x)` for real `x > 0`.
pub(crate) fn digamma_f64(x: f64) -> RealScalar {
    debug_assert!(x > 0.0);
    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut series = 0.0;
    let mut pw = inv2;
    let mut last = 0.0;
    for j in 1..=8 {
        let term = bernoulli_f64(2 * j) / (2 * j) as f64 * pw;
        series += term;
        last = term;
        pw *= inv2;
    }
    let asym = y.ln() - 0.5 / y - series;
    let value = asym - shift;
    let err = last.abs() + 4.0 * f64::EPSILON * (asym.abs() + shift.abs());
    RealScalar::new(value, err)
}

fn check_hurwitz_order(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::Domain(format!(
            "Hurwitz zeta diverges for q = {q} (need q >= 2)"
        )));
    }
    Ok(())
}

pub fn hurwitz_zeta(q: u32, alpha: Rational) -> Result<RealScalar> {
    check_hurwitz_order(q)?;
    Ok(hurwitz_f64(q, alpha.value()))
}

pub fn digamma(alpha: Rational) -> RealScalar {
    digamma_f64(alpha.value())
}

/// `Φ(c, q, x)` for real `x > 0`.
///
/// With `finite_part` set, the pole at `(c, q) = (1, 1)` is replaced by the
/// constant term of its Laurent expansion, `-ψ(x)`; callers use this only
/// where the divergent pieces cancel identically.
pub(crate) fn phi_f64(c: Sign, q: u32, x: f64, finite_part: bool) -> Result<RealScalar> {
    match (c, q) {
        (_, 0) => {
            if x != 1.0 {
                return Err(Error::Domain(format!("Φ(c, 0, {x}) is only defined at 1")));
            }
            // analytic continuation: ζ(0) = -1/2, η(0) = 1/2
            Ok(RealScalar::exact(if c.is_plus() { -0.5 } else { 0.5 }))
        }
        (Sign::Plus, 1) => {
            if finite_part {
                Ok(-digamma_f64(x))
            } else {
                Err(Error::Divergent("Φ(1, 1, α) is the harmonic series".into()))
            }
        }
        (Sign::Plus, q) => Ok(hurwitz_f64(q, x)),
        (Sign::Minus, 1) => {
            // q -> 1 limit of the two-Hurwitz decomposition
            let d = digamma_f64(0.5 * (x + 1.0)) - digamma_f64(0.5 * x);
            Ok(d.scale(0.5))
        }
        (Sign::Minus, q) => {
            let a = hurwitz_f64(q, 0.5 * x).scale(2f64.powi(1 - q as i32));
            Ok(a - hurwitz_f64(q, x))
        }
    }
}

pub fn lerch_phi(pt: LerchPoint) -> Result<RealScalar> {
    let pt = LerchPoint::new(pt.c, pt.q, pt.alpha)?;
    phi_f64(pt.c, pt.q, pt.alpha.value(), false)
}

/// Lerch transcendent with the finite-part convention at `(1, 1, α)`.
pub(crate) fn phi_fp(c: Sign, q: u32, alpha: Rational) -> RealScalar {
    phi_f64(c, q, alpha.value(), true).expect("Φ arguments validated by caller")
}

/// `Θ(c, q, s, r) = Φ(c, q, s/r) + c(-1)^q Φ(c, q, (r-s)/r)`, with the
/// cotangent value at `(c, q) = (1, 1)`.
pub fn theta(c: Sign, q: u32, s: u64, r: u64) -> Result<RealScalar> {
    if q == 0 {
        return Err(Error::Domain("Θ needs q >= 1".into()));
    }
    if s == 0 || r == 0 || s >= r {
        return Err(Error::Domain(format!("Θ needs 0 < s/r < 1, got {s}/{r}")));
    }
    let alpha = Rational::new(s, r)?;
    if c.is_plus() && q == 1 {
        let t = PI * alpha.value();
        let v = PI * t.cos() / t.sin();
        return Ok(RealScalar::new(v, 4.0 * f64::EPSILON * v.abs()));
    }
    let first = phi_f64(c, q, alpha.value(), false)?;
    let second = phi_f64(c, q, alpha.complement()?.value(), false)?;
    let sign = (c * Sign::parity(q as i64)).f();
    Ok(first + second.scale(sign))
}

/// Dirichlet-type constants reached from `Φ` at `α ∈ {1, 1/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstKind {
    Zeta,
    Eta,
    Lambda,
    Beta,
}

impl ConstKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstKind::Zeta => "zeta",
            ConstKind::Eta => "eta",
            ConstKind::Lambda => "lambda",
            ConstKind::Beta => "beta",
        }
    }
}

pub fn reduced_constant(kind: ConstKind, s: u32) -> Result<RealScalar> {
    let ok = match kind {
        ConstKind::Zeta | ConstKind::Lambda => s >= 2,
        ConstKind::Eta => true,
        ConstKind::Beta => s >= 1,
    };
    if !ok {
        return Err(Error::Divergent(format!("{}({s}) is outside its domain", kind.name())));
    }
    Ok(reduced_fp(kind, s))
}

/// Like [`reduced_constant`] but also returns the continuation value
/// `ζ(0) = -1/2` and the finite parts of `ζ(1)` and `λ(1)`.
pub(crate) fn reduced_fp(kind: ConstKind, s: u32) -> RealScalar {
    let half = Rational::half();
    let one = Rational::one();
    match kind {
        ConstKind::Zeta => phi_fp(Sign::Plus, s, one),
        ConstKind::Eta => phi_fp(Sign::Minus, s, one),
        ConstKind::Lambda => phi_fp(Sign::Plus, s, half).scale(2f64.powi(-(s as i32))),
        ConstKind::Beta => phi_fp(Sign::Minus, s, half).scale(2f64.powi(-(s as i32))),
    }
}

/// `ζ(s)` for `2 <= s < 128` from a lazily built table.
pub(crate) fn zeta_int(s: u32) -> f64 {
    static T: OnceLock<Vec<f64>> = OnceLock::new();
    T.get_or_init(|| {
        (0..128u32)
            .map(|s| if s < 2 { f64::NAN } else { hurwitz_f64(s, 1.0).value })
            .collect()
    })[s as usize]
}

/// `η(s)` for `0 <= s < 128`.
pub(crate) fn eta_int(s: u32) -> f64 {
    static T: OnceLock<Vec<f64>> = OnceLock::new();
    T.get_or_init(|| {
        (0..128u32)
            .map(|s| match s {
                0 => 0.5,
                1 => LN_2,
                _ => -(2f64.powi(1 - s as i32) - 1.0) * zeta_int(s),
            })
            .collect()
    })[s as usize]
}
