//! Real polylogarithm on `[-1, 1]` and the real part beyond it.

use super::tables::bernoulli_f64;
use super::types::{RealScalar, Sign};
use super::zeta::{eta_int, zeta_int};
use crate::error::{Error, Result};

/// Below this `ln|x|` the defining power series is summed directly.
const DIRECT_BELOW: f64 = -1.0;

/// `ζ(s)` at integer `s`, including `ζ(0)` and the trivial zeros; `s = 1`
/// never occurs in the logarithmic expansion.
fn zeta_signed(s: i64) -> f64 {
    match s {
        0 => -0.5,
        s if s >= 2 => zeta_int(s as u32),
        s => {
            let m = (-s) as usize;
            -bernoulli_f64(m + 1) / (m + 1) as f64
        }
    }
}

fn eta_signed(s: i64) -> f64 {
    if s >= 0 {
        eta_int(s as u32)
    } else {
        let m = (-s) as usize;
        (2f64.powi(m as i32 + 1) - 1.0) * bernoulli_f64(m + 1) / (m + 1) as f64
    }
}

fn direct_series(p: u32, z: f64) -> RealScalar {
    let mut sum = 0.0;
    let mut abs = 0.0;
    let mut zk = 1.0;
    for k in 1..10_000u32 {
        zk *= z;
        let t = zk / (k as f64).powi(p as i32);
        sum += t;
        abs += t.abs();
        if t.abs() <= 1e-18 * abs {
            break;
        }
    }
    RealScalar::new(sum, 4.0 * f64::EPSILON * abs)
}

/// `Li_p(e^μ)` through the expansion in powers of `μ`, valid for `|μ| < 2π`.
fn log_series_plus(p: u32, mu: f64) -> RealScalar {
    let p = p as i64;
    let mut sum = 0.0;
    let mut abs = 0.0;
    let mut coef = 1.0; // μ^k / k!
    for k in 0..(p + 60).min(120) {
        if k > 0 {
            coef *= mu / k as f64;
        }
        let t = if k == p - 1 {
            let harmonic: f64 = (1..p).map(|j| 1.0 / j as f64).sum();
            if mu == 0.0 {
                0.0
            } else {
                coef * (harmonic - (-mu).ln())
            }
        } else {
            coef * zeta_signed(p - k)
        };
        sum += t;
        abs += t.abs();
        if k > p && t != 0.0 && t.abs() <= 1e-18 * abs {
            break;
        }
    }
    RealScalar::new(sum, 4.0 * f64::EPSILON * abs)
}

/// `Li_p(-e^μ) = -Σ η(p-k) μ^k / k!`, valid for `|μ| < π`.
fn log_series_minus(p: u32, mu: f64) -> RealScalar {
    let p = p as i64;
    let mut sum = 0.0;
    let mut abs = 0.0;
    let mut coef = 1.0;
    for k in 0..(p + 60).min(120) {
        if k > 0 {
            coef *= mu / k as f64;
        }
        let t = -coef * eta_signed(p - k);
        sum += t;
        abs += t.abs();
        if k > p && t != 0.0 && t.abs() <= 1e-18 * abs {
            break;
        }
    }
    RealScalar::new(sum, 4.0 * f64::EPSILON * abs)
}

/// `Li_p(c·e^μ)` for `μ <= 0`; `μ = -∞` gives 0.
///
/// The caller excludes the pole `(p, c, μ) = (1, +1, 0)`.
pub(crate) fn li_exp(p: u32, c: Sign, mu: f64) -> RealScalar {
    debug_assert!(p >= 1 && mu <= 0.0);
    if mu == f64::NEG_INFINITY {
        return RealScalar::zero();
    }
    if p == 1 {
        let v = match c {
            Sign::Plus => -(-mu.exp_m1()).ln(),
            Sign::Minus => -mu.exp().ln_1p(),
        };
        return RealScalar::new(v, 2.0 * f64::EPSILON * v.abs());
    }
    if mu < DIRECT_BELOW {
        return direct_series(p, c.f() * mu.exp());
    }
    match c {
        Sign::Plus => log_series_plus(p, mu),
        Sign::Minus => log_series_minus(p, mu),
    }
}

/// `Φ(c, 2k, 1)` including the continuation values at `k = 0`.
fn phi_even_at_one(c: Sign, two_k: u32) -> f64 {
    match (c, two_k) {
        (Sign::Plus, 0) => -0.5,
        (Sign::Minus, 0) => 0.5,
        (Sign::Plus, s) => zeta_int(s),
        (Sign::Minus, s) => eta_int(s),
    }
}

/// `2c Σ_{k=0}^{⌊p/2⌋} μ^{p-2k}/(p-2k)! Φ(c, 2k, 1)`, the right-hand side
/// of the inversion relation between `Li_p(cx)` and `Li_p(c/x)`, `μ = ln x`.
pub(crate) fn inversion_rhs(p: u32, c: Sign, mu: f64) -> RealScalar {
    let mut sum = 0.0;
    let mut abs = 0.0;
    for k in 0..=p / 2 {
        let e = p - 2 * k;
        let fact: f64 = (1..=e).map(|j| j as f64).product();
        let t = mu.powi(e as i32) / fact * phi_even_at_one(c, 2 * k);
        sum += t;
        abs += t.abs();
    }
    RealScalar::new(2.0 * c.f() * sum, 8.0 * f64::EPSILON * abs)
}

/// `Re Li_p(c·e^{-μ})` for `μ < 0`, i.e. the argument `c/x` with `x = e^μ`.
pub(crate) fn re_li_recip_mu(p: u32, c: Sign, mu: f64) -> RealScalar {
    let rhs = inversion_rhs(p, c, mu);
    let direct = li_exp(p, c, mu);
    (rhs - direct).scale(Sign::parity(p as i64).f())
}

pub fn polylog(p: u32, x: f64) -> Result<RealScalar> {
    if p == 0 {
        return Err(Error::Parameter("polylog order must be >= 1".into()));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("polylog argument {x} outside [-1, 1]")));
    }
    if p == 1 && x == 1.0 {
        return Err(Error::Divergent("Li_1(1) is the harmonic series".into()));
    }
    if x == 0.0 {
        return Ok(RealScalar::zero());
    }
    let c = if x > 0.0 { Sign::Plus } else { Sign::Minus };
    Ok(li_exp(p, c, x.abs().ln()))
}

/// `Re Li_p(c/x)` for `x ∈ (0, 1)`.
pub fn polylog_re_recip(p: u32, c: Sign, x: f64) -> Result<RealScalar> {
    if p == 0 {
        return Err(Error::Parameter("polylog order must be >= 1".into()));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("polylog_re_recip needs x in (0, 1), got {x}")));
    }
    Ok(re_li_recip_mu(p, c, x.ln()))
}
