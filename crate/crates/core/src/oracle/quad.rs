//! Tanh-sinh quadrature on `(0, 1)`.
//!
//! Integrands receive both `x` and `1 - x`; near either endpoint the small
//! one is computed directly from the transform instead of by subtraction.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::specfun::RealScalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub max_level: u32,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { abs_tol: 1e-11, max_level: 12 }
    }
}

impl QuadConfig {
    pub fn new(abs_tol: f64, max_level: u32) -> Result<QuadConfig> {
        if !(abs_tol >= 1e-14) {
            return Err(Error::Parameter(format!("quadrature abs_tol {abs_tol:e} < 1e-14")));
        }
        if max_level > 16 {
            return Err(Error::Parameter(format!("quadrature max_level {max_level} > 16")));
        }
        Ok(QuadConfig { abs_tol, max_level })
    }

    /// Ten times tighter, one level deeper; used for self-consistency reruns.
    pub fn tightened(self) -> QuadConfig {
        QuadConfig {
            abs_tol: (self.abs_tol * 0.1).max(1e-14),
            max_level: (self.max_level + 1).min(16),
        }
    }
}

/// Transform half-range: `v = (π/2) sinh t <= 300` keeps `e^{-2v}` normal.
const V_MAX: f64 = 300.0;
/// Levels below this are never accepted as converged.
const MIN_LEVEL: u32 = 4;

/// Node at `t`: returns `(x, 1 - x, dx/dt)`.
fn node(t: f64) -> (f64, f64, f64) {
    let v = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * v.abs()).exp();
    let small = e / (1.0 + e);
    let large = 1.0 / (1.0 + e);
    let w = FRAC_PI_2 * t.cosh() * 2.0 * e / ((1.0 + e) * (1.0 + e));
    if t >= 0.0 {
        (large, small, w)
    } else {
        (small, large, w)
    }
}

/// `∫₀¹ f(x, 1-x) dx`.
pub fn integrate_unit<F>(f: F, cfg: &QuadConfig) -> Result<RealScalar>
where
    F: Fn(f64, f64) -> f64,
{
    let t_max = (V_MAX / FRAC_PI_2).asinh();
    let eval = |t: f64| -> f64 {
        let (x, xc, w) = node(t);
        if w == 0.0 || x <= 0.0 || xc <= 0.0 {
            return 0.0;
        }
        let y = f(x, xc);
        if y.is_finite() {
            y * w
        } else {
            0.0
        }
    };

    // level 0: h = 1, nodes at integers
    let mut h = 1.0;
    let mut sum = eval(0.0);
    let mut abs_sum = sum.abs();
    let mut k = 1.0;
    while k <= t_max {
        let (l, r) = (eval(k), eval(-k));
        sum += l + r;
        abs_sum += l.abs() + r.abs();
        k += 1.0;
    }
    let mut prev = sum * h;
    let mut diff = f64::INFINITY;
    for level in 1..=cfg.max_level {
        h *= 0.5;
        // new nodes are the odd multiples of h
        let mut add = 0.0;
        let mut i = 1u64;
        loop {
            let t = i as f64 * h;
            if t > t_max {
                break;
            }
            let (l, r) = (eval(t), eval(-t));
            add += l + r;
            abs_sum += l.abs() + r.abs();
            i += 2;
        }
        sum += add;
        let cur = sum * h;
        diff = (cur - prev).abs();
        let round = 16.0 * f64::EPSILON * abs_sum * h;
        if level >= MIN_LEVEL && diff <= cfg.abs_tol * cur.abs().max(1.0) {
            // the level difference bounds the error of the previous estimate
            return Ok(RealScalar::new(cur, diff + round));
        }
        prev = cur;
    }
    Err(Error::NonConverged {
        what: "tanh-sinh quadrature".into(),
        err: diff,
        target: cfg.abs_tol,
    })
}

/// `ln x` without cancellation near `x = 1`.
pub(crate) fn ln_x(x: f64, xc: f64) -> f64 {
    if x < 0.5 {
        x.ln()
    } else {
        (-xc).ln_1p()
    }
}
