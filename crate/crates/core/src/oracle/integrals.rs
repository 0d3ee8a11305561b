//! Integrand descriptors and the quadrature front ends.
//!
//! Every descriptor is the raw integrand of an identity. The half-line
//! integrals are split at `x = 1` and the outer leg is mapped back by
//! `x -> 1/t`; nothing else is rewritten.

use super::quad::{integrate_unit, ln_x, QuadConfig};
use crate::closedform::{require_valid, Family, FamilyTag, Params, Variant};
use crate::error::{Error, Result};
use crate::specfun::{li_exp, re_li_recip_mu, RealScalar, Sign};

/// What to integrate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Integrand {
    /// The left-hand side of an integral family.
    Family { family: Family, params: Params },
    /// The `x -> 1/x` companions of the two half-line integrals:
    /// `∫₀^∞ ln^{q-1}x Li_p(b x^{-n})/(1-ax)` and
    /// `∫₀^∞ ln^{q-1}x Li_p(b x^{-2n})/(1-ax²)`.
    Reflection { tag: FamilyTag, params: Params },
    /// `∫₀¹ x^{s-1} ln^{q-1}x /(1 - c x^r)`.
    Lemma3 { c: Sign, q: u32, s: u64, r: u64 },
    /// `∫₀^∞ ln^{q-1}x /x · (1/(1-ax) - 1/(1-b y x^n))`.
    Lemma5 { q: u32, n: u32, a: Sign, b: Sign, y: f64 },
}

/// Half-width of the window around an interior pole where the smooth
/// remainder is replaced by its symmetric average.
const POLE_GUARD: f64 = 1e-6;

/// `Li_p(c x^m)` for `x ∈ (0, 1)`.
fn li_pow(p: u32, c: Sign, m: u32, lx: f64) -> f64 {
    li_exp(p, c, m as f64 * lx).value
}

/// `Re Li_p(c x^{-m})` for `x ∈ (0, 1)`.
fn li_pow_recip(p: u32, c: Sign, m: u32, lx: f64) -> f64 {
    re_li_recip_mu(p, c, m as f64 * lx).value
}

/// `1 - a x^m` for `x ∈ (0, 1)` without cancellation near 1.
fn one_minus(a: Sign, m: u32, lx: f64) -> f64 {
    match a {
        Sign::Plus => -(m as f64 * lx).exp_m1(),
        Sign::Minus => 1.0 + (m as f64 * lx).exp(),
    }
}

fn pow_log(lx: f64, q: u32) -> f64 {
    lx.powi(q as i32 - 1)
}

/// `∫₀¹` of a descriptor that lives on the unit interval.
pub fn quad_unit(what: &Integrand, cfg: &QuadConfig) -> Result<RealScalar> {
    match *what {
        Integrand::Family { family, params } => {
            require_valid(family, params)?;
            let Params { p, q, n, a, b } = params;
            match (family.tag, family.variant) {
                (FamilyTag::IntUnit1, Variant::Ii) => integrate_unit(
                    |x, xc| {
                        let lx = ln_x(x, xc);
                        pow_log(lx, q) * li_pow_recip(p, b, n, lx) / one_minus(a, 1, lx)
                    },
                    cfg,
                ),
                (FamilyTag::IntUnit1, _) => integrate_unit(
                    |x, xc| {
                        let lx = ln_x(x, xc);
                        pow_log(lx, q) * li_pow(p, b, n, lx) / one_minus(a, 1, lx)
                    },
                    cfg,
                ),
                (FamilyTag::IntUnit2, Variant::Ii) => integrate_unit(
                    |x, xc| {
                        let lx = ln_x(x, xc);
                        pow_log(lx, q) * li_pow_recip(p, b, 2 * n, lx) / one_minus(a, 2, lx)
                    },
                    cfg,
                ),
                (FamilyTag::IntUnit2, _) => integrate_unit(
                    |x, xc| {
                        let lx = ln_x(x, xc);
                        pow_log(lx, q) * li_pow(p, b, 2 * n, lx) / one_minus(a, 2, lx)
                    },
                    cfg,
                ),
                _ => Err(Error::Unsupported(format!("{family} is not a unit-interval integral"))),
            }
        }
        Integrand::Lemma3 { c, q, s, r } => {
            if q == 0 || s == 0 || r == 0 {
                return Err(Error::Parameter("lemma3 needs q, s, r >= 1".into()));
            }
            if c.is_plus() && q == 1 {
                return Err(Error::Divergent("∫ x^{s-1}/(1-x^r) diverges at x = 1".into()));
            }
            integrate_unit(
                |x, xc| {
                    let lx = ln_x(x, xc);
                    ((s - 1) as f64 * lx).exp() * pow_log(lx, q) / one_minus(c, r as u32, lx)
                },
                cfg,
            )
        }
        _ => Err(Error::Unsupported("descriptor is a half-line integral".into())),
    }
}

/// `∫₀^∞` of a half-line descriptor, as `∫₀¹ (inner) + ∫₀¹ (outer leg at 1/t)`.
pub fn quad_halfline(what: &Integrand, cfg: &QuadConfig) -> Result<RealScalar> {
    let (inner, outer) = match *what {
        Integrand::Family { family, params } => {
            require_valid(family, params)?;
            let Params { p, q, n, a, b } = params;
            let sq = Sign::parity(q as i64 - 1).f();
            match family.tag {
                FamilyTag::IntInf1 => (
                    integrate_unit(
                        |x, xc| {
                            let lx = ln_x(x, xc);
                            pow_log(lx, q) * li_pow(p, b, n, lx) / (x * one_minus(a, 1, lx))
                        },
                        cfg,
                    )?,
                    // dx/(x(1-ax)) at x = 1/t is dt/(t-a)
                    integrate_unit(
                        |t, tc| {
                            let lt = ln_x(t, tc);
                            sq * pow_log(lt, q) * li_pow_recip(p, b, n, lt) / (-a.f() * one_minus(a, 1, lt))
                        },
                        cfg,
                    )?,
                ),
                FamilyTag::IntInf2 => (
                    integrate_unit(
                        |x, xc| {
                            let lx = ln_x(x, xc);
                            pow_log(lx, q) * li_pow(p, b, 2 * n, lx) / one_minus(a, 2, lx)
                        },
                        cfg,
                    )?,
                    // dx/(1-ax²) at x = 1/t is dt/(t²-a)
                    integrate_unit(
                        |t, tc| {
                            let lt = ln_x(t, tc);
                            sq * pow_log(lt, q) * li_pow_recip(p, b, 2 * n, lt) / (-a.f() * one_minus(a, 2, lt))
                        },
                        cfg,
                    )?,
                ),
                _ => return Err(Error::Unsupported(format!("{family} is not a half-line integral"))),
            }
        }
        Integrand::Reflection { tag, params } => {
            require_valid(Family::plain(tag), params)?;
            let Params { p, q, n, a, b } = params;
            let sq = Sign::parity(q as i64 - 1).f();
            match tag {
                FamilyTag::IntInf1 => (
                    integrate_unit(
                        |x, xc| {
                            let lx = ln_x(x, xc);
                            pow_log(lx, q) * li_pow_recip(p, b, n, lx) / one_minus(a, 1, lx)
                        },
                        cfg,
                    )?,
                    // dx/(1-ax) at x = 1/t is dt/(t(t-a))
                    integrate_unit(
                        |t, tc| {
                            let lt = ln_x(t, tc);
                            sq * pow_log(lt, q) * li_pow(p, b, n, lt) / (-a.f() * t * one_minus(a, 1, lt))
                        },
                        cfg,
                    )?,
                ),
                FamilyTag::IntInf2 => (
                    integrate_unit(
                        |x, xc| {
                            let lx = ln_x(x, xc);
                            pow_log(lx, q) * li_pow_recip(p, b, 2 * n, lx) / one_minus(a, 2, lx)
                        },
                        cfg,
                    )?,
                    integrate_unit(
                        |t, tc| {
                            let lt = ln_x(t, tc);
                            sq * pow_log(lt, q) * li_pow(p, b, 2 * n, lt) / (-a.f() * one_minus(a, 2, lt))
                        },
                        cfg,
                    )?,
                ),
                _ => return Err(Error::Unsupported(format!("no reflection for {tag}"))),
            }
        }
        Integrand::Lemma5 { q, n, a, b, y } => lemma5_legs(q, n, a, b, y, cfg)?,
        Integrand::Lemma3 { .. } => {
            return Err(Error::Unsupported("lemma3 is a unit-interval integral".into()))
        }
    };
    Ok(inner + outer)
}

fn lemma5_legs(
    q: u32,
    n: u32,
    a: Sign,
    b: Sign,
    y: f64,
    cfg: &QuadConfig,
) -> Result<(RealScalar, RealScalar)> {
    if q == 0 || n == 0 {
        return Err(Error::Parameter("lemma5 needs q, n >= 1".into()));
    }
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::Domain(format!("lemma5 needs y in (0, 1), got {y}")));
    }
    if a.is_plus() && q == 1 {
        return Err(Error::Divergent("lemma5 with a = 1 needs q >= 2".into()));
    }
    let (af, by) = (a.f(), b.f() * y);
    let nf = n as f64;
    let sq = Sign::parity(q as i64 - 1).f();
    // combined: (a - b y x^{n-1}) / ((1-ax)(1-b y x^n))
    let inner = integrate_unit(
        |x, xc| {
            let lx = ln_x(x, xc);
            let xn1 = ((nf - 1.0) * lx).exp();
            pow_log(lx, q) * (af - by * xn1) / (one_minus(a, 1, lx) * (1.0 - by * xn1 * x))
        },
        cfg,
    )?;
    // at x = 1/t: ± ln^{q-1}t (a t^{n-1} - b y) / ((t - a)(t^n - b y))
    let g = move |lt: f64| -> f64 {
        let tn1 = ((nf - 1.0) * lt).exp();
        sq * pow_log(lt, q) * (af * tn1 - by) / (-af * one_minus(a, 1, lt))
    };
    if b == Sign::Minus {
        let outer = integrate_unit(
            |t, tc| {
                let lt = ln_x(t, tc);
                g(lt) / ((nf * lt).exp() + y)
            },
            cfg,
        )?;
        return Ok((inner, outer));
    }
    // pole at t₀ = y^{1/n}: subtract c·n t^{n-1}/(t^n - y), whose
    // principal value over (0, 1) is ln(1-y) - ln y
    let t0 = y.powf(1.0 / nf);
    let c = g(t0.ln()) / (nf * t0.powf(nf - 1.0));
    let rem = move |t: f64, tc: f64| -> f64 {
        let lt = ln_x(t, tc);
        let d = (nf * lt).exp() - y;
        (g(lt) - c * nf * ((nf - 1.0) * lt).exp()) / d
    };
    let outer = integrate_unit(
        |t, tc| {
            if (t - t0).abs() < POLE_GUARD {
                let (l, r) = (t0 - POLE_GUARD, t0 + POLE_GUARD);
                0.5 * (rem(l, 1.0 - l) + rem(r, 1.0 - r))
            } else {
                rem(t, tc)
            }
        },
        cfg,
    )?;
    let pv = c * ((-y).ln_1p() - y.ln());
    Ok((inner, outer + RealScalar::new(pv, 4.0 * f64::EPSILON * pv.abs())))
}

/// `Re Li_p(y)` for `y > 1` from the principal-value integral
/// `(-1)^{p-1}/(p-1)! · PV∫₀¹ y ln^{p-1}t /(1 - y t) dt`.
pub fn pv_polylog_re(p: u32, y: f64, cfg: &QuadConfig) -> Result<RealScalar> {
    if p == 0 {
        return Err(Error::Parameter("polylog order must be >= 1".into()));
    }
    if !(y > 1.0) {
        return Err(Error::Domain(format!("pv_polylog_re needs y > 1, got {y}")));
    }
    let t0 = 1.0 / y;
    let f = move |lt: f64| y * pow_log(lt, p);
    let f0 = f(t0.ln());
    let rem = move |t: f64, tc: f64| -> f64 {
        let lt = ln_x(t, tc);
        (f(lt) - f0) / (1.0 - y * t)
    };
    let body = integrate_unit(
        |t, tc| {
            if (t - t0).abs() < POLE_GUARD {
                let (l, r) = (t0 - POLE_GUARD, t0 + POLE_GUARD);
                0.5 * (rem(l, 1.0 - l) + rem(r, 1.0 - r))
            } else {
                rem(t, tc)
            }
        },
        cfg,
    )?;
    // PV∫₀¹ dt/(1-yt) = -ln(y-1)/y
    let pole = -f0 * (y - 1.0).ln() / y;
    let fact: f64 = (1..p).map(|k| k as f64).product();
    let total = body + RealScalar::new(pole, 4.0 * f64::EPSILON * pole.abs());
    Ok(total.scale(Sign::parity(p as i64 - 1).f() / fact))
}
