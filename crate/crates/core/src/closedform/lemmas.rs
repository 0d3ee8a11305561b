//! Auxiliary closed forms used as standalone checks.

use super::factorial;
use super::terms::{m1, phi1, powi};
use crate::error::{Error, Result};
use crate::specfun::{lerch_phi, LerchPoint, Rational, RealScalar, Sign};

/// `∫₀¹ x^{s-1} ln^{q-1}(x) / (1 - c x^r) dx = (-1)^{q-1}(q-1)!/r^q · Φ(c, q, s/r)`.
pub fn lemma3_value(c: Sign, q: u32, s: u64, r: u64) -> Result<RealScalar> {
    if q == 0 || s == 0 || r == 0 {
        return Err(Error::Parameter("lemma3 needs q, s, r >= 1".into()));
    }
    if c.is_plus() && q == 1 {
        return Err(Error::Divergent("∫ x^{s-1}/(1-x^r) diverges at x = 1".into()));
    }
    // Φ(c, q, s/r) for s/r > 1 by peeling terms down to (0, 1]
    let alpha = Rational::new(s, r)?;
    let whole = (alpha.num() - 1) / alpha.den();
    let base = Rational::new(alpha.num() - whole * alpha.den(), alpha.den())?;
    let mut phi = lerch_phi(LerchPoint::new(c, q, base)?)?;
    let mut sign = 1.0;
    for m in 0..whole {
        let x = base.value() + m as f64;
        phi = phi - RealScalar::exact(sign * x.powi(-(q as i32)));
        sign *= c.f();
    }
    // Φ(c, q, α+m) = c^m (Φ(c, q, α) - Σ_{i<m} c^i (α+i)^{-q})
    let phi = phi.scale(c.pow(whole as i64).f());
    let coef = m1(q as i64 - 1) * factorial(q - 1) / (r as f64).powi(q as i32);
    Ok(phi.scale(coef))
}

/// Closed form of `∫₀^∞ ln^{q-1}(x)/x · (1/(1-ax) - 1/(1-b y x^n)) dx`, `y ∈ (0, 1)`.
pub fn lemma5_value(q: u32, n: u32, a: Sign, b: Sign, y: f64) -> Result<RealScalar> {
    if q == 0 || n == 0 {
        return Err(Error::Parameter("lemma5 needs q, n >= 1".into()));
    }
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::Domain(format!("lemma5 needs y in (0, 1), got {y}")));
    }
    if a.is_plus() && q == 1 {
        return Err(Error::Validation(super::Validity {
            ok: false,
            reason: Some(super::Reason::Q1A1Divergent),
        }));
    }
    let qi = q as i64;
    let fq = factorial(q - 1);
    let ly = y.ln();
    let first = if q % 2 == 0 {
        phi1(a, q).scale(-a.f() * 2.0 * fq)
    } else {
        RealScalar::zero()
    };
    let mut sum = RealScalar::zero();
    for j in 0..=q / 2 {
        let e = q - 2 * j;
        sum = sum + phi1(b, 2 * j).scale(ly.powi(e as i32) / factorial(e));
    }
    let second = sum.scale(2.0 * b.f() * m1(qi) * fq * powi(n as f64, -qi));
    Ok(first + second)
}
