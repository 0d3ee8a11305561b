//! Right-hand sides of the eight theorem families.

use super::terms::{m1, phi, phi1, phi_half, powi, sp, th};
use super::{binom, factorial, require_valid, Family, FamilyTag, Params, Variant};
use crate::error::Result;
use crate::specfun::RealScalar;

pub fn eval_theorem(family: Family, params: Params) -> Result<RealScalar> {
    require_valid(family, params)?;
    let v = match (family.tag, family.variant) {
        (FamilyTag::IntInf1, _) => int_inf_1(params),
        (FamilyTag::IntInf2, _) => int_inf_2(params),
        (FamilyTag::IntUnit1, Variant::Ii) => int_unit_1(params, true),
        (FamilyTag::IntUnit1, _) => int_unit_1(params, false),
        (FamilyTag::IntUnit2, Variant::Ii) => int_unit_2(params, true),
        (FamilyTag::IntUnit2, _) => int_unit_2(params, false),
        (FamilyTag::EulerH, _) => euler_h(params),
        (FamilyTag::EulerO, _) => euler_o(params),
        (FamilyTag::BbpH, _) => bbp_h(params),
        (FamilyTag::BbpO, _) => bbp_o(params),
    };
    Ok(v)
}

/// `Σ_{j=0}^{⌊m/2⌋} C(p+q-2j-1, top) w^{-2j} Φ(c1, 2j, 1) Φ(c2, p+q-2j, α)`,
/// with `α = 1` or `1/2`.
fn even_sum(
    m: u32,
    pq: u32,
    top: u32,
    w: f64,
    c1: crate::Sign,
    c2: crate::Sign,
    half: bool,
) -> RealScalar {
    (0..=m / 2)
        .map(|j| {
            let coef = binom(pq - 2 * j - 1, top) * powi(w, -2 * j as i64);
            let second = if half { phi_half(c2, pq - 2 * j) } else { phi1(c2, pq - 2 * j) };
            (phi1(c1, 2 * j) * second).scale(coef)
        })
        .sum()
}

/// `Σ_{j=2}^{n} Σ_{k=1}^{m} C(p+q-k-1, top) s^j (-1)^k Θ(c, k, j-1, n) Φ(d, p+q-k, (n-j+1)/n)`.
fn theta_sum_h(
    n: u32,
    m: u32,
    pq: u32,
    top: u32,
    s: crate::Sign,
    c: crate::Sign,
    d: crate::Sign,
) -> RealScalar {
    let mut acc = RealScalar::zero();
    for j in 2..=n {
        for k in 1..=m {
            let coef = binom(pq - k - 1, top) * sp(s, j as i64) * m1(k as i64);
            let t = th(c, k, (j - 1) as u64, n as u64);
            let f = phi(d, pq - k, (n - j + 1) as u64, n as u64);
            acc = acc + (t * f).scale(coef);
        }
    }
    acc
}

/// `Σ_{j=1}^{n} Σ_{k=1}^{m} C(p+q-k-1, top) s^j (-1)^k Θ(c, k, 2j-1, 2n) Φ(d, p+q-k, (2n-2j+1)/(2n))`.
fn theta_sum_o(
    n: u32,
    m: u32,
    pq: u32,
    top: u32,
    s: crate::Sign,
    c: crate::Sign,
    d: crate::Sign,
) -> RealScalar {
    let mut acc = RealScalar::zero();
    for j in 1..=n {
        for k in 1..=m {
            let coef = binom(pq - k - 1, top) * sp(s, j as i64) * m1(k as i64);
            let t = th(c, k, (2 * j - 1) as u64, 2 * n as u64);
            let f = phi(d, pq - k, (2 * n - 2 * j + 1) as u64, 2 * n as u64);
            acc = acc + (t * f).scale(coef);
        }
    }
    acc
}

fn int_inf_1(pr: Params) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pq) = (n as i64, q as i64, p + q);
    let nf = n as f64;
    let c = a.pow(ni) * b;
    let fq = factorial(q - 1);
    let t1 = (phi1(c, p) * phi1(a, q))
        .scale(-sp(a, ni - 1) * b.f() * (1.0 + m1(qi)) * fq);
    let t2 = even_sum(q, pq, p - 1, 1.0, b, c, false).scale(2.0 * sp(a, ni) * powi(nf, -qi) * fq);
    let t3 = theta_sum_h(n, q, pq, p - 1, a, b, c)
        .scale(sp(a, ni - 1) * b.f() * powi(nf, -qi) * fq);
    t1 + t2 + t3
}

fn int_inf_2(pr: Params) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pq) = (n as i64, q as i64, p + q);
    let c = a.pow(ni) * b;
    let fq = factorial(q - 1);
    let t1 = (phi_half(a, q) * phi1(c, p)).scale(
        -sp(a, ni - 1) * b.f() * powi(2.0, -qi) * fq * (1.0 + a.f() * m1(qi)),
    );
    let t2 = theta_sum_o(n, q, pq, p - 1, a, b, c)
        .scale(sp(a, ni - 1) * b.f() * powi(2.0 * n as f64, -qi) * fq);
    t1 + t2
}

fn int_unit_1(pr: Params, reflected: bool) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pi, pq) = (n as i64, q as i64, p as i64, p + q);
    let nf = n as f64;
    let c = a.pow(ni) * b;
    let fq = factorial(q - 1);
    // part ii replaces n by -n in the power factors and drops (-1)^q from the first term
    let sn = if reflected { -nf } else { nf };
    let first_sign = if reflected { 1.0 } else { m1(qi) };
    let t1 = phi1(b, pq).scale(0.5 * a.f() * b.f() * first_sign * fq * powi(nf, -qi));
    let t2 = (phi1(a, q) * phi1(c, p)).scale(-0.5 * sp(a, ni) * b.f() * (1.0 + m1(qi)) * fq);
    let t3 = even_sum(q, pq, p - 1, 1.0, b, c, false).scale(sp(a, ni - 1) * powi(sn, -qi) * fq);
    let t4 = even_sum(p, pq, q - 1, nf, b, a, false).scale(b.f() * powi(sn, pi) * fq);
    let t5 = theta_sum_h(n, q, pq, p - 1, a, b, c)
        .scale(0.5 * sp(a, ni) * b.f() * powi(sn, -qi) * fq);
    t1 + t2 + t3 + t4 + t5
}

fn int_unit_2(pr: Params, reflected: bool) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pi, pq) = (n as i64, q as i64, p as i64, p + q);
    let nf = n as f64;
    let c = a.pow(ni) * b;
    let fq = factorial(q - 1);
    let odd_p = 1.0 - m1(pi);
    if reflected {
        let m2q = powi(-2.0, -qi);
        let t1 = (phi_half(a, q) * phi1(c, p))
            .scale(-0.5 * sp(a, ni) * b.f() * m2q * fq * odd_p);
        let t2 = even_sum(p, pq, q - 1, nf, b, a, true).scale(-b.f() * m2q * powi(nf, pi) * fq);
        let t3 = theta_sum_o(n, q, pq, p - 1, a, b, c)
            .scale(0.5 * sp(a, ni) * b.f() * powi(-2.0 * nf, -qi) * fq);
        t1 + t2 + t3
    } else {
        let t1 = (phi_half(a, q) * phi1(c, p))
            .scale(-0.5 * sp(a, ni - 1) * b.f() * powi(2.0, -qi) * fq * odd_p);
        let t2 = even_sum(p, pq, q - 1, nf, b, a, true)
            .scale(a.f() * b.f() * powi(2.0, -qi) * powi(nf, pi) * fq);
        let t3 = theta_sum_o(n, q, pq, p - 1, a, b, c)
            .scale(0.5 * sp(a, ni - 1) * b.f() * powi(2.0 * nf, -qi) * fq);
        t1 + t2 + t3
    }
}

fn euler_h(pr: Params) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pi, pq) = (n as i64, q as i64, p as i64, p + q);
    let nf = n as f64;
    let c = a * b.pow(ni);
    let t1 = phi1(c, pq).scale(0.5 * a.f() * sp(b, ni - 1) * powi(nf, -pi));
    let t2 = (phi1(a, q) * phi1(b, p)).scale(0.5 * a.f() * (1.0 - m1(pi)));
    let t3 = even_sum(q, pq, p - 1, nf, c, b, false).scale(-a.f() * sp(b, ni) * powi(-nf, qi));
    let t4 = even_sum(p, pq, q - 1, 1.0, c, a, false).scale(sp(b, ni - 1) * powi(-nf, -pi));
    let t5 = theta_sum_h(n, p, pq, q - 1, b, c, a).scale(0.5 * a.f() * powi(-nf, -pi));
    t1 + t2 + t3 + t4 + t5
}

fn euler_o(pr: Params) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pi, pq) = (n as i64, q as i64, p as i64, p + q);
    let nf = n as f64;
    let c = a * b.pow(ni);
    let t1 = (phi1(a, q) * phi_half(b, p))
        .scale(0.5 * a.f() * (1.0 + m1(qi)) * powi(2.0, -pi));
    let t2 = even_sum(q, pq, p - 1, nf, c, b, true)
        .scale(a.f() * sp(b, ni - 1) * powi(nf, qi) * powi(-2.0, -pi));
    let t3 = theta_sum_o(n, p, pq, q - 1, b, c, a)
        .scale(0.5 * a.f() * b.f() * powi(-2.0 * nf, -pi));
    t1 + t2 + t3
}

fn bbp_h(pr: Params) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pi, pq) = (n as i64, q as i64, p as i64, p + q);
    let nf = n as f64;
    let c = a.pow(ni) * b;
    let t1 = phi1(c, pq).scale(-0.5 * sp(a, ni - 1) * powi(nf, -qi));
    let t2 = (phi1(a, q) * phi1(b, p)).scale(0.5 * (1.0 + m1(qi)));
    let t3 = even_sum(q, pq, p - 1, 1.0, c, b, false)
        .scale(-sp(a, ni - 1) * b.f() * powi(-nf, -qi));
    let t4 = even_sum(p, pq, q - 1, nf, c, a, false).scale(sp(a, ni) * powi(-nf, pi));
    let t5 = theta_sum_h(n, q, pq, p - 1, a, c, b).scale(-0.5 * powi(-nf, -qi));
    t1 + t2 + t3 + t4 + t5
}

fn bbp_o(pr: Params) -> RealScalar {
    let Params { p, q, n, a, b } = pr;
    let (ni, qi, pi, pq) = (n as i64, q as i64, p as i64, p + q);
    let nf = n as f64;
    let c = a.pow(ni) * b;
    let t1 = (phi_half(a, q) * phi1(b, p)).scale(powi(2.0, -qi - 1) * (1.0 - m1(pi)));
    let t2 = even_sum(p, pq, q - 1, nf, c, a, true)
        .scale(-sp(a, ni - 1) * powi(-2.0, -qi) * powi(nf, pi));
    let t3 = theta_sum_o(n, q, pq, p - 1, a, c, b).scale(-0.5 * a.f() * powi(-2.0 * nf, -qi));
    t1 + t2 + t3
}
