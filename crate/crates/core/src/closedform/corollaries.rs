//! Sign-specialized corollaries, transcribed term by term and kept apart
//! from the theorem evaluator so the two paths check each other.

use super::terms::{beta, eta, lambda, m1, phi, phi1, powi, th, zeta};
use super::{binom, factorial, require_valid, Family, FamilyTag, Params, Variant};
use crate::error::{Error, Result};
use crate::specfun::{RealScalar, Sign};

/// Whether a corollary specialization exists for this family and variant.
pub fn has_corollary(family: Family) -> bool {
    match family.tag {
        FamilyTag::IntInf1 | FamilyTag::IntInf2 => false,
        FamilyTag::IntUnit1 | FamilyTag::IntUnit2 => family.variant == Variant::I,
        _ => true,
    }
}

pub fn eval_corollary(family: Family, params: Params) -> Result<RealScalar> {
    require_valid(family, params)?;
    if !has_corollary(family) {
        return Err(Error::Unsupported(format!("no corollary specialization for {family}")));
    }
    let c = Cor::new(params);
    let (a, b) = (params.a.is_plus(), params.b.is_plus());
    let v = match family.tag {
        FamilyTag::IntUnit1 => match (a, b) {
            (true, true) => c.unit1_a1_b1(),
            (true, false) => c.unit1_a1_bm(),
            (false, true) => c.unit1_am_b1(),
            (false, false) => c.unit1_am_bm(),
        },
        FamilyTag::IntUnit2 => match (a, b) {
            (true, true) => c.unit2_a1_b1(),
            (true, false) => c.unit2_a1_bm(),
            (false, true) => c.unit2_am_b1(),
            (false, false) => c.unit2_am_bm(),
        },
        FamilyTag::EulerH => match (a, b) {
            (true, true) => c.eh_a1_b1(),
            (false, true) => c.eh_am_b1(),
            (true, false) => c.eh_a1_bm(),
            (false, false) => c.eh_am_bm(),
        },
        FamilyTag::EulerO => match (a, b) {
            (true, true) => c.eo_a1_b1(),
            (false, true) => c.eo_am_b1(),
            (true, false) => c.eo_a1_bm(),
            (false, false) => c.eo_am_bm(),
        },
        FamilyTag::BbpH => match (a, b) {
            (true, true) => c.bh_a1_b1(),
            (true, false) => c.bh_a1_bm(),
            (false, true) => c.bh_am_b1(),
            (false, false) => c.bh_am_bm(),
        },
        FamilyTag::BbpO => match (a, b) {
            (true, true) => c.bo_a1_b1(),
            (true, false) => c.bo_a1_bm(),
            (false, true) => c.bo_am_b1(),
            (false, false) => c.bo_am_bm(),
        },
        FamilyTag::IntInf1 | FamilyTag::IntInf2 => unreachable!(),
    };
    Ok(v)
}

struct Cor {
    p: u32,
    q: u32,
    n: u32,
    pi: i64,
    qi: i64,
    ni: i64,
    nf: f64,
    fq: f64,
    /// `(-1)^n` as a sign
    sn: Sign,
}

type Term = fn(u32) -> RealScalar;

impl Cor {
    fn new(pr: Params) -> Cor {
        Cor {
            p: pr.p,
            q: pr.q,
            n: pr.n,
            pi: pr.p as i64,
            qi: pr.q as i64,
            ni: pr.n as i64,
            nf: pr.n as f64,
            fq: factorial(pr.q - 1),
            sn: Sign::parity(pr.n as i64),
        }
    }

    fn pq(&self) -> u32 {
        self.p + self.q
    }

    /// `Σ_{k=0}^{⌊upto/2⌋} C(p+q-2k-1, top) w^{-2k} f(2k) g(p+q-2k)`.
    fn s2(&self, upto: u32, top: u32, w: f64, f: &dyn Fn(u32) -> RealScalar, g: Term) -> RealScalar {
        let pq = self.pq();
        (0..=upto / 2)
            .map(|k| (f(2 * k) * g(pq - 2 * k)).scale(binom(pq - 2 * k - 1, top) * powi(w, -2 * k as i64)))
            .sum()
    }

    /// Double sum over `j = 2..=n`, `k = 1..=upto` with `Θ(tc, k, j-1, n)` and
    /// `Φ(fc, p+q-k, (n-j+1)/n)`; `alt_j` adds the factor `(-1)^j`.
    fn dh(&self, upto: u32, top: u32, alt_j: bool, tc: Sign, fc: Sign) -> RealScalar {
        let (n, pq) = (self.n, self.pq());
        let mut acc = RealScalar::zero();
        for j in 2..=n {
            for k in 1..=upto {
                let mut s = m1(k as i64);
                if alt_j {
                    s *= m1(j as i64);
                }
                let t = th(tc, k, (j - 1) as u64, n as u64) * phi(fc, pq - k, (n - j + 1) as u64, n as u64);
                acc = acc + t.scale(s * binom(pq - k - 1, top));
            }
        }
        acc
    }

    /// Double sum over `j = 1..=n` with `Θ(tc, k, 2j-1, 2n)` and `Φ(fc, p+q-k, (2n-2j+1)/(2n))`.
    fn do_(&self, upto: u32, top: u32, alt_j: bool, tc: Sign, fc: Sign) -> RealScalar {
        let (n, pq) = (self.n, self.pq());
        let mut acc = RealScalar::zero();
        for j in 1..=n {
            for k in 1..=upto {
                let mut s = m1(k as i64);
                if alt_j {
                    s *= m1(j as i64);
                }
                let t = th(tc, k, (2 * j - 1) as u64, 2 * n as u64)
                    * phi(fc, pq - k, (2 * n - 2 * j + 1) as u64, 2 * n as u64);
                acc = acc + t.scale(s * binom(pq - k - 1, top));
            }
        }
        acc
    }

    // ---- ∫₀¹ ln^{q-1}(x) Li_p(±x^n)/(1∓x) dx, part i ----

    fn unit1_a1_b1(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, fq) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.fq);
        zeta(pq).scale(0.5 * m1(qi) * fq * powi(nf, -qi))
            - (zeta(p) * zeta(q)).scale(0.5 * (1.0 + m1(qi)) * fq)
            + self.s2(p, q - 1, nf, &zeta, zeta).scale(powi(nf, pi) * fq)
            + self.s2(q, p - 1, 1.0, &zeta, zeta).scale(powi(nf, -qi) * fq)
            + self.dh(q, p - 1, false, Sign::Plus, Sign::Plus).scale(0.5 * powi(nf, -qi) * fq)
    }

    fn unit1_a1_bm(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, fq) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.fq);
        -eta(pq).scale(0.5 * m1(qi) * fq * powi(nf, -qi))
            + (eta(p) * zeta(q)).scale(0.5 * (1.0 + m1(qi)) * fq)
            - self.s2(p, q - 1, nf, &eta, zeta).scale(powi(nf, pi) * fq)
            + self.s2(q, p - 1, 1.0, &eta, eta).scale(powi(nf, -qi) * fq)
            - self.dh(q, p - 1, false, Sign::Minus, Sign::Minus).scale(0.5 * powi(nf, -qi) * fq)
    }

    fn unit1_am_b1(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, fq, sn) =
            (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.fq, self.sn);
        let phn = move |s: u32| phi1(sn, s);
        -zeta(pq).scale(0.5 * m1(qi) * fq * powi(nf, -qi))
            - (eta(q) * phn(p)).scale(0.5 * sn.f() * (1.0 + m1(qi)) * fq)
            + self.s2(p, q - 1, nf, &zeta, eta).scale(powi(nf, pi) * fq)
            - self.s2_dyn(q, p - 1, 1.0, &zeta, &phn).scale(sn.f() * powi(nf, -qi) * fq)
            + self.dh(q, p - 1, true, Sign::Plus, sn).scale(0.5 * sn.f() * powi(nf, -qi) * fq)
    }

    fn unit1_am_bm(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, fq, sn) =
            (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.fq, self.sn);
        let sn1 = -sn;
        let phn1 = move |s: u32| phi1(sn1, s);
        eta(pq).scale(0.5 * m1(qi) * powi(nf, -qi) * fq)
            + (eta(q) * phn1(p)).scale(0.5 * sn.f() * (1.0 + m1(qi)) * fq)
            - self.s2(p, q - 1, nf, &eta, eta).scale(powi(nf, pi) * fq)
            - self.s2_dyn(q, p - 1, 1.0, &eta, &phn1).scale(sn.f() * powi(nf, -qi) * fq)
            - self.dh(q, p - 1, true, Sign::Minus, sn1).scale(0.5 * sn.f() * powi(nf, -qi) * fq)
    }

    // ---- ∫₀¹ ln^{q-1}(x) Li_p(±x^{2n})/(1∓x²) dx, part i ----

    fn unit2_a1_b1(&self) -> RealScalar {
        let (p, q, qi, pi, nf, fq) = (self.p, self.q, self.qi, self.pi, self.nf, self.fq);
        let tn = 2.0 * nf;
        -(lambda(q) * zeta(p)).scale(0.5 * fq * (1.0 - m1(pi)))
            + self.s2(p, q - 1, tn, &zeta, lambda).scale(powi(tn, pi) * fq)
            + self.do_(q, p - 1, false, Sign::Plus, Sign::Plus).scale(0.5 * powi(tn, -qi) * fq)
    }

    fn unit2_a1_bm(&self) -> RealScalar {
        let (p, q, qi, pi, nf, fq) = (self.p, self.q, self.qi, self.pi, self.nf, self.fq);
        let tn = 2.0 * nf;
        (lambda(q) * eta(p)).scale(0.5 * fq * (1.0 - m1(pi)))
            - self.s2(p, q - 1, tn, &eta, lambda).scale(powi(tn, pi) * fq)
            - self.do_(q, p - 1, false, Sign::Minus, Sign::Minus).scale(0.5 * powi(tn, -qi) * fq)
    }

    fn unit2_am_b1(&self) -> RealScalar {
        let (p, q, qi, pi, ni, nf, fq, sn) =
            (self.p, self.q, self.qi, self.pi, self.ni, self.nf, self.fq, self.sn);
        let tn = 2.0 * nf;
        -(beta(q) * phi1(sn, p)).scale(0.5 * m1(ni - 1) * fq * (1.0 - m1(pi)))
            - self.s2(p, q - 1, tn, &zeta, beta).scale(powi(tn, pi) * fq)
            - self.do_(q, p - 1, true, Sign::Plus, sn).scale(0.5 * sn.f() * powi(tn, -qi) * fq)
    }

    fn unit2_am_bm(&self) -> RealScalar {
        let (p, q, qi, pi, nf, fq, sn) = (self.p, self.q, self.qi, self.pi, self.nf, self.fq, self.sn);
        let tn = 2.0 * nf;
        -(beta(q) * phi1(-sn, p)).scale(0.5 * sn.f() * fq * (1.0 - m1(pi)))
            + self.s2(p, q - 1, tn, &eta, beta).scale(powi(tn, pi) * fq)
            + self.do_(q, p - 1, true, Sign::Minus, -sn).scale(0.5 * sn.f() * powi(tn, -qi) * fq)
    }

    // ---- Σ a^k H_{nk}^{(p)}(b) / k^q ----

    fn eh_a1_b1(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf);
        (zeta(q) * zeta(p)).scale(0.5 * (1.0 - m1(pi)))
            + zeta(pq).scale(0.5 * powi(nf, -pi))
            + self.s2(p, q - 1, 1.0, &zeta, zeta).scale(powi(-nf, -pi))
            - self.s2(q, p - 1, nf, &zeta, zeta).scale(powi(-nf, qi))
            + self.dh(p, q - 1, false, Sign::Plus, Sign::Plus).scale(0.5 * powi(-nf, -pi))
    }

    fn eh_am_b1(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf);
        -(eta(q) * zeta(p)).scale(0.5 * (1.0 - m1(pi)))
            - eta(pq).scale(0.5 * powi(nf, -pi))
            + self.s2(p, q - 1, 1.0, &eta, eta).scale(powi(-nf, -pi))
            + self.s2(q, p - 1, nf, &eta, zeta).scale(powi(-nf, qi))
            - self.dh(p, q - 1, false, Sign::Minus, Sign::Minus).scale(0.5 * powi(-nf, -pi))
    }

    fn eh_a1_bm(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, sn) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.sn);
        let phn = move |s: u32| phi1(sn, s);
        (zeta(q) * eta(p)).scale(0.5 * (1.0 - m1(pi)))
            - phn(pq).scale(0.5 * sn.f() * powi(nf, -pi))
            - self.s2_dyn_g(p, q - 1, 1.0, &phn, zeta).scale(sn.f() * powi(-nf, -pi))
            - self.s2_dyn_g(q, p - 1, nf, &phn, eta).scale(sn.f() * powi(-nf, qi))
            + self.dh(p, q - 1, true, sn, Sign::Plus).scale(0.5 * powi(-nf, -pi))
    }

    fn eh_am_bm(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, sn) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.sn);
        let sn1 = -sn;
        let phn1 = move |s: u32| phi1(sn1, s);
        -(eta(q) * eta(p)).scale(0.5 * (1.0 - m1(pi)))
            + phn1(pq).scale(0.5 * sn.f() * powi(nf, -pi))
            - self.s2_dyn_g(p, q - 1, 1.0, &phn1, eta).scale(sn.f() * powi(-nf, -pi))
            + self.s2_dyn_g(q, p - 1, nf, &phn1, eta).scale(sn.f() * powi(-nf, qi))
            - self.dh(p, q - 1, true, sn1, Sign::Minus).scale(0.5 * powi(-nf, -pi))
    }

    // ---- Σ a^k O_{nk}^{(p)}(b) / k^q ----

    fn eo_a1_b1(&self) -> RealScalar {
        let (p, q, qi, pi, nf) = (self.p, self.q, self.qi, self.pi, self.nf);
        let tn = 2.0 * nf;
        (zeta(q) * lambda(p)).scale(0.5 * (1.0 + m1(qi)))
            - self.s2(q, p - 1, tn, &zeta, lambda).scale(powi(-tn, qi))
            + self.do_(p, q - 1, false, Sign::Plus, Sign::Plus).scale(0.5 * powi(-tn, -pi))
    }

    fn eo_am_b1(&self) -> RealScalar {
        let (p, q, qi, pi, nf) = (self.p, self.q, self.qi, self.pi, self.nf);
        let tn = 2.0 * nf;
        -(eta(q) * lambda(p)).scale(0.5 * (1.0 + m1(qi)))
            + self.s2(q, p - 1, tn, &eta, lambda).scale(powi(-tn, qi))
            - self.do_(p, q - 1, false, Sign::Minus, Sign::Minus).scale(0.5 * powi(-tn, -pi))
    }

    fn eo_a1_bm(&self) -> RealScalar {
        let (p, q, qi, pi, nf, sn) = (self.p, self.q, self.qi, self.pi, self.nf, self.sn);
        let tn = 2.0 * nf;
        let phn = move |s: u32| phi1(sn, s);
        (zeta(q) * beta(p)).scale(0.5 * (1.0 + m1(qi)))
            - self.s2(q, p - 1, tn, &phn, beta).scale(sn.f() * powi(-tn, qi))
            - self.do_(p, q - 1, true, sn, Sign::Plus).scale(0.5 * powi(-tn, -pi))
    }

    fn eo_am_bm(&self) -> RealScalar {
        let (p, q, qi, pi, nf, sn) = (self.p, self.q, self.qi, self.pi, self.nf, self.sn);
        let tn = 2.0 * nf;
        let sn1 = -sn;
        let phn1 = move |s: u32| phi1(sn1, s);
        -(eta(q) * beta(p)).scale(0.5 * (1.0 + m1(qi)))
            + self.s2(q, p - 1, tn, &phn1, beta).scale(sn.f() * powi(-tn, qi))
            + self.do_(p, q - 1, true, sn1, Sign::Minus).scale(0.5 * powi(-tn, -pi))
    }

    // ---- Σ (a^n)^k H_k^{(p)}(b) Σ_j a^{j-1}/(nk+j)^q ----

    fn bh_a1_b1(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf);
        -zeta(pq).scale(0.5 * powi(nf, -qi))
            + (zeta(p) * zeta(q)).scale(0.5 * (1.0 + m1(qi)))
            - self.s2(q, p - 1, 1.0, &zeta, zeta).scale(powi(-nf, -qi))
            + self.s2(p, q - 1, nf, &zeta, zeta).scale(powi(-nf, pi))
            - self.dh(q, p - 1, false, Sign::Plus, Sign::Plus).scale(0.5 * powi(-nf, -qi))
    }

    fn bh_a1_bm(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf);
        -eta(pq).scale(0.5 * powi(nf, -qi))
            + (eta(p) * zeta(q)).scale(0.5 * (1.0 + m1(qi)))
            + self.s2(q, p - 1, 1.0, &eta, eta).scale(0.5 * powi(-nf, -qi))
            + self.s2(p, q - 1, nf, &eta, zeta).scale(powi(-nf, -pi))
            - self.dh(q, p - 1, false, Sign::Minus, Sign::Minus).scale(0.5 * powi(-nf, -qi))
    }

    fn bh_am_b1(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, sn) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.sn);
        let phn = move |s: u32| phi1(sn, s);
        phn(pq).scale(0.5 * sn.f() * powi(nf, -qi))
            + (zeta(p) * eta(q)).scale(0.5 * (1.0 + m1(qi)))
            + self.s2_dyn_g(q, p - 1, 1.0, &phn, zeta).scale(sn.f() * powi(-nf, -qi))
            + self.s2_dyn_g(p, q - 1, nf, &phn, eta).scale(sn.f() * powi(-nf, pi))
            - self.dh(q, p - 1, true, sn, Sign::Plus).scale(0.5 * powi(-nf, -qi))
    }

    fn bh_am_bm(&self) -> RealScalar {
        let (p, q, pq, qi, pi, nf, sn) = (self.p, self.q, self.pq(), self.qi, self.pi, self.nf, self.sn);
        let sn1 = -sn;
        let phn1 = move |s: u32| phi1(sn1, s);
        // the first single sum stops at ⌊(q-1)/2⌋ as printed
        phn1(pq).scale(0.5 * sn.f() * powi(nf, -qi))
            + (eta(p) * eta(q)).scale(0.5 * (1.0 + m1(qi)))
            - self.s2_dyn_g(q - 1, p - 1, 1.0, &phn1, eta).scale(sn.f() * powi(-nf, -qi))
            + self.s2_dyn_g(p, q - 1, nf, &phn1, eta).scale(sn.f() * powi(-nf, pi))
            - self.dh(q, p - 1, true, sn1, Sign::Minus).scale(0.5 * powi(-nf, -qi))
    }

    // ---- Σ (a^n)^k H_k^{(p)}(b) Σ_j a^{j-1}/(2nk+2j-1)^q ----

    fn bo_a1_b1(&self) -> RealScalar {
        let (p, q, qi, pi, nf) = (self.p, self.q, self.qi, self.pi, self.nf);
        let tn = 2.0 * nf;
        (lambda(q) * zeta(p)).scale(0.5 * (1.0 - m1(pi)))
            + self.s2(p, q - 1, tn, &zeta, lambda).scale(powi(-tn, pi))
            - self.do_(q, p - 1, false, Sign::Plus, Sign::Plus).scale(0.5 * powi(-tn, -qi))
    }

    fn bo_a1_bm(&self) -> RealScalar {
        let (p, q, qi, pi, nf) = (self.p, self.q, self.qi, self.pi, self.nf);
        let tn = 2.0 * nf;
        (lambda(q) * eta(p)).scale(0.5 * (1.0 - m1(pi)))
            + self.s2(p, q - 1, tn, &eta, lambda).scale(powi(-tn, pi))
            - self.do_(q, p - 1, false, Sign::Minus, Sign::Minus).scale(0.5 * powi(-tn, -qi))
    }

    fn bo_am_b1(&self) -> RealScalar {
        let (p, q, qi, pi, nf, sn) = (self.p, self.q, self.qi, self.pi, self.nf, self.sn);
        let tn = 2.0 * nf;
        let phn = move |s: u32| phi1(sn, s);
        (beta(q) * zeta(p)).scale(0.5 * (1.0 - m1(pi)))
            + self.s2(p, q - 1, tn, &phn, beta).scale(sn.f() * powi(-tn, pi))
            + self.do_(q, p - 1, true, sn, Sign::Plus).scale(0.5 * powi(-tn, -qi))
    }

    fn bo_am_bm(&self) -> RealScalar {
        let (p, q, qi, pi, nf, sn) = (self.p, self.q, self.qi, self.pi, self.nf, self.sn);
        let tn = 2.0 * nf;
        let sn1 = -sn;
        let phn1 = move |s: u32| phi1(sn1, s);
        (beta(q) * eta(p)).scale(0.5 * (1.0 - m1(pi)))
            + self.s2(p, q - 1, tn, &phn1, beta).scale(sn.f() * powi(-tn, pi))
            + self.do_(q, p - 1, true, sn1, Sign::Minus).scale(0.5 * powi(-tn, -qi))
    }

    /// [`Cor::s2`] with a captured second factor.
    fn s2_dyn(
        &self,
        upto: u32,
        top: u32,
        w: f64,
        f: &dyn Fn(u32) -> RealScalar,
        g: &dyn Fn(u32) -> RealScalar,
    ) -> RealScalar {
        let pq = self.pq();
        (0..=upto / 2)
            .map(|k| (f(2 * k) * g(pq - 2 * k)).scale(binom(pq - 2 * k - 1, top) * powi(w, -2 * k as i64)))
            .sum()
    }

    fn s2_dyn_g(&self, upto: u32, top: u32, w: f64, f: &dyn Fn(u32) -> RealScalar, g: Term) -> RealScalar {
        self.s2_dyn(upto, top, w, f, &g)
    }
}
