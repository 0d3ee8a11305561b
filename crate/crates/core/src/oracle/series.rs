//! Tails of smooth sums: Euler–Maclaurin for `Σ g(k)` and Boole for
//! `Σ (-1)^k g(k)`, driven by analytic derivatives.

use crate::specfun::{bernoulli_f64, RealScalar};

/// A smooth term `g` with derivatives and tail integrals for `x >= N`.
pub trait Smooth {
    /// `g^{(k)}(x)`.
    fn deriv(&self, k: u32, x: f64) -> f64;
    /// `∫_x^∞ g`.
    fn tail_integral(&self, x: f64) -> f64;
}

/// `c · x^{-s} · ln^e x`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub c: f64,
    pub s: f64,
    pub e: u32,
}

/// Finite sum of power-log terms; an asymptotic expansion truncated at
/// a fixed depth below its leading power.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PowerLog {
    pub terms: Vec<Term>,
}

impl PowerLog {
    pub fn zero() -> PowerLog {
        PowerLog::default()
    }

    pub fn term(c: f64, s: f64, e: u32) -> PowerLog {
        PowerLog { terms: vec![Term { c, s, e }] }.normalized()
    }

    pub fn push(&mut self, c: f64, s: f64, e: u32) {
        self.terms.push(Term { c, s, e });
    }

    /// Merge like terms, drop exact zeros, order by decay.
    pub fn normalized(mut self) -> PowerLog {
        self.terms.sort_by(|x, y| x.s.total_cmp(&y.s).then(y.e.cmp(&x.e)));
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            match out.last_mut() {
                Some(l) if l.s == t.s && l.e == t.e => l.c += t.c,
                _ => out.push(t),
            }
        }
        out.retain(|t| t.c != 0.0);
        PowerLog { terms: out }
    }

    pub fn lead(&self) -> Option<f64> {
        self.terms.first().map(|t| t.s)
    }

    pub fn scale(&self, k: f64) -> PowerLog {
        PowerLog {
            terms: self.terms.iter().map(|t| Term { c: t.c * k, ..*t }).collect(),
        }
        .normalized()
    }

    pub fn add(&self, other: &PowerLog) -> PowerLog {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        PowerLog { terms }.normalized()
    }

    /// Product, keeping powers up to `lead + depth`.
    pub fn mul(&self, other: &PowerLog, depth: f64) -> PowerLog {
        let (Some(l1), Some(l2)) = (self.lead(), other.lead()) else {
            return PowerLog::zero();
        };
        let cut = l1 + l2 + depth;
        let mut terms = Vec::new();
        for x in &self.terms {
            for y in &other.terms {
                let s = x.s + y.s;
                if s <= cut + 1e-9 {
                    terms.push(Term { c: x.c * y.c, s, e: x.e + y.e });
                }
            }
        }
        PowerLog { terms }.normalized()
    }

    pub fn derivative(&self) -> PowerLog {
        let mut out = PowerLog::zero();
        for t in &self.terms {
            out.push(-t.s * t.c, t.s + 1.0, t.e);
            if t.e > 0 {
                out.push(t.e as f64 * t.c, t.s + 1.0, t.e - 1);
            }
        }
        out.normalized()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let lx = x.ln();
        self.terms
            .iter()
            .map(|t| t.c * x.powf(-t.s) * lx.powi(t.e as i32))
            .sum()
    }
}

impl Smooth for PowerLog {
    fn deriv(&self, k: u32, x: f64) -> f64 {
        let mut d = self.clone();
        for _ in 0..k {
            d = d.derivative();
        }
        d.eval(x)
    }

    fn tail_integral(&self, x: f64) -> f64 {
        let lx = x.ln();
        let mut total = 0.0;
        for t in &self.terms {
            let sig = t.s - 1.0;
            assert!(sig > 0.0, "tail integral of x^-{} diverges", t.s);
            let xs = x.powf(-sig);
            // I_e = x^{-σ} ln^e x / σ + (e/σ) I_{e-1}
            let mut i = xs / sig;
            for e in 1..=t.e {
                i = xs * lx.powi(e as i32) / sig + e as f64 / sig * i;
            }
            total += t.c * i;
        }
        total
    }
}

/// `Σ_{k>N} g(k)` by Euler–Maclaurin with Bernoulli terms through `B_{2·order}`.
pub fn em_tail<G: Smooth + ?Sized>(g: &G, n: u64, order: u32) -> RealScalar {
    let x = n as f64;
    let mut sum = g.tail_integral(x) - 0.5 * g.deriv(0, x);
    let mut last = 0.0;
    let mut fact = 1.0;
    for j in 1..=order.max(1) {
        let k = 2 * j;
        fact *= ((k - 1) * k) as f64;
        last = bernoulli_f64(k as usize) / fact * g.deriv(k - 1, x);
        sum -= last;
    }
    let abs = sum.abs();
    RealScalar::new(sum, last.abs() + 8.0 * f64::EPSILON * abs)
}

/// `E_k(0)`: `1` at `k = 0`, else `-2(2^{k+1}-1) B_{k+1}/(k+1)`.
fn euler_poly_zero(k: u32) -> f64 {
    if k == 0 {
        return 1.0;
    }
    -2.0 * (2f64.powi(k as i32 + 1) - 1.0) * bernoulli_f64(k as usize + 1) / (k + 1) as f64
}

/// `Σ_{k>N} (-1)^k g(k)` by Boole summation through the derivative of
/// order `2·order - 1`.
pub fn boole_tail<G: Smooth + ?Sized>(g: &G, n: u64, order: u32) -> RealScalar {
    let x = (n + 1) as f64;
    // Σ_{i>=0} (-1)^i g(x+i) ≈ ½ Σ_k E_k(0)/k! g^{(k)}(x)
    let mut sum = 0.5 * g.deriv(0, x);
    let mut last = 0.0;
    let mut fact = 1.0;
    for k in 1..2 * order.max(1) {
        fact *= k as f64;
        if k % 2 == 0 {
            continue;
        }
        last = 0.5 * euler_poly_zero(k) / fact * g.deriv(k, x);
        sum += last;
    }
    let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
    RealScalar::new(sign * sum, last.abs() + 8.0 * f64::EPSILON * sum.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partial(p: i32, n: u64) -> f64 {
        (1..=n).map(|k| (k as f64).powi(-p)).sum()
    }

    #[test]
    fn em_examples() {
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        let v = em_tail(&PowerLog::term(1.0, 2.0, 0), 10, 4);
        assert!((v.value - (z2 - partial(2, 10))).abs() < 1e-12);
        let z3 = 1.202_056_903_159_594_2;
        let v = em_tail(&PowerLog::term(1.0, 3.0, 0), 10, 4);
        assert!((v.value - (z3 - partial(3, 10))).abs() < 1e-12);
        assert_eq!(em_tail(&PowerLog::zero(), 10, 4).value, 0.0);
    }

    #[test]
    fn em_with_log() {
        // Σ_{k>N} ln k / k² against a long direct sum plus its own EM tail
        let g = PowerLog::term(1.0, 2.0, 1);
        let a = em_tail(&g, 20, 6).value;
        let direct: f64 = (21..=2000u64).map(|k| (k as f64).ln() / (k as f64).powi(2)).sum();
        let b = direct + em_tail(&g, 2000, 6).value;
        assert!((a - b).abs() < 1e-13, "{a} vs {b}");
    }

    #[test]
    fn boole_examples() {
        // Σ_{k>N} (-1)^k/k: for N = 0 this is -ln 2
        let g = PowerLog::term(1.0, 1.0, 0);
        let direct: f64 = (1..=30u64).map(|k| if k % 2 == 0 { 1.0 } else { -1.0 } / k as f64).sum();
        let v = boole_tail(&g, 30, 8);
        assert!((direct + v.value + std::f64::consts::LN_2).abs() < 1e-13);
        let g = PowerLog::term(1.0, 2.0, 0);
        let eta2 = std::f64::consts::PI.powi(2) / 12.0;
        let direct: f64 = (1..=25u64).map(|k| if k % 2 == 0 { 1.0 } else { -1.0 } / (k * k) as f64).sum();
        let v = boole_tail(&g, 25, 8);
        assert!((direct + v.value + eta2).abs() < 1e-14);
    }

    #[test]
    fn powerlog_algebra() {
        let a = PowerLog::term(1.0, 1.0, 0).add(&PowerLog::term(2.0, 2.0, 0));
        let b = a.mul(&a, 1.0);
        assert_eq!(b.terms.len(), 2);
        assert_eq!(b.terms[1].c, 4.0);
        let d = PowerLog::term(1.0, 1.0, 1).derivative();
        assert!((d.eval(3.0) - (1.0 - 3f64.ln()) / 9.0).abs() < 1e-16);
    }
}
