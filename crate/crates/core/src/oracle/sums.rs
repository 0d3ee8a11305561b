//! Euler sums and BBP-type series from their defining series.
//!
//! The k-th term is `s^k h(M) u(k)` with `h` a generalized harmonic number
//! at `M = w k` and `u` a smooth weight. Writing `h(M) = L - b^M t(M)` with
//! `t` the smooth tail of the harmonic series splits the sum into at most two
//! pieces, each of the form `Σ σ^k g(k)` with fixed `σ = ±1` and smooth `g`:
//! positive pieces get an exact head plus an Euler–Maclaurin tail, alternating
//! pieces get CVZ or a Boole tail. The asymptotic series used for the tails:
//!
//! * `ζ(p, M+h) ~ Σ_k (-1)^k B_k(h)/k! (p)_{k-1} M^{1-p-k}`
//! * `Φ(-1, p, M+h) ~ ½ Σ_k (-1)^k E_k(h)/k! (p)_k M^{-p-k}`
//! * `H_M = ln M + γ + 1/(2M) - Σ B_{2j}/(2j) M^{-2j}`
//!
//! each carried to `2·tail_order + 6` orders below the leading power.

use serde::Serialize;

use super::accel::{accel_alternating, CVZ_DEFAULT_N};
use super::harmonic::{harmonic_cache, HarmonicKind};
use super::series::{boole_tail, em_tail, PowerLog};
use crate::closedform::{require_valid, Family, FamilyTag, Params};
use crate::error::{Error, Result};
use crate::specfun::{
    bernoulli_f64, euler_f64, reduced_constant, ConstKind, RealScalar, Sign, EULER_GAMMA,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Accel {
    /// Plain partial sums to `max_terms`, averaged over the last two.
    None,
    /// CVZ for alternating pieces; exact head and Euler–Maclaurin tail for
    /// the others.
    AltCvz,
    /// Exact head, then Euler–Maclaurin or Boole tails for every piece.
    EmTail,
}

impl std::str::FromStr for Accel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Accel> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "NONE" => Ok(Accel::None),
            "ALT_CVZ" | "CVZ" => Ok(Accel::AltCvz),
            "EM_TAIL" | "EM" => Ok(Accel::EmTail),
            _ => Err(Error::Usage(format!("unknown acceleration `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumConfig {
    pub max_terms: u64,
    pub accel: Accel,
    pub tail_order: u32,
}

impl Default for SumConfig {
    fn default() -> Self {
        SumConfig { max_terms: 200_000, accel: Accel::AltCvz, tail_order: 6 }
    }
}

impl SumConfig {
    pub fn new(max_terms: u64, accel: Accel, tail_order: u32) -> Result<SumConfig> {
        if max_terms < 1000 {
            return Err(Error::Parameter(format!("max_terms {max_terms} < 1000")));
        }
        if !(1..=8).contains(&tail_order) {
            return Err(Error::Parameter(format!("tail_order {tail_order} outside 1..=8")));
        }
        Ok(SumConfig { max_terms, accel, tail_order })
    }
}

/// Terms summed exactly before a tail formula takes over.
const HEAD: u64 = 1000;
/// Relative accuracy demanded of every sum.
pub const SUM_TARGET: f64 = 1e-9;

#[derive(Debug, Clone, Copy)]
enum Weight {
    /// `k^{-q}`
    Power { q: u32 },
    /// `Σ_{j=1}^n a^{j-1} (n k + j)^{-q}`
    BbpH { q: u32, n: u32, a: Sign },
    /// `Σ_{j=1}^n a^{j-1} (2n k + 2j - 1)^{-q}`
    BbpO { q: u32, n: u32, a: Sign },
}

impl Weight {
    fn eval(self, k: u64) -> f64 {
        let k = k as f64;
        match self {
            Weight::Power { q } => k.powi(-(q as i32)),
            Weight::BbpH { q, n, a } => (1..=n)
                .map(|j| a.pow(j as i64 - 1).f() * (n as f64 * k + j as f64).powi(-(q as i32)))
                .sum(),
            Weight::BbpO { q, n, a } => (1..=n)
                .map(|j| {
                    a.pow(j as i64 - 1).f() * (2.0 * n as f64 * k + (2 * j - 1) as f64).powi(-(q as i32))
                })
                .sum(),
        }
    }

    /// Expansion in `x^{-1}`; `(c x + d)^{-q} = c^{-q} Σ_m (-1)^m C(q+m-1, m) (d/c)^m x^{-q-m}`.
    fn asym(self, depth: u32) -> PowerLog {
        let (q, n, a, c, odd) = match self {
            Weight::Power { q } => return PowerLog::term(1.0, q as f64, 0),
            Weight::BbpH { q, n, a } => (q, n, a, n as f64, false),
            Weight::BbpO { q, n, a } => (q, n, a, 2.0 * n as f64, true),
        };
        let mut out = PowerLog::zero();
        let mut binom = 1.0;
        for m in 0..=depth {
            if m > 0 {
                binom *= (q + m - 1) as f64 / m as f64;
            }
            // exact integer moment Σ a^{j-1} d_j^m
            let moment: i128 = (1..=n as i128)
                .map(|j| {
                    let d = if odd { 2 * j - 1 } else { j };
                    let s = if a == Sign::Minus && j % 2 == 0 { -1 } else { 1 };
                    s * d.pow(m)
                })
                .sum();
            let coef = if m % 2 == 0 { 1.0 } else { -1.0 } * binom * moment as f64
                * c.powi(-(q as i32) - m as i32);
            out.push(coef, (q + m) as f64, 0);
        }
        out.normalized()
    }
}

/// One series `Σ_{k>=1} s^k h(w k) u(k)`.
#[derive(Debug, Clone, Copy)]
struct Shape {
    kind: HarmonicKind,
    p: u32,
    b: Sign,
    w: u64,
    s: Sign,
    u: Weight,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum PieceKind {
    /// `h(M) u`, used when `b = +1`
    Whole,
    /// `L u`
    Limit,
    /// `-t(M) u`
    Tail,
}

/// Rising factorial `(p)_k`, with `(p)_{-1} = 1/(p-1)`.
fn rising(p: u32, k: i32) -> f64 {
    if k < 0 {
        return 1.0 / (p as f64 - 1.0);
    }
    (0..k).map(|i| p as f64 + i as f64).product()
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

impl Shape {
    fn limit(&self) -> Option<f64> {
        let kind = match (self.kind, self.b) {
            (_, Sign::Plus) if self.p == 1 => return None,
            (HarmonicKind::H, Sign::Plus) => ConstKind::Zeta,
            (HarmonicKind::O, Sign::Plus) => ConstKind::Lambda,
            (HarmonicKind::H, Sign::Minus) => ConstKind::Eta,
            (HarmonicKind::O, Sign::Minus) => ConstKind::Beta,
        };
        Some(reduced_constant(kind, self.p).expect("limit in domain").value)
    }

    /// Series in `x` for `f(w x)` given the coefficient list of `f` in
    /// `M^{-r}`.
    fn in_x(&self, coefs: &[(f64, f64)]) -> PowerLog {
        let w = self.w as f64;
        let mut out = PowerLog::zero();
        for &(c, r) in coefs {
            out.push(c * w.powf(-r), r, 0);
        }
        out.normalized()
    }

    /// `t(M)` for `b = -1`: `Φ(-1, p, M+1)` or `2^{-p} Φ(-1, p, M+½)`.
    fn tail_asym(&self, depth: u32) -> PowerLog {
        let p = self.p;
        let mut coefs = Vec::new();
        for k in 0..=depth {
            let ek = match self.kind {
                // E_k(1) = (-1)^k E_k(0)
                HarmonicKind::H => {
                    let e0 = if k == 0 {
                        1.0
                    } else {
                        -2.0 * (2f64.powi(k as i32 + 1) - 1.0) * bernoulli_f64(k as usize + 1)
                            / (k + 1) as f64
                    };
                    if k % 2 == 0 { e0 } else { -e0 }
                }
                HarmonicKind::O => euler_f64(k as usize) * 2f64.powi(-(k as i32)),
            };
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            coefs.push((0.5 * sign * ek * rising(p, k as i32) / factorial(k), (p + k) as f64));
        }
        let t = self.in_x(&coefs);
        match self.kind {
            HarmonicKind::H => t,
            HarmonicKind::O => t.scale(2f64.powi(-(p as i32))),
        }
    }

    /// `h(M)` for `b = +1`.
    fn harmonic_asym(&self, depth: u32) -> PowerLog {
        let p = self.p;
        let w = self.w as f64;
        if p == 1 {
            let mut coefs = vec![(0.5, 1.0)];
            for j in 1..=depth / 2 + 1 {
                coefs.push((-bernoulli_f64(2 * j as usize) / (2 * j) as f64, (2 * j) as f64));
            }
            return match self.kind {
                HarmonicKind::H => {
                    let mut h = self.in_x(&coefs);
                    h.push(1.0, 0.0, 1);
                    h.push(w.ln() + EULER_GAMMA, 0.0, 0);
                    h.normalized()
                }
                HarmonicKind::O => {
                    // O_M = H_{2M} - ½ H_M
                    let mut o = PowerLog::zero();
                    for &(c, r) in &coefs {
                        o.push(c * ((2.0 * w).powf(-r) - 0.5 * w.powf(-r)), r, 0);
                    }
                    o.push(0.5, 0.0, 1);
                    o.push(0.5 * w.ln() + std::f64::consts::LN_2 + 0.5 * EULER_GAMMA, 0.0, 0);
                    o.normalized()
                }
            };
        }
        let h = match self.kind {
            HarmonicKind::H => 1.0,
            HarmonicKind::O => 0.5,
        };
        let mut coefs = Vec::new();
        for k in 0..=depth {
            let bk = match (self.kind, k) {
                (HarmonicKind::H, 1) => 0.5,
                (HarmonicKind::H, _) => bernoulli_f64(k as usize),
                (HarmonicKind::O, _) => (2f64.powi(1 - k as i32) - 1.0) * bernoulli_f64(k as usize),
            };
            let _ = h;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            coefs.push((-sign * bk / factorial(k) * rising(p, k as i32 - 1), (p + k - 1) as f64));
        }
        let mut neg_tail = self.in_x(&coefs);
        if self.kind == HarmonicKind::O {
            neg_tail = neg_tail.scale(2f64.powi(-(p as i32)));
        }
        neg_tail.add(&PowerLog::term(self.limit().expect("p >= 2"), 0.0, 0))
    }

    fn pieces(&self) -> Vec<(PieceKind, Sign)> {
        match self.b {
            Sign::Plus => vec![(PieceKind::Whole, self.s)],
            Sign::Minus => vec![
                (PieceKind::Limit, self.s),
                (PieceKind::Tail, self.s * Sign::parity(self.w as i64)),
            ],
        }
    }

    fn asym(&self, piece: PieceKind, depth: u32) -> PowerLog {
        let u = self.u.asym(depth);
        match piece {
            PieceKind::Whole => self.harmonic_asym(depth).mul(&u, depth as f64),
            PieceKind::Limit => u.scale(self.limit().expect("b = -1 has a limit")),
            PieceKind::Tail => self.tail_asym(depth).mul(&u, depth as f64).scale(-1.0),
        }
    }

    fn cache_len(&self, k_max: u64) -> usize {
        (self.w * (k_max + 1)) as usize
    }

    /// Exact `g(k)` of a piece.
    fn piece_term(&self, piece: PieceKind, k: u64, h: &dyn Fn(u64) -> f64) -> f64 {
        let u = self.u.eval(k);
        let m = self.w * k;
        match piece {
            PieceKind::Whole => h(m) * u,
            PieceKind::Limit => self.limit().unwrap_or(0.0) * u,
            PieceKind::Tail => {
                let l = self.limit().unwrap_or(0.0);
                let bm = self.b.pow(m as i64).f();
                -bm * (l - h(m)) * u
            }
        }
    }

    fn full_term(&self, k: u64, h: &dyn Fn(u64) -> f64) -> f64 {
        self.s.pow(k as i64).f() * h(self.w * k) * self.u.eval(k)
    }
}

/// Neumaier-compensated running sum.
#[derive(Default)]
struct Acc {
    sum: f64,
    c: f64,
    abs: f64,
}

impl Acc {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.c += (self.sum - t) + v;
        } else {
            self.c += (v - t) + self.sum;
        }
        self.sum = t;
        self.abs += v.abs();
    }

    fn value(&self) -> f64 {
        self.sum + self.c
    }

    fn round(&self) -> f64 {
        2.0 * f64::EPSILON * self.abs
    }
}

/// Tail of one piece past `head`. The expansion is truncated
/// `2·order + 6` orders below its lead; its truncation error is taken as
/// the change from a run four orders shallower.
fn piece_tail(shape: &Shape, piece: PieceKind, sigma: Sign, head: u64, order: u32) -> RealScalar {
    let depth = 2 * order + 6;
    let run = |d: u32| {
        let g = shape.asym(piece, d);
        match sigma {
            Sign::Plus => em_tail(&g, head, order),
            Sign::Minus => boole_tail(&g, head, order),
        }
    };
    let fine = run(depth);
    let coarse = run(depth - 4);
    fine + RealScalar::new(0.0, (fine.value - coarse.value).abs())
}

fn sum_shape(shape: &Shape, cfg: &SumConfig) -> RealScalar {
    let head = HEAD.min(cfg.max_terms);
    let len = match cfg.accel {
        Accel::None => shape.cache_len(cfg.max_terms + 1),
        _ => shape.cache_len(head + 1).max(shape.cache_len(CVZ_DEFAULT_N as u64 + 1)),
    };
    let cache = harmonic_cache(shape.kind, shape.p, shape.b, len);
    let h = |m: u64| cache.get(m as usize);

    match cfg.accel {
        Accel::None => {
            let k_max = cfg.max_terms;
            let mut acc = Acc::default();
            for k in 1..=k_max {
                acc.add(shape.full_term(k, &h));
            }
            let t_n = shape.full_term(k_max, &h);
            let t_n1 = shape.full_term(k_max + 1, &h);
            let err = 0.5 * t_n1.abs() + k_max as f64 * (t_n + t_n1).abs() + acc.round();
            RealScalar::new(acc.value() + 0.5 * t_n1, err)
        }
        Accel::EmTail => {
            let mut acc = Acc::default();
            for k in 1..=head {
                acc.add(shape.full_term(k, &h));
            }
            let mut total = RealScalar::new(acc.value(), acc.round());
            for (piece, sigma) in shape.pieces() {
                total = total + piece_tail(shape, piece, sigma, head, cfg.tail_order);
            }
            total
        }
        Accel::AltCvz => {
            let mut total = RealScalar::zero();
            for (piece, sigma) in shape.pieces() {
                match sigma {
                    Sign::Minus => {
                        // Σ_{k>=1} (-1)^k g(k) = -Σ_{i>=0} (-1)^i g(i+1)
                        let v = accel_alternating(
                            |i| shape.piece_term(piece, i as u64 + 1, &h),
                            CVZ_DEFAULT_N,
                        );
                        total = total - v;
                    }
                    Sign::Plus => {
                        let mut acc = Acc::default();
                        for k in 1..=head {
                            acc.add(shape.piece_term(piece, k, &h));
                        }
                        total = total
                            + RealScalar::new(acc.value(), acc.round())
                            + piece_tail(shape, piece, sigma, head, cfg.tail_order);
                    }
                }
            }
            total
        }
    }
}

fn checked(v: RealScalar, what: &str) -> Result<RealScalar> {
    let target = SUM_TARGET * v.value.abs().max(1.0);
    if v.err <= target {
        Ok(v)
    } else {
        Err(Error::NonConverged { what: what.into(), err: v.err, target })
    }
}

/// The series value and error estimate without enforcing the target.
pub fn sum_estimate(family: Family, params: Params, cfg: &SumConfig) -> Result<RealScalar> {
    require_valid(family, params)?;
    let Params { p, q, n, a, b } = params;
    let shape = match family.tag {
        FamilyTag::EulerH | FamilyTag::EulerO => Shape {
            kind: if family.tag == FamilyTag::EulerH { HarmonicKind::H } else { HarmonicKind::O },
            p,
            b,
            w: n as u64,
            s: a,
            u: Weight::Power { q },
        },
        FamilyTag::BbpH => Shape {
            kind: HarmonicKind::H,
            p,
            b,
            w: 1,
            s: a.pow(n as i64),
            u: Weight::BbpH { q, n, a },
        },
        FamilyTag::BbpO => Shape {
            kind: HarmonicKind::H,
            p,
            b,
            w: 1,
            s: a.pow(n as i64),
            u: Weight::BbpO { q, n, a },
        },
        _ => return Err(Error::Unsupported(format!("{family} is not a series family"))),
    };
    Ok(sum_shape(&shape, cfg))
}

/// `Σ_{k>=1} a^k H_{nk}^{(p)}(b)/k^q` or the odd-harmonic analogue.
pub fn sum_euler(family: Family, params: Params, cfg: &SumConfig) -> Result<RealScalar> {
    if !matches!(family.tag, FamilyTag::EulerH | FamilyTag::EulerO) {
        return Err(Error::Unsupported(format!("sum_euler does not handle {family}")));
    }
    checked(sum_estimate(family, params, cfg)?, "Euler sum")
}

/// `Σ_{k>=1} (a^n)^k H_k^{(p)}(b) Σ_j a^{j-1}/(nk+j)^q` or the odd-denominator analogue.
pub fn sum_bbp(family: Family, params: Params, cfg: &SumConfig) -> Result<RealScalar> {
    if !matches!(family.tag, FamilyTag::BbpH | FamilyTag::BbpO) {
        return Err(Error::Unsupported(format!("sum_bbp does not handle {family}")));
    }
    checked(sum_estimate(family, params, cfg)?, "BBP series")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::eval_theorem;

    const ZETA3: f64 = 1.202_056_903_159_594_2;

    fn fam(tag: FamilyTag) -> Family {
        Family::plain(tag)
    }

    #[test]
    fn classical_euler_sums() {
        let cfg = SumConfig::default();
        let v = sum_euler(fam(FamilyTag::EulerH), Params::from_ints(1, 2, 1, 1, 1), &cfg).unwrap();
        assert!((v.value - 2.0 * ZETA3).abs() < 1e-9, "{v:?}");
        let v = sum_euler(fam(FamilyTag::EulerH), Params::from_ints(1, 2, 1, -1, 1), &cfg).unwrap();
        assert!((v.value + 5.0 / 8.0 * ZETA3).abs() < 1e-9, "{v:?}");
        let em = SumConfig { accel: Accel::EmTail, ..cfg };
        let v = sum_euler(fam(FamilyTag::EulerH), Params::from_ints(1, 2, 1, -1, 1), &em).unwrap();
        assert!((v.value + 5.0 / 8.0 * ZETA3).abs() < 1e-9, "{v:?}");
    }

    #[test]
    fn batir_n1() {
        let cfg = SumConfig::default();
        let v = sum_bbp(fam(FamilyTag::BbpO), Params::from_ints(1, 1, 1, -1, 1), &cfg).unwrap();
        assert!((v.value + 0.172_827_451_0).abs() < 1e-9, "{v:?}");
    }

    #[test]
    fn modes_agree_with_theorems() {
        let cfg = SumConfig::default();
        let em = SumConfig { accel: Accel::EmTail, ..cfg };
        let cases = [
            (FamilyTag::EulerH, (2, 3, 2, 1, 1)),
            (FamilyTag::EulerH, (2, 1, 3, -1, -1)),
            (FamilyTag::EulerO, (1, 1, 1, -1, -1)),
            (FamilyTag::EulerO, (2, 3, 2, 1, 1)),
            (FamilyTag::BbpH, (2, 1, 1, 1, 1)),
            (FamilyTag::BbpH, (1, 2, 2, -1, 1)),
            (FamilyTag::BbpO, (3, 2, 3, -1, -1)),
        ];
        for (tag, (p, q, n, a, b)) in cases {
            let pr = Params::from_ints(p, q, n, a, b);
            let f = fam(tag);
            if crate::closedform::validate_params(f, pr).reason.is_some() {
                continue;
            }
            let want = eval_theorem(f, pr).unwrap().value;
            for c in [cfg, em] {
                let got = sum_estimate(f, pr, &c).unwrap();
                assert!(
                    (got.value - want).abs() < 1e-8 * want.abs().max(1.0),
                    "{f} {pr:?} {:?}: {got:?} vs {want}",
                    c.accel
                );
                assert!(got.err < 1e-9 * want.abs().max(1.0), "{f} {pr:?}: err {got:?}");
            }
        }
    }

    #[test]
    fn config_invariants() {
        assert!(SumConfig::new(999, Accel::AltCvz, 6).is_err());
        assert!(SumConfig::new(1000, Accel::AltCvz, 9).is_err());
        assert!(SumConfig::new(1000, Accel::None, 8).is_ok());
    }
}
