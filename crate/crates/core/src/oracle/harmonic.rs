//! Prefix sums of the generalized harmonic numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::specfun::{RealScalar, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HarmonicKind {
    /// `Σ b^{m-1}/m^p`
    H,
    /// `Σ b^{m-1}/(2m-1)^p`
    O,
}

impl fmt::Display for HarmonicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HarmonicKind::H => "H",
            HarmonicKind::O => "O",
        })
    }
}

/// `prefix[k]` is the k-th harmonic number, accumulated in double-double
/// and rounded once.
#[derive(Debug)]
pub struct HarmonicCache {
    pub kind: HarmonicKind,
    pub p: u32,
    pub b: Sign,
    prefix: Vec<f64>,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

impl HarmonicCache {
    pub fn build(kind: HarmonicKind, p: u32, b: Sign, len: usize) -> HarmonicCache {
        let mut prefix = Vec::with_capacity(len + 1);
        prefix.push(0.0);
        let (mut hi, mut lo) = (0.0f64, 0.0f64);
        for m in 1..=len {
            let t = term(kind, p, b, m as u64);
            let (s, e) = two_sum(hi, t);
            lo += e;
            let (s2, e2) = two_sum(s, lo);
            hi = s2;
            lo = e2;
            prefix.push(hi);
        }
        HarmonicCache { kind, p, b, prefix }
    }

    pub fn len(&self) -> usize {
        self.prefix.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, k: usize) -> f64 {
        self.prefix[k]
    }
}

/// The `m`-th summand, rounded once.
pub fn term(kind: HarmonicKind, p: u32, b: Sign, m: u64) -> f64 {
    let d = match kind {
        HarmonicKind::H => m as f64,
        HarmonicKind::O => (2 * m - 1) as f64,
    };
    let sign = if b == Sign::Minus && m % 2 == 0 { -1.0 } else { 1.0 };
    sign / d.powi(p as i32)
}

type Key = (HarmonicKind, u32, Sign);

/// Shared cache covering at least `len` terms. Built once per key and
/// regrown (never mutated) when a longer prefix is requested.
pub fn harmonic_cache(kind: HarmonicKind, p: u32, b: Sign, len: usize) -> Arc<HarmonicCache> {
    static REG: OnceLock<Mutex<HashMap<Key, Arc<HarmonicCache>>>> = OnceLock::new();
    let reg = REG.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = reg.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(c) = map.get(&(kind, p, b)) {
        if c.len() >= len {
            return Arc::clone(c);
        }
    }
    let grow = map.get(&(kind, p, b)).map_or(0, |c| 2 * c.len());
    let cache = Arc::new(HarmonicCache::build(kind, p, b, len.max(grow).max(1024)));
    map.insert((kind, p, b), Arc::clone(&cache));
    cache
}

pub fn gen_harmonic(kind: HarmonicKind, k: u64, p: u32, b: Sign) -> RealScalar {
    let c = harmonic_cache(kind, p, b, k as usize);
    let v = c.get(k as usize);
    RealScalar::new(v, f64::EPSILON * v.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(gen_harmonic(HarmonicKind::H, 0, 1, Sign::Plus).value, 0.0);
        let v = gen_harmonic(HarmonicKind::H, 3, 1, Sign::Plus).value;
        assert!((v - 11.0 / 6.0).abs() < 1e-15);
        let v = gen_harmonic(HarmonicKind::O, 2, 1, Sign::Minus).value;
        assert!((v - 2.0 / 3.0).abs() < 3e-16);
    }

    #[test]
    fn large_prefix_is_accurate() {
        // H_{10^6} = ln 10^6 + γ + 1/(2·10^6) - 1/(12·10^12) + ...
        let v = gen_harmonic(HarmonicKind::H, 1_000_000, 1, Sign::Plus).value;
        let want = (1e6f64).ln() + crate::specfun::EULER_GAMMA + 0.5e-6 - 1.0 / 12e12;
        assert!((v - want).abs() < 4e-15, "{v} vs {want}");
    }
}
