//! Named identities with exact expected values.

use std::f64::consts::{LN_2, PI};

use super::{oracle_value, rel, EvalReport, OracleConfig, Status};
use crate::closedform::{eval_theorem, lemma3_value, Family, FamilyTag, Params};
use crate::error::{Error, Result};
use crate::oracle::{quad_unit, Integrand};
use crate::specfun::{reduced_constant, ConstKind, RealScalar, Sign};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IdentityTarget {
    Family { family: Family, params: Params },
    /// `∫₀¹ x^{s-1} ln^{q-1}x /(1 - c x^r)`
    Lemma3 { c: Sign, q: u32, s: u64, r: u64 },
}

#[derive(Debug, Clone, Copy)]
pub struct IdentityRecord {
    pub name: &'static str,
    pub target: IdentityTarget,
    /// The expected value written over π, ln 2, G, ζ(3), γ.
    pub expected: &'static str,
    pub value: fn() -> f64,
    pub tolerance: f64,
}

fn catalan() -> f64 {
    reduced_constant(ConstKind::Beta, 2).expect("β(2)").value
}

fn zeta3() -> f64 {
    reduced_constant(ConstKind::Zeta, 3).expect("ζ(3)").value
}

fn fam(tag: FamilyTag, p: u32, q: u32, n: u32, a: i64, b: i64) -> IdentityTarget {
    IdentityTarget::Family { family: Family::plain(tag), params: Params::from_ints(p, q, n, a, b) }
}

pub fn identity_registry() -> Vec<IdentityRecord> {
    vec![
        IdentityRecord {
            name: "batir-n1",
            target: fam(FamilyTag::BbpO, 1, 1, 1, -1, 1),
            expected: "G - (π/2)·ln 2",
            value: || catalan() - PI / 2.0 * LN_2,
            tolerance: 1e-10,
        },
        IdentityRecord {
            name: "euler-2zeta3",
            target: fam(FamilyTag::EulerH, 1, 2, 1, 1, 1),
            expected: "2·ζ(3)",
            value: || 2.0 * zeta3(),
            tolerance: 1e-10,
        },
        IdentityRecord {
            name: "euler-alt-zeta3",
            target: fam(FamilyTag::EulerH, 1, 2, 1, -1, 1),
            expected: "-(5/8)·ζ(3)",
            value: || -5.0 / 8.0 * zeta3(),
            tolerance: 1e-10,
        },
        IdentityRecord {
            name: "lemma3-half-zeta",
            target: IdentityTarget::Lemma3 { c: Sign::Plus, q: 2, s: 1, r: 2 },
            expected: "-π²/8",
            value: || -PI * PI / 8.0,
            tolerance: 1e-10,
        },
        IdentityRecord {
            name: "lemma3-catalan",
            target: IdentityTarget::Lemma3 { c: Sign::Minus, q: 2, s: 1, r: 2 },
            expected: "-G",
            value: || -catalan(),
            tolerance: 1e-10,
        },
    ]
}

/// Closed form, oracle, and the skeleton report of a record. `Lemma3`
/// targets are reported as family `LEMMA_3` with `p = s`, `n = r` and
/// `a = b = c`.
fn evaluate(
    target: IdentityTarget,
    cfg: &OracleConfig,
) -> (Result<RealScalar>, Result<RealScalar>, EvalReport) {
    match target {
        IdentityTarget::Family { family, params } => (
            eval_theorem(family, params),
            oracle_value(family, params, cfg),
            EvalReport::blank(family, params, Status::Fail),
        ),
        IdentityTarget::Lemma3 { c, q, s, r } => {
            let blank = EvalReport {
                family: "LEMMA_3".into(),
                variant: "none".into(),
                p: s as u32,
                q,
                n: r as u32,
                a: c.value(),
                b: c.value(),
                ..EvalReport::blank(Family::plain(FamilyTag::IntUnit1), Params::from_ints(1, 1, 1, 1, 1), Status::Fail)
            };
            (
                lemma3_value(c, q, s, r),
                quad_unit(&Integrand::Lemma3 { c, q, s, r }, &cfg.quad),
                blank,
            )
        }
    }
}

pub fn check_identity(rec: &IdentityRecord, cfg: &OracleConfig) -> EvalReport {
    let start = std::time::Instant::now();
    let (closed, oracle, mut rep) = evaluate(rec.target, cfg);
    let want = (rec.value)();
    rep.status = match (&closed, &oracle) {
        (Ok(c), Ok(o)) => {
            let abs = (c.value - o.value).abs();
            rep.abs_err = Some(abs);
            rep.rel_err = Some(rel(abs, c.value));
            let ok_c = rel((c.value - want).abs(), want) <= rec.tolerance;
            let ok_o = rel((o.value - want).abs(), want) <= rec.tolerance;
            if ok_c && ok_o {
                Status::Pass
            } else {
                Status::Fail
            }
        }
        (Ok(_), Err(Error::NonConverged { .. })) => Status::Nonconverged,
        _ => Status::Fail,
    };
    rep.closed_form = closed.ok();
    rep.oracle = oracle.ok();
    rep.wall_time_ms = start.elapsed().as_millis() as u64;
    rep
}

pub fn run_identities() -> Vec<EvalReport> {
    let cfg = OracleConfig::default();
    identity_registry().iter().map(|r| check_identity(r, &cfg)).collect()
}
