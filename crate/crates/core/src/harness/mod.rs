//! Case comparison, parameter sweeps, the named-identity registry and
//! conformance reports.

pub mod cli;
mod identities;
mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::{
    eval_corollary, eval_theorem, has_corollary, validate_params, Family, FamilyTag, Params,
};
use crate::error::{Error, Result};
use crate::oracle::{
    quad_halfline, quad_unit, sum_bbp, sum_euler, Accel, Integrand, QuadConfig, SumConfig,
};
use crate::specfun::{RealScalar, Sign};

pub use identities::{check_identity, identity_registry, run_identities, IdentityRecord, IdentityTarget};
pub use report::{emit_report, render_report, ReportFormat, COLUMNS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    SuspectIdentity,
    SkippedInvalid,
    Nonconverged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SuspectIdentity => "SUSPECT_IDENTITY",
            Status::SkippedInvalid => "SKIPPED_INVALID",
            Status::Nonconverged => "NONCONVERGED",
        }
    }

    /// Statuses that make the CLI exit with 1.
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::SuspectIdentity)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OracleConfig {
    pub quad: QuadConfig,
    pub sum: SumConfig,
}

impl OracleConfig {
    /// A second, independent configuration: tighter quadrature and the
    /// other acceleration scheme for sums.
    pub fn alternate(&self) -> OracleConfig {
        let accel = match self.sum.accel {
            Accel::EmTail => Accel::AltCvz,
            _ => Accel::EmTail,
        };
        OracleConfig {
            quad: self.quad.tightened(),
            sum: SumConfig { accel, ..self.sum },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub family: String,
    pub variant: String,
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub a: i64,
    pub b: i64,
    pub closed_form: Option<RealScalar>,
    pub corollary: Option<RealScalar>,
    pub oracle: Option<RealScalar>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub status: Status,
    pub wall_time_ms: u64,
}

impl EvalReport {
    fn blank(family: Family, pr: Params, status: Status) -> EvalReport {
        EvalReport {
            family: family.tag.as_str().to_string(),
            variant: family.variant.as_str().to_string(),
            p: pr.p,
            q: pr.q,
            n: pr.n,
            a: pr.a.value(),
            b: pr.b.value(),
            closed_form: None,
            corollary: None,
            oracle: None,
            abs_err: None,
            rel_err: None,
            status,
            wall_time_ms: 0,
        }
    }
}

/// First-principles value of the left-hand side of a family.
pub fn oracle_value(family: Family, params: Params, cfg: &OracleConfig) -> Result<RealScalar> {
    let desc = Integrand::Family { family, params };
    match family.tag {
        FamilyTag::IntInf1 | FamilyTag::IntInf2 => quad_halfline(&desc, &cfg.quad),
        FamilyTag::IntUnit1 | FamilyTag::IntUnit2 => quad_unit(&desc, &cfg.quad),
        FamilyTag::EulerH | FamilyTag::EulerO => sum_euler(family, params, &cfg.sum),
        FamilyTag::BbpH | FamilyTag::BbpO => sum_bbp(family, params, &cfg.sum),
    }
}

fn rel(diff: f64, scale: f64) -> f64 {
    diff / scale.abs().max(1.0)
}

/// Status of a closed form against an oracle, with a rerun of the oracle
/// under the alternate configuration when they disagree by more than
/// `10·tol`: a stable disagreement marks the identity as suspect. A gap
/// inside the numerical error bars is an unattainable tolerance and fails.
fn judge(
    closed: RealScalar,
    oracle: RealScalar,
    tol: f64,
    rerun: impl FnOnce() -> Result<RealScalar>,
) -> Status {
    let gap = (closed.value - oracle.value).abs();
    let r = rel(gap, closed.value);
    if r <= tol {
        return Status::Pass;
    }
    if r <= 10.0 * tol || gap <= 10.0 * (closed.err + oracle.err) {
        return Status::Fail;
    }
    match rerun() {
        Ok(again) if rel((again.value - oracle.value).abs(), closed.value) <= tol => Status::SuspectIdentity,
        _ => Status::Fail,
    }
}

pub fn compare_case(family: Family, params: Params, tol: f64, cfg: &OracleConfig) -> EvalReport {
    let start = Instant::now();
    if validate_params(family, params).reason.is_some() {
        return EvalReport::blank(family, params, Status::SkippedInvalid);
    }
    let mut rep = EvalReport::blank(family, params, Status::Fail);
    rep.corollary = if has_corollary(family) {
        eval_corollary(family, params).ok()
    } else {
        None
    };
    let closed = eval_theorem(family, params);
    let oracle = oracle_value(family, params, cfg);
    rep.status = match (&closed, &oracle) {
        (Ok(c), Ok(o)) => {
            let abs = (c.value - o.value).abs();
            rep.abs_err = Some(abs);
            rep.rel_err = Some(rel(abs, c.value));
            judge(*c, *o, tol, || oracle_value(family, params, &cfg.alternate()))
        }
        (Ok(_), Err(Error::NonConverged { .. })) => Status::Nonconverged,
        _ => Status::Fail,
    };
    rep.closed_form = closed.ok();
    rep.oracle = oracle.ok();
    rep.wall_time_ms = start.elapsed().as_millis() as u64;
    rep
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub families: Vec<Family>,
    pub p_max: u32,
    pub q_max: u32,
    pub n_max: u32,
    /// Optional cap on `p + q`, below `p_max + q_max`.
    pub pq_max: Option<u32>,
    pub tol: f64,
    pub oracle_cfg: OracleConfig,
    /// Worker count; `LERCHLAB_THREADS` or the rayon default when `None`.
    pub threads: Option<usize>,
}

impl SweepSpec {
    pub fn new(families: Vec<Family>, p_max: u32, q_max: u32, n_max: u32, tol: f64) -> Result<SweepSpec> {
        let spec = SweepSpec {
            families,
            p_max,
            q_max,
            n_max,
            pq_max: None,
            tol,
            oracle_cfg: OracleConfig::default(),
            threads: None,
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn check(&self) -> Result<()> {
        if self.p_max == 0 || self.q_max == 0 || self.n_max == 0 {
            return Err(Error::Usage("sweep bounds must be positive".into()));
        }
        if self.p_max + self.q_max > 12 {
            return Err(Error::Usage(format!("p_max + q_max = {} > 12", self.p_max + self.q_max)));
        }
        if self.n_max > 4 {
            return Err(Error::Usage(format!("n_max = {} > 4", self.n_max)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Usage(format!("tolerance {} is not positive", self.tol)));
        }
        if self.families.is_empty() {
            return Err(Error::Usage("no families selected".into()));
        }
        Ok(())
    }

    /// Lattice points in report order: family, p, q, n, a, b.
    pub fn points(&self) -> Vec<(Family, Params)> {
        let signs = [Sign::Minus, Sign::Plus];
        let mut out = Vec::new();
        for &f in &self.families {
            for p in 1..=self.p_max {
                for q in 1..=self.q_max {
                    if self.pq_max.is_some_and(|m| p + q > m) {
                        continue;
                    }
                    for n in 1..=self.n_max {
                        for a in signs {
                            for b in signs {
                                out.push((f, Params::new(p, q, n, a, b)));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    } else if let Ok(v) = std::env::var("LERCHLAB_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("LERCHLAB_THREADS=`{v}` is not a count")))?;
        builder = builder.num_threads(n.max(1));
    }
    builder
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<EvalReport>> {
    spec.check()?;
    let points = spec.points();
    let reports = pool(spec.threads)?.install(|| {
        points
            .par_iter()
            .map(|&(f, pr)| compare_case(f, pr, spec.tol, &spec.oracle_cfg))
            .collect()
    });
    Ok(reports)
}
