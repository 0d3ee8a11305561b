//! Command-line front end.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::identities::{check_identity, identity_registry};
use super::{
    emit_report, oracle_value, OracleConfig, ReportFormat, Status, SweepSpec,
};
use crate::closedform::{eval_corollary, eval_theorem, has_corollary, Family, FamilyTag, Params, Variant};
use crate::error::{Error, Result};
use crate::oracle::{Accel, QuadConfig, SumConfig};
use crate::specfun::{
    digamma, hurwitz_zeta, lerch_phi, polylog, reduced_constant, theta, ConstKind, LerchPoint,
    Rational, RealScalar, Sign,
};

#[derive(Debug, Parser)]
#[command(name = "lerchlab", version, about = "Lerch-transcendent closed forms and their numerical oracle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function.
    Specfun(SpecfunArgs),
    /// Evaluate one closed form (and its corollary, if any).
    Eval(CaseArgs),
    /// Evaluate one left-hand side numerically.
    Oracle(OracleArgs),
    /// Sweep a parameter lattice and report.
    Verify(VerifyArgs),
    /// Check the named-identity registry.
    Identities(OutArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SpecfunName {
    Phi,
    Theta,
    Hurwitz,
    Digamma,
    Zeta,
    Eta,
    Lambda,
    Beta,
    Polylog,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SpecfunArgs {
    pub function: SpecfunName,
    /// Sign argument c of Φ and Θ.
    #[arg(short, default_value_t = 1)]
    pub c: i64,
    /// Order q of Φ, Θ and the Hurwitz zeta.
    #[arg(short, default_value_t = 1)]
    pub q: u32,
    /// Shift α of Φ, ζ(q, α) and ψ, as num/den.
    #[arg(long, default_value = "1")]
    pub alpha: String,
    /// Argument s of ζ, η, λ, β, the order of Li, or the numerator of Θ.
    #[arg(short, default_value_t = 1)]
    pub s: u64,
    /// Denominator r of Θ.
    #[arg(short, default_value_t = 1)]
    pub r: u64,
    /// Argument of Li as [-]num/den.
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub x: String,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct CaseArgs {
    #[arg(long)]
    pub family: String,
    #[arg(short)]
    pub p: u32,
    #[arg(short)]
    pub q: u32,
    #[arg(short, default_value_t = 1)]
    pub n: u32,
    #[arg(short)]
    pub a: i64,
    #[arg(short)]
    pub b: i64,
    /// Part i or ii of the unit-interval integrals.
    #[arg(long)]
    pub variant: Option<String>,
}

#[derive(Debug, Args)]
pub struct TuneArgs {
    #[arg(long)]
    pub max_terms: Option<u64>,
    #[arg(long)]
    pub quad_tol: Option<f64>,
    /// none, alt-cvz or em-tail
    #[arg(long)]
    pub accel: Option<String>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[command(flatten)]
    pub tune: TuneArgs,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    #[arg(long, default_value = "json")]
    pub format: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Family to sweep, repeatable; all when absent.
    #[arg(long)]
    pub family: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub pmax: u32,
    #[arg(long, default_value_t = 3)]
    pub qmax: u32,
    #[arg(long, default_value_t = 2)]
    pub nmax: u32,
    /// Cap on p + q.
    #[arg(long)]
    pub pqmax: Option<u32>,
    /// Restrict the unit-interval families to part i or ii.
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub tune: TuneArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

fn sign(v: i64) -> Result<Sign> {
    Sign::from_i64(v).map_err(|_| Error::Usage(format!("sign must be 1 or -1, got {v}")))
}

/// Families named on the command line; a bare unit-integral name selects
/// both parts.
fn families(names: &[String], variant: Option<&str>) -> Result<Vec<Family>> {
    if names.is_empty() {
        return Ok(Family::all());
    }
    let mut out = Vec::new();
    for name in names {
        let tag: FamilyTag = name.parse()?;
        match (tag.has_variants(), variant) {
            (true, Some(v)) => out.push(Family::new(tag, v.parse()?)?),
            (true, None) => {
                out.push(Family::new(tag, Variant::I)?);
                out.push(Family::new(tag, Variant::Ii)?);
            }
            (false, _) => out.push(Family::plain(tag)),
        }
    }
    Ok(out)
}

impl CaseArgs {
    fn resolve(&self) -> Result<(Family, Params)> {
        let tag: FamilyTag = self.family.parse()?;
        let variant = match (&self.variant, tag.has_variants()) {
            (Some(v), _) => v.parse()?,
            (None, true) => Variant::I,
            (None, false) => Variant::None,
        };
        let family = Family::new(tag, variant)?;
        Ok((family, Params::new(self.p, self.q, self.n, sign(self.a)?, sign(self.b)?)))
    }
}

impl TuneArgs {
    fn config(&self) -> Result<OracleConfig> {
        let d = OracleConfig::default();
        let quad = QuadConfig::new(self.quad_tol.unwrap_or(d.quad.abs_tol), d.quad.max_level)
            .map_err(|e| Error::Usage(e.to_string()))?;
        let accel: Accel = match &self.accel {
            Some(s) => s.parse()?,
            None => d.sum.accel,
        };
        let sum = SumConfig::new(self.max_terms.unwrap_or(d.sum.max_terms), accel, d.sum.tail_order)
            .map_err(|e| Error::Usage(e.to_string()))?;
        Ok(OracleConfig { quad, sum })
    }
}

fn show(label: &str, v: RealScalar) -> Result<()> {
    Ok(writeln!(io::stdout().lock(), "{label} = {} ± {:.1e}", v.value, v.err)?)
}

fn signed_rational(s: &str) -> Result<f64> {
    let (neg, body) = match s.trim().strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.trim()),
    };
    let v = body.parse::<Rational>()?.value();
    Ok(if neg { -v } else { v })
}

fn run_specfun(a: &SpecfunArgs) -> Result<i32> {
    let alpha: Rational = a.alpha.parse()?;
    let s = u32::try_from(a.s).map_err(|_| Error::Usage("s too large".into()))?;
    let v = match a.function {
        SpecfunName::Phi => lerch_phi(LerchPoint::new(sign(a.c)?, a.q, alpha)?)?,
        SpecfunName::Theta => theta(sign(a.c)?, a.q, a.s, a.r)?,
        SpecfunName::Hurwitz => hurwitz_zeta(a.q, alpha)?,
        SpecfunName::Digamma => digamma(alpha),
        SpecfunName::Zeta => reduced_constant(ConstKind::Zeta, s)?,
        SpecfunName::Eta => reduced_constant(ConstKind::Eta, s)?,
        SpecfunName::Lambda => reduced_constant(ConstKind::Lambda, s)?,
        SpecfunName::Beta => reduced_constant(ConstKind::Beta, s)?,
        SpecfunName::Polylog => polylog(s, signed_rational(&a.x)?)?,
    };
    writeln!(io::stdout().lock(), "{} ± {:.1e}", v.value, v.err)?;
    Ok(0)
}

fn run_eval(a: &CaseArgs) -> Result<i32> {
    let (family, params) = a.resolve()?;
    show("theorem", eval_theorem(family, params)?)?;
    if has_corollary(family) {
        show("corollary", eval_corollary(family, params)?)?;
    }
    Ok(0)
}

fn run_oracle(a: &OracleArgs) -> Result<i32> {
    let (family, params) = a.case.resolve()?;
    show("oracle", oracle_value(family, params, &a.tune.config()?)?)?;
    Ok(0)
}

fn exit_code(reports: &[super::EvalReport]) -> i32 {
    if reports.iter().any(|r| r.status.is_failure()) {
        1
    } else {
        0
    }
}

fn run_verify(a: &VerifyArgs) -> Result<i32> {
    let format: ReportFormat = a.out.format.parse()?;
    let mut spec = SweepSpec::new(families(&a.family, a.variant.as_deref())?, a.pmax, a.qmax, a.nmax, a.tol)?;
    spec.pq_max = a.pqmax;
    spec.oracle_cfg = a.tune.config()?;
    let reports = super::run_sweep(&spec)?;
    emit_report(&reports, format, a.out.out.as_deref())?;
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    eprintln!(
        "{} cases: {} pass, {} fail, {} suspect, {} nonconverged, {} invalid",
        reports.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::SuspectIdentity),
        count(Status::Nonconverged),
        count(Status::SkippedInvalid),
    );
    Ok(exit_code(&reports))
}

fn run_identities_cmd(a: &OutArgs) -> Result<i32> {
    let format: ReportFormat = a.format.parse()?;
    let cfg = OracleConfig::default();
    let mut reports = Vec::new();
    for rec in identity_registry() {
        let rep = check_identity(&rec, &cfg);
        eprintln!("{:<18} {:<18} {}", rec.name, rec.expected, rep.status.as_str());
        reports.push(rep);
    }
    emit_report(&reports, format, a.out.as_deref())?;
    Ok(exit_code(&reports))
}

/// Runs a parsed command; the result is the process exit code.
pub fn run(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Specfun(a) => run_specfun(a),
        Command::Eval(a) => run_eval(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Verify(a) => run_verify(a),
        Command::Identities(a) => run_identities_cmd(a),
    }
}

/// Exit code for an error: 2 for bad input, 1 otherwise.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Parameter(_) | Error::Validation(_) | Error::Domain(_) => 2,
        _ => 1,
    }
}
