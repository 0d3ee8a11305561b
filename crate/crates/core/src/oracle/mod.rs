//! Numerical oracles: quadrature of the raw integrands and accelerated
//! summation of the raw series.

mod accel;
mod harmonic;
mod integrals;
mod quad;
mod series;
mod sums;

pub use accel::{accel_alternating, CVZ_DEFAULT_N};
pub use harmonic::{gen_harmonic, harmonic_cache, HarmonicCache, HarmonicKind};
pub use integrals::{pv_polylog_re, quad_halfline, quad_unit, Integrand};
pub use quad::{integrate_unit, QuadConfig};
pub use series::{boole_tail, em_tail, PowerLog, Smooth, Term};
pub use sums::{sum_bbp, sum_estimate, sum_euler, Accel, SumConfig, SUM_TARGET};
