//! Closed-form evaluation of generalized polylogarithmic integrals, Euler sums
//! and BBP-type series in terms of the Lerch transcendent, together with a
//! first-principles numerical oracle that checks every identity.
//!
//! The crate is split into four layers:
//!
//! * [`specfun`]: Lerch transcendent at `c = ±1`, Hurwitz zeta, digamma,
//!   polylogarithm and the Dirichlet-type constants built on them.
//! * [`closedform`]: parameter validation and the eight theorem families with
//!   their sign-specialized corollaries.
//! * [`oracle`]: tanh-sinh quadrature with principal-value handling,
//!   generalized harmonic prefixes and accelerated summation.
//! * [`harness`]: case comparison, lattice sweeps, the named identity registry
//!   and JSON/CSV reports.

pub mod closedform;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod specfun;

pub use error::{Error, Result};
pub use specfun::{LerchPoint, Rational, RealScalar, Sign};
