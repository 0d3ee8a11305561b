//! Special functions: Lerch transcendent at `c = ±1` and its reductions.

mod polylog;
mod tables;
mod types;
mod zeta;

pub use polylog::{polylog, polylog_re_recip};
pub use tables::{
    bernoulli_numbers, euler_numbers, BernoulliTable, EulerNumberTable, MAX_BERNOULLI_M,
    MAX_EULER_M,
};
pub use types::{LerchPoint, Rational, RealScalar, Sign};
pub use zeta::{
    digamma, hurwitz_zeta, lerch_phi, reduced_constant, theta, ConstKind, EULER_GAMMA,
};

pub(crate) use polylog::{li_exp, re_li_recip_mu};
pub(crate) use tables::{bernoulli_f64, euler_f64};
pub(crate) use zeta::{phi_fp, reduced_fp};
