//! Parameter validation and closed-form evaluation for the eight identity
//! families.

mod corollaries;
mod lemmas;
mod terms;
mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::Sign;

pub use corollaries::{eval_corollary, has_corollary};
pub use lemmas::{lemma3_value, lemma5_value};
pub use theorems::eval_theorem;

/// Largest `p + q` accepted anywhere.
pub const PQ_CAP: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyTag {
    IntInf1,
    IntInf2,
    IntUnit1,
    IntUnit2,
    EulerH,
    EulerO,
    BbpH,
    BbpO,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 8] = [
        FamilyTag::IntInf1,
        FamilyTag::IntInf2,
        FamilyTag::IntUnit1,
        FamilyTag::IntUnit2,
        FamilyTag::EulerH,
        FamilyTag::EulerO,
        FamilyTag::BbpH,
        FamilyTag::BbpO,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::IntInf1 => "INT_INF_1",
            FamilyTag::IntInf2 => "INT_INF_2",
            FamilyTag::IntUnit1 => "INT_UNIT_1",
            FamilyTag::IntUnit2 => "INT_UNIT_2",
            FamilyTag::EulerH => "EULER_H",
            FamilyTag::EulerO => "EULER_O",
            FamilyTag::BbpH => "BBP_H",
            FamilyTag::BbpO => "BBP_O",
        }
    }

    /// Lower-case, dash-separated spelling used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyTag::IntInf1 => "int-inf-1",
            FamilyTag::IntInf2 => "int-inf-2",
            FamilyTag::IntUnit1 => "int-unit-1",
            FamilyTag::IntUnit2 => "int-unit-2",
            FamilyTag::EulerH => "euler-h",
            FamilyTag::EulerO => "euler-o",
            FamilyTag::BbpH => "bbp-h",
            FamilyTag::BbpO => "bbp-o",
        }
    }

    pub fn has_variants(self) -> bool {
        matches!(self, FamilyTag::IntUnit1 | FamilyTag::IntUnit2)
    }

    /// Families whose integrand or summand is built on `x²`/odd denominators.
    pub fn is_odd_kind(self) -> bool {
        matches!(
            self,
            FamilyTag::IntInf2 | FamilyTag::IntUnit2 | FamilyTag::EulerO | FamilyTag::BbpO
        )
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyTag> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.as_str() == norm)
            .ok_or_else(|| Error::Usage(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    None,
    I,
    Ii,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::None => "none",
            Variant::I => "i",
            Variant::Ii => "ii",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.trim().to_ascii_lowercase().as_str() {
            "none" | "" => Ok(Variant::None),
            "i" | "1" => Ok(Variant::I),
            "ii" | "2" => Ok(Variant::Ii),
            _ => Err(Error::Usage(format!("unknown variant `{s}`"))),
        }
    }
}

/// An identity family, with the part selector for the `(0, 1)` integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    pub tag: FamilyTag,
    pub variant: Variant,
}

impl Family {
    pub fn new(tag: FamilyTag, variant: Variant) -> Result<Family> {
        let ok = if tag.has_variants() {
            variant != Variant::None
        } else {
            variant == Variant::None
        };
        if !ok {
            return Err(Error::Usage(format!("{tag} does not take variant `{variant}`")));
        }
        Ok(Family { tag, variant })
    }

    /// The family with its default variant (`i` where parts exist).
    pub fn plain(tag: FamilyTag) -> Family {
        let variant = if tag.has_variants() { Variant::I } else { Variant::None };
        Family { tag, variant }
    }

    /// Every family/variant combination, in sweep order.
    pub fn all() -> Vec<Family> {
        let mut out = Vec::new();
        for tag in FamilyTag::ALL {
            if tag.has_variants() {
                out.push(Family { tag, variant: Variant::I });
                out.push(Family { tag, variant: Variant::Ii });
            } else {
                out.push(Family { tag, variant: Variant::None });
            }
        }
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::None => write!(f, "{}", self.tag),
            v => write!(f, "{}({})", self.tag, v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    pub p: u32,
    pub q: u32,
    pub n: u32,
    pub a: Sign,
    pub b: Sign,
}

impl Params {
    pub fn new(p: u32, q: u32, n: u32, a: Sign, b: Sign) -> Params {
        Params { p, q, n, a, b }
    }

    /// Convenience constructor from integer signs; panics on values other than ±1.
    pub fn from_ints(p: u32, q: u32, n: u32, a: i64, b: i64) -> Params {
        let a = Sign::from_i64(a).expect("a must be ±1");
        let b = Sign::from_i64(b).expect("b must be ±1");
        Params { p, q, n, a, b }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={} q={} n={} a={} b={}",
            self.p, self.q, self.n, self.a, self.b
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Reason {
    Parity,
    ForcedSign,
    P1B1NeedsN1,
    Q1A1Divergent,
    Cap,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Parity => "PARITY",
            Reason::ForcedSign => "FORCED_SIGN",
            Reason::P1B1NeedsN1 => "P1_B1_NEEDS_N1",
            Reason::Q1A1Divergent => "Q1_A1_DIVERGENT",
            Reason::Cap => "CAP",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validity {
    pub ok: bool,
    pub reason: Option<Reason>,
}

impl Validity {
    pub const OK: Validity = Validity { ok: true, reason: None };

    fn fail(reason: Reason) -> Validity {
        Validity { ok: false, reason: Some(reason) }
    }
}

/// Checks the hypotheses of the family's identity. Total: never errors.
pub fn validate_params(family: Family, params: Params) -> Validity {
    let Params { p, q, n, a, b } = params;
    if p == 0 || q == 0 || n == 0 || p + q > PQ_CAP {
        return Validity::fail(Reason::Cap);
    }
    let forced = Sign::parity((p + q - 1) as i64);
    match family.tag {
        FamilyTag::IntUnit1 | FamilyTag::EulerH | FamilyTag::BbpH if (p + q) % 2 == 0 => {
            return Validity::fail(Reason::Parity);
        }
        FamilyTag::IntUnit2 | FamilyTag::BbpO if a != forced => {
            return Validity::fail(Reason::ForcedSign);
        }
        FamilyTag::EulerO if b != forced => return Validity::fail(Reason::ForcedSign),
        _ => {}
    }
    if q == 1 && a.is_plus() {
        return Validity::fail(Reason::Q1A1Divergent);
    }
    // the sign multiplying the polylog/harmonic argument whose p = 1 pole needs n = 1
    let pole_sign = match family.tag {
        FamilyTag::IntInf1 | FamilyTag::IntInf2 | FamilyTag::IntUnit1 | FamilyTag::IntUnit2 => {
            a.pow(n as i64) * b
        }
        _ => b,
    };
    if p == 1 && pole_sign.is_plus() && n != 1 {
        return Validity::fail(Reason::P1B1NeedsN1);
    }
    Validity::OK
}

pub(crate) fn require_valid(family: Family, params: Params) -> Result<()> {
    let v = validate_params(family, params);
    if v.ok {
        Ok(())
    } else {
        Err(Error::Validation(v))
    }
}

/// Exact `C(n, k)` as a float; inputs stay far below overflow under [`PQ_CAP`].
pub fn binom(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    num_integer::binomial(n as u64, k as u64) as f64
}

/// Exact `m!` as a float.
pub(crate) fn factorial(m: u32) -> f64 {
    (1..=m as u64).product::<u64>() as f64
}
