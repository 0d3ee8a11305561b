use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::Parameter(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    /// `(-1)^k`.
    pub fn parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn f(self) -> f64 {
        self.value() as f64
    }

    pub fn pow(self, k: i64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(k),
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "1" | "+1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::Usage(format!("expected a sign ±1, got {other:?}"))),
        }
    }
}

/// Positive rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Rational> {
        if num == 0 || den == 0 {
            return Err(Error::Domain(format!("rational {num}/{den} must be positive")));
        }
        let g = num.gcd(&den);
        Ok(Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u64) -> Result<Rational> {
        Rational::new(n, 1)
    }

    pub fn one() -> Rational {
        Rational { num: 1, den: 1 }
    }

    pub fn half() -> Rational {
        Rational { num: 1, den: 2 }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_one(self) -> bool {
        self.num == 1 && self.den == 1
    }

    /// `0 < self <= 1`.
    pub fn in_unit(self) -> bool {
        self.num <= self.den
    }

    pub fn halve(self) -> Rational {
        Rational::new(self.num, 2 * self.den).expect("positive")
    }

    /// `(self + 1) / 2`.
    pub fn half_shift(self) -> Rational {
        Rational::new(self.num + self.den, 2 * self.den).expect("positive")
    }

    /// `1 - self`, defined for `self < 1`.
    pub fn complement(self) -> Result<Rational> {
        if self.num >= self.den {
            return Err(Error::Domain(format!("1 - {self} is not positive")));
        }
        Rational::new(self.den - self.num, self.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `num/den` or a bare integer; decimals are rejected.
    fn from_str(s: &str) -> Result<Rational> {
        let bad = || Error::Usage(format!("expected an exact rational num/den, got {s:?}"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
        if !digits(n) || !digits(d) {
            return Err(bad());
        }
        let n: u64 = n.parse().map_err(|_| bad())?;
        let d: u64 = d.parse().map_err(|_| bad())?;
        Rational::new(n, d)
    }
}

/// Argument of the Lerch transcendent `Φ(c, q, α)` for `c = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LerchPoint {
    pub c: Sign,
    pub q: u32,
    pub alpha: Rational,
}

impl LerchPoint {
    pub fn new(c: Sign, q: u32, alpha: Rational) -> Result<LerchPoint> {
        if !alpha.in_unit() {
            return Err(Error::Domain(format!("alpha = {alpha} must lie in (0, 1]")));
        }
        if q == 0 && !alpha.is_one() {
            return Err(Error::Domain(format!(
                "q = 0 is only defined at alpha = 1 (got {alpha})"
            )));
        }
        Ok(LerchPoint { c, q, alpha })
    }
}

/// A real value with an attached absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealScalar {
    pub value: f64,
    pub err: f64,
}

impl RealScalar {
    pub fn new(value: f64, err: f64) -> RealScalar {
        debug_assert!(value.is_finite(), "non-finite value {value}");
        RealScalar {
            value,
            err: err.abs(),
        }
    }

    pub fn exact(value: f64) -> RealScalar {
        RealScalar::new(value, 0.0)
    }

    pub fn zero() -> RealScalar {
        RealScalar::exact(0.0)
    }

    pub fn scale(self, c: f64) -> RealScalar {
        RealScalar::new(c * self.value, c.abs() * self.err)
    }

    pub fn rel_err(self) -> f64 {
        if self.value == 0.0 {
            self.err
        } else {
            self.err / self.value.abs()
        }
    }
}

impl Add for RealScalar {
    type Output = RealScalar;
    fn add(self, rhs: RealScalar) -> RealScalar {
        RealScalar::new(self.value + rhs.value, self.err + rhs.err)
    }
}

impl Sub for RealScalar {
    type Output = RealScalar;
    fn sub(self, rhs: RealScalar) -> RealScalar {
        RealScalar::new(self.value - rhs.value, self.err + rhs.err)
    }
}

impl Neg for RealScalar {
    type Output = RealScalar;
    fn neg(self) -> RealScalar {
        RealScalar::new(-self.value, self.err)
    }
}

impl Mul for RealScalar {
    type Output = RealScalar;
    fn mul(self, rhs: RealScalar) -> RealScalar {
        RealScalar::new(
            self.value * rhs.value,
            self.value.abs() * rhs.err + rhs.value.abs() * self.err + self.err * rhs.err,
        )
    }
}

impl Mul<f64> for RealScalar {
    type Output = RealScalar;
    fn mul(self, rhs: f64) -> RealScalar {
        self.scale(rhs)
    }
}

impl std::iter::Sum for RealScalar {
    fn sum<I: Iterator<Item = RealScalar>>(iter: I) -> RealScalar {
        iter.fold(RealScalar::zero(), |a, b| a + b)
    }
}
