//! Exact Bernoulli and Euler numbers.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MAX_BERNOULLI_M: usize = 64;
pub const MAX_EULER_M: usize = 32;

/// `B_0 .. B_{2M}` as exact rationals, with `B_1 = -1/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    pub entries: Vec<BigRational>,
}

/// `E_0 .. E_{2M}` as exact integers (secant numbers with signs).
#[derive(Debug, Clone, PartialEq)]
pub struct EulerNumberTable {
    pub entries: Vec<BigInt>,
}

impl BernoulliTable {
    pub fn get(&self, k: usize) -> &BigRational {
        &self.entries[k]
    }
}

impl EulerNumberTable {
    pub fn get(&self, k: usize) -> &BigInt {
        &self.entries[k]
    }
}

fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); m + 1];
    for k in 1..=m {
        row[k] = &row[k - 1] * BigInt::from(m - k + 1) / BigInt::from(k);
    }
    row
}

fn full_bernoulli() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let top = 2 * MAX_BERNOULLI_M;
        let mut b: Vec<BigRational> = Vec::with_capacity(top + 1);
        b.push(BigRational::one());
        for m in 1..=top {
            // sum_{k=0}^{m} C(m+1, k) B_k = 0
            let row = binomial_row(m + 1);
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(row[k].clone()) * bk;
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        b
    })
}

fn full_euler() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let top = 2 * MAX_EULER_M;
        let mut e = vec![BigInt::zero(); top + 1];
        e[0] = BigInt::one();
        for n in 1..=MAX_EULER_M {
            // sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0
            let row = binomial_row(2 * n);
            let mut acc = BigInt::zero();
            for k in 0..n {
                acc += &row[2 * k] * &e[2 * k];
            }
            e[2 * n] = -acc;
        }
        e
    })
}

pub fn bernoulli_numbers(m: usize) -> Result<BernoulliTable> {
    if m == 0 || m > MAX_BERNOULLI_M {
        return Err(Error::Parameter(format!(
            "Bernoulli table size M = {m} outside 1..={MAX_BERNOULLI_M}"
        )));
    }
    Ok(BernoulliTable {
        entries: full_bernoulli()[..=2 * m].to_vec(),
    })
}

pub fn euler_numbers(m: usize) -> Result<EulerNumberTable> {
    if m > MAX_EULER_M {
        return Err(Error::Parameter(format!(
            "Euler table size M = {m} outside 0..={MAX_EULER_M}"
        )));
    }
    Ok(EulerNumberTable {
        entries: full_euler()[..=2 * m].to_vec(),
    })
}

/// `B_k` as a double, `k <= 128`.
pub fn bernoulli_f64(k: usize) -> f64 {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    CACHE.get_or_init(|| {
        full_bernoulli()
            .iter()
            .map(|b| b.to_f64().expect("finite"))
            .collect()
    })[k]
}

/// `E_k` as a double, `k <= 64`.
pub fn euler_f64(k: usize) -> f64 {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    CACHE.get_or_init(|| full_euler().iter().map(|e| e.to_f64().expect("finite")).collect())[k]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_small_values() {
        let t = bernoulli_numbers(1).unwrap();
        assert_eq!(t.entries.len(), 3);
        assert_eq!(*t.get(0), rat(1, 1));
        assert_eq!(*t.get(1), rat(-1, 2));
        assert_eq!(*t.get(2), rat(1, 6));
        let t = bernoulli_numbers(2).unwrap();
        assert_eq!(*t.get(4), rat(-1, 30));
        let t = bernoulli_numbers(6).unwrap();
        assert_eq!(*t.get(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_invariants() {
        let t = bernoulli_numbers(MAX_BERNOULLI_M).unwrap();
        for j in 1..MAX_BERNOULLI_M {
            assert!(t.get(2 * j + 1).is_zero(), "B_{} != 0", 2 * j + 1);
        }
        // recurrence, checked independently with a fresh binomial row
        for m in 1..40usize {
            let row = binomial_row(m + 1);
            let s: BigRational = (0..=m)
                .map(|k| BigRational::from_integer(row[k].clone()) * t.get(k))
                .sum();
            assert!(s.is_zero(), "recurrence fails at m = {m}");
        }
    }

    #[test]
    fn euler_small_values() {
        let t = euler_numbers(0).unwrap();
        assert_eq!(t.entries, vec![BigInt::one()]);
        let t = euler_numbers(4).unwrap();
        let want: Vec<i64> = vec![1, 0, -1, 0, 5, 0, -61, 0, 1385];
        let got: Vec<i64> = t.entries.iter().map(|e| e.to_i64().unwrap()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn table_ranges() {
        assert!(bernoulli_numbers(0).is_err());
        assert!(bernoulli_numbers(65).is_err());
        assert!(euler_numbers(33).is_err());
        assert!(euler_numbers(32).is_ok());
    }

    #[test]
    fn float_views() {
        assert_eq!(bernoulli_f64(2), 1.0 / 6.0);
        assert_eq!(euler_f64(6), -61.0);
    }
}
