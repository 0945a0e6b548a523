//! Exact non-negative fractions for thresholds and toughness values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio as NumRatio;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// A reduced non-negative fraction. Always displayed as `p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ratio(NumRatio<u64>);

impl Ratio {
    /// Panics when `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        Ratio(NumRatio::new(num, den))
    }

    pub fn integer(n: u64) -> Self {
        Ratio(NumRatio::from_integer(n))
    }

    /// The threshold `k + 1/2`.
    pub fn k_plus_half(k: u32) -> Self {
        Ratio::new(2 * k as u64 + 1, 2)
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    /// `count > self * size`, evaluated without rounding.
    pub fn exceeded_by(&self, count: usize, size: usize) -> bool {
        count as u128 * self.denom() as u128 > self.numer() as u128 * size as u128
    }

    /// Compares `a / b` with `self` for positive `b`.
    pub fn cmp_fraction(&self, a: u64, b: u64) -> Ordering {
        (a as u128 * self.denom() as u128).cmp(&(self.numer() as u128 * b as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts `p/q` with `p > 0` and `q > 0`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidRatio(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        if p == 0 || q == 0 {
            return Err(bad());
        }
        Ok(Ratio::new(p, q))
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
