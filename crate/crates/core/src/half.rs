//! Exact half-integer arithmetic for scores and significance levels.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A value on the half-integer grid, stored as twice its value.
///
/// Midranks of tied groups are always multiples of one half, so every
/// pairwise score and every meaningful significance level fits here without
/// rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfUnit(i64);

impl HalfUnit {
    pub const ZERO: HalfUnit = HalfUnit(0);
    pub const HALF: HalfUnit = HalfUnit(1);

    pub const fn from_twice(twice: i64) -> Self {
        HalfUnit(twice)
    }

    pub const fn from_int(value: i64) -> Self {
        HalfUnit(2 * value)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn abs(self) -> Self {
        HalfUnit(self.0.abs())
    }

    /// Converts a float that must lie exactly on the half-integer grid.
    pub fn try_from_f64(value: f64) -> Result<Self, Error> {
        let twice = value * 2.0;
        if !twice.is_finite() || twice.fract() != 0.0 || twice.abs() > i64::MAX as f64 / 2.0 {
            return Err(Error::OffGrid(value.to_string()));
        }
        Ok(HalfUnit(twice as i64))
    }
}

impl fmt::Display for HalfUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / 2;
        if self.0 % 2 == 0 {
            write!(f, "{whole}")
        } else if self.0 < 0 && whole == 0 {
            f.write_str("-0.5")
        } else {
            write!(f, "{whole}.5")
        }
    }
}

impl FromStr for HalfUnit {
    type Err = Error;

    /// Accepts `12`, `12.5`, `12.50`, `-3.5`; rejects anything off the half grid.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let off_grid = || Error::OffGrid(s.to_string());
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(off_grid());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(off_grid());
        }
        let whole: i64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| off_grid())?
        };
        let frac = frac_part.trim_end_matches('0');
        let half = match frac {
            "" => 0,
            "5" => 1,
            _ => return Err(off_grid()),
        };
        let twice = whole
            .checked_mul(2)
            .and_then(|w| w.checked_add(half))
            .ok_or_else(off_grid)?;
        Ok(HalfUnit(if neg { -twice } else { twice }))
    }
}

impl Add for HalfUnit {
    type Output = HalfUnit;
    fn add(self, rhs: HalfUnit) -> HalfUnit {
        HalfUnit(self.0 + rhs.0)
    }
}

impl Sub for HalfUnit {
    type Output = HalfUnit;
    fn sub(self, rhs: HalfUnit) -> HalfUnit {
        HalfUnit(self.0 - rhs.0)
    }
}

impl Neg for HalfUnit {
    type Output = HalfUnit;
    fn neg(self) -> HalfUnit {
        HalfUnit(-self.0)
    }
}

impl std::iter::Sum for HalfUnit {
    fn sum<I: Iterator<Item = HalfUnit>>(iter: I) -> HalfUnit {
        HalfUnit(iter.map(|h| h.0).sum())
    }
}

// JSON carries plain numbers: 3 or 1.5.
impl Serialize for HalfUnit {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0 % 2 == 0 {
            serializer.serialize_i64(self.0 / 2)
        } else {
            serializer.serialize_f64(self.to_f64())
        }
    }
}

impl<'de> Deserialize<'de> for HalfUnit {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = f64::deserialize(deserializer)?;
        HalfUnit::try_from_f64(v).map_err(serde::de::Error::custom)
    }
}
