//! Closed-form counts and bounds, evaluated exactly as printed.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{name} needs {arg} >= {min}, got {got}")]
pub struct DomainError {
    pub name: &'static str,
    pub arg: &'static str,
    pub min: i64,
    pub got: i64,
}

fn require(name: &'static str, arg: &'static str, min: i64, got: i64) -> Result<(), DomainError> {
    if got < min {
        return Err(DomainError {
            name,
            arg,
            min,
            got,
        });
    }
    Ok(())
}

/// Ways to write `i` as `a + b` with `3 <= a < b`: `⌊(i−5)/2⌋`.
pub fn partition_count(i: i64) -> Result<i64, DomainError> {
    require("partition_count", "i", 6, i)?;
    Ok((i - 5).div_euclid(2))
}

/// Which printed second factor to use in the two-chord count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `⌊(n−i+3)/2⌋`, the factor in the running text.
    Text,
    /// `⌊(n+i−3)/2⌋`, the factor in the remark.
    Remark,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Variant::Text),
            "remark" => Ok(Variant::Remark),
            _ => Err(format!("unknown variant {s:?} (expected text or remark)")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Text => "text",
            Variant::Remark => "remark",
        })
    }
}

/// `Σ_{i=7}^{n+1} ⌊(i−5)/2⌋ · f(n, i)`.
pub fn cycle_augmentation_formula(n: i64, variant: Variant) -> Result<i64, DomainError> {
    require("cycle_augmentation_formula", "n", 6, n)?;
    Ok((7..=n + 1)
        .map(|i| {
            let f = match variant {
                Variant::Text => (n - i + 3).div_euclid(2),
                Variant::Remark => (n + i - 3).div_euclid(2),
            };
            (i - 5).div_euclid(2) * f
        })
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnBounds {
    pub upper: i64,
    pub lower_printed: i64,
    pub lower_asymptotic: i64,
}

impl KnBounds {
    pub fn printed_consistent(&self) -> bool {
        self.lower_printed <= self.upper
    }
}

/// The three complete-graph expressions: `n−2`, `n−⌊(n−1)/7⌋+4`, `6⌊n/7⌋`.
pub fn kn_bound_formulas(n: i64) -> Result<KnBounds, DomainError> {
    require("kn_bound_formulas", "n", 8, n)?;
    Ok(KnBounds {
        upper: n - 2,
        lower_printed: n - (n - 1).div_euclid(7) + 4,
        lower_asymptotic: 6 * n.div_euclid(7),
    })
}

/// `n(n−1)/2 − (n−2)`.
pub fn general_upper_bound(n: i64) -> i64 {
    n * (n - 1) / 2 - (n - 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_examples() {
        assert_eq!(partition_count(10), Ok(2));
        assert_eq!(partition_count(7), Ok(1));
        assert_eq!(partition_count(6), Ok(0));
        assert!(partition_count(5).is_err());
    }

    #[test]
    fn two_chord_variants() {
        assert_eq!(cycle_augmentation_formula(6, Variant::Text), Ok(1));
        assert_eq!(cycle_augmentation_formula(6, Variant::Remark), Ok(5));
        assert!(cycle_augmentation_formula(5, Variant::Text).is_err());
    }

    #[test]
    fn complete_graph_bounds() {
        let b = kn_bound_formulas(8).unwrap();
        assert_eq!((b.upper, b.lower_printed, b.lower_asymptotic), (6, 11, 6));
        assert!(!b.printed_consistent());
        assert_eq!(kn_bound_formulas(28).unwrap().upper, 26);
        assert_eq!(kn_bound_formulas(14).unwrap().lower_asymptotic, 12);
        assert!(kn_bound_formulas(7).is_err());
    }
}
