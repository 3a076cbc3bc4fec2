use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// How the links spawned by one incidence column are weighted.
///
/// For a column with margin `n` and entries `c_i`, `c_j`, the pair `(i, j)`
/// receives `c_i * c_j / d` where `d` is:
///
/// | scheme                   | `d`         |
/// |--------------------------|-------------|
/// | `Full`                   | 1           |
/// | `FractionalMinusOne`     | `n - 1`     |
/// | `FractionalPlain`        | `n`         |
/// | `FractionalSquared`      | `n * n`     |
/// | `FractionalSelfAdjusted` | `n - c_i`   |
///
/// Only `FractionalMinusOne` gives every action a total weight of exactly one
/// for 0/1 matrices. `FractionalSelfAdjusted` extends that to citation counts
/// above one, at the price of an asymmetric network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountingScheme {
    Full,
    FractionalMinusOne,
    FractionalPlain,
    FractionalSquared,
    FractionalSelfAdjusted,
}

impl CountingScheme {
    pub const ALL: [CountingScheme; 5] = [
        CountingScheme::Full,
        CountingScheme::FractionalMinusOne,
        CountingScheme::FractionalPlain,
        CountingScheme::FractionalSquared,
        CountingScheme::FractionalSelfAdjusted,
    ];

    pub fn is_symmetric(self) -> bool {
        self != CountingScheme::FractionalSelfAdjusted
    }

    /// Denominator for a pair whose first unit has entry `entry` in a column with margin `margin`.
    #[inline]
    pub fn denominator(self, margin: u64, entry: u64) -> f64 {
        match self {
            CountingScheme::Full => 1.0,
            CountingScheme::FractionalMinusOne => (margin - 1) as f64,
            CountingScheme::FractionalPlain => margin as f64,
            CountingScheme::FractionalSquared => (margin as f64) * (margin as f64),
            CountingScheme::FractionalSelfAdjusted => {
                debug_assert!(entry < margin, "self-adjusted denominator vanished");
                (margin - entry) as f64
            }
        }
    }

    /// The command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            CountingScheme::Full => "full",
            CountingScheme::FractionalMinusOne => "fractional",
            CountingScheme::FractionalPlain => "frac-nk",
            CountingScheme::FractionalSquared => "frac-nk2",
            CountingScheme::FractionalSelfAdjusted => "frac-self",
        }
    }
}

impl fmt::Display for CountingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountingScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CountingScheme::ALL
            .into_iter()
            .find(|scheme| scheme.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown counting scheme `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for scheme in CountingScheme::ALL {
            assert_eq!(scheme.name().parse::<CountingScheme>().unwrap(), scheme);
        }
        assert!("fractional-ish".parse::<CountingScheme>().is_err());
    }

    #[test]
    fn denominators() {
        assert_eq!(CountingScheme::Full.denominator(5, 2), 1.0);
        assert_eq!(CountingScheme::FractionalMinusOne.denominator(5, 2), 4.0);
        assert_eq!(CountingScheme::FractionalPlain.denominator(5, 2), 5.0);
        assert_eq!(CountingScheme::FractionalSquared.denominator(5, 2), 25.0);
        assert_eq!(
            CountingScheme::FractionalSelfAdjusted.denominator(5, 2),
            3.0
        );
    }

    #[test]
    fn only_self_adjusted_is_asymmetric() {
        let asym: Vec<_> = CountingScheme::ALL
            .into_iter()
            .filter(|s| !s.is_symmetric())
            .collect();
        assert_eq!(asym, [CountingScheme::FractionalSelfAdjusted]);
    }
}
