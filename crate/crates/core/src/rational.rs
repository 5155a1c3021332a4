//! Exact rationals and their `num/den` text form.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// Arbitrary-precision rational used for every distance, weight and value.
pub type Rational = num_rational::BigRational;

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The reduced fraction `num / den`.
///
/// # Panics
///
/// Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` as a rational.
pub fn pow2(e: u32) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

/// Formats as `num/den`, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer. Whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| invalid(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(invalid(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

pub(crate) fn is_nonneg(r: &Rational) -> bool {
    !r.is_negative()
}

/// A nonnegative rational extended with `+inf`.
///
/// Distortion and thinness are ratios whose denominator may vanish while the
/// numerator does not; those cases are reported as [`Extended::Infinite`]
/// rather than as a large sentinel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(Rational),
    Infinite,
}

impl Extended {
    /// `num / den`, infinite when `den == 0 < num`; `None` for `0 / 0`.
    pub fn ratio(num: &Rational, den: &Rational) -> Option<Extended> {
        if den.is_zero() {
            if num.is_zero() {
                None
            } else {
                Some(Extended::Infinite)
            }
        } else {
            Some(Extended::Finite(num / den))
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(r) => Some(r),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinite)
    }

    /// `num/den` or `inf`.
    pub fn to_text(&self) -> String {
        match self {
            Extended::Finite(r) => format_rational(r),
            Extended::Infinite => String::from("inf"),
        }
    }

    pub fn parse(s: &str) -> Result<Extended> {
        match s.trim() {
            "inf" | "+inf" | "infinity" => Ok(Extended::Infinite),
            other => parse_rational(other).map(Extended::Finite),
        }
    }

    /// Lossy conversion for reporting.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        match self {
            Extended::Finite(r) => r.to_f64().unwrap_or(f64::NAN),
            Extended::Infinite => f64::INFINITY,
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::Infinite, Extended::Infinite) => Ordering::Equal,
            (Extended::Infinite, _) => Ordering::Greater,
            (_, Extended::Infinite) => Ordering::Less,
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Rational> for Extended {
    fn from(r: Rational) -> Self {
        Extended::Finite(r)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_with_explicit_denominator() {
        assert_eq!(format_rational(&frac(1, 3)), "1/3");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&frac(-4, 6)), "-2/3");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn extended_ordering_and_ratio() {
        assert!(Extended::Infinite > Extended::Finite(int(1_000_000)));
        assert_eq!(Extended::ratio(&int(0), &int(0)), None);
        assert_eq!(Extended::ratio(&int(2), &int(0)), Some(Extended::Infinite));
        assert_eq!(
            Extended::ratio(&int(2), &int(4)),
            Some(Extended::Finite(frac(1, 2)))
        );
        assert_eq!(Extended::parse("inf").unwrap(), Extended::Infinite);
    }
}
