//! Exact rational coordinates.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// An exact rational number.
///
/// The wrapped [`BigRational`] is always reduced with a positive
/// denominator, so derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coord(BigRational);

impl Coord {
    pub fn zero() -> Self {
        Coord(BigRational::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Coord(BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds `num / den`. Returns `None` for a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Coord(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_rational(r: BigRational) -> Self {
        // `BigRational::new` reduces, but values built from raw parts may not be.
        Coord(BigRational::new(r.numer().clone(), r.denom().clone()))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn abs(&self) -> Self {
        Coord(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl From<i64> for Coord {
    fn from(v: i64) -> Self {
        Coord::from_int(v)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coord {
    type Err = Error;

    /// Accepts a decimal integer (`-12`) or a fraction (`3/4`, `-3/4`, `3/-4`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidCoord(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            let t = t.strip_prefix('+').unwrap_or(t);
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Coord(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::InvalidCoord(format!("{s} (zero denominator)")));
                }
                Ok(Coord(BigRational::new(num, den)))
            }
        }
    }
}

impl Add for &Coord {
    type Output = Coord;
    fn add(self, rhs: &Coord) -> Coord {
        Coord(&self.0 + &rhs.0)
    }
}

impl Sub for &Coord {
    type Output = Coord;
    fn sub(self, rhs: &Coord) -> Coord {
        Coord(&self.0 - &rhs.0)
    }
}

impl Mul for &Coord {
    type Output = Coord;
    fn mul(self, rhs: &Coord) -> Coord {
        Coord(&self.0 * &rhs.0)
    }
}

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-&self.0)
    }
}

impl Add for Coord {
    type Output = Coord;
    fn add(self, rhs: Coord) -> Coord {
        Coord(self.0 + rhs.0)
    }
}

impl Sub for Coord {
    type Output = Coord;
    fn sub(self, rhs: Coord) -> Coord {
        Coord(self.0 - rhs.0)
    }
}

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!("7".parse::<Coord>().unwrap(), Coord::from_int(7));
        assert_eq!("-7".parse::<Coord>().unwrap(), Coord::from_int(-7));
        assert_eq!("6/4".parse::<Coord>().unwrap(), Coord::ratio(3, 2).unwrap());
        assert_eq!(
            "3/-4".parse::<Coord>().unwrap(),
            Coord::ratio(-3, 4).unwrap()
        );
        assert_eq!("4/2".parse::<Coord>().unwrap().to_string(), "2");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1/0", "a", "1.5", "1/", "/2", "--1", "1 2"] {
            assert!(s.parse::<Coord>().is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn canonical_display() {
        assert_eq!(Coord::ratio(-6, 4).unwrap().to_string(), "-3/2");
        assert_eq!(Coord::ratio(6, -4).unwrap().to_string(), "-3/2");
        assert_eq!(Coord::ratio(0, -4).unwrap().to_string(), "0");
    }

    #[test]
    fn order_matches_rationals() {
        let a = Coord::ratio(1, 3).unwrap();
        let b = Coord::ratio(1, 2).unwrap();
        assert!(a < b);
        assert!(-&b < -&a);
    }
}
