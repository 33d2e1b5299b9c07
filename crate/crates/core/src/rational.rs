//! Exact rationals for every statistic, bound and threshold.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Significant digits used by [`ExactRational::to_decimal`].
pub const DECIMAL_DIGITS: usize = 12;

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

/// `num/den` in lowest terms.
pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<ExactRational> {
    ExactRational::new(num, den)
}

impl ExactRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRational(BigRational::new(num.into(), den)))
    }

    /// Like [`ExactRational::new`] for a denominator known to be non-zero.
    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        ExactRational::new(num, den).expect("non-zero denominator")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(ExactRational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, exp: i32) -> Self {
        ExactRational(self.0.pow(exp))
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Decimal rendering with [`DECIMAL_DIGITS`] significant digits
    /// (round half up). For display only.
    pub fn to_decimal(&self) -> String {
        self.to_decimal_digits(DECIMAL_DIGITS)
    }

    pub fn to_decimal_digits(&self, digits: usize) -> String {
        assert!(digits > 0);
        if self.is_zero() {
            return "0".to_string();
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let num = self.numer().magnitude().clone();
        let den = self.denom().magnitude().clone();

        // exponent e with 10^e <= |x| < 10^(e+1)
        let ten = BigUint::from(10u32);
        let mut exp = num.to_string().len() as i64 - den.to_string().len() as i64;
        let at_least = |e: i64| -> bool {
            if e >= 0 {
                num >= &den * ten.pow(e as u32)
            } else {
                &num * ten.pow((-e) as u32) >= den
            }
        };
        while !at_least(exp) {
            exp -= 1;
        }
        while at_least(exp + 1) {
            exp += 1;
        }

        let shift = digits as i64 - 1 - exp;
        let (n, d) = if shift >= 0 {
            (&num * ten.pow(shift as u32), den.clone())
        } else {
            (num.clone(), &den * ten.pow((-shift) as u32))
        };
        let (q, r) = n.div_rem(&d);
        let mut mantissa = if &r * 2u32 >= d { q + 1u32 } else { q };
        if mantissa.to_string().len() > digits {
            mantissa /= 10u32;
            exp += 1;
        }
        let raw = mantissa.to_string();

        let body = if (-7..digits as i64).contains(&exp) {
            if exp >= 0 {
                let split = exp as usize + 1;
                let (int, frac) = raw.split_at(split);
                let frac = frac.trim_end_matches('0');
                if frac.is_empty() {
                    int.to_string()
                } else {
                    format!("{int}.{frac}")
                }
            } else {
                let zeros = "0".repeat((-exp - 1) as usize);
                format!("0.{zeros}{}", raw.trim_end_matches('0'))
            }
        } else {
            let (lead, rest) = raw.split_at(1);
            let rest = rest.trim_end_matches('0');
            if rest.is_empty() {
                format!("{lead}e{exp}")
            } else {
                format!("{lead}.{rest}e{exp}")
            }
        };
        format!("{sign}{body}")
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        ExactRational(value)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactRational {
            fn from(n: $t) -> Self {
                ExactRational::integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, u128, usize, BigInt);

impl From<BigUint> for ExactRational {
    fn from(n: BigUint) -> Self {
        ExactRational::integer(BigInt::from_biguint(Sign::Plus, n))
    }
}

impl fmt::Display for ExactRational {
    /// Always `num/den`, integers included.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `num/den` or a bare integer, surrounding whitespace ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg} in rational `{s}`"),
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| bad("bad denominator"))?;
        ExactRational::new(num, den)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div<&ExactRational> for &ExactRational {
    type Output = ExactRational;
    /// Panics on division by zero; see [`ExactRational::checked_div`].
    fn div(self, rhs: &ExactRational) -> ExactRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<ExactRational> for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: ExactRational) -> ExactRational {
        &self / &rhs
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

/// `rat_cmp`, `rat_add`, `rat_sub`, `rat_mul` as free functions.
pub fn rat_cmp(a: &ExactRational, b: &ExactRational) -> std::cmp::Ordering {
    a.cmp(b)
}

pub fn rat_add(a: &ExactRational, b: &ExactRational) -> ExactRational {
    a + b
}

pub fn rat_sub(a: &ExactRational, b: &ExactRational) -> ExactRational {
    a - b
}

pub fn rat_mul(a: &ExactRational, b: &ExactRational) -> ExactRational {
    a * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        rat(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(q(26, 12).to_string(), "13/6");
        assert_eq!(q(3, -2).to_string(), "-3/2");
        assert_eq!(q(211, 60).to_string(), "211/60");
        assert_eq!(q(17, 1).to_string(), "17/1");
        assert_eq!(rat(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        assert!(q(13, 6) < q(11, 4));
        assert_eq!(&q(3, 2) * &q(7, 3), q(7, 2));
        assert_eq!(&q(211, 60) + &q(181, 120), q(201, 40));
        assert_eq!(&q(1, 2) - &q(1, 3), q(1, 6));
        assert_eq!(rat_cmp(&q(1, 2), &q(2, 4)), std::cmp::Ordering::Equal);
    }

    #[test]
    fn parsing() {
        assert_eq!("13/6".parse::<ExactRational>().unwrap(), q(13, 6));
        assert_eq!(" 4 / -8 ".parse::<ExactRational>().unwrap(), q(-1, 2));
        assert_eq!("5".parse::<ExactRational>().unwrap(), q(5, 1));
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("x/2".parse::<ExactRational>().is_err());
        let json = serde_json::to_string(&q(13, 6)).unwrap();
        assert_eq!(json, "\"13/6\"");
        assert_eq!(serde_json::from_str::<ExactRational>(&json).unwrap(), q(13, 6));
    }

    #[test]
    fn decimals() {
        assert_eq!(q(13, 6).to_decimal(), "2.16666666667");
        assert_eq!(q(211, 60).to_decimal(), "3.51666666667");
        assert_eq!(q(17, 1).to_decimal(), "17");
        assert_eq!(q(-1, 3).to_decimal(), "-0.333333333333");
        assert_eq!(q(1, 1000).to_decimal(), "0.001");
        assert_eq!(q(2, 3).to_decimal_digits(3), "0.667");
        assert_eq!(q(999_999, 1).to_decimal_digits(3), "1e6");
        assert_eq!(q(1, 1_000_000_000).to_decimal(), "1e-9");
        assert_eq!(q(123_456_789_012_345, 1).to_decimal(), "1.23456789012e14");
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!(q(48, 1).ceil(), BigInt::from(48));
        assert_eq!(q(7, 2).ceil(), BigInt::from(4));
        assert_eq!(q(7, 2).floor(), BigInt::from(3));
    }
}
