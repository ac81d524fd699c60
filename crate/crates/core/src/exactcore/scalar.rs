//! Arbitrary-precision rationals.
//!
//! [`Scalar`] is `num_rational::BigRational`, which already keeps values in
//! lowest terms with a positive denominator. This module adds constructors,
//! the `"p/q"` text form used on the command line and in JSON, and a few
//! integer helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// `p / q` as an exact rational. Panics on `q == 0`.
pub fn q(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(p))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`. Whitespace around the parts is rejected.
pub fn parse(text: &str) -> Result<Scalar> {
    let bad = || Error::Parse(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text form: `"p/q"`, or `"p"` for integers.
pub fn format(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// The integer value of `x`, if it is one and fits in an `i64`.
pub fn as_integer(x: &Scalar) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn is_nonpositive_integer(x: &Scalar) -> bool {
    x.is_integer() && !x.is_positive()
}

/// Binomial coefficient as an exact rational; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Scalar {
    if k < 0 || n < 0 || k > n {
        return zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}

/// `base^exp` for a possibly negative integer exponent. Panics on `0^(-k)`.
pub fn powi(base: &Scalar, exp: i64) -> Scalar {
    let mut acc = one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Exact serde adapter: a scalar travels as its `"p/q"` string.
pub mod serde_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("6/4").unwrap(), q(3, 2));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse("3/-6").unwrap(), q(-1, 2));
        assert_eq!(format(&q(-2, 4)), "-1/2");
        assert_eq!(format(&int(5)), "5");
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse(" 1/2").is_err());
        assert!(parse("1.5").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(6, 0), int(1));
        assert_eq!(binomial(3, 4), zero());
        assert_eq!(binomial(4, -1), zero());
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let x = q(10, -4);
        assert_eq!(x.numer(), &BigInt::from(-5));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(powi(&q(2, 3), 3), q(8, 27));
        assert_eq!(powi(&q(2, 3), -2), q(9, 4));
        assert_eq!(powi(&int(7), 0), one());
    }
}
