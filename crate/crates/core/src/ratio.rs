//! Exact rational scalars: construction, parsing, and `p/q` formatting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar type used for every exact computation in this crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on zero denominator.
pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `p/q` string; integers render without the `/q` part.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in rational {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Factorial as a rational, for exponential-series coefficients.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

/// True when `x` is a (possibly negative) integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Rounds down to the nearest integer.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Rounds up to the nearest integer.
pub fn ceil_int(x: &Rat) -> BigInt {
    x.ceil().to_integer()
}

/// Absolute value.
pub fn abs(x: &Rat) -> Rat {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(format_rat(&parse_rat(" 5 / 10 ").unwrap()), "1/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(1), rat(1));
        assert_eq!(factorial(5), rat(120));
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(floor_int(&ratio(7, 2)), BigInt::from(3));
        assert_eq!(ceil_int(&ratio(7, 2)), BigInt::from(4));
        assert_eq!(floor_int(&ratio(-7, 2)), BigInt::from(-4));
        assert_eq!(ceil_int(&ratio(-7, 2)), BigInt::from(-3));
    }
}
