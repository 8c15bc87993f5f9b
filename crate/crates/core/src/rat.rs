//! Exact rational scalars and their external text form.
//!
//! Every coordinate, time and length in this crate is a [`Rat`]:
//! an arbitrary-precision fraction kept in lowest terms. The external JSON
//! form is either a plain integer or a string `"p/q"`; emitters always write
//! lowest-terms strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// `0` as a rational.
pub fn zero() -> Rat {
    Rat::zero()
}

/// `1` as a rational.
pub fn one() -> Rat {
    Rat::one()
}

/// Rational from an integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Is the value an integer?
pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Midpoint of two rationals.
pub fn midpoint(a: &Rat, b: &Rat) -> Rat {
    (a + b) / int(2)
}

/// Lowest-terms text form: `"7"`, `"-3/4"`.
pub fn format(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the text form accepted in JSON: an integer or `"p/q"`.
pub fn parse(s: &str) -> Result<Rat> {
    let s = s.trim();
    let make = |txt: &str| -> Result<BigInt> {
        txt.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational component {txt:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(make(s)?)),
        Some((p, q)) => {
            let denom = make(q)?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(make(p)?, denom))
        }
    }
}

/// Parse a JSON value holding a rational: an integer number or a string.
pub fn from_json(v: &serde_json::Value) -> Result<Rat> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(int(i))
            } else {
                Err(Error::Parse(format!(
                    "non-integer number {n} (write exact fractions as \"p/q\")"
                )))
            }
        }
        serde_json::Value::String(s) => parse(s),
        other => Err(Error::Parse(format!("expected rational, got {other}"))),
    }
}

/// JSON form of a rational (always a lowest-terms string).
pub fn to_json(r: &Rat) -> serde_json::Value {
    serde_json::Value::String(format(r))
}

/// Clamp into `[0, 1]`.
pub fn clamp01(r: Rat) -> Rat {
    if r.is_negative() {
        zero()
    } else if r > one() {
        one()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-5/6"] {
            let r = parse(s).unwrap();
            assert_eq!(format(&r), s);
        }
        assert_eq!(format(&parse("2/4").unwrap()), "1/2");
        assert_eq!(format(&parse("-2/-4").unwrap()), "1/2");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("1/0").is_err());
        assert!(parse("a/2").is_err());
        assert!(from_json(&serde_json::json!(0.5)).is_err());
    }

    #[test]
    fn json_accepts_numbers_and_strings() {
        assert_eq!(from_json(&serde_json::json!(3)).unwrap(), int(3));
        assert_eq!(from_json(&serde_json::json!("3/9")).unwrap(), frac(1, 3));
    }
}
