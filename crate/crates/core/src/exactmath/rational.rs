//! The exact scalar type and its `"num/den"` string form.
//!
//! `Rational` is `num_rational::BigRational`: always stored in lowest terms
//! with a positive denominator, which is exactly the canonical form the rest
//! of the crate relies on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ExactMathError;

pub type Rational = num_rational::BigRational;

/// Shorthand constructor for p/q.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand constructor for an integer value.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact factorial, as a rational so it can enter prefactor products directly.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// (-2)^n as a rational.
pub fn neg_two_pow(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for _ in 0..n {
        acc *= BigInt::from(-2);
    }
    Rational::from_integer(acc)
}

/// Serializes in lowest terms as `"num/den"`, or just `"num"` for integers.
pub fn to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"`. The sign may sit on the numerator only.
pub fn from_str(s: &str) -> Result<Rational, ExactMathError> {
    let bad = || ExactMathError::ParseRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .ok_or_else(bad)?
        .trim()
        .parse()
        .map_err(|_| bad())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() || denom.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Exact conversion of a finite f64 (every finite f64 is a dyadic rational).
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Final-step rounding to f64.
pub fn to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).expect("rational out of f64 range")
}

/// `#[serde(with = "...")]` adapter mapping `Rational` to its `"num/den"`
/// string form.
pub mod serde_str {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::from_str(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for (p, q, s) in [(5, 1, "5"), (-3, 4, "-3/4"), (0, 7, "0"), (22, 6, "11/3")] {
            let r = rat(p, q);
            assert_eq!(to_string(&r), s);
            assert_eq!(from_str(s).unwrap(), r);
        }
    }

    #[test]
    fn rejects_bad_strings() {
        for s in ["", "1/0", "1/-2", "a/b", "1/2/3x"] {
            assert!(from_str(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn dyadic_f64_is_exact() {
        let r = from_f64(0.375).unwrap();
        assert_eq!(r, rat(3, 8));
        assert_eq!(to_f64(&r), 0.375);
    }
}
