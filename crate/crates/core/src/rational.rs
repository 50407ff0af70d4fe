//! Exact rational helpers built on [`num_rational::BigRational`].

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form (positive denominator, reduced).
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"7"`, `"-3/4"` or a finite decimal such as `"2.5"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidInput(format!("not an exact rational: `{text}`"));
    if text.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, fraction)) = text.split_once('.') {
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = match whole.trim() {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = num_traits::pow(BigInt::from(10), fraction.len());
        let fraction: BigInt = fraction.parse().map_err(|_| bad())?;
        let magnitude = Rational::from_integer(whole.abs()) + Rational::new(fraction, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    text.parse::<BigInt>()
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Always `num/den`, including integers (`"14/1"`).
pub fn to_fraction_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Integers print bare, everything else as `num/den`.
pub fn to_plain_string(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        to_fraction_string(value)
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

pub fn sqrt_exact(value: &Rational) -> Option<Rational> {
    let num = exact_isqrt(value.numer())?;
    let den = exact_isqrt(value.denom())?;
    Some(Rational::new(num, den))
}

/// Writes `sqrt(r)` as `k * sqrt(m)` with rational `k` and integer `m`, pulling
/// out square factors found by trial division.
pub fn simplify_sqrt(radicand: &Rational) -> (Rational, BigInt) {
    // sqrt(n/d) = sqrt(n*d)/d
    let mut rest = radicand.numer() * radicand.denom();
    let mut outside = BigInt::one();
    if rest.is_zero() {
        return (Rational::zero(), BigInt::zero());
    }
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(10_000u32);
    while p <= limit && &p * &p <= rest {
        let square = &p * &p;
        while (&rest % &square).is_zero() {
            rest /= &square;
            outside *= &p;
        }
        p += 1u32;
    }
    if let Some(root) = exact_isqrt(&rest) {
        outside *= root;
        rest = BigInt::one();
    }
    (Rational::new(outside, radicand.denom().clone()), rest)
}

/// Compares `lhs` with `coeff * sqrt(radicand)` exactly (`radicand >= 0`).
pub fn cmp_scaled_sqrt(lhs: &Rational, coeff: &Rational, radicand: &Rational) -> Ordering {
    debug_assert!(!radicand.is_negative());
    let rhs_sign = if radicand.is_zero() {
        Sign::NoSign
    } else {
        sign_of(coeff)
    };
    let lhs_sign = sign_of(lhs);
    match (lhs_sign, rhs_sign) {
        (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
        (l, r) if l != r => rank(l).cmp(&rank(r)),
        (l, _) => {
            let lhs_sq = lhs * lhs;
            let rhs_sq = coeff * coeff * radicand;
            let by_magnitude = lhs_sq.cmp(&rhs_sq);
            if l == Sign::Minus {
                by_magnitude.reverse()
            } else {
                by_magnitude
            }
        }
    }
}

fn sign_of(value: &Rational) -> Sign {
    if value.is_zero() {
        Sign::NoSign
    } else if value.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

fn rank(sign: Sign) -> i8 {
    match sign {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Serde adapters writing rationals as `num/den` strings.
pub mod serde_fraction {
    use super::{to_fraction_string, Rational};
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&to_fraction_string(value))
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(
            values: &[Rational],
            serializer: S,
        ) -> Result<S::Ok, S::Error> {
            let mut seq = serializer.serialize_seq(Some(values.len()))?;
            for value in values {
                seq.serialize_element(&to_fraction_string(value))?;
            }
            seq.end()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(
            value: &Option<Rational>,
            serializer: S,
        ) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => serializer.serialize_str(&to_fraction_string(v)),
                None => serializer.serialize_none(),
            }
        }
    }
}
