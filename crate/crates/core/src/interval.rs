//! Closed intervals whose endpoints are exact quadratic surds `c ∓ sqrt(r)`.
//!
//! Both rational intervals `[a, b]` and the support intervals
//! `[s - 2 sqrt(t), s + 2 sqrt(t)]` fit this form with rational center and
//! squared radius, so endpoint sums and products stay rational.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{
    cmp_scaled_sqrt, int, simplify_sqrt, sqrt_exact, to_f64, to_fraction_string, to_plain_string,
    Rational,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    center: Rational,
    radius_sq: Rational,
}

impl Interval {
    pub fn closed(a: Rational, b: Rational) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidInput(format!(
                "interval needs a < b, got [{}, {}]",
                to_plain_string(&a),
                to_plain_string(&b)
            )));
        }
        let half = (&b - &a) / int(2);
        Ok(Interval {
            center: (a + b) / int(2),
            radius_sq: &half * &half,
        })
    }

    /// `[center - sqrt(radius_sq), center + sqrt(radius_sq)]`.
    pub fn centered(center: Rational, radius_sq: Rational) -> Result<Self> {
        if !radius_sq.is_positive() {
            return Err(Error::InvalidInput(
                "interval radius must be positive".into(),
            ));
        }
        Ok(Interval { center, radius_sq })
    }

    /// `[s - 2 sqrt(t), s + 2 sqrt(t)]`.
    pub fn support_of(s: &Rational, t: &Rational) -> Result<Self> {
        Self::centered(s.clone(), t * int(4))
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn radius_sq(&self) -> &Rational {
        &self.radius_sq
    }

    /// `a + b`, always rational.
    pub fn endpoint_sum(&self) -> Rational {
        &self.center * int(2)
    }

    /// `a * b`, always rational.
    pub fn endpoint_product(&self) -> Rational {
        &self.center * &self.center - &self.radius_sq
    }

    pub fn lower_exact(&self) -> Option<Rational> {
        sqrt_exact(&self.radius_sq).map(|r| &self.center - r)
    }

    pub fn upper_exact(&self) -> Option<Rational> {
        sqrt_exact(&self.radius_sq).map(|r| &self.center + r)
    }

    pub fn lower(&self) -> f64 {
        match self.lower_exact() {
            Some(v) => to_f64(&v),
            None => to_f64(&self.center) - to_f64(&self.radius_sq).sqrt(),
        }
    }

    pub fn upper(&self) -> f64 {
        match self.upper_exact() {
            Some(v) => to_f64(&v),
            None => to_f64(&self.center) + to_f64(&self.radius_sq).sqrt(),
        }
    }

    /// Orders `x` against the lower endpoint.
    pub fn cmp_lower(&self, x: &Rational) -> Ordering {
        cmp_scaled_sqrt(&(x - &self.center), &int(-1), &self.radius_sq)
    }

    /// Orders `x` against the upper endpoint.
    pub fn cmp_upper(&self, x: &Rational) -> Ordering {
        cmp_scaled_sqrt(&(x - &self.center), &int(1), &self.radius_sq)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.cmp_lower(x) != Ordering::Less && self.cmp_upper(x) != Ordering::Greater
    }

    pub fn contains_approx(&self, x: f64, slack: f64) -> bool {
        x >= self.lower() - slack && x <= self.upper() + slack
    }

    /// Whether the interval lies in `[0, ∞)`.
    pub fn is_nonnegative(&self) -> bool {
        self.cmp_lower(&Rational::zero()) != Ordering::Greater
    }

    /// `{x^d : x in [a, b]}` for rational `0 <= a < b`.
    pub fn power_image(&self, d: u32) -> Option<Interval> {
        let (a, b) = (self.lower_exact()?, self.upper_exact()?);
        if a.is_negative() || d == 0 {
            return None;
        }
        Interval::closed(
            num_traits::pow(a, d as usize),
            num_traits::pow(b, d as usize),
        )
        .ok()
    }

    pub fn lower_string(&self) -> String {
        self.endpoint_string(false)
    }

    pub fn upper_string(&self) -> String {
        self.endpoint_string(true)
    }

    fn endpoint_string(&self, upper: bool) -> String {
        if let Some(v) = if upper {
            self.upper_exact()
        } else {
            self.lower_exact()
        } {
            return to_plain_string(&v);
        }
        let (k, m) = simplify_sqrt(&self.radius_sq);
        let surd = if k.is_one() {
            format!("sqrt({m})")
        } else {
            format!("{}*sqrt({m})", to_plain_string(&k))
        };
        let sign = if upper { "+" } else { "-" };
        if self.center.is_zero() {
            if upper {
                surd
            } else {
                format!("-{surd}")
            }
        } else {
            format!("{}{sign}{surd}", to_plain_string(&self.center))
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower_string(), self.upper_string())
    }
}

#[derive(Serialize)]
struct EndpointJson {
    exact: String,
    approx: f64,
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Interval", 4)?;
        st.serialize_field(
            "lower",
            &EndpointJson {
                exact: self.lower_string(),
                approx: self.lower(),
            },
        )?;
        st.serialize_field(
            "upper",
            &EndpointJson {
                exact: self.upper_string(),
                approx: self.upper(),
            },
        )?;
        st.serialize_field("center", &to_fraction_string(&self.center))?;
        st.serialize_field("radius_sq", &to_fraction_string(&self.radius_sq))?;
        st.end()
    }
}
