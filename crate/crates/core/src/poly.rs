//! Dense polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{int, to_f64, to_fraction_string, to_plain_string, Rational};

/// `c_0 + c_1 x + ... + c_n x^n` with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// `x^k · self`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `(x - c) · self`.
    pub fn mul_x_minus(&self, c: &Rational) -> Self {
        &self.shift_up(1) - &self.scale(c)
    }

    /// The Riesz functional `L_y[p] = Σ c_n y_n`.
    pub fn riesz(&self, y: &[Rational]) -> Result<Rational> {
        if self.coeffs.len() > y.len() {
            return Err(Error::InsufficientData {
                needed: self.coeffs.len(),
                available: y.len(),
            });
        }
        Ok(self.coeffs.iter().zip(y).map(|(c, v)| c * v).sum())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = k == 0 || !magnitude.is_one();
            if show_coeff {
                f.write_str(&to_plain_string(&magnitude))?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(to_fraction_string))
    }
}

/// A polynomial whose leading coefficient is exactly 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MonicPolynomial(Polynomial);

impl MonicPolynomial {
    pub fn one() -> Self {
        MonicPolynomial(Polynomial::one())
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("monic polynomials are nonzero")
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.0
    }
}

impl TryFrom<Polynomial> for MonicPolynomial {
    type Error = Error;

    fn try_from(p: Polynomial) -> Result<Self> {
        match p.leading() {
            Some(c) if c.is_one() => Ok(MonicPolynomial(p)),
            _ => Err(Error::InvalidInput(format!(
                "polynomial `{p}` is not monic"
            ))),
        }
    }
}

impl Deref for MonicPolynomial {
    type Target = Polynomial;

    fn deref(&self) -> &Polynomial {
        &self.0
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn arithmetic() {
        let p = Polynomial::from_integers(&[1, -3, 1]);
        let q = Polynomial::from_integers(&[-1, 1]);
        assert_eq!((&p * &q).coeffs(), [-1, 4, -4, 1].map(int));
        assert_eq!(&(&p + &q) - &q, p);
        assert_eq!(
            q.mul_x_minus(&int(2)),
            Polynomial::from_integers(&[2, -3, 1])
        );
        assert_eq!(p.derivative(), Polynomial::from_integers(&[-3, 2]));
        assert_eq!(p.eval(&int(3)), int(1));
        assert_eq!(p.eval_f64(0.5), 1.0 - 1.5 + 0.25);
        assert_eq!(Polynomial::from_integers(&[0, 0, 0]).degree(), None);
        assert_eq!(Polynomial::monomial(2, frac(1, 2)).degree(), Some(2));
    }

    #[test]
    fn riesz_functional() {
        let y = [1, 1, 2, 5].map(int);
        assert_eq!(
            Polynomial::from_integers(&[1, -3, 1]).riesz(&y).unwrap(),
            int(0)
        );
        assert!(Polynomial::monomial(4, int(1)).riesz(&y).is_err());
    }

    #[test]
    fn display_and_monic() {
        assert_eq!(
            Polynomial::from_integers(&[1, -3, 1]).to_string(),
            "x^2 - 3x + 1"
        );
        assert_eq!(
            Polynomial::from_integers(&[0, 4, -1]).to_string(),
            "-x^2 + 4x"
        );
        assert_eq!(Polynomial::new(vec![frac(-1, 2)]).to_string(), "-1/2");
        assert!(MonicPolynomial::try_from(Polynomial::from_integers(&[1, 2])).is_err());
        let m = MonicPolynomial::try_from(Polynomial::from_integers(&[1, 1])).unwrap();
        assert_eq!(m.degree(), 1);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"["1/1","1/1"]"#);
    }
}
