//! Monic orthogonal polynomials: the three-term recurrence, recovery of
//! `(σ, τ)` from moments, the bordered-determinant form, and zeros.

use nalgebra::DMatrix;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{MonicPolynomial, Polynomial};
use crate::rational::{serde_fraction, to_f64, Rational};
use crate::seqcore::{Sequence, SigmaTauSpec};

/// `P_0..P_n` from `P_{k+1} = (x - s_k) P_k - t_k P_{k-1}`, `P_{-1} = 0`.
pub fn ops_from_recurrence(spec: &SigmaTauSpec, n: usize) -> Vec<MonicPolynomial> {
    let mut polys: Vec<Polynomial> = Vec::with_capacity(n + 1);
    polys.push(Polynomial::one());
    for k in 0..n {
        let mut next = polys[k].mul_x_minus(spec.sigma(k));
        if k >= 1 {
            next = &next - &polys[k - 1].scale(spec.tau(k));
        }
        polys.push(next);
    }
    polys
        .into_iter()
        .map(|p| MonicPolynomial::try_from(p).expect("recurrence preserves the leading 1"))
        .collect()
}

/// `(s_0..s_{n-1})` and `(t_1..t_{n-1})` recovered from moments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoveredRecurrence {
    #[serde(with = "serde_fraction::vec")]
    pub sigma: Vec<Rational>,
    #[serde(with = "serde_fraction::vec")]
    pub tau: Vec<Rational>,
    /// `L_y[P_k²] = Δ_k / Δ_{k-1}` for `k < n`.
    #[serde(with = "serde_fraction::vec")]
    pub norms: Vec<Rational>,
}

impl RecoveredRecurrence {
    /// Extends the recovered prefixes by repeating their last entries.
    pub fn to_spec(&self) -> Result<SigmaTauSpec> {
        SigmaTauSpec::from_finite(self.sigma.clone(), self.tau.clone())
    }
}

/// Exact Stieltjes procedure on the Riesz functional of `y`:
/// `s_k = L[x P_k²] / L[P_k²]` and `t_k = L[P_k²] / L[P_{k-1}²]`.
///
/// Uses `y_0..y_{2n-1}`. `L[P_k²] = Δ_k / Δ_{k-1}`, so a vanishing norm is
/// exactly a vanishing Hankel determinant.
pub fn recurrence_from_moments(y: &Sequence, n: usize) -> Result<RecoveredRecurrence> {
    y.require(2 * n)?;
    let moments = y.values();
    let mut sigma = Vec::with_capacity(n);
    let mut tau = Vec::with_capacity(n.saturating_sub(1));
    let mut norms: Vec<Rational> = Vec::with_capacity(n);
    let mut prev = Polynomial::zero();
    let mut current = Polynomial::one();
    for k in 0..n {
        let square = &current * &current;
        let norm = square.riesz(moments)?;
        if norm.is_zero() {
            return Err(Error::QuasiDefiniteFailure(k));
        }
        let s_k = square.shift_up(1).riesz(moments)? / &norm;
        let mut next = current.mul_x_minus(&s_k);
        if k >= 1 {
            let t_k = &norm / &norms[k - 1];
            next = &next - &prev.scale(&t_k);
            tau.push(t_k);
        }
        sigma.push(s_k);
        norms.push(norm);
        prev = std::mem::replace(&mut current, next);
    }
    Ok(RecoveredRecurrence { sigma, tau, norms })
}

/// `t_{k+1} = Δ_{k-1} Δ_{k+1} / Δ_k²` (with `Δ_{-1} = 1`) for `k = 0..n-2`.
pub fn tau_from_hankel_dets(y: &Sequence, n: usize) -> Result<Vec<Rational>> {
    if n < 2 {
        return Ok(Vec::new());
    }
    let deltas = crate::hankel::hankel_dets(y, n - 1)?;
    (0..n - 1)
        .map(|k| {
            if deltas[k].is_zero() {
                return Err(Error::QuasiDefiniteFailure(k));
            }
            let before = if k == 0 {
                Rational::one()
            } else {
                deltas[k - 1].clone()
            };
            Ok(before * &deltas[k + 1] / (&deltas[k] * &deltas[k]))
        })
        .collect()
}

/// `P_n(x) = det[[H rows 0..n-1 with n+1 columns], [1, x, ..., x^n]] / Δ_{n-1}`,
/// expanded along the last row.
pub fn ops_determinantal(y: &Sequence, n: usize) -> Result<MonicPolynomial> {
    if n == 0 {
        return Ok(MonicPolynomial::one());
    }
    y.require(2 * n)?;
    let v = y.values();
    let top: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..=n).map(|j| v[i + j].clone()).collect())
        .collect();
    let delta_prev = linalg::det(&top.iter().map(|row| row[..n].to_vec()).collect::<Vec<_>>());
    if delta_prev.is_zero() {
        return Err(Error::QuasiDefiniteFailure(n - 1));
    }
    let rows: Vec<usize> = (0..n).collect();
    let coeffs = (0..=n)
        .map(|j| {
            let cols: Vec<usize> = (0..=n).filter(|&c| c != j).collect();
            let minor = linalg::det(&linalg::submatrix(&top, &rows, &cols));
            let signed = if (n + j).is_multiple_of(2) {
                minor
            } else {
                -minor
            };
            signed / &delta_prev
        })
        .collect();
    MonicPolynomial::try_from(Polynomial::new(coeffs))
}

/// Symmetric tridiagonal form of the recurrence: diagonal `s_0..s_{n-1}`,
/// off-diagonal `sqrt(t_1)..sqrt(t_{n-1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiMatrix {
    diagonal: Vec<f64>,
    off_diagonal: Vec<f64>,
}

impl JacobiMatrix {
    pub fn from_spec(spec: &SigmaTauSpec, n: usize) -> Result<Self> {
        if let Some(k) = spec.first_nonpositive_tau() {
            return Err(Error::NotPositiveCase(k));
        }
        Ok(JacobiMatrix {
            diagonal: (0..n).map(|k| to_f64(spec.sigma(k))).collect(),
            off_diagonal: (1..n).map(|k| to_f64(spec.tau(k)).sqrt()).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> &[f64] {
        &self.off_diagonal
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.order();
        let m = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.diagonal[i]
            } else if i + 1 == j {
                self.off_diagonal[i]
            } else if j + 1 == i {
                self.off_diagonal[j]
            } else {
                0.0
            }
        });
        let mut values: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        values.sort_by(f64::total_cmp);
        values
    }
}

/// Zeros `x_{n1} < ... < x_{nn}` of `P_n` as Jacobi-matrix eigenvalues.
pub fn ops_zeros(spec: &SigmaTauSpec, n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidInput(
            "P_0 has no zeros; degree must be >= 1".into(),
        ));
    }
    Ok(JacobiMatrix::from_spec(spec, n)?.eigenvalues())
}

/// `[x_{n1}, x_{nn}]`, an inner approximation of the true interval of
/// orthogonality that widens as `n` grows.
pub fn true_interval_estimate(spec: &SigmaTauSpec, n: usize) -> Result<(f64, f64)> {
    let zeros = ops_zeros(spec, n)?;
    Ok((zeros[0], zeros[zeros.len() - 1]))
}
