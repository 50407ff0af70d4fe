//! Hankel matrices, exact semidefiniteness, total positivity and the
//! Hamburger / Stieltjes / Hausdorff moment-class tests at finite order.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::linalg;
use crate::rational::{serde_fraction, Rational};
use crate::seqcore::{Origin, Sequence};

/// Default cap on the Hankel order for minor enumeration.
pub const TOTAL_POSITIVITY_MAX_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    rows: Vec<Vec<Rational>>,
}

impl SymMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty matrix".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            for (j, other) in rows.iter().enumerate().take(i) {
                if row[j] != other[i] {
                    return Err(Error::InvalidInput(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SymMatrix { rows })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|row| row.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    /// Number of rows.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Hankel order `m` of an `(m+1) x (m+1)` matrix.
    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn det(&self) -> Rational {
        linalg::det(&self.rows)
    }
}

/// `[y_{i+j+shift}]_{0<=i,j<=m}`; shift 0 gives `H_m`, shift 1 gives `H̃_m`.
pub fn hankel_matrix(y: &Sequence, m: usize, shift: usize) -> Result<SymMatrix> {
    hankel_from_slice(y.values(), m, shift)
}

fn hankel_from_slice(values: &[Rational], m: usize, shift: usize) -> Result<SymMatrix> {
    let needed = 2 * m + 1 + shift;
    if values.len() < needed {
        return Err(Error::InsufficientData {
            needed,
            available: values.len(),
        });
    }
    let rows = (0..=m)
        .map(|i| (0..=m).map(|j| values[i + j + shift].clone()).collect())
        .collect();
    Ok(SymMatrix { rows })
}

/// `Δ_m(y) = det H_m(y)`.
pub fn hankel_det(y: &Sequence, m: usize) -> Result<Rational> {
    Ok(hankel_matrix(y, m, 0)?.det())
}

/// `Δ_0..Δ_m`.
pub fn hankel_dets(y: &Sequence, m: usize) -> Result<Vec<Rational>> {
    y.require(2 * m + 1)?;
    (0..=m).map(|k| hankel_det(y, k)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PsdStatus {
    PositiveDefinite,
    PositiveSemidefiniteSingular,
    Indefinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Elimination pivots; zero entries mark dimensions dropped as null.
    Pivots(#[serde(with = "serde_fraction::vec")] Vec<Rational>),
    /// `vᵀ M v = value < 0`.
    NegativeDirection {
        #[serde(with = "serde_fraction::vec")]
        vector: Vec<Rational>,
        #[serde(with = "serde_fraction")]
        value: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsdVerdict {
    pub status: PsdStatus,
    pub witness: Witness,
}

impl PsdVerdict {
    pub fn is_psd(&self) -> bool {
        self.status != PsdStatus::Indefinite
    }

    /// Checks the witness against `m` without trusting the elimination.
    pub fn reverifies(&self, m: &SymMatrix) -> bool {
        match (&self.status, &self.witness) {
            (PsdStatus::PositiveDefinite, Witness::Pivots(p)) => {
                let product = p.iter().fold(Rational::one(), |acc, v| acc * v);
                p.len() == m.dim()
                    && p.iter().all(Signed::is_positive)
                    && product == m.det()
                    && leading_minors_positive(m)
            }
            (PsdStatus::PositiveSemidefiniteSingular, Witness::Pivots(p)) => {
                p.len() == m.dim()
                    && p.iter().any(Zero::is_zero)
                    && m.det().is_zero()
                    && linalg::first_negative_principal_minor(m.rows()).is_none()
            }
            (PsdStatus::Indefinite, Witness::NegativeDirection { vector, value }) => {
                value.is_negative() && linalg::quadratic_form(m.rows(), vector) == *value
            }
            _ => false,
        }
    }
}

fn leading_minors_positive(m: &SymMatrix) -> bool {
    (1..=m.dim()).all(|k| {
        let idx: Vec<usize> = (0..k).collect();
        linalg::det(&linalg::submatrix(m.rows(), &idx, &idx)).is_positive()
    })
}

struct EliminationStep {
    pivot: usize,
    pivot_value: Rational,
    row: Vec<(usize, Rational)>,
}

/// Lifts a vector on the remaining coordinates back through the recorded
/// Schur-complement steps, preserving the quadratic form.
fn lift(steps: &[EliminationStep], mut x: Vec<Rational>) -> Vec<Rational> {
    for step in steps.iter().rev() {
        let mut dot = Rational::zero();
        for (j, coeff) in &step.row {
            dot += coeff * &x[*j];
        }
        x[step.pivot] = -dot / &step.pivot_value;
    }
    x
}

/// Exact verdict by symmetric elimination with diagonal pivoting.
///
/// Pivots are taken at the first positive diagonal entry, so a positive
/// definite matrix yields its leading pivots `Δ_k / Δ_{k-1}`. A negative
/// diagonal entry, or a zero diagonal with a nonzero off-diagonal partner,
/// produces an exact negative direction.
pub fn psd_status(m: &SymMatrix) -> PsdVerdict {
    let n = m.dim();
    let mut s = m.rows.clone();
    let mut active = vec![true; n];
    let mut steps: Vec<EliminationStep> = Vec::new();
    let mut pivots: Vec<Rational> = Vec::with_capacity(n);

    let negative = |steps: &[EliminationStep], w: Vec<Rational>| {
        let vector = lift(steps, w);
        let value = linalg::quadratic_form(&m.rows, &vector);
        debug_assert!(value.is_negative());
        PsdVerdict {
            status: PsdStatus::Indefinite,
            witness: Witness::NegativeDirection { vector, value },
        }
    };

    loop {
        let live: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
        if live.is_empty() {
            break;
        }
        if let Some(&i) = live.iter().find(|&&i| s[i][i].is_negative()) {
            let mut w = vec![Rational::zero(); n];
            w[i] = Rational::one();
            return negative(&steps, w);
        }
        if let Some(&p) = live.iter().find(|&&i| s[i][i].is_positive()) {
            let pivot_value = s[p][p].clone();
            let rest: Vec<usize> = live.iter().copied().filter(|&j| j != p).collect();
            for &i in &rest {
                if s[i][p].is_zero() {
                    continue;
                }
                let factor = &s[i][p] / &pivot_value;
                for &j in &rest {
                    let delta = &factor * &s[p][j];
                    s[i][j] -= delta;
                }
            }
            let row = rest.iter().map(|&j| (j, s[p][j].clone())).collect();
            steps.push(EliminationStep {
                pivot: p,
                pivot_value: pivot_value.clone(),
                row,
            });
            pivots.push(pivot_value);
            active[p] = false;
            continue;
        }
        // Every live diagonal entry is zero.
        let pair = live.iter().enumerate().find_map(|(a, &i)| {
            live[a + 1..]
                .iter()
                .find(|&&j| !s[i][j].is_zero())
                .map(|&j| (i, j))
        });
        if let Some((i, j)) = pair {
            let mut w = vec![Rational::zero(); n];
            w[i] = -Rational::one() / &s[i][j];
            w[j] = Rational::one();
            return negative(&steps, w);
        }
        for i in live {
            active[i] = false;
            pivots.push(Rational::zero());
        }
    }

    let singular = pivots.iter().any(Zero::is_zero);
    PsdVerdict {
        status: if singular {
            PsdStatus::PositiveSemidefiniteSingular
        } else {
            PsdStatus::PositiveDefinite
        },
        witness: Witness::Pivots(pivots),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(with = "serde_fraction")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalPositivity {
    pub holds: bool,
    pub failing_minor: Option<Minor>,
}

/// Whether every minor of `H_m(y)` of size at most `minor_order` is `>= 0`.
///
/// Enumerates all minors, smallest first; exponential in `m`.
pub fn total_positive_up_to(y: &Sequence, m: usize, minor_order: usize) -> Result<TotalPositivity> {
    if m > TOTAL_POSITIVITY_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: m,
            cap: TOTAL_POSITIVITY_MAX_ORDER,
        });
    }
    if minor_order > m + 1 {
        return Err(Error::InvalidInput(format!(
            "minor order {minor_order} exceeds matrix size {}",
            m + 1
        )));
    }
    let h = hankel_matrix(y, m, 0)?;
    for k in 1..=minor_order {
        let subsets = linalg::combinations(m + 1, k);
        for rows in &subsets {
            for cols in &subsets {
                let value = linalg::det(&linalg::submatrix(h.rows(), rows, cols));
                if value.is_negative() {
                    return Ok(TotalPositivity {
                        holds: false,
                        failing_minor: Some(Minor {
                            rows: rows.clone(),
                            cols: cols.clone(),
                            value,
                        }),
                    });
                }
            }
        }
    }
    Ok(TotalPositivity {
        holds: true,
        failing_minor: None,
    })
}

/// `(Eʲy)_n = y_{n+j}`.
pub fn shift(y: &Sequence, j: usize) -> Result<Sequence> {
    y.require(j + 1)?;
    Sequence::new(
        y.values()[j..].to_vec(),
        format!("E^{j}({})", y.label()),
        Origin::Transform,
    )
}

/// `z_n = (a+b) y_{n+1} - y_{n+2} - ab y_n`, the moments of `-(x-a)(x-b) dμ`.
pub fn localizing_sequence(values: &[Rational], interval: &Interval) -> Vec<Rational> {
    let sum = interval.endpoint_sum();
    let product = interval.endpoint_product();
    (0..values.len().saturating_sub(2))
        .map(|n| &sum * &values[n + 1] - &values[n + 2] - &product * &values[n])
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HausdorffVerdict {
    /// `H_m(y)`.
    pub moment: PsdVerdict,
    /// `(a+b) H_m(Ey) - H_m(E²y) - ab H_m(y) = H_m(z)`.
    pub localizing: PsdVerdict,
}

impl HausdorffVerdict {
    pub fn pass(&self) -> bool {
        self.moment.is_psd() && self.localizing.is_psd()
    }
}

pub fn hausdorff_test(y: &Sequence, interval: &Interval, m: usize) -> Result<HausdorffVerdict> {
    y.require(2 * m + 3)?;
    let moment = psd_status(&hankel_matrix(y, m, 0)?);
    let z = localizing_sequence(&y.values()[..2 * m + 3], interval);
    let localizing = psd_status(&hankel_from_slice(&z, m, 0)?);
    Ok(HausdorffVerdict { moment, localizing })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// `H_k(y)`
    Hankel,
    /// `H̃_k(y)`
    ShiftedHankel,
    /// `H_k(z)` with `z` the localizing sequence of the interval
    Localizing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub matrix: MatrixKind,
    pub order: usize,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderVerdict {
    pub order: usize,
    pub hankel: PsdStatus,
    pub shifted: PsdStatus,
    pub localizing: Option<PsdStatus>,
}

/// Finite-order classification; `*_ok_up_to` is the largest order `k` such
/// that every order `0..=k` passes (`None` when order 0 already fails).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentClassReport {
    pub label: String,
    pub max_order: usize,
    pub hamburger_ok_up_to: Option<usize>,
    pub stieltjes_ok_up_to: Option<usize>,
    pub hausdorff_interval: Option<Interval>,
    pub hausdorff_ok_up_to: Option<usize>,
    #[serde(with = "serde_fraction::vec")]
    pub delta_values: Vec<Rational>,
    pub orders: Vec<OrderVerdict>,
    pub failure_witnesses: Vec<FailureWitness>,
    /// Hausdorff passed at every verified order, so the sequence (if the
    /// pattern persists) has a unique representing measure.
    pub hausdorff_implies_determinate: bool,
}

impl MomentClassReport {
    pub fn hamburger_pass(&self) -> bool {
        self.hamburger_ok_up_to == Some(self.max_order)
    }

    pub fn stieltjes_pass(&self) -> bool {
        self.stieltjes_ok_up_to == Some(self.max_order)
    }

    pub fn hausdorff_pass(&self) -> Option<bool> {
        self.hausdorff_interval
            .as_ref()
            .map(|_| self.hausdorff_ok_up_to == Some(self.max_order))
    }

    /// Every requested test passed at every order.
    pub fn all_pass(&self) -> bool {
        self.hamburger_pass() && self.stieltjes_pass() && self.hausdorff_pass().unwrap_or(true)
    }

    pub fn witness_for(&self, matrix: MatrixKind) -> Option<&FailureWitness> {
        self.failure_witnesses.iter().find(|w| w.matrix == matrix)
    }
}

fn ok_up_to(passes: impl Iterator<Item = bool>) -> Option<usize> {
    let mut last = None;
    for (k, ok) in passes.enumerate() {
        if !ok {
            break;
        }
        last = Some(k);
    }
    last
}

/// Runs `H_k`, `H̃_k` and (with an interval) the localizing test for
/// `k = 0..=m`.
///
/// The Hausdorff verdict at order `k` also requires `H_k` to pass, and when
/// the interval lies in `[0, ∞)` it requires `H̃_k` as well.
pub fn classify(y: &Sequence, m: usize, interval: Option<&Interval>) -> Result<MomentClassReport> {
    y.require(2 * m + if interval.is_some() { 3 } else { 2 })?;
    let z = interval.map(|iv| localizing_sequence(y.values(), iv));
    let nonnegative_interval = interval.is_some_and(Interval::is_nonnegative);

    let mut orders = Vec::with_capacity(m + 1);
    let mut deltas = Vec::with_capacity(m + 1);
    let mut witnesses: Vec<FailureWitness> = Vec::new();
    let record = |kind: MatrixKind,
                  order: usize,
                  verdict: &PsdVerdict,
                  witnesses: &mut Vec<FailureWitness>| {
        if !verdict.is_psd() && !witnesses.iter().any(|w| w.matrix == kind) {
            witnesses.push(FailureWitness {
                matrix: kind,
                order,
                witness: verdict.witness.clone(),
            });
        }
    };

    let mut hamburger = Vec::with_capacity(m + 1);
    let mut stieltjes = Vec::with_capacity(m + 1);
    let mut hausdorff = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let h = hankel_matrix(y, k, 0)?;
        deltas.push(h.det());
        let hv = psd_status(&h);
        let sv = psd_status(&hankel_matrix(y, k, 1)?);
        record(MatrixKind::Hankel, k, &hv, &mut witnesses);
        record(MatrixKind::ShiftedHankel, k, &sv, &mut witnesses);
        let lv = match &z {
            Some(z) => {
                let v = psd_status(&hankel_from_slice(z, k, 0)?);
                record(MatrixKind::Localizing, k, &v, &mut witnesses);
                Some(v)
            }
            None => None,
        };
        hamburger.push(hv.is_psd());
        stieltjes.push(hv.is_psd() && sv.is_psd());
        if let Some(lv) = &lv {
            hausdorff.push(lv.is_psd() && hv.is_psd() && (!nonnegative_interval || sv.is_psd()));
        }
        orders.push(OrderVerdict {
            order: k,
            hankel: hv.status,
            shifted: sv.status,
            localizing: lv.map(|v| v.status),
        });
    }

    let hausdorff_ok_up_to = ok_up_to(hausdorff.iter().copied());
    Ok(MomentClassReport {
        label: y.label().to_string(),
        max_order: m,
        hamburger_ok_up_to: ok_up_to(hamburger.into_iter()),
        stieltjes_ok_up_to: ok_up_to(stieltjes.into_iter()),
        hausdorff_interval: interval.cloned(),
        hausdorff_ok_up_to,
        delta_values: deltas,
        orders,
        failure_witnesses: witnesses,
        hausdorff_implies_determinate: interval.is_some() && hausdorff_ok_up_to == Some(m),
    })
}
