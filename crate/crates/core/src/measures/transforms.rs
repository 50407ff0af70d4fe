//! Affine subsequences `y_{dk+ℓ}` and linear combinations `T_g`.

use std::f64::consts::PI;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{integrate_against, Density, MomentRow, RepresentationReport, QUADRATURE_SHARE};
use crate::error::{Error, Result};
use crate::hankel::MatrixKind;
use crate::interval::Interval;
use crate::poly::Polynomial;
use crate::rational::{frac, int, serde_fraction, to_f64, Rational};
use crate::seqcore::{Origin, Sequence};

/// Grid size used by [`linear_combination_transform`].
pub const G_GRID: usize = 4096;

/// `{x^d : x in [a, b]}` when both endpoints are rational.
pub fn support_image(iv: &Interval, d: u32) -> Option<Interval> {
    let (a, b) = (iv.lower_exact()?, iv.upper_exact()?);
    if d == 0 {
        return None;
    }
    let (ad, bd) = (
        num_traits::pow(a.clone(), d as usize),
        num_traits::pow(b.clone(), d as usize),
    );
    if d % 2 == 1 {
        return Interval::closed(ad, bd).ok();
    }
    let hi = if ad > bd { ad.clone() } else { bd.clone() };
    let lo = if a.is_negative() && b.is_positive() {
        Rational::zero()
    } else if ad < bd {
        ad
    } else {
        bd
    };
    Interval::closed(lo, hi).ok()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Subsequence {
    pub sequence: Sequence,
    pub d: usize,
    pub l: usize,
    /// Image of the input support under `x -> x^d`, when known.
    pub support: Option<Interval>,
}

/// `(y_{dk+ℓ})_k` over all available `k`.
pub fn subsequence_transform(
    y: &Sequence,
    d: usize,
    l: usize,
    support: Option<&Interval>,
) -> Result<Subsequence> {
    if d == 0 {
        return Err(Error::InvalidInput(
            "subsequence step d must be at least 1".into(),
        ));
    }
    y.require(l + 1)?;
    let values: Vec<Rational> = y.values().iter().skip(l).step_by(d).cloned().collect();
    let label = format!("{}[{d}k+{l}]", y.label());
    let image = support.and_then(|iv| u32::try_from(d).ok().and_then(|d| support_image(iv, d)));
    Ok(Subsequence {
        sequence: Sequence::new(values, label, Origin::Transform)?,
        d,
        l,
        support: image,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PatternWitness {
    /// Position `s` of the first unequal pair of gaps.
    pub position: usize,
    #[serde(with = "serde_fraction")]
    pub epsilon: Rational,
    pub a: usize,
    pub d: usize,
    pub e: i64,
    /// `[[ε^a, ε^{a+d}], [ε^{a+d}, ε^{a+2d+e}]]`
    #[serde(serialize_with = "serialize_block")]
    pub block: [[Rational; 2]; 2],
    #[serde(with = "serde_fraction")]
    pub determinant: Rational,
    /// The block is the principal minor of this matrix of the subsequence
    /// moments of `δ_ε`, on rows `row, row + 1`.
    pub matrix: MatrixKind,
    pub row: usize,
}

fn serialize_block<S: serde::Serializer>(
    block: &[[Rational; 2]; 2],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(2))?;
    for row in block {
        seq.serialize_element(
            &row.iter()
                .map(crate::rational::to_fraction_string)
                .collect::<Vec<_>>(),
        )?;
    }
    seq.end()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PatternVerdict {
    pub preserving: bool,
    pub common_gap: Option<usize>,
    pub witness: Option<PatternWitness>,
}

/// An index pattern maps every Stieltjes moment sequence to one iff it is
/// affine. Otherwise the witness is a negative `2×2` block for `μ = δ_ε`,
/// `ε = 1/2` when the gap grows and `ε = 2` when it shrinks.
pub fn pattern_is_stieltjes_preserving(indices: &[usize]) -> Result<PatternVerdict> {
    if indices.len() < 3 {
        return Err(Error::TooShort(indices.len()));
    }
    if indices.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput(
            "indices must be strictly increasing".into(),
        ));
    }
    let gaps: Vec<usize> = indices.windows(2).map(|w| w[1] - w[0]).collect();
    let Some(s) = gaps.windows(2).position(|g| g[0] != g[1]) else {
        return Ok(PatternVerdict {
            preserving: true,
            common_gap: Some(gaps[0]),
            witness: None,
        });
    };
    let (a, d) = (indices[s], gaps[s]);
    let e = gaps[s + 1] as i64 - d as i64;
    let epsilon = if e > 0 { frac(1, 2) } else { int(2) };
    let pow = |k: usize| num_traits::pow(epsilon.clone(), k);
    let block = [[pow(a), pow(a + d)], [pow(a + d), pow(indices[s + 2])]];
    let determinant = &block[0][0] * &block[1][1] - &block[0][1] * &block[1][0];
    let (matrix, row) = if s % 2 == 0 {
        (MatrixKind::Hankel, s / 2)
    } else {
        (MatrixKind::ShiftedHankel, s / 2)
    };
    Ok(PatternVerdict {
        preserving: false,
        common_gap: None,
        witness: Some(PatternWitness {
            position: s,
            epsilon,
            a,
            d,
            e,
            block,
            determinant,
            matrix,
            row,
        }),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GVerdict {
    CertifiedNonnegNumeric { min_value: f64, argmin: f64 },
    Violated { x: f64, value: f64 },
}

impl GVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, GVerdict::CertifiedNonnegNumeric { .. })
    }
}

/// Negative values above `-NONNEG_SLACK * scale` count as roundoff.
const NONNEG_SLACK: f64 = 1e-12;

/// Samples `g` on `grid + 1` points of `[a, b]` and at the roots of `g'`
/// located by bisection on its sign changes.
pub fn check_g_nonneg(g: &Polynomial, a: f64, b: f64, grid: usize) -> GVerdict {
    let grid = grid.max(2);
    let dg = g.derivative();
    let xs: Vec<f64> = (0..=grid)
        .map(|i| a + (b - a) * i as f64 / grid as f64)
        .collect();
    let mut candidates = xs.clone();
    for w in xs.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (dg.eval_f64(lo), dg.eval_f64(hi));
        if flo == 0.0 || fhi == 0.0 || flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if dg.eval_f64(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        candidates.push(0.5 * (lo + hi));
    }
    let reach = a.abs().max(b.abs()).max(1.0);
    let scale: f64 = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| to_f64(c).abs() * reach.powi(k as i32))
        .sum();
    let (mut min_value, mut argmin) = (f64::INFINITY, a);
    for x in candidates {
        let v = g.eval_f64(x);
        if v < min_value {
            min_value = v;
            argmin = x;
        }
    }
    if min_value < -NONNEG_SLACK * scale.max(1.0) {
        GVerdict::Violated {
            x: argmin,
            value: min_value,
        }
    } else {
        GVerdict::CertifiedNonnegNumeric { min_value, argmin }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LinearCombination {
    pub sequence: Sequence,
    pub g: Polynomial,
    pub check: GVerdict,
    /// `g(x) w(x)` when a density for the input was supplied.
    pub density: Option<Density>,
}

/// `(T_g y)_k = Σ_j g_j y_{k+j}`, the moments of `g dμ`.
pub fn linear_combination_transform(
    y: &Sequence,
    g: &Polynomial,
    interval: &Interval,
    density: Option<&Density>,
) -> Result<LinearCombination> {
    let check = check_g_nonneg(g, interval.lower(), interval.upper(), G_GRID);
    if let GVerdict::Violated { x, value } = check {
        return Err(Error::GNegative { at: x, value });
    }
    let deg = g.degree().unwrap_or(0);
    y.require(deg + 1)?;
    let values: Vec<Rational> = (0..y.len() - deg)
        .map(|k| {
            g.coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| c * &y.values()[k + j])
                .sum()
        })
        .collect();
    let sequence = Sequence::new(values, format!("T[{g}]({})", y.label()), Origin::Transform)?;
    let density = density.map(|w| {
        let gf = g.clone();
        w.multiplied_by(
            format!("({g})*{}", w.label),
            format!("({g})*({})", w.formula),
            move |x| gf.eval_f64(x),
        )
    });
    Ok(LinearCombination {
        sequence,
        g: g.clone(),
        check,
        density,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransformSpec {
    Subsequence { d: usize, l: usize },
    LinearCombination { g: Polynomial, interval: Interval },
}

impl TransformSpec {
    /// `g(x) = x^offset (c_0 + c_1 x + ...)`.
    pub fn shifted_combination(coeffs: Vec<Rational>, offset: usize, interval: Interval) -> Self {
        TransformSpec::LinearCombination {
            g: Polynomial::new(coeffs).shift_up(offset),
            interval,
        }
    }

    pub fn apply(&self, y: &Sequence, support: Option<&Interval>) -> Result<Sequence> {
        match self {
            TransformSpec::Subsequence { d, l } => {
                Ok(subsequence_transform(y, *d, *l, support)?.sequence)
            }
            TransformSpec::LinearCombination { g, interval } => {
                Ok(linear_combination_transform(y, g, interval, None)?.sequence)
            }
        }
    }
}

/// Density of the transformed sequence: the pushforward of `x^ℓ w(x) dx`
/// under `u = x^d`, i.e. `(1/d) u^{(ℓ+1)/d - 1} w(u^{1/d})`, or `g w`.
pub fn transformed_density(transform: &TransformSpec, dens: &Density) -> Result<Density> {
    match transform {
        TransformSpec::LinearCombination { g, .. } => {
            let gf = g.clone();
            Ok(dens.multiplied_by(
                format!("({g})*{}", dens.label),
                format!("({g})*({})", dens.formula),
                move |x| gf.eval_f64(x),
            ))
        }
        TransformSpec::Subsequence { d, l } => {
            let d32 = u32::try_from(*d)
                .map_err(|_| Error::InvalidInput(format!("step {d} too large")))?;
            let image = support_image(&dens.interval, d32)
                .filter(|_| dens.interval.is_nonnegative())
                .ok_or_else(|| {
                    Error::InvalidInput("pushforward needs rational endpoints with a >= 0".into())
                })?;
            let (a, b) = (dens.lower(), dens.upper());
            let (alpha, beta) = (dens.left_exponent, dens.right_exponent);
            let (df, lf) = (*d as f64, *l as f64);
            let (ad, bd) = (a.powf(df), b.powf(df));
            let at_zero = a == 0.0;
            let left = if at_zero {
                (lf + 1.0 + alpha) / df - 1.0
            } else {
                alpha
            };
            let inner = Arc::clone(&dens.regular);
            let regular = move |u: f64| {
                let x = u.powf(1.0 / df);
                let head = if at_zero {
                    1.0
                } else {
                    u.powf((lf + 1.0) / df - 1.0) * ((x - a) / (u - ad)).powf(alpha)
                };
                head * ((b - x) / (bd - u)).powf(beta) * inner(x) / df
            };
            Density::from_parts(
                format!("{}[{d}k+{l}]", dens.label),
                format!(
                    "(1/{d})*u^(({l}+1)/{d}-1)*w(u^(1/{d})), w = {}",
                    dens.formula
                ),
                image,
                left,
                beta,
                Arc::new(regular),
            )
        }
    }
}

/// The moved Catalan density `x^{(1-d)/d}/(2dπ) sqrt((4 - x^{1/d})/x^{1/d})`
/// on `[0, 4^d]`, whose moments are `C_{dn}`.
pub fn catalan_moved_density(d: u32) -> Result<Density> {
    if d == 0 {
        return Err(Error::InvalidInput("d must be at least 1".into()));
    }
    let df = f64::from(d);
    let bd = 4f64.powf(df);
    let iv = Interval::closed(Rational::zero(), num_traits::pow(int(4), d as usize))?;
    // w = x^{1/(2d) - 1} (4^d - x)^{1/2} r(x)
    let regular = move |x: f64| ((4.0 - x.powf(1.0 / df)) / (bd - x)).sqrt() / (2.0 * df * PI);
    Density::from_parts(
        format!("catalan_moved_d{d}"),
        format!("x^((1-{d})/{d})/(2*{d}*pi)*sqrt((4-x^(1/{d}))/x^(1/{d}))"),
        iv,
        1.0 / (2.0 * df) - 1.0,
        0.5,
        Arc::new(regular),
    )
}

/// The printed moved density evaluated directly.
pub fn catalan_moved_weight(d: u32, x: f64) -> f64 {
    let df = f64::from(d);
    let r = x.powf(1.0 / df);
    x.powf((1.0 - df) / df) / (2.0 * df * PI) * ((4.0 - r) / r).sqrt()
}

/// Transforms `y`, then compares with quadrature moments of the
/// transformed density.
pub fn verify_transform_consistency(
    y: &Sequence,
    transform: &TransformSpec,
    dens: &Density,
    n_max: usize,
    tol: f64,
) -> Result<RepresentationReport> {
    let target = transform.apply(y, Some(&dens.interval))?;
    let moved = transformed_density(transform, dens)?;
    target.require(n_max + 1)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for (n, exact) in target.values().iter().take(n_max + 1).enumerate() {
        let t = to_f64(exact);
        let n32 = n as i32;
        let computed = integrate_against(
            &moved,
            |x| x.powi(n32),
            tol * QUADRATURE_SHARE * t.abs().max(1.0),
        )?
        .value;
        let abs_error = (computed - t).abs();
        let rel_error = if t == 0.0 {
            abs_error
        } else {
            abs_error / t.abs()
        };
        rows.push(MomentRow {
            n,
            target_exact: exact.clone(),
            target: t,
            computed,
            abs_error,
            rel_error,
        });
    }
    let max_rel_error = rows.iter().map(|r| r.rel_error).fold(0.0, f64::max);
    let first_failure = rows
        .iter()
        .find(|r| r.rel_error.is_nan() || r.rel_error >= tol)
        .map(|r| r.n);
    Ok(RepresentationReport {
        label: target.label().to_string(),
        density: moved,
        n_max,
        tol,
        rows,
        max_rel_error,
        passed: first_failure.is_none(),
        first_failure,
    })
}
