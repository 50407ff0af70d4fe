//! Densities of integral representations, moment quadrature, and the two
//! sequence transforms (affine subsequences and `T_g`).

pub mod quadrature;
pub mod transforms;

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{serde_fraction, to_f64, Rational};
use crate::seqcore::{CatalogId, Sequence};

pub use quadrature::{integrate, QuadResult};
pub use transforms::{
    catalan_moved_density, check_g_nonneg, linear_combination_transform,
    pattern_is_stieltjes_preserving, subsequence_transform, support_image, transformed_density,
    verify_transform_consistency, GVerdict, LinearCombination, PatternVerdict, PatternWitness,
    Subsequence, TransformSpec,
};

/// Names accepted by [`density_catalog`].
pub const DENSITY_NAMES: [&str; 5] = [
    "catalan",
    "central_binomial",
    "motzkin",
    "central_trinomial",
    "delannoy",
];

pub type Factor = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// `w(x) = (x - a)^α (b - x)^β r(x)` on `[a, b]` with `r` smooth and
/// positive inside.
#[derive(Clone, Serialize)]
pub struct Density {
    pub label: String,
    pub interval: Interval,
    pub left_exponent: f64,
    pub right_exponent: f64,
    pub formula: String,
    #[serde(skip)]
    regular: Factor,
}

impl fmt::Debug for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Density")
            .field("label", &self.label)
            .field("interval", &self.interval.to_string())
            .field("left_exponent", &self.left_exponent)
            .field("right_exponent", &self.right_exponent)
            .field("formula", &self.formula)
            .finish()
    }
}

impl Density {
    pub fn from_parts(
        label: impl Into<String>,
        formula: impl Into<String>,
        interval: Interval,
        left_exponent: f64,
        right_exponent: f64,
        regular: Factor,
    ) -> Result<Self> {
        for e in [left_exponent, right_exponent] {
            if e <= -1.0 || !e.is_finite() {
                return Err(Error::NonIntegrable(e));
            }
        }
        Ok(Density {
            label: label.into(),
            interval,
            left_exponent,
            right_exponent,
            formula: formula.into(),
            regular,
        })
    }

    pub fn lower(&self) -> f64 {
        self.interval.lower()
    }

    pub fn upper(&self) -> f64 {
        self.interval.upper()
    }

    /// The smooth factor `r(x)`.
    pub fn regular(&self, x: f64) -> f64 {
        (self.regular)(x)
    }

    /// `w(x)`, zero outside the open interval.
    pub fn weight(&self, x: f64) -> f64 {
        let (a, b) = (self.lower(), self.upper());
        if x <= a || x >= b {
            return 0.0;
        }
        (x - a).powf(self.left_exponent) * (b - x).powf(self.right_exponent) * self.regular(x)
    }

    /// `g(x) w(x)` for a `g` smooth on `[a, b]`; exponents are kept.
    pub fn multiplied_by(
        &self,
        label: impl Into<String>,
        formula: impl Into<String>,
        g: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Density {
        let inner = Arc::clone(&self.regular);
        Density {
            label: label.into(),
            interval: self.interval.clone(),
            left_exponent: self.left_exponent,
            right_exponent: self.right_exponent,
            formula: formula.into(),
            regular: Arc::new(move |x| g(x) * inner(x)),
        }
    }

    /// `x,w(x)` rows at `points` interior midpoints.
    pub fn to_csv(&self, points: usize) -> String {
        let (a, b) = (self.lower(), self.upper());
        let mut out = String::from("x,w\n");
        for i in 0..points {
            let x = a + (b - a) * (i as f64 + 0.5) / points as f64;
            out.push_str(&format!("{x},{}\n", self.weight(x)));
        }
        out
    }
}

fn constant(c: f64) -> Factor {
    Arc::new(move |_| c)
}

/// Closed-form densities of the catalog sequences that have one.
pub fn density_catalog(name: &str) -> Result<Density> {
    let id: CatalogId = name.parse()?;
    let interval = id.published_support();
    let (formula, exponents, c) = match id {
        CatalogId::Catalan => ("(1/(2*pi))*sqrt((4-x)/x)", (-0.5, 0.5), 0.5 / PI),
        CatalogId::CentralBinomial => ("1/(pi*sqrt(x*(4-x)))", (-0.5, -0.5), 1.0 / PI),
        CatalogId::Motzkin => ("(1/(2*pi))*sqrt((3-x)*(1+x))", (0.5, 0.5), 0.5 / PI),
        CatalogId::CentralTrinomial => ("1/(pi*sqrt((3-x)*(1+x)))", (-0.5, -0.5), 1.0 / PI),
        CatalogId::Delannoy => (
            "1/(pi*sqrt((3+2*sqrt(2)-x)*(x-3+2*sqrt(2))))",
            (-0.5, -0.5),
            1.0 / PI,
        ),
        _ => {
            return Err(Error::UnknownName(format!(
                "{name} (no closed-form density)"
            )))
        }
    };
    Density::from_parts(
        id.name(),
        formula,
        interval,
        exponents.0,
        exponents.1,
        constant(c),
    )
}

/// Whether `2e + 1` is a nonnegative integer.
fn is_cosine_friendly(e: f64) -> bool {
    let t = 2.0 * e + 1.0;
    t >= -1e-12 && (t - t.round()).abs() < 1e-12
}

/// Smallest `p <= 32` with `p (e + 1)` integral, else one making the
/// substituted exponent at least 1.
fn power_for(e: f64) -> f64 {
    (1..=32)
        .map(f64::from)
        .find(|p| {
            let v = p * (e + 1.0);
            (v - v.round()).abs() < 1e-12
        })
        .unwrap_or_else(|| (2.0 / (e + 1.0)).ceil())
}

/// `∫ f(x) w(x) dx` after removing the endpoint singularities.
pub fn integrate_against<F>(dens: &Density, f: F, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (alpha, beta) = (dens.left_exponent, dens.right_exponent);
    for e in [alpha, beta] {
        if e <= -1.0 {
            return Err(Error::NonIntegrable(e));
        }
    }
    let (a, b) = (dens.lower(), dens.upper());

    if is_cosine_friendly(alpha) && is_cosine_friendly(beta) {
        // x = c - h cos θ: (x-a)^α (b-x)^β dx = (2h)^{α+β+1} sin^{2α+1}(θ/2) cos^{2β+1}(θ/2) dθ
        let center = to_f64(dens.interval.center());
        let h = 0.5 * (b - a);
        let scale = (2.0 * h).powf(alpha + beta + 1.0);
        let (ps, pc) = (
            (2.0 * alpha + 1.0).round() as i32,
            (2.0 * beta + 1.0).round() as i32,
        );
        let g = |theta: f64| {
            let (s, c) = (0.5 * theta).sin_cos();
            let x = center - h * theta.cos();
            scale * s.powi(ps) * c.powi(pc) * f(x) * dens.regular(x)
        };
        return Ok(integrate(g, 0.0, PI, tol));
    }

    let mid = 0.5 * (a + b);
    let (pl, pr) = (power_for(alpha), power_for(beta));
    let (ll, lr) = (mid - a, b - mid);
    // x = a + L t^p on the left half, x = b - L t^p on the right half
    let left = |t: f64| {
        let x = a + ll * t.powf(pl);
        ll.powf(alpha + 1.0)
            * pl
            * t.powf(pl * (alpha + 1.0) - 1.0)
            * (b - x).powf(beta)
            * f(x)
            * dens.regular(x)
    };
    let right = |t: f64| {
        let x = b - lr * t.powf(pr);
        lr.powf(beta + 1.0)
            * pr
            * t.powf(pr * (beta + 1.0) - 1.0)
            * (x - a).powf(alpha)
            * f(x)
            * dens.regular(x)
    };
    let l = integrate(left, 0.0, 1.0, 0.5 * tol);
    let r = integrate(right, 0.0, 1.0, 0.5 * tol);
    Ok(QuadResult {
        value: l.value + r.value,
        error: l.error + r.error,
        subintervals: l.subintervals + r.subintervals,
        converged: l.converged && r.converged,
    })
}

/// `∫_a^b x^n w(x) dx` to absolute tolerance `tol`.
pub fn moment_quadrature(dens: &Density, n: usize, tol: f64) -> Result<f64> {
    let n =
        i32::try_from(n).map_err(|_| Error::InvalidInput(format!("moment order {n} too large")))?;
    Ok(integrate_against(dens, |x| x.powi(n), tol)?.value)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentRow {
    pub n: usize,
    #[serde(with = "serde_fraction")]
    pub target_exact: Rational,
    pub target: f64,
    pub computed: f64,
    pub abs_error: f64,
    pub rel_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationReport {
    pub label: String,
    pub density: Density,
    pub n_max: usize,
    pub tol: f64,
    pub rows: Vec<MomentRow>,
    pub max_rel_error: f64,
    pub first_failure: Option<usize>,
    pub passed: bool,
}

/// Share of the relative tolerance given to each quadrature.
const QUADRATURE_SHARE: f64 = 1e-2;

/// Compares `y_0..y_{n_max}` with quadrature moments of `dens`; passes iff
/// the largest relative error is below `tol`.
pub fn verify_representation(
    y: &Sequence,
    dens: &Density,
    n_max: usize,
    tol: f64,
) -> Result<RepresentationReport> {
    y.require(n_max + 1)?;
    let mut rows = Vec::with_capacity(n_max + 1);
    for (n, exact) in y.values().iter().take(n_max + 1).enumerate() {
        let target = to_f64(exact);
        let computed = moment_quadrature(dens, n, tol * QUADRATURE_SHARE * target.abs().max(1.0))?;
        let abs_error = (computed - target).abs();
        let rel_error = if target == 0.0 {
            abs_error
        } else {
            abs_error / target.abs()
        };
        rows.push(MomentRow {
            n,
            target_exact: exact.clone(),
            target,
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
        label: y.label().to_string(),
        density: dens.clone(),
        n_max,
        tol,
        rows,
        max_rel_error,
        passed: first_failure.is_none(),
        first_failure,
    })
}
