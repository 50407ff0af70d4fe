//! Chain sequences and support certificates for `y(p, s; q, t)`.
//!
//! `ξ_1 >= a` holds iff `s_n > a` for all `n` and `(α_n(a))` is a chain
//! sequence; `η_1 <= b` iff `s_n < b` and `(α_n(b))` is a chain sequence.
//! Chain-ness is decided by the minimal parameter sequence `g_0 = 0`,
//! `g_{n+1} = a_n / (1 - g_n)`.

use std::cmp::Ordering;

use num_traits::{Num, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::orthopoly::true_interval_estimate;
use crate::rational::{cmp_scaled_sqrt, int, serde_fraction, to_f64, to_plain_string, Rational};
use crate::seqcore::SigmaTauSpec;

/// Absolute tolerance for `a_n = (1 - g_n) g_{n+1}` in binary64.
pub const CHAIN_TOLERANCE: f64 = 1e-12;

/// Slack for zeros against a certified interval.
pub const ZERO_SLACK: f64 = 1e-9;

/// `α_n(x) = t_{n+1} / ((s_n - x)(s_{n+1} - x))` for `n = 0..=n_max`.
pub fn alpha_sequence(spec: &SigmaTauSpec, x: f64, n_max: usize) -> Result<Vec<f64>> {
    let sigma: Vec<f64> = (0..=n_max + 1).map(|k| to_f64(spec.sigma(k))).collect();
    if let Some(k) = sigma.iter().position(|&s| s == x) {
        return Err(Error::PoleAt(k));
    }
    Ok((0..=n_max)
        .map(|n| to_f64(spec.tau(n + 1)) / ((sigma[n] - x) * (sigma[n + 1] - x)))
        .collect())
}

/// Exact `α_n(x)` at a rational point.
pub fn alpha_exact(spec: &SigmaTauSpec, x: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    if let Some(k) = (0..=n_max + 1).find(|&k| spec.sigma(k) == x) {
        return Err(Error::PoleAt(k));
    }
    Ok((0..=n_max)
        .map(|n| spec.tau(n + 1) / ((spec.sigma(n) - x) * (spec.sigma(n + 1) - x)))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainMode {
    MinimalParameters,
    ExplicitParameters,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainVerdict<T> {
    /// Last index `n` whose condition held; `None` if index 0 failed.
    pub is_chain_up_to: Option<usize>,
    pub parameters: Vec<T>,
    pub failure_index: Option<usize>,
    pub mode: ChainMode,
}

impl<T> ChainVerdict<T> {
    /// No failure among the checked indices.
    pub fn is_chain(&self) -> bool {
        self.failure_index.is_none()
    }
}

/// Minimal parameters for `a_0..a_{n_max}` (truncated to the data).
///
/// Fails at the first `n` where `g_{n+1}` leaves `[0, 1)`; the offending
/// parameter is kept as the last entry.
pub fn minimal_parameters<T>(a: &[T], n_max: usize) -> ChainVerdict<T>
where
    T: Clone + PartialOrd + Num,
{
    let last = n_max.min(a.len().saturating_sub(1));
    let mut g = vec![T::zero()];
    let mut is_chain_up_to = None;
    let mut failure_index = None;
    for (n, a_n) in a.iter().enumerate().take(last + 1) {
        let next = a_n.clone() / (T::one() - g[n].clone());
        let ok = next >= T::zero() && next < T::one();
        g.push(next);
        if !ok {
            failure_index = Some(n);
            break;
        }
        is_chain_up_to = Some(n);
    }
    ChainVerdict {
        is_chain_up_to,
        parameters: g,
        failure_index,
        mode: ChainMode::MinimalParameters,
    }
}

/// Checks a proposed parameter sequence: `0 <= g_0 < 1`, `0 < g_{n+1} < 1`,
/// and `|a_n - (1 - g_n) g_{n+1}| <= tolerance`.
pub fn is_chain_with_parameters<T>(a: &[T], g: &[T], tolerance: &T) -> Result<ChainVerdict<T>>
where
    T: Clone + PartialOrd + Signed,
{
    if g.len() != a.len() + 1 {
        return Err(Error::LengthMismatch {
            expected: a.len() + 1,
            actual: g.len(),
        });
    }
    let in_open_unit = |v: &T| *v > T::zero() && *v < T::one();
    let mut is_chain_up_to = None;
    let mut failure_index = None;
    for n in 0..a.len() {
        let start_ok = n > 0 || (g[0] >= T::zero() && g[0] < T::one());
        let product = (T::one() - g[n].clone()) * g[n + 1].clone();
        let ok =
            start_ok && in_open_unit(&g[n + 1]) && (a[n].clone() - product).abs() <= *tolerance;
        if !ok {
            failure_index = Some(n);
            break;
        }
        is_chain_up_to = Some(n);
    }
    Ok(ChainVerdict {
        is_chain_up_to,
        parameters: g.to_vec(),
        failure_index,
        mode: ChainMode::ExplicitParameters,
    })
}

/// Minimal-parameter test of `(α_n(x))_{n <= n_check}`.
pub fn chain_test_at(spec: &SigmaTauSpec, x: f64, n_check: usize) -> Result<ChainVerdict<f64>> {
    Ok(minimal_parameters(
        &alpha_sequence(spec, x, n_check)?,
        n_check,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    /// `p > s - 2 sqrt(t)`
    pub p_above_lower: bool,
    /// `q < s + 2 sqrt(t)`
    pub q_below_upper: bool,
    /// `t < s + 2 sqrt(t)`
    pub t_below_upper: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.p_above_lower && self.q_below_upper && self.t_below_upper
    }
}

/// Exact analysis of `[s - 2 sqrt(t), s + 2 sqrt(t)]` for `y(p, s; q, t)`.
///
/// At either endpoint the tail `α_n = t / (s - x)² = 1/4` is exact, so the
/// chain question reduces to the head: `(α_0, 1/4, 1/4, ...)` is a chain
/// sequence iff `α_0 <= 1/2`, with parameters `(1 - 2 α_0, 1/2, 1/2, ...)`.
/// At the lower end `1 - 2 α_0 = 1 - q / (sqrt(t) (p - s + 2 sqrt(t)))`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SupportCertificate {
    #[serde(with = "serde_fraction")]
    pub p: Rational,
    #[serde(with = "serde_fraction")]
    pub s: Rational,
    #[serde(with = "serde_fraction")]
    pub q: Rational,
    #[serde(with = "serde_fraction")]
    pub t: Rational,
    pub interval: Interval,
    pub hypotheses: Hypotheses,
    /// `p < s + 2 sqrt(t)`: `s_n < b` for every `n`.
    pub p_below_upper: bool,
    /// `s >= 2 sqrt(t)`: the interval lies in `[0, ∞)`.
    pub stieltjes_flag: bool,
    /// `1 - q / (sqrt(t) (p - s + 2 sqrt(t)))`.
    pub lower_initial_parameter: Option<f64>,
    /// Exact `0 <= g_0 < 1` for the lower endpoint.
    pub lower_initial_parameter_valid: bool,
    /// `1 - q / (sqrt(t) (s + 2 sqrt(t) - p))`.
    pub upper_initial_parameter: Option<f64>,
    pub upper_initial_parameter_valid: bool,
}

impl SupportCertificate {
    /// Evaluates every flag without rejecting anything.
    pub fn evaluate(p: Rational, s: Rational, q: Rational, t: Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NotPositiveCase(1));
        }
        if !t.is_positive() {
            return Err(Error::NotPositiveCase(2));
        }
        let interval = Interval::support_of(&s, &t)?;
        let hypotheses = Hypotheses {
            p_above_lower: interval.cmp_lower(&p) == Ordering::Greater,
            q_below_upper: interval.cmp_upper(&q) == Ordering::Less,
            t_below_upper: interval.cmp_upper(&t) == Ordering::Less,
        };
        let p_below_upper = interval.cmp_upper(&p) == Ordering::Less;
        let stieltjes_flag = interval.is_nonnegative();

        let two_t = &t * int(2);
        // g_0 >= 0  <=>  q <= sqrt(t)(p - s) + 2t
        let lower_initial_parameter_valid = hypotheses.p_above_lower
            && cmp_scaled_sqrt(&(&q - &two_t), &(&p - &s), &t) != Ordering::Greater;
        let upper_initial_parameter_valid =
            p_below_upper && cmp_scaled_sqrt(&(&q - &two_t), &(&s - &p), &t) != Ordering::Greater;

        let (pf, sf, qf, rt) = (to_f64(&p), to_f64(&s), to_f64(&q), to_f64(&t).sqrt());
        let head = |gap: f64| (gap > 0.0).then(|| 1.0 - qf / (rt * gap));
        Ok(SupportCertificate {
            lower_initial_parameter: head(pf - sf + 2.0 * rt),
            upper_initial_parameter: head(sf + 2.0 * rt - pf),
            p,
            s,
            q,
            t,
            interval,
            hypotheses,
            p_below_upper,
            stieltjes_flag,
            lower_initial_parameter_valid,
            upper_initial_parameter_valid,
        })
    }

    pub fn hypotheses_ok(&self) -> bool {
        self.hypotheses.all()
    }

    /// Exact chain certificate at both endpoints: `s_n` strictly inside and
    /// a valid explicit parameter sequence at each end.
    pub fn is_certified(&self) -> bool {
        self.hypotheses.p_above_lower
            && self.p_below_upper
            && self.lower_initial_parameter_valid
            && self.upper_initial_parameter_valid
    }

    /// `(g_0, 1/2, 1/2, ...)` of length `len` for `α_n(s - 2 sqrt(t))`.
    pub fn lower_parameter_sequence(&self, len: usize) -> Option<Vec<f64>> {
        let g0 = self.lower_initial_parameter?;
        Some(
            std::iter::once(g0)
                .chain(std::iter::repeat(0.5))
                .take(len)
                .collect(),
        )
    }

    fn failed_hypotheses(&self) -> Vec<String> {
        let lower = self.interval.lower_string();
        let upper = self.interval.upper_string();
        let mut failed = Vec::new();
        if !self.hypotheses.p_above_lower {
            failed.push(format!(
                "p > s-2*sqrt(t) fails: p = {} vs {lower}",
                to_plain_string(&self.p)
            ));
        }
        if !self.hypotheses.q_below_upper {
            failed.push(format!(
                "q < s+2*sqrt(t) fails: q = {} vs {upper}",
                to_plain_string(&self.q)
            ));
        }
        if !self.hypotheses.t_below_upper {
            failed.push(format!(
                "t < s+2*sqrt(t) fails: t = {} vs {upper}",
                to_plain_string(&self.t)
            ));
        }
        failed
    }
}

/// Certificate for `[s - 2 sqrt(t), s + 2 sqrt(t)]`; errors when
/// `p > s - 2 sqrt(t)` or `max{q, t} < s + 2 sqrt(t)` fails.
pub fn support_interval(
    p: Rational,
    s: Rational,
    q: Rational,
    t: Rational,
) -> Result<SupportCertificate> {
    let cert = SupportCertificate::evaluate(p, s, q, t)?;
    if !cert.hypotheses_ok() {
        return Err(Error::HypothesisFailure {
            failed: cert.failed_hypotheses(),
        });
    }
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SupportReport {
    pub certificate: SupportCertificate,
    pub n_check: usize,
    /// `s_n > a` for `n <= n_check`, exact.
    pub sigma_above_lower: bool,
    /// `s_n < b` for `n <= n_check`, exact.
    pub sigma_below_upper: bool,
    pub lower_chain: ChainVerdict<f64>,
    pub upper_chain: ChainVerdict<f64>,
    /// `(s - a)² = (s - b)² = 4t`, so `α_n = 1/4` exactly for `n >= 1`.
    pub constant_tail_is_quarter: bool,
    /// Extreme zeros of `P_{n_check}`.
    pub zero_range: (f64, f64),
    pub zeros_inside: bool,
    pub passed: bool,
}

/// Verifies the support interval of a shorthand spec through `n_check`:
/// exact `s_n` bounds, minimal-parameter chain runs of `α_n(a)` and
/// `α_n(b)`, the exact tail argument, and zeros of `P_{n_check}`.
pub fn certify_support(spec: &SigmaTauSpec, n_check: usize) -> Result<SupportReport> {
    let sh = spec.shorthand().ok_or_else(|| {
        Error::InvalidInput("support certification needs a (p,s;q,t) spec".into())
    })?;
    let certificate = support_interval(sh.p.clone(), sh.s.clone(), sh.q.clone(), sh.t.clone())?;
    let interval = &certificate.interval;

    let sigma_above_lower =
        (0..=n_check).all(|n| interval.cmp_lower(spec.sigma(n)) == Ordering::Greater);
    let sigma_below_upper =
        (0..=n_check).all(|n| interval.cmp_upper(spec.sigma(n)) == Ordering::Less);

    let chain = |x: f64| -> ChainVerdict<f64> {
        chain_test_at(spec, x, n_check).unwrap_or_else(|_| ChainVerdict {
            is_chain_up_to: None,
            parameters: vec![0.0],
            failure_index: Some(0),
            mode: ChainMode::MinimalParameters,
        })
    };
    let lower_chain = chain(interval.lower());
    let upper_chain = chain(interval.upper());
    let constant_tail_is_quarter = (1..=n_check + 1)
        .all(|n| spec.sigma(n) == &sh.s && spec.tau(n + 1) == &sh.t)
        && interval.center() == &sh.s
        && interval.radius_sq() == &(&sh.t * int(4));

    let zero_range = true_interval_estimate(spec, n_check.max(1))?;
    let zeros_inside = interval.contains_approx(zero_range.0, ZERO_SLACK)
        && interval.contains_approx(zero_range.1, ZERO_SLACK);

    let passed = sigma_above_lower
        && sigma_below_upper
        && lower_chain.is_chain()
        && upper_chain.is_chain()
        && constant_tail_is_quarter
        && certificate.lower_initial_parameter_valid
        && certificate.upper_initial_parameter_valid
        && zeros_inside;
    Ok(SupportReport {
        certificate,
        n_check,
        sigma_above_lower,
        sigma_below_upper,
        lower_chain,
        upper_chain,
        constant_tail_is_quarter,
        zero_range,
        zeros_inside,
        passed,
    })
}
