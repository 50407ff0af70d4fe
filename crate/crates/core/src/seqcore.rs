//! Recursive matrices and Catalan-like numbers generated from `(σ, τ)` data.
//!
//! `σ = (s_0, s_1, ...)` and `τ = (t_1, t_2, ...)` are stored as finite
//! prefixes followed by a constant tail. `τ` is indexed from 1, matching the
//! recurrence `r_{n+1,k} = r_{n,k-1} + s_k r_{n,k} + t_{k+1} r_{n,k+1}`; the
//! prefix vector holds `t_1` at position 0.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{
    int, parse_rational, serde_fraction, to_fraction_string, to_plain_string, Rational,
};

/// The eventually-constant form `σ = (p, s, s, ...)`, `τ = (q, t, t, ...)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shorthand {
    #[serde(with = "serde_fraction")]
    pub p: Rational,
    #[serde(with = "serde_fraction")]
    pub s: Rational,
    #[serde(with = "serde_fraction")]
    pub q: Rational,
    #[serde(with = "serde_fraction")]
    pub t: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaTauSpec {
    #[serde(with = "serde_fraction::vec")]
    sigma_prefix: Vec<Rational>,
    #[serde(with = "serde_fraction")]
    sigma_tail: Rational,
    #[serde(with = "serde_fraction::vec")]
    tau_prefix: Vec<Rational>,
    #[serde(with = "serde_fraction")]
    tau_tail: Rational,
    shorthand: Option<Shorthand>,
    positive_case: bool,
}

impl SigmaTauSpec {
    /// `σ = (p, s, s, ...)`, `τ = (q, t, t, ...)`.
    pub fn new(p: Rational, s: Rational, q: Rational, t: Rational) -> Result<Self> {
        let mut spec = Self::from_prefixes(vec![p.clone()], s.clone(), vec![q.clone()], t.clone())?;
        spec.shorthand = Some(Shorthand { p, s, q, t });
        Ok(spec)
    }

    pub fn from_prefixes(
        sigma_prefix: Vec<Rational>,
        sigma_tail: Rational,
        tau_prefix: Vec<Rational>,
        tau_tail: Rational,
    ) -> Result<Self> {
        for (i, t) in tau_prefix.iter().enumerate() {
            if t.is_zero() {
                return Err(Error::ZeroTau { index: i + 1 });
            }
        }
        if tau_tail.is_zero() {
            return Err(Error::ZeroTau {
                index: tau_prefix.len() + 1,
            });
        }
        let positive_case = tau_prefix.iter().all(Signed::is_positive) && tau_tail.is_positive();
        Ok(SigmaTauSpec {
            sigma_prefix,
            sigma_tail,
            tau_prefix,
            tau_tail,
            shorthand: None,
            positive_case,
        })
    }

    /// Finite data `(s_0..s_{n-1})`, `(t_1..t_{n-1})` extended by repeating the
    /// last entries.
    pub fn from_finite(sigma: Vec<Rational>, tau: Vec<Rational>) -> Result<Self> {
        let sigma_tail = sigma
            .last()
            .cloned()
            .ok_or_else(|| Error::InvalidInput("sigma must be nonempty".into()))?;
        let tau_tail = tau
            .last()
            .cloned()
            .ok_or_else(|| Error::InvalidInput("tau must be nonempty".into()))?;
        Self::from_prefixes(sigma, sigma_tail, tau, tau_tail)
    }

    /// `s_k`, `k >= 0`.
    pub fn sigma(&self, k: usize) -> &Rational {
        self.sigma_prefix.get(k).unwrap_or(&self.sigma_tail)
    }

    /// `t_k`, `k >= 1`.
    pub fn tau(&self, k: usize) -> &Rational {
        assert!(k >= 1, "tau is indexed from 1");
        self.tau_prefix.get(k - 1).unwrap_or(&self.tau_tail)
    }

    pub fn shorthand(&self) -> Option<&Shorthand> {
        self.shorthand.as_ref()
    }

    pub fn is_positive_case(&self) -> bool {
        self.positive_case
    }

    /// First index `k >= 1` with `t_k <= 0`, if any.
    pub fn first_nonpositive_tau(&self) -> Option<usize> {
        if let Some(i) = self.tau_prefix.iter().position(|t| !t.is_positive()) {
            return Some(i + 1);
        }
        (!self.tau_tail.is_positive()).then_some(self.tau_prefix.len() + 1)
    }

    pub fn sigma_prefix(&self) -> &[Rational] {
        &self.sigma_prefix
    }

    pub fn tau_prefix(&self) -> &[Rational] {
        &self.tau_prefix
    }

    pub fn sigma_tail(&self) -> &Rational {
        &self.sigma_tail
    }

    pub fn tau_tail(&self) -> &Rational {
        &self.tau_tail
    }
}

impl fmt::Display for SigmaTauSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |prefix: &[Rational], tail: &Rational| {
            let mut parts: Vec<String> = prefix.iter().map(to_plain_string).collect();
            parts.push(to_plain_string(tail));
            parts.push(to_plain_string(tail));
            parts.join(",")
        };
        write!(
            f,
            "sigma=({},...), tau=({},...)",
            join(&self.sigma_prefix, &self.sigma_tail),
            join(&self.tau_prefix, &self.tau_tail)
        )
    }
}

/// `make_spec(p, s, q, t)`.
pub fn make_spec(p: Rational, s: Rational, q: Rational, t: Rational) -> Result<SigmaTauSpec> {
    SigmaTauSpec::new(p, s, q, t)
}

/// Lower-triangular recursive matrix; row `n` stores `r_{n,0..=n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursiveMatrix {
    rows: Vec<Vec<Rational>>,
}

impl RecursiveMatrix {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `r_{n,k}`, zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    pub fn column0(&self) -> Vec<Rational> {
        self.rows.iter().map(|row| row[0].clone()).collect()
    }

    /// Re-evaluates the defining recurrence at every stored entry.
    pub fn satisfies_recurrence(&self, spec: &SigmaTauSpec) -> bool {
        if self.rows[0] != [Rational::one()] {
            return false;
        }
        (0..self.n_max()).all(|n| {
            (0..=n + 1).all(|k| {
                let left = if k == 0 {
                    Rational::zero()
                } else {
                    self.get(n, k - 1)
                };
                let expected =
                    left + spec.sigma(k) * self.get(n, k) + spec.tau(k + 1) * self.get(n, k + 1);
                self.get(n + 1, k) == expected
            })
        })
    }
}

pub fn recursive_matrix(spec: &SigmaTauSpec, n_max: usize) -> RecursiveMatrix {
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Rational::one()]);
    for n in 0..n_max {
        let prev = &rows[n];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Rational::zero);
        let next: Vec<Rational> = (0..=n + 1)
            .map(|k| {
                let left = if k == 0 { Rational::zero() } else { at(k - 1) };
                left + spec.sigma(k) * at(k) + spec.tau(k + 1) * at(k + 1)
            })
            .collect();
        rows.push(next);
    }
    RecursiveMatrix { rows }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Catalog,
    RecursiveMatrix,
    Transform,
    External,
}

/// A finite prefix `y_0..y_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sequence {
    #[serde(with = "serde_fraction::vec")]
    values: Vec<Rational>,
    label: String,
    origin: Origin,
}

impl Sequence {
    pub fn new(values: Vec<Rational>, label: impl Into<String>, origin: Origin) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InsufficientData {
                needed: 1,
                available: 0,
            });
        }
        Ok(Sequence {
            values,
            label: label.into(),
            origin,
        })
    }

    pub fn from_integers(values: &[i64], label: impl Into<String>) -> Self {
        Self::new(
            values.iter().map(|&v| int(v)).collect(),
            label,
            Origin::External,
        )
        .expect("nonempty integer list")
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Errors unless at least `needed` terms are present.
    pub fn require(&self, needed: usize) -> Result<()> {
        if self.values.len() < needed {
            Err(Error::InsufficientData {
                needed,
                available: self.values.len(),
            })
        } else {
            Ok(())
        }
    }

    /// JSON array of `"num/den"` strings.
    pub fn to_json_array(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.values
                .iter()
                .map(|v| serde_json::Value::String(to_fraction_string(v)))
                .collect(),
        )
    }

    /// One value per line; integers bare, otherwise `num/den`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.values {
            out.push_str(&to_plain_string(v));
            out.push('\n');
        }
        out
    }

    /// Accepts a JSON array of `"num/den"` strings or integers, or an object
    /// carrying such an array under `"values"`.
    pub fn from_json_str(text: &str, label: impl Into<String>) -> Result<Self> {
        let parsed: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("sequence JSON: {e}")))?;
        let array = match &parsed {
            serde_json::Value::Array(items) => items,
            serde_json::Value::Object(map) => match map.get("values") {
                Some(serde_json::Value::Array(items)) => items,
                _ => {
                    return Err(Error::InvalidInput(
                        "sequence JSON object lacks a `values` array".into(),
                    ))
                }
            },
            _ => return Err(Error::InvalidInput("sequence JSON must be an array".into())),
        };
        let values = array
            .iter()
            .map(|item| match item {
                serde_json::Value::String(s) => parse_rational(s),
                serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => {
                    parse_rational(&n.to_string())
                }
                other => Err(Error::InvalidInput(format!(
                    "not an exact sequence entry: {other}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values, label, Origin::External)
    }

    pub fn from_csv_str(text: &str, label: impl Into<String>) -> Result<Self> {
        let values = text
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Self::new(values, label, Origin::External)
    }
}

/// Column 0 of the recursive matrix, `y_0..y_{n_max}`.
pub fn catalan_like(spec: &SigmaTauSpec, n_max: usize) -> Sequence {
    // Only column 0 is needed, but the full triangle is what defines it.
    let values = recursive_matrix(spec, n_max).column0();
    Sequence::new(values, spec.to_string(), Origin::RecursiveMatrix).expect("nonempty")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogId {
    Catalan,
    ShiftedCatalan,
    Motzkin,
    CentralBinomial,
    CentralTrinomial,
    Delannoy,
    SchroderLarge,
    SchroderLittle,
    Fine,
    Riordan,
    Hexagonal,
}

impl CatalogId {
    pub const ALL: [CatalogId; 11] = [
        CatalogId::Catalan,
        CatalogId::ShiftedCatalan,
        CatalogId::Motzkin,
        CatalogId::CentralBinomial,
        CatalogId::CentralTrinomial,
        CatalogId::Delannoy,
        CatalogId::SchroderLarge,
        CatalogId::SchroderLittle,
        CatalogId::Fine,
        CatalogId::Riordan,
        CatalogId::Hexagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::Catalan => "catalan",
            CatalogId::ShiftedCatalan => "shifted_catalan",
            CatalogId::Motzkin => "motzkin",
            CatalogId::CentralBinomial => "central_binomial",
            CatalogId::CentralTrinomial => "central_trinomial",
            CatalogId::Delannoy => "delannoy",
            CatalogId::SchroderLarge => "schroder_large",
            CatalogId::SchroderLittle => "schroder_little",
            CatalogId::Fine => "fine",
            CatalogId::Riordan => "riordan",
            CatalogId::Hexagonal => "hexagonal",
        }
    }

    /// `(p, s, q, t)`.
    pub fn parameters(self) -> (i64, i64, i64, i64) {
        match self {
            CatalogId::Catalan => (1, 2, 1, 1),
            CatalogId::ShiftedCatalan => (2, 2, 1, 1),
            CatalogId::Motzkin => (1, 1, 1, 1),
            CatalogId::CentralBinomial => (2, 2, 2, 1),
            CatalogId::CentralTrinomial => (1, 1, 2, 1),
            CatalogId::Delannoy => (3, 3, 4, 2),
            CatalogId::SchroderLarge => (2, 3, 2, 2),
            CatalogId::SchroderLittle => (1, 3, 2, 2),
            CatalogId::Fine => (0, 2, 1, 1),
            CatalogId::Riordan => (0, 1, 1, 1),
            CatalogId::Hexagonal => (3, 3, 1, 1),
        }
    }

    pub fn spec(self) -> SigmaTauSpec {
        let (p, s, q, t) = self.parameters();
        SigmaTauSpec::new(int(p), int(s), int(q), int(t)).expect("catalog tau entries are nonzero")
    }

    /// The support interval published for this sequence alongside its
    /// `(σ, τ)` data. For `fine` and `schroder_little` this published interval
    /// does not contain the support; see `chainseq::support_interval`.
    pub fn published_support(self) -> Interval {
        let (_, s, _, t) = self.parameters();
        Interval::support_of(&int(s), &int(t)).expect("t > 0")
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The named sequence's `(σ, τ)` and its first `n_max + 1` terms.
pub fn catalog_sequence(name: &str, n_max: usize) -> Result<(SigmaTauSpec, Sequence)> {
    let id: CatalogId = name.parse()?;
    let spec = id.spec();
    let seq = Sequence::new(
        recursive_matrix(&spec, n_max).column0(),
        id.name(),
        Origin::Catalog,
    )?;
    Ok((spec, seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ints(seq: &Sequence) -> Vec<i64> {
        seq.values()
            .iter()
            .map(|v| {
                assert!(v.is_integer());
                i64::try_from(v.numer()).unwrap()
            })
            .collect()
    }

    // Hand-unrolled recurrence, independent of `recursive_matrix`: a dense
    // (n+2)-wide grid updated row by row.
    fn naive_column0(p: i64, s: i64, q: i64, t: i64, n_max: usize) -> Vec<i64> {
        let width = n_max + 2;
        let mut row = vec![0i64; width];
        row[0] = 1;
        let mut out = vec![1];
        for _ in 0..n_max {
            let mut next = vec![0i64; width];
            for k in 0..width - 1 {
                let sk = if k == 0 { p } else { s };
                let tk1 = if k == 0 { q } else { t };
                let left = if k == 0 { 0 } else { row[k - 1] };
                next[k] = left + sk * row[k] + tk1 * row[k + 1];
            }
            row = next;
            out.push(row[0]);
        }
        out
    }

    #[test]
    fn make_spec_examples() {
        let catalan = make_spec(int(1), int(2), int(1), int(1)).unwrap();
        assert_eq!(catalan.sigma(0), &int(1));
        assert_eq!(catalan.sigma(5), &int(2));
        assert_eq!(catalan.tau(1), &int(1));
        assert!(catalan.is_positive_case());

        let delannoy = make_spec(int(3), int(3), int(4), int(2)).unwrap();
        assert_eq!(delannoy.tau(1), &int(4));
        assert_eq!(delannoy.tau(2), &int(2));
        assert_eq!(delannoy.shorthand().unwrap().q, int(4));

        assert_eq!(
            make_spec(int(0), int(0), int(0), int(1)),
            Err(Error::ZeroTau { index: 1 })
        );
        assert_eq!(
            make_spec(int(0), int(0), int(1), int(0)),
            Err(Error::ZeroTau { index: 2 })
        );
        assert!(!make_spec(int(0), int(0), int(-1), int(1))
            .unwrap()
            .is_positive_case());
    }

    #[test]
    fn recursive_matrix_examples() {
        let catalan = CatalogId::Catalan.spec();
        let m = recursive_matrix(&catalan, 4);
        assert_eq!(m.column0(), [1, 1, 2, 5, 14].map(int));
        assert!(m.satisfies_recurrence(&catalan));
        for n in 0..=4 {
            assert_eq!(m.get(n, n), int(1));
            assert_eq!(m.get(n, n + 1), int(0));
        }

        let motzkin = CatalogId::Motzkin.spec();
        assert_eq!(
            recursive_matrix(&motzkin, 5).column0(),
            [1, 1, 2, 4, 9, 21].map(int)
        );

        let trivial = recursive_matrix(&CatalogId::Delannoy.spec(), 0);
        assert_eq!(trivial.n_max(), 0);
        assert_eq!(trivial.row(0), [int(1)]);
    }

    #[test]
    fn catalan_like_examples() {
        let cb = make_spec(int(2), int(2), int(2), int(1)).unwrap();
        assert_eq!(ints(&catalan_like(&cb, 4)), [1, 2, 6, 20, 70]);
        let schroder = make_spec(int(2), int(3), int(2), int(2)).unwrap();
        assert_eq!(ints(&catalan_like(&schroder, 4)), [1, 2, 6, 22, 90]);
        let hex = make_spec(int(3), int(3), int(1), int(1)).unwrap();
        assert_eq!(ints(&catalan_like(&hex, 2)), [1, 3, 10]);
    }

    #[test]
    fn catalog_examples() {
        let (spec, seq) = catalog_sequence("riordan", 5).unwrap();
        assert_eq!(spec.sigma_prefix(), [int(0)]);
        assert_eq!(spec.sigma_tail(), &int(1));
        assert_eq!(spec.tau(1), &int(1));
        assert_eq!(spec.tau_tail(), &int(1));
        assert_eq!(ints(&seq), [1, 0, 1, 1, 3, 6]);

        let (spec, seq) = catalog_sequence("fine", 4).unwrap();
        assert_eq!(spec.sigma(0), &int(0));
        assert_eq!(spec.sigma(1), &int(2));
        assert_eq!(ints(&seq), naive_column0(0, 2, 1, 1, 4));
        assert_eq!(ints(&seq), [1, 0, 1, 2, 6]);

        let (_, seq) = catalog_sequence("catalan", 0).unwrap();
        assert_eq!(ints(&seq), [1]);
        assert_eq!(seq.origin(), Origin::Catalog);

        assert_eq!(
            catalog_sequence("bell", 3),
            Err(Error::UnknownName("bell".into()))
        );
    }

    #[test]
    fn every_catalog_entry_matches_naive_unrolling() {
        for id in CatalogId::ALL {
            let (p, s, q, t) = id.parameters();
            let (_, seq) = catalog_sequence(id.name(), 14).unwrap();
            assert_eq!(ints(&seq), naive_column0(p, s, q, t, 14), "{id}");
        }
    }

    #[test]
    fn shifted_catalan_is_a_shift() {
        let (_, c) = catalog_sequence("catalan", 13).unwrap();
        let (_, sc) = catalog_sequence("shifted_catalan", 12).unwrap();
        assert_eq!(sc.values(), &c.values()[1..]);
    }

    #[test]
    fn general_prefix_spec() {
        // sigma = (0,0,...), tau = (1,1,...) interleaves the Catalan numbers
        let spec = SigmaTauSpec::from_prefixes(vec![], int(0), vec![], int(1)).unwrap();
        assert_eq!(ints(&catalan_like(&spec, 8)), [1, 0, 1, 0, 2, 0, 5, 0, 14]);
        let mixed = SigmaTauSpec::from_prefixes(vec![frac(1, 2)], int(1), vec![frac(1, 3)], int(2))
            .unwrap();
        let m = recursive_matrix(&mixed, 6);
        assert!(m.satisfies_recurrence(&mixed));
        assert_eq!(m.get(1, 0), frac(1, 2));
        assert_eq!(m.get(2, 0), frac(1, 4) + frac(1, 3));
    }

    #[test]
    fn sequence_io() {
        let seq = Sequence::new(vec![int(1), frac(-1, 2), int(14)], "x", Origin::External).unwrap();
        assert_eq!(seq.to_json_array().to_string(), r#"["1/1","-1/2","14/1"]"#);
        assert_eq!(seq.to_csv(), "1\n-1/2\n14\n");
        let back = Sequence::from_json_str(r#"["1/1","-1/2",14]"#, "x").unwrap();
        assert_eq!(back, seq);
        let wrapped = Sequence::from_json_str(r#"{"values":["1","-1/2","14"]}"#, "x").unwrap();
        assert_eq!(wrapped.values(), seq.values());
        assert_eq!(Sequence::from_csv_str("1\n-1/2\n14\n", "x").unwrap(), seq);
        assert!(Sequence::from_json_str("[1.5]", "x").is_err());
        assert!(Sequence::from_json_str("[]", "x").is_err());
        assert!(Sequence::new(vec![], "x", Origin::External).is_err());
    }
}
