use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use momentlab::chainseq::{minimal_parameters, SupportCertificate, ZERO_SLACK};
use momentlab::hankel::{classify, hankel_matrix, psd_status, SymMatrix};
use momentlab::interval::Interval;
use momentlab::linalg::det;
use momentlab::measures::subsequence_transform;
use momentlab::orthopoly::{ops_zeros, recurrence_from_moments};
use momentlab::rational::{frac, int, parse_rational, to_fraction_string, Rational};
use momentlab::seqcore::{catalan_like, make_spec, recursive_matrix, Origin, Sequence};

fn cofactor(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return Rational::one();
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max)
        .prop_flat_map(|n| prop::collection::vec(prop::collection::vec(small_rational(), n), n))
}

fn symmetric(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    square(max).prop_map(|m| {
        let n = m.len();
        (0..n)
            .map(|i| (0..n).map(|j| m[i.min(j)][i.max(j)].clone()).collect())
            .collect()
    })
}

/// Atoms `x >= 0` (or signed) with positive weights.
fn atomic(signed: bool) -> impl Strategy<Value = Vec<(Rational, Rational)>> {
    let lo = if signed { -8 } else { 0 };
    prop::collection::vec(((lo..=8i64, 1i64..=3), (1i64..=6, 1i64..=6)), 1..=4).prop_map(|v| {
        v.into_iter()
            .map(|((a, b), (c, d))| (frac(a, b), frac(c, d)))
            .collect()
    })
}

fn moments(measure: &[(Rational, Rational)], len: usize) -> Sequence {
    let values = (0..len)
        .map(|n| {
            measure
                .iter()
                .map(|(x, w)| w * num_traits::pow(x.clone(), n))
                .sum()
        })
        .collect();
    Sequence::new(values, "atomic", Origin::External).unwrap()
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_matches_cofactor(m in square(4)) {
        prop_assert_eq!(det(&m), cofactor(&m));
    }

    #[test]
    fn psd_verdict_reverifies(m in symmetric(5)) {
        let sm = SymMatrix::new(m).unwrap();
        let v = psd_status(&sm);
        prop_assert!(v.reverifies(&sm));
    }

    #[test]
    fn rational_text_round_trip(r in small_rational()) {
        prop_assert_eq!(parse_rational(&to_fraction_string(&r)).unwrap(), r);
    }

    #[test]
    fn sequence_round_trips(values in prop::collection::vec(small_rational(), 1..12)) {
        let y = Sequence::new(values, "y", Origin::External).unwrap();
        let json = serde_json::to_string(&y.to_json_array()).unwrap();
        let from_json = Sequence::from_json_str(&json, "y").unwrap();
        let from_csv = Sequence::from_csv_str(&y.to_csv(), "y").unwrap();
        prop_assert_eq!(from_json.values(), y.values());
        prop_assert_eq!(from_csv.values(), y.values());
    }

    #[test]
    fn recursive_matrix_satisfies_its_recurrence(
        p in small_rational(), s in small_rational(), q in nonzero_rational(), t in nonzero_rational()
    ) {
        let spec = make_spec(p, s, q, t).unwrap();
        prop_assert!(recursive_matrix(&spec, 12).satisfies_recurrence(&spec));
    }

    #[test]
    fn recurrence_round_trip(
        p in small_rational(), s in small_rational(), q in nonzero_rational(), t in nonzero_rational()
    ) {
        let spec = make_spec(p, s, q, t).unwrap();
        let y = catalan_like(&spec, 15);
        let rec = recurrence_from_moments(&y, 8).unwrap();
        for k in 0..8 {
            prop_assert_eq!(&rec.sigma[k], spec.sigma(k));
        }
        for k in 1..8 {
            prop_assert_eq!(&rec.tau[k - 1], spec.tau(k));
        }
    }

    #[test]
    fn stieltjes_moments_are_log_convex(measure in atomic(false)) {
        let y = moments(&measure, 16);
        let v = y.values();
        for n in 1..15 {
            prop_assert!(&v[n] * &v[n] <= &v[n - 1] * &v[n + 1]);
        }
    }

    #[test]
    fn atomic_measures_classify(measure in atomic(true)) {
        let y = moments(&measure, 15);
        let lo = measure.iter().map(|(x, _)| x.clone()).min().unwrap();
        let hi = measure.iter().map(|(x, _)| x.clone()).max().unwrap();
        let iv = Interval::closed(lo.clone() - int(1), hi + int(1)).unwrap();
        let r = classify(&y, 5, Some(&iv)).unwrap();
        prop_assert!(r.hamburger_pass());
        prop_assert_eq!(r.hausdorff_pass(), Some(true));
        if !lo.is_negative() {
            prop_assert!(r.stieltjes_pass());
        }
    }

    #[test]
    fn even_step_gives_stieltjes(measure in atomic(true)) {
        let y = moments(&measure, 24);
        let sub = subsequence_transform(&y, 2, 0, None).unwrap().sequence;
        prop_assert!(psd_status(&hankel_matrix(&sub, 5, 0).unwrap()).is_psd());
        prop_assert!(psd_status(&hankel_matrix(&sub, 5, 1).unwrap()).is_psd());
    }

    #[test]
    fn zeros_interlace(s in small_rational(), p in small_rational(), q in positive_rational(), t in positive_rational()) {
        let spec = make_spec(p, s, q, t).unwrap();
        for n in 2..12 {
            let a = ops_zeros(&spec, n - 1).unwrap();
            let b = ops_zeros(&spec, n).unwrap();
            for (i, z) in a.iter().enumerate() {
                prop_assert!(b[i] <= z + 1e-9 && *z <= b[i + 1] + 1e-9);
            }
        }
    }

    #[test]
    fn certified_intervals_contain_zeros(
        p in small_rational(), s in small_rational(), q in positive_rational(), t in positive_rational()
    ) {
        let cert = SupportCertificate::evaluate(p.clone(), s.clone(), q.clone(), t.clone()).unwrap();
        prop_assume!(cert.is_certified());
        let spec = make_spec(p, s, q, t).unwrap();
        for n in [1, 4, 16, 30] {
            for z in ops_zeros(&spec, n).unwrap() {
                prop_assert!(cert.interval.contains_approx(z, ZERO_SLACK), "n={} z={}", n, z);
            }
        }
    }

    #[test]
    fn constant_chain_threshold(c in 1u32..=60) {
        let a = vec![f64::from(c) / 100.0; 400];
        prop_assert_eq!(minimal_parameters(&a, 399).is_chain(), c <= 25);
    }
}
