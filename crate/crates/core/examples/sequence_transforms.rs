//! Subsequences, index patterns and polynomial combinations of moment
//! sequences, each checked against the transformed density.

use momentlab::measures::{
    catalan_moved_density, density_catalog, linear_combination_transform,
    pattern_is_stieltjes_preserving, verify_transform_consistency, TransformSpec,
};
use momentlab::poly::Polynomial;
use momentlab::rational::{int, to_plain_string};
use momentlab::{catalog_sequence, Interval};

fn show(values: &[momentlab::Rational]) -> String {
    values
        .iter()
        .map(to_plain_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() -> momentlab::Result<()> {
    let (_, c) = catalog_sequence("catalan", 40)?;
    let dens = density_catalog("catalan")?;

    for d in 2..=4 {
        let t = TransformSpec::Subsequence { d, l: 0 };
        let y = t.apply(&c, Some(&dens.interval))?;
        let report = verify_transform_consistency(&c, &t, &dens, 8, 1e-9)?;
        println!(
            "C_{{{d}k}}: {} ...  quadrature ok {}",
            show(&y.values()[..5]),
            report.passed
        );
        let moved = catalan_moved_density(d as u32)?;
        println!("  density on {}: {}", moved.interval, moved.formula);
    }

    for pattern in [[0usize, 2, 4, 6], [0, 1, 3, 6], [0, 2, 3, 4]] {
        let v = pattern_is_stieltjes_preserving(&pattern)?;
        match v.witness {
            None => println!("{pattern:?} preserves Stieltjes sequences"),
            Some(w) => println!(
                "{pattern:?} does not: delta at {} gives determinant {}",
                to_plain_string(&w.epsilon),
                to_plain_string(&w.determinant)
            ),
        }
    }

    let g = Polynomial::from_integers(&[0, 4, -1]);
    let iv = Interval::closed(int(0), int(4))?;
    let lc = linear_combination_transform(&c, &g, &iv, Some(&dens))?;
    println!(
        "{}: {} ...",
        lc.sequence.label(),
        show(&lc.sequence.values()[..6])
    );
    let bad = Polynomial::from_integers(&[1, -1]);
    if let Err(e) = linear_combination_transform(&c, &bad, &iv, None) {
        println!("g = {bad}: {e}");
    }
    Ok(())
}
