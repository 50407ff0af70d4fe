//! Monic orthogonal polynomials three ways: from the recurrence, from
//! Hankel determinants, and from moments by the Stieltjes procedure.

use momentlab::catalog_sequence;
use momentlab::orthopoly::{
    ops_determinantal, ops_from_recurrence, ops_zeros, recurrence_from_moments,
};
use momentlab::rational::to_plain_string;

fn main() -> momentlab::Result<()> {
    let (spec, m) = catalog_sequence("motzkin", 24)?;
    let ps = ops_from_recurrence(&spec, 5);
    for (n, p) in ps.iter().enumerate() {
        let det = ops_determinantal(&m, n)?;
        println!("P_{n} = {p}   (determinantal form agrees: {})", det == *p);
    }

    let rec = recurrence_from_moments(&m, 6)?;
    let sigma: Vec<String> = rec.sigma.iter().map(to_plain_string).collect();
    let tau: Vec<String> = rec.tau.iter().map(to_plain_string).collect();
    println!("recovered s_n: {}", sigma.join(" "));
    println!("recovered t_n: {}", tau.join(" "));

    for n in [4, 16, 64] {
        let z = ops_zeros(&spec, n)?;
        println!("P_{n} zeros span [{:.6}, {:.6}]", z[0], z[n - 1]);
    }
    Ok(())
}
