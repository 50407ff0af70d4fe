//! Prints the first moments of every named sequence, then a custom one.

use momentlab::rational::{frac, int, to_plain_string};
use momentlab::seqcore::{make_spec, recursive_matrix};
use momentlab::{catalan_like, CatalogId};

fn main() -> momentlab::Result<()> {
    for id in CatalogId::ALL {
        let y = catalan_like(&id.spec(), 9);
        let shown: Vec<String> = y.values().iter().map(to_plain_string).collect();
        println!(
            "{:<18} {:<24} {}",
            id.name(),
            id.spec().to_string(),
            shown.join(" ")
        );
    }

    // half-integer parameters are fine; moments stay exact
    let spec = make_spec(frac(1, 2), int(1), frac(3, 2), frac(1, 4))?;
    let r = recursive_matrix(&spec, 6);
    println!("\nrecursive matrix for {spec}:");
    for n in 0..=6 {
        let row: Vec<String> = r.row(n).iter().map(to_plain_string).collect();
        println!("  {}", row.join("  "));
    }
    println!("recurrence holds: {}", r.satisfies_recurrence(&spec));
    Ok(())
}
