//! Chain-sequence certificates for the support interval.

use momentlab::chainseq::{alpha_exact, certify_support};
use momentlab::rational::{int, to_plain_string};
use momentlab::CatalogId;

fn main() -> momentlab::Result<()> {
    let spec = CatalogId::Catalan.spec();
    let alpha: Vec<String> = alpha_exact(&spec, &int(0), 6)?
        .iter()
        .map(to_plain_string)
        .collect();
    println!("catalan alpha_n(0): {}", alpha.join(" "));

    for id in CatalogId::ALL {
        match certify_support(&id.spec(), 200) {
            Ok(r) => println!(
                "{:<18} {}  stieltjes {:<5} passed {:<5} zeros in [{:.4}, {:.4}]",
                id.name(),
                r.certificate.interval,
                r.certificate.stieltjes_flag,
                r.passed,
                r.zero_range.0,
                r.zero_range.1
            ),
            Err(e) => println!("{:<18} {e}", id.name()),
        }
    }
    Ok(())
}
