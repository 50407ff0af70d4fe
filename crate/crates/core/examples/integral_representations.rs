//! Compares exact moments with quadrature against the closed-form densities
//! and writes one density as CSV.

use momentlab::catalog_sequence;
use momentlab::measures::{density_catalog, verify_representation, DENSITY_NAMES};

fn main() -> momentlab::Result<()> {
    for name in DENSITY_NAMES {
        let (_, y) = catalog_sequence(name, 15)?;
        let dens = density_catalog(name)?;
        let report = verify_representation(&y, &dens, 15, 1e-10)?;
        println!(
            "{:<18} w(x) = {:<48} max rel error {:.2e}  passed {}",
            name, dens.formula, report.max_rel_error, report.passed
        );
    }
    let csv = density_catalog("motzkin")?.to_csv(8);
    print!("\nmotzkin density samples:\n{csv}");
    Ok(())
}
