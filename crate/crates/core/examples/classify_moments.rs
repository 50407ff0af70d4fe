//! Hankel tests on a named sequence and on a sequence that is not a
//! Stieltjes moment sequence.

use momentlab::hankel::{classify, hankel_dets, MatrixKind, Witness};
use momentlab::rational::{int, to_plain_string};
use momentlab::{catalog_sequence, Interval, Sequence};

fn main() -> momentlab::Result<()> {
    let (_, catalan) = catalog_sequence("catalan", 20)?;
    let dets: Vec<String> = hankel_dets(&catalan, 6)?
        .iter()
        .map(to_plain_string)
        .collect();
    println!("det H_k(catalan), k = 0..6: {}", dets.join(" "));

    let iv = Interval::closed(int(0), int(4))?;
    let report = classify(&catalan, 6, Some(&iv))?;
    println!(
        "catalan on {iv}: hamburger {} stieltjes {} hausdorff {:?}",
        report.hamburger_pass(),
        report.stieltjes_pass(),
        report.hausdorff_pass()
    );

    // delta mass at -1 mixed with one at 1
    let signed = Sequence::from_integers(&[2, 0, 2, 0, 2, 0, 2, 0, 2, 0], "atoms at -1 and 1");
    let report = classify(&signed, 3, None)?;
    println!(
        "{}: hamburger {} stieltjes {}",
        signed.label(),
        report.hamburger_pass(),
        report.stieltjes_pass()
    );
    if let Some(w) = report.witness_for(MatrixKind::ShiftedHankel) {
        if let Witness::NegativeDirection { vector, value } = &w.witness {
            let v: Vec<String> = vector.iter().map(to_plain_string).collect();
            println!(
                "  shifted Hankel order {}: v = ({}) gives v'Mv = {}",
                w.order,
                v.join(", "),
                to_plain_string(value)
            );
        }
    }
    Ok(())
}
