//! The text formats for groups and Rees matrix semigroups: render, parse,
//! and the line/column diagnostics produced for malformed input.
//!
//! Run with: `cargo run --example file_formats`

use reeswreath::group::FiniteGroup;
use reeswreath::io::{parse_artifact, parse_group, render_group, render_rms, Artifact};
use reeswreath::rees::ReesMatrixSemigroup;

fn main() {
    // A GROUP file is a header line followed by the Cayley table.
    let z3 = FiniteGroup::cyclic(3).expect("Z3");
    let group_text = render_group(&z3);
    println!("--- GROUP file ---\n{group_text}");

    // An RMS file embeds its group block, then the index sizes and the
    // sandwich matrix (one row per λ).
    let rms = ReesMatrixSemigroup::new(&z3, 2, 2, &[vec![0, 0], vec![0, 1]]).expect("M[Z3;2,2]");
    let rms_text = render_rms(&rms);
    println!("--- RMS file ---\n{rms_text}");

    // Round trips preserve the object exactly.
    match parse_artifact(&rms_text).expect("round trip") {
        Artifact::Rms(back) => {
            assert_eq!(back.element_count(), rms.element_count());
            assert_eq!(back.sandwich_entry(1, 1), rms.sandwich_entry(1, 1));
            println!("round trip ok: {} elements", back.element_count());
        }
        Artifact::Group(_) => unreachable!("the text started with RMS"),
    }

    // Malformed input is rejected with a 1-based line and column.
    let broken = "GROUP 3\n0 1 2\n1 x 0\n2 0 1\n";
    match parse_group(broken) {
        Err(e) => println!("\nsyntax error as expected: {e}"),
        Ok(_) => unreachable!("`x` is not a number"),
    }

    // Structurally valid text still has to pass the algebraic laws.
    let not_assoc = "GROUP 3\n0 1 2\n1 0 1\n2 1 0\n";
    match parse_group(not_assoc) {
        Err(e) => println!("validation error as expected: {e}"),
        Ok(_) => unreachable!("that table is not a group"),
    }
}
