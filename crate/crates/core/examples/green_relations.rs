//! Green's relations on a completely simple semigroup: the egg-box picture,
//! computed from principal ideals and cross-checked against coordinates.
//!
//! Run with: `cargo run --example green_relations`

use reeswreath::group::FiniteGroup;
use reeswreath::rees::ReesMatrixSemigroup;
use reeswreath::semigroup::{green_classes, is_completely_simple, principal_right_ideal};

fn main() {
    let z2 = FiniteGroup::cyclic(2).expect("Z2");
    let rms = ReesMatrixSemigroup::new(&z2, 3, 2, &[vec![0, 0, 0], vec![0, 1, 1]])
        .expect("M[Z2;3,2]");
    let s = rms.as_semigroup("M[Z2;3,2]");
    println!("S = M[Z2; 3, 2], {} elements", s.size());

    let green = green_classes(&s);
    println!(
        "{} R-classes, {} L-classes, {} H-classes",
        green.r_count, green.l_count, green.h_count
    );
    assert!(is_completely_simple(&s));

    // Egg box: rows are R-classes, columns are L-classes; each cell is an
    // H-class of size |G|. An asterisk marks cells containing an idempotent.
    let idempotents = s.idempotents();
    println!("\negg box (cells list element ids, * = contains an idempotent):");
    for r in 0..green.r_count {
        let mut row = String::new();
        for l in 0..green.l_count {
            let cell: Vec<usize> = (0..s.size())
                .filter(|&x| green.r_class_of[x] == r as u32 && green.l_class_of[x] == l as u32)
                .collect();
            let star = if cell.iter().any(|x| idempotents.contains(x)) { "*" } else { " " };
            row.push_str(&format!("{cell:?}{star}  "));
        }
        println!("  {row}");
    }

    // In a Rees matrix semigroup the classes are exactly the coordinates:
    // x R y iff same i, x L y iff same λ.
    for x in 0..s.size() {
        for y in 0..s.size() {
            let (ex, ey) = (rms.decode(x), rms.decode(y));
            assert_eq!(green.r_class_of[x] == green.r_class_of[y], ex.i == ey.i);
            assert_eq!(green.l_class_of[x] == green.l_class_of[y], ex.lambda == ey.lambda);
        }
    }
    println!("\ncoordinate description verified on all pairs");

    // Principal right ideals are unions of H-classes along a row.
    let ideal = principal_right_ideal(&s, 0);
    let members: Vec<usize> =
        (0..s.size()).filter(|&x| ideal[x / 64] & (1 << (x % 64)) != 0).collect();
    println!("principal right ideal of element 0: {members:?}");
}
