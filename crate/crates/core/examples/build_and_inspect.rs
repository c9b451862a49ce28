//! Build small groups and a Rees matrix semigroup, then inspect their basic
//! structure: orders, centres, idempotents, and Green's class counts.
//!
//! Run with: `cargo run --example build_and_inspect`

use reeswreath::group::FiniteGroup;
use reeswreath::rees::{ReesMatrixSemigroup, RmsElement};
use reeswreath::semigroup::{green_classes, is_completely_simple};

fn main() {
    // Groups come from tables, generators, or the built-in families.
    let z4 = FiniteGroup::cyclic(4).expect("Z4");
    let s3 = FiniteGroup::symmetric(3).expect("S3");

    for (name, g) in [("Z4", &z4), ("S3", &s3)] {
        let (centre, orders) = g.centre_and_orders();
        println!("{name}: order {}, identity {}", g.order(), g.identity());
        println!("  centre: {centre:?}");
        println!("  element orders: {orders:?}");
    }

    // A Rees matrix semigroup M[G; I, Λ; P] multiplies as
    // (i, g, λ)(j, h, μ) = (i, g·p_{λj}·h, μ). The sandwich matrix is given
    // λ-major: one row per λ, one entry per column i.
    let rms = ReesMatrixSemigroup::new(&z4, 2, 2, &[vec![0, 0], vec![0, 2]]).expect("M[Z4;2,2]");
    println!(
        "\nM[Z4; 2, 2]: {} elements, normalized = {}, central = {}",
        rms.element_count(),
        rms.is_normalized(),
        rms.is_central().expect("centrality is decidable"),
    );

    let a = RmsElement { i: 0, g: 1, lambda: 1 };
    let b = RmsElement { i: 1, g: 3, lambda: 0 };
    let c = rms.product(a, b);
    println!("({}, {}, {}) · ({}, {}, {}) = ({}, {}, {})", a.i, a.g, a.lambda, b.i, b.g, b.lambda, c.i, c.g, c.lambda);

    // Every Rees matrix semigroup over a group is completely simple, and its
    // Green's classes are read off the coordinates: R by i, L by λ.
    let s = rms.as_semigroup("M[Z4;2,2]");
    let green = green_classes(&s);
    println!(
        "Green's structure: {} R-classes, {} L-classes, {} H-classes, {} idempotents",
        green.r_count,
        green.l_count,
        green.h_count,
        s.idempotents().len(),
    );
    println!("completely simple = {}", is_completely_simple(&s));
}
