//! The classical Kaloujnine–Krasner embedding: a group G with normal
//! subgroup N embeds into N wr (G/N) via κ(g) = (f_g, gN), where
//! f_g(A) = r_A · g · r_{A·gN}⁻¹ over a fixed transversal {r_A}.
//!
//! Run with: `cargo run --example kk_embedding`

use reeswreath::embed::kk_embedding;
use reeswreath::group::FiniteGroup;

fn main() {
    // S3 with its alternating subgroup A3 = {identity, the two 3-cycles}.
    let s3 = FiniteGroup::symmetric(3).expect("S3");
    let kk = kk_embedding(&s3, &[0, 3, 4]).expect("A3 is normal");

    println!("G = S3 (order {}), N = A3 (order {})", kk.source.order(), kk.normal.len());
    println!(
        "target: N^H ⋊ H with |N^H| = {}, |H| = {} → {} elements",
        kk.power_group.order(),
        kk.h.order(),
        kk.product.size()
    );

    // κ splits each g into a function part (digits over H, valued in N) and
    // the coset part gN.
    println!("\n g | coset gN | digits of f_g over H");
    for g in 0..kk.source.order() {
        let f = kk.f_component(g);
        let digits: Vec<usize> = (0..kk.h.order()).map(|a| kk.function_digit(f, a)).collect();
        println!("{g:>2} | {:>8} | {digits:?}", kk.h_component(g));
    }

    // The embedding is an injective morphism...
    let check = kk.verify_embedding();
    println!("\ninjective morphism: {}", check.morphism && check.injective);

    // ...because the function parts obey the cocycle identity
    // f_{gh} = f_g · (ᵍᴺ f_h), where the action translates arguments.
    println!("cocycle identity violations: {:?}", kk.verify_cocycle_identity());

    // The cocycle values themselves: f_g(A) lands in N for every A.
    let g = 1;
    for a in 0..kk.h.order() {
        println!("f_{g}({a}) = {} (as an index into N)", kk.cocycle_value(g, a));
    }
}
