//! The negative result, end to end: the 84-element completely simple
//! semigroup S = M[G; 2, 2] over the order-21 group does **not** embed into
//! U wr H, even though its kernel U and quotient H = G/N are exactly the
//! wreath product's ingredients.
//!
//! The argument is two finite sweeps with an empty intersection:
//!   1. every congruence-compatible embedding would force an injective,
//!      identity-free function part h for the generator y (iota sweep);
//!   2. no sandwich-matrix frame of the wreath copy can produce such an h
//!      (frame sweep).
//!
//! Run with: `cargo run --example nonembeddability`

use reeswreath::counterexample::{
    embedding_verdict, enumerate_injective_iotas, order3_census, sandwich_scan, CounterInstance,
    EmbeddingVerdict,
};

fn main() {
    let inst = CounterInstance::standard();
    println!(
        "S = M[G; 2, 2], |G| = {}, |S| = {}, central = {}",
        inst.group.order(),
        inst.rms.element_count(),
        inst.rms.is_central().expect("decidable")
    );

    // Side quest: in N^H ⋊ H (order 1029) the elements of order 3 admit a
    // closed-form description; the census pins the iota target space down.
    let kk = inst.kk().expect("N is normal");
    let census = order3_census(&kk);
    println!(
        "\norder-3 census in N^H⋊H: total {}, direct {}, closed form {}, mismatches {}",
        census.total, census.order3_direct, census.order3_closed_form, census.mismatches
    );

    // Sweep 1: all group morphisms G → N^H⋊H with injective image, found by
    // checking the defining relations x⁷ = y³ = e, yxy⁻¹ = x² and then the
    // full multiplication table for each survivor.
    let iotas = enumerate_injective_iotas(&inst).expect("the sweep is decisive");
    println!(
        "\niota sweep: {} injective morphisms ({} doubling / {} halving), {} distinct function parts for ι(y)",
        iotas.count(),
        iotas.doubling_count,
        iotas.halving_count,
        iotas.distinct_h.len()
    );

    // Sweep 2: all 4096 sandwich frames (ξ₁, ξ₂, η₁, η₂) of the wreath copy
    // of U^H; each yields the function part a compatible embedding would
    // assign to y, and none of them is injective and identity-free.
    let scan = sandwich_scan(&inst).expect("the scan applies to this instance");
    println!(
        "frame sweep: {} frames, {} value checks, {} admissible, {} distinct producible parts, clean = {}",
        scan.frames,
        scan.value_checks,
        scan.admissible_frames,
        scan.distinct_h.len(),
        scan.clean()
    );

    // The two requirement sets are disjoint, so no embedding exists.
    match embedding_verdict(&inst.rms, &inst.normal_members).expect("the committed instance") {
        EmbeddingVerdict::NotEmbeddable(cert) => {
            println!("\ncertificate:\n{}", cert.render());
        }
        EmbeddingVerdict::EmbeddingExists { .. } => unreachable!("the instance is non-central"),
    }

    // Control: flattening the sandwich matrix to the identity makes the
    // instance central, and the very same verdict machinery then produces a
    // verified embedding instead.
    let control = CounterInstance::with_identity_p22();
    match embedding_verdict(&control.rms, &control.normal_members).expect("central control") {
        EmbeddingVerdict::EmbeddingExists { target_size, pairs_checked } => {
            println!("control instance embeds: target size {target_size}, {pairs_checked} pairs verified");
        }
        EmbeddingVerdict::NotEmbeddable(_) => unreachable!("the control is central"),
    }
}
