//! The Rees-matrix copy of a wreath product: for T = M[G; I, Λ; P],
//! T^H ≅ M[G^H; I^H, Λ^H; P^H] where p^H_{ξη}(A) = p_{ξ(A)η(A)}, and the
//! translation action moves sandwich entries to sandwich entries.
//!
//! Run with: `cargo run --example wreath_copy`

use reeswreath::action::{wreath_product, WreathCopy};
use reeswreath::group::FiniteGroup;
use reeswreath::rees::ReesMatrixSemigroup;

fn main() {
    let z2 = FiniteGroup::cyclic(2).expect("Z2");
    let base = ReesMatrixSemigroup::new(&z2, 2, 2, &[vec![0, 0], vec![0, 1]]).expect("M[Z2;2,2]");
    let copy = WreathCopy::new(&base, &z2).expect("the power fits comfortably");

    println!(
        "T = M[Z2; 2, 2] ({} elements), H = Z2",
        base.element_count()
    );
    println!(
        "copy: M[G^H; I^H, Λ^H] with |G^H| = {}, |I^H| = {}, |Λ^H| = {} → {} elements",
        copy.power_group.order(),
        copy.copy.i_count(),
        copy.copy.lambda_count(),
        copy.copy.element_count()
    );

    // The coordinatewise bijection T^H → copy is an isomorphism.
    let iso = copy.verify_copy_isomorphism();
    println!("power ≅ copy: bijective = {}, morphism = {} ({} pairs)", iso.bijective, iso.morphism_ok, iso.pairs_checked);

    // Each sandwich entry of the copy evaluates pointwise to the base matrix.
    for xi in 0..copy.copy.lambda_count() {
        for eta in 0..copy.copy.i_count() {
            let entry = copy.copy.sandwich_entry(xi, eta);
            for a in 0..2 {
                assert_eq!(
                    copy.power_value(entry, a),
                    base.sandwich_entry(copy.xi_at(xi, a), copy.eta_at(eta, a))
                );
            }
        }
    }
    println!("all sandwich entries evaluate pointwise to the base matrix");

    // Translation compatibility: ᴮ(p^H_{ξη}) = p^H_{ᴮξ, ᴮη} for every
    // (B, ξ, η) — the identity that makes the copy action well-defined.
    let tc = copy.translation_compatibility();
    println!(
        "translation compatibility: {} combinations, witness = {:?}",
        tc.combos_checked, tc.witness
    );

    // Assembling (copy) ⋊ H recovers T wr H.
    let w = wreath_product(&base.as_semigroup("T"), &z2, "T wr Z2").expect("wreath");
    let copy_action = copy.copy_action().expect("translation acts by automorphisms");
    assert!(copy.verify_action_correspondence(&w, &copy_action));
    let copy_sd = copy.copy_semidirect("copy ⋊ H").expect("product");
    let iso = copy.verify_wreath_isomorphism(&w, &copy_sd);
    println!(
        "T wr H ≅ (copy) ⋊ H: bijective = {}, morphism = {} ({} pairs)",
        iso.bijective, iso.morphism_ok, iso.pairs_checked
    );
}
