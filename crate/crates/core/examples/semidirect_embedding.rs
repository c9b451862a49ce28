//! The general embedding that works without centrality: S = M[G; I, Λ; P]
//! embeds into V ⋊ H where V = M[N^H; I, H×Λ; Q] and
//! q_{(B,λ),j} = ᴮ(f_{p_{λj}}). On 1×1 instances it collapses back to the
//! Kaloujnine–Krasner embedding.
//!
//! Run with: `cargo run --example semidirect_embedding`

use reeswreath::counterexample::CounterInstance;
use reeswreath::embed::{general_embedding, psi_equals_kappa_check};

fn main() {
    let inst = CounterInstance::standard();
    println!(
        "S = M[G; 2, 2] over the order-21 group: {} elements",
        inst.rms.element_count()
    );

    let psi = general_embedding(&inst.rms, &inst.normal_members).expect("N qualifies");
    println!(
        "V = M[N^H; {}, {}×{}]: {} elements; V ⋊ H: {} elements",
        psi.v.i_count(),
        psi.kk.h.order(),
        inst.rms.lambda_count(),
        psi.v.element_count(),
        psi.product.size()
    );

    // ψ is an injective morphism, verified over all |S|² ordered pairs.
    let check = psi.verify(&inst.rms);
    println!(
        "injective morphism: {} (checked {} pairs)",
        check.morphism && check.injective,
        inst.rms.element_count() * inst.rms.element_count()
    );

    // The sandwich matrix of V interacts with the cocycle through the
    // product identity f_{g·p_{λj}·h} = f_g · q_{(gN,λ),j} · ᵍᴺf_h.
    println!(
        "cocycle product identity violations: {:?}",
        psi.verify_cocycle_product_identity(&inst.rms)
    );

    // The maximal subgroups of V are copies of N^H — direct powers of N.
    println!(
        "every maximal subgroup of V ≅ N^H (order {}): {}",
        psi.kk.power_group.order(),
        psi.verify_maximal_subgroups()
    );

    // Specialization: on a 1×1 instance with identity sandwich matrix, ψ's
    // data agrees pointwise with κ's.
    println!(
        "\nψ = κ on the 1×1 instance over G: {}",
        psi_equals_kappa_check(&inst.group, &inst.normal_members).expect("well-formed")
    );
}
