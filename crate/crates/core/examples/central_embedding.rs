//! Lifting the Kaloujnine–Krasner embedding to a Rees matrix semigroup when
//! the sandwich entries are central: S = M[G; I, Λ; P] embeds into U wr H
//! for U the kernel and H = G/N. Centrality is necessary: on the
//! non-central 84-element instance the same map fails the morphism law.
//!
//! Run with: `cargo run --example central_embedding`

use reeswreath::counterexample::CounterInstance;
use reeswreath::embed::central_embedding;
use reeswreath::group::FiniteGroup;
use reeswreath::rees::ReesMatrixSemigroup;

fn main() {
    // A central instance: Z4 with N = {0, 2}; the sandwich entry 2 is
    // central in the abelian group Z4.
    let z4 = FiniteGroup::cyclic(4).expect("Z4");
    let rms = ReesMatrixSemigroup::new(&z4, 2, 2, &[vec![0, 0], vec![0, 2]]).expect("M[Z4;2,2]");
    println!(
        "S = M[Z4; 2, 2] ({} elements), central = {}",
        rms.element_count(),
        rms.is_central().expect("decidable")
    );

    let nu = central_embedding(&rms, &[0, 2]).expect("N = {0, 2} qualifies");
    println!(
        "target U wr H: kernel U has {} elements, H has order {} → {} elements",
        nu.congruence.kernel_members.len(),
        nu.kk.h.order(),
        nu.wreath.product.size()
    );
    let check = nu.verify(&rms);
    println!(
        "injective morphism: {} (witness {:?})",
        check.morphism && check.injective,
        check.witness
    );

    // The non-central instance: same shape, but the sandwich entry x lies
    // outside the centre of the order-21 group, and the map breaks.
    let inst = CounterInstance::standard();
    println!(
        "\nS = M[G; 2, 2] over |G| = {} ({} elements), central = {}",
        inst.group.order(),
        inst.rms.element_count(),
        inst.rms.is_central().expect("decidable")
    );
    let nu = central_embedding(&inst.rms, &inst.normal_members).expect("the map still assembles");
    let check = nu.verify(&inst.rms);
    println!("morphism: {}", check.morphism);
    if let Some((a, b)) = check.witness {
        let lhs = nu.map[inst.rms.mul_ids(a, b)];
        let rhs = nu.wreath.product.mul(nu.map[a], nu.map[b]);
        println!("witness pair ({a}, {b}): ν(ab) = {lhs} but ν(a)ν(b) = {rhs}");
    }
}
