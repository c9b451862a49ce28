//! Semidirect products T ⋊ H and wreath products T wr H = T^H ⋊ H, with the
//! projection congruence and the closed-form Green's relations.
//!
//! Run with: `cargo run --example semidirect_and_wreath`

use reeswreath::action::{
    projection_congruence, semidirect_same_l, semidirect_same_r, wreath_product, Action,
    SemidirectProduct,
};
use reeswreath::group::FiniteGroup;
use reeswreath::semigroup::green_classes;

fn main() {
    // Z4 acts on Z5 by multiplication by powers of 2 (a unit of order 4).
    let z5 = FiniteGroup::cyclic(5).expect("Z5");
    let z4 = FiniteGroup::cyclic(4).expect("Z4");
    let action = Action::from_fn(&z4, &z5.as_semigroup("Z5"), |a, t| {
        let mut m = 1usize;
        for _ in 0..a {
            m = m * 2 % 5;
        }
        t * m % 5
    })
    .expect("a unit multiplication is an automorphism");
    let sd = SemidirectProduct::new(action, "Z5⋊Z4").expect("20 elements");
    println!("Z5⋊Z4: {} elements", sd.size());

    // (t, A)(u, B) = (t · ᴬu, A·B); the pair is packed into one id.
    let x = sd.encode(1, 1);
    let y = sd.encode(3, 2);
    let (t, a) = sd.decode(sd.mul(x, y));
    println!("(1, 1) · (3, 2) = ({t}, {a})");

    // Projecting to the second coordinate is a morphism onto H whose kernel
    // class at the identity is a copy of T.
    let report = projection_congruence(&sd);
    println!(
        "projection: morphism = {}, kernel is a copy of T = {}, kernel size = {}",
        report.morphism_ok, report.kernel_iso_ok, report.kernel_size
    );

    // The wreath product T wr H uses the translation action on T^H:
    // (ᴬf)(B) = f(B·A).
    let z2 = FiniteGroup::cyclic(2).expect("Z2");
    let w = wreath_product(&z2.as_semigroup("Z2"), &z2, "Z2 wr Z2").expect("8 elements");
    println!("\nZ2 wr Z2: base power {} elements, product {} elements", w.power.size(), w.product.size());
    let f = w.encode_function(&[1, 0]);
    println!(
        "f = (1, 0): f(0) = {}, f(1) = {}; translated by 1: ({}, {})",
        w.function_at(f, 0),
        w.function_at(f, 1),
        w.function_at(w.translate(1, f), 0),
        w.function_at(w.translate(1, f), 1),
    );

    // For completely simple T, Green's relations on T ⋊ H reduce to T:
    //   (t, A) R (u, B)  iff  t R u
    //   (t, A) L (u, B)  iff  ᴬ⁻¹t L ᴮ⁻¹u
    // Verify against brute-force classes on the product.
    let t_green = green_classes(sd.action().target());
    let brute = green_classes(sd.semigroup());
    let n = sd.size();
    let mut checked = 0usize;
    for x in 0..n {
        for y in 0..n {
            assert_eq!(
                brute.r_class_of[x] == brute.r_class_of[y],
                semidirect_same_r(&sd, &t_green, x, y)
            );
            assert_eq!(
                brute.l_class_of[x] == brute.l_class_of[y],
                semidirect_same_l(&sd, &t_green, x, y)
            );
            checked += 1;
        }
    }
    println!("\nclosed-form R/L verified against brute force on {checked} pairs");
}
