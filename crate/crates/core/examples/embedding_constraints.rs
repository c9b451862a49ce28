//! The five structural equations a congruence-compatible embedding into
//! (copy of U^H) ⋊ H must satisfy, checked on explicit candidate data
//! (η, ξ, f): pass on a central instance, pinpointed failure on fault
//! injection, and the exact equation that kills the non-central instance.
//!
//! Run with: `cargo run --example embedding_constraints`

use reeswreath::counterexample::{
    structured_constraint_check, ConstraintOutcome, CopyContext, CounterInstance,
    EmbeddingCandidate,
};
use reeswreath::group::FiniteGroup;
use reeswreath::rees::ReesMatrixSemigroup;

fn main() {
    // Central control: Z4 with N = {0, 2} and a central sandwich entry.
    let z4 = FiniteGroup::cyclic(4).expect("Z4");
    let rms = ReesMatrixSemigroup::new(&z4, 2, 2, &[vec![0, 0], vec![0, 2]]).expect("M[Z4;2,2]");
    let ctx = CopyContext::new(&rms, &[0, 2]).expect("N qualifies");

    // The candidate behind the central embedding: constant η and ξ, and the
    // group-level cocycle for every (i, λ).
    let cand = EmbeddingCandidate::from_central(&ctx, &rms);
    match structured_constraint_check(&ctx, &rms, &cand).expect("shapes match") {
        ConstraintOutcome::Pass { morphism, injective } => {
            println!("central candidate: all equations hold; assembled map morphism = {morphism}, injective = {injective}");
        }
        ConstraintOutcome::Fail { equation, witness } => {
            unreachable!("central data satisfies everything, got {equation} at {witness:?}")
        }
    }

    // Fault injection: bend one f value and the cocycle product rule (C)
    // reports the first offending index tuple.
    let mut bent = cand.clone();
    bent.f[0][0][1] = ctx.copy.power_group.op(bent.f[0][0][1], 1);
    match structured_constraint_check(&ctx, &rms, &bent).expect("shapes match") {
        ConstraintOutcome::Fail { equation, witness } => {
            println!("perturbed candidate: equation {equation} fails at [i, λ, j, μ, g, h] = {witness:?}");
        }
        ConstraintOutcome::Pass { .. } => unreachable!("the perturbation must be caught"),
    }

    // The non-central instance: feed in the only congruence-compatible
    // candidate shape that extends κ, and watch (C) fail — the sandwich
    // entry x has a non-constant cocycle, so the product rule cannot hold.
    let inst = CounterInstance::standard();
    let ctx = CopyContext::new(&inst.rms, &inst.normal_members).expect("N qualifies");
    let cand = EmbeddingCandidate::from_central(&ctx, &inst.rms);
    match structured_constraint_check(&ctx, &inst.rms, &cand).expect("shapes match") {
        ConstraintOutcome::Fail { equation, witness } => {
            println!("non-central instance: equation {equation} fails at [i, λ, j, μ, g, h] = {witness:?}");
        }
        ConstraintOutcome::Pass { .. } => unreachable!("the instance is not central"),
    }
}
