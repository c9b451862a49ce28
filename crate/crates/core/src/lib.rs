//! A verified toolkit for finite completely simple semigroups and their
//! extensions by groups.
//!
//! The library works with four layers of structure:
//!
//! * [`group`] — finite groups as multiplication tables: subgroups, normal
//!   subgroups, quotients with transversals, centres, element orders and
//!   presentation-driven morphism enumeration.
//! * [`semigroup`] — finite semigroups (materialized tables or lazily
//!   composed views): Green's relations by brute force, complete simplicity,
//!   morphism checking and bounded embedding search.
//! * [`rees`] — Rees matrix semigroups `M[G; I, Λ; P]`: the sandwich
//!   product, normalization, centrality, and the bijection between group
//!   congruences and normal subgroups containing the sandwich entries.
//! * [`action`] / [`embed`] / [`counterexample`] — group actions by
//!   automorphisms, semidirect and wreath products, the Rees-matrix copy of
//!   a direct power, three embedding constructions (the Kaloujnine–Krasner
//!   embedding for group extensions, the wreath embedding for central
//!   completely simple semigroups, and a semidirect-product embedding that
//!   works with no centrality hypothesis), and a fully mechanized
//!   certificate that one particular 84-element extension embeds in *no*
//!   wreath product of its kernel by its quotient group.
//!
//! Elements everywhere are dense identifiers `0..size`; groups keep their
//! identity at id `0`. All scans are deterministic: parallel reductions are
//! order-independent (counts, lexicographic minima) and sampling uses fixed
//! seeds, so reports are byte-identical across thread counts.
//!
//! The `examples/` directory contains one runnable program per capability;
//! `src/main.rs` is a thin command-line wrapper over [`report`] suites.

pub mod action;
pub mod cli;
pub(crate) mod sampling;
pub mod counterexample;
pub mod embed;
pub mod group;
pub mod io;
pub mod rees;
pub mod report;
pub mod semigroup;

pub use action::{Action, SemidirectProduct, WreathCopy, WreathProduct};
pub use group::{FiniteGroup, GroupError, GroupMorphism, QuotientData, Subgroup};
pub use rees::{GroupCongruence, ReesMatrixSemigroup, RmsElement};
pub use semigroup::{FiniteSemigroup, GreenClasses, SemigroupError};
