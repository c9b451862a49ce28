//! Rees matrix semigroups over finite groups.
//!
//! `M[G; I, Λ; P]` has elements `(i, g, λ)` with `i ∈ I`, `g ∈ G`, `λ ∈ Λ`
//! and product `(i, g, λ)(j, h, μ) = (i, g·p_{λj}·h, μ)` where `P = (p_{λi})`
//! is a `Λ × I` matrix over `G`. Every such semigroup is completely simple,
//! and (by the Rees theorem) every finite completely simple semigroup is
//! isomorphic to one. The sandwich matrix is *normalized* when its first row
//! and first column are identity, and a normalized matrix is *central* when
//! every entry lies in the centre of `G`.
//!
//! Group congruences: a normal subgroup `N ⊴ G` containing every sandwich
//! entry induces the congruence `(i, g, λ) ρ_N (j, h, μ) ⇔ i = j, λ = μ,
//! gN = hN`, with quotient `M[G/N; I, Λ; P/N]` and kernel `M[N; I, Λ; P]`.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{quotient_with_transversal, FiniteGroup, GroupError, QuotientData, Subgroup};
use crate::semigroup::{is_semigroup_morphism, FiniteSemigroup};

/// Size bound below which `as_semigroup` materializes a table.
const MATERIALIZE_LIMIT: usize = 4096;
/// Size bound for the exhaustive congruence compatibility scan.
const COMPATIBILITY_LIMIT: usize = 256;

/// Errors raised by Rees matrix construction and congruence analysis.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReesError {
    #[error("index sets must be nonempty: |I| = {i_count}, |Λ| = {lambda_count}")]
    EmptyIndex { i_count: usize, lambda_count: usize },
    #[error("sandwich matrix must have {expected} rows of {width} entries; row {row} has {len}")]
    SandwichShape { row: usize, len: usize, expected: usize, width: usize },
    #[error("sandwich entry p_({lambda}, {i}) = {value} is outside the group of order {order}")]
    SandwichEntryOutOfRange { lambda: usize, i: usize, value: usize, order: usize },
    #[error("sandwich matrix is not normalized: p_({lambda}, {i}) = {value} ≠ identity")]
    NotNormalized { lambda: usize, i: usize, value: usize },
    #[error("sandwich entry p_({lambda}, {i}) = {value} lies outside the subgroup")]
    EntryOutsideSubgroup { lambda: usize, i: usize, value: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An element `(i, g, λ)` of a Rees matrix semigroup, by dense indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RmsElement {
    pub i: usize,
    pub g: usize,
    pub lambda: usize,
}

/// A finite Rees matrix semigroup `M[G; I, Λ; P]`.
#[derive(Clone, Debug)]
pub struct ReesMatrixSemigroup {
    group: FiniteGroup,
    i_count: usize,
    lambda_count: usize,
    /// Row-major by λ: `sandwich[λ · i_count + i] = p_{λi}`.
    sandwich: Arc<[u32]>,
}

impl ReesMatrixSemigroup {
    /// Builds `M[G; I, Λ; P]` from a λ-major sandwich matrix.
    pub fn new(
        group: &FiniteGroup,
        i_count: usize,
        lambda_count: usize,
        sandwich_rows: &[Vec<usize>],
    ) -> Result<Self, ReesError> {
        if i_count == 0 || lambda_count == 0 {
            return Err(ReesError::EmptyIndex { i_count, lambda_count });
        }
        if sandwich_rows.len() != lambda_count {
            return Err(ReesError::SandwichShape {
                row: sandwich_rows.len(),
                len: 0,
                expected: lambda_count,
                width: i_count,
            });
        }
        let mut sandwich = vec![0u32; lambda_count * i_count];
        for (lambda, row) in sandwich_rows.iter().enumerate() {
            if row.len() != i_count {
                return Err(ReesError::SandwichShape {
                    row: lambda,
                    len: row.len(),
                    expected: lambda_count,
                    width: i_count,
                });
            }
            for (i, &value) in row.iter().enumerate() {
                if value >= group.order() {
                    return Err(ReesError::SandwichEntryOutOfRange {
                        lambda,
                        i,
                        value,
                        order: group.order(),
                    });
                }
                sandwich[lambda * i_count + i] = value as u32;
            }
        }
        Ok(Self { group: group.clone(), i_count, lambda_count, sandwich: sandwich.into() })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn i_count(&self) -> usize {
        self.i_count
    }

    pub fn lambda_count(&self) -> usize {
        self.lambda_count
    }

    /// The sandwich entry `p_{λi}`.
    pub fn sandwich_entry(&self, lambda: usize, i: usize) -> usize {
        self.sandwich[lambda * self.i_count + i] as usize
    }

    /// Number of elements `|I| · |G| · |Λ|`.
    pub fn element_count(&self) -> usize {
        self.i_count * self.group.order() * self.lambda_count
    }

    /// Dense id of `(i, g, λ)`: `(i·|G| + g)·|Λ| + λ`.
    pub fn encode(&self, e: RmsElement) -> usize {
        debug_assert!(e.i < self.i_count && e.g < self.group.order() && e.lambda < self.lambda_count);
        (e.i * self.group.order() + e.g) * self.lambda_count + e.lambda
    }

    /// Inverse of [`encode`](Self::encode).
    pub fn decode(&self, id: usize) -> RmsElement {
        let lambda = id % self.lambda_count;
        let rest = id / self.lambda_count;
        RmsElement { i: rest / self.group.order(), g: rest % self.group.order(), lambda }
    }

    /// The Rees product `(i, g, λ)(j, h, μ) = (i, g·p_{λj}·h, μ)`.
    pub fn product(&self, a: RmsElement, b: RmsElement) -> RmsElement {
        let p = self.sandwich_entry(a.lambda, b.i);
        RmsElement {
            i: a.i,
            g: self.group.op(self.group.op(a.g, p), b.g),
            lambda: b.lambda,
        }
    }

    /// Product on dense ids.
    pub fn mul_ids(&self, a: usize, b: usize) -> usize {
        self.encode(self.product(self.decode(a), self.decode(b)))
    }

    /// A [`FiniteSemigroup`] facade over dense ids. Small instances are
    /// materialized; large ones stay lazy (the Rees product is associative
    /// for every sandwich matrix, so no re-validation is needed).
    pub fn as_semigroup(&self, label: &str) -> FiniteSemigroup {
        let n = self.element_count();
        if n <= MATERIALIZE_LIMIT {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                let da = self.decode(a);
                for b in 0..n {
                    table[a * n + b] = self.encode(self.product(da, self.decode(b))) as u32;
                }
            }
            return FiniteSemigroup::from_shared_table(label, n, table.into());
        }
        let rms = self.clone();
        FiniteSemigroup::from_view_unchecked(label, n, move |a, b| rms.mul_ids(a, b))
    }

    /// True iff row `λ = 0` and column `i = 0` of the sandwich matrix are
    /// identity.
    pub fn is_normalized(&self) -> bool {
        self.first_denormalized_entry().is_none()
    }

    fn first_denormalized_entry(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.i_count {
            let v = self.sandwich_entry(0, i);
            if v != self.group.identity() {
                return Some((0, i, v));
            }
        }
        for lambda in 0..self.lambda_count {
            let v = self.sandwich_entry(lambda, 0);
            if v != self.group.identity() {
                return Some((lambda, 0, v));
            }
        }
        None
    }

    /// Rewrites the sandwich matrix into normalized form,
    /// `p′_{λi} = p₀₀ · p_{λ0}⁻¹ · p_{λi} · p_{0i}⁻¹`, and returns the
    /// normalized semigroup together with the witnessing isomorphism
    /// `(i, g, λ) ↦ (i, p_{0i}·g·p_{λ0}·p₀₀⁻¹, λ)` on dense ids. The map is
    /// verified exhaustively to be a bijective morphism.
    pub fn normalize(&self) -> (ReesMatrixSemigroup, Vec<usize>) {
        let g = &self.group;
        let p00 = self.sandwich_entry(0, 0);
        let mut rows = Vec::with_capacity(self.lambda_count);
        for lambda in 0..self.lambda_count {
            let row_shift = g.op(p00, g.inv(self.sandwich_entry(lambda, 0)));
            let row: Vec<usize> = (0..self.i_count)
                .map(|i| {
                    g.op(g.op(row_shift, self.sandwich_entry(lambda, i)), g.inv(self.sandwich_entry(0, i)))
                })
                .collect();
            rows.push(row);
        }
        let normalized = ReesMatrixSemigroup::new(g, self.i_count, self.lambda_count, &rows)
            .expect("normalized matrix has the same shape");
        debug_assert!(normalized.is_normalized());

        let map: Vec<usize> = (0..self.element_count())
            .map(|id| {
                let e = self.decode(id);
                let img = g.op(
                    g.op(g.op(self.sandwich_entry(0, e.i), e.g), self.sandwich_entry(e.lambda, 0)),
                    g.inv(p00),
                );
                normalized.encode(RmsElement { i: e.i, g: img, lambda: e.lambda })
            })
            .collect();

        let check = is_semigroup_morphism(
            &map,
            &self.as_semigroup("pre-normalization"),
            &normalized.as_semigroup("normalized"),
        );
        assert!(
            check.morphism && check.injective,
            "normalization must be a bijective morphism (witness {:?})",
            check.witness
        );
        (normalized, map)
    }

    /// True iff the (normalized) sandwich matrix has all entries in the
    /// centre of `G`. Errors if the matrix is not normalized, since
    /// centrality is only meaningful in normal form.
    pub fn is_central(&self) -> Result<bool, ReesError> {
        if let Some((lambda, i, value)) = self.first_denormalized_entry() {
            return Err(ReesError::NotNormalized { lambda, i, value });
        }
        let (centre, _) = self.group.centre_and_orders();
        Ok(self
            .sandwich
            .iter()
            .all(|&p| centre.binary_search(&(p as usize)).is_ok()))
    }
}

/// A group congruence on a Rees matrix semigroup, induced by a normal
/// subgroup containing every sandwich entry.
#[derive(Clone, Debug)]
pub struct GroupCongruence {
    /// The inducing normal subgroup `N ⊴ G`.
    pub normal: Subgroup,
    /// Coset data for `G/N` (min-member transversal).
    pub quotient: QuotientData,
    /// The quotient semigroup `M[G/N; I, Λ; P/N]`.
    pub quotient_rms: ReesMatrixSemigroup,
    /// Dense ids of `S` whose middle coordinate lies in `N` (the kernel
    /// classes of idempotents form `M[N; I, Λ; P]`).
    pub kernel_members: Vec<usize>,
    /// The kernel as a Rees matrix semigroup over `N` (abstract copy).
    pub kernel_rms: ReesMatrixSemigroup,
    /// Class id of each element of `S` (dense, in first-occurrence order).
    pub class_of: Vec<u32>,
}

impl GroupCongruence {
    pub fn class_count(&self) -> usize {
        self.quotient_rms.element_count()
    }
}

/// Builds the group congruence induced by the normal subgroup with the given
/// member set. Checks normality, entry containment, compatibility (exhaustive
/// for small `S`), and that the class map is a morphism onto the quotient.
pub fn congruence_from_normal(
    rms: &ReesMatrixSemigroup,
    normal_members: &[usize],
) -> Result<GroupCongruence, ReesError> {
    let g = rms.group();
    let normal = Subgroup::from_members(g, normal_members)?;
    // `quotient_with_transversal` rejects non-normal subgroups with a
    // conjugation witness; run it first so containment errors don't mask it.
    let quotient = quotient_with_transversal(g, &normal)?;
    for lambda in 0..rms.lambda_count() {
        for i in 0..rms.i_count() {
            let value = rms.sandwich_entry(lambda, i);
            if !normal.contains(value) {
                return Err(ReesError::EntryOutsideSubgroup { lambda, i, value });
            }
        }
    }

    let quotient_rows: Vec<Vec<usize>> = (0..rms.lambda_count())
        .map(|lambda| {
            (0..rms.i_count()).map(|i| quotient.coset_of[rms.sandwich_entry(lambda, i)]).collect()
        })
        .collect();
    let quotient_rms =
        ReesMatrixSemigroup::new(&quotient.quotient, rms.i_count(), rms.lambda_count(), &quotient_rows)?;

    // Class map: (i, g, λ) ↦ (i, gN, λ).
    let class_map: Vec<usize> = (0..rms.element_count())
        .map(|id| {
            let e = rms.decode(id);
            quotient_rms.encode(RmsElement { i: e.i, g: quotient.coset_of[e.g], lambda: e.lambda })
        })
        .collect();

    // Compatibility, checked honestly on small instances: for every pair in
    // the same class and every companion, left and right products stay in a
    // common class.
    let n = rms.element_count();
    if n <= COMPATIBILITY_LIMIT {
        let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); quotient_rms.element_count()];
        for (id, &c) in class_map.iter().enumerate() {
            by_class[c].push(id);
        }
        for class in &by_class {
            for &a in class {
                for &a2 in class {
                    for b in 0..n {
                        assert_eq!(
                            class_map[rms.mul_ids(a, b)],
                            class_map[rms.mul_ids(a2, b)],
                            "right compatibility violated"
                        );
                        assert_eq!(
                            class_map[rms.mul_ids(b, a)],
                            class_map[rms.mul_ids(b, a2)],
                            "left compatibility violated"
                        );
                    }
                }
            }
        }
    }

    // The class map must be a surjective morphism onto the quotient.
    let check = is_semigroup_morphism(
        &class_map,
        &rms.as_semigroup("congruence-domain"),
        &quotient_rms.as_semigroup("congruence-quotient"),
    );
    assert!(check.morphism, "class map must be a morphism (witness {:?})", check.witness);

    // Kernel: the union of congruence classes containing idempotents is
    // exactly the elements with middle coordinate in N.
    let kernel_members: Vec<usize> = (0..rms.element_count())
        .filter(|&id| normal.contains(rms.decode(id).g))
        .collect();
    let (n_group, n_index) = normal.as_group(g)?;
    let mut index_of = vec![usize::MAX; g.order()];
    for (ix, &m) in n_index.iter().enumerate() {
        index_of[m] = ix;
    }
    let kernel_rows: Vec<Vec<usize>> = (0..rms.lambda_count())
        .map(|lambda| {
            (0..rms.i_count()).map(|i| index_of[rms.sandwich_entry(lambda, i)]).collect()
        })
        .collect();
    let kernel_rms = ReesMatrixSemigroup::new(&n_group, rms.i_count(), rms.lambda_count(), &kernel_rows)?;

    let class_of: Vec<u32> = {
        // Re-key class ids into first-occurrence order for reporting.
        let mut remap = vec![u32::MAX; quotient_rms.element_count()];
        let mut next = 0u32;
        let mut out = Vec::with_capacity(n);
        for &c in &class_map {
            if remap[c] == u32::MAX {
                remap[c] = next;
                next += 1;
            }
            out.push(remap[c]);
        }
        out
    };

    Ok(GroupCongruence { normal, quotient, quotient_rms, kernel_members, kernel_rms, class_of })
}

/// Enumerates every group congruence on `rms`: one per normal subgroup of
/// `G` containing all sandwich entries, in ascending `(order, members)`
/// order of the inducing subgroup.
pub fn enumerate_group_congruences(
    rms: &ReesMatrixSemigroup,
) -> Result<Vec<GroupCongruence>, ReesError> {
    let mut out = Vec::new();
    for sub in crate::group::all_subgroups(rms.group()) {
        if !sub.is_normal() {
            continue;
        }
        let contains_entries = (0..rms.lambda_count()).all(|lambda| {
            (0..rms.i_count()).all(|i| sub.contains(rms.sandwich_entry(lambda, i)))
        });
        if !contains_entries {
            continue;
        }
        out.push(congruence_from_normal(rms, sub.members())?);
    }
    Ok(out)
}
