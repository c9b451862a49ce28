//! Generic finite-semigroup facilities.
//!
//! A [`FiniteSemigroup`] is either a materialized multiplication table or a
//! lazily composed view (a closure over the components of a product
//! construction). Tables are validated exhaustively while `size³ ≤ 10^7`;
//! larger structures get a seeded sample of `10^5` triples plus a capped
//! family of idempotent-involving triples — the big composed views in this
//! crate are associative by construction (validated actions), so sampling
//! there guards against implementation bugs rather than carrying the proof.
//!
//! Green's relations are computed by honest principal-ideal comparison
//! (`a R b ⇔ aS¹ = bS¹`, `a L b ⇔ S¹a = S¹b`), which serves as the
//! brute-force oracle against the closed-form predicates elsewhere.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::group::{MAX_EXHAUSTIVE_TRIPLES, SAMPLED_TRIPLES};
use crate::sampling::IndexSampler;

/// Cap on `|T|^|gens|` for the brute-force embedding search.
pub const MAX_SEARCH_SPACE: u128 = 10_000_000;
/// Idempotent-involving associativity triples are capped near this budget
/// for large composed views (the literal "all idempotent-involving triples"
/// is ~10^12 at wreath-product scale).
const IDEMPOTENT_TRIPLE_BUDGET: usize = 1_000_000;

/// Errors raised by semigroup construction and search.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("a semigroup must have at least one element")]
    Empty,
    #[error("multiplication table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{size}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("search space of {space} assignments exceeds the cap {cap}")]
    SearchSpaceTooLarge { space: u128, cap: u128 },
    #[error("generators reach only {reached} of {size} elements")]
    GeneratorsDontGenerate { reached: usize, size: usize },
}

#[derive(Clone)]
enum ProductImpl {
    Table(Arc<[u32]>),
    View(Arc<dyn Fn(usize, usize) -> usize + Send + Sync>),
}

/// A finite semigroup on dense identifiers `0..size`.
#[derive(Clone)]
pub struct FiniteSemigroup {
    size: usize,
    label: String,
    product: ProductImpl,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a row-major table, validating associativity
    /// per the module policy.
    pub fn from_table(label: &str, rows: &[Vec<usize>]) -> Result<Self, SemigroupError> {
        let size = rows.len();
        if size == 0 {
            return Err(SemigroupError::Empty);
        }
        let mut table = vec![0u32; size * size];
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != size {
                return Err(SemigroupError::NotSquare { row, len: entries.len(), expected: size });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= size {
                    return Err(SemigroupError::EntryOutOfRange { row, col, value, size });
                }
                table[row * size + col] = value as u32;
            }
        }
        let s = Self { size, label: label.to_string(), product: ProductImpl::Table(table.into()) };
        s.check_associativity()?;
        Ok(s)
    }

    /// Wraps an already-validated table (used by group views).
    pub(crate) fn from_shared_table(label: &str, size: usize, table: Arc<[u32]>) -> Self {
        Self { size, label: label.to_string(), product: ProductImpl::Table(table) }
    }

    /// Wraps a product closure that is associative by construction
    /// (e.g. a Rees matrix product over a validated group). Skips the
    /// associativity scan; crate-internal only.
    pub(crate) fn from_view_unchecked(
        label: &str,
        size: usize,
        product: impl Fn(usize, usize) -> usize + Send + Sync + 'static,
    ) -> Self {
        Self { size, label: label.to_string(), product: ProductImpl::View(Arc::new(product)) }
    }

    /// Builds a composed view whose product is computed on demand.
    /// Associativity is checked per the module policy before returning.
    pub fn from_view(
        label: &str,
        size: usize,
        product: impl Fn(usize, usize) -> usize + Send + Sync + 'static,
    ) -> Result<Self, SemigroupError> {
        if size == 0 {
            return Err(SemigroupError::Empty);
        }
        let s = Self { size, label: label.to_string(), product: ProductImpl::View(Arc::new(product)) };
        s.check_associativity()?;
        Ok(s)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self.product, ProductImpl::Table(_))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.product {
            ProductImpl::Table(t) => t[a * self.size + b] as usize,
            ProductImpl::View(f) => f(a, b),
        }
    }

    /// All idempotents, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.mul(x, x) == x).collect()
    }

    fn check_associativity(&self) -> Result<(), SemigroupError> {
        let n = self.size;
        let triples = (n as u128).pow(3);
        if triples <= MAX_EXHAUSTIVE_TRIPLES as u128 {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(SemigroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
            return Ok(());
        }
        // Sampled triples.
        for (a, b, c) in IndexSampler::new(0xa550c, n).triples(SAMPLED_TRIPLES) {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(SemigroupError::NotAssociative { a, b, c });
            }
        }
        // Idempotent-involving triples over a seeded sample of companions,
        // capped so the whole family stays near the budget.
        let idem = self.idempotents();
        if !idem.is_empty() {
            let per_slot = (IDEMPOTENT_TRIPLE_BUDGET / (3 * idem.len())).max(1);
            let m = (per_slot as f64).sqrt().ceil() as usize;
            let companions = IndexSampler::new(0x1de9, n).distinct(m.max(2));
            for &e in &idem {
                for &x in &companions {
                    for &y in &companions {
                        for (a, b, c) in [(e, x, y), (x, e, y), (x, y, e)] {
                            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                                return Err(SemigroupError::NotAssociative { a, b, c });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("label", &self.label)
            .field("size", &self.size)
            .field("materialized", &self.is_materialized())
            .finish()
    }
}

impl PartialEq for FiniteSemigroup {
    /// Element-wise product equality (labels are cosmetic). Intended for
    /// small test fixtures; cost is `size²` products.
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && (0..self.size)
                .all(|a| (0..self.size).all(|b| self.mul(a, b) == other.mul(a, b)))
    }
}

impl Eq for FiniteSemigroup {}

/// Green's R/L/H classifications by principal-ideal comparison.
#[derive(Clone, Debug)]
pub struct GreenClasses {
    pub r_class_of: Vec<u32>,
    pub l_class_of: Vec<u32>,
    pub h_class_of: Vec<u32>,
    pub r_count: usize,
    pub l_count: usize,
    pub h_count: usize,
}

/// The principal right ideal `aS¹` as a bitset over element ids.
pub fn principal_right_ideal(s: &FiniteSemigroup, a: usize) -> Vec<u64> {
    let mut bits = vec![0u64; s.size().div_ceil(64)];
    set_bit(&mut bits, a);
    for x in 0..s.size() {
        set_bit(&mut bits, s.mul(a, x));
    }
    bits
}

/// The principal left ideal `S¹a` as a bitset over element ids.
pub fn principal_left_ideal(s: &FiniteSemigroup, a: usize) -> Vec<u64> {
    let mut bits = vec![0u64; s.size().div_ceil(64)];
    set_bit(&mut bits, a);
    for x in 0..s.size() {
        set_bit(&mut bits, s.mul(x, a));
    }
    bits
}

#[inline]
fn set_bit(bits: &mut [u64], ix: usize) {
    bits[ix / 64] |= 1 << (ix % 64);
}

fn class_ids(keys: Vec<Vec<u64>>) -> (Vec<u32>, usize) {
    let mut map: HashMap<Vec<u64>, u32> = HashMap::new();
    let mut out = Vec::with_capacity(keys.len());
    for key in keys {
        let next = map.len() as u32;
        let id = *map.entry(key).or_insert(next);
        out.push(id);
    }
    let count = map.len();
    (out, count)
}

/// Brute-force Green's relations via principal-ideal equality.
pub fn green_classes(s: &FiniteSemigroup) -> GreenClasses {
    let right: Vec<Vec<u64>> =
        (0..s.size()).into_par_iter().map(|a| principal_right_ideal(s, a)).collect();
    let (r_class_of, r_count) = class_ids(right);
    let left: Vec<Vec<u64>> =
        (0..s.size()).into_par_iter().map(|a| principal_left_ideal(s, a)).collect();
    let (l_class_of, l_count) = class_ids(left);
    let mut h_map: HashMap<(u32, u32), u32> = HashMap::new();
    let mut h_class_of = Vec::with_capacity(s.size());
    for x in 0..s.size() {
        let key = (r_class_of[x], l_class_of[x]);
        let next = h_map.len() as u32;
        h_class_of.push(*h_map.entry(key).or_insert(next));
    }
    let h_count = h_map.len();
    GreenClasses { r_class_of, l_class_of, h_class_of, r_count, l_count, h_count }
}

/// Closure of `gens` under the product, ascending. Every element of the
/// generated subsemigroup is a product of generators, reachable by
/// repeatedly multiplying discovered elements by generators on the right.
pub fn generated_subsemigroup(s: &FiniteSemigroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; s.size()];
    let mut queue: Vec<usize> = Vec::new();
    for &g in gens {
        if !seen[g] {
            seen[g] = true;
            queue.push(g);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &g in gens {
            let y = s.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    (0..s.size()).filter(|&x| seen[x]).collect()
}

/// The principal two-sided ideal `S¹aS¹` as a bitset (worklist closure).
fn two_sided_ideal(s: &FiniteSemigroup, a: usize) -> Vec<u64> {
    let mut bits = vec![0u64; s.size().div_ceil(64)];
    set_bit(&mut bits, a);
    let mut queue = vec![a];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for y in 0..s.size() {
            for z in [s.mul(x, y), s.mul(y, x)] {
                if bits[z / 64] & (1 << (z % 64)) == 0 {
                    set_bit(&mut bits, z);
                    queue.push(z);
                }
            }
        }
    }
    bits
}

/// True iff `S` is completely simple: a single J-class (finite and simple
/// implies completely simple) together with at least one idempotent.
pub fn is_completely_simple(s: &FiniteSemigroup) -> bool {
    if s.idempotents().is_empty() {
        return false;
    }
    let full = s.size();
    (0..full).into_par_iter().all(|a| {
        let ideal = two_sided_ideal(s, a);
        popcount(&ideal) == full
    })
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

/// Result of a morphism verification scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCheck {
    pub morphism: bool,
    pub injective: bool,
    /// Lexicographically first pair `(a, b)` with `map[a·b] ≠ map[a]·map[b]`.
    pub witness: Option<(usize, usize)>,
}

/// Verifies that `map` is a semigroup morphism `S → T` over all `|S|²`
/// ordered pairs; reports injectivity and the first violating pair.
pub fn is_semigroup_morphism(map: &[usize], s: &FiniteSemigroup, t: &FiniteSemigroup) -> MorphismCheck {
    assert_eq!(map.len(), s.size(), "map must be total on S");
    let n = s.size();
    let witness = (0..n * n)
        .into_par_iter()
        .find_first(|&ix| {
            let (a, b) = (ix / n, ix % n);
            map[s.mul(a, b)] != t.mul(map[a], map[b])
        })
        .map(|ix| (ix / n, ix % n));
    let mut seen = vec![false; t.size()];
    let injective = map.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
    MorphismCheck { morphism: witness.is_none(), injective, witness }
}

/// Brute-force embedding search: the lexicographically first assignment of
/// `gens` into `T` that extends to an injective morphism `S → T`, if any.
pub fn brute_force_embedding_search(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    gens: &[usize],
) -> Result<Option<Vec<usize>>, SemigroupError> {
    let space = (t.size() as u128).pow(gens.len() as u32);
    if space > MAX_SEARCH_SPACE {
        return Err(SemigroupError::SearchSpaceTooLarge { space, cap: MAX_SEARCH_SPACE });
    }
    // Factorize S over gens: each element is either a generator or a
    // previously discovered element times a generator.
    #[derive(Clone, Copy)]
    enum How {
        Gen(usize),
        Prod(usize, usize), // (element, generator index)
    }
    let mut how: Vec<Option<How>> = vec![None; s.size()];
    let mut order: Vec<usize> = Vec::new();
    for (gix, &g) in gens.iter().enumerate() {
        if how[g].is_none() {
            how[g] = Some(How::Gen(gix));
            order.push(g);
        }
    }
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (gix, &g) in gens.iter().enumerate() {
            let y = s.mul(x, g);
            if how[y].is_none() {
                how[y] = Some(How::Prod(x, gix));
                order.push(y);
            }
        }
    }
    if order.len() != s.size() {
        return Err(SemigroupError::GeneratorsDontGenerate { reached: order.len(), size: s.size() });
    }

    let k = gens.len();
    let mut assignment = vec![0usize; k];
    let mut image = vec![0usize; s.size()];
    for ix in 0..space {
        let mut rest = ix;
        for slot in (0..k).rev() {
            assignment[slot] = (rest % t.size() as u128) as usize;
            rest /= t.size() as u128;
        }
        for &x in &order {
            image[x] = match how[x].unwrap() {
                How::Gen(gix) => assignment[gix],
                How::Prod(prev, gix) => t.mul(image[prev], assignment[gix]),
            };
        }
        let check = is_semigroup_morphism(&image, s, t);
        if check.morphism && check.injective {
            return Ok(Some(image));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn left_zero(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_table(
            "left-zero",
            &(0..n).map(|x| vec![x; n]).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn table_validation() {
        assert_eq!(FiniteSemigroup::from_table("empty", &[]), Err(SemigroupError::Empty));
        let bad = FiniteSemigroup::from_table("bad", &[vec![0, 1], vec![1, 0]]);
        // (1·1)·1 = 0·1 = 1 but 1·(1·1) = 1·0 = 1 — actually Z2 is a group, fine.
        assert!(bad.is_ok());
        // A genuinely non-associative table: x·y = (x + y²) mod 3.
        let rows: Vec<Vec<usize>> =
            (0..3).map(|x| (0..3).map(|y| (x + y * y) % 3).collect()).collect();
        match FiniteSemigroup::from_table("nonassoc", &rows) {
            Err(SemigroupError::NotAssociative { a, b, c }) => {
                let s = |x: usize, y: usize| (x + y * y) % 3;
                assert_ne!(s(s(a, b), c), s(a, s(b, c)));
            }
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn green_classes_of_left_zero() {
        let s = left_zero(3);
        let g = green_classes(&s);
        // xS¹ = {x}: three R-classes. S¹x = S: one L-class.
        assert_eq!(g.r_count, 3);
        assert_eq!(g.l_count, 1);
        assert_eq!(g.h_count, 3);
    }

    #[test]
    fn green_classes_of_group_are_universal() {
        let z6 = FiniteGroup::cyclic(6).unwrap().as_semigroup("Z6");
        let g = green_classes(&z6);
        assert_eq!((g.r_count, g.l_count, g.h_count), (1, 1, 1));
    }

    #[test]
    fn generated_subsemigroup_basics() {
        let s = left_zero(3);
        assert_eq!(generated_subsemigroup(&s, &[1]), vec![1]);
        assert_eq!(generated_subsemigroup(&s, &[0, 2]), vec![0, 2]);
        let z4 = FiniteGroup::cyclic(4).unwrap().as_semigroup("Z4");
        assert_eq!(generated_subsemigroup(&z4, &[1]), vec![0, 1, 2, 3]);
        assert_eq!(generated_subsemigroup(&z4, &[2]), vec![0, 2]);
    }

    #[test]
    fn complete_simplicity() {
        let z5 = FiniteGroup::cyclic(5).unwrap().as_semigroup("Z5");
        assert!(is_completely_simple(&z5));
        // 2-element null semigroup: xy = 0 always. {0} is a proper ideal.
        let null = FiniteSemigroup::from_table("null", &[vec![0, 0], vec![0, 0]]).unwrap();
        assert!(!is_completely_simple(&null));
        // Left-zero semigroups are completely simple (every element idempotent,
        // single J-class since xSy ∋ x... in fact xy = x means S¹aS¹ = S).
        assert!(is_completely_simple(&left_zero(3)));
    }

    #[test]
    fn morphism_checks() {
        let z4 = FiniteGroup::cyclic(4).unwrap().as_semigroup("Z4");
        let id: Vec<usize> = (0..4).collect();
        let check = is_semigroup_morphism(&id, &z4, &z4);
        assert_eq!(check, MorphismCheck { morphism: true, injective: true, witness: None });
        // Constant map to a non-idempotent.
        let c1 = vec![1usize; 4];
        let check = is_semigroup_morphism(&c1, &z4, &z4);
        assert!(!check.morphism);
        assert_eq!(check.witness, Some((0, 0)));
        // Doubling map Z4 → Z4 is a (non-injective) morphism.
        let double: Vec<usize> = (0..4).map(|x| (2 * x) % 4).collect();
        let check = is_semigroup_morphism(&double, &z4, &z4);
        assert!(check.morphism);
        assert!(!check.injective);
    }

    #[test]
    fn embedding_search_small() {
        let z4 = FiniteGroup::cyclic(4).unwrap().as_semigroup("Z4");
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_power(&z2, 2).unwrap().as_semigroup("Z2×Z2");
        // No order-4 element in the Klein group.
        assert_eq!(brute_force_embedding_search(&z4, &v4, &[1]).unwrap(), None);
        // Z2 into Z4: 1 must land on the order-2 element 2.
        let z2s = z2.as_semigroup("Z2");
        let found = brute_force_embedding_search(&z2s, &z4, &[1]).unwrap().unwrap();
        assert_eq!(found, vec![0, 2]);
        // Right-zero pair into a group: impossible (two idempotents).
        let rz = FiniteSemigroup::from_table("right-zero", &[vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(brute_force_embedding_search(&rz, &z4, &[0, 1]).unwrap(), None);
        // Search-space cap.
        let err = brute_force_embedding_search(&rz, &z4, &[0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0])
            .unwrap_err();
        assert!(matches!(err, SemigroupError::SearchSpaceTooLarge { .. }));
    }

    #[test]
    fn view_and_table_agree() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let table = z4.as_semigroup("Z4");
        let view = FiniteSemigroup::from_view("Z4-view", 4, |a, b| (a + b) % 4).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(table.mul(a, b), view.mul(a, b));
            }
        }
        assert!(table.is_materialized());
        assert!(!view.is_materialized());
    }
}
