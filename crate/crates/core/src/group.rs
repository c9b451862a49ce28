//! Finite groups as multiplication tables.
//!
//! A [`FiniteGroup`] is a fully materialized Cayley table over dense element
//! identifiers `0..order` with the identity pinned at id `0`. Construction
//! validates the group laws: identity and inverses exhaustively, and
//! associativity exhaustively whenever `order³ ≤ 10^7` (about order 215),
//! falling back to a seeded sample of `10^5` triples beyond that. The large
//! groups in this crate (direct powers, semidirect products) are associative
//! by construction, so sampling there is a guard against implementation
//! bugs, not a soundness gap.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::sampling::IndexSampler;
use crate::semigroup::FiniteSemigroup;

/// Exhaustive associativity is used up to this many triples.
pub(crate) const MAX_EXHAUSTIVE_TRIPLES: usize = 10_000_000;
/// Number of seeded triples checked when a table is too large for an
/// exhaustive associativity scan.
pub(crate) const SAMPLED_TRIPLES: usize = 100_000;
/// Hard cap on materialized group order (tables are `order²` entries).
pub const MAX_GROUP_ORDER: usize = 2048;

/// Errors raised by group construction and the operations in this module.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("a group must have at least one element")]
    ZeroOrder,
    #[error("order {order} exceeds the materialization cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("multiplication table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("element 0 is not a two-sided identity (witness element {witness})")]
    NoIdentityAtZero { witness: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {elem} has no two-sided inverse")]
    MissingInverse { elem: usize },
    #[error("the member set is not a subgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("subgroup is not normal (witness: conjugating {member} by {by} leaves the subgroup)")]
    NotNormal { member: usize, by: usize },
    #[error("relation {relation} contains the invalid letter {letter} (expected ±1..=±{gens})")]
    BadWord { relation: usize, letter: i32, gens: usize },
    #[error("generators leave {missing} of {order} elements unreachable")]
    GeneratorsDontGenerate { missing: usize, order: usize },
}

/// A finite group on `0..order` with identity `0`, backed by a Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Arc<[u32]>,
    inverse: Arc<[u32]>,
}

impl FiniteGroup {
    /// Builds a group from a row-major table, validating the group laws.
    ///
    /// Identity (at id 0) and inverse checks are always exhaustive;
    /// associativity follows the triple-count policy described in the
    /// module docs. The first violation found (lexicographically smallest
    /// triple on exhaustive scans) is reported.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::OrderTooLarge { order, cap: MAX_GROUP_ORDER });
        }
        let mut table = vec![0u32; order * order];
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare { row, len: entries.len(), expected: order });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order });
                }
                table[row * order + col] = value as u32;
            }
        }
        Self::from_flat_table(order, table)
    }

    /// Builds a group by evaluating `op` on every pair. Validation as in
    /// [`FiniteGroup::from_table`].
    pub fn from_fn(
        order: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::OrderTooLarge { order, cap: MAX_GROUP_ORDER });
        }
        let mut table = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let value = op(a, b);
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { row: a, col: b, value, order });
                }
                table[a * order + b] = value as u32;
            }
        }
        Self::from_flat_table(order, table)
    }

    fn from_flat_table(order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        // Identity at 0, exhaustively.
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(GroupError::NoIdentityAtZero { witness: x });
            }
        }
        check_associativity(order, &table)?;
        // Two-sided inverses, exhaustively.
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            let found = (0..order)
                .find(|&b| table[a * order + b] == 0 && table[b * order + a] == 0);
            match found {
                Some(b) => inverse[a] = b as u32,
                None => return Err(GroupError::MissingInverse { elem: a }),
            }
        }
        Ok(Self { order, table: table.into(), inverse: inverse.into() })
    }

    /// The cyclic group `Z_n` (addition mod n).
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// The symmetric group on `n` points. Elements are the permutations of
    /// `0..n` in lexicographic one-line order (so the identity is id 0), and
    /// `op(a, b)` is "apply `b`, then `a`".
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let perms = permutations_lex(n);
        let order = perms.len();
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::OrderTooLarge { order, cap: MAX_GROUP_ORDER });
        }
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        Self::from_fn(order, |a, b| {
            let composed: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
            index_of(&composed)
        })
    }

    /// The direct power `base^k` under pointwise multiplication. Element ids
    /// encode value tables big-endian (the value at position 0 is the most
    /// significant digit), which is exactly lexicographic order on tables.
    pub fn direct_power(base: &FiniteGroup, k: usize) -> Result<Self, GroupError> {
        let n = base.order();
        let order = n.checked_pow(k as u32).filter(|&o| o <= MAX_GROUP_ORDER);
        let order = order.ok_or(GroupError::OrderTooLarge {
            order: n.saturating_pow(k as u32),
            cap: MAX_GROUP_ORDER,
        })?;
        if k == 0 {
            return Self::cyclic(1);
        }
        Self::from_fn(order, |a, b| {
            let mut out = 0usize;
            let mut shift = order;
            let (mut aa, mut bb) = (a, b);
            for _ in 0..k {
                shift /= n;
                out = out * n + base.op(aa / shift, bb / shift);
                aa %= shift;
                bb %= shift;
            }
            out
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element (always id 0).
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `a` raised to an integer power (negative powers via the inverse).
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut out = 0usize;
        for _ in 0..k.unsigned_abs() {
            out = self.op(out, base);
        }
        out
    }

    /// The multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1usize;
        while x != 0 {
            x = self.op(x, a);
            n += 1;
        }
        n
    }

    /// Centre members (ascending) together with every element's order.
    pub fn centre_and_orders(&self) -> (Vec<usize>, Vec<usize>) {
        let centre = (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.op(z, x) == self.op(x, z)))
            .collect();
        let orders = (0..self.order).map(|a| self.element_order(a)).collect();
        (centre, orders)
    }

    /// Evaluates a word over generator letters (`+(i+1)` for `gens[i]`,
    /// `-(i+1)` for its inverse) at concrete images of the generators.
    pub fn eval_word(&self, images: &[usize], word: &[i32]) -> usize {
        word.iter().fold(0usize, |acc, &letter| {
            let ix = letter.unsigned_abs() as usize - 1;
            let g = if letter < 0 { self.inv(images[ix]) } else { images[ix] };
            self.op(acc, g)
        })
    }

    /// A semigroup view sharing this group's table.
    pub fn as_semigroup(&self, label: &str) -> FiniteSemigroup {
        FiniteSemigroup::from_shared_table(label, self.order, Arc::clone(&self.table))
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}
impl Eq for FiniteGroup {}

fn check_associativity(order: usize, table: &[u32]) -> Result<(), GroupError> {
    let op = |a: usize, b: usize| table[a * order + b] as usize;
    let triples = order.saturating_mul(order).saturating_mul(order);
    if triples <= MAX_EXHAUSTIVE_TRIPLES {
        for a in 0..order {
            for b in 0..order {
                let ab = op(a, b);
                for c in 0..order {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
    } else {
        for (a, b, c) in IndexSampler::new(0x5eed_a550c, order).triples(SAMPLED_TRIPLES) {
            if op(op(a, b), c) != op(a, op(b, c)) {
                return Err(GroupError::NotAssociative { a, b, c });
            }
        }
    }
    Ok(())
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// A subgroup given by its sorted member list, with a cached normality flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    normal: bool,
}

impl Subgroup {
    /// Validates that `members` (in any order) form a subgroup of `g`.
    pub fn from_members(g: &FiniteGroup, members: &[usize]) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if set.iter().any(|&m| m >= g.order()) {
            return Err(GroupError::NotASubgroup { reason: "member out of range".into() });
        }
        if !set.contains(&0) {
            return Err(GroupError::NotASubgroup { reason: "missing the identity".into() });
        }
        for &a in &set {
            if !set.contains(&g.inv(a)) {
                return Err(GroupError::NotASubgroup {
                    reason: format!("member {a} has its inverse outside the set"),
                });
            }
            for &b in &set {
                if !set.contains(&g.op(a, b)) {
                    return Err(GroupError::NotASubgroup {
                        reason: format!("product of members {a} and {b} escapes the set"),
                    });
                }
            }
        }
        let members: Vec<usize> = set.into_iter().collect();
        let normal = is_normal(g, &members);
        Ok(Self { members, normal })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, elem: usize) -> bool {
        self.members.binary_search(&elem).is_ok()
    }

    /// Position of a parent element inside the sorted member list.
    pub fn index_of(&self, elem: usize) -> Option<usize> {
        self.members.binary_search(&elem).ok()
    }

    /// An abstract copy of this subgroup as a standalone group. Returns the
    /// group together with the member list mapping abstract id -> parent id.
    /// The identity lands at abstract id 0 because member lists are sorted.
    pub fn as_group(&self, g: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let members = self.members.clone();
        let group = FiniteGroup::from_fn(members.len(), |a, b| {
            let prod = g.op(members[a], members[b]);
            members.binary_search(&prod).expect("subgroup is closed")
        })?;
        Ok((group, members))
    }
}

fn is_normal(g: &FiniteGroup, sorted_members: &[usize]) -> bool {
    sorted_members.iter().all(|&m| {
        (0..g.order()).all(|x| {
            let conj = g.op(g.op(x, m), g.inv(x));
            sorted_members.binary_search(&conj).is_ok()
        })
    })
}

/// The subgroup generated by `gens` (breadth-first closure).
pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut queue: Vec<usize> = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &gen in gens {
            for y in [g.op(x, gen), g.op(gen, x), g.op(x, g.inv(gen))] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    let members: Vec<usize> = (0..g.order()).filter(|&x| seen[x]).collect();
    let normal = is_normal(g, &members);
    Subgroup { members, normal }
}

/// Every subgroup of `g`, ascending by (size, member list). Breadth-first
/// closure over one-generator extensions; fine for the desk-scale orders
/// this crate works with.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![0usize];
    found.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(current) = frontier.pop() {
        for gen in 1..g.order() {
            if current.binary_search(&gen).is_ok() {
                continue;
            }
            let mut gens: Vec<usize> = current.clone();
            gens.push(gen);
            let bigger = subgroup_generated(g, &gens).members;
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut subgroups: Vec<Subgroup> = found
        .into_iter()
        .map(|members| {
            let normal = is_normal(g, &members);
            Subgroup { members, normal }
        })
        .collect();
    subgroups.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
    subgroups
}

/// A quotient `G/N` with a fixed transversal.
///
/// Cosets are labelled `0..quotient.order()` in ascending order of their
/// minimum member, so the identity coset is id 0; the transversal picks each
/// coset's minimum member, which makes the representative of the identity
/// coset the identity itself.
#[derive(Clone, Debug)]
pub struct QuotientData {
    /// Coset id of each parent element.
    pub coset_of: Vec<usize>,
    /// Representative (minimum member) of each coset.
    pub transversal: Vec<usize>,
    /// The quotient group on coset ids.
    pub quotient: FiniteGroup,
}

impl QuotientData {
    pub fn coset_count(&self) -> usize {
        self.transversal.len()
    }
}

/// Builds `G/N` for a normal subgroup `N`, with the canonical transversal.
pub fn quotient_with_transversal(
    g: &FiniteGroup,
    n: &Subgroup,
) -> Result<QuotientData, GroupError> {
    if let Some(&m) = n.members().iter().find(|&&m| !is_normal_single(g, n, m)) {
        let by = (0..g.order())
            .find(|&x| !n.contains(g.op(g.op(x, m), g.inv(x))))
            .unwrap_or(0);
        return Err(GroupError::NotNormal { member: m, by });
    }
    let order = g.order();
    let mut coset_min = vec![usize::MAX; order];
    for x in 0..order {
        let min = n.members().iter().map(|&m| g.op(x, m)).min().unwrap();
        coset_min[x] = min;
    }
    let mut reps: Vec<usize> = coset_min.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    reps.sort_unstable();
    let coset_of: Vec<usize> = (0..order)
        .map(|x| reps.binary_search(&coset_min[x]).unwrap())
        .collect();
    let quotient = FiniteGroup::from_fn(reps.len(), |a, b| coset_of[g.op(reps[a], reps[b])])?;
    Ok(QuotientData { coset_of, transversal: reps, quotient })
}

fn is_normal_single(g: &FiniteGroup, n: &Subgroup, m: usize) -> bool {
    (0..g.order()).all(|x| n.contains(g.op(g.op(x, m), g.inv(x))))
}

/// A total map between two groups, stored as the image of every domain
/// element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMorphism {
    pub image: Vec<usize>,
    pub injective: bool,
}

/// Enumerates all group morphisms `domain -> codomain` determined by images
/// of `gens` that satisfy every relation, in lexicographic order of the
/// generator-image tuple.
///
/// `relations` are words over the generators: letter `+(i+1)` stands for
/// `gens[i]`, `-(i+1)` for its inverse. Each satisfying assignment is
/// extended to the whole domain along a fixed factorization of every domain
/// element into generators, then verified to be a morphism on all
/// `|domain|²` pairs (so a presentation that does not actually present the
/// domain cannot smuggle in a non-morphism). With `injective_only`, keeps
/// only assignments whose image has `domain.order()` distinct elements.
pub fn enumerate_group_morphisms(
    domain: &FiniteGroup,
    gens: &[usize],
    relations: &[Vec<i32>],
    codomain: &FiniteGroup,
    injective_only: bool,
) -> Result<Vec<GroupMorphism>, GroupError> {
    for (rix, rel) in relations.iter().enumerate() {
        for &letter in rel {
            if letter == 0 || letter.unsigned_abs() as usize > gens.len() {
                return Err(GroupError::BadWord {
                    relation: rix,
                    letter,
                    gens: gens.len(),
                });
            }
        }
    }
    let derivations = factorize_by_bfs(domain, gens)?;

    use rayon::prelude::*;
    let m = codomain.order();
    let k = gens.len();
    let total: usize = m.pow(k as u32);
    let morphisms: Vec<GroupMorphism> = (0..total)
        .into_par_iter()
        .filter_map(|assignment_ix| {
            // Decode the assignment big-endian so ascending ids are
            // lexicographically ascending image tuples.
            let mut images = vec![0usize; k];
            let mut rest = assignment_ix;
            for slot in (0..k).rev() {
                images[slot] = rest % m;
                rest /= m;
            }
            if !relations.iter().all(|rel| codomain.eval_word(&images, rel) == 0) {
                return None;
            }
            let image = extend_assignment(domain, codomain, gens, &images, &derivations);
            // Full morphism verification: the extension used only a spanning
            // factorization, so check every pair.
            for a in 0..domain.order() {
                for b in 0..domain.order() {
                    if image[domain.op(a, b)] != codomain.op(image[a], image[b]) {
                        return None;
                    }
                }
            }
            let distinct: BTreeSet<usize> = image.iter().copied().collect();
            let injective = distinct.len() == domain.order();
            if injective_only && !injective {
                return None;
            }
            Some(GroupMorphism { image, injective })
        })
        .collect();
    Ok(morphisms)
}

/// Maximum order for brute-force isomorphism testing.
pub const MAX_ISO_ORDER: usize = 24;

/// Brute-force isomorphism test for groups of order ≤ [`MAX_ISO_ORDER`].
///
/// Picks a greedy generating set of `a` and enumerates all assignments of
/// those generators into `b`; each assignment is extended along a BFS
/// factorization and checked to be a bijective morphism.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool, GroupError> {
    let order = a.order();
    if order > MAX_ISO_ORDER || b.order() > MAX_ISO_ORDER {
        return Err(GroupError::OrderTooLarge {
            order: order.max(b.order()),
            cap: MAX_ISO_ORDER,
        });
    }
    if order != b.order() {
        return Ok(false);
    }
    // Greedy generating set: repeatedly adjoin the smallest element outside
    // the subgroup generated so far.
    let mut gens: Vec<usize> = Vec::new();
    let mut span = subgroup_generated(a, &gens);
    while span.len() < order {
        let next = (0..order).find(|&x| !span.contains(x)).unwrap();
        gens.push(next);
        span = subgroup_generated(a, &gens);
    }
    if gens.is_empty() {
        return Ok(true); // both trivial
    }
    let derivations = factorize_by_bfs(a, &gens)?;
    let k = gens.len();
    let total = b.order().pow(k as u32) as u64;
    let mut assignment = vec![0usize; k];
    for ix in 0..total {
        let mut rest = ix;
        for slot in (0..k).rev() {
            assignment[slot] = (rest % b.order() as u64) as usize;
            rest /= b.order() as u64;
        }
        // Quick filter: generator orders must match.
        if gens
            .iter()
            .zip(&assignment)
            .any(|(&g, &im)| a.element_order(g) != b.element_order(im))
        {
            continue;
        }
        let image = extend_assignment(a, b, &gens, &assignment, &derivations);
        let mut seen = vec![false; order];
        if image.iter().any(|&y| std::mem::replace(&mut seen[y], true)) {
            continue;
        }
        let is_morphism = (0..order)
            .all(|x| (0..order).all(|y| image[a.op(x, y)] == b.op(image[x], image[y])));
        if is_morphism {
            return Ok(true);
        }
    }
    Ok(false)
}

/// For each domain element, how to reach it from the identity: `None` for
/// the identity, `Some((prev, gen_ix))` meaning `prev · gens[gen_ix]`.
fn factorize_by_bfs(
    domain: &FiniteGroup,
    gens: &[usize],
) -> Result<Vec<Option<(usize, usize)>>, GroupError> {
    let mut derivation: Vec<Option<Option<(usize, usize)>>> = vec![None; domain.order()];
    derivation[0] = Some(None);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (gix, &gen) in gens.iter().enumerate() {
            let y = domain.op(x, gen);
            if derivation[y].is_none() {
                derivation[y] = Some(Some((x, gix)));
                queue.push(y);
            }
        }
    }
    let missing = derivation.iter().filter(|d| d.is_none()).count();
    if missing > 0 {
        return Err(GroupError::GeneratorsDontGenerate { missing, order: domain.order() });
    }
    Ok(derivation.into_iter().map(Option::unwrap).collect())
}

fn extend_assignment(
    domain: &FiniteGroup,
    codomain: &FiniteGroup,
    _gens: &[usize],
    images: &[usize],
    derivations: &[Option<(usize, usize)>],
) -> Vec<usize> {
    let mut image = vec![usize::MAX; domain.order()];
    image[0] = 0;
    // Derivations were produced by BFS, so a simple fixpoint sweep resolves
    // them in a bounded number of passes; in practice one pass in BFS order
    // would do, but sweeping keeps this independent of queue order.
    let mut remaining = domain.order() - 1;
    while remaining > 0 {
        let mut progressed = false;
        for x in 0..domain.order() {
            if image[x] != usize::MAX {
                continue;
            }
            if let Some((prev, gix)) = derivations[x] {
                if image[prev] != usize::MAX {
                    image[x] = codomain.op(image[prev], images[gix]);
                    remaining -= 1;
                    progressed = true;
                }
            }
        }
        assert!(progressed, "BFS derivations must resolve");
    }
    image
}
