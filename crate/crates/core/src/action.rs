//! Group actions on semigroups, semidirect and wreath products, and the
//! Rees-matrix description of a power of a completely simple semigroup.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * An action of `H` on `T` is written on the left, `t ↦ ᴬt`, and satisfies
//!   `ᴱt = t` (identity), `ᴮᴬt = ᴮ(ᴬt)` (composition, so `act[B·A] =
//!   act[B] ∘ act[A]`), and every `ᴬ(−)` is a semigroup automorphism.
//! * The semidirect product `T ⋊ H` has base set `T × H` and product
//!   `(t, A)(u, B) = (t · ᴬu, A·B)`; a pair is encoded as `A·|T| + t`, so
//!   the kernel of the projection onto `H` occupies ids `0..|T|`.
//! * Functions `H → X` are encoded big-endian (slot `A = 0` most
//!   significant), matching [`FiniteGroup::direct_power`]. The wreath
//!   product `T wr H` is `T^H ⋊ H` under translation, `(ᴬf)(B) = f(B·A)`.
//!
//! When `T = M[G; I, Λ; P]` is a Rees matrix semigroup, the power `T^H` is
//! again one: `T^H ≅ M[G^H; I^H, Λ^H; P^H]` with `p^H_{ξη}(A) =
//! p_{ξ(A), η(A)}`, and translation acts coordinate-wise on the three
//! components. [`WreathCopy`] materializes that description and verifies the
//! isomorphism, the compatibility identity `ᴮ(p^H_{ξη}) = p^H_{ᴮξ, ᴮη}`, and
//! the correspondence of the two actions.

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::rees::{ReesError, ReesMatrixSemigroup, RmsElement};
use crate::sampling::IndexSampler;
use crate::semigroup::{FiniteSemigroup, GreenClasses};

/// Cap on `|T|^|H|` when forming a power.
pub const MAX_POWER_SIZE: u128 = 2_000_000;
/// Cap on `|T| · |H|` when forming a semidirect product.
pub const MAX_SEMIDIRECT_SIZE: u128 = 10_000_000;
/// Pair budget below which morphism-style scans run exhaustively.
const EXHAUSTIVE_PAIRS: u128 = 10_000_000;
/// Sampled pairs for scans over that budget.
const SAMPLED_PAIRS: usize = 100_000;
/// Budget (in `|H| · |T|²` pairs) for the exhaustive automorphism axiom.
const AUTOMORPHISM_EXHAUSTIVE: u128 = 100_000_000;

/// Errors raised by action validation and product construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("action table has {rows} rows, expected one per actor ({expected})")]
    RowCount { rows: usize, expected: usize },
    #[error("action row for actor {actor} has {len} entries, expected {expected}")]
    RowLength { actor: usize, len: usize, expected: usize },
    #[error("action entry ({actor}, {t}) = {value} is outside 0..{size}")]
    EntryOutOfRange { actor: usize, t: usize, value: usize, size: usize },
    #[error("identity axiom fails: identity actor moves {t} to {image}")]
    IdentityAxiomFails { t: usize, image: usize },
    #[error("composition axiom fails at actors ({a}, {b}) on {t}")]
    CompositionAxiomFails { a: usize, b: usize, t: usize },
    #[error("actor {actor} does not act bijectively")]
    NotBijective { actor: usize },
    #[error("actor {actor} is not multiplicative at ({t}, {u})")]
    NotAutomorphism { actor: usize, t: usize, u: usize },
    #[error("structure of size {size} exceeds the cap {cap}")]
    SizeOverflow { size: u128, cap: u128 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rees(#[from] ReesError),
}

/// Guards `base^slots ≤ cap` without overflowing, returning the size.
fn checked_power_size(base: usize, slots: usize, cap: u128) -> Result<usize, ActionError> {
    match (base as u128).checked_pow(slots as u32) {
        Some(size) if size <= cap => Ok(size as usize),
        Some(size) => Err(ActionError::SizeOverflow { size, cap }),
        None => Err(ActionError::SizeOverflow { size: u128::MAX, cap }),
    }
}

/// Big-endian positional codec for functions `slots → 0..base`.
#[derive(Clone, Debug)]
pub(crate) struct DigitCodec {
    base: usize,
    slots: usize,
    weights: Vec<usize>,
}

impl DigitCodec {
    pub(crate) fn new(base: usize, slots: usize) -> Self {
        let mut weights = vec![1usize; slots];
        for slot in (0..slots.saturating_sub(1)).rev() {
            weights[slot] = weights[slot + 1] * base;
        }
        Self { base, slots, weights }
    }

    pub(crate) fn size(&self) -> u128 {
        (self.base as u128).pow(self.slots as u32)
    }

    pub(crate) fn encode(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.slots);
        digits.iter().fold(0usize, |acc, &d| acc * self.base + d)
    }

    #[inline]
    pub(crate) fn digit(&self, id: usize, slot: usize) -> usize {
        (id / self.weights[slot]) % self.base
    }

    #[cfg(test)]
    pub(crate) fn decode(&self, id: usize) -> Vec<usize> {
        (0..self.slots).map(|slot| self.digit(id, slot)).collect()
    }

    /// Translation `(ᴬf)(B) = f(B·A)` on encoded functions `H → 0..base`.
    pub(crate) fn translate(&self, h: &FiniteGroup, a: usize, id: usize) -> usize {
        let mut out = 0usize;
        for b in 0..self.slots {
            out = out * self.base + self.digit(id, h.op(b, a));
        }
        out
    }
}

/// A validated left action of a finite group on a finite semigroup by
/// automorphisms.
#[derive(Clone)]
pub struct Action {
    actor: FiniteGroup,
    target: FiniteSemigroup,
    act: Arc<Vec<Vec<u32>>>,
}

impl Action {
    /// Validates and wraps an action table (`act[A][t] = ᴬt`).
    ///
    /// Identity, composition and bijectivity are checked exhaustively. The
    /// automorphism (multiplicativity) axiom is exhaustive while
    /// `|H|·|T|² ≤ 10^8`, otherwise a seeded sample of `10^5` pairs per
    /// actor is used.
    pub fn new(
        actor: &FiniteGroup,
        target: &FiniteSemigroup,
        act: Vec<Vec<u32>>,
    ) -> Result<Self, ActionError> {
        let h = actor.order();
        let n = target.size();
        if act.len() != h {
            return Err(ActionError::RowCount { rows: act.len(), expected: h });
        }
        for (a, row) in act.iter().enumerate() {
            if row.len() != n {
                return Err(ActionError::RowLength { actor: a, len: row.len(), expected: n });
            }
            for (t, &value) in row.iter().enumerate() {
                if value as usize >= n {
                    return Err(ActionError::EntryOutOfRange {
                        actor: a,
                        t,
                        value: value as usize,
                        size: n,
                    });
                }
            }
        }
        // Identity axiom.
        for t in 0..n {
            let image = act[actor.identity()][t] as usize;
            if image != t {
                return Err(ActionError::IdentityAxiomFails { t, image });
            }
        }
        // Bijectivity per actor, before the axioms that compose rows.
        for (a, row) in act.iter().enumerate() {
            let mut seen = vec![false; n];
            for &v in row.iter() {
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(ActionError::NotBijective { actor: a });
                }
            }
        }
        // Composition axiom: act[B·A] = act[B] ∘ act[A].
        for a in 0..h {
            for b in 0..h {
                let ba = actor.op(b, a);
                for t in 0..n {
                    if act[ba][t] != act[b][act[a][t] as usize] {
                        return Err(ActionError::CompositionAxiomFails { a, b, t });
                    }
                }
            }
        }
        // Automorphism axiom.
        let total_pairs = (h as u128) * (n as u128) * (n as u128);
        if total_pairs <= AUTOMORPHISM_EXHAUSTIVE {
            let witness = (0..h)
                .flat_map(|a| {
                    let act = &act;
                    (0..n * n).into_par_iter().find_first(move |&ix| {
                        let (t, u) = (ix / n, ix % n);
                        act[a][target.mul(t, u)] as usize
                            != target.mul(act[a][t] as usize, act[a][u] as usize)
                    })
                    .map(|ix| (a, ix / n, ix % n))
                })
                .next();
            if let Some((actor, t, u)) = witness {
                return Err(ActionError::NotAutomorphism { actor, t, u });
            }
        } else {
            for a in 0..h {
                for (t, u) in IndexSampler::new(0xac7 + a as u64, n).pairs(SAMPLED_PAIRS) {
                    if act[a][target.mul(t, u)] as usize
                        != target.mul(act[a][t] as usize, act[a][u] as usize)
                    {
                        return Err(ActionError::NotAutomorphism { actor: a, t, u });
                    }
                }
            }
        }
        Ok(Self { actor: actor.clone(), target: target.clone(), act: Arc::new(act) })
    }

    /// Materializes rows from a closure and validates.
    pub fn from_fn(
        actor: &FiniteGroup,
        target: &FiniteSemigroup,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ActionError> {
        let rows: Vec<Vec<u32>> = (0..actor.order())
            .map(|a| (0..target.size()).map(|t| f(a, t) as u32).collect())
            .collect();
        Self::new(actor, target, rows)
    }

    pub fn actor(&self) -> &FiniteGroup {
        &self.actor
    }

    pub fn target(&self) -> &FiniteSemigroup {
        &self.target
    }

    /// `ᴬt`.
    #[inline]
    pub fn apply(&self, a: usize, t: usize) -> usize {
        self.act[a][t] as usize
    }
}

impl std::fmt::Debug for Action {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Action")
            .field("actor_order", &self.actor.order())
            .field("target", &self.target.label())
            .finish()
    }
}

/// The semidirect product `T ⋊ H` of a validated action.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    action: Action,
    semigroup: FiniteSemigroup,
}

impl SemidirectProduct {
    pub fn new(action: Action, label: &str) -> Result<Self, ActionError> {
        let t_size = action.target().size();
        let h_size = action.actor().order();
        let size = (t_size as u128) * (h_size as u128);
        if size > MAX_SEMIDIRECT_SIZE {
            return Err(ActionError::SizeOverflow { size, cap: MAX_SEMIDIRECT_SIZE });
        }
        let size = size as usize;
        let inner = action.clone();
        let mul = move |x: usize, y: usize| -> usize {
            let (t, a) = (x % t_size, x / t_size);
            let (u, b) = (y % t_size, y / t_size);
            let ab = inner.actor().op(a, b);
            ab * t_size + inner.target().mul(t, inner.apply(a, u))
        };
        // The action axioms make this product associative; materialize small
        // instances for speed.
        let semigroup = if size <= 4096 {
            let mut table = vec![0u32; size * size];
            for x in 0..size {
                for y in 0..size {
                    table[x * size + y] = mul(x, y) as u32;
                }
            }
            FiniteSemigroup::from_shared_table(label, size, table.into())
        } else {
            FiniteSemigroup::from_view_unchecked(label, size, mul)
        };
        Ok(Self { action, semigroup })
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn size(&self) -> usize {
        self.semigroup.size()
    }

    /// Dense id of `(t, A)`: `A·|T| + t`.
    pub fn encode(&self, t: usize, a: usize) -> usize {
        a * self.action.target().size() + t
    }

    /// Inverse of [`encode`](Self::encode): `(t, A)`.
    pub fn decode(&self, id: usize) -> (usize, usize) {
        let t_size = self.action.target().size();
        (id % t_size, id / t_size)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.semigroup.mul(x, y)
    }

    /// Materializes the product as a [`FiniteGroup`] (fails with a group
    /// validation error when `T` is not a group under the facade product).
    pub fn as_group(&self) -> Result<FiniteGroup, ActionError> {
        Ok(FiniteGroup::from_fn(self.size(), |x, y| self.mul(x, y))?)
    }
}

/// Outcome of a (possibly sampled) isomorphism verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub bijective: bool,
    pub morphism_ok: bool,
    pub pairs_checked: usize,
    pub exhaustive: bool,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.morphism_ok
    }
}

/// Verifies that `map` is a bijective morphism `s → t` for same-size
/// semigroups: bijectivity exhaustively, multiplicativity exhaustively while
/// `|s|² ≤ 10^7` and on a seeded sample of `10^5` pairs otherwise.
pub fn verify_isomorphism(
    map: &[usize],
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    seed: u64,
) -> IsoReport {
    assert_eq!(map.len(), s.size());
    assert_eq!(s.size(), t.size(), "isomorphism candidates must match in size");
    let mut seen = vec![false; t.size()];
    let bijective = map.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
    let n = s.size();
    if (n as u128) * (n as u128) <= EXHAUSTIVE_PAIRS {
        let bad = (0..n * n).into_par_iter().find_first(|&ix| {
            let (a, b) = (ix / n, ix % n);
            map[s.mul(a, b)] != t.mul(map[a], map[b])
        });
        IsoReport { bijective, morphism_ok: bad.is_none(), pairs_checked: n * n, exhaustive: true }
    } else {
        let pairs = IndexSampler::new(seed, n).pairs(SAMPLED_PAIRS);
        let morphism_ok = pairs
            .par_iter()
            .all(|&(a, b)| map[s.mul(a, b)] == t.mul(map[a], map[b]));
        IsoReport { bijective, morphism_ok, pairs_checked: pairs.len(), exhaustive: false }
    }
}

/// The wreath product `T wr H = T^H ⋊ H` under translation.
#[derive(Clone, Debug)]
pub struct WreathProduct {
    pub base: FiniteSemigroup,
    pub h: FiniteGroup,
    /// `T^H` as a coordinate-wise product view.
    pub power: FiniteSemigroup,
    pub product: SemidirectProduct,
    pub(crate) codec: DigitCodec,
}

impl WreathProduct {
    /// Encodes a function `H → T` given as one digit per slot.
    pub fn encode_function(&self, digits: &[usize]) -> usize {
        self.codec.encode(digits)
    }

    /// Value of the encoded function at `a ∈ H`.
    pub fn function_at(&self, id: usize, a: usize) -> usize {
        self.codec.digit(id, a)
    }

    /// `ᴬf` on encoded functions.
    pub fn translate(&self, a: usize, f: usize) -> usize {
        self.codec.translate(&self.h, a, f)
    }
}

/// Builds `T wr H`. The power is a lazy coordinate-wise view; the
/// translation action is materialized and validated.
pub fn wreath_product(
    base: &FiniteSemigroup,
    h: &FiniteGroup,
    label: &str,
) -> Result<WreathProduct, ActionError> {
    let power_size = checked_power_size(base.size(), h.order(), MAX_POWER_SIZE)?;
    let codec = DigitCodec::new(base.size(), h.order());
    let slots = h.order();
    let power = {
        let codec = codec.clone();
        let base = base.clone();
        FiniteSemigroup::from_view_unchecked(&format!("{label}^H"), power_size, move |x, y| {
            let mut out = 0usize;
            for slot in 0..slots {
                out = out * base.size() + base.mul(codec.digit(x, slot), codec.digit(y, slot));
            }
            out
        })
    };
    let rows: Vec<Vec<u32>> = (0..h.order())
        .map(|a| (0..power_size).map(|f| codec.translate(h, a, f) as u32).collect())
        .collect();
    let action = Action::new(h, &power, rows)?;
    let product = SemidirectProduct::new(action, label)?;
    Ok(WreathProduct { base: base.clone(), h: h.clone(), power, product, codec })
}

/// Result of the sandwich-translation compatibility scan
/// `ᴮ(p^H_{ξη}) = p^H_{ᴮξ, ᴮη}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TranslationCompatibility {
    pub combos_checked: usize,
    pub witness: Option<(usize, usize, usize)>,
}

impl TranslationCompatibility {
    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }
}

/// The Rees-matrix description `M[G^H; I^H, Λ^H; P^H]` of `T^H` for a Rees
/// matrix semigroup `T = M[G; I, Λ; P]`, together with the translation
/// action of `H` on it.
#[derive(Clone, Debug)]
pub struct WreathCopy {
    pub base: ReesMatrixSemigroup,
    pub h: FiniteGroup,
    /// `G^H`, encoded as in [`FiniteGroup::direct_power`].
    pub power_group: FiniteGroup,
    /// `M[G^H; I^H, Λ^H; P^H]`.
    pub copy: ReesMatrixSemigroup,
    pub(crate) g_codec: DigitCodec,
    pub(crate) i_codec: DigitCodec,
    pub(crate) l_codec: DigitCodec,
    pub(crate) t_codec: DigitCodec,
}

impl WreathCopy {
    pub fn new(base: &ReesMatrixSemigroup, h: &FiniteGroup) -> Result<Self, ActionError> {
        let slots = h.order();
        checked_power_size(base.element_count(), slots, MAX_POWER_SIZE)?;
        let g_codec = DigitCodec::new(base.group().order(), slots);
        let i_codec = DigitCodec::new(base.i_count(), slots);
        let l_codec = DigitCodec::new(base.lambda_count(), slots);
        let t_codec = DigitCodec::new(base.element_count(), slots);
        let power_group = FiniteGroup::direct_power(base.group(), slots)?;
        let i_pow = i_codec.size() as usize;
        let l_pow = l_codec.size() as usize;
        // p^H_{ξη}(A) = p_{ξ(A), η(A)}, encoded into G^H.
        let mut rows = Vec::with_capacity(l_pow);
        for xi in 0..l_pow {
            let mut row = Vec::with_capacity(i_pow);
            for eta in 0..i_pow {
                let digits: Vec<usize> = (0..slots)
                    .map(|a| base.sandwich_entry(l_codec.digit(xi, a), i_codec.digit(eta, a)))
                    .collect();
                row.push(g_codec.encode(&digits));
            }
            rows.push(row);
        }
        let copy = ReesMatrixSemigroup::new(&power_group, i_pow, l_pow, &rows)?;
        Ok(Self {
            base: base.clone(),
            h: h.clone(),
            power_group,
            copy,
            g_codec,
            i_codec,
            l_codec,
            t_codec,
        })
    }

    /// The bijection `T^H → M[G^H; I^H, Λ^H; P^H]`: split a function into
    /// its three coordinate functions and encode each.
    pub fn power_to_copy(&self, power_id: usize) -> usize {
        let slots = self.h.order();
        let mut eta = 0usize;
        let mut f = 0usize;
        let mut xi = 0usize;
        for a in 0..slots {
            let e = self.base.decode(self.t_codec.digit(power_id, a));
            eta = eta * self.base.i_count() + e.i;
            f = f * self.base.group().order() + e.g;
            xi = xi * self.base.lambda_count() + e.lambda;
        }
        self.copy.encode(RmsElement { i: eta, g: f, lambda: xi })
    }

    /// Value `ξ(a)` of an encoded `Λ^H` index.
    pub fn xi_at(&self, xi: usize, a: usize) -> usize {
        self.l_codec.digit(xi, a)
    }

    /// Value `f(a)` of an encoded `G^H` element, as an index into `G`.
    pub fn power_value(&self, f: usize, a: usize) -> usize {
        self.g_codec.digit(f, a)
    }

    /// `I^H` id of the constant function `a ↦ i`.
    pub fn constant_eta(&self, i: usize) -> usize {
        self.i_codec.encode(&vec![i; self.h.order()])
    }

    /// `Λ^H` id of the constant function `a ↦ λ`.
    pub fn constant_xi(&self, lambda: usize) -> usize {
        self.l_codec.encode(&vec![lambda; self.h.order()])
    }

    /// Value `η(a)` of an encoded `I^H` index.
    pub fn eta_at(&self, eta: usize, a: usize) -> usize {
        self.i_codec.digit(eta, a)
    }

    /// Translation `ᴬf` on `G^H` ids.
    pub fn translate_power_group(&self, a: usize, f: usize) -> usize {
        self.g_codec.translate(&self.h, a, f)
    }

    /// Translation `ᴬη` on `I^H` ids.
    pub fn translate_eta(&self, a: usize, eta: usize) -> usize {
        self.i_codec.translate(&self.h, a, eta)
    }

    /// Translation `ᴬξ` on `Λ^H` ids.
    pub fn translate_xi(&self, a: usize, xi: usize) -> usize {
        self.l_codec.translate(&self.h, a, xi)
    }

    /// Checks `ᴮ(p^H_{ξη}) = p^H_{ᴮξ, ᴮη}` over every
    /// `(B, ξ, η) ∈ H × Λ^H × I^H`.
    pub fn translation_compatibility(&self) -> TranslationCompatibility {
        let l_pow = self.copy.lambda_count();
        let i_pow = self.copy.i_count();
        let mut combos = 0usize;
        for b in 0..self.h.order() {
            for xi in 0..l_pow {
                for eta in 0..i_pow {
                    combos += 1;
                    let lhs = self.translate_power_group(b, self.copy.sandwich_entry(xi, eta));
                    let rhs = self
                        .copy
                        .sandwich_entry(self.translate_xi(b, xi), self.translate_eta(b, eta));
                    if lhs != rhs {
                        return TranslationCompatibility {
                            combos_checked: combos,
                            witness: Some((b, xi, eta)),
                        };
                    }
                }
            }
        }
        TranslationCompatibility { combos_checked: combos, witness: None }
    }

    /// The coordinate-wise power `T^H` this copy describes.
    pub fn power_semigroup(&self, label: &str) -> FiniteSemigroup {
        let base = self.base.clone();
        let codec = self.t_codec.clone();
        let slots = self.h.order();
        let n = base.element_count();
        FiniteSemigroup::from_view_unchecked(label, codec.size() as usize, move |x, y| {
            let mut out = 0usize;
            for a in 0..slots {
                out = out * n + base.mul_ids(codec.digit(x, a), codec.digit(y, a));
            }
            out
        })
    }

    /// Verifies that [`power_to_copy`](Self::power_to_copy) is an
    /// isomorphism `T^H → M[G^H; I^H, Λ^H; P^H]`.
    pub fn verify_copy_isomorphism(&self) -> IsoReport {
        let power = self.power_semigroup("power");
        let copy = self.copy.as_semigroup("copy");
        let map: Vec<usize> = (0..power.size()).map(|f| self.power_to_copy(f)).collect();
        verify_isomorphism(&map, &power, &copy, 0x150_c0)
    }

    /// The translation action of `H` on the copy,
    /// `ᴬ(η, f, ξ) = (ᴬη, ᴬf, ᴬξ)`, validated.
    pub fn copy_action(&self) -> Result<Action, ActionError> {
        let target = self.copy.as_semigroup("copy");
        let rows: Vec<Vec<u32>> = (0..self.h.order())
            .map(|a| {
                (0..self.copy.element_count())
                    .map(|id| {
                        let e = self.copy.decode(id);
                        self.copy.encode(RmsElement {
                            i: self.translate_eta(a, e.i),
                            g: self.translate_power_group(a, e.g),
                            lambda: self.translate_xi(a, e.lambda),
                        }) as u32
                    })
                    .collect()
            })
            .collect();
        Action::new(&self.h, &target, rows)
    }

    /// The semidirect product (copy of `T^H`) `⋊ H`.
    pub fn copy_semidirect(&self, label: &str) -> Result<SemidirectProduct, ActionError> {
        SemidirectProduct::new(self.copy_action()?, label)
    }

    /// Exhaustively checks that the bijection intertwines the two actions:
    /// `power_to_copy(ᴬf) = ᴬ(power_to_copy(f))` for all `A ∈ H`, `f ∈ T^H`.
    pub fn verify_action_correspondence(&self, w: &WreathProduct, copy_action: &Action) -> bool {
        let n = self.t_codec.size() as usize;
        (0..self.h.order()).all(|a| {
            (0..n).into_par_iter().all(|f| {
                self.power_to_copy(w.translate(a, f)) == copy_action.apply(a, self.power_to_copy(f))
            })
        })
    }

    /// Verifies `(f, A) ↦ (power_to_copy(f), A)` as an isomorphism
    /// `T wr H → (copy) ⋊ H`.
    pub fn verify_wreath_isomorphism(
        &self,
        w: &WreathProduct,
        copy_sd: &SemidirectProduct,
    ) -> IsoReport {
        let map: Vec<usize> = (0..w.product.size())
            .map(|id| {
                let (f, a) = w.product.decode(id);
                copy_sd.encode(self.power_to_copy(f), a)
            })
            .collect();
        verify_isomorphism(&map, w.product.semigroup(), copy_sd.semigroup(), 0x77ea7)
    }
}

/// Outcome of verifying the projection `T ⋊ H → H` and its kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectionReport {
    pub kernel_size: usize,
    pub morphism_ok: bool,
    pub kernel_iso_ok: bool,
    pub pairs_checked: usize,
    pub exhaustive: bool,
}

impl ProjectionReport {
    pub fn ok(&self) -> bool {
        self.morphism_ok && self.kernel_iso_ok
    }
}

/// Verifies that `(t, A) ↦ A` is a morphism onto `H` whose kernel class of
/// the identity is a copy of `T` (ids `0..|T|`, product matching `T`).
pub fn projection_congruence(sd: &SemidirectProduct) -> ProjectionReport {
    let t_size = sd.action().target().size();
    let h = sd.action().actor().clone();
    let n = sd.size();
    // Morphism: second coordinates multiply in H.
    let (morphism_ok, pairs_checked, exhaustive) = if (n as u128) * (n as u128) <= EXHAUSTIVE_PAIRS
    {
        let ok = (0..n * n).into_par_iter().all(|ix| {
            let (x, y) = (ix / n, ix % n);
            sd.decode(sd.mul(x, y)).1 == h.op(sd.decode(x).1, sd.decode(y).1)
        });
        (ok, n * n, true)
    } else {
        let pairs = IndexSampler::new(0x17c0, n).pairs(SAMPLED_PAIRS);
        let ok = pairs.par_iter().all(|&(x, y)| {
            sd.decode(sd.mul(x, y)).1 == h.op(sd.decode(x).1, sd.decode(y).1)
        });
        (ok, pairs.len(), false)
    };
    // Kernel of the identity class: ids 0..|T| with the product of T.
    let target = sd.action().target().clone();
    let kernel_iso_ok = if (t_size as u128) * (t_size as u128) <= EXHAUSTIVE_PAIRS {
        (0..t_size * t_size).into_par_iter().all(|ix| {
            let (t, u) = (ix / t_size, ix % t_size);
            sd.mul(sd.encode(t, 0), sd.encode(u, 0)) == sd.encode(target.mul(t, u), 0)
        })
    } else {
        IndexSampler::new(0x17c1, t_size)
            .pairs(SAMPLED_PAIRS)
            .par_iter()
            .all(|&(t, u)| sd.mul(sd.encode(t, 0), sd.encode(u, 0)) == sd.encode(target.mul(t, u), 0))
    };
    ProjectionReport { kernel_size: t_size, morphism_ok, kernel_iso_ok, pairs_checked, exhaustive }
}

/// Green's `R` on `T ⋊ H` (for completely simple `T`): `(t, A) R (u, B)` iff
/// `t R u` in `T`.
pub fn semidirect_same_r(
    sd: &SemidirectProduct,
    t_green: &GreenClasses,
    x: usize,
    y: usize,
) -> bool {
    let (t, _) = sd.decode(x);
    let (u, _) = sd.decode(y);
    t_green.r_class_of[t] == t_green.r_class_of[u]
}

/// Green's `L` on `T ⋊ H` (for completely simple `T`): `(t, A) L (u, B)` iff
/// `ᴬ⁻¹t L ᴮ⁻¹u` in `T`.
pub fn semidirect_same_l(
    sd: &SemidirectProduct,
    t_green: &GreenClasses,
    x: usize,
    y: usize,
) -> bool {
    let (t, a) = sd.decode(x);
    let (u, b) = sd.decode(y);
    let actor = sd.action().actor();
    let ta = sd.action().apply(actor.inv(a), t);
    let ub = sd.action().apply(actor.inv(b), u);
    t_green.l_class_of[ta] == t_green.l_class_of[ub]
}
