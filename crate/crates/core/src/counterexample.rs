//! A mechanized non-embeddability certificate for one 84-element extension.
//!
//! The central embedding in [`crate::embed`] shows that every *central*
//! normalized Rees matrix semigroup embeds, compatibly with its group
//! congruence, into the wreath-style product `(copy of U^H) ⋊ H` built from
//! its kernel `U` and quotient `H`. This module drives the smallest
//! committed non-central instance — `S = M[G; 2, 2; P]` over the non-abelian
//! group `G` of order 21, with `N ≅ Z₇` and a single non-identity sandwich
//! entry `p ∈ N` — through two independent exhaustive sweeps:
//!
//! * [`enumerate_injective_iotas`] lists every injective morphism
//!   `ι: G → N^H ⋊ H` by brute force over the presentation
//!   `⟨x, y | x⁷ = y³ = 1, yxy⁻¹ = x²⟩` and shows that the function part of
//!   `ι(p)` is always one of twelve digit patterns `(t, 2t, 4t)` or
//!   `(t, 4t, 2t)` with `t ≠ 0` — injective and identity-free.
//! * [`sandwich_scan`] walks all 4096 coordinate frames `(ξ₁, ξ₂, η₁, η₂)`
//!   of the copy of `U^H` and shows the telescoping sandwich product every
//!   congruence-compatible embedding would hand to `ι(p)` only ever takes
//!   digits in `{p⁻¹, 1, p}` — by pigeonhole never injective and
//!   identity-free.
//!
//! Any compatible embedding of `S` would need a function in both sets, so
//! none exists. Both sweeps are sequential or order-preserving and their
//! counts are frozen into a [`NonembeddabilityCertificate`].
//!
//! [`structured_constraint_check`] complements the sweeps: it tests a
//! candidate data triple `(η, ξ, f)` against the five structural equations
//! such an embedding must satisfy, reporting the first failing equation or
//! verifying the assembled map pairwise.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::action::{Action, ActionError, SemidirectProduct, WreathCopy};
use crate::embed::{central_embedding, kk_embedding, EmbedError, KkEmbedding};
use crate::group::{enumerate_group_morphisms, FiniteGroup, GroupError};
use crate::rees::{
    congruence_from_normal, GroupCongruence, ReesError, ReesMatrixSemigroup, RmsElement,
};
use crate::semigroup::is_semigroup_morphism;

#[derive(Debug, Error)]
pub enum CounterError {
    #[error("relation {relation} fails in the source group for x={x}, y={y}")]
    PresentationMismatch { relation: usize, x: usize, y: usize },
    #[error("contradiction not established: {reason}")]
    ContradictionNotEstablished { reason: String },
    #[error("not applicable: {reason}")]
    NotApplicable { reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rees(#[from] ReesError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// Multipliers `2^j mod 7` for the order-3 automorphism action on `Z₇`.
const UNIT_POWERS: [usize; 3] = [1, 2, 4];

/// Relations of `⟨x, y | x⁷ = y³ = 1, yxy⁻¹x⁻² = 1⟩` in the letter encoding
/// of [`enumerate_group_morphisms`].
fn presentation_relations() -> Vec<Vec<i32>> {
    vec![vec![1; 7], vec![2, 2, 2], vec![2, 1, -2, -1, -1]]
}

/// The committed instance: `S = M[G; 2, 2; P]` over the non-abelian group
/// of order 21, together with its order-7 normal subgroup and the two
/// generators used by the presentation-driven sweep.
#[derive(Clone, Debug)]
pub struct CounterInstance {
    pub group: FiniteGroup,
    pub rms: ReesMatrixSemigroup,
    /// Members of `N` (the unique subgroup of order 7).
    pub normal_members: Vec<usize>,
    /// Generator of `N`; also the lone non-identity sandwich entry.
    pub x: usize,
    /// An element of order 3 with `yxy⁻¹ = x²`.
    pub y: usize,
}

impl CounterInstance {
    /// The non-central instance with sandwich matrix `[[1, 1], [1, x]]`.
    pub fn standard() -> Self {
        Self::build([[0, 0], [0, 1]])
    }

    /// Control variant with every sandwich entry the identity. It is
    /// central, so the wreath embedding applies and the non-embeddability
    /// pipeline must step aside.
    pub fn with_identity_p22() -> Self {
        Self::build([[0, 0], [0, 0]])
    }

    fn build(sandwich: [[usize; 2]; 2]) -> Self {
        let z7 = FiniteGroup::cyclic(7).expect("Z7");
        let z3 = FiniteGroup::cyclic(3).expect("Z3");
        let action = Action::from_fn(&z3, &z7.as_semigroup("Z7"), |j, b| UNIT_POWERS[j] * b % 7)
            .expect("multiplication by a unit is an automorphism");
        let sd = SemidirectProduct::new(action, "Z7⋊Z3").expect("63 well under the size cap");
        let group = sd.as_group().expect("a semidirect product of groups is a group");
        assert_eq!(group.order(), 21);
        let x = sd.encode(1, 0);
        let y = sd.encode(0, 1);
        assert_eq!(group.element_order(x), 7);
        assert_eq!(group.element_order(y), 3);
        assert_eq!(group.op(group.op(y, x), group.inv(y)), group.op(x, x));
        let rows: Vec<Vec<usize>> = sandwich.iter().map(|r| r.to_vec()).collect();
        let rms = ReesMatrixSemigroup::new(&group, 2, 2, &rows).expect("entries lie in G");
        assert!(rms.is_normalized());
        let normal_members: Vec<usize> = (0..7).collect();
        CounterInstance { group, rms, normal_members, x, y }
    }

    /// The group congruence induced by `N`.
    pub fn congruence(&self) -> Result<GroupCongruence, CounterError> {
        Ok(congruence_from_normal(&self.rms, &self.normal_members)?)
    }

    /// The Kaloujnine–Krasner embedding for `(G, N)`.
    pub fn kk(&self) -> Result<KkEmbedding, CounterError> {
        Ok(kk_embedding(self.rms.group(), &self.normal_members)?)
    }
}

/// Shared artifacts for frame and constraint analysis: the congruence, the
/// Kaloujnine–Krasner data for `(G, N)`, the Rees-matrix copy of `U^H`, and
/// the product `(copy) ⋊ H` that hosts candidate embeddings.
#[derive(Clone, Debug)]
pub struct CopyContext {
    pub congruence: GroupCongruence,
    pub kk: KkEmbedding,
    pub copy: WreathCopy,
    pub copy_sd: SemidirectProduct,
}

impl CopyContext {
    pub fn new(
        rms: &ReesMatrixSemigroup,
        normal_members: &[usize],
    ) -> Result<Self, CounterError> {
        let congruence = congruence_from_normal(rms, normal_members)?;
        let kk = kk_embedding(rms.group(), normal_members)?;
        let copy = WreathCopy::new(&congruence.kernel_rms, &kk.h)?;
        // Both `N^H`s are built from the same abstract `N`, so their ids —
        // and hence cocycle digits and copy digits — coincide.
        debug_assert!(copy.power_group == kk.power_group);
        let copy_sd = copy.copy_semidirect("copy(U^H)⋊H")?;
        Ok(CopyContext { congruence, kk, copy, copy_sd })
    }

    /// The telescoping frame product
    /// `p^H_{ξ₁η₁} · (p^H_{ξ₂η₁})⁻¹ · p^H_{ξ₂η₂} · (p^H_{ξ₁η₂})⁻¹` in `N^H`.
    pub fn frame_product(&self, xi1: usize, xi2: usize, eta1: usize, eta2: usize) -> usize {
        let pw = &self.copy.power_group;
        let c = &self.copy.copy;
        pw.op(
            c.sandwich_entry(xi1, eta1),
            pw.op(
                pw.inv(c.sandwich_entry(xi2, eta1)),
                pw.op(c.sandwich_entry(xi2, eta2), pw.inv(c.sandwich_entry(xi1, eta2))),
            ),
        )
    }
}

/// Order statistics of `N^H ⋊ H` under κ: elements of order 3 counted both
/// directly and by the closed form "non-kernel quotient part, digits folding
/// to the identity". The closed form is specific to a 3-element quotient
/// acting on an abelian kernel of exponent coprime to 3; `mismatches`
/// certifies that it agrees with the direct count element by element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub total: usize,
    pub order3_direct: usize,
    pub order3_closed_form: usize,
    pub mismatches: usize,
}

pub fn order3_census(kk: &KkEmbedding) -> CensusReport {
    let total = kk.product_group.order();
    let slots = kk.h.order();
    let n = &kk.n_group;
    let mut order3_direct = 0usize;
    let mut order3_closed_form = 0usize;
    let mut mismatches = 0usize;
    for id in 0..total {
        let direct = kk.product_group.element_order(id) == 3;
        let (f, a) = kk.product.decode(id);
        let fold = (0..slots).fold(n.identity(), |acc, s| n.op(acc, kk.function_digit(f, s)));
        let closed = a != kk.h.identity() && fold == n.identity();
        if direct {
            order3_direct += 1;
        }
        if closed {
            order3_closed_form += 1;
        }
        if direct != closed {
            mismatches += 1;
        }
    }
    CensusReport { total, order3_direct, order3_closed_form, mismatches }
}

/// One injective morphism `ι: G → N^H ⋊ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iota {
    /// Images of all source elements, as product ids.
    pub image: Vec<usize>,
    /// The `N^H` part of `ι(x)` (its quotient part is trivial since `x ∈ N`).
    pub h: usize,
    /// Digits of `h`, as ids in the abstract `N`.
    pub digits: Vec<usize>,
    /// `true` when `ι(y)` has quotient part 1 — then `digits = (t, 2t, 4t)`;
    /// otherwise quotient part 2 and `digits = (t, 4t, 2t)`.
    pub doubling_case: bool,
}

/// All injective morphisms `G → N^H ⋊ H`, with the forced structure of each
/// verified along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaReport {
    pub iotas: Vec<Iota>,
    pub doubling_count: usize,
    pub halving_count: usize,
    /// Sorted distinct `N^H` parts of `ι(x)` over all iotas.
    pub distinct_h: Vec<usize>,
}

impl IotaReport {
    pub fn count(&self) -> usize {
        self.iotas.len()
    }
}

/// Enumerates every injective morphism `ι: G → N^H ⋊ H` from the committed
/// presentation and verifies, for each one, the forced shape of the function
/// part `h` of `ι(x)`:
///
/// * `ι(x)` has trivial quotient part and `ι(y)` a non-trivial one;
/// * conjugation forces the translate of `h` by that part to equal `h²`,
///   pinning the digits to `(t, 2t, 4t)` or `(t, 4t, 2t)`;
/// * `h` is injective and identity-free (`t ≠ 0`).
///
/// Any violation means the sweep cannot support the non-embeddability
/// argument and surfaces as [`CounterError::ContradictionNotEstablished`].
pub fn enumerate_injective_iotas(inst: &CounterInstance) -> Result<IotaReport, CounterError> {
    let g = &inst.group;
    let relations = presentation_relations();
    // Oracle first: the committed generators satisfy the presentation in G
    // itself, so the enumeration below ranges over the right morphism set.
    for (relation, rel) in relations.iter().enumerate() {
        if g.eval_word(&[inst.x, inst.y], rel) != g.identity() {
            return Err(CounterError::PresentationMismatch { relation, x: inst.x, y: inst.y });
        }
    }
    let kk = kk_embedding(g, &inst.normal_members)?;
    let morphisms =
        enumerate_group_morphisms(g, &[inst.x, inst.y], &relations, &kk.product_group, true)?;
    let n = &kk.n_group;
    let slots = kk.h.order();
    let mut iotas = Vec::with_capacity(morphisms.len());
    let mut doubling_count = 0usize;
    let mut halving_count = 0usize;
    let mut distinct: BTreeSet<usize> = BTreeSet::new();
    for m in &morphisms {
        let (h, a_x) = kk.product.decode(m.image[inst.x]);
        if a_x != kk.h.identity() {
            return Err(CounterError::ContradictionNotEstablished {
                reason: format!("image of x has non-trivial quotient part {a_x}"),
            });
        }
        let (_, b) = kk.product.decode(m.image[inst.y]);
        if b == kk.h.identity() {
            return Err(CounterError::ContradictionNotEstablished {
                reason: "image of y lies in the kernel coset".into(),
            });
        }
        // yxy⁻¹ = x² forces the translate of h by b to be h².
        if kk.translate_function(b, h) != kk.power_group.op(h, h) {
            return Err(CounterError::ContradictionNotEstablished {
                reason: format!("translate of h={h} by {b} is not h²"),
            });
        }
        let digits: Vec<usize> = (0..slots).map(|s| kk.function_digit(h, s)).collect();
        let doubling = b == 1;
        let (want1, want2) = if doubling {
            (n.pow(digits[0], 2), n.pow(digits[0], 4))
        } else {
            (n.pow(digits[0], 4), n.pow(digits[0], 2))
        };
        if digits[1] != want1 || digits[2] != want2 {
            return Err(CounterError::ContradictionNotEstablished {
                reason: format!("digits {digits:?} violate the forced doubling pattern"),
            });
        }
        let all_distinct =
            digits[0] != digits[1] && digits[0] != digits[2] && digits[1] != digits[2];
        let identity_free = digits.iter().all(|&d| d != n.identity());
        if !all_distinct || !identity_free {
            return Err(CounterError::ContradictionNotEstablished {
                reason: format!("digits {digits:?} are not injective and identity-free"),
            });
        }
        if doubling {
            doubling_count += 1;
        } else {
            halving_count += 1;
        }
        distinct.insert(h);
        iotas.push(Iota { image: m.image.clone(), h, digits, doubling_case: doubling });
    }
    if iotas.is_empty() {
        return Err(CounterError::ContradictionNotEstablished {
            reason: "no injective morphisms found; nothing forces the digit patterns".into(),
        });
    }
    Ok(IotaReport {
        iotas,
        doubling_count,
        halving_count,
        distinct_h: distinct.into_iter().collect(),
    })
}

/// Outcome of the exhaustive frame sweep over the copy of `U^H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    /// Frames `(ξ₁, ξ₂, η₁, η₂)` visited.
    pub frames: usize,
    /// Entry-value memberships checked (4 entries × |H| points per frame).
    pub value_checks: usize,
    /// Per-point identity-pattern checks (|H| per frame).
    pub pointwise_checks: usize,
    /// Frames whose product is injective and identity-free (must be 0).
    pub admissible_frames: usize,
    /// First admissible frame, if any (as `[ξ₁, ξ₂, η₁, η₂]`).
    pub first_admissible: Option<[usize; 4]>,
    /// Disagreements between the two independent product computations.
    pub route_mismatches: usize,
    /// Entry values outside `{1, p}` (property of normalized 2×2 frames).
    pub entry_value_violations: usize,
    /// Identity-count patterns outside the reachable set, paired-identity
    /// positions not sharing a coordinate, or a broken diagonal equivalence.
    pub identity_pattern_violations: usize,
    /// Product digits outside `{p⁻¹, 1, p}`.
    pub h_value_violations: usize,
    /// Sorted distinct frame products, as `N^H` ids.
    pub distinct_h: Vec<usize>,
}

impl ScanReport {
    pub fn clean(&self) -> bool {
        self.admissible_frames == 0
            && self.route_mismatches == 0
            && self.entry_value_violations == 0
            && self.identity_pattern_violations == 0
            && self.h_value_violations == 0
    }
}

/// Sweeps every coordinate frame of the copy of `U^H` and checks, for the
/// telescoping product `h` of each frame:
///
/// * every frame entry has digits in `{1, p}` (`p` the distinguished
///   sandwich entry);
/// * per point, the number of identity-valued entries is never exactly 3
///   wrong way — it is 0, 2, 3 or 4; when it is 2 the two identity entries
///   share a `ξ`- or `η`-index; when it is 0 all four entries equal `p` and
///   the product digit is the identity; and the diagonal entry pair is
///   `(p, p)` exactly when the antidiagonal pair is;
/// * the product digits lie in `{p⁻¹, 1, p}`;
/// * no frame product is injective and identity-free.
///
/// The product is computed twice — once by the indicator formula
/// `h(a) = p^{(x₁−x₂)(y₁−y₂)}` over the frame's indicator digits, once by
/// multiplying the four copy sandwich entries in `N^H` — and the two routes
/// are compared digit by digit.
///
/// Requires a normalized 2×2 instance with abelian kernel subgroup.
pub fn sandwich_scan(inst: &CounterInstance) -> Result<ScanReport, CounterError> {
    let ctx = CopyContext::new(&inst.rms, &inst.normal_members)?;
    sandwich_scan_with(&inst.rms, &ctx)
}

/// [`sandwich_scan`] against an already-built [`CopyContext`].
pub fn sandwich_scan_with(
    rms: &ReesMatrixSemigroup,
    ctx: &CopyContext,
) -> Result<ScanReport, CounterError> {
    if rms.i_count() != 2 || rms.lambda_count() != 2 || !rms.is_normalized() {
        return Err(CounterError::NotApplicable {
            reason: "the frame sweep is defined for normalized 2×2 instances".into(),
        });
    }
    let n = ctx.congruence.kernel_rms.group().clone();
    let abelian = (0..n.order()).all(|a| (0..n.order()).all(|b| n.op(a, b) == n.op(b, a)));
    if !abelian {
        return Err(CounterError::NotApplicable {
            reason: "the indicator formula needs an abelian kernel subgroup".into(),
        });
    }
    let copy = &ctx.copy;
    let slots = ctx.kk.h.order();
    let p = ctx.congruence.kernel_rms.sandwich_entry(1, 1);
    let allowed_h = {
        let mut v = vec![n.identity(), p, n.inv(p)];
        v.sort_unstable();
        v.dedup();
        v
    };
    let i_pow = copy.copy.i_count();
    let l_pow = copy.copy.lambda_count();

    let mut report = ScanReport {
        frames: 0,
        value_checks: 0,
        pointwise_checks: 0,
        admissible_frames: 0,
        first_admissible: None,
        route_mismatches: 0,
        entry_value_violations: 0,
        identity_pattern_violations: 0,
        h_value_violations: 0,
        distinct_h: Vec::new(),
    };
    let mut distinct: BTreeSet<usize> = BTreeSet::new();

    for xi1 in 0..l_pow {
        for xi2 in 0..l_pow {
            for eta1 in 0..i_pow {
                for eta2 in 0..i_pow {
                    report.frames += 1;
                    let h = ctx.frame_product(xi1, xi2, eta1, eta2);
                    distinct.insert(h);
                    // Entries indexed by (ξ-slot, η-slot) for the pairing
                    // logic below.
                    let entries = [
                        (copy.copy.sandwich_entry(xi1, eta1), 0usize, 0usize),
                        (copy.copy.sandwich_entry(xi2, eta1), 1, 0),
                        (copy.copy.sandwich_entry(xi2, eta2), 1, 1),
                        (copy.copy.sandwich_entry(xi1, eta2), 0, 1),
                    ];
                    let mut digits = Vec::with_capacity(slots);
                    for a in 0..slots {
                        // Independent route: indicator formula on the frame.
                        let x1 = (copy.xi_at(xi1, a) == 1) as i64;
                        let x2 = (copy.xi_at(xi2, a) == 1) as i64;
                        let y1 = (copy.eta_at(eta1, a) == 1) as i64;
                        let y2 = (copy.eta_at(eta2, a) == 1) as i64;
                        let expected = n.pow(p, (x1 - x2) * (y1 - y2));
                        let got = copy.power_value(h, a);
                        if got != expected {
                            report.route_mismatches += 1;
                        }
                        digits.push(got);

                        let mut id_positions: Vec<(usize, usize)> = Vec::with_capacity(4);
                        let mut p_count = 0usize;
                        for &(e, r, s) in &entries {
                            let v = copy.power_value(e, a);
                            report.value_checks += 1;
                            if v != n.identity() && v != p {
                                report.entry_value_violations += 1;
                            }
                            if v == n.identity() {
                                id_positions.push((r, s));
                            }
                            if v == p {
                                p_count += 1;
                            }
                        }
                        report.pointwise_checks += 1;
                        let pattern_ok = match id_positions.len() {
                            0 => p_count == 4 && got == n.identity(),
                            2 => {
                                id_positions[0].0 == id_positions[1].0
                                    || id_positions[0].1 == id_positions[1].1
                            }
                            3 | 4 => true,
                            _ => false,
                        };
                        // Diagonal pair is (p, p) iff the antidiagonal is.
                        let d11 = copy.power_value(entries[0].0, a) == p;
                        let d22 = copy.power_value(entries[2].0, a) == p;
                        let d21 = copy.power_value(entries[1].0, a) == p;
                        let d12 = copy.power_value(entries[3].0, a) == p;
                        let diag_ok = (d11 && d22) == (d21 && d12);
                        if !pattern_ok || !diag_ok {
                            report.identity_pattern_violations += 1;
                        }
                        if allowed_h.binary_search(&got).is_err() {
                            report.h_value_violations += 1;
                        }
                    }
                    let all_distinct = (0..slots)
                        .all(|a| (a + 1..slots).all(|b| digits[a] != digits[b]));
                    let identity_free = digits.iter().all(|&d| d != n.identity());
                    if all_distinct && identity_free {
                        report.admissible_frames += 1;
                        if report.first_admissible.is_none() {
                            report.first_admissible = Some([xi1, xi2, eta1, eta2]);
                        }
                    }
                }
            }
        }
    }
    report.distinct_h = distinct.into_iter().collect();
    Ok(report)
}

/// The frozen counts of both sweeps, rendered in a stable one-record format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonembeddabilityCertificate {
    pub iota_count: usize,
    pub frame_count: usize,
    pub admissible_from_frames: usize,
}

impl NonembeddabilityCertificate {
    pub fn render(&self) -> String {
        format!(
            "CERT nonembeddability\nIOTAS {}\nFRAMES {}\nADMISSIBLE_H_FROM_FRAMES {}\nVERDICT PASS\n",
            self.iota_count, self.frame_count, self.admissible_from_frames
        )
    }
}

/// Verdict of [`embedding_verdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingVerdict {
    /// The instance is central: the wreath embedding exists and was
    /// verified on every pair.
    EmbeddingExists { target_size: usize, pairs_checked: usize },
    /// The committed non-central instance: both sweeps completed and their
    /// requirements are jointly unsatisfiable.
    NotEmbeddable(NonembeddabilityCertificate),
}

/// Decides embeddability into the wreath-style product of the kernel by the
/// quotient. Central instances get the constructive answer; the committed
/// order-21 instance gets the certified negative one; anything else is
/// [`CounterError::NotApplicable`].
pub fn embedding_verdict(
    rms: &ReesMatrixSemigroup,
    normal_members: &[usize],
) -> Result<EmbeddingVerdict, CounterError> {
    if rms.is_central()? {
        let nu = central_embedding(rms, normal_members)?;
        let check = nu.verify(rms);
        if !(check.morphism && check.injective) {
            return Err(CounterError::ContradictionNotEstablished {
                reason: "central instance failed its own embedding verification".into(),
            });
        }
        return Ok(EmbeddingVerdict::EmbeddingExists {
            target_size: nu.wreath.product.size(),
            pairs_checked: rms.element_count() * rms.element_count(),
        });
    }
    let standard = CounterInstance::standard();
    if !matches_standard(rms, normal_members, &standard) {
        return Err(CounterError::NotApplicable {
            reason: "negative verdicts are only certified for the committed order-21 instance"
                .into(),
        });
    }
    let inst = CounterInstance {
        group: rms.group().clone(),
        rms: rms.clone(),
        normal_members: normal_members.to_vec(),
        x: standard.x,
        y: standard.y,
    };
    let iotas = enumerate_injective_iotas(&inst)?;
    let scan = sandwich_scan(&inst)?;
    if !scan.clean() {
        return Err(CounterError::ContradictionNotEstablished {
            reason: format!(
                "frame sweep reported violations: {} admissible, {} route mismatches, {} entry, {} pattern, {} value",
                scan.admissible_frames,
                scan.route_mismatches,
                scan.entry_value_violations,
                scan.identity_pattern_violations,
                scan.h_value_violations
            ),
        });
    }
    // The two requirement sets must be disjoint: every iota forces an
    // injective identity-free h, no frame produces one. Double-check the
    // raw value sets as well (both live in the same N^H encoding).
    if iotas
        .distinct_h
        .iter()
        .any(|h| scan.distinct_h.binary_search(h).is_ok())
    {
        return Err(CounterError::ContradictionNotEstablished {
            reason: "a forced function part is frame-producible after all".into(),
        });
    }
    Ok(EmbeddingVerdict::NotEmbeddable(NonembeddabilityCertificate {
        iota_count: iotas.count(),
        frame_count: scan.frames,
        admissible_from_frames: scan.admissible_frames,
    }))
}

/// Runs [`embedding_verdict`] on an instance expected to be non-embeddable.
pub fn nonembeddability_verdict(
    inst: &CounterInstance,
) -> Result<NonembeddabilityCertificate, CounterError> {
    match embedding_verdict(&inst.rms, &inst.normal_members)? {
        EmbeddingVerdict::NotEmbeddable(cert) => Ok(cert),
        EmbeddingVerdict::EmbeddingExists { .. } => Err(CounterError::NotApplicable {
            reason: "instance is central; an embedding exists".into(),
        }),
    }
}

fn matches_standard(
    rms: &ReesMatrixSemigroup,
    normal_members: &[usize],
    standard: &CounterInstance,
) -> bool {
    rms.group() == standard.rms.group()
        && rms.i_count() == standard.rms.i_count()
        && rms.lambda_count() == standard.rms.lambda_count()
        && (0..rms.lambda_count()).all(|l| {
            (0..rms.i_count()).all(|i| rms.sandwich_entry(l, i) == standard.rms.sandwich_entry(l, i))
        })
        && normal_members == standard.normal_members
}

/// Candidate data `(η, ξ, f)` for a congruence-compatible embedding
/// `(i, g, λ) ↦ ((η_i, f^{iλ}_g, ᵍᴺξ_λ), gN)` into `(copy of U^H) ⋊ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCandidate {
    /// `η_i ∈ I^H` per `i`.
    pub eta: Vec<usize>,
    /// `ξ_λ ∈ Λ^H` per `λ` (the identity-coset slice; the other slices are
    /// its translates).
    pub xi: Vec<usize>,
    /// `f[i][λ][g] ∈ N^H`.
    pub f: Vec<Vec<Vec<usize>>>,
}

impl EmbeddingCandidate {
    /// The candidate underlying the central wreath embedding: constant
    /// `η`/`ξ` and the κ cocycle, independent of `(i, λ)`.
    pub fn from_central(ctx: &CopyContext, rms: &ReesMatrixSemigroup) -> Self {
        let order = rms.group().order();
        let eta = (0..rms.i_count()).map(|i| ctx.copy.constant_eta(i)).collect();
        let xi = (0..rms.lambda_count()).map(|l| ctx.copy.constant_xi(l)).collect();
        let f = (0..rms.i_count())
            .map(|_| {
                (0..rms.lambda_count())
                    .map(|_| (0..order).map(|g| ctx.kk.f_component(g)).collect())
                    .collect()
            })
            .collect();
        EmbeddingCandidate { eta, xi, f }
    }
}

/// Outcome of [`structured_constraint_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintOutcome {
    /// Every equation holds; the assembled map was verified on all pairs.
    Pass { morphism: bool, injective: bool },
    /// The first violated equation (in checking order B, C, D, E, A) with
    /// its witness indices.
    Fail { equation: char, witness: Vec<usize> },
}

/// Tests candidate data against the five structural equations a
/// congruence-compatible embedding must satisfy, in the order B, C, D, E, A:
///
/// * (B) coset slices of `ξ` compose: `ᵍᴺ(ʰᴺξ_μ) = ⁽ᵍʰ⁾ᴺξ_μ`;
/// * (C) the cocycle product rule
///   `f^{iμ}_{g·p_{λj}·h} = f^{iλ}_g · ᵍᴺ(p^H_{ξ_λ η_j}) · ᵍᴺf^{jμ}_h`;
/// * (D) its specialization to `g = h = 1`;
/// * (E) the inverse normalization `f^{iλ}_{p_{λi}⁻¹} = (p^H_{ξ_λ η_i})⁻¹`;
/// * (A) the un-collapsed form of (C), with the sandwich entry taken at the
///   translated coordinates `(ᵍᴺξ_λ, ᵍᴺη_j)`.
///
/// On success the induced map is assembled and checked pairwise. Witnesses
/// are the first failing index tuple in lexicographic order: `[g, h, μ]`
/// for (B), `[i, λ, j, μ, g, h]` for (C) and (A), `[i, λ, j, μ]` for (D),
/// `[i, λ]` for (E).
pub fn structured_constraint_check(
    ctx: &CopyContext,
    rms: &ReesMatrixSemigroup,
    cand: &EmbeddingCandidate,
) -> Result<ConstraintOutcome, CounterError> {
    let g_grp = rms.group();
    let order = g_grp.order();
    let (ic, lc) = (rms.i_count(), rms.lambda_count());
    let i_pow = ctx.copy.copy.i_count();
    let l_pow = ctx.copy.copy.lambda_count();
    let n_pow = ctx.copy.power_group.order();
    let shape_ok = cand.eta.len() == ic
        && cand.xi.len() == lc
        && cand.f.len() == ic
        && cand
            .f
            .iter()
            .all(|per_i| per_i.len() == lc && per_i.iter().all(|per_l| per_l.len() == order))
        && cand.eta.iter().all(|&e| e < i_pow)
        && cand.xi.iter().all(|&v| v < l_pow)
        && cand.f.iter().flatten().flatten().all(|&v| v < n_pow);
    if !shape_ok {
        return Err(CounterError::NotApplicable {
            reason: "candidate dimensions do not match the instance".into(),
        });
    }

    let pw = ctx.copy.power_group.clone();
    let coset = |g: usize| ctx.kk.h_component(g);
    let xi_slice = |a: usize, l: usize| ctx.copy.translate_xi(a, cand.xi[l]);
    let phh = |xi: usize, eta: usize| ctx.copy.copy.sandwich_entry(xi, eta);
    let tr = |a: usize, f: usize| ctx.copy.translate_power_group(a, f);

    // (B)
    for g in 0..order {
        for h in 0..order {
            for mu in 0..lc {
                let lhs = ctx.copy.translate_xi(coset(g), xi_slice(coset(h), mu));
                let rhs = xi_slice(coset(g_grp.op(g, h)), mu);
                if lhs != rhs {
                    return Ok(ConstraintOutcome::Fail { equation: 'B', witness: vec![g, h, mu] });
                }
            }
        }
    }
    // (C)
    for i in 0..ic {
        for lam in 0..lc {
            for j in 0..ic {
                for mu in 0..lc {
                    let p = rms.sandwich_entry(lam, j);
                    for g in 0..order {
                        let a = coset(g);
                        let mid = tr(a, phh(cand.xi[lam], cand.eta[j]));
                        for h in 0..order {
                            let prod = g_grp.op(g_grp.op(g, p), h);
                            let lhs = cand.f[i][mu][prod];
                            let rhs =
                                pw.op(cand.f[i][lam][g], pw.op(mid, tr(a, cand.f[j][mu][h])));
                            if lhs != rhs {
                                return Ok(ConstraintOutcome::Fail {
                                    equation: 'C',
                                    witness: vec![i, lam, j, mu, g, h],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    // (D)
    let e = g_grp.identity();
    for i in 0..ic {
        for lam in 0..lc {
            for j in 0..ic {
                for mu in 0..lc {
                    let p = rms.sandwich_entry(lam, j);
                    let lhs = cand.f[i][mu][p];
                    let rhs = pw.op(
                        cand.f[i][lam][e],
                        pw.op(phh(cand.xi[lam], cand.eta[j]), cand.f[j][mu][e]),
                    );
                    if lhs != rhs {
                        return Ok(ConstraintOutcome::Fail {
                            equation: 'D',
                            witness: vec![i, lam, j, mu],
                        });
                    }
                }
            }
        }
    }
    // (E)
    for i in 0..ic {
        for lam in 0..lc {
            let p_inv = g_grp.inv(rms.sandwich_entry(lam, i));
            if cand.f[i][lam][p_inv] != pw.inv(phh(cand.xi[lam], cand.eta[i])) {
                return Ok(ConstraintOutcome::Fail { equation: 'E', witness: vec![i, lam] });
            }
        }
    }
    // (A)
    for i in 0..ic {
        for lam in 0..lc {
            for j in 0..ic {
                for mu in 0..lc {
                    let p = rms.sandwich_entry(lam, j);
                    for g in 0..order {
                        let a = coset(g);
                        let mid = phh(xi_slice(a, lam), ctx.copy.translate_eta(a, cand.eta[j]));
                        for h in 0..order {
                            let prod = g_grp.op(g_grp.op(g, p), h);
                            let lhs =
                                pw.op(cand.f[i][lam][g], pw.op(mid, tr(a, cand.f[j][mu][h])));
                            let rhs = cand.f[i][mu][prod];
                            if lhs != rhs {
                                return Ok(ConstraintOutcome::Fail {
                                    equation: 'A',
                                    witness: vec![i, lam, j, mu, g, h],
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    // All equations hold: assemble the induced map and verify it pairwise.
    let mut map = vec![0usize; rms.element_count()];
    for id in 0..rms.element_count() {
        let el = rms.decode(id);
        let a = coset(el.g);
        let copy_id = ctx.copy.copy.encode(RmsElement {
            i: cand.eta[el.i],
            g: cand.f[el.i][el.lambda][el.g],
            lambda: xi_slice(a, el.lambda),
        });
        map[id] = ctx.copy_sd.encode(copy_id, a);
    }
    let check = is_semigroup_morphism(&map, &rms.as_semigroup("S"), ctx.copy_sd.semigroup());
    Ok(ConstraintOutcome::Pass { morphism: check.morphism, injective: check.injective })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_instance_invariants() {
        let inst = CounterInstance::standard();
        assert_eq!(inst.group.order(), 21);
        assert_eq!(inst.rms.element_count(), 84);
        assert!(inst.rms.is_normalized());
        assert_eq!(inst.rms.is_central(), Ok(false));
        assert_eq!(inst.rms.sandwich_entry(1, 1), inst.x);

        let cong = inst.congruence().unwrap();
        assert_eq!(cong.quotient.transversal, vec![0, 7, 14]);
        assert_eq!(cong.kernel_members.len(), 28);
        assert_eq!(cong.quotient_rms.group().order(), 3);

        let control = CounterInstance::with_identity_p22();
        assert_eq!(control.rms.is_central(), Ok(true));
    }

    #[test]
    fn order3_census_matches_direct_count() {
        let inst = CounterInstance::standard();
        let kk = inst.kk().unwrap();
        let census = order3_census(&kk);
        assert_eq!(census.total, 1029);
        assert_eq!(census.order3_direct, 98);
        assert_eq!(census.order3_closed_form, 98);
        assert_eq!(census.mismatches, 0);
    }

    #[test]
    fn iota_enumeration_counts_and_patterns() {
        let inst = CounterInstance::standard();
        let report = enumerate_injective_iotas(&inst).unwrap();
        assert_eq!(report.count(), 588);
        assert_eq!(report.doubling_count, 294);
        assert_eq!(report.halving_count, 294);
        assert_eq!(report.distinct_h.len(), 12);
        // Digit patterns partition into (t, 2t, 4t) and (t, 4t, 2t), t ≠ 0.
        for iota in &report.iotas {
            let d = &iota.digits;
            assert_eq!(d.len(), 3);
            if iota.doubling_case {
                assert_eq!(d[1], 2 * d[0] % 7);
                assert_eq!(d[2], 4 * d[0] % 7);
            } else {
                assert_eq!(d[1], 4 * d[0] % 7);
                assert_eq!(d[2], 2 * d[0] % 7);
            }
            assert!(d[0] != 0);
        }
    }

    #[test]
    fn frame_sweep_is_clean_and_inadmissible() {
        let inst = CounterInstance::standard();
        let scan = sandwich_scan(&inst).unwrap();
        assert_eq!(scan.frames, 4096);
        assert_eq!(scan.value_checks, 4096 * 4 * 3);
        assert_eq!(scan.pointwise_checks, 4096 * 3);
        assert!(scan.clean());
        assert_eq!(scan.admissible_frames, 0);
        assert_eq!(scan.first_admissible, None);
        // Digits range over {0, 1, 6} independently per point.
        assert_eq!(scan.distinct_h.len(), 27);
        // The identity product arises (equal-pair frames).
        assert!(scan.distinct_h.binary_search(&0).is_ok());
    }

    #[test]
    fn equal_pair_frames_telescope_to_identity() {
        let inst = CounterInstance::standard();
        let ctx = CopyContext::new(&inst.rms, &inst.normal_members).unwrap();
        let id = ctx.copy.power_group.identity();
        let l_pow = ctx.copy.copy.lambda_count();
        let i_pow = ctx.copy.copy.i_count();
        for xi in 0..l_pow {
            for eta1 in 0..i_pow {
                for eta2 in 0..i_pow {
                    assert_eq!(ctx.frame_product(xi, xi, eta1, eta2), id);
                }
            }
        }
        for xi1 in 0..l_pow {
            for xi2 in 0..l_pow {
                for eta in 0..i_pow {
                    assert_eq!(ctx.frame_product(xi1, xi2, eta, eta), id);
                }
            }
        }
    }

    #[test]
    fn verdict_and_certificate_for_standard_instance() {
        let inst = CounterInstance::standard();
        let cert = nonembeddability_verdict(&inst).unwrap();
        assert_eq!(cert.iota_count, 588);
        assert_eq!(cert.frame_count, 4096);
        assert_eq!(cert.admissible_from_frames, 0);
        assert_eq!(
            cert.render(),
            "CERT nonembeddability\nIOTAS 588\nFRAMES 4096\nADMISSIBLE_H_FROM_FRAMES 0\nVERDICT PASS\n"
        );
    }

    #[test]
    fn verdict_is_positive_on_central_controls() {
        let control = CounterInstance::with_identity_p22();
        match embedding_verdict(&control.rms, &control.normal_members).unwrap() {
            EmbeddingVerdict::EmbeddingExists { target_size, pairs_checked } => {
                assert_eq!(target_size, 65856);
                assert_eq!(pairs_checked, 84 * 84);
            }
            other => panic!("expected a positive verdict, got {other:?}"),
        }

        let z4 = FiniteGroup::cyclic(4).unwrap();
        let rms =
            ReesMatrixSemigroup::new(&z4, 2, 2, &[vec![0, 0], vec![0, 2]]).unwrap();
        match embedding_verdict(&rms, &[0, 2]).unwrap() {
            EmbeddingVerdict::EmbeddingExists { target_size, .. } => {
                assert_eq!(target_size, 128);
            }
            other => panic!("expected a positive verdict, got {other:?}"),
        }
    }

    #[test]
    fn verdict_rejects_unrelated_noncentral_instances() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let rms =
            ReesMatrixSemigroup::new(&s3, 2, 2, &[vec![0, 0], vec![0, 3]]).unwrap();
        match embedding_verdict(&rms, &[0, 3, 4]) {
            Err(CounterError::NotApplicable { .. }) => {}
            other => panic!("expected NotApplicable, got {other:?}"),
        }
    }

    #[test]
    fn constraint_check_passes_centrally_and_reports_perturbations() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let rms =
            ReesMatrixSemigroup::new(&z4, 2, 2, &[vec![0, 0], vec![0, 2]]).unwrap();
        let ctx = CopyContext::new(&rms, &[0, 2]).unwrap();
        let cand = EmbeddingCandidate::from_central(&ctx, &rms);
        assert_eq!(
            structured_constraint_check(&ctx, &rms, &cand).unwrap(),
            ConstraintOutcome::Pass { morphism: true, injective: true }
        );

        let mut bent = cand.clone();
        bent.f[0][0][1] = (bent.f[0][0][1] + 1) % ctx.copy.power_group.order();
        match structured_constraint_check(&ctx, &rms, &bent).unwrap() {
            ConstraintOutcome::Fail { equation: 'C', .. } => {}
            other => panic!("expected a failure at (C), got {other:?}"),
        }

        // ψ-shaped data (ξ indexed by quotient × Λ) has the wrong arity here.
        let mut psi_shaped = cand;
        psi_shaped.xi = vec![0; ctx.kk.h.order() * rms.lambda_count()];
        match structured_constraint_check(&ctx, &rms, &psi_shaped) {
            Err(CounterError::NotApplicable { .. }) => {}
            other => panic!("expected NotApplicable, got {other:?}"),
        }
    }

    #[test]
    fn constraint_check_pins_noncentral_failure_to_equation_c() {
        let inst = CounterInstance::standard();
        let ctx = CopyContext::new(&inst.rms, &inst.normal_members).unwrap();
        let cand = EmbeddingCandidate::from_central(&ctx, &inst.rms);
        assert_eq!(
            structured_constraint_check(&ctx, &inst.rms, &cand).unwrap(),
            ConstraintOutcome::Fail { equation: 'C', witness: vec![0, 1, 1, 0, 0, 0] }
        );
    }
}
