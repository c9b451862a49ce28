//! Constructive embeddings of group extensions and of completely simple
//! semigroups split by a group congruence.
//!
//! Three maps, sharing one cocycle:
//!
//! * **κ** (Kaloujnine–Krasner): for `N ⊴ G` with `H = G/N` and the
//!   minimum-member transversal `r`, the cocycle `f_g(A) = r_A·g·r_{A·gN}⁻¹`
//!   lands in `N`, satisfies `f_{gh} = f_g · ᵍᴺf_h`, and
//!   `κ(g) = (f_g, gN)` embeds `G` into `N^H ⋊ H = N wr H`.
//! * **ν**: for a normalized Rees matrix semigroup `S = M[G; I, Λ; P]` whose
//!   sandwich entries lie in `N`, with kernel `U = M[N; I, Λ; P]`, the map
//!   `ν(i, g, λ) = (F, gN)` into `U wr H`, where `F(A) = (i, f_g(A), λ)`.
//!   It is always injective; it is a morphism exactly on central instances,
//!   so the verdict is reported rather than assumed.
//! * **ψ**: same hypotheses, no centrality: the target trades the wreath
//!   product for `V ⋊ H` with `V = M[N^H; I, H×Λ; Q]`,
//!   `q_{(B,λ),j} = ᴮ(f_{p_{λj}})`, and `H` acting by
//!   `ᴬ(i, f, (B, λ)) = (i, ᴬf, (A·B, λ))`. Then
//!   `ψ(i, g, λ) = ((i, f_g, (gN, λ)), gN)` is an embedding
//!   unconditionally, and for `|I| = |Λ| = 1` it collapses to κ.

use thiserror::Error;

use crate::action::{Action, ActionError, DigitCodec, SemidirectProduct, WreathProduct, wreath_product};
use crate::group::{
    quotient_with_transversal, FiniteGroup, GroupError, QuotientData, Subgroup,
};
use crate::rees::{
    congruence_from_normal, GroupCongruence, ReesError, ReesMatrixSemigroup, RmsElement,
};
use crate::semigroup::{is_semigroup_morphism, MorphismCheck};

/// Errors raised by embedding construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("the sandwich matrix must be normalized (found p_({lambda}, {i}) = {value})")]
    NotNormalized { lambda: usize, i: usize, value: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Rees(#[from] ReesError),
}

/// The Kaloujnine–Krasner embedding `κ: G → N^H ⋊ H` with its cocycle.
#[derive(Clone, Debug)]
pub struct KkEmbedding {
    pub source: FiniteGroup,
    pub normal: Subgroup,
    pub quotient: QuotientData,
    /// `N` as a standalone group; `n_index[k]` is the parent id of its `k`.
    pub n_group: FiniteGroup,
    pub n_index: Vec<usize>,
    /// `H = G/N`.
    pub h: FiniteGroup,
    /// `N^H` (big-endian function encoding).
    pub power_group: FiniteGroup,
    /// Translation action of `H` on `N^H`.
    pub action: Action,
    /// `N^H ⋊ H` (ids `A·|N^H| + f`).
    pub product: SemidirectProduct,
    /// The same product materialized and validated as a group.
    pub product_group: FiniteGroup,
    /// `κ` on dense ids: `map[g] = encode(f_g, gN)`.
    pub map: Vec<usize>,
    /// `f_g` per source element, as `N^H` ids.
    cocycle: Vec<usize>,
    pub(crate) n_codec: DigitCodec,
}

impl KkEmbedding {
    /// The cocycle component `f_g` as an `N^H` id.
    pub fn f_component(&self, g: usize) -> usize {
        self.cocycle[g]
    }

    /// The quotient component `gN` as a coset id.
    pub fn h_component(&self, g: usize) -> usize {
        self.quotient.coset_of[g]
    }

    /// `f_g(a)` as an index into the abstract `N`.
    pub fn cocycle_value(&self, g: usize, a: usize) -> usize {
        self.n_codec.digit(self.cocycle[g], a)
    }

    /// Digit of an arbitrary `N^H` id at `a ∈ H`.
    pub fn function_digit(&self, f: usize, a: usize) -> usize {
        self.n_codec.digit(f, a)
    }

    /// Encodes digits (indices into the abstract `N`) as an `N^H` id.
    pub fn encode_function(&self, digits: &[usize]) -> usize {
        self.n_codec.encode(digits)
    }

    /// Translation `ᴮf` on `N^H` ids.
    pub fn translate_function(&self, b: usize, f: usize) -> usize {
        self.n_codec.translate(&self.h, b, f)
    }

    /// Exhaustive verification that `κ` is an injective morphism.
    pub fn verify_embedding(&self) -> MorphismCheck {
        is_semigroup_morphism(
            &self.map,
            &self.source.as_semigroup("G"),
            self.product.semigroup(),
        )
    }

    /// First `(g, h)` violating `f_{gh} = f_g · ᵍᴺf_h`, if any.
    pub fn verify_cocycle_identity(&self) -> Option<(usize, usize)> {
        let n = self.source.order();
        for g in 0..n {
            for x in 0..n {
                let lhs = self.cocycle[self.source.op(g, x)];
                let rhs = self
                    .power_group
                    .op(self.cocycle[g], self.translate_function(self.h_component(g), self.cocycle[x]));
                if lhs != rhs {
                    return Some((g, x));
                }
            }
        }
        None
    }
}

/// Builds `κ` for `N ⊴ G` (minimum-member transversal).
pub fn kk_embedding(g: &FiniteGroup, normal_members: &[usize]) -> Result<KkEmbedding, EmbedError> {
    let normal = Subgroup::from_members(g, normal_members)?;
    let quotient = quotient_with_transversal(g, &normal)?;
    let (n_group, n_index) = normal.as_group(g)?;
    let h = quotient.quotient.clone();
    let power_group = FiniteGroup::direct_power(&n_group, h.order())?;
    let n_codec = DigitCodec::new(n_group.order(), h.order());

    let mut index_in_n = vec![usize::MAX; g.order()];
    for (ix, &m) in n_index.iter().enumerate() {
        index_in_n[m] = ix;
    }

    let mut cocycle = Vec::with_capacity(g.order());
    for x in 0..g.order() {
        let digits: Vec<usize> = (0..h.order())
            .map(|a| {
                let target = h.op(a, quotient.coset_of[x]);
                let value =
                    g.op(g.op(quotient.transversal[a], x), g.inv(quotient.transversal[target]));
                let ix = index_in_n[value];
                assert_ne!(ix, usize::MAX, "cocycle values must lie in the normal subgroup");
                ix
            })
            .collect();
        cocycle.push(n_codec.encode(&digits));
    }

    let power_sg = power_group.as_semigroup("N^H");
    let rows: Vec<Vec<u32>> = (0..h.order())
        .map(|a| {
            (0..power_group.order()).map(|f| n_codec.translate(&h, a, f) as u32).collect()
        })
        .collect();
    let action = Action::new(&h, &power_sg, rows)?;
    let product = SemidirectProduct::new(action.clone(), "N^H⋊H")?;
    let product_group = product.as_group()?;
    let map: Vec<usize> =
        (0..g.order()).map(|x| product.encode(cocycle[x], quotient.coset_of[x])).collect();

    Ok(KkEmbedding {
        source: g.clone(),
        normal,
        quotient,
        n_group,
        n_index,
        h,
        power_group,
        action,
        product,
        product_group,
        map,
        cocycle,
        n_codec,
    })
}

/// The central-case map `ν: S → U wr H` (total; a morphism iff `S` central).
#[derive(Clone, Debug)]
pub struct CentralEmbedding {
    pub congruence: GroupCongruence,
    /// κ for `(G, N)`; supplies the cocycle.
    pub kk: KkEmbedding,
    /// `U wr H` where `U = M[N; I, Λ; P]` is the kernel.
    pub wreath: WreathProduct,
    /// `ν` on dense ids of `S`.
    pub map: Vec<usize>,
}

impl CentralEmbedding {
    /// Exhaustive morphism/injectivity verdict for `ν` over `|S|²` pairs.
    pub fn verify(&self, rms: &ReesMatrixSemigroup) -> MorphismCheck {
        is_semigroup_morphism(
            &self.map,
            &rms.as_semigroup("S"),
            self.wreath.product.semigroup(),
        )
    }
}

fn require_normalized(rms: &ReesMatrixSemigroup) -> Result<(), EmbedError> {
    for i in 0..rms.i_count() {
        let v = rms.sandwich_entry(0, i);
        if v != rms.group().identity() {
            return Err(EmbedError::NotNormalized { lambda: 0, i, value: v });
        }
    }
    for lambda in 0..rms.lambda_count() {
        let v = rms.sandwich_entry(lambda, 0);
        if v != rms.group().identity() {
            return Err(EmbedError::NotNormalized { lambda, i: 0, value: v });
        }
    }
    Ok(())
}

/// Builds `ν(i, g, λ) = (A ↦ (i, f_g(A), λ), gN)` into `U wr H`.
pub fn central_embedding(
    rms: &ReesMatrixSemigroup,
    normal_members: &[usize],
) -> Result<CentralEmbedding, EmbedError> {
    require_normalized(rms)?;
    let congruence = congruence_from_normal(rms, normal_members)?;
    let kk = kk_embedding(rms.group(), normal_members)?;
    let u = congruence.kernel_rms.as_semigroup("U");
    let wreath = wreath_product(&u, &kk.h, "UwrH")?;

    let h_order = kk.h.order();
    let mut map = Vec::with_capacity(rms.element_count());
    let mut digits = vec![0usize; h_order];
    for id in 0..rms.element_count() {
        let e = rms.decode(id);
        for (a, d) in digits.iter_mut().enumerate() {
            *d = congruence.kernel_rms.encode(RmsElement {
                i: e.i,
                g: kk.cocycle_value(e.g, a),
                lambda: e.lambda,
            });
        }
        let f = wreath.encode_function(&digits);
        map.push(wreath.product.encode(f, kk.h_component(e.g)));
    }
    Ok(CentralEmbedding { congruence, kk, wreath, map })
}

/// The unconditional embedding `ψ: S → V ⋊ H`.
#[derive(Clone, Debug)]
pub struct GeneralEmbedding {
    pub congruence: GroupCongruence,
    pub kk: KkEmbedding,
    /// `V = M[N^H; I, H×Λ; Q]`; rows encoded as `B·|Λ| + λ`.
    pub v: ReesMatrixSemigroup,
    /// `H` acting on `V` by `ᴬ(i, f, (B, λ)) = (i, ᴬf, (A·B, λ))`.
    pub action: Action,
    /// `V ⋊ H`.
    pub product: SemidirectProduct,
    /// `ψ` on dense ids of `S`.
    pub map: Vec<usize>,
}

impl GeneralEmbedding {
    pub fn lambda_count(&self) -> usize {
        self.congruence.kernel_rms.lambda_count()
    }

    /// Row id of `(B, λ)` in `V`.
    pub fn encode_row(&self, b: usize, lambda: usize) -> usize {
        b * self.lambda_count() + lambda
    }

    /// Exhaustive morphism/injectivity verdict for `ψ` over `|S|²` pairs.
    pub fn verify(&self, rms: &ReesMatrixSemigroup) -> MorphismCheck {
        is_semigroup_morphism(&self.map, &rms.as_semigroup("S"), self.product.semigroup())
    }

    /// First `(g, h, λ, j)` violating the product identity
    /// `f_{g·p_{λj}·h} = f_g · q_{(gN,λ),j} · ᵍᴺf_h`, if any.
    pub fn verify_cocycle_product_identity(
        &self,
        rms: &ReesMatrixSemigroup,
    ) -> Option<(usize, usize, usize, usize)> {
        let g_order = rms.group().order();
        for g in 0..g_order {
            for x in 0..g_order {
                for lambda in 0..rms.lambda_count() {
                    for j in 0..rms.i_count() {
                        let p = rms.sandwich_entry(lambda, j);
                        let lhs = self.kk.f_component(rms.group().op(rms.group().op(g, p), x));
                        let q = self.v.sandwich_entry(
                            self.encode_row(self.kk.h_component(g), lambda),
                            j,
                        );
                        let rhs = self.kk.power_group.op(
                            self.kk.power_group.op(self.kk.f_component(g), q),
                            self.kk.translate_function(self.kk.h_component(g), self.kk.f_component(x)),
                        );
                        if lhs != rhs {
                            return Some((g, x, lambda, j));
                        }
                    }
                }
            }
        }
        None
    }

    /// Checks that every maximal subgroup (H-class of an idempotent) of `V`
    /// is an isomorphic copy of `N^H` under `f ↦ (i, f·q_{ρi}⁻¹, ρ)`.
    pub fn verify_maximal_subgroups(&self) -> bool {
        let power = &self.kk.power_group;
        let n = power.order();
        for i in 0..self.v.i_count() {
            for row in 0..self.v.lambda_count() {
                let q = self.v.sandwich_entry(row, i);
                let qinv = power.inv(q);
                // Injectivity of f ↦ f·q⁻¹ is automatic in a group; check
                // multiplicativity into the H-class product.
                for f in 0..n {
                    for g in 0..n {
                        let img = |x: usize| {
                            self.v.encode(RmsElement { i, g: power.op(x, qinv), lambda: row })
                        };
                        let lhs = img(power.op(f, g));
                        let rhs = self.v.mul_ids(img(f), img(g));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Builds `ψ` for a normalized `S` and qualifying `N`.
pub fn general_embedding(
    rms: &ReesMatrixSemigroup,
    normal_members: &[usize],
) -> Result<GeneralEmbedding, EmbedError> {
    require_normalized(rms)?;
    let congruence = congruence_from_normal(rms, normal_members)?;
    let kk = kk_embedding(rms.group(), normal_members)?;
    let h_order = kk.h.order();
    let lambda_count = rms.lambda_count();

    // Q rows: (B, λ) ↦ per column j the entry ᴮ(f_{p_{λj}}).
    let rows: Vec<Vec<usize>> = (0..h_order * lambda_count)
        .map(|row| {
            let (b, lambda) = (row / lambda_count, row % lambda_count);
            (0..rms.i_count())
                .map(|j| kk.translate_function(b, kk.f_component(rms.sandwich_entry(lambda, j))))
                .collect()
        })
        .collect();
    let v = ReesMatrixSemigroup::new(&kk.power_group, rms.i_count(), h_order * lambda_count, &rows)?;

    let v_sg = v.as_semigroup("V");
    let action = {
        let v = v.clone();
        let kk_h = kk.h.clone();
        let codec = kk.n_codec.clone();
        Action::from_fn(&kk.h, &v_sg, move |a, id| {
            let e = v.decode(id);
            let (b, lambda) = (e.lambda / lambda_count, e.lambda % lambda_count);
            v.encode(RmsElement {
                i: e.i,
                g: codec.translate(&kk_h, a, e.g),
                lambda: kk_h.op(a, b) * lambda_count + lambda,
            })
        })?
    };
    let product = SemidirectProduct::new(action.clone(), "V⋊H")?;

    let map: Vec<usize> = (0..rms.element_count())
        .map(|id| {
            let e = rms.decode(id);
            let coset = kk.h_component(e.g);
            let inner = v.encode(RmsElement {
                i: e.i,
                g: kk.f_component(e.g),
                lambda: coset * lambda_count + e.lambda,
            });
            product.encode(inner, coset)
        })
        .collect();

    Ok(GeneralEmbedding { congruence, kk, v, action, product, map })
}

/// For `S = M[G; 1, 1; [identity]]`, checks that `ψ` agrees with `κ`
/// pointwise under the evident identification: the `N^H` component, the
/// row's `H` part, and the outer coset all match `κ`'s data.
pub fn psi_equals_kappa_check(
    g: &FiniteGroup,
    normal_members: &[usize],
) -> Result<bool, EmbedError> {
    let rms = ReesMatrixSemigroup::new(g, 1, 1, &[vec![g.identity()]])?;
    let psi = general_embedding(&rms, normal_members)?;
    let kk = kk_embedding(g, normal_members)?;
    for x in 0..g.order() {
        let id = rms.encode(RmsElement { i: 0, g: x, lambda: 0 });
        let (inner, outer) = psi.product.decode(psi.map[id]);
        let e = psi.v.decode(inner);
        // λ is the unique 0, so the row id is exactly the H part.
        if e.g != kk.f_component(x) || e.lambda != kk.h_component(x) || outer != kk.h_component(x)
        {
            return Ok(false);
        }
    }
    Ok(true)
}
