#ifndef BIHOM_CONSTRUCTIONS_HPP
#define BIHOM_CONSTRUCTIONS_HPP

// Executable constructions. Each one verifies its hypotheses with the
// checkers before building anything and throws PreconditionError naming the
// first hypothesis that failed. Where two formulas describe one object,
// both are computed and compared (InternalInconsistencyError on mismatch).

#include "bihom/structures.hpp"

namespace bihom {

/// (A, μ∘(α⊗β), α, β) for associative μ and commuting algebra maps α, β.
/// The Hom case is β = α, where μ∘(α⊗α) = α∘μ.
BiHomAlgebra yau_twist_assoc(const BilinearOp& mu, const LinearMap& alpha,
                             const LinearMap& beta);

/// x ≺' y = α(x) ≺ β(y), x ≻' y = α(x) ≻ β(y). `d` must be classical
/// (identity structure maps).
BiHomDendriform yau_twist_dendriform(const BiHomDendriform& d, const LinearMap& alpha,
                                     const LinearMap& beta);

/// (A, α∘μ, α) for a classical left pre-Lie μ and a pre-Lie morphism α.
HomPreLie yau_twist_prelie(const BilinearOp& mu, const LinearMap& alpha);

/// (A, α∘μ, Δ∘α, α) for a classical infinitesimal bialgebra (μ, Δ) and an
/// algebra-and-coalgebra morphism α.
InfHomBialgebra yau_twist_inf_bialgebra(const BilinearOp& mu, const Comultiplication& delta,
                                        const LinearMap& alpha);

/// x ∗ y = x ≺ y + x ≻ y
BiHomAlgebra dendriform_sum(const BiHomDendriform& d);

/// x ∘ y = x ≻ y − y ≺ x; requires α = β.
HomPreLie dendriform_circ(const BiHomDendriform& d);

/// a ≺ b = aτ(R(b)), a ≻ b = σ(R(a))b for a (σ,τ)-Rota-Baxter R on an
/// associative algebra.
BiHomDendriform dendriform_from_paren_rb(const BilinearOp& mu, const LinearMap& sigma,
                                         const LinearMap& tau, const LinearMap& r);

/// x ≺ y = σ(x)Rη(y), x ≻ y = R(x)τη(y), structure maps ασ and βτη, for a
/// {σ,τ}-Rota-Baxter R where α, β, σ, τ, η, R pairwise commute.
BiHomDendriform simprop_dendriform(const BiHomAlgebra& a, const LinearMap& sigma,
                                   const LinearMap& tau, const LinearMap& eta,
                                   const LinearMap& r);
/// η = id
BiHomDendriform simprop_dendriform(const BiHomAlgebra& a, const LinearMap& sigma,
                                   const LinearMap& tau, const LinearMap& r);

struct DendriformTriple {
  BiHomDendriform dendriform;  // both structure maps α^{n+1}
  HomAlgebra sum;              // x∗y = α^n(x)R(y) + R(x)α^n(y)
  HomPreLie circ;              // x∘y = R(x)α^n(y) − α^n(y)R(x)
};

/// The Hom-dendriform, Hom-associative and Hom-pre-Lie structures induced
/// by an α^n-Rota-Baxter operator on a Hom-associative algebra.
DendriformTriple moregendend_triple(const HomAlgebra& h, unsigned n, const LinearMap& r);

/// a·b = [R(a), α^n(b)] with structure map α^{n+1}, for an α^n-Rota-Baxter
/// operator (Lie kind) on a Hom-Lie algebra.
HomPreLie analoglie_prelie(const HomLie& l, unsigned n, const LinearMap& r);

/// Both expressions of the operator induced by a BiHom-AYBE solution r.
struct AbrbForms {
  LinearMap left;   // Σ αβ³(x_i)(a α³(y_i))
  LinearMap right;  // Σ (β³(x_i)a) α³β(y_i)
};

/// Computes both forms without checking hypotheses.
AbrbForms abrb_forms(const BiHomAlgebra& a, const Tensor2& r);

/// The αβ-Rota-Baxter operator of a BiHom-AYBE solution (α²-Rota-Baxter in
/// the Hom case).
LinearMap abrb_operator(const BiHomAlgebra& a, const Tensor2& r);

/// x • y = α^k(x)D(y) with structure map α^{k+1}, for a commutative
/// Hom-associative algebra and an α^k-derivation D.
HomPreLie gengd_novikov(const HomAlgebra& h, unsigned k, const LinearMap& d);

/// D = μ∘Δ
LinearMap mu_delta_map(const InfHomBialgebra& b);

struct BulletForms {
  BilinearOp left;   // α(y₁)(α(x)y₂)
  BilinearOp right;  // (y₁α(x))α(y₂)
};

BulletForms bullet_forms(const InfHomBialgebra& b);

/// (A, •, α³) with x • y = α(y₁)(α(x)y₂).
HomPreLie infprelie_bullet(const InfHomBialgebra& b);

/// Δ_r(b) = Σ α(x_i) ⊗ y_i b − Σ b x_i ⊗ α(y_i). `negate_r` swaps to the
/// opposite sign convention by using −r.
Comultiplication delta_r(const HomAlgebra& h, const Tensor2& r, bool negate_r = false);

/// a • b = b₁ a b₂ for a classical infinitesimal bialgebra.
BilinearOp aguiar_bullet(const BilinearOp& mu, const Comultiplication& delta);

}  // namespace bihom

#endif  // BIHOM_CONSTRUCTIONS_HPP
