#ifndef BIHOM_STRUCTURES_HPP
#define BIHOM_STRUCTURES_HPP

// Structure bundles and one checker per axiom system. Bundles never enforce
// their laws on construction: search candidates must be representable even
// when they fail. Every checker evaluates its identity on basis tuples only,
// which by multilinearity decides it on all elements.

#include <optional>
#include <variant>

#include "bihom/exactlin.hpp"
#include "bihom/verdict.hpp"

namespace bihom {

struct BiHomAlgebra {
  BilinearOp mu;
  LinearMap alpha;
  LinearMap beta;
  /// Stored and checked when present; nothing else depends on it.
  std::optional<Vector> unit;

  std::size_t dim() const { return mu.dim(); }
  /// α = β = id
  static BiHomAlgebra classical(BilinearOp mu, std::optional<Vector> unit = std::nullopt);
};

struct HomAlgebra {
  BilinearOp mu;
  LinearMap alpha;

  std::size_t dim() const { return mu.dim(); }
  BiHomAlgebra as_bihom() const { return {mu, alpha, alpha, std::nullopt}; }
};

struct HomCoalgebra {
  Comultiplication delta;
  LinearMap alpha;

  std::size_t dim() const { return delta.dim(); }
};

struct InfHomBialgebra {
  BilinearOp mu;
  Comultiplication delta;
  LinearMap alpha;

  std::size_t dim() const { return mu.dim(); }
  HomAlgebra algebra() const { return {mu, alpha}; }
  HomCoalgebra coalgebra() const { return {delta, alpha}; }
};

/// A classical dendriform algebra is the case alpha = beta = id.
struct BiHomDendriform {
  BilinearOp prec;
  BilinearOp succ;
  LinearMap alpha;
  LinearMap beta;

  std::size_t dim() const { return prec.dim(); }
  static BiHomDendriform classical(BilinearOp prec, BilinearOp succ);
};

/// Left Hom-pre-Lie (and, when it passes the extra law, Hom-Novikov).
struct HomPreLie {
  BilinearOp mu;
  LinearMap alpha;

  std::size_t dim() const { return mu.dim(); }
};

struct HomLie {
  BilinearOp bracket;
  LinearMap alpha;

  std::size_t dim() const { return bracket.dim(); }
};

// ------------------------------------------------------------------ kinds

/// D(ab) = D(a)τ(b) + σ(a)D(b)
struct TwistedDerivation {
  LinearMap tau;
  LinearMap sigma;
};

/// D(ab) = D(a)α^k(b) + α^k(a)D(b), with D commuting with α.
struct AlphaPowerDerivation {
  LinearMap alpha;
  unsigned k = 0;
};

using DerivationKind = std::variant<TwistedDerivation, AlphaPowerDerivation>;

/// (σ,τ): R(a)R(b) = R(σ(R(a))b + aτ(R(b)))
struct ParenRotaBaxter {
  LinearMap sigma;
  LinearMap tau;
};

/// {σ,τ}: R(σ(a))R(τ(b)) = R(σ(a)R(b) + R(a)τ(b))
struct BraceRotaBaxter {
  LinearMap sigma;
  LinearMap tau;
};

/// {α^n, α^n} with R commuting with α.
struct AlphaPowerRotaBaxter {
  LinearMap alpha;
  unsigned n = 0;
};

/// {αβ, αβ} with R commuting with α and β.
struct AlphaBetaRotaBaxter {
  LinearMap alpha;
  LinearMap beta;
};

/// Lie version of AlphaPowerRotaBaxter; the bilinear op is the bracket.
struct LieAlphaPowerRotaBaxter {
  LinearMap alpha;
  unsigned n = 0;
};

using RotaBaxterKind = std::variant<ParenRotaBaxter, BraceRotaBaxter, AlphaPowerRotaBaxter,
                                    AlphaBetaRotaBaxter, LieAlphaPowerRotaBaxter>;

// --------------------------------------------------------------- checkers

/// Commutation, multiplicativity of α and β, BiHom-associativity
/// α(x)(yz) = (xy)β(z), then the unit laws if a unit is present.
CheckVerdict check_bihom_associative(const BiHomAlgebra& a);
CheckVerdict check_hom_associative(const HomAlgebra& a);
CheckVerdict check_associative(const BilinearOp& mu);
CheckVerdict check_commutative(const BilinearOp& mu);

/// (α⊗α)∘Δ = Δ∘α, then (Δ⊗α)∘Δ = (α⊗Δ)∘Δ.
CheckVerdict check_hom_coassociative(const HomCoalgebra& c);

/// Δ(ab) = α(a)b₁⊗α(b₂) + α(a₁)⊗a₂α(b) on basis pairs, nothing else.
CheckVerdict check_infinitesimal_compat(const InfHomBialgebra& b);

/// Hom-associativity, Hom-coassociativity, then the compatibility.
CheckVerdict validate_inf_hom_bialgebra(const InfHomBialgebra& b);

CheckVerdict check_bihom_dendriform(const BiHomDendriform& d);

/// α multiplicative and α(x)(yz) − (xy)α(z) symmetric in x, y.
CheckVerdict check_hom_prelie(const HomPreLie& p);

/// Hom-pre-Lie laws and (xy)α(z) = (xz)α(y).
CheckVerdict check_hom_novikov(const HomPreLie& p);

/// Skew-symmetry, multiplicativity of α, Hom-Jacobi.
CheckVerdict check_hom_lie(const HomLie& l);

/// Throws InvalidParameterError when a map carried by `kind` is not an
/// algebra map of `m`.
void validate_derivation_kind(const BilinearOp& m, const DerivationKind& kind);
void validate_rota_baxter_kind(const BilinearOp& m, const RotaBaxterKind& kind);

/// The identity of the kind (plus its commutation requirement) without
/// re-validating the kind's maps. Used by the search kernel.
CheckVerdict derivation_identity(const LinearMap& d, const BilinearOp& m,
                                 const DerivationKind& kind);
CheckVerdict rota_baxter_identity(const LinearMap& r, const BilinearOp& m,
                                  const RotaBaxterKind& kind);

CheckVerdict check_derivation(const LinearMap& d, const BilinearOp& m,
                              const DerivationKind& kind);
CheckVerdict check_rota_baxter(const LinearMap& r, const BilinearOp& m,
                               const RotaBaxterKind& kind);

/// The three components of A(r) as defined with the structure maps inserted.
/// Note r13r12 and r23r13 are not plain triple products.
struct AybeTerms {
  Tensor3 r13r12;
  Tensor3 r12r23;
  Tensor3 r23r13;
};

AybeTerms aybe_terms(const BiHomAlgebra& a, const Tensor2& r);

/// A(r) = r13r12 − r12r23 + r23r13
Tensor3 aybe_residue(const BiHomAlgebra& a, const Tensor2& r);

/// (α⊗α)(r) = r, (β⊗β)(r) = r, A(r) = 0, in that order.
CheckVerdict check_aybe(const BiHomAlgebra& a, const Tensor2& r);

/// Copy of `v` with its law renamed; pass-through on success.
CheckVerdict relabel(CheckVerdict v, std::string_view law);

}  // namespace bihom

#endif  // BIHOM_STRUCTURES_HPP
