#ifndef BIHOM_DISCOVERY_HPP
#define BIHOM_DISCOVERY_HPP

// Built-in example catalogue and exhaustive search over bounded coefficient
// grids. Everything returned by search() has been re-certified by the
// independent checker.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bihom/structures.hpp"

namespace bihom {

// -------------------------------------------------------------- catalogue

using Structure = std::variant<BiHomAlgebra, InfHomBialgebra, LinearMap>;

struct CatalogueEntry {
  std::string id;
  Structure structure;
  std::vector<std::string> basis;
  std::string provenance;
  bool negative_control = false;
  /// For linear maps: id of the algebra the map acts on.
  std::string ambient;
  /// For quasitriangular entries: the AYBE solution behind Δ.
  std::optional<Tensor2> r;

  const BiHomAlgebra& algebra() const { return std::get<BiHomAlgebra>(structure); }
  const InfHomBialgebra& bialgebra() const { return std::get<InfHomBialgebra>(structure); }
  const LinearMap& map() const { return std::get<LinearMap>(structure); }
};

/// Entries: n2, na2 (negative control), dx2, m2, dx2-infbialg, m2-qt and the
/// maps id2, sgn, neg_x, x_to_zero, conj_d, id4. Built once; throws
/// std::logic_error if a positive entry fails validation or the negative
/// control passes.
const std::vector<CatalogueEntry>& catalogue();
const CatalogueEntry& catalogue_entry(std::string_view id);

/// Full validation of an entry (algebra laws, bialgebra laws, or algebra
/// map on its ambient algebra).
CheckVerdict validate_entry(const CatalogueEntry& entry);

/// Yau twist of a catalogue entry: BiHom twist (α, β) for algebras, Hom
/// twist α for infinitesimal bialgebras (β must be absent or equal α).
Structure twist_factory(const CatalogueEntry& base, const LinearMap& alpha,
                        const std::optional<LinearMap>& beta = std::nullopt);

// ----------------------------------------------------------------- search

enum class SearchTarget { aybe, rota_baxter, derivation, algebra_map_pair };

struct SearchSpec {
  SearchTarget target = SearchTarget::aybe;
  std::optional<RotaBaxterKind> rb_kind;         // target rota_baxter
  std::optional<DerivationKind> derivation_kind;  // target derivation
  std::vector<Scalar> coefficients{Scalar(-1), Scalar(0), Scalar(1)};
  std::size_t max_dim = 4;
  /// Index pairs allowed to be nonzero (entries of r or of the matrix).
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> support;
  std::uint64_t budget = 100'000'000;
  /// 0 picks BIHOM_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

using FoundObject = std::variant<Tensor2, LinearMap, std::pair<LinearMap, LinearMap>>;

struct Found {
  /// Position in the lexicographic candidate order.
  std::uint64_t candidate = 0;
  FoundObject object;
};

/// Number of candidates the spec enumerates on an ambient of this dimension
/// (for algebra_map_pair: the single-map grid). Saturates at UINT64_MAX.
std::uint64_t candidate_count(const SearchSpec& spec, std::size_t dim);

/// Enumerates the grid in lexicographic order and hands each certified
/// object to `sink` in candidate order. Throws SearchSpaceTooLargeError
/// over budget and InvalidParameterError on a bad spec.
void search_stream(const SearchSpec& spec, const BiHomAlgebra& ambient,
                   const std::function<void(const Found&)>& sink);
std::vector<Found> search(const SearchSpec& spec, const BiHomAlgebra& ambient);

/// Convenience wrappers returning just the objects.
std::vector<Tensor2> find_aybe_solutions(const BiHomAlgebra& ambient, SearchSpec spec = {});
std::vector<LinearMap> find_rota_baxter(const BilinearOp& mu, const RotaBaxterKind& kind,
                                        SearchSpec spec = {});
std::vector<LinearMap> find_derivations(const BilinearOp& mu, const DerivationKind& kind,
                                        SearchSpec spec = {});
std::vector<LinearMap> find_algebra_maps(const BilinearOp& mu, SearchSpec spec = {});
std::vector<std::pair<LinearMap, LinearMap>> find_algebra_map_pairs(const BilinearOp& mu,
                                                                    SearchSpec spec = {});

/// Every square matrix over the grid (row-major lexicographic order).
std::vector<LinearMap> enumerate_maps(std::size_t dim, const std::vector<Scalar>& coefficients,
                                      std::uint64_t budget = 100'000'000);

unsigned default_thread_count();

}  // namespace bihom

#endif  // BIHOM_DISCOVERY_HPP
