#ifndef BIHOM_IO_HPP
#define BIHOM_IO_HPP

// JSON documents for every domain object.
//
//   {"schema_version": "1", "kind": ..., "convention": "columns-are-images",
//    "payload": {...}}
//
// Scalars are strings "p/q" in lowest terms (or "p"; bare JSON integers are
// accepted on input). Matrices are row-major lists of rows; column j holds
// the image of e_j. Cubes are nested lists indexed [i][j][k]: for products
// e_i e_j = sum_k c[i][j][k] e_k, for comultiplications
// Delta(e_i) = sum_{j,k} c[i][j][k] e_j (x) e_k. Unknown fields are rejected
// and every error names a JSON pointer.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bihom/discovery.hpp"
#include "bihom/structures.hpp"
#include "bihom/theorems.hpp"

namespace bihom::io {

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kConvention = "columns-are-images";

enum class DocumentKind {
  algebra,
  bihom_algebra,
  hom_coalgebra,
  inf_hom_bialgebra,
  dendriform,
  hom_prelie,
  hom_lie,
  linear_map,
  tensor2,
  search_spec,
  report,
};

std::string to_string(DocumentKind kind);

struct BialgebraPayload {
  InfHomBialgebra bialgebra;
  /// Present for quasitriangular instances.
  std::optional<Tensor2> r;
};

struct SearchDocument {
  SearchSpec spec;
  /// Either a catalogue id or an embedded algebra.
  std::string ambient_id;
  std::optional<BiHomAlgebra> ambient;
  std::vector<std::string> ambient_basis;

  /// The embedded algebra, or the catalogue algebra named by ambient_id.
  BiHomAlgebra resolve_ambient() const;
  std::vector<std::string> resolve_basis() const;
};

using Payload = std::variant<BiHomAlgebra, HomCoalgebra, BialgebraPayload, BiHomDendriform,
                             HomPreLie, HomLie, LinearMap, Tensor2, SearchDocument,
                             TheoremReport>;

struct Document {
  DocumentKind kind = DocumentKind::algebra;
  /// Basis labels for structure documents; empty for the others.
  std::vector<std::string> basis;
  Payload payload;
};

/// Throws ParseError (with a JSON pointer) on malformed or invalid input.
Document parse_document(std::string_view text);
Document read_document(const std::filesystem::path& path);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const Document& doc);
std::string canonicalize(std::string_view text);
void write_document(const std::filesystem::path& path, const Document& doc);

/// Default labels e0, e1, ...
std::vector<std::string> default_basis(std::size_t dim);

Document algebra_document(const BiHomAlgebra& a, std::vector<std::string> basis = {});
Document coalgebra_document(const HomCoalgebra& c, std::vector<std::string> basis = {});
Document bialgebra_document(const InfHomBialgebra& b, std::optional<Tensor2> r = std::nullopt,
                            std::vector<std::string> basis = {});
Document dendriform_document(const BiHomDendriform& d, std::vector<std::string> basis = {});
Document prelie_document(const HomPreLie& p, std::vector<std::string> basis = {});
Document lie_document(const HomLie& l, std::vector<std::string> basis = {});
Document map_document(const LinearMap& f);
Document tensor_document(const Tensor2& t);
Document report_document(const TheoremReport& report);

Document catalogue_document(const CatalogueEntry& entry);

/// Compact single-line JSON.
std::string witness_json(const Witness& w, const std::vector<std::string>& basis);
std::string verdict_json(std::string_view law, const CheckVerdict& v,
                         const std::vector<std::string>& basis);
std::string report_json(const TheoremReport& report);
std::string found_json(const Found& found);

}  // namespace bihom::io

#endif  // BIHOM_IO_HPP
