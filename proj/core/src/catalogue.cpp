#include <cstdint>
#include <initializer_list>
#include <stdexcept>

#include "bihom/constructions.hpp"
#include "bihom/discovery.hpp"
#include "bihom/errors.hpp"

namespace bihom {

namespace {

BilinearOp n2_product() {
  BilinearOp mu(2);
  mu(0, 0, 1) = Scalar(1);  // uu = v
  return mu;
}

BilinearOp na2_product() {
  BilinearOp mu(2);
  mu(0, 0, 1) = Scalar(1);  // uu = v
  mu(1, 0, 0) = Scalar(1);  // vu = u
  return mu;
}

BilinearOp dx2_product() {
  BilinearOp mu(2);
  mu(0, 0, 0) = Scalar(1);
  mu(0, 1, 1) = Scalar(1);
  mu(1, 0, 1) = Scalar(1);
  return mu;
}

// Matrix units e11, e12, e21, e22 at indices 0..3.
BilinearOp m2_product() {
  BilinearOp mu(4);
  auto idx = [](std::size_t i, std::size_t j) { return 2 * i + j; };
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) mu(idx(i, j), idx(j, l), idx(i, l)) = Scalar(1);
  return mu;
}

LinearMap diag(std::initializer_list<std::int64_t> d) {
  std::vector<Scalar> v;
  for (auto x : d) v.emplace_back(x);
  return LinearMap::diagonal(v);
}

const CatalogueEntry* find_in(const std::vector<CatalogueEntry>& entries,
                              std::string_view id) {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

CheckVerdict validate_in(const CatalogueEntry& e, const std::vector<CatalogueEntry>& entries) {
  if (const auto* a = std::get_if<BiHomAlgebra>(&e.structure)) {
    return check_bihom_associative(*a);
  }
  if (const auto* b = std::get_if<InfHomBialgebra>(&e.structure)) {
    return first_failure([&] { return validate_inf_hom_bialgebra(*b); },
                         [&] {
                           if (!e.r) return CheckVerdict::pass();
                           return first_failure(
                               [&] { return check_aybe(b->algebra().as_bihom(), *e.r); },
                               [&] {
                                 const Comultiplication expected = delta_r(b->algebra(), *e.r);
                                 return check_on_basis<1>(
                                     "delta-is-delta-r", b->dim(), [&](const auto& t) {
                                       return std::pair{b->delta.image(t[0]).flat(),
                                                        expected.image(t[0]).flat()};
                                     });
                               });
                         });
  }
  const auto* ambient = find_in(entries, e.ambient);
  if (ambient == nullptr || !std::holds_alternative<BiHomAlgebra>(ambient->structure)) {
    throw std::logic_error("catalogue map " + e.id + " has no ambient algebra");
  }
  return is_algebra_map(e.map(), ambient->algebra().mu);
}

std::vector<CatalogueEntry> build() {
  const std::vector<std::string> uv{"u", "v"};
  const std::vector<std::string> dx{"1", "x"};
  const std::vector<std::string> m2{"e11", "e12", "e21", "e22"};

  std::vector<CatalogueEntry> entries;
  entries.push_back({"n2", BiHomAlgebra::classical(n2_product()), uv,
                     "commutative associative non-unital: uu = v, other products 0"});
  entries.push_back({"na2", BiHomAlgebra::classical(na2_product()), uv,
                     "uu = v, vu = u; non-associative negative control", true});
  entries.push_back({"dx2", BiHomAlgebra::classical(dx2_product(), basis_vector(2, 0)), dx,
                     "unital k[x]/(x^2)"});
  {
    Vector unit = basis_vector(4, 0);
    unit[3] = Scalar(1);
    entries.push_back({"m2", BiHomAlgebra::classical(m2_product(), unit), m2,
                       "2x2 matrices over the rationals, matrix-unit basis"});
  }
  {
    Comultiplication delta(2);
    delta(1, 1, 1) = Scalar(1);  // Δ(x) = x ⊗ x
    entries.push_back({"dx2-infbialg",
                       InfHomBialgebra{dx2_product(), delta, LinearMap::identity(2)}, dx,
                       "k[x]/(x^2) with Δ(1) = 0, Δ(x) = x⊗x"});
  }
  {
    Tensor2 r(4);
    r(1, 1) = Scalar(1);  // e12 ⊗ e12
    const HomAlgebra m2alg{m2_product(), LinearMap::identity(4)};
    CatalogueEntry e{"m2-qt",
                     InfHomBialgebra{m2_product(), delta_r(m2alg, r), LinearMap::identity(4)},
                     m2, "quasitriangular: M2 with Δ_r for r = e12⊗e12"};
    e.r = r;
    entries.push_back(std::move(e));
  }
  auto add_map = [&](std::string id, LinearMap f, const std::vector<std::string>& basis,
                     std::string ambient, std::string provenance) {
    CatalogueEntry e{std::move(id), std::move(f), basis, std::move(provenance)};
    e.ambient = std::move(ambient);
    entries.push_back(std::move(e));
  };
  add_map("id2", LinearMap::identity(2), uv, "n2", "identity on a 2-dimensional space");
  add_map("sgn", diag({-1, 1}), uv, "n2", "u ↦ −u, v ↦ v");
  add_map("neg_x", diag({1, -1}), dx, "dx2", "1 ↦ 1, x ↦ −x");
  add_map("x_to_zero", diag({1, 0}), dx, "dx2", "1 ↦ 1, x ↦ 0");
  add_map("conj_d", diag({1, -1, -1, 1}), m2, "m2", "conjugation by diag(1, −1)");
  add_map("id4", LinearMap::identity(4), m2, "m2", "identity on M2");

  for (const auto& e : entries) {
    const bool ok = validate_in(e, entries).passed();
    if (ok == e.negative_control) {
      throw std::logic_error("catalogue entry " + e.id +
                             (e.negative_control ? " unexpectedly validates"
                                                 : " fails validation"));
    }
  }
  return entries;
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = build();
  return entries;
}

const CatalogueEntry& catalogue_entry(std::string_view id) {
  if (const auto* e = find_in(catalogue(), id)) return *e;
  throw InvalidParameterError("unknown catalogue entry \"" + std::string(id) + "\"");
}

CheckVerdict validate_entry(const CatalogueEntry& entry) {
  return validate_in(entry, catalogue());
}

Structure twist_factory(const CatalogueEntry& base, const LinearMap& alpha,
                        const std::optional<LinearMap>& beta) {
  if (const auto* a = std::get_if<BiHomAlgebra>(&base.structure)) {
    if (!a->alpha.is_identity() || !a->beta.is_identity()) {
      throw PreconditionError("base algebra is classical");
    }
    const LinearMap& b = beta ? *beta : alpha;
    BiHomAlgebra twisted = yau_twist_assoc(a->mu, alpha, b);
    if (a->unit && alpha.apply(*a->unit) == *a->unit && b.apply(*a->unit) == *a->unit) {
      twisted.unit = a->unit;
    }
    return twisted;
  }
  if (const auto* bi = std::get_if<InfHomBialgebra>(&base.structure)) {
    if (beta && *beta != alpha) {
      throw InvalidParameterError("infinitesimal bialgebra twists take a single map");
    }
    if (!bi->alpha.is_identity()) throw PreconditionError("base bialgebra is classical");
    return yau_twist_inf_bialgebra(bi->mu, bi->delta, alpha);
  }
  throw InvalidParameterError("cannot twist a linear map entry");
}

}  // namespace bihom
