#include "bihom/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "bihom/errors.hpp"
#include "json.hpp"

namespace bihom::io {

namespace {

using json = nlohmann::json;

constexpr std::size_t kMaxDim = 64;

std::string child(const std::string& path, std::string_view key) {
  std::string out = path + "/";
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path, message);
}

const char* type_name(const json& j) { return j.type_name(); }

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, std::string("expected an object, got ") + type_name(j));
}

void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, std::string("expected an array, got ") + type_name(j));
}

// Object reader that rejects unknown keys once every known key was asked for.
class Fields {
 public:
  Fields(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    expect_object(obj_, path_);
  }

  const json& required(std::string_view key) {
    known_.insert(std::string(key));
    auto it = obj_.find(std::string(key));
    if (it == obj_.end()) fail(path_, "missing field \"" + std::string(key) + "\"");
    return *it;
  }

  const json* optional(std::string_view key) {
    known_.insert(std::string(key));
    auto it = obj_.find(std::string(key));
    return it == obj_.end() ? nullptr : &*it;
  }

  std::string path(std::string_view key) const { return child(path_, key); }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!known_.count(it.key())) fail(child(path_, it.key()), "unknown field");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> known_;
};

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, std::string("expected a string, got ") + type_name(j));
  return j.get<std::string>();
}

bool read_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, std::string("expected a boolean, got ") + type_name(j));
  return j.get<bool>();
}

std::uint64_t read_unsigned(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) fail(path, "expected a non-negative integer");
  fail(path, std::string("expected an integer, got ") + type_name(j));
}

std::size_t read_dim(const json& j, const std::string& path) {
  const std::uint64_t n = read_unsigned(j, path);
  if (n == 0 || n > kMaxDim) {
    fail(path, "dimension must be between 1 and " + std::to_string(kMaxDim));
  }
  return static_cast<std::size_t>(n);
}

Scalar read_scalar(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return Scalar::parse(std::to_string(j.get<std::uint64_t>()));
    }
    return Scalar(j.get<std::int64_t>());
  }
  fail(path, std::string("expected a scalar string \"p/q\", got ") + type_name(j));
}

void expect_length(const json& j, const std::string& path, std::size_t n) {
  expect_array(j, path);
  if (j.size() != n) {
    fail(path, "dimension mismatch: expected " + std::to_string(n) + " entries, got " +
                   std::to_string(j.size()));
  }
}

Vector read_vector(const json& j, const std::string& path, std::size_t n) {
  expect_length(j, path, n);
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(read_scalar(j[i], child(path, i)));
  return v;
}

LinearMap read_matrix(const json& j, const std::string& path, std::size_t rows,
                      std::size_t cols) {
  expect_length(j, path, rows);
  LinearMap f(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector row = read_vector(j[i], child(path, i), cols);
    for (std::size_t c = 0; c < cols; ++c) f(i, c) = row[c];
  }
  return f;
}

template <class Cube>
Cube read_cube(const json& j, const std::string& path, std::size_t n) {
  expect_length(j, path, n);
  Cube cube(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::string pa = child(path, a);
    expect_length(j[a], pa, n);
    for (std::size_t b = 0; b < n; ++b) {
      const Vector v = read_vector(j[a][b], child(pa, b), n);
      for (std::size_t c = 0; c < n; ++c) cube(a, b, c) = v[c];
    }
  }
  return cube;
}

Tensor2 read_tensor(const json& j, const std::string& path, std::size_t n) {
  const LinearMap m = read_matrix(j, path, n, n);
  Tensor2 t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t(a, b) = m(a, b);
  return t;
}

std::vector<std::string> read_basis(Fields& f, std::size_t n) {
  const json* j = f.optional("basis");
  if (!j) return default_basis(n);
  const std::string path = f.path("basis");
  expect_length(*j, path, n);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = read_string((*j)[i], child(path, i));
    if (label.empty()) fail(child(path, i), "empty basis label");
    if (!seen.insert(label).second) fail(child(path, i), "duplicate basis label");
    out.push_back(std::move(label));
  }
  return out;
}

// ------------------------------------------------------------- writers

json write_scalar(const Scalar& s) { return s.to_string(); }

json write_vector(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(write_scalar(s));
  return out;
}

json write_matrix(const LinearMap& f) {
  json out = json::array();
  for (std::size_t i = 0; i < f.dim_out(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.dim_in(); ++j) row.push_back(write_scalar(f(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class Cube>
json write_cube(const Cube& c) {
  const std::size_t n = c.dim();
  json out = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json plane = json::array();
    for (std::size_t b = 0; b < n; ++b) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(write_scalar(c(a, b, k)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

json write_tensor(const Tensor2& t) {
  json out = json::array();
  for (std::size_t a = 0; a < t.dim(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < t.dim(); ++b) row.push_back(write_scalar(t(a, b)));
    out.push_back(std::move(row));
  }
  return out;
}

json write_witness(const Witness& w) {
  json out;
  out["law"] = w.law;
  out["indices"] = w.indices;
  out["lhs"] = write_vector(w.lhs);
  out["rhs"] = write_vector(w.rhs);
  return out;
}

// ------------------------------------------------------- search kinds

RotaBaxterKind read_rb_kind(const json& j, const std::string& path, std::size_t n) {
  Fields f(j, path);
  const std::string type = read_string(f.required("type"), f.path("type"));
  auto m = [&](const char* key) { return read_matrix(f.required(key), f.path(key), n, n); };
  auto exp = [&](const char* key) {
    return static_cast<unsigned>(read_unsigned(f.required(key), f.path(key)));
  };
  RotaBaxterKind out;
  if (type == "paren") {
    out = ParenRotaBaxter{m("sigma"), m("tau")};
  } else if (type == "brace") {
    out = BraceRotaBaxter{m("sigma"), m("tau")};
  } else if (type == "alpha-power") {
    out = AlphaPowerRotaBaxter{m("alpha"), exp("n")};
  } else if (type == "alpha-beta") {
    out = AlphaBetaRotaBaxter{m("alpha"), m("beta")};
  } else if (type == "lie-alpha-power") {
    out = LieAlphaPowerRotaBaxter{m("alpha"), exp("n")};
  } else {
    fail(f.path("type"), "unknown Rota-Baxter kind \"" + type + "\"");
  }
  f.finish();
  return out;
}

json write_rb_kind(const RotaBaxterKind& kind) {
  return std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        json out;
        if constexpr (std::is_same_v<K, ParenRotaBaxter> || std::is_same_v<K, BraceRotaBaxter>) {
          out["type"] = std::is_same_v<K, ParenRotaBaxter> ? "paren" : "brace";
          out["sigma"] = write_matrix(k.sigma);
          out["tau"] = write_matrix(k.tau);
        } else if constexpr (std::is_same_v<K, AlphaBetaRotaBaxter>) {
          out["type"] = "alpha-beta";
          out["alpha"] = write_matrix(k.alpha);
          out["beta"] = write_matrix(k.beta);
        } else {
          out["type"] =
              std::is_same_v<K, AlphaPowerRotaBaxter> ? "alpha-power" : "lie-alpha-power";
          out["alpha"] = write_matrix(k.alpha);
          out["n"] = k.n;
        }
        return out;
      },
      kind);
}

DerivationKind read_derivation_kind(const json& j, const std::string& path, std::size_t n) {
  Fields f(j, path);
  const std::string type = read_string(f.required("type"), f.path("type"));
  auto m = [&](const char* key) { return read_matrix(f.required(key), f.path(key), n, n); };
  DerivationKind out;
  if (type == "twisted") {
    out = TwistedDerivation{m("tau"), m("sigma")};
  } else if (type == "alpha-power") {
    out = AlphaPowerDerivation{m("alpha"),
                               static_cast<unsigned>(read_unsigned(f.required("k"), f.path("k")))};
  } else {
    fail(f.path("type"), "unknown derivation kind \"" + type + "\"");
  }
  f.finish();
  return out;
}

json write_derivation_kind(const DerivationKind& kind) {
  json out;
  if (const auto* t = std::get_if<TwistedDerivation>(&kind)) {
    out["type"] = "twisted";
    out["tau"] = write_matrix(t->tau);
    out["sigma"] = write_matrix(t->sigma);
  } else {
    const auto& a = std::get<AlphaPowerDerivation>(kind);
    out["type"] = "alpha-power";
    out["alpha"] = write_matrix(a.alpha);
    out["k"] = a.k;
  }
  return out;
}

const char* target_name(SearchTarget t) {
  switch (t) {
    case SearchTarget::aybe: return "aybe";
    case SearchTarget::rota_baxter: return "rota-baxter";
    case SearchTarget::derivation: return "derivation";
    case SearchTarget::algebra_map_pair: return "algebra-map-pair";
  }
  return "";
}

// --------------------------------------------------------- documents

DocumentKind parse_kind(const json& j, const std::string& path) {
  const std::string s = read_string(j, path);
  for (DocumentKind k :
       {DocumentKind::algebra, DocumentKind::bihom_algebra, DocumentKind::hom_coalgebra,
        DocumentKind::inf_hom_bialgebra, DocumentKind::dendriform, DocumentKind::hom_prelie,
        DocumentKind::hom_lie, DocumentKind::linear_map, DocumentKind::tensor2,
        DocumentKind::search_spec, DocumentKind::report}) {
    if (to_string(k) == s) return k;
  }
  fail(path, "unknown document kind \"" + s + "\"");
}

Document parse_value(const json& root, const std::string& base);

SearchDocument parse_search(Fields& f) {
  SearchDocument doc;
  const json& amb = f.required("ambient");
  const std::string amb_path = f.path("ambient");
  std::size_t n = 0;
  if (amb.is_string()) {
    doc.ambient_id = amb.get<std::string>();
    const CatalogueEntry* entry = nullptr;
    for (const auto& e : catalogue())
      if (e.id == doc.ambient_id) entry = &e;
    if (!entry) fail(amb_path, "unknown catalogue entry \"" + doc.ambient_id + "\"");
    if (!std::holds_alternative<BiHomAlgebra>(entry->structure)) {
      fail(amb_path, "catalogue entry \"" + doc.ambient_id + "\" is not an algebra");
    }
    n = entry->algebra().dim();
  } else {
    Document inner = parse_value(amb, amb_path);
    if (inner.kind != DocumentKind::algebra && inner.kind != DocumentKind::bihom_algebra) {
      fail(amb_path, "ambient must be an algebra or bihom-algebra document");
    }
    doc.ambient = std::get<BiHomAlgebra>(inner.payload);
    doc.ambient_basis = std::move(inner.basis);
    n = doc.ambient->dim();
  }

  const std::string target = read_string(f.required("target"), f.path("target"));
  const json* kind = f.optional("kind");
  if (target == "aybe") {
    doc.spec.target = SearchTarget::aybe;
  } else if (target == "rota-baxter") {
    doc.spec.target = SearchTarget::rota_baxter;
    if (!kind) fail(f.path("kind"), "rota-baxter search needs a kind");
    doc.spec.rb_kind = read_rb_kind(*kind, f.path("kind"), n);
  } else if (target == "derivation") {
    doc.spec.target = SearchTarget::derivation;
    if (!kind) fail(f.path("kind"), "derivation search needs a kind");
    doc.spec.derivation_kind = read_derivation_kind(*kind, f.path("kind"), n);
  } else if (target == "algebra-map-pair") {
    doc.spec.target = SearchTarget::algebra_map_pair;
  } else {
    fail(f.path("target"), "unknown search target \"" + target + "\"");
  }
  if (kind && (doc.spec.target == SearchTarget::aybe ||
               doc.spec.target == SearchTarget::algebra_map_pair)) {
    fail(f.path("kind"), "target \"" + target + "\" takes no kind");
  }

  if (const json* c = f.optional("coefficients")) {
    const std::string path = f.path("coefficients");
    expect_array(*c, path);
    if (c->empty()) fail(path, "coefficient set is empty");
    doc.spec.coefficients.clear();
    std::set<Scalar> seen;
    for (std::size_t i = 0; i < c->size(); ++i) {
      Scalar s = read_scalar((*c)[i], child(path, i));
      if (!seen.insert(s).second) fail(child(path, i), "duplicate coefficient");
      doc.spec.coefficients.push_back(std::move(s));
    }
  }
  if (const json* m = f.optional("max_dim")) {
    const std::uint64_t v = read_unsigned(*m, f.path("max_dim"));
    if (v == 0 || v > 4) fail(f.path("max_dim"), "dimension cap must be between 1 and 4");
    doc.spec.max_dim = v;
  }
  if (n > doc.spec.max_dim) {
    fail(amb_path, "ambient dimension " + std::to_string(n) + " exceeds the cap " +
                       std::to_string(doc.spec.max_dim));
  }
  if (const json* s = f.optional("support")) {
    const std::string path = f.path("support");
    expect_array(*s, path);
    std::vector<std::pair<std::size_t, std::size_t>> support;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < s->size(); ++i) {
      const std::string p = child(path, i);
      expect_length((*s)[i], p, 2);
      const auto a = read_unsigned((*s)[i][0], child(p, 0));
      const auto b = read_unsigned((*s)[i][1], child(p, 1));
      if (a >= n || b >= n) fail(p, "index out of range for dimension " + std::to_string(n));
      if (!seen.emplace(a, b).second) fail(p, "duplicate support entry");
      support.emplace_back(a, b);
    }
    doc.spec.support = std::move(support);
  }
  if (const json* b = f.optional("budget")) {
    doc.spec.budget = read_unsigned(*b, f.path("budget"));
    if (doc.spec.budget == 0) fail(f.path("budget"), "budget must be positive");
  }
  return doc;
}

TheoremReport parse_report(Fields& f) {
  TheoremReport r;
  const std::string id = read_string(f.required("theorem"), f.path("theorem"));
  try {
    r.theorem = parse_theorem_id(id);
  } catch (const Error& e) {
    fail(f.path("theorem"), e.what());
  }
  r.instance_description = read_string(f.required("instance"), f.path("instance"));
  r.passed = read_bool(f.required("passed"), f.path("passed"));
  if (const json* p = f.optional("failed_precondition")) {
    r.failed_precondition = read_string(*p, f.path("failed_precondition"));
  }
  if (const json* notes = f.optional("notes")) {
    const std::string path = f.path("notes");
    expect_array(*notes, path);
    for (std::size_t i = 0; i < notes->size(); ++i)
      r.notes.push_back(read_string((*notes)[i], child(path, i)));
  }
  const json& subs = f.required("sub_verdicts");
  const std::string path = f.path("sub_verdicts");
  expect_array(subs, path);
  bool all = !subs.empty();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    Fields s(subs[i], child(path, i));
    std::string name = read_string(s.required("name"), s.path("name"));
    const bool passed = read_bool(s.required("passed"), s.path("passed"));
    const json* w = s.optional("witness");
    s.finish();
    if (passed) {
      if (w) fail(s.path("witness"), "a passing verdict has no witness");
      r.sub_verdicts.emplace_back(std::move(name), CheckVerdict::pass());
      continue;
    }
    if (!w) fail(child(path, i), "a failing verdict needs a witness");
    Fields wf(*w, s.path("witness"));
    Witness wit;
    wit.law = read_string(wf.required("law"), wf.path("law"));
    const json& idx = wf.required("indices");
    expect_array(idx, wf.path("indices"));
    for (std::size_t k = 0; k < idx.size(); ++k)
      wit.indices.push_back(read_unsigned(idx[k], child(wf.path("indices"), k)));
    auto side = [&](const char* key) {
      const json& v = wf.required(key);
      expect_array(v, wf.path(key));
      return read_vector(v, wf.path(key), v.size());
    };
    wit.lhs = side("lhs");
    wit.rhs = side("rhs");
    wf.finish();
    all = false;
    r.sub_verdicts.emplace_back(std::move(name), CheckVerdict::fail(std::move(wit)));
  }
  if (all != r.passed) fail(f.path("passed"), "does not match the sub-verdicts");
  return r;
}

Document parse_payload(DocumentKind kind, const json& payload, const std::string& path) {
  Fields f(payload, path);
  Document doc;
  doc.kind = kind;
  auto dim = [&] { return read_dim(f.required("dim"), f.path("dim")); };
  auto matrix = [&](const char* key, std::size_t n) {
    return read_matrix(f.required(key), f.path(key), n, n);
  };
  auto product = [&](const char* key, std::size_t n) {
    return read_cube<BilinearOp>(f.required(key), f.path(key), n);
  };
  switch (kind) {
    case DocumentKind::algebra:
    case DocumentKind::bihom_algebra: {
      const std::size_t n = dim();
      doc.basis = read_basis(f, n);
      BiHomAlgebra a{product("mu", n), LinearMap::identity(n), LinearMap::identity(n),
                     std::nullopt};
      if (kind == DocumentKind::bihom_algebra) {
        a.alpha = matrix("alpha", n);
        a.beta = matrix("beta", n);
      }
      if (const json* u = f.optional("unit")) a.unit = read_vector(*u, f.path("unit"), n);
      doc.payload = std::move(a);
      break;
    }
    case DocumentKind::hom_coalgebra: {
      const std::size_t n = dim();
      doc.basis = read_basis(f, n);
      doc.payload = HomCoalgebra{read_cube<Comultiplication>(f.required("delta"),
                                                             f.path("delta"), n),
                                 matrix("alpha", n)};
      break;
    }
    case DocumentKind::inf_hom_bialgebra: {
      const std::size_t n = dim();
      doc.basis = read_basis(f, n);
      BialgebraPayload b{{product("mu", n),
                          read_cube<Comultiplication>(f.required("delta"), f.path("delta"), n),
                          matrix("alpha", n)},
                         std::nullopt};
      if (const json* r = f.optional("r")) b.r = read_tensor(*r, f.path("r"), n);
      doc.payload = std::move(b);
      break;
    }
    case DocumentKind::dendriform: {
      const std::size_t n = dim();
      doc.basis = read_basis(f, n);
      doc.payload =
          BiHomDendriform{product("prec", n), product("succ", n), matrix("alpha", n),
                          matrix("beta", n)};
      break;
    }
    case DocumentKind::hom_prelie: {
      const std::size_t n = dim();
      doc.basis = read_basis(f, n);
      doc.payload = HomPreLie{product("mu", n), matrix("alpha", n)};
      break;
    }
    case DocumentKind::hom_lie: {
      const std::size_t n = dim();
      doc.basis = read_basis(f, n);
      doc.payload = HomLie{product("bracket", n), matrix("alpha", n)};
      break;
    }
    case DocumentKind::linear_map: {
      const std::size_t in = read_dim(f.required("dim_in"), f.path("dim_in"));
      const std::size_t out = read_dim(f.required("dim_out"), f.path("dim_out"));
      doc.payload = read_matrix(f.required("matrix"), f.path("matrix"), out, in);
      break;
    }
    case DocumentKind::tensor2: {
      const std::size_t n = dim();
      doc.payload = read_tensor(f.required("coeffs"), f.path("coeffs"), n);
      break;
    }
    case DocumentKind::search_spec:
      doc.payload = parse_search(f);
      break;
    case DocumentKind::report:
      doc.payload = parse_report(f);
      break;
  }
  f.finish();
  return doc;
}

Document parse_value(const json& root, const std::string& base) {
  Fields top(root, base);
  const std::string version =
      read_string(top.required("schema_version"), top.path("schema_version"));
  if (version != kSchemaVersion) {
    fail(top.path("schema_version"), "unsupported schema version \"" + version + "\"");
  }
  const std::string convention = read_string(top.required("convention"), top.path("convention"));
  if (convention != kConvention) {
    fail(top.path("convention"), "unsupported convention \"" + convention +
                                     "\"; expected \"" + std::string(kConvention) + "\"");
  }
  const DocumentKind kind = parse_kind(top.required("kind"), top.path("kind"));
  Document doc = parse_payload(kind, top.required("payload"), top.path("payload"));
  top.finish();
  return doc;
}

json write_report(const TheoremReport& r) {
  json p;
  p["theorem"] = to_string(r.theorem);
  p["instance"] = r.instance_description;
  p["passed"] = r.passed;
  if (r.failed_precondition) p["failed_precondition"] = *r.failed_precondition;
  p["notes"] = r.notes;
  json subs = json::array();
  for (const auto& [name, v] : r.sub_verdicts) {
    json s;
    s["name"] = name;
    s["passed"] = v.passed();
    if (!v.passed()) s["witness"] = write_witness(*v.witness());
    subs.push_back(std::move(s));
  }
  p["sub_verdicts"] = std::move(subs);
  return p;
}

json write_value(const Document& doc);

json write_search(const SearchDocument& s) {
  json p;
  if (s.ambient) {
    p["ambient"] = write_value(algebra_document(*s.ambient, s.ambient_basis));
  } else {
    p["ambient"] = s.ambient_id;
  }
  p["target"] = target_name(s.spec.target);
  if (s.spec.target == SearchTarget::rota_baxter && s.spec.rb_kind) {
    p["kind"] = write_rb_kind(*s.spec.rb_kind);
  }
  if (s.spec.target == SearchTarget::derivation && s.spec.derivation_kind) {
    p["kind"] = write_derivation_kind(*s.spec.derivation_kind);
  }
  p["coefficients"] = write_vector(s.spec.coefficients);
  p["max_dim"] = s.spec.max_dim;
  p["budget"] = s.spec.budget;
  if (s.spec.support) {
    json sup = json::array();
    for (const auto& [a, b] : *s.spec.support) sup.push_back({a, b});
    p["support"] = std::move(sup);
  }
  return p;
}

json write_payload(const Document& doc) {
  json p;
  auto common = [&](std::size_t n) {
    p["dim"] = n;
    p["basis"] = doc.basis.empty() ? default_basis(n) : doc.basis;
  };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BiHomAlgebra>) {
          common(v.dim());
          p["mu"] = write_cube(v.mu);
          if (doc.kind == DocumentKind::bihom_algebra) {
            p["alpha"] = write_matrix(v.alpha);
            p["beta"] = write_matrix(v.beta);
          }
          if (v.unit) p["unit"] = write_vector(*v.unit);
        } else if constexpr (std::is_same_v<T, HomCoalgebra>) {
          common(v.dim());
          p["delta"] = write_cube(v.delta);
          p["alpha"] = write_matrix(v.alpha);
        } else if constexpr (std::is_same_v<T, BialgebraPayload>) {
          common(v.bialgebra.dim());
          p["mu"] = write_cube(v.bialgebra.mu);
          p["delta"] = write_cube(v.bialgebra.delta);
          p["alpha"] = write_matrix(v.bialgebra.alpha);
          if (v.r) p["r"] = write_tensor(*v.r);
        } else if constexpr (std::is_same_v<T, BiHomDendriform>) {
          common(v.dim());
          p["prec"] = write_cube(v.prec);
          p["succ"] = write_cube(v.succ);
          p["alpha"] = write_matrix(v.alpha);
          p["beta"] = write_matrix(v.beta);
        } else if constexpr (std::is_same_v<T, HomPreLie>) {
          common(v.dim());
          p["mu"] = write_cube(v.mu);
          p["alpha"] = write_matrix(v.alpha);
        } else if constexpr (std::is_same_v<T, HomLie>) {
          common(v.dim());
          p["bracket"] = write_cube(v.bracket);
          p["alpha"] = write_matrix(v.alpha);
        } else if constexpr (std::is_same_v<T, LinearMap>) {
          p["dim_in"] = v.dim_in();
          p["dim_out"] = v.dim_out();
          p["matrix"] = write_matrix(v);
        } else if constexpr (std::is_same_v<T, Tensor2>) {
          p["dim"] = v.dim();
          p["coeffs"] = write_tensor(v);
        } else if constexpr (std::is_same_v<T, SearchDocument>) {
          p = write_search(v);
        } else {
          p = write_report(v);
        }
      },
      doc.payload);
  return p;
}

json write_value(const Document& doc) {
  json out;
  out["schema_version"] = std::string(kSchemaVersion);
  out["kind"] = to_string(doc.kind);
  out["convention"] = std::string(kConvention);
  out["payload"] = write_payload(doc);
  return out;
}

std::vector<std::string> labels_or_default(std::vector<std::string> basis, std::size_t n) {
  if (basis.empty()) return default_basis(n);
  if (basis.size() != n) throw ShapeError("basis has the wrong number of labels");
  return basis;
}

}  // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::algebra: return "algebra";
    case DocumentKind::bihom_algebra: return "bihom-algebra";
    case DocumentKind::hom_coalgebra: return "hom-coalgebra";
    case DocumentKind::inf_hom_bialgebra: return "inf-hom-bialgebra";
    case DocumentKind::dendriform: return "dendriform";
    case DocumentKind::hom_prelie: return "hom-prelie";
    case DocumentKind::hom_lie: return "hom-lie";
    case DocumentKind::linear_map: return "linear-map";
    case DocumentKind::tensor2: return "tensor2";
    case DocumentKind::search_spec: return "search-spec";
    case DocumentKind::report: return "report";
  }
  return "";
}

BiHomAlgebra SearchDocument::resolve_ambient() const {
  if (ambient) return *ambient;
  return catalogue_entry(ambient_id).algebra();
}

std::vector<std::string> SearchDocument::resolve_basis() const {
  if (ambient) return ambient_basis.empty() ? default_basis(ambient->dim()) : ambient_basis;
  return catalogue_entry(ambient_id).basis;
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_value(root, "");
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize(const Document& doc) { return write_value(doc).dump(2) + "\n"; }

std::string canonicalize(std::string_view text) { return serialize(parse_document(text)); }

void write_document(const std::filesystem::path& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize(doc);
}

std::vector<std::string> default_basis(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

Document algebra_document(const BiHomAlgebra& a, std::vector<std::string> basis) {
  const bool classical = a.alpha.is_identity() && a.beta.is_identity();
  return {classical ? DocumentKind::algebra : DocumentKind::bihom_algebra,
          labels_or_default(std::move(basis), a.dim()), a};
}

Document coalgebra_document(const HomCoalgebra& c, std::vector<std::string> basis) {
  return {DocumentKind::hom_coalgebra, labels_or_default(std::move(basis), c.dim()), c};
}

Document bialgebra_document(const InfHomBialgebra& b, std::optional<Tensor2> r,
                            std::vector<std::string> basis) {
  return {DocumentKind::inf_hom_bialgebra, labels_or_default(std::move(basis), b.dim()),
          BialgebraPayload{b, std::move(r)}};
}

Document dendriform_document(const BiHomDendriform& d, std::vector<std::string> basis) {
  return {DocumentKind::dendriform, labels_or_default(std::move(basis), d.dim()), d};
}

Document prelie_document(const HomPreLie& p, std::vector<std::string> basis) {
  return {DocumentKind::hom_prelie, labels_or_default(std::move(basis), p.dim()), p};
}

Document lie_document(const HomLie& l, std::vector<std::string> basis) {
  return {DocumentKind::hom_lie, labels_or_default(std::move(basis), l.dim()), l};
}

Document map_document(const LinearMap& f) { return {DocumentKind::linear_map, {}, f}; }

Document tensor_document(const Tensor2& t) { return {DocumentKind::tensor2, {}, t}; }

Document report_document(const TheoremReport& report) {
  return {DocumentKind::report, {}, report};
}

Document catalogue_document(const CatalogueEntry& entry) {
  return std::visit(
      [&](const auto& s) -> Document {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BiHomAlgebra>) {
          return algebra_document(s, entry.basis);
        } else if constexpr (std::is_same_v<T, InfHomBialgebra>) {
          return bialgebra_document(s, entry.r, entry.basis);
        } else {
          return map_document(s);
        }
      },
      entry.structure);
}

std::string witness_json(const Witness& w, const std::vector<std::string>& basis) {
  json out = write_witness(w);
  json labels = json::array();
  for (auto i : w.indices) labels.push_back(i < basis.size() ? basis[i] : "e" + std::to_string(i));
  out["basis"] = std::move(labels);
  return out.dump();
}

std::string verdict_json(std::string_view law, const CheckVerdict& v,
                         const std::vector<std::string>& basis) {
  json out;
  out["check"] = std::string(law);
  out["passed"] = v.passed();
  if (!v.passed()) out["witness"] = json::parse(witness_json(*v.witness(), basis));
  return out.dump();
}

std::string report_json(const TheoremReport& report) { return write_report(report).dump(); }

std::string found_json(const Found& found) {
  json out;
  out["candidate"] = found.candidate;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Tensor2>) {
          out["tensor2"] = write_tensor(o);
        } else if constexpr (std::is_same_v<T, LinearMap>) {
          out["matrix"] = write_matrix(o);
        } else {
          out["pair"] = {write_matrix(o.first), write_matrix(o.second)};
        }
      },
      found.object);
  return out.dump();
}

}  // namespace bihom::io
