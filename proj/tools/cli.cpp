#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "bihom/constructions.hpp"
#include "bihom/discovery.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "bihom/theorems.hpp"

namespace bihom::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string law;
  std::string file;
  std::string recipe;
  std::vector<std::string> files;
  std::string output;
  std::string theorem;
  std::string op, r, sigma, tau, eta, alpha, beta, kind;
  std::optional<unsigned> n;
  std::string part = "dendriform";
  bool negate_r = false;
  bool all_catalogue = false;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  std::string id;
  std::string out_dir;
};

using io::Document;
using io::DocumentKind;

Document load(const std::string& path) { return io::read_document(path); }

LinearMap load_map(const std::string& path, std::size_t dim) {
  Document d = load(path);
  if (d.kind != DocumentKind::linear_map) {
    throw UsageError(path + ": expected a linear-map document, got " + io::to_string(d.kind));
  }
  LinearMap f = std::get<LinearMap>(d.payload);
  if (f.dim_in() != dim || f.dim_out() != dim) {
    throw UsageError(path + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                     " map");
  }
  return f;
}

Tensor2 load_tensor(const std::string& path, std::size_t dim) {
  Document d = load(path);
  if (d.kind != DocumentKind::tensor2) {
    throw UsageError(path + ": expected a tensor2 document, got " + io::to_string(d.kind));
  }
  Tensor2 t = std::get<Tensor2>(d.payload);
  if (t.dim() != dim) throw UsageError(path + ": tensor dimension does not match");
  return t;
}

std::optional<LinearMap> flag_map(const std::string& path, std::size_t dim) {
  if (path.empty()) return std::nullopt;
  return load_map(path, dim);
}

std::size_t doc_dim(const Document& d) {
  return std::visit(
      [](const auto& p) -> std::size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, io::BialgebraPayload>) {
          return p.bialgebra.dim();
        } else if constexpr (std::is_same_v<T, LinearMap>) {
          return p.dim_in();
        } else if constexpr (std::is_same_v<T, io::SearchDocument> ||
                             std::is_same_v<T, TheoremReport>) {
          return 0;
        } else {
          return p.dim();
        }
      },
      d.payload);
}

BiHomAlgebra as_algebra(const Document& d, const std::string& path) {
  if (const auto* a = std::get_if<BiHomAlgebra>(&d.payload)) return *a;
  if (const auto* b = std::get_if<io::BialgebraPayload>(&d.payload)) {
    return {b->bialgebra.mu, b->bialgebra.alpha, b->bialgebra.alpha, std::nullopt};
  }
  throw UsageError(path + ": expected an algebra document, got " + io::to_string(d.kind));
}

HomAlgebra as_hom(const Document& d, const std::string& path) {
  const BiHomAlgebra a = as_algebra(d, path);
  if (a.alpha != a.beta) throw UsageError(path + ": expected a Hom algebra (alpha = beta)");
  return {a.mu, a.alpha};
}

template <class T>
const T& payload_as(const Document& d, const std::string& path, DocumentKind kind) {
  if (const auto* p = std::get_if<T>(&d.payload)) return *p;
  throw UsageError(path + ": expected a " + io::to_string(kind) + " document, got " +
                   io::to_string(d.kind));
}

unsigned need_n(const Options& o, const char* what) {
  if (!o.n) throw UsageError(std::string(what) + " needs --n");
  return *o.n;
}

// ----------------------------------------------------------------- check

// Bilinear operation a map-valued law is checked against.
BilinearOp operation_of(const Document& d, const std::string& path) {
  if (const auto* l = std::get_if<HomLie>(&d.payload)) return l->bracket;
  if (const auto* p = std::get_if<HomPreLie>(&d.payload)) return p->mu;
  return as_algebra(d, path).mu;
}

LinearMap structure_alpha(const Document& d, const Options& o, std::size_t n) {
  if (auto f = flag_map(o.alpha, n)) return *f;
  if (const auto* l = std::get_if<HomLie>(&d.payload)) return l->alpha;
  if (const auto* p = std::get_if<HomPreLie>(&d.payload)) return p->alpha;
  return as_algebra(d, o.file).alpha;
}

LinearMap structure_beta(const Document& d, const Options& o, std::size_t n) {
  if (auto f = flag_map(o.beta, n)) return *f;
  return as_algebra(d, o.file).beta;
}

RotaBaxterKind rb_kind(const Document& d, const Options& o, std::size_t n) {
  const LinearMap id = LinearMap::identity(n);
  const std::string kind = o.kind.empty() ? "paren" : o.kind;
  if (kind == "paren") {
    return ParenRotaBaxter{flag_map(o.sigma, n).value_or(id), flag_map(o.tau, n).value_or(id)};
  }
  if (kind == "brace") {
    return BraceRotaBaxter{flag_map(o.sigma, n).value_or(id), flag_map(o.tau, n).value_or(id)};
  }
  if (kind == "alpha-power") {
    return AlphaPowerRotaBaxter{structure_alpha(d, o, n), need_n(o, "alpha-power kind")};
  }
  if (kind == "alpha-beta") {
    return AlphaBetaRotaBaxter{structure_alpha(d, o, n), structure_beta(d, o, n)};
  }
  if (kind == "lie-alpha-power") {
    return LieAlphaPowerRotaBaxter{structure_alpha(d, o, n), need_n(o, "lie-alpha-power kind")};
  }
  throw UsageError("unknown Rota-Baxter kind \"" + kind + "\"");
}

DerivationKind derivation_kind(const Document& d, const Options& o, std::size_t n) {
  const LinearMap id = LinearMap::identity(n);
  const std::string kind = o.kind.empty() ? "twisted" : o.kind;
  if (kind == "twisted") {
    return TwistedDerivation{flag_map(o.tau, n).value_or(id), flag_map(o.sigma, n).value_or(id)};
  }
  if (kind == "alpha-power") {
    return AlphaPowerDerivation{structure_alpha(d, o, n), need_n(o, "alpha-power kind")};
  }
  throw UsageError("unknown derivation kind \"" + kind + "\"");
}

HomCoalgebra as_coalgebra(const Document& d, const std::string& path) {
  if (const auto* c = std::get_if<HomCoalgebra>(&d.payload)) return *c;
  if (const auto* b = std::get_if<io::BialgebraPayload>(&d.payload)) {
    return b->bialgebra.coalgebra();
  }
  throw UsageError(path + ": expected a coalgebra document");
}

CheckVerdict run_check(const Options& o, const Document& d) {
  const std::string& p = o.file;
  const std::size_t n = doc_dim(d);
  const std::map<std::string, std::function<CheckVerdict()>> laws{
      {"bihom-assoc", [&] { return check_bihom_associative(as_algebra(d, p)); }},
      {"hom-assoc", [&] { return check_hom_associative(as_hom(d, p)); }},
      {"assoc", [&] { return check_associative(operation_of(d, p)); }},
      {"commutative", [&] { return check_commutative(operation_of(d, p)); }},
      {"hom-coassoc", [&] { return check_hom_coassociative(as_coalgebra(d, p)); }},
      {"inf-hom-bialgebra",
       [&] {
         return validate_inf_hom_bialgebra(
             payload_as<io::BialgebraPayload>(d, p, DocumentKind::inf_hom_bialgebra).bialgebra);
       }},
      {"dendriform",
       [&] {
         return check_bihom_dendriform(
             payload_as<BiHomDendriform>(d, p, DocumentKind::dendriform));
       }},
      {"hom-prelie",
       [&] { return check_hom_prelie(payload_as<HomPreLie>(d, p, DocumentKind::hom_prelie)); }},
      {"hom-novikov",
       [&] { return check_hom_novikov(payload_as<HomPreLie>(d, p, DocumentKind::hom_prelie)); }},
      {"hom-lie",
       [&] { return check_hom_lie(payload_as<HomLie>(d, p, DocumentKind::hom_lie)); }},
      {"aybe",
       [&] {
         if (o.r.empty()) throw UsageError("aybe needs --r");
         return check_aybe(as_algebra(d, p), load_tensor(o.r, n));
       }},
      {"rota-baxter",
       [&] {
         if (o.op.empty()) throw UsageError("rota-baxter needs --op");
         return check_rota_baxter(load_map(o.op, n), operation_of(d, p), rb_kind(d, o, n));
       }},
      {"derivation",
       [&] {
         if (o.op.empty()) throw UsageError("derivation needs --op");
         return check_derivation(load_map(o.op, n), operation_of(d, p),
                                 derivation_kind(d, o, n));
       }},
      {"algebra-map",
       [&] {
         if (o.op.empty()) throw UsageError("algebra-map needs --op");
         return is_algebra_map(load_map(o.op, n), operation_of(d, p));
       }},
      {"coalgebra-map",
       [&] {
         if (o.op.empty()) throw UsageError("coalgebra-map needs --op");
         return is_coalgebra_map(load_map(o.op, n), as_coalgebra(d, p).delta);
       }},
  };
  auto it = laws.find(o.law);
  if (it == laws.end()) {
    std::string known;
    for (const auto& [name, _] : laws) known += (known.empty() ? "" : ", ") + name;
    throw UsageError("unknown law \"" + o.law + "\" (known: " + known + ")");
  }
  return it->second();
}

int cmd_check(const Options& o, std::ostream& out) {
  const Document d = load(o.file);
  const CheckVerdict v = run_check(o, d);
  out << io::verdict_json(o.law, v, d.basis) << "\n";
  return v.passed() ? kPass : kFail;
}

// ------------------------------------------------------------- construct

const std::string& file_at(const Options& o, std::size_t i, const char* what) {
  if (i >= o.files.size()) {
    throw UsageError("recipe " + o.recipe + " needs " + std::string(what) + " as input " +
                     std::to_string(i + 1));
  }
  return o.files[i];
}

void expect_inputs(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.files.size() < lo || o.files.size() > hi) {
    throw UsageError("recipe " + o.recipe + " takes " + std::to_string(lo) +
                     (hi == lo ? "" : "-" + std::to_string(hi)) + " input files");
  }
}

Document run_construct(const Options& o) {
  const std::string& r = o.recipe;
  const std::string& base_path = file_at(o, 0, "a structure document");
  const Document base = load(base_path);
  const std::size_t n = doc_dim(base);
  auto map_at = [&](std::size_t i, const char* what) { return load_map(file_at(o, i, what), n); };

  if (r == "yau-twist") {
    expect_inputs(o, 2, 3);
    const LinearMap alpha = map_at(1, "alpha");
    const LinearMap beta = o.files.size() > 2 ? map_at(2, "beta") : alpha;
    switch (base.kind) {
      case DocumentKind::algebra:
        return io::algebra_document(
            yau_twist_assoc(std::get<BiHomAlgebra>(base.payload).mu, alpha, beta), base.basis);
      case DocumentKind::dendriform:
        return io::dendriform_document(
            yau_twist_dendriform(std::get<BiHomDendriform>(base.payload), alpha, beta),
            base.basis);
      case DocumentKind::hom_prelie: {
        const auto& p = std::get<HomPreLie>(base.payload);
        if (!p.alpha.is_identity()) throw PreconditionError("input pre-Lie algebra is classical");
        if (alpha != beta) throw UsageError("pre-Lie twists take a single map");
        return io::prelie_document(yau_twist_prelie(p.mu, alpha), base.basis);
      }
      case DocumentKind::inf_hom_bialgebra: {
        const auto& b = std::get<io::BialgebraPayload>(base.payload).bialgebra;
        if (!b.alpha.is_identity()) throw PreconditionError("input bialgebra is classical");
        if (alpha != beta) throw UsageError("bialgebra twists take a single map");
        return io::bialgebra_document(yau_twist_inf_bialgebra(b.mu, b.delta, alpha),
                                      std::nullopt, base.basis);
      }
      default:
        throw UsageError("cannot twist a " + io::to_string(base.kind) + " document");
    }
  }
  if (r == "dendriform-sum" || r == "dendriform-circ") {
    expect_inputs(o, 1, 1);
    const auto& d = payload_as<BiHomDendriform>(base, base_path, DocumentKind::dendriform);
    if (r == "dendriform-sum") return io::algebra_document(dendriform_sum(d), base.basis);
    return io::prelie_document(dendriform_circ(d), base.basis);
  }
  if (r == "dendriform-from-rb") {
    expect_inputs(o, 4, 4);
    return io::dendriform_document(
        dendriform_from_paren_rb(as_algebra(base, base_path).mu, map_at(1, "sigma"),
                                 map_at(2, "tau"), map_at(3, "R")),
        base.basis);
  }
  if (r == "simprop") {
    expect_inputs(o, 4, 5);
    const LinearMap eta = o.files.size() > 4 ? map_at(4, "eta") : LinearMap::identity(n);
    return io::dendriform_document(simprop_dendriform(as_algebra(base, base_path),
                                                      map_at(1, "sigma"), map_at(2, "tau"), eta,
                                                      map_at(3, "R")),
                                   base.basis);
  }
  if (r == "moregendend") {
    expect_inputs(o, 2, 2);
    const DendriformTriple t =
        moregendend_triple(as_hom(base, base_path), need_n(o, "moregendend"), map_at(1, "R"));
    if (o.part == "dendriform") return io::dendriform_document(t.dendriform, base.basis);
    if (o.part == "sum") return io::algebra_document(t.sum.as_bihom(), base.basis);
    if (o.part == "circ") return io::prelie_document(t.circ, base.basis);
    throw UsageError("--part must be dendriform, sum or circ");
  }
  if (r == "analoglie") {
    expect_inputs(o, 2, 2);
    return io::prelie_document(
        analoglie_prelie(payload_as<HomLie>(base, base_path, DocumentKind::hom_lie),
                         need_n(o, "analoglie"), map_at(1, "R")),
        base.basis);
  }
  if (r == "abrb") {
    expect_inputs(o, 2, 2);
    return io::map_document(
        abrb_operator(as_algebra(base, base_path), load_tensor(file_at(o, 1, "r"), n)));
  }
  if (r == "gengd") {
    expect_inputs(o, 2, 2);
    return io::prelie_document(
        gengd_novikov(as_hom(base, base_path), need_n(o, "gengd"), map_at(1, "D")), base.basis);
  }
  if (r == "mu-delta" || r == "bullet") {
    expect_inputs(o, 1, 1);
    const auto& b =
        payload_as<io::BialgebraPayload>(base, base_path, DocumentKind::inf_hom_bialgebra)
            .bialgebra;
    if (r == "mu-delta") return io::map_document(mu_delta_map(b));
    return io::prelie_document(infprelie_bullet(b), base.basis);
  }
  if (r == "delta-r") {
    expect_inputs(o, 2, 2);
    const HomAlgebra h = as_hom(base, base_path);
    Tensor2 t = load_tensor(file_at(o, 1, "r"), n);
    const Comultiplication delta = delta_r(h, t, o.negate_r);
    if (o.negate_r) t = Scalar(-1) * t;
    return io::bialgebra_document({h.mu, delta, h.alpha}, t, base.basis);
  }
  throw UsageError("unknown recipe \"" + r + "\"");
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Document d = run_construct(o);
  if (o.output.empty() || o.output == "-") {
    out << io::serialize(d);
  } else {
    io::write_document(o.output, d);
  }
  return kPass;
}

// ---------------------------------------------------------------- search

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const Document d = load(o.file);
  if (d.kind != DocumentKind::search_spec) {
    throw UsageError(o.file + ": expected a search-spec document, got " + io::to_string(d.kind));
  }
  const auto& doc = std::get<io::SearchDocument>(d.payload);
  SearchSpec spec = doc.spec;
  if (o.budget) spec.budget = *o.budget;
  if (o.threads) spec.threads = o.threads;
  std::size_t count = 0;
  search_stream(spec, doc.resolve_ambient(), [&](const Found& f) {
    out << io::found_json(f) << "\n" << std::flush;
    ++count;
  });
  err << count << " certified result" << (count == 1 ? "" : "s") << "\n";
  return kPass;
}

// -------------------------------------------------------- verify-theorem

TheoremInstance instance_from(const Options& o, TheoremId id) {
  TheoremInstance in;
  in.description = o.files.empty() ? std::string("command line instance") : o.files.front();
  if (o.files.size() > 1) throw UsageError("verify-theorem takes at most one structure file");
  std::size_t n = 0;
  if (!o.files.empty()) {
    const Document d = load(o.files.front());
    n = doc_dim(d);
    switch (d.kind) {
      case DocumentKind::algebra:
      case DocumentKind::bihom_algebra:
        in.algebra = std::get<BiHomAlgebra>(d.payload);
        break;
      case DocumentKind::inf_hom_bialgebra: {
        const auto& b = std::get<io::BialgebraPayload>(d.payload);
        in.algebra = BiHomAlgebra{b.bialgebra.mu, b.bialgebra.alpha, b.bialgebra.alpha,
                                  std::nullopt};
        in.delta = b.bialgebra.delta;
        in.r = b.r;
        break;
      }
      case DocumentKind::dendriform:
        in.dendriform = std::get<BiHomDendriform>(d.payload);
        break;
      case DocumentKind::hom_lie:
        in.lie = std::get<HomLie>(d.payload);
        break;
      default:
        throw UsageError(o.files.front() + ": cannot build a theorem instance from a " +
                         io::to_string(d.kind) + " document");
    }
  }
  if (n == 0) throw UsageError("verify-theorem needs a structure file or --all-catalogue");
  in.sigma = flag_map(o.sigma, n);
  in.tau = flag_map(o.tau, n);
  in.eta = flag_map(o.eta, n);
  in.op = flag_map(o.op, n);
  in.twist_alpha = flag_map(o.alpha, n);
  in.twist_beta = flag_map(o.beta, n);
  if (!o.r.empty()) in.r = load_tensor(o.r, n);
  if (o.n) in.exponent = *o.n;
  if (id == TheoremId::T11 && !in.twist_alpha) in.twist_alpha = LinearMap::identity(n);
  return in;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const TheoremId id = parse_theorem_id(o.theorem);
  std::vector<TheoremInstance> instances;
  if (o.all_catalogue) {
    if (!o.files.empty()) throw UsageError("--all-catalogue takes no structure file");
    instances = catalogue_instances(id);
  } else {
    instances.push_back(instance_from(o, id));
  }
  if (o.negate_r)
    for (auto& in : instances) in.negate_r = true;
  const auto reports = verify_theorems(id, instances, o.threads);
  std::size_t passed = 0;
  bool precondition = false;
  for (const auto& r : reports) {
    out << io::report_json(r) << "\n";
    passed += r.passed ? 1 : 0;
    precondition = precondition || r.failed_precondition.has_value();
  }
  err << to_string(id) << ": " << passed << "/" << reports.size() << " instances passed\n";
  if (precondition) return kPrecondition;
  return passed == reports.size() ? kPass : kFail;
}

// ------------------------------------------------------------- catalogue

std::string kind_of(const CatalogueEntry& e) {
  return io::to_string(io::catalogue_document(e).kind);
}

int cmd_catalogue(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.id.empty()) {
    out << io::serialize(io::catalogue_document(catalogue_entry(o.id)));
    return kPass;
  }
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (const auto& e : catalogue()) {
      const auto path = std::filesystem::path(o.out_dir) / (e.id + ".json");
      io::write_document(path, io::catalogue_document(e));
      err << path.string() << "\n";
    }
    return kPass;
  }
  for (const auto& e : catalogue()) {
    out << e.id << "\t" << kind_of(e) << "\t" << (e.negative_control ? "negative control; " : "")
        << e.provenance << "\n";
  }
  return kPass;
}

void add_map_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--op", o.op, "linear-map document: the operator R or D");
  cmd->add_option("--r", o.r, "tensor2 document");
  cmd->add_option("--sigma", o.sigma, "linear-map document");
  cmd->add_option("--tau", o.tau, "linear-map document");
  cmd->add_option("--alpha", o.alpha, "linear-map document");
  cmd->add_option("--beta", o.beta, "linear-map document");
  cmd->add_option("--n", o.n, "exponent n or k");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checkers, constructions and searches for BiHom and Hom structures", "bihom"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "check one law; exit 0 on pass, 1 on failure");
  check->add_option("law", o.law, "law to check")->required();
  check->add_option("file", o.file, "structure document")->required();
  add_map_flags(check, o);
  check->add_option("--kind", o.kind, "Rota-Baxter or derivation kind");

  auto* construct = app.add_subcommand("construct", "run a construction");
  construct->add_option("recipe", o.recipe, "construction to run")->required();
  construct->add_option("files", o.files, "input documents")->required();
  construct->add_option("-o,--output", o.output, "output file (stdout by default)");
  construct->add_option("--n", o.n, "exponent n or k");
  construct->add_option("--part", o.part, "moregendend output: dendriform, sum or circ");
  construct->add_flag("--negate-r", o.negate_r, "use -r in delta-r");

  auto* search = app.add_subcommand("search", "stream certified search results as JSON lines");
  search->add_option("spec", o.file, "search-spec document")->required();
  search->add_option("--budget", o.budget, "maximum number of candidates");
  search->add_option("--threads", o.threads, "worker threads");

  auto* verify = app.add_subcommand("verify-theorem", "print one report per instance");
  verify->add_option("theorem", o.theorem, "T1..T12")->required();
  verify->add_option("files", o.files, "structure document");
  verify->add_flag("--all-catalogue", o.all_catalogue, "run the built-in instance list");
  verify->add_flag("--negate-r", o.negate_r, "use the opposite sign convention for delta_r");
  verify->add_option("--eta", o.eta, "linear-map document");
  verify->add_option("--threads", o.threads, "worker threads");
  add_map_flags(verify, o);

  auto* cat = app.add_subcommand("catalogue", "list or export the built-in examples");
  cat->add_option("--id", o.id, "print one entry as a document");
  cat->add_option("--out-dir", o.out_dir, "write every entry to <dir>/<id>.json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (search->parsed()) return cmd_search(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (cat->parsed()) return cmd_catalogue(o, out, err);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.hypothesis() << "\n" << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalInconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bihom::cli
