#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bihom/constructions.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"

namespace bihom::io {
namespace {

const CatalogueEntry& entry(const char* id) { return catalogue_entry(id); }
LinearMap id(std::size_t n) { return LinearMap::identity(n); }

std::string parse_error_path(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

std::string wrap(const std::string& kind, const std::string& payload) {
  return R"({"schema_version":"1","kind":")" + kind +
         R"(","convention":"columns-are-images","payload":)" + payload + "}";
}

// Serialize, parse, serialize again: the text must be stable.
void expect_round_trip(const Document& doc) {
  const std::string once = serialize(doc);
  const Document back = parse_document(once);
  EXPECT_EQ(back.kind, doc.kind);
  EXPECT_EQ(serialize(back), once);
}

TEST(RoundTrip, CatalogueEntries) {
  for (const auto& e : catalogue()) {
    SCOPED_TRACE(e.id);
    const Document doc = catalogue_document(e);
    expect_round_trip(doc);
    const Document back = parse_document(serialize(doc));
    if (const auto* a = std::get_if<BiHomAlgebra>(&e.structure)) {
      const auto& b = std::get<BiHomAlgebra>(back.payload);
      EXPECT_EQ(b.mu, a->mu);
      EXPECT_EQ(b.alpha, a->alpha);
      EXPECT_EQ(back.basis, e.basis);
    } else if (const auto* m = std::get_if<LinearMap>(&e.structure)) {
      EXPECT_EQ(std::get<LinearMap>(back.payload), *m);
    } else {
      const auto& p = std::get<BialgebraPayload>(back.payload);
      EXPECT_EQ(p.bialgebra.delta, e.bialgebra().delta);
      EXPECT_EQ(p.r, e.r);
    }
  }
}

TEST(RoundTrip, EveryKind) {
  const auto& m2 = entry("m2").algebra();
  const auto& n2 = entry("n2").algebra();
  const auto& bi = entry("dx2-infbialg").bialgebra();
  expect_round_trip(algebra_document(yau_twist_assoc(m2.mu, entry("conj_d").map(), id(4))));
  expect_round_trip(coalgebra_document({bi.delta, bi.alpha}));
  expect_round_trip(bialgebra_document(bi));
  expect_round_trip(dendriform_document({m2.mu, BilinearOp(4), id(4), id(4)}));
  expect_round_trip(prelie_document({n2.mu, entry("sgn").map()}));
  expect_round_trip(lie_document(HomLie{m2.mu - opposite(m2.mu), id(4)}));
  expect_round_trip(map_document(LinearMap::diagonal({Scalar(1, 2), Scalar(-3)})));
  Tensor2 r(2);
  r(1, 1) = Scalar(-7, 3);
  expect_round_trip(tensor_document(r));
  EXPECT_EQ(std::get<Tensor2>(parse_document(serialize(tensor_document(r))).payload), r);

  TheoremInstance in;
  in.description = "diag(1,2) on n2";
  in.algebra = n2;
  in.sigma = id(2);
  in.tau = id(2);
  in.op = LinearMap::diagonal({Scalar(1), Scalar(2)});
  expect_round_trip(report_document(verify_theorem(TheoremId::T4, in)));
  in.op = LinearMap::zero(2);
  const TheoremReport failed = verify_theorem(TheoremId::T4, in);
  const Document rd = report_document(failed);
  expect_round_trip(rd);
  const Document parsed = parse_document(serialize(rd));
  const auto& back = std::get<TheoremReport>(parsed.payload);
  EXPECT_FALSE(back.passed);
  EXPECT_EQ(back.failed_precondition, failed.failed_precondition);
  EXPECT_EQ(back.sub_verdicts.size(), failed.sub_verdicts.size());
}

TEST(RoundTrip, SearchSpec) {
  const std::string text = wrap("search-spec", R"({
    "ambient": "n2", "target": "rota-baxter",
    "kind": {"type": "brace", "sigma": [["-1","0"],["0","1"]], "tau": [["1","0"],["0","1"]]},
    "coefficients": ["0", "1", "1/2"], "support": [[0,0],[1,1]], "budget": 1000})");
  const Document doc = parse_document(text);
  const auto& s = std::get<SearchDocument>(doc.payload);
  EXPECT_EQ(s.ambient_id, "n2");
  EXPECT_EQ(s.spec.target, SearchTarget::rota_baxter);
  ASSERT_TRUE(s.spec.rb_kind.has_value());
  EXPECT_EQ(std::get<BraceRotaBaxter>(*s.spec.rb_kind).sigma, entry("sgn").map());
  EXPECT_EQ(s.spec.coefficients.size(), 3u);
  EXPECT_EQ(s.spec.coefficients[2], Scalar(1, 2));
  EXPECT_EQ(s.spec.budget, 1000u);
  EXPECT_EQ(s.resolve_ambient().mu, entry("n2").algebra().mu);
  expect_round_trip(doc);

  const Document embedded = parse_document(wrap(
      "search-spec", R"({"ambient": )" + serialize(catalogue_document(entry("dx2"))) +
                         R"(, "target": "aybe"})"));
  const auto& e = std::get<SearchDocument>(embedded.payload);
  ASSERT_TRUE(e.ambient.has_value());
  EXPECT_EQ(e.resolve_basis(), entry("dx2").basis);
  expect_round_trip(embedded);
}

TEST(Defaults, SearchSpecAndBasis) {
  const Document doc = parse_document(wrap("search-spec", R"({"ambient":"dx2","target":"aybe"})"));
  const auto& s = std::get<SearchDocument>(doc.payload);
  EXPECT_EQ(s.spec.coefficients, (std::vector<Scalar>{Scalar(-1), Scalar(0), Scalar(1)}));
  EXPECT_EQ(s.spec.max_dim, 4u);
  EXPECT_FALSE(s.spec.support.has_value());
  EXPECT_EQ(default_basis(3), (std::vector<std::string>{"e0", "e1", "e2"}));
  const Document a =
      parse_document(wrap("algebra", R"({"dim":1,"mu":[[["1"]]]})"));
  EXPECT_EQ(a.basis, default_basis(1));
  EXPECT_TRUE(std::get<BiHomAlgebra>(a.payload).alpha.is_identity());
}

TEST(Parse, AcceptsBareIntegers) {
  const Document d = parse_document(wrap("linear-map", R"({"dim_in":1,"dim_out":1,"matrix":[[3]]})"));
  EXPECT_EQ(std::get<LinearMap>(d.payload)(0, 0), Scalar(3));
}

TEST(ParseErrors, NameAJsonPointer) {
  const std::string good_mu = R"([[["0","1"],["0","0"]],[["0","0"],["0","0"]]])";
  EXPECT_EQ(parse_error_path(wrap("algebra", R"({"dim":2,"mu":[[["2/4","1"],["0","0"]],[["0","0"],["0","0"]]]})")),
            "/payload/mu/0/0/0");
  EXPECT_EQ(parse_error_path(wrap("algebra", R"({"dim":2,"mu":[[["0","1"],["0"]],[["0","0"],["0","0"]]]})")),
            "/payload/mu/0/1");
  EXPECT_EQ(parse_error_path(wrap("algebra", R"({"dim":2,"extra":1,"mu":)" + good_mu + "}")),
            "/payload/extra");
  EXPECT_EQ(parse_error_path(wrap("algebra", R"({"dim":2})")), "/payload");
  EXPECT_EQ(parse_error_path(wrap("widget", R"({})")), "/kind");
  EXPECT_EQ(parse_error_path(R"({"schema_version":"2","kind":"algebra","convention":"columns-are-images","payload":{}})"),
            "/schema_version");
  EXPECT_EQ(parse_error_path(R"({"schema_version":"1","kind":"algebra","convention":"rows-are-images","payload":{}})"),
            "/convention");
  EXPECT_EQ(parse_error_path(wrap("linear-map", R"({"dim_in":2,"dim_out":2,"matrix":[["1","0"],["0","x"]]})")),
            "/payload/matrix/1/1");
  EXPECT_EQ(parse_error_path(wrap("search-spec", R"({"ambient":"nope","target":"aybe"})")),
            "/payload/ambient");
  EXPECT_EQ(parse_error_path(wrap("search-spec", R"({"ambient":"n2","target":"aybe","coefficients":["1","1"]})")),
            "/payload/coefficients/1");
  EXPECT_EQ(parse_error_path(wrap("search-spec", R"({"ambient":"n2","target":"rota-baxter"})")),
            "/payload/kind");
  EXPECT_EQ(parse_error_path(wrap("search-spec", R"({"ambient":"n2","target":"aybe","support":[[0,5]]})")),
            "/payload/support/0");
  EXPECT_EQ(parse_error_path("{not json"), "");
  EXPECT_EQ(parse_error_path("[]"), "");
}

TEST(ParseErrors, MessagesAreSpecific) {
  try {
    parse_document(wrap("linear-map", R"({"dim_in":1,"dim_out":1,"matrix":[["2/4"]]})"));
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("lowest terms"), std::string::npos) << e.what();
  }
}

TEST(Canonicalize, SortsKeysAndIsIdempotent) {
  const std::string text = wrap("linear-map", R"({"matrix":[["1"]],"dim_out":1,"dim_in":1})");
  const std::string c = canonicalize(text);
  EXPECT_EQ(canonicalize(c), c);
  EXPECT_EQ(c.back(), '\n');
  EXPECT_LT(c.find("\"convention\""), c.find("\"kind\""));
  EXPECT_LT(c.find("\"dim_in\""), c.find("\"matrix\""));
  EXPECT_EQ(c, serialize(parse_document(text)));
}

TEST(Files, WriteThenRead) {
  const auto dir = std::filesystem::temp_directory_path() / "bihom_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m2-qt.json";
  write_document(path, catalogue_document(entry("m2-qt")));
  const Document back = read_document(path);
  EXPECT_EQ(back.kind, DocumentKind::inf_hom_bialgebra);
  EXPECT_EQ(std::get<BialgebraPayload>(back.payload).r, entry("m2-qt").r);
  EXPECT_THROW(read_document(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST(Json, CompactForms) {
  const CheckVerdict v = check_associative(entry("na2").algebra().mu);
  const std::string j = verdict_json("assoc", v, entry("na2").basis);
  EXPECT_EQ(j.find('\n'), std::string::npos);
  EXPECT_NE(j.find("\"passed\":false"), std::string::npos) << j;
  EXPECT_NE(j.find("\"u\",\"u\",\"u\""), std::string::npos) << j;
  EXPECT_NE(verdict_json("assoc", CheckVerdict::pass(), {}).find("\"passed\":true"),
            std::string::npos);
  const std::string f = found_json(Found{5, LinearMap::identity(1)});
  EXPECT_EQ(f.find('\n'), std::string::npos);
  EXPECT_NE(f.find("5"), std::string::npos);
}

}  // namespace
}  // namespace bihom::io
