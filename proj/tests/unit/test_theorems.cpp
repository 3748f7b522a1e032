#include <gtest/gtest.h>

#include "bihom/constructions.hpp"
#include "bihom/discovery.hpp"
#include "bihom/errors.hpp"
#include "bihom/theorems.hpp"

namespace bihom {
namespace {

const CatalogueEntry& entry(const char* id) { return catalogue_entry(id); }
LinearMap id(std::size_t n) { return LinearMap::identity(n); }

std::string describe(const TheoremReport& r) {
  std::string s = to_string(r.theorem) + " " + r.instance_description;
  for (const auto& [name, v] : r.sub_verdicts)
    if (!v.passed()) s += "\n  failed: " + name;
  return s;
}

TEST(TheoremIds, RoundTrip) {
  for (TheoremId t : kAllTheorems) EXPECT_EQ(parse_theorem_id(to_string(t)), t);
  EXPECT_EQ(to_string(TheoremId::T12), "T12");
  EXPECT_THROW(parse_theorem_id("T13"), InvalidParameterError);
  EXPECT_THROW(parse_theorem_id("t1"), InvalidParameterError);
}

class CatalogueInstances : public ::testing::TestWithParam<TheoremId> {};

TEST_P(CatalogueInstances, AllPass) {
  const auto instances = catalogue_instances(GetParam());
  ASSERT_FALSE(instances.empty());
  for (const auto& rep : verify_theorems(GetParam(), instances, 2)) {
    EXPECT_TRUE(rep.passed) << describe(rep);
    EXPECT_FALSE(rep.failed_precondition.has_value()) << describe(rep);
    EXPECT_FALSE(rep.sub_verdicts.empty());
  }
}

INSTANTIATE_TEST_SUITE_P(Theorems, CatalogueInstances, ::testing::ValuesIn(kAllTheorems),
                         [](const auto& info) { return to_string(info.param); });

TEST(VerifyTheorems, KeepsInstanceOrder) {
  const auto instances = catalogue_instances(TheoremId::T1);
  const auto reports = verify_theorems(TheoremId::T1, instances, 3);
  ASSERT_EQ(reports.size(), instances.size());
  for (std::size_t i = 0; i < reports.size(); ++i)
    EXPECT_EQ(reports[i].instance_description, instances[i].description);
}

TEST(Theorem12, QuasitriangularM2) {
  const auto& qt = entry("m2-qt");
  TheoremInstance in;
  in.description = "m2-qt";
  in.algebra = entry("m2").algebra();
  in.r = qt.r;
  in.delta = qt.bialgebra().delta;
  const TheoremReport rep = verify_theorem(TheoremId::T12, in);
  EXPECT_TRUE(rep.passed) << describe(rep);
  EXPECT_EQ(rep.theorem, TheoremId::T12);
  EXPECT_EQ(rep.instance_description, "m2-qt");
}

TEST(Theorem5, IdentityMapsOnDx2) {
  // With σ = τ = id both kinds are the weight-zero identity.
  const auto& dx2 = entry("dx2").algebra();
  for (const auto& r : find_rota_baxter(dx2.mu, ParenRotaBaxter{id(2), id(2)})) {
    TheoremInstance in;
    in.algebra = dx2;
    in.sigma = id(2);
    in.tau = id(2);
    in.op = r;
    EXPECT_TRUE(verify_theorem(TheoremId::T5, in).passed);
  }
}

TEST(Theorem4, BijectiveDerivationOnN2) {
  TheoremInstance in;
  in.algebra = entry("n2").algebra();
  in.sigma = id(2);
  in.tau = id(2);
  in.op = LinearMap::diagonal({Scalar(1), Scalar(2)});
  const TheoremReport rep = verify_theorem(TheoremId::T4, in);
  EXPECT_TRUE(rep.passed) << describe(rep);
  // Both sides hold, recorded in the notes.
  ASSERT_EQ(rep.notes.size(), 2u);
  EXPECT_NE(rep.notes[0].find("holds"), std::string::npos);
  EXPECT_NE(rep.notes[1].find("holds"), std::string::npos);
  EXPECT_TRUE(check_rota_baxter(LinearMap::diagonal({Scalar(1), Scalar(1, 2)}),
                                entry("n2").algebra().mu, ParenRotaBaxter{id(2), id(2)}));
}

TEST(Theorem4, NonDerivationStillAgrees) {
  // diag(2,1) is neither a derivation nor has a Rota-Baxter inverse.
  TheoremInstance in;
  in.algebra = entry("n2").algebra();
  in.sigma = id(2);
  in.tau = id(2);
  in.op = LinearMap::diagonal({Scalar(2), Scalar(1)});
  const TheoremReport rep = verify_theorem(TheoremId::T4, in);
  EXPECT_TRUE(rep.passed);
  EXPECT_NE(rep.notes[0].find("fails"), std::string::npos);
}

TEST(Preconditions, BecomeReports) {
  TheoremInstance in;
  in.algebra = entry("n2").algebra();
  in.sigma = id(2);
  in.tau = id(2);
  in.op = LinearMap::zero(2);
  const TheoremReport rep = verify_theorem(TheoremId::T4, in);
  EXPECT_FALSE(rep.passed);
  ASSERT_TRUE(rep.failed_precondition.has_value());
  EXPECT_EQ(*rep.failed_precondition, "D is bijective");
  ASSERT_FALSE(rep.sub_verdicts.empty());
  EXPECT_EQ(rep.sub_verdicts.back().first, "precondition: D is bijective");
  EXPECT_FALSE(rep.sub_verdicts.back().second.passed());

  TheoremInstance t1;
  t1.algebra = entry("dx2").algebra();
  t1.twist_alpha = LinearMap::diagonal({Scalar(2), Scalar(1)});  // 1·1 = 1 breaks
  t1.twist_beta = entry("neg_x").map();
  const TheoremReport r1 = verify_theorem(TheoremId::T1, t1);
  EXPECT_FALSE(r1.passed);
  ASSERT_TRUE(r1.failed_precondition.has_value());

  TheoremInstance na;
  na.algebra = entry("na2").algebra();
  na.twist_alpha = id(2);
  const TheoremReport r2 = verify_theorem(TheoremId::T1, na);
  EXPECT_EQ(r2.failed_precondition, std::optional<std::string>("mu is associative"));
}

TEST(MissingFields, AreInvalidParameters) {
  TheoremInstance empty;
  for (TheoremId t : kAllTheorems)
    EXPECT_THROW(verify_theorem(t, empty), InvalidParameterError) << to_string(t);

  TheoremInstance t10;
  t10.algebra = entry("n2").algebra();
  EXPECT_THROW(verify_theorem(TheoremId::T10, t10), InvalidParameterError);

  TheoremInstance bihom;
  bihom.algebra = yau_twist_assoc(entry("m2").algebra().mu, entry("conj_d").map(), id(4));
  bihom.r = Tensor2(4);
  EXPECT_THROW(verify_theorem(TheoremId::T12, bihom), InvalidParameterError);
}

TEST(Theorem12, NegatedRIsStillQuasitriangular) {
  TheoremInstance in;
  in.algebra = entry("m2").algebra();
  in.r = entry("m2-qt").r;
  in.negate_r = true;
  EXPECT_TRUE(verify_theorem(TheoremId::T12, in).passed);
}

}  // namespace
}  // namespace bihom
