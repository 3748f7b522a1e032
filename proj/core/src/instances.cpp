#include <string>

#include "bihom/constructions.hpp"
#include "bihom/discovery.hpp"
#include "bihom/theorems.hpp"

namespace bihom {

namespace {

using Support = std::vector<std::pair<std::size_t, std::size_t>>;

// r supported on {e12, e11} (x) {e12, e22}
const Support kM2Support{{1, 1}, {1, 3}, {0, 1}, {0, 3}};

const BiHomAlgebra& alg(const char* id) { return catalogue_entry(id).algebra(); }
const LinearMap& map(const char* id) { return catalogue_entry(id).map(); }

BiHomAlgebra twisted(const char* base, const LinearMap& alpha, const LinearMap& beta) {
  return std::get<BiHomAlgebra>(twist_factory(catalogue_entry(base), alpha, beta));
}

std::string matrix_text(const LinearMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.dim_out(); ++i) {
    s += i ? ";" : "";
    for (std::size_t j = 0; j < f.dim_in(); ++j) s += (j ? " " : "") + f(i, j).to_string();
  }
  return s + "]";
}

std::string tensor_text(const Tensor2& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.flat().size(); ++i) s += (i ? " " : "") + t.flat()[i].to_string();
  return s + "]";
}

// R(a) = e12 a e12 on M2: e21 -> e12, everything else -> 0.
LinearMap m2_sandwich() {
  LinearMap r(4, 4);
  r(1, 2) = Scalar(1);
  return r;
}

LinearMap n2_rb() { return LinearMap::diagonal({Scalar(0), Scalar(1)}); }

BilinearOp commutator(const BilinearOp& mu) { return mu - opposite(mu); }

struct Ambient {
  std::string name;
  BiHomAlgebra algebra;
  std::optional<Support> support;
};

// Algebras on which AYBE solutions are searched.
std::vector<Ambient> aybe_ambients(bool hom_only) {
  std::vector<Ambient> out;
  out.push_back({"dx2", alg("dx2"), std::nullopt});
  out.push_back({"dx2 twisted by (neg_x, neg_x)", twisted("dx2", map("neg_x"), map("neg_x")),
                 std::nullopt});
  out.push_back({"m2", alg("m2"), kM2Support});
  out.push_back({"m2 twisted by (conj_d, conj_d)", twisted("m2", map("conj_d"), map("conj_d")),
                 kM2Support});
  if (!hom_only) {
    out.push_back({"m2 twisted by (conj_d, id4)", twisted("m2", map("conj_d"), map("id4")),
                   kM2Support});
  }
  return out;
}

std::vector<Tensor2> solutions(const Ambient& a) {
  SearchSpec spec;
  spec.support = a.support;
  return find_aybe_solutions(a.algebra, spec);
}

const char* const kSmall[] = {"n2", "dx2"};

std::vector<TheoremInstance> t1() {
  std::vector<TheoremInstance> out;
  for (const auto& b : kSmall) {
    const auto& a = alg(b);
    for (const auto& [f, g] : find_algebra_map_pairs(a.mu)) {
      TheoremInstance in;
      in.description = std::string(b) + " twisted by (" + matrix_text(f) + ", " +
                       matrix_text(g) + ")";
      in.algebra = a;
      in.twist_alpha = f;
      in.twist_beta = g;
      out.push_back(std::move(in));
    }
  }
  const auto& m2 = alg("m2");
  for (const char* beta : {"conj_d", "id4"}) {
    TheoremInstance in;
    in.description = std::string("m2 twisted by (conj_d, ") + beta + ")";
    in.algebra = m2;
    in.twist_alpha = map("conj_d");
    in.twist_beta = map(beta);
    in.dendriform = dendriform_from_paren_rb(m2.mu, map("id4"), map("id4"), m2_sandwich());
    out.push_back(std::move(in));
  }
  {
    TheoremInstance in;
    in.description = "n2 with the R_N2 dendriform twisted by (sgn, sgn)";
    in.algebra = alg("n2");
    in.twist_alpha = map("sgn");
    in.dendriform = dendriform_from_paren_rb(alg("n2").mu, map("id2"), map("id2"), n2_rb());
    out.push_back(std::move(in));
  }
  for (const auto& [bid, fid] : {std::pair{"dx2-infbialg", "id2"},
                                 std::pair{"dx2-infbialg", "x_to_zero"},
                                 std::pair{"m2-qt", "id4"}, std::pair{"m2-qt", "conj_d"}}) {
    const auto& b = catalogue_entry(bid).bialgebra();
    TheoremInstance in;
    in.description = std::string(bid) + " twisted by " + fid;
    in.algebra = BiHomAlgebra::classical(b.mu);
    in.delta = b.delta;
    in.twist_alpha = map(fid);
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<BiHomDendriform> sample_dendriforms() {
  std::vector<BiHomDendriform> out;
  const auto& n2 = alg("n2");
  const auto& m2 = alg("m2");
  const auto n2d = dendriform_from_paren_rb(n2.mu, map("id2"), map("id2"), n2_rb());
  const auto m2d = dendriform_from_paren_rb(m2.mu, map("id4"), map("id4"), m2_sandwich());
  out.push_back(n2d);
  out.push_back(m2d);
  out.push_back(yau_twist_dendriform(n2d, map("sgn"), map("sgn")));
  out.push_back(yau_twist_dendriform(m2d, map("conj_d"), map("conj_d")));
  out.push_back(yau_twist_dendriform(m2d, map("conj_d"), map("id4")));
  out.push_back(simprop_dendriform(m2, map("id4"), map("id4"), map("conj_d"), m2_sandwich()));
  for (const char* a : {"id2", "sgn"}) {
    const HomAlgebra h{twisted("n2", map(a), map(a)).mu, map(a)};
    for (unsigned n = 0; n <= 2; ++n) out.push_back(moregendend_triple(h, n, n2_rb()).dendriform);
  }
  return out;
}

std::vector<TheoremInstance> t2() {
  std::vector<TheoremInstance> out;
  std::size_t i = 0;
  for (auto& d : sample_dendriforms()) {
    TheoremInstance in;
    in.description = "sample dendriform " + std::to_string(i++);
    in.dendriform = std::move(d);
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<TheoremInstance> t3() {
  std::vector<TheoremInstance> out;
  for (const auto& b : kSmall) {
    const auto& a = alg(b);
    for (const auto& [s, t] : find_algebra_map_pairs(a.mu)) {
      for (const auto& r : find_rota_baxter(a.mu, ParenRotaBaxter{s, t})) {
        TheoremInstance in;
        in.description = std::string(b) + " sigma=" + matrix_text(s) + " tau=" +
                         matrix_text(t) + " R=" + matrix_text(r);
        in.algebra = a;
        in.sigma = s;
        in.tau = t;
        in.op = r;
        out.push_back(std::move(in));
      }
    }
  }
  for (const char* s : {"id4", "conj_d"}) {
    TheoremInstance in;
    in.description = std::string("m2 sigma=tau=") + s + " R(a)=e12 a e12";
    in.algebra = alg("m2");
    in.sigma = map(s);
    in.tau = map(s);
    in.op = m2_sandwich();
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<TheoremInstance> t4() {
  std::vector<TheoremInstance> out;
  for (const auto& b : kSmall) {
    const auto& a = alg(b);
    for (const auto& [s, t] : find_algebra_map_pairs(a.mu)) {
      for (const auto& d : find_derivations(a.mu, TwistedDerivation{t, s})) {
        if (!try_invert(d)) continue;
        TheoremInstance in;
        in.description = std::string(b) + " sigma=" + matrix_text(s) + " tau=" +
                         matrix_text(t) + " D=" + matrix_text(d);
        in.algebra = a;
        in.sigma = s;
        in.tau = t;
        in.op = d;
        out.push_back(std::move(in));
      }
    }
    // Bijective maps that are not derivations exercise the other direction.
    const std::size_t n = a.dim();
    for (const auto& d : enumerate_maps(n, {Scalar(-1), Scalar(0), Scalar(1)})) {
      if (!try_invert(d)) continue;
      if (check_derivation(d, a.mu, TwistedDerivation{LinearMap::identity(n),
                                                     LinearMap::identity(n)})) {
        continue;
      }
      TheoremInstance in;
      in.description = std::string(b) + " sigma=tau=id D=" + matrix_text(d);
      in.algebra = a;
      in.sigma = LinearMap::identity(n);
      in.tau = LinearMap::identity(n);
      in.op = d;
      out.push_back(std::move(in));
    }
  }
  {
    TheoremInstance in;
    in.description = "n2 sigma=tau=id D=diag(1,2)";
    in.algebra = alg("n2");
    in.sigma = map("id2");
    in.tau = map("id2");
    in.op = LinearMap::diagonal({Scalar(1), Scalar(2)});
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<TheoremInstance> t5() {
  std::vector<TheoremInstance> out;
  for (const auto& b : kSmall) {
    const auto& a = alg(b);
    const auto maps = enumerate_maps(a.dim(), {Scalar(-1), Scalar(0), Scalar(1)});
    for (const auto& [s, t] : find_algebra_map_pairs(a.mu)) {
      if (!try_invert(s) || !try_invert(t)) continue;
      for (const auto& r : maps) {
        if (!commute(r, s) || !commute(r, t)) continue;
        TheoremInstance in;
        in.description = std::string(b) + " sigma=" + matrix_text(s) + " tau=" +
                         matrix_text(t) + " R=" + matrix_text(r);
        in.algebra = a;
        in.sigma = s;
        in.tau = t;
        in.op = r;
        out.push_back(std::move(in));
      }
    }
  }
  return out;
}

std::vector<TheoremInstance> t6() {
  std::vector<TheoremInstance> out;
  for (const auto& b : kSmall) {
    const auto& a = alg(b);
    const std::size_t n = a.dim();
    const auto rbs = find_rota_baxter(
        a.mu, ParenRotaBaxter{LinearMap::identity(n), LinearMap::identity(n)});
    for (const auto& s : find_algebra_maps(a.mu)) {
      for (const auto& r : rbs) {
        if (!commute(r, s)) continue;
        TheoremInstance in;
        in.description = std::string(b) + " sigma=" + matrix_text(s) + " R=" + matrix_text(r);
        in.algebra = a;
        in.sigma = s;
        in.op = r;
        out.push_back(std::move(in));
      }
    }
  }
  TheoremInstance in;
  in.description = "m2 sigma=conj_d R(a)=e12 a e12";
  in.algebra = alg("m2");
  in.sigma = map("conj_d");
  in.op = m2_sandwich();
  out.push_back(std::move(in));
  return out;
}

std::vector<TheoremInstance> t7() {
  std::vector<TheoremInstance> out;
  for (const auto& b : kSmall) {
    const auto& a = alg(b);
    for (const auto& [s, t] : find_algebra_map_pairs(a.mu)) {
      for (const auto& r : find_rota_baxter(a.mu, BraceRotaBaxter{s, t})) {
        if (!commute(r, s) || !commute(r, t)) continue;
        TheoremInstance in;
        in.description = std::string(b) + " sigma=" + matrix_text(s) + " tau=" +
                         matrix_text(t) + " R=" + matrix_text(r);
        in.algebra = a;
        in.sigma = s;
        in.tau = t;
        in.op = r;
        out.push_back(std::move(in));
      }
    }
  }
  // Hom case with sigma = tau = alpha^n.
  for (const char* a : {"id2", "sgn"}) {
    for (unsigned n = 0; n <= 2; ++n) {
      TheoremInstance in;
      in.description = std::string("n2 twisted by ") + a + ", sigma=tau=alpha^" +
                       std::to_string(n) + ", R=R_N2";
      in.algebra = twisted("n2", map(a), map(a));
      in.sigma = power(map(a), n);
      in.tau = power(map(a), n);
      in.op = n2_rb();
      out.push_back(std::move(in));
    }
  }
  {
    TheoremInstance in;
    in.description = "m2 sigma=tau=id eta=conj_d R(a)=e12 a e12";
    in.algebra = alg("m2");
    in.sigma = map("id4");
    in.tau = map("id4");
    in.eta = map("conj_d");
    in.op = m2_sandwich();
    out.push_back(std::move(in));
  }
  // sigma = tau = alpha beta with R from an AYBE solution.
  {
    const BiHomAlgebra a = twisted("m2", map("conj_d"), map("id4"));
    Tensor2 r(4);
    r(1, 1) = Scalar(1);
    const LinearMap op = abrb_operator(a, r);
    const LinearMap ab = compose(a.alpha, a.beta);
    for (const char* eta : {"id4", "conj_d"}) {
      TheoremInstance in;
      in.description = std::string("m2 twisted by (conj_d, id4), sigma=tau=alpha beta, eta=") +
                       eta + ", R from r=e12(x)e12";
      in.algebra = a;
      in.sigma = ab;
      in.tau = ab;
      in.eta = map(eta);
      in.op = op;
      out.push_back(std::move(in));
    }
  }
  return out;
}

std::vector<TheoremInstance> t8() {
  std::vector<TheoremInstance> out;
  const BilinearOp bracket = commutator(alg("m2").mu);
  const LinearMap id = map("id4");
  for (const char* a : {"id4", "conj_d"}) {
    for (unsigned n = 0; n <= 2; ++n) {
      TheoremInstance in;
      in.description = std::string("commutator of m2 twisted by ") + a + ", n=" +
                       std::to_string(n) + ", R(a)=e12 a e12";
      in.lie = HomLie{transform(bracket, map(a), id, id), map(a)};
      in.exponent = n;
      in.op = m2_sandwich();
      out.push_back(std::move(in));
    }
  }
  return out;
}

std::vector<TheoremInstance> t9() {
  std::vector<TheoremInstance> out;
  for (const auto& amb : aybe_ambients(false)) {
    for (const auto& r : solutions(amb)) {
      TheoremInstance in;
      in.description = amb.name + " r=" + tensor_text(r);
      in.algebra = amb.algebra;
      in.r = r;
      out.push_back(std::move(in));
    }
  }
  return out;
}

bool delta_r_validates(const BiHomAlgebra& a, const Tensor2& r) {
  const HomAlgebra h{a.mu, a.alpha};
  return validate_inf_hom_bialgebra({a.mu, delta_r(h, r), a.alpha}).passed();
}

std::vector<TheoremInstance> t10() {
  std::vector<TheoremInstance> out;
  // Prop. on alpha^k-derivations, over commutative Hom algebras.
  const std::vector<std::pair<std::string, BiHomAlgebra>> commutative{
      {"n2", alg("n2")},
      {"n2 twisted by sgn", twisted("n2", map("sgn"), map("sgn"))},
      {"dx2", alg("dx2")},
      {"dx2 twisted by neg_x", twisted("dx2", map("neg_x"), map("neg_x"))},
      {"dx2 twisted by x_to_zero", twisted("dx2", map("x_to_zero"), map("x_to_zero"))}};
  for (const auto& [name, a] : commutative) {
    for (unsigned k = 0; k <= 2; ++k) {
      for (const auto& d : find_derivations(a.mu, AlphaPowerDerivation{a.alpha, k})) {
        TheoremInstance in;
        in.description = name + " k=" + std::to_string(k) + " D=" + matrix_text(d);
        in.algebra = a;
        in.op = d;
        in.exponent = k;
        out.push_back(std::move(in));
      }
    }
  }
  // Infinitesimal Hom-bialgebras.
  auto add_bialgebra = [&](std::string name, const InfHomBialgebra& b) {
    TheoremInstance in;
    in.description = std::move(name);
    in.algebra = BiHomAlgebra{b.mu, b.alpha, b.alpha, std::nullopt};
    in.delta = b.delta;
    out.push_back(std::move(in));
  };
  const auto& dxb = catalogue_entry("dx2-infbialg").bialgebra();
  const auto& m2qt = catalogue_entry("m2-qt").bialgebra();
  add_bialgebra("dx2-infbialg", dxb);
  add_bialgebra("m2-qt", m2qt);
  add_bialgebra("dx2-infbialg twisted by x_to_zero",
                std::get<InfHomBialgebra>(twist_factory(catalogue_entry("dx2-infbialg"),
                                                        map("x_to_zero"))));
  add_bialgebra("m2-qt twisted by conj_d",
                std::get<InfHomBialgebra>(twist_factory(catalogue_entry("m2-qt"), map("conj_d"))));
  for (const auto& amb : aybe_ambients(true)) {
    for (const auto& r : solutions(amb)) {
      if (!delta_r_validates(amb.algebra, r)) continue;
      const HomAlgebra h{amb.algebra.mu, amb.algebra.alpha};
      add_bialgebra(amb.name + " with delta_r, r=" + tensor_text(r),
                    {h.mu, delta_r(h, r), h.alpha});
    }
  }
  return out;
}

std::vector<TheoremInstance> t11() {
  std::vector<TheoremInstance> out;
  for (const auto& [bid, fid] : {std::pair{"dx2-infbialg", "id2"},
                                 std::pair{"dx2-infbialg", "x_to_zero"},
                                 std::pair{"m2-qt", "id4"}, std::pair{"m2-qt", "conj_d"}}) {
    const auto& b = catalogue_entry(bid).bialgebra();
    TheoremInstance in;
    in.description = std::string(bid) + " with alpha=" + fid;
    in.algebra = BiHomAlgebra::classical(b.mu);
    in.delta = b.delta;
    in.twist_alpha = map(fid);
    out.push_back(std::move(in));
  }
  return out;
}

std::vector<TheoremInstance> t12() {
  std::vector<TheoremInstance> out;
  {
    const auto& e = catalogue_entry("m2-qt");
    TheoremInstance in;
    in.description = "m2-qt";
    in.algebra = alg("m2");
    in.r = e.r;
    in.delta = e.bialgebra().delta;
    out.push_back(std::move(in));
  }
  for (const auto& amb : aybe_ambients(true)) {
    for (const auto& r : solutions(amb)) {
      if (!delta_r_validates(amb.algebra, r)) continue;
      TheoremInstance in;
      in.description = amb.name + " r=" + tensor_text(r);
      in.algebra = amb.algebra;
      in.r = r;
      out.push_back(std::move(in));
    }
  }
  return out;
}

}  // namespace

std::vector<TheoremInstance> catalogue_instances(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return t1();
    case TheoremId::T2: return t2();
    case TheoremId::T3: return t3();
    case TheoremId::T4: return t4();
    case TheoremId::T5: return t5();
    case TheoremId::T6: return t6();
    case TheoremId::T7: return t7();
    case TheoremId::T8: return t8();
    case TheoremId::T9: return t9();
    case TheoremId::T10: return t10();
    case TheoremId::T11: return t11();
    case TheoremId::T12: return t12();
  }
  return {};
}

}  // namespace bihom
