#include "bihom/theorems.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "bihom/constructions.hpp"
#include "bihom/discovery.hpp"
#include "bihom/errors.hpp"

namespace bihom {

namespace {

class Recorder {
 public:
  Recorder(TheoremId id, const TheoremInstance& inst) {
    report_.theorem = id;
    report_.instance_description = inst.description;
  }

  void add(std::string name, CheckVerdict v) {
    report_.sub_verdicts.emplace_back(std::move(name), std::move(v));
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  void precondition(const std::string& hypothesis, const std::string& detail) {
    report_.failed_precondition = hypothesis;
    Witness w;
    w.law = "precondition";
    report_.sub_verdicts.emplace_back("precondition: " + hypothesis, CheckVerdict::fail(w));
    if (!detail.empty()) note(detail);
  }

  TheoremReport finish() {
    report_.passed = !report_.sub_verdicts.empty() &&
                     std::all_of(report_.sub_verdicts.begin(), report_.sub_verdicts.end(),
                                 [](const auto& s) { return s.second.passed(); });
    return std::move(report_);
  }

 private:
  TheoremReport report_;
};

template <class T>
const T& need(const std::optional<T>& field, const char* name, TheoremId id) {
  if (!field) {
    throw InvalidParameterError(to_string(id) + " instance needs a " + std::string(name));
  }
  return *field;
}

CheckVerdict maps_equal(std::string_view law, const LinearMap& f, const LinearMap& g) {
  return check_on_basis<1>(law, f.dim_in(),
                           [&](const auto& t) { return std::pair{f.column(t[0]), g.column(t[0])}; });
}

CheckVerdict tensors_equal(std::string_view law, const Tensor2& a, const Tensor2& b) {
  return check_on_basis<2>(law, a.dim(), [&](const auto& t) {
    return std::pair{Vector{a(t[0], t[1])}, Vector{b(t[0], t[1])}};
  });
}

CheckVerdict agree(std::string_view law, bool lhs, bool rhs) {
  if (lhs == rhs) return CheckVerdict::pass();
  return CheckVerdict::fail(
      Witness{std::string(law), {}, {Scalar(lhs ? 1 : 0)}, {Scalar(rhs ? 1 : 0)}});
}

std::string outcome(const CheckVerdict& v) {
  if (v.passed()) return "holds";
  std::string s = "fails (" + v.witness()->law;
  for (std::size_t i = 0; i < v.witness()->indices.size(); ++i) {
    s += (i == 0 ? " at " : ",") + std::to_string(v.witness()->indices[i]);
  }
  return s + ")";
}

bool is_classical(const BiHomAlgebra& a) { return a.alpha.is_identity() && a.beta.is_identity(); }

HomAlgebra hom_of(const BiHomAlgebra& a, TheoremId id) {
  if (a.alpha != a.beta) {
    throw InvalidParameterError(to_string(id) + " needs a Hom algebra (alpha = beta)");
  }
  return {a.mu, a.alpha};
}

void run_t1(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T1);
  const auto& alpha = need(in.twist_alpha, "twist_alpha", TheoremId::T1);
  const LinearMap beta = in.twist_beta.value_or(alpha);
  if (!is_classical(a)) throw PreconditionError("base algebra is classical");
  const BiHomAlgebra twisted = yau_twist_assoc(a.mu, alpha, beta);
  rec.add("twist is BiHom-associative", check_bihom_associative(twisted));
  if (in.dendriform) {
    const BiHomDendriform d = yau_twist_dendriform(*in.dendriform, alpha, beta);
    rec.add("twist is BiHom-dendriform", check_bihom_dendriform(d));
  }
  if (in.delta) {
    if (alpha != beta) throw InvalidParameterError("bialgebra twist needs alpha = beta");
    const InfHomBialgebra b = yau_twist_inf_bialgebra(a.mu, *in.delta, alpha);
    rec.add("twist is an infinitesimal Hom-bialgebra", validate_inf_hom_bialgebra(b));
  }
}

void run_t2(const TheoremInstance& in, Recorder& rec) {
  const auto& d = need(in.dendriform, "dendriform", TheoremId::T2);
  rec.add("sum is BiHom-associative", check_bihom_associative(dendriform_sum(d)));
  if (d.alpha == d.beta) {
    rec.add("circ is Hom-pre-Lie", check_hom_prelie(dendriform_circ(d)));
  } else {
    rec.note("structure maps differ; circ not defined");
  }
}

void run_t3(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T3);
  const BiHomDendriform d =
      dendriform_from_paren_rb(a.mu, need(in.sigma, "sigma", TheoremId::T3),
                               need(in.tau, "tau", TheoremId::T3), need(in.op, "op", TheoremId::T3));
  rec.add("dendriform", check_bihom_dendriform(d));
}

void run_t4(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T4);
  const auto& sigma = need(in.sigma, "sigma", TheoremId::T4);
  const auto& tau = need(in.tau, "tau", TheoremId::T4);
  const auto& d = need(in.op, "op", TheoremId::T4);
  if (!is_algebra_map(sigma, a.mu)) throw PreconditionError("sigma is an algebra map");
  if (!is_algebra_map(tau, a.mu)) throw PreconditionError("tau is an algebra map");
  const auto inverse = try_invert(d);
  if (!inverse) throw PreconditionError("D is bijective");
  const CheckVerdict der = check_derivation(d, a.mu, TwistedDerivation{tau, sigma});
  const CheckVerdict rb = check_rota_baxter(*inverse, a.mu, ParenRotaBaxter{sigma, tau});
  rec.note("D as (tau,sigma)-derivation: " + outcome(der));
  rec.note("D^-1 as (sigma,tau)-Rota-Baxter: " + outcome(rb));
  rec.add("derivation iff inverse is Rota-Baxter", agree("equivalence", der.passed(), rb.passed()));
}

void run_t5(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T5);
  const auto& sigma = need(in.sigma, "sigma", TheoremId::T5);
  const auto& tau = need(in.tau, "tau", TheoremId::T5);
  const auto& r = need(in.op, "op", TheoremId::T5);
  if (!is_algebra_map(sigma, a.mu)) throw PreconditionError("sigma is an algebra map");
  if (!is_algebra_map(tau, a.mu)) throw PreconditionError("tau is an algebra map");
  const auto si = try_invert(sigma);
  if (!si) throw PreconditionError("sigma is bijective");
  const auto ti = try_invert(tau);
  if (!ti) throw PreconditionError("tau is bijective");
  if (!commute(r, sigma)) throw PreconditionError("R commutes with sigma");
  if (!commute(r, tau)) throw PreconditionError("R commutes with tau");
  const CheckVerdict paren = check_rota_baxter(r, a.mu, ParenRotaBaxter{sigma, tau});
  const CheckVerdict brace = check_rota_baxter(r, a.mu, BraceRotaBaxter{*si, *ti});
  rec.note("(sigma,tau)-Rota-Baxter: " + outcome(paren));
  rec.note("{sigma^-1,tau^-1}-Rota-Baxter: " + outcome(brace));
  rec.add("paren kind iff brace kind of inverses", agree("equivalence", paren.passed(),
                                                         brace.passed()));
}

void run_t6(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T6);
  const auto& sigma = need(in.sigma, "sigma", TheoremId::T6);
  const auto& r = need(in.op, "op", TheoremId::T6);
  const std::size_t n = a.dim();
  if (!is_algebra_map(sigma, a.mu)) throw PreconditionError("sigma is an algebra map");
  if (!check_rota_baxter(r, a.mu, ParenRotaBaxter{LinearMap::identity(n), LinearMap::identity(n)})) {
    throw PreconditionError("R is a Rota-Baxter operator of weight zero");
  }
  if (!commute(r, sigma)) throw PreconditionError("R commutes with sigma");
  const LinearMap rs = compose(r, sigma);
  const BilinearOp twisted = transform(a.mu, sigma, LinearMap::identity(n), LinearMap::identity(n));
  rec.add("R.sigma is {sigma,sigma}-Rota-Baxter for mu",
          check_rota_baxter(rs, a.mu, BraceRotaBaxter{sigma, sigma}));
  rec.add("R.sigma is {sigma,sigma}-Rota-Baxter for sigma.mu",
          check_rota_baxter(rs, twisted, BraceRotaBaxter{sigma, sigma}));
}

void run_t7(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T7);
  const auto& sigma = need(in.sigma, "sigma", TheoremId::T7);
  const auto& tau = need(in.tau, "tau", TheoremId::T7);
  const auto& r = need(in.op, "op", TheoremId::T7);
  const std::size_t n = a.dim();
  const LinearMap eta = in.eta.value_or(LinearMap::identity(n));
  const BiHomDendriform d = simprop_dendriform(a, sigma, tau, eta, r);
  rec.add("BiHom-dendriform", check_bihom_dendriform(d));
  const BiHomAlgebra sum = dendriform_sum(d);
  rec.add("sum is BiHom-associative", check_bihom_associative(sum));
  if (d.alpha == d.beta) rec.add("circ is Hom-pre-Lie", check_hom_prelie(dendriform_circ(d)));
  if (is_classical(a) && eta.is_identity()) {
    // R(x*y) = sigma(R x) tau(R y): a morphism into the (sigma, tau) twist.
    const BilinearOp target = transform(a.mu, LinearMap::identity(n), sigma, tau);
    rec.add("R is a morphism into the Yau twist",
            check_on_basis<2>("rb-morphism", n, [&](const auto& t) {
              return std::pair{r.apply(sum.mu.product(t[0], t[1])),
                               apply_bilinear(target, r.column(t[0]), r.column(t[1]))};
            }));
  }
}

void run_t8(const TheoremInstance& in, Recorder& rec) {
  const auto& l = need(in.lie, "lie", TheoremId::T8);
  const auto& r = need(in.op, "op", TheoremId::T8);
  const HomPreLie p = analoglie_prelie(l, in.exponent, r);
  rec.add("Lie Rota-Baxter",
          check_rota_baxter(r, l.bracket, LieAlphaPowerRotaBaxter{l.alpha, in.exponent}));
  rec.add("Hom-pre-Lie", check_hom_prelie(p));
}

void run_t9(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T9);
  const auto& r = need(in.r, "r", TheoremId::T9);
  const LinearMap op = abrb_operator(a, r);
  const AbrbForms forms = abrb_forms(a, r);
  rec.add("both expressions agree", maps_equal("rab-forms", forms.left, forms.right));
  rec.add("R commutes with alpha", commutation("commutes-with-alpha", op, a.alpha));
  rec.add("R commutes with beta", commutation("commutes-with-beta", op, a.beta));
  rec.add("alpha-beta Rota-Baxter",
          check_rota_baxter(op, a.mu, AlphaBetaRotaBaxter{a.alpha, a.beta}));
  if (a.alpha == a.beta) {
    rec.add("alpha^2 Rota-Baxter", check_rota_baxter(op, a.mu, AlphaPowerRotaBaxter{a.alpha, 2}));
  }
  // Invariance identities of r used when expanding both sides.
  struct Identity {
    unsigned la, lb, ra, rb;  // (alpha^la beta^lb (x) alpha^ra beta^rb)(r)
    unsigned sa, sb, ta, tb;  // equals (alpha^sa beta^sb (x) alpha^ta beta^tb)(r)
  };
  static constexpr Identity kIdentities[] = {
      {1, 4, 5, 1, 0, 3, 4, 0}, {1, 4, 3, 2, 0, 2, 2, 0}, {1, 4, 5, 0, 0, 4, 4, 0},
      {4, 2, 5, 0, 0, 2, 1, 0}, {0, 4, 4, 1, 0, 3, 4, 0}, {2, 3, 4, 1, 0, 2, 2, 0},
      {2, 4, 3, 2, 0, 2, 1, 0}};
  auto ab = [&](unsigned p, unsigned q) { return compose(power(a.alpha, p), power(a.beta, q)); };
  for (const auto& id : kIdentities) {
    const Tensor2 lhs = map_tensor2(ab(id.la, id.lb), ab(id.ra, id.rb), r);
    const Tensor2 rhs = map_tensor2(ab(id.sa, id.sb), ab(id.ta, id.tb), r);
    rec.add("invariance a" + std::to_string(id.la) + "b" + std::to_string(id.lb) + "|a" +
                std::to_string(id.ra) + "b" + std::to_string(id.rb),
            tensors_equal("r-invariance", lhs, rhs));
  }
}

void run_t10(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T10);
  const HomAlgebra h = hom_of(a, TheoremId::T10);
  if (!in.delta && !in.op) throw InvalidParameterError("T10 instance needs delta or op");
  if (in.delta) {
    const InfHomBialgebra b{h.mu, *in.delta, h.alpha};
    const LinearMap d = mu_delta_map(b);
    rec.add("mu.delta is an alpha^2-derivation",
            check_derivation(d, h.mu, AlphaPowerDerivation{h.alpha, 2}));
    const BulletForms forms = bullet_forms(b);
    rec.add("both bullet expressions agree", relabel(bilinear_equal(forms.left, forms.right),
                                                     "bullet-forms"));
    const HomPreLie bullet = infprelie_bullet(b);
    rec.add("bullet is Hom-pre-Lie", check_hom_prelie(bullet));
    if (check_commutative(h.mu)) {
      const HomPreLie nov = gengd_novikov(h, 2, d);
      rec.add("alpha^2(x)D(y) is Hom-Novikov", check_hom_novikov(nov));
      rec.add("bullet equals alpha^2(x)D(y)", bilinear_equal(bullet.mu, nov.mu));
    }
  }
  if (in.op) {
    const HomPreLie nov = gengd_novikov(h, in.exponent, *in.op);
    rec.add("alpha^k(x)D(y) is Hom-Novikov", check_hom_novikov(nov));
  }
}

void run_t11(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T11);
  const auto& delta = need(in.delta, "delta", TheoremId::T11);
  const auto& alpha = need(in.twist_alpha, "twist_alpha", TheoremId::T11);
  if (!is_classical(a)) throw PreconditionError("base algebra is classical");
  const std::size_t n = a.dim();
  const BilinearOp aguiar = aguiar_bullet(a.mu, delta);
  rec.add("classical bullet is pre-Lie", check_hom_prelie({aguiar, LinearMap::identity(n)}));
  const HomPreLie untwisted = infprelie_bullet({a.mu, delta, LinearMap::identity(n)});
  rec.add("identity twist reproduces the classical bullet", bilinear_equal(untwisted.mu, aguiar));
  const InfHomBialgebra twisted = yau_twist_inf_bialgebra(a.mu, delta, alpha);
  const HomPreLie bullet = infprelie_bullet(twisted);
  const LinearMap id = LinearMap::identity(n);
  rec.add("bullet of the twist is the alpha^3 twist",
          bilinear_equal(bullet.mu, transform(aguiar, power(alpha, 3), id, id)));
}

void run_t12(const TheoremInstance& in, Recorder& rec) {
  const auto& a = need(in.algebra, "algebra", TheoremId::T12);
  const HomAlgebra h = hom_of(a, TheoremId::T12);
  const Tensor2& r0 = need(in.r, "r", TheoremId::T12);
  const Tensor2 r = in.negate_r ? Scalar(-1) * r0 : r0;
  const Comultiplication delta = delta_r(h, r0, in.negate_r);
  const InfHomBialgebra b{h.mu, delta, h.alpha};
  const CheckVerdict valid = validate_inf_hom_bialgebra(b);
  if (!valid) throw PreconditionError("delta_r makes A an infinitesimal Hom-bialgebra", outcome(valid));
  if (in.delta) {
    rec.add("delta is delta_r", check_on_basis<1>("delta-is-delta-r", h.dim(), [&](const auto& t) {
              return std::pair{in.delta->image(t[0]).flat(), delta.image(t[0]).flat()};
            }));
  }
  const HomPreLie bullet = infprelie_bullet(b);
  const LinearMap op = abrb_operator(h.as_bihom(), r);
  const DendriformTriple triple = moregendend_triple(h, 2, op);
  rec.add("bullet equals circ", bilinear_equal(bullet.mu, triple.circ.mu));
}

}  // namespace

std::string to_string(TheoremId id) {
  return "T" + std::to_string(static_cast<int>(id) + 1);
}

TheoremId parse_theorem_id(std::string_view text) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == text) return id;
  throw InvalidParameterError("unknown theorem id \"" + std::string(text) + "\"");
}

TheoremReport verify_theorem(TheoremId id, const TheoremInstance& instance) {
  Recorder rec(id, instance);
  try {
    switch (id) {
      case TheoremId::T1: run_t1(instance, rec); break;
      case TheoremId::T2: run_t2(instance, rec); break;
      case TheoremId::T3: run_t3(instance, rec); break;
      case TheoremId::T4: run_t4(instance, rec); break;
      case TheoremId::T5: run_t5(instance, rec); break;
      case TheoremId::T6: run_t6(instance, rec); break;
      case TheoremId::T7: run_t7(instance, rec); break;
      case TheoremId::T8: run_t8(instance, rec); break;
      case TheoremId::T9: run_t9(instance, rec); break;
      case TheoremId::T10: run_t10(instance, rec); break;
      case TheoremId::T11: run_t11(instance, rec); break;
      case TheoremId::T12: run_t12(instance, rec); break;
    }
  } catch (const PreconditionError& e) {
    rec.precondition(e.hypothesis(), e.what());
  }
  return rec.finish();
}

std::vector<TheoremReport> verify_theorems(TheoremId id,
                                           const std::vector<TheoremInstance>& instances,
                                           unsigned threads) {
  std::vector<TheoremReport> reports(instances.size());
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, instances.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) reports[i] = verify_theorem(id, instances[i]);
    return reports;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < instances.size(); i += threads)
          reports[i] = verify_theorem(id, instances[i]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

}  // namespace bihom
