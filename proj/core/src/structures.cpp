#include "bihom/structures.hpp"

#include <string>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::vector<Vector> columns(const LinearMap& f) {
  std::vector<Vector> cols(f.dim_in());
  for (std::size_t j = 0; j < f.dim_in(); ++j) cols[j] = f.column(j);
  return cols;
}

// e_i · e_j for every basis pair, cached.
std::vector<Vector> products(const BilinearOp& m) {
  const std::size_t n = m.dim();
  std::vector<Vector> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = m.product(i, j);
  return out;
}

void require_dim(std::size_t got, std::size_t want, std::string_view what) {
  if (got != want) {
    throw ShapeError(std::string(what) + ": dimension " + std::to_string(got) +
                     " does not match " + std::to_string(want));
  }
}

void require_algebra_map(const LinearMap& f, const BilinearOp& m, std::string_view name) {
  require_square(f, m.dim(), name);
  if (!is_algebra_map(f, m).passed()) {
    throw InvalidParameterError(std::string(name) + " is not an algebra map");
  }
}

// R(σa)R(τb) = R(σ(a)R(b) + R(a)τ(b)) with σ, τ given as matrices.
CheckVerdict brace_identity(std::string_view law, const LinearMap& r, const BilinearOp& m,
                            const LinearMap& sigma, const LinearMap& tau) {
  const std::size_t n = m.dim();
  const auto rc = columns(r);
  const LinearMap rs = compose(r, sigma);
  const LinearMap rt = compose(r, tau);
  const auto rsc = columns(rs);
  const auto rtc = columns(rt);
  const auto sc = columns(sigma);
  const auto tc = columns(tau);
  return check_on_basis<2>(law, n, [&](const auto& t) {
    const auto i = t[0];
    const auto j = t[1];
    Vector lhs = apply_bilinear(m, rsc[i], rtc[j]);
    Vector inner = apply_bilinear(m, sc[i], rc[j]) + apply_bilinear(m, rc[i], tc[j]);
    return std::pair{std::move(lhs), r.apply(inner)};
  });
}

// R(a)R(b) = R(σ(R(a))b + aτ(R(b)))
CheckVerdict paren_identity(std::string_view law, const LinearMap& r, const BilinearOp& m,
                            const LinearMap& sigma, const LinearMap& tau) {
  const std::size_t n = m.dim();
  const auto rc = columns(r);
  const auto src = columns(compose(sigma, r));
  const auto trc = columns(compose(tau, r));
  return check_on_basis<2>(law, n, [&](const auto& t) {
    const auto i = t[0];
    const auto j = t[1];
    Vector lhs = apply_bilinear(m, rc[i], rc[j]);
    Vector inner = apply_bilinear(m, src[i], basis_vector(n, j)) +
                   apply_bilinear(m, basis_vector(n, i), trc[j]);
    return std::pair{std::move(lhs), r.apply(inner)};
  });
}

// D(ab) = D(a)τ(b) + σ(a)D(b)
CheckVerdict leibniz_identity(std::string_view law, const LinearMap& d, const BilinearOp& m,
                              const LinearMap& tau, const LinearMap& sigma) {
  const std::size_t n = m.dim();
  const auto dc = columns(d);
  const auto tc = columns(tau);
  const auto sc = columns(sigma);
  return check_on_basis<2>(law, n, [&](const auto& t) {
    const auto i = t[0];
    const auto j = t[1];
    Vector lhs = d.apply(m.product(i, j));
    Vector rhs = apply_bilinear(m, dc[i], tc[j]) + apply_bilinear(m, sc[i], dc[j]);
    return std::pair{std::move(lhs), std::move(rhs)};
  });
}

}  // namespace

CheckVerdict relabel(CheckVerdict v, std::string_view law) {
  if (v.passed()) return v;
  Witness w = *v.witness();
  w.law = std::string(law);
  return CheckVerdict::fail(std::move(w));
}

BiHomAlgebra BiHomAlgebra::classical(BilinearOp mu, std::optional<Vector> unit) {
  const std::size_t n = mu.dim();
  return {std::move(mu), LinearMap::identity(n), LinearMap::identity(n), std::move(unit)};
}

BiHomDendriform BiHomDendriform::classical(BilinearOp prec, BilinearOp succ) {
  const std::size_t n = prec.dim();
  return {std::move(prec), std::move(succ), LinearMap::identity(n), LinearMap::identity(n)};
}

// -------------------------------------------------------------- algebras

CheckVerdict check_bihom_associative(const BiHomAlgebra& a) {
  const std::size_t n = a.dim();
  require_square(a.alpha, n, "alpha");
  require_square(a.beta, n, "beta");
  if (a.unit) require_dim(a.unit->size(), n, "unit");

  return first_failure(
      [&] { return commutation("alpha-beta-commute", a.alpha, a.beta); },
      [&] { return relabel(is_algebra_map(a.alpha, a.mu), "alpha-multiplicative"); },
      [&] { return relabel(is_algebra_map(a.beta, a.mu), "beta-multiplicative"); },
      [&] {
        const auto ac = columns(a.alpha);
        const auto bc = columns(a.beta);
        const auto prod = products(a.mu);
        return check_on_basis<3>("bihom-associativity", n, [&](const auto& t) {
          return std::pair{apply_bilinear(a.mu, ac[t[0]], prod[t[1] * n + t[2]]),
                           apply_bilinear(a.mu, prod[t[0] * n + t[1]], bc[t[2]])};
        });
      },
      [&] {
        if (!a.unit) return CheckVerdict::pass();
        const Vector& one = *a.unit;
        return first_failure(
            [&] {
              const Vector img = a.alpha.apply(one);
              return img == one ? CheckVerdict::pass()
                                : CheckVerdict::fail({"unit-alpha-fixed", {}, img, one});
            },
            [&] {
              const Vector img = a.beta.apply(one);
              return img == one ? CheckVerdict::pass()
                                : CheckVerdict::fail({"unit-beta-fixed", {}, img, one});
            },
            [&] {
              return check_on_basis<1>("unit-right", n, [&](const auto& t) {
                return std::pair{apply_bilinear(a.mu, basis_vector(n, t[0]), one),
                                 a.alpha.column(t[0])};
              });
            },
            [&] {
              return check_on_basis<1>("unit-left", n, [&](const auto& t) {
                return std::pair{apply_bilinear(a.mu, one, basis_vector(n, t[0])),
                                 a.beta.column(t[0])};
              });
            });
      });
}

CheckVerdict check_hom_associative(const HomAlgebra& a) {
  return check_bihom_associative(a.as_bihom());
}

CheckVerdict check_associative(const BilinearOp& mu) {
  return check_bihom_associative(BiHomAlgebra::classical(mu));
}

CheckVerdict check_commutative(const BilinearOp& mu) {
  return check_on_basis<2>("commutativity", mu.dim(), [&](const auto& t) {
    return std::pair{mu.product(t[0], t[1]), mu.product(t[1], t[0])};
  });
}

// ------------------------------------------------------------ coalgebras

CheckVerdict check_hom_coassociative(const HomCoalgebra& c) {
  const std::size_t n = c.dim();
  require_square(c.alpha, n, "alpha");
  return first_failure(
      [&] { return relabel(is_coalgebra_map(c.alpha, c.delta), "alpha-comultiplicative"); },
      [&] {
        const auto ac = columns(c.alpha);
        return check_on_basis<1>("hom-coassociativity", n, [&](const auto& t) {
          Tensor3 left(n);   // (Δ⊗α)Δ(e_i)
          Tensor3 right(n);  // (α⊗Δ)Δ(e_i)
          for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
              const Scalar& coeff = c.delta(t[0], p, q);
              if (coeff.is_zero()) continue;
              for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) {
                  const Scalar& dp = c.delta(p, x, y);
                  if (!dp.is_zero()) {
                    left.add_outer(coeff * dp, basis_vector(n, x), basis_vector(n, y),
                                   ac[q]);
                  }
                  const Scalar& dq = c.delta(q, x, y);
                  if (!dq.is_zero()) {
                    right.add_outer(coeff * dq, ac[p], basis_vector(n, x),
                                    basis_vector(n, y));
                  }
                }
              }
            }
          }
          return std::pair{left.flat(), right.flat()};
        });
      });
}

CheckVerdict check_infinitesimal_compat(const InfHomBialgebra& b) {
  const std::size_t n = b.dim();
  require_dim(b.delta.dim(), n, "delta");
  require_square(b.alpha, n, "alpha");
  const auto ac = columns(b.alpha);
  return check_on_basis<2>("infinitesimal-compatibility", n, [&](const auto& t) {
    const auto i = t[0];
    const auto j = t[1];
    Tensor2 lhs = b.delta.apply(b.mu.product(i, j));
    Tensor2 rhs(n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        // α(a) b₁ ⊗ α(b₂)
        if (const Scalar& c = b.delta(j, p, q); !c.is_zero()) {
          rhs += c * Tensor2::outer(apply_bilinear(b.mu, ac[i], basis_vector(n, p)), ac[q]);
        }
        // α(a₁) ⊗ a₂ α(b)
        if (const Scalar& c = b.delta(i, p, q); !c.is_zero()) {
          rhs += c * Tensor2::outer(ac[p], apply_bilinear(b.mu, basis_vector(n, q), ac[j]));
        }
      }
    }
    return std::pair{lhs.flat(), rhs.flat()};
  });
}

CheckVerdict validate_inf_hom_bialgebra(const InfHomBialgebra& b) {
  return first_failure([&] { return check_hom_associative(b.algebra()); },
                       [&] { return check_hom_coassociative(b.coalgebra()); },
                       [&] { return check_infinitesimal_compat(b); });
}

// ----------------------------------------------------------- dendriform

CheckVerdict check_bihom_dendriform(const BiHomDendriform& d) {
  const std::size_t n = d.dim();
  require_dim(d.succ.dim(), n, "succ");
  require_square(d.alpha, n, "alpha");
  require_square(d.beta, n, "beta");
  const auto& prec = d.prec;
  const auto& succ = d.succ;

  return first_failure(
      [&] { return commutation("alpha-beta-commute", d.alpha, d.beta); },
      [&] { return relabel(is_algebra_map(d.alpha, prec), "alpha-multiplicative-prec"); },
      [&] { return relabel(is_algebra_map(d.alpha, succ), "alpha-multiplicative-succ"); },
      [&] { return relabel(is_algebra_map(d.beta, prec), "beta-multiplicative-prec"); },
      [&] { return relabel(is_algebra_map(d.beta, succ), "beta-multiplicative-succ"); },
      [&] {
        const auto ac = columns(d.alpha);
        const auto bc = columns(d.beta);
        const auto pp = products(prec);
        const auto sp = products(succ);
        auto at = [n](const std::vector<Vector>& table, std::size_t i, std::size_t j) {
          return table[i * n + j];
        };
        return first_failure(
            [&] {
              return check_on_basis<3>("dendriform-prec-prec", n, [&](const auto& t) {
                return std::pair{
                    apply_bilinear(prec, at(pp, t[0], t[1]), bc[t[2]]),
                    apply_bilinear(prec, ac[t[0]], at(pp, t[1], t[2]) + at(sp, t[1], t[2]))};
              });
            },
            [&] {
              return check_on_basis<3>("dendriform-succ-prec", n, [&](const auto& t) {
                return std::pair{apply_bilinear(prec, at(sp, t[0], t[1]), bc[t[2]]),
                                 apply_bilinear(succ, ac[t[0]], at(pp, t[1], t[2]))};
              });
            },
            [&] {
              return check_on_basis<3>("dendriform-succ-succ", n, [&](const auto& t) {
                return std::pair{
                    apply_bilinear(succ, ac[t[0]], at(sp, t[1], t[2])),
                    apply_bilinear(succ, at(pp, t[0], t[1]) + at(sp, t[0], t[1]), bc[t[2]])};
              });
            });
      });
}

// -------------------------------------------------------------- pre-Lie

CheckVerdict check_hom_prelie(const HomPreLie& p) {
  const std::size_t n = p.dim();
  require_square(p.alpha, n, "alpha");
  return first_failure(
      [&] { return relabel(is_algebra_map(p.alpha, p.mu), "alpha-multiplicative"); },
      [&] {
        const auto ac = columns(p.alpha);
        const auto prod = products(p.mu);
        // α(x)(yz) − (xy)α(z)
        auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
          return apply_bilinear(p.mu, ac[x], prod[y * n + z]) -
                 apply_bilinear(p.mu, prod[x * n + y], ac[z]);
        };
        return check_on_basis<3>("hom-prelie", n, [&](const auto& t) {
          return std::pair{assoc(t[0], t[1], t[2]), assoc(t[1], t[0], t[2])};
        });
      });
}

CheckVerdict check_hom_novikov(const HomPreLie& p) {
  return first_failure([&] { return check_hom_prelie(p); },
                       [&] {
                         const std::size_t n = p.dim();
                         const auto ac = columns(p.alpha);
                         const auto prod = products(p.mu);
                         return check_on_basis<3>("hom-novikov", n, [&](const auto& t) {
                           return std::pair{
                               apply_bilinear(p.mu, prod[t[0] * n + t[1]], ac[t[2]]),
                               apply_bilinear(p.mu, prod[t[0] * n + t[2]], ac[t[1]])};
                         });
                       });
}

CheckVerdict check_hom_lie(const HomLie& l) {
  const std::size_t n = l.dim();
  require_square(l.alpha, n, "alpha");
  const auto& br = l.bracket;
  return first_failure(
      [&] {
        return check_on_basis<2>("skew-symmetry", n, [&](const auto& t) {
          return std::pair{br.product(t[0], t[1]), Scalar(-1) * br.product(t[1], t[0])};
        });
      },
      [&] { return relabel(is_algebra_map(l.alpha, br), "alpha-multiplicative"); },
      [&] {
        const auto ac = columns(l.alpha);
        const auto prod = products(br);
        return check_on_basis<3>("hom-jacobi", n, [&](const auto& t) {
          const auto x = t[0];
          const auto y = t[1];
          const auto z = t[2];
          Vector sum = apply_bilinear(br, ac[x], prod[y * n + z]) +
                       apply_bilinear(br, ac[y], prod[z * n + x]) +
                       apply_bilinear(br, ac[z], prod[x * n + y]);
          return std::pair{std::move(sum), zero_vector(n)};
        });
      });
}

// --------------------------------------------- derivations and Rota-Baxter

void validate_derivation_kind(const BilinearOp& m, const DerivationKind& kind) {
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, TwistedDerivation>) {
          require_algebra_map(k.tau, m, "tau");
          require_algebra_map(k.sigma, m, "sigma");
        } else {
          require_algebra_map(k.alpha, m, "alpha");
        }
      },
      kind);
}

void validate_rota_baxter_kind(const BilinearOp& m, const RotaBaxterKind& kind) {
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ParenRotaBaxter> ||
                      std::is_same_v<K, BraceRotaBaxter>) {
          require_algebra_map(k.sigma, m, "sigma");
          require_algebra_map(k.tau, m, "tau");
        } else if constexpr (std::is_same_v<K, AlphaBetaRotaBaxter>) {
          require_algebra_map(k.alpha, m, "alpha");
          require_algebra_map(k.beta, m, "beta");
        } else {
          require_algebra_map(k.alpha, m, "alpha");
        }
      },
      kind);
}

CheckVerdict derivation_identity(const LinearMap& d, const BilinearOp& m,
                                 const DerivationKind& kind) {
  require_square(d, m.dim(), "derivation");
  return std::visit(
      [&](const auto& k) -> CheckVerdict {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, TwistedDerivation>) {
          return leibniz_identity("twisted-leibniz", d, m, k.tau, k.sigma);
        } else {
          const LinearMap ak = power(k.alpha, k.k);
          return first_failure(
              [&] { return commutation("commutes-with-alpha", d, k.alpha); },
              [&] { return leibniz_identity("alpha-power-leibniz", d, m, ak, ak); });
        }
      },
      kind);
}

CheckVerdict rota_baxter_identity(const LinearMap& r, const BilinearOp& m,
                                  const RotaBaxterKind& kind) {
  require_square(r, m.dim(), "Rota-Baxter operator");
  return std::visit(
      [&](const auto& k) -> CheckVerdict {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ParenRotaBaxter>) {
          return paren_identity("paren-rota-baxter", r, m, k.sigma, k.tau);
        } else if constexpr (std::is_same_v<K, BraceRotaBaxter>) {
          return brace_identity("brace-rota-baxter", r, m, k.sigma, k.tau);
        } else if constexpr (std::is_same_v<K, AlphaPowerRotaBaxter>) {
          const LinearMap an = power(k.alpha, k.n);
          return first_failure(
              [&] { return commutation("commutes-with-alpha", r, k.alpha); },
              [&] { return brace_identity("alpha-power-rota-baxter", r, m, an, an); });
        } else if constexpr (std::is_same_v<K, AlphaBetaRotaBaxter>) {
          const LinearMap ab = compose(k.alpha, k.beta);
          return first_failure(
              [&] { return commutation("commutes-with-alpha", r, k.alpha); },
              [&] { return commutation("commutes-with-beta", r, k.beta); },
              [&] { return brace_identity("alpha-beta-rota-baxter", r, m, ab, ab); });
        } else {
          const LinearMap an = power(k.alpha, k.n);
          return first_failure(
              [&] { return commutation("commutes-with-alpha", r, k.alpha); },
              [&] { return brace_identity("lie-alpha-power-rota-baxter", r, m, an, an); });
        }
      },
      kind);
}

CheckVerdict check_derivation(const LinearMap& d, const BilinearOp& m,
                              const DerivationKind& kind) {
  validate_derivation_kind(m, kind);
  return derivation_identity(d, m, kind);
}

CheckVerdict check_rota_baxter(const LinearMap& r, const BilinearOp& m,
                               const RotaBaxterKind& kind) {
  validate_rota_baxter_kind(m, kind);
  return rota_baxter_identity(r, m, kind);
}

// ----------------------------------------------------------------- AYBE

AybeTerms aybe_terms(const BiHomAlgebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  require_dim(r.dim(), n, "r");
  require_square(a.alpha, n, "alpha");
  require_square(a.beta, n, "beta");
  const auto ac = columns(a.alpha);
  const auto bc = columns(a.beta);
  const auto prod = products(a.mu);

  struct Entry {
    std::size_t x;
    std::size_t y;
    const Scalar* c;
  };
  std::vector<Entry> support;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r(i, j).is_zero()) support.push_back({i, j, &r(i, j)});

  AybeTerms terms{Tensor3(n), Tensor3(n), Tensor3(n)};
  for (const auto& ri : support) {
    for (const auto& rj : support) {
      const Scalar c = *ri.c * *rj.c;
      // Σ x_i x_j ⊗ β(y_j) ⊗ β(y_i)
      terms.r13r12.add_outer(c, prod[ri.x * n + rj.x], bc[rj.y], bc[ri.y]);
      // Σ α(x_i) ⊗ y_i x_j ⊗ β(y_j)
      terms.r12r23.add_outer(c, ac[ri.x], prod[ri.y * n + rj.x], bc[rj.y]);
      // Σ α(x_i) ⊗ α(x_j) ⊗ y_j y_i
      terms.r23r13.add_outer(c, ac[ri.x], ac[rj.x], prod[rj.y * n + ri.y]);
    }
  }
  return terms;
}

Tensor3 aybe_residue(const BiHomAlgebra& a, const Tensor2& r) {
  auto t = aybe_terms(a, r);
  return t.r13r12 - t.r12r23 + t.r23r13;
}

CheckVerdict check_aybe(const BiHomAlgebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  require_dim(r.dim(), n, "r");
  auto invariance = [&](std::string_view law, const LinearMap& f) {
    const Tensor2 image = map_tensor2(f, f, r);
    return check_on_basis<2>(law, n, [&](const auto& t) {
      return std::pair{Vector{image(t[0], t[1])}, Vector{r(t[0], t[1])}};
    });
  };
  return first_failure(
      [&] { return invariance("alpha-invariance", a.alpha); },
      [&] { return invariance("beta-invariance", a.beta); },
      [&] {
        const auto terms = aybe_terms(a, r);
        // r12r23 = r13r12 + r23r13
        return check_on_basis<3>("aybe", n, [&](const auto& t) {
          return std::pair{Vector{terms.r12r23(t[0], t[1], t[2])},
                           Vector{terms.r13r12(t[0], t[1], t[2]) +
                                  terms.r23r13(t[0], t[1], t[2])}};
        });
      });
}

}  // namespace bihom
