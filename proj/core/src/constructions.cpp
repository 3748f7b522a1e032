#include "bihom/constructions.hpp"

#include <sstream>
#include <string>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::string describe(const Witness& w) {
  std::ostringstream os;
  os << w.law << " at (";
  for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
  os << ")";
  return os.str();
}

void require(const CheckVerdict& v, const std::string& hypothesis) {
  if (!v.passed()) throw PreconditionError(hypothesis, describe(*v.witness()));
}

void require_commute(const LinearMap& f, std::string_view fname, const LinearMap& g,
                     std::string_view gname) {
  const std::string name = std::string(fname) + " and " + std::string(gname) + " commute";
  require(commutation(name, f, g), name);
}

LinearMap identity_like(const BilinearOp& m) { return LinearMap::identity(m.dim()); }

}  // namespace

BiHomAlgebra yau_twist_assoc(const BilinearOp& mu, const LinearMap& alpha,
                             const LinearMap& beta) {
  require(check_associative(mu), "mu is associative");
  require_square(alpha, mu.dim(), "alpha");
  require_square(beta, mu.dim(), "beta");
  require(is_algebra_map(alpha, mu), "alpha is an algebra map");
  require(is_algebra_map(beta, mu), "beta is an algebra map");
  require_commute(alpha, "alpha", beta, "beta");
  return {transform(mu, identity_like(mu), alpha, beta), alpha, beta, std::nullopt};
}

BiHomDendriform yau_twist_dendriform(const BiHomDendriform& d, const LinearMap& alpha,
                                     const LinearMap& beta) {
  if (!d.alpha.is_identity() || !d.beta.is_identity()) {
    throw PreconditionError("input dendriform algebra is classical");
  }
  require(check_bihom_dendriform(d), "input is a dendriform algebra");
  require_square(alpha, d.dim(), "alpha");
  require_square(beta, d.dim(), "beta");
  require_commute(alpha, "alpha", beta, "beta");
  require(is_algebra_map(alpha, d.prec), "alpha is multiplicative for prec");
  require(is_algebra_map(alpha, d.succ), "alpha is multiplicative for succ");
  require(is_algebra_map(beta, d.prec), "beta is multiplicative for prec");
  require(is_algebra_map(beta, d.succ), "beta is multiplicative for succ");
  const LinearMap id = LinearMap::identity(d.dim());
  return {transform(d.prec, id, alpha, beta), transform(d.succ, id, alpha, beta), alpha,
          beta};
}

HomPreLie yau_twist_prelie(const BilinearOp& mu, const LinearMap& alpha) {
  const LinearMap id = identity_like(mu);
  require(check_hom_prelie({mu, id}), "mu is left pre-Lie");
  require_square(alpha, mu.dim(), "alpha");
  require(is_algebra_map(alpha, mu), "alpha is a pre-Lie morphism");
  return {transform(mu, alpha, id, id), alpha};
}

InfHomBialgebra yau_twist_inf_bialgebra(const BilinearOp& mu, const Comultiplication& delta,
                                        const LinearMap& alpha) {
  const LinearMap id = identity_like(mu);
  require(validate_inf_hom_bialgebra({mu, delta, id}), "input is an infinitesimal bialgebra");
  require_square(alpha, mu.dim(), "alpha");
  require(is_algebra_map(alpha, mu), "alpha is an algebra map");
  require(is_coalgebra_map(alpha, delta), "alpha is a coalgebra map");
  return {transform(mu, alpha, id, id), precompose(delta, alpha), alpha};
}

BiHomAlgebra dendriform_sum(const BiHomDendriform& d) {
  require(check_bihom_dendriform(d), "input is BiHom-dendriform");
  return {d.prec + d.succ, d.alpha, d.beta, std::nullopt};
}

HomPreLie dendriform_circ(const BiHomDendriform& d) {
  if (d.alpha != d.beta) {
    throw InvalidParameterError("dendriform_circ needs equal structure maps");
  }
  require(check_bihom_dendriform(d), "input is Hom-dendriform");
  return {d.succ - opposite(d.prec), d.alpha};
}

BiHomDendriform dendriform_from_paren_rb(const BilinearOp& mu, const LinearMap& sigma,
                                         const LinearMap& tau, const LinearMap& r) {
  require(check_associative(mu), "mu is associative");
  require_square(sigma, mu.dim(), "sigma");
  require_square(tau, mu.dim(), "tau");
  require(is_algebra_map(sigma, mu), "sigma is an algebra map");
  require(is_algebra_map(tau, mu), "tau is an algebra map");
  require(check_rota_baxter(r, mu, ParenRotaBaxter{sigma, tau}),
          "R is a (sigma,tau)-Rota-Baxter operator");
  const LinearMap id = identity_like(mu);
  return BiHomDendriform::classical(transform(mu, id, id, compose(tau, r)),
                                    transform(mu, id, compose(sigma, r), id));
}

BiHomDendriform simprop_dendriform(const BiHomAlgebra& a, const LinearMap& sigma,
                                   const LinearMap& tau, const LinearMap& eta,
                                   const LinearMap& r) {
  const auto& mu = a.mu;
  require(check_bihom_associative(a), "A is BiHom-associative");
  require_square(sigma, mu.dim(), "sigma");
  require_square(tau, mu.dim(), "tau");
  require_square(eta, mu.dim(), "eta");
  require_square(r, mu.dim(), "R");
  require(is_algebra_map(sigma, mu), "sigma is an algebra map");
  require(is_algebra_map(tau, mu), "tau is an algebra map");
  require(is_algebra_map(eta, mu), "eta is an algebra map");
  require(check_rota_baxter(r, mu, BraceRotaBaxter{sigma, tau}),
          "R is a {sigma,tau}-Rota-Baxter operator");

  const std::pair<std::string_view, const LinearMap*> maps[] = {
      {"alpha", &a.alpha}, {"beta", &a.beta}, {"sigma", &sigma},
      {"tau", &tau},       {"eta", &eta},     {"R", &r}};
  for (std::size_t i = 0; i < std::size(maps); ++i) {
    for (std::size_t j = i + 1; j < std::size(maps); ++j) {
      require_commute(*maps[i].second, maps[i].first, *maps[j].second, maps[j].first);
    }
  }

  const LinearMap id = identity_like(mu);
  return {transform(mu, id, sigma, compose(r, eta)), transform(mu, id, r, compose(tau, eta)),
          compose(a.alpha, sigma), compose(a.beta, compose(tau, eta))};
}

BiHomDendriform simprop_dendriform(const BiHomAlgebra& a, const LinearMap& sigma,
                                   const LinearMap& tau, const LinearMap& r) {
  return simprop_dendriform(a, sigma, tau, LinearMap::identity(a.dim()), r);
}

DendriformTriple moregendend_triple(const HomAlgebra& h, unsigned n, const LinearMap& r) {
  require(check_hom_associative(h), "A is Hom-associative");
  require_square(r, h.dim(), "R");
  require(check_rota_baxter(r, h.mu, AlphaPowerRotaBaxter{h.alpha, n}),
          "R is an alpha^n-Rota-Baxter operator");
  const LinearMap an = power(h.alpha, n);
  BiHomDendriform d = simprop_dendriform(h.as_bihom(), an, an, r);
  BiHomAlgebra sum = dendriform_sum(d);
  HomPreLie circ = dendriform_circ(d);
  return {std::move(d), HomAlgebra{std::move(sum.mu), std::move(sum.alpha)}, std::move(circ)};
}

HomPreLie analoglie_prelie(const HomLie& l, unsigned n, const LinearMap& r) {
  require(check_hom_lie(l), "L is Hom-Lie");
  require_square(r, l.dim(), "R");
  require(check_rota_baxter(r, l.bracket, LieAlphaPowerRotaBaxter{l.alpha, n}),
          "R is an alpha^n-Rota-Baxter operator on the bracket");
  const LinearMap id = LinearMap::identity(l.dim());
  return {transform(l.bracket, id, r, power(l.alpha, n)), power(l.alpha, n + 1)};
}

AbrbForms abrb_forms(const BiHomAlgebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  require_square(a.alpha, n, "alpha");
  require_square(a.beta, n, "beta");
  if (r.dim() != n) throw ShapeError("abrb: r has the wrong dimension");
  const LinearMap a3 = power(a.alpha, 3);
  const LinearMap b3 = power(a.beta, 3);
  const LinearMap ab3 = compose(a.alpha, b3);
  const LinearMap a3b = compose(a3, a.beta);

  LinearMap left(n, n);
  LinearMap right(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector ek = basis_vector(n, k);
    Vector lcol(n);
    Vector rcol(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = r(i, j);
        if (c.is_zero()) continue;
        add_scaled(lcol, c,
                   apply_bilinear(a.mu, ab3.column(i), apply_bilinear(a.mu, ek, a3.column(j))));
        add_scaled(rcol, c,
                   apply_bilinear(a.mu, apply_bilinear(a.mu, b3.column(i), ek), a3b.column(j)));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      left(i, k) = lcol[i];
      right(i, k) = rcol[i];
    }
  }
  return {std::move(left), std::move(right)};
}

LinearMap abrb_operator(const BiHomAlgebra& a, const Tensor2& r) {
  require(check_bihom_associative(a), "A is BiHom-associative");
  require(check_aybe(a, r), "r solves the associative BiHom-Yang-Baxter equation");
  auto forms = abrb_forms(a, r);
  if (forms.left != forms.right) {
    throw InternalInconsistencyError("abrb: the two expressions for R differ");
  }
  return std::move(forms.left);
}

HomPreLie gengd_novikov(const HomAlgebra& h, unsigned k, const LinearMap& d) {
  require(check_hom_associative(h), "A is Hom-associative");
  require(check_commutative(h.mu), "A is commutative");
  require_square(d, h.dim(), "D");
  require(check_derivation(d, h.mu, AlphaPowerDerivation{h.alpha, k}),
          "D is an alpha^k-derivation");
  const LinearMap id = LinearMap::identity(h.dim());
  return {transform(h.mu, id, power(h.alpha, k), d), power(h.alpha, k + 1)};
}

LinearMap mu_delta_map(const InfHomBialgebra& b) {
  require(validate_inf_hom_bialgebra(b), "input is an infinitesimal Hom-bialgebra");
  const std::size_t n = b.dim();
  LinearMap d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector col(n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (!b.delta(i, p, q).is_zero()) add_scaled(col, b.delta(i, p, q), b.mu.product(p, q));
    for (std::size_t row = 0; row < n; ++row) d(row, i) = col[row];
  }
  return d;
}

BulletForms bullet_forms(const InfHomBialgebra& b) {
  const std::size_t n = b.dim();
  require_square(b.alpha, n, "alpha");
  BulletForms forms{BilinearOp(n), BilinearOp(n)};
  for (std::size_t x = 0; x < n; ++x) {
    const Vector ax = b.alpha.column(x);
    for (std::size_t y = 0; y < n; ++y) {
      Vector left(n);
      Vector right(n);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = b.delta(y, p, q);
          if (c.is_zero()) continue;
          const Vector ep = basis_vector(n, p);
          const Vector eq = basis_vector(n, q);
          // α(y₁)(α(x)y₂)
          add_scaled(left, c,
                     apply_bilinear(b.mu, b.alpha.column(p), apply_bilinear(b.mu, ax, eq)));
          // (y₁α(x))α(y₂)
          add_scaled(right, c,
                     apply_bilinear(b.mu, apply_bilinear(b.mu, ep, ax), b.alpha.column(q)));
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        forms.left(x, y, k) = left[k];
        forms.right(x, y, k) = right[k];
      }
    }
  }
  return forms;
}

HomPreLie infprelie_bullet(const InfHomBialgebra& b) {
  require(validate_inf_hom_bialgebra(b), "input is an infinitesimal Hom-bialgebra");
  auto forms = bullet_forms(b);
  if (forms.left != forms.right) {
    throw InternalInconsistencyError("bullet: the two expressions differ");
  }
  return {std::move(forms.left), power(b.alpha, 3)};
}

Comultiplication delta_r(const HomAlgebra& h, const Tensor2& r, bool negate_r) {
  const Tensor2 rr = negate_r ? Scalar(-1) * r : r;
  require(check_aybe(h.as_bihom(), rr), "r solves the associative Hom-Yang-Baxter equation");
  const std::size_t n = h.dim();
  Comultiplication delta(n);
  for (std::size_t b = 0; b < n; ++b) {
    const Vector eb = basis_vector(n, b);
    Tensor2 img(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = rr(i, j);
        if (c.is_zero()) continue;
        img += c * Tensor2::outer(h.alpha.column(i), apply_bilinear(h.mu, basis_vector(n, j), eb));
        img -= c * Tensor2::outer(apply_bilinear(h.mu, eb, basis_vector(n, i)), h.alpha.column(j));
      }
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) delta(b, p, q) = img(p, q);
  }
  return delta;
}

BilinearOp aguiar_bullet(const BilinearOp& mu, const Comultiplication& delta) {
  const std::size_t n = mu.dim();
  require(validate_inf_hom_bialgebra({mu, delta, LinearMap::identity(n)}),
          "input is an infinitesimal bialgebra");
  BilinearOp out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vector v(n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (!delta(b, p, q).is_zero())
            add_scaled(v, delta(b, p, q),
                       apply_bilinear(mu, mu.product(p, a), basis_vector(n, q)));
      for (std::size_t k = 0; k < n; ++k) out(a, b, k) = v[k];
    }
  }
  return out;
}

}  // namespace bihom
