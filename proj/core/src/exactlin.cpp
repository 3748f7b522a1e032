#include "bihom/exactlin.hpp"

#include <string>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

void require_same_dim(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b) throw ShapeError(std::string(what) + ": dimension mismatch " + dims(a, b));
}

}  // namespace

Vector zero_vector(std::size_t dim) { return Vector(dim); }

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = Scalar(1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "vector sum");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "vector difference");
  Vector out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& s : out) s *= c;
  return out;
}

void add_scaled(Vector& acc, const Scalar& c, std::span<const Scalar> v) {
  require_same_dim(acc.size(), v.size(), "add_scaled");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) acc[i].add_product(c, v[i]);
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(std::size_t dim_out, std::size_t dim_in)
    : dim_out_(dim_out), dim_in_(dim_in), entries_(dim_out * dim_in) {
  if (dim_out == 0 || dim_in == 0) throw ShapeError("linear map dimensions must be positive");
}

LinearMap LinearMap::identity(std::size_t dim) {
  LinearMap m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar(1);
  return m;
}

LinearMap LinearMap::diagonal(const std::vector<Scalar>& diag) {
  LinearMap m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) throw ShapeError("linear map needs at least one row");
  LinearMap m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_dim(rows[i].size(), m.dim_in_, "linear map row");
    for (std::size_t j = 0; j < m.dim_in_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LinearMap LinearMap::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) throw ShapeError("linear map needs at least one column");
  LinearMap m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same_dim(columns[j].size(), m.dim_out_, "linear map column");
    for (std::size_t i = 0; i < m.dim_out_; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector LinearMap::column(std::size_t j) const {
  Vector v(dim_out_);
  for (std::size_t i = 0; i < dim_out_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector LinearMap::apply(std::span<const Scalar> v) const {
  require_same_dim(v.size(), dim_in_, "apply linear map");
  Vector out(dim_out_);
  for (std::size_t j = 0; j < dim_in_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim_out_; ++i) out[i].add_product((*this)(i, j), v[j]);
  }
  return out;
}

bool LinearMap::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < dim_out_; ++i) {
    for (std::size_t j = 0; j < dim_in_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool LinearMap::is_zero() const { return bihom::is_zero(entries_); }

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.dim_in() != g.dim_out()) {
    throw ShapeError("compose: dimension mismatch " + dims(f.dim_in(), g.dim_out()));
  }
  LinearMap out(f.dim_out(), g.dim_in());
  for (std::size_t i = 0; i < f.dim_out(); ++i) {
    for (std::size_t k = 0; k < f.dim_in(); ++k) {
      const auto& a = f(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < g.dim_in(); ++j) out(i, j).add_product(a, g(k, j));
    }
  }
  return out;
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) {
  if (f.dim_in() != g.dim_in() || f.dim_out() != g.dim_out()) {
    throw ShapeError("linear map sum: shape mismatch");
  }
  LinearMap out = f;
  for (std::size_t i = 0; i < f.dim_out(); ++i) {
    for (std::size_t j = 0; j < f.dim_in(); ++j) out(i, j) += g(i, j);
  }
  return out;
}

LinearMap operator-(const LinearMap& f, const LinearMap& g) {
  return f + Scalar(-1) * g;
}

LinearMap operator*(const Scalar& c, const LinearMap& f) {
  LinearMap out = f;
  for (std::size_t i = 0; i < f.dim_out(); ++i) {
    for (std::size_t j = 0; j < f.dim_in(); ++j) out(i, j) *= c;
  }
  return out;
}

LinearMap power(const LinearMap& f, unsigned n) {
  if (!f.is_square()) throw ShapeError("power of a non-square map");
  LinearMap result = LinearMap::identity(f.dim_in());
  LinearMap base = f;
  while (n > 0) {
    if (n & 1u) result = compose(result, base);
    n >>= 1u;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

bool commute(const LinearMap& f, const LinearMap& g) {
  return compose(f, g) == compose(g, f);
}

std::optional<LinearMap> try_invert(const LinearMap& f) {
  if (!f.is_square()) throw ShapeError("invert: map is not square");
  const std::size_t n = f.dim_in();
  LinearMap a = f;
  LinearMap inv = LinearMap::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar scale = Scalar(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a(row, col).is_zero()) continue;
      const Scalar factor = a(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(row, j) -= factor * a(col, j);
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

LinearMap invert(const LinearMap& f) {
  auto inv = try_invert(f);
  if (!inv) throw NotInvertibleError("invert: matrix is singular");
  return *std::move(inv);
}

void require_square(const LinearMap& f, std::size_t dim, std::string_view what) {
  if (f.dim_in() != dim || f.dim_out() != dim) {
    throw ShapeError(std::string(what) + ": expected a " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " map, got " + std::to_string(f.dim_out()) +
                     "x" + std::to_string(f.dim_in()));
  }
}

// --------------------------------------------------------------- BilinearOp

BilinearOp::BilinearOp(std::size_t dim) : dim_(dim), cube_(dim * dim * dim) {
  if (dim == 0) throw ShapeError("bilinear op dimension must be positive");
}

Vector BilinearOp::product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

bool BilinearOp::is_zero() const { return bihom::is_zero(cube_); }

Vector apply_bilinear(const BilinearOp& m, std::span<const Scalar> u,
                      std::span<const Scalar> v) {
  const std::size_t n = m.dim();
  require_same_dim(u.size(), n, "apply_bilinear left");
  require_same_dim(v.size(), n, "apply_bilinear right");
  Vector out(n);
  Scalar uv;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      uv = u[i];
      uv *= v[j];
      for (std::size_t k = 0; k < n; ++k) out[k].add_product(uv, m(i, j, k));
    }
  }
  return out;
}

BilinearOp transform(const BilinearOp& m, const LinearMap& outer, const LinearMap& left,
                     const LinearMap& right) {
  const std::size_t n = m.dim();
  require_square(outer, n, "transform outer");
  require_square(left, n, "transform left");
  require_square(right, n, "transform right");
  BilinearOp out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector li = left.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = outer.apply(apply_bilinear(m, li, right.column(j)));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = prod[k];
    }
  }
  return out;
}

BilinearOp operator+(const BilinearOp& a, const BilinearOp& b) {
  require_same_dim(a.dim(), b.dim(), "bilinear sum");
  BilinearOp out = a;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) += b(i, j, k);
  return out;
}

BilinearOp operator-(const BilinearOp& a, const BilinearOp& b) {
  require_same_dim(a.dim(), b.dim(), "bilinear difference");
  BilinearOp out = a;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) -= b(i, j, k);
  return out;
}

BilinearOp opposite(const BilinearOp& m) {
  const std::size_t n = m.dim();
  BilinearOp out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = m(j, i, k);
  return out;
}

// ------------------------------------------------------------------ tensors

Tensor2::Tensor2(std::size_t dim) : dim_(dim), coeffs_(dim * dim) {
  if (dim == 0) throw ShapeError("tensor dimension must be positive");
}

Tensor2 Tensor2::outer(std::span<const Scalar> u, std::span<const Scalar> v) {
  require_same_dim(u.size(), v.size(), "outer product");
  Tensor2 t(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) t(i, j) = u[i] * v[j];
  }
  return t;
}

bool Tensor2::is_zero() const { return bihom::is_zero(coeffs_); }

Tensor2& Tensor2::operator+=(const Tensor2& other) {
  require_same_dim(dim_, other.dim_, "tensor sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& other) {
  require_same_dim(dim_, other.dim_, "tensor difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Tensor2 operator*(const Scalar& c, Tensor2 t) {
  for (auto& s : t.coeffs_) s *= c;
  return t;
}

Tensor3::Tensor3(std::size_t dim) : dim_(dim), coeffs_(dim * dim * dim) {
  if (dim == 0) throw ShapeError("tensor dimension must be positive");
}

void Tensor3::add_outer(const Scalar& c, std::span<const Scalar> u,
                        std::span<const Scalar> v, std::span<const Scalar> w) {
  if (c.is_zero()) return;
  Scalar cu;
  Scalar cuv;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    cu = c;
    cu *= u[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      cuv = cu;
      cuv *= v[j];
      for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k).add_product(cuv, w[k]);
    }
  }
}

bool Tensor3::is_zero() const { return bihom::is_zero(coeffs_); }

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  require_same_dim(dim_, other.dim_, "tensor sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  require_same_dim(dim_, other.dim_, "tensor difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Tensor2 map_tensor2(const LinearMap& f, const LinearMap& g, const Tensor2& t) {
  const std::size_t n = t.dim();
  require_square(f, n, "map_tensor2 left");
  require_square(g, n, "map_tensor2 right");
  Tensor2 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = t(i, j);
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (f(a, i).is_zero()) continue;
        const Scalar cf = c * f(a, i);
        for (std::size_t b = 0; b < n; ++b) out(a, b).add_product(cf, g(b, j));
      }
    }
  }
  return out;
}

// --------------------------------------------------------- Comultiplication

Comultiplication::Comultiplication(std::size_t dim) : dim_(dim), cube_(dim * dim * dim) {
  if (dim == 0) throw ShapeError("comultiplication dimension must be positive");
}

Tensor2 Comultiplication::image(std::size_t i) const {
  Tensor2 t(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) t(j, k) = (*this)(i, j, k);
  return t;
}

Tensor2 Comultiplication::apply(std::span<const Scalar> v) const {
  require_same_dim(v.size(), dim_, "apply comultiplication");
  Tensor2 t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) t(j, k).add_product(v[i], (*this)(i, j, k));
  }
  return t;
}

bool Comultiplication::is_zero() const { return bihom::is_zero(cube_); }

Comultiplication precompose(const Comultiplication& delta, const LinearMap& f) {
  const std::size_t n = delta.dim();
  require_square(f, n, "precompose comultiplication");
  Comultiplication out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor2 img = delta.apply(f.column(i));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = img(j, k);
  }
  return out;
}

// ------------------------------------------------------------------- checks

CheckVerdict is_algebra_map(const LinearMap& f, const BilinearOp& m) {
  const std::size_t n = m.dim();
  require_square(f, n, "is_algebra_map");
  std::vector<Vector> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = f.column(i);
  return check_on_basis<2>("multiplicativity", n, [&](const auto& t) {
    return std::pair{f.apply(m.product(t[0], t[1])),
                     apply_bilinear(m, cols[t[0]], cols[t[1]])};
  });
}

CheckVerdict is_coalgebra_map(const LinearMap& f, const Comultiplication& delta) {
  const std::size_t n = delta.dim();
  require_square(f, n, "is_coalgebra_map");
  return check_on_basis<1>("comultiplicativity", n, [&](const auto& t) {
    return std::pair{map_tensor2(f, f, delta.image(t[0])).flat(),
                     delta.apply(f.column(t[0])).flat()};
  });
}

CheckVerdict bilinear_equal(const BilinearOp& a, const BilinearOp& b) {
  require_same_dim(a.dim(), b.dim(), "bilinear_equal");
  return check_on_basis<3>("bilinear-equal", a.dim(), [&](const auto& t) {
    return std::pair{Vector{a(t[0], t[1], t[2])}, Vector{b(t[0], t[1], t[2])}};
  });
}

CheckVerdict commutation(std::string_view law, const LinearMap& f, const LinearMap& g) {
  if (!f.is_square() || !g.is_square() || f.dim_in() != g.dim_in()) {
    throw ShapeError(std::string(law) + ": maps must be square of equal size");
  }
  const LinearMap fg = compose(f, g);
  const LinearMap gf = compose(g, f);
  return check_on_basis<1>(law, f.dim_in(), [&](const auto& t) {
    return std::pair{fg.column(t[0]), gf.column(t[0])};
  });
}

}  // namespace bihom
