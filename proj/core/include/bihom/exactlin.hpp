#ifndef BIHOM_EXACTLIN_HPP
#define BIHOM_EXACTLIN_HPP

// Exact rational linear and multilinear algebra over a fixed basis
// e_0, ..., e_{n-1}. Every object here is an immutable-after-build value.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bihom/scalar.hpp"
#include "bihom/verdict.hpp"

namespace bihom {

/// Coordinates in the fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t dim);
Vector basis_vector(std::size_t dim, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
/// acc += c * v
void add_scaled(Vector& acc, const Scalar& c, std::span<const Scalar> v);

/// Matrix of a linear map. Column convention: the image of e_j is
/// sum_i (*this)(i, j) e_i.
class LinearMap {
 public:
  LinearMap() = default;
  /// Zero map from a dim_in-dimensional space to a dim_out-dimensional one.
  LinearMap(std::size_t dim_out, std::size_t dim_in);

  static LinearMap identity(std::size_t dim);
  static LinearMap zero(std::size_t dim) { return LinearMap(dim, dim); }
  static LinearMap diagonal(const std::vector<Scalar>& diag);
  /// rows[i][j] is entry (i, j).
  static LinearMap from_rows(const std::vector<std::vector<Scalar>>& rows);
  /// columns[j] is the image of e_j.
  static LinearMap from_columns(const std::vector<Vector>& columns);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  bool is_square() const { return dim_in_ == dim_out_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_in_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_in_ + j]; }

  /// Image of e_j.
  Vector column(std::size_t j) const;
  Vector apply(std::span<const Scalar> v) const;

  bool is_identity() const;
  bool is_zero() const;

  /// Row-major entries.
  const std::vector<Scalar>& entries() const { return entries_; }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t dim_out_ = 0;
  std::size_t dim_in_ = 0;
  std::vector<Scalar> entries_;
};

/// f ∘ g. Throws ShapeError when f.dim_in != g.dim_out.
LinearMap compose(const LinearMap& f, const LinearMap& g);
LinearMap operator+(const LinearMap& f, const LinearMap& g);
LinearMap operator-(const LinearMap& f, const LinearMap& g);
LinearMap operator*(const Scalar& c, const LinearMap& f);
/// f^n for square f; f^0 is the identity.
LinearMap power(const LinearMap& f, unsigned n);
bool commute(const LinearMap& f, const LinearMap& g);

/// Inverse by exact Gauss-Jordan elimination, or nullopt when singular.
std::optional<LinearMap> try_invert(const LinearMap& f);
/// Throws NotInvertibleError on a singular (or ShapeError on a non-square) map.
LinearMap invert(const LinearMap& f);

/// Structure constants: e_i · e_j = sum_k (*this)(i, j, k) e_k. No symmetry
/// is assumed.
class BilinearOp {
 public:
  BilinearOp() = default;
  explicit BilinearOp(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return cube_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return cube_[(i * dim_ + j) * dim_ + k];
  }

  /// e_i · e_j as a coordinate vector.
  Vector product(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  const std::vector<Scalar>& cube() const { return cube_; }

  friend bool operator==(const BilinearOp&, const BilinearOp&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> cube_;
};

/// Bilinear extension of the structure constants.
Vector apply_bilinear(const BilinearOp& m, std::span<const Scalar> u,
                      std::span<const Scalar> v);

/// (x, y) ↦ outer(m(left(x), right(y))). Covers μ∘(α⊗β) and α∘μ.
BilinearOp transform(const BilinearOp& m, const LinearMap& outer,
                     const LinearMap& left, const LinearMap& right);
BilinearOp operator+(const BilinearOp& a, const BilinearOp& b);
BilinearOp operator-(const BilinearOp& a, const BilinearOp& b);
/// (x, y) ↦ m(y, x)
BilinearOp opposite(const BilinearOp& m);

/// r = sum coeff(i, j) e_i ⊗ e_j
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return coeffs_[i * dim_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) { return coeffs_[i * dim_ + j]; }

  /// u ⊗ v
  static Tensor2 outer(std::span<const Scalar> u, std::span<const Scalar> v);

  bool is_zero() const;
  const std::vector<Scalar>& flat() const { return coeffs_; }

  Tensor2& operator+=(const Tensor2& other);
  Tensor2& operator-=(const Tensor2& other);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Scalar& c, Tensor2 t);

  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> coeffs_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return coeffs_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return coeffs_[(i * dim_ + j) * dim_ + k];
  }

  /// this += c · (u ⊗ v ⊗ w)
  void add_outer(const Scalar& c, std::span<const Scalar> u, std::span<const Scalar> v,
                 std::span<const Scalar> w);

  bool is_zero() const;
  const std::vector<Scalar>& flat() const { return coeffs_; }

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> coeffs_;
};

/// (f ⊗ g)(t)
Tensor2 map_tensor2(const LinearMap& f, const LinearMap& g, const Tensor2& t);

/// Δ(e_i) = sum_{j,k} (*this)(i, j, k) e_j ⊗ e_k
class Comultiplication {
 public:
  Comultiplication() = default;
  explicit Comultiplication(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return cube_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return cube_[(i * dim_ + j) * dim_ + k];
  }

  Tensor2 image(std::size_t i) const;
  Tensor2 apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  const std::vector<Scalar>& cube() const { return cube_; }

  friend bool operator==(const Comultiplication&, const Comultiplication&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> cube_;
};

/// Δ ∘ f
Comultiplication precompose(const Comultiplication& delta, const LinearMap& f);

/// Pass iff f(e_i · e_j) = f(e_i) · f(e_j) for every basis pair.
CheckVerdict is_algebra_map(const LinearMap& f, const BilinearOp& m);

/// Pass iff (f ⊗ f) ∘ Δ = Δ ∘ f; witness is the basis index i.
CheckVerdict is_coalgebra_map(const LinearMap& f, const Comultiplication& delta);

/// Pass iff every structure constant agrees; the witness is the first
/// differing (i, j, k) with the two constants.
CheckVerdict bilinear_equal(const BilinearOp& a, const BilinearOp& b);

/// Pass iff f ∘ g = g ∘ f; the witness is the first basis vector e_j where
/// the two composites differ.
CheckVerdict commutation(std::string_view law, const LinearMap& f, const LinearMap& g);

void require_square(const LinearMap& f, std::size_t dim, std::string_view what);

}  // namespace bihom

#endif  // BIHOM_EXACTLIN_HPP
