#ifndef BIHOM_VERDICT_HPP
#define BIHOM_VERDICT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

/// Where an identity broke: the law's name, the basis tuple, and the two
/// sides as flat coordinate lists (vectors, or flattened tensors).
struct Witness {
  std::string law;
  std::vector<std::size_t> indices;
  std::vector<Scalar> lhs;
  std::vector<Scalar> rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

class CheckVerdict {
 public:
  static CheckVerdict pass() { return CheckVerdict{}; }
  static CheckVerdict fail(Witness witness) {
    CheckVerdict v;
    v.witness_ = std::move(witness);
    return v;
  }

  bool passed() const { return !witness_.has_value(); }
  explicit operator bool() const { return passed(); }

  /// Present iff the check failed.
  const std::optional<Witness>& witness() const { return witness_; }

  friend bool operator==(const CheckVerdict&, const CheckVerdict&) = default;

 private:
  std::optional<Witness> witness_;
};

/// Runs checks in order and returns the first failure, or pass.
template <class... Checks>
CheckVerdict first_failure(Checks&&... checks) {
  CheckVerdict result = CheckVerdict::pass();
  // Fold over || stops at the first failing check.
  (void)((result = checks(), !result.passed()) || ...);
  return result;
}

/// Evaluates both sides of an identity on every basis tuple of length
/// `Arity` in lexicographic order; the first mismatch is the witness, which
/// is therefore the lexicographically smallest failing tuple.
///
/// `sides(tuple)` returns a pair of equally sized coordinate lists.
template <std::size_t Arity, class Sides>
CheckVerdict check_on_basis(std::string_view law, std::size_t dim, Sides&& sides) {
  static_assert(Arity >= 1);
  if (dim == 0) return CheckVerdict::pass();
  std::array<std::size_t, Arity> t{};
  while (true) {
    auto [lhs, rhs] = sides(static_cast<const std::array<std::size_t, Arity>&>(t));
    if (lhs != rhs) {
      return CheckVerdict::fail(Witness{std::string(law),
                                        std::vector<std::size_t>(t.begin(), t.end()),
                                        std::move(lhs), std::move(rhs)});
    }
    std::size_t pos = Arity;
    while (pos > 0) {
      --pos;
      if (++t[pos] < dim) break;
      t[pos] = 0;
      if (pos == 0) return CheckVerdict::pass();
    }
  }
}

}  // namespace bihom

#endif  // BIHOM_VERDICT_HPP
