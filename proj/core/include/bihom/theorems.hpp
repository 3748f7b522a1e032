#ifndef BIHOM_THEOREMS_HPP
#define BIHOM_THEOREMS_HPP

// Theorem pipelines: run a construction on an instance and every checker its
// conclusion promises. Hypothesis failures become reports, not exceptions.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bihom/structures.hpp"

namespace bihom {

enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12 };

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4,  TheoremId::T5,  TheoremId::T6,
    TheoremId::T7, TheoremId::T8, TheoremId::T9, TheoremId::T10, TheoremId::T11, TheoremId::T12};

std::string to_string(TheoremId id);
/// "T1".."T12"; throws InvalidParameterError otherwise.
TheoremId parse_theorem_id(std::string_view text);

/// Inputs for any theorem. Which fields a theorem reads:
///   T1  algebra (classical), twist_alpha, twist_beta?, dendriform?, delta?
///   T2  dendriform
///   T3  algebra, sigma, tau, op = R
///   T4  algebra, sigma, tau, op = D
///   T5  algebra, sigma, tau, op = R
///   T6  algebra, sigma, op = R
///   T7  algebra, sigma, tau, eta?, op = R
///   T8  lie, exponent = n, op = R
///   T9  algebra, r
///   T10 algebra (Hom: alpha = beta), delta? and/or op = D with exponent = k
///   T11 algebra (classical), delta, twist_alpha
///   T12 algebra (Hom), r, delta?, negate_r
struct TheoremInstance {
  std::string description;
  std::optional<BiHomAlgebra> algebra;
  std::optional<BiHomDendriform> dendriform;
  std::optional<HomLie> lie;
  std::optional<Comultiplication> delta;
  std::optional<LinearMap> sigma;
  std::optional<LinearMap> tau;
  std::optional<LinearMap> eta;
  std::optional<LinearMap> op;
  std::optional<LinearMap> twist_alpha;
  std::optional<LinearMap> twist_beta;
  std::optional<Tensor2> r;
  unsigned exponent = 0;
  bool negate_r = false;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::T1;
  std::string instance_description;
  std::vector<std::pair<std::string, CheckVerdict>> sub_verdicts;
  /// True iff every sub-verdict passed.
  bool passed = false;
  /// Set when a hypothesis failed; a matching failed sub-verdict is recorded.
  std::optional<std::string> failed_precondition;
  std::vector<std::string> notes;
};

/// Throws InvalidParameterError when the instance lacks a field the theorem
/// needs; everything else is reported.
TheoremReport verify_theorem(TheoremId id, const TheoremInstance& instance);

/// Runs the instances in parallel; reports come back in instance order.
std::vector<TheoremReport> verify_theorems(TheoremId id,
                                           const std::vector<TheoremInstance>& instances,
                                           unsigned threads = 0);

/// Instances built from the catalogue and from search results, covering the
/// cases each theorem is exercised on by default.
std::vector<TheoremInstance> catalogue_instances(TheoremId id);

}  // namespace bihom

#endif  // BIHOM_THEOREMS_HPP
