#include "bihom/discovery.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

constexpr std::uint64_t kChunk = 2048;

using Entry = std::pair<std::size_t, std::size_t>;

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

std::vector<Entry> free_entries(const SearchSpec& spec, std::size_t dim) {
  std::vector<Entry> out;
  if (spec.support) {
    std::set<Entry> seen;
    for (const auto& e : *spec.support) {
      if (e.first >= dim || e.second >= dim) {
        throw InvalidParameterError("support entry (" + std::to_string(e.first) + ", " +
                                    std::to_string(e.second) + ") out of range");
      }
      if (!seen.insert(e).second) {
        throw InvalidParameterError("duplicate support entry (" + std::to_string(e.first) +
                                    ", " + std::to_string(e.second) + ")");
      }
      out.push_back(e);
    }
    return out;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out.emplace_back(i, j);
  return out;
}

void validate_spec(const SearchSpec& spec, std::size_t dim) {
  if (spec.coefficients.empty()) throw InvalidParameterError("empty coefficient set");
  if (spec.max_dim > 4) throw InvalidParameterError("dimension cap above 4");
  if (dim > spec.max_dim) {
    throw InvalidParameterError("ambient dimension " + std::to_string(dim) +
                                " exceeds the cap " + std::to_string(spec.max_dim));
  }
  std::set<Scalar> distinct(spec.coefficients.begin(), spec.coefficients.end());
  if (distinct.size() != spec.coefficients.size()) {
    throw InvalidParameterError("duplicate coefficient");
  }
  switch (spec.target) {
    case SearchTarget::rota_baxter:
      if (!spec.rb_kind) throw InvalidParameterError("rota-baxter search needs a kind");
      break;
    case SearchTarget::derivation:
      if (!spec.derivation_kind) throw InvalidParameterError("derivation search needs a kind");
      break;
    default:
      break;
  }
}

// Fills `slots` from candidate index `c`, first entry most significant.
template <class Out>
void decode(std::uint64_t c, const std::vector<Entry>& entries, const std::vector<Scalar>& coeffs,
            Out&& set) {
  const std::uint64_t base = coeffs.size();
  for (std::size_t p = entries.size(); p-- > 0;) {
    set(entries[p], coeffs[c % base]);
    c /= base;
  }
}

// Runs `probe` over [0, count) in windows, `threads` chunks at a time, and
// hands hits to `emit` in candidate order.
template <class T, class Probe, class Emit>
void run_windows(std::uint64_t count, unsigned threads, Probe&& probe, Emit&& emit) {
  threads = std::max(1u, threads);
  const std::uint64_t window = kChunk * threads;
  for (std::uint64_t start = 0; start < count; start += window) {
    const std::uint64_t end = std::min(count, start + window);
    const std::uint64_t span = end - start;
    const unsigned parts =
        static_cast<unsigned>(std::min<std::uint64_t>(threads, (span + kChunk - 1) / kChunk));
    std::vector<std::vector<std::pair<std::uint64_t, T>>> hits(parts);
    if (parts <= 1) {
      for (std::uint64_t c = start; c < end; ++c)
        if (auto h = probe(c)) hits[0].emplace_back(c, std::move(*h));
    } else {
      std::vector<std::exception_ptr> errors(parts);
      std::vector<std::thread> pool;
      const std::uint64_t step = (span + parts - 1) / parts;
      for (unsigned p = 0; p < parts; ++p) {
        pool.emplace_back([&, p] {
          try {
            const std::uint64_t lo = start + p * step;
            const std::uint64_t hi = std::min(end, lo + step);
            for (std::uint64_t c = lo; c < hi; ++c)
              if (auto h = probe(c)) hits[p].emplace_back(c, std::move(*h));
          } catch (...) {
            errors[p] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (auto& part : hits)
      for (auto& [c, h] : part) emit(c, std::move(h));
  }
}

void certify(const CheckVerdict& v, const std::string& what) {
  if (!v.passed()) {
    throw InternalInconsistencyError("search result failed re-certification: " + what + " (" +
                                     v.witness()->law + ")");
  }
}

std::vector<LinearMap> single_maps(const SearchSpec& spec, const BilinearOp& mu,
                                   unsigned threads) {
  const std::size_t dim = mu.dim();
  const auto entries = free_entries(spec, dim);
  const std::uint64_t count = saturating_pow(spec.coefficients.size(), entries.size());
  std::vector<LinearMap> maps;
  run_windows<LinearMap>(
      count, threads,
      [&](std::uint64_t c) -> std::optional<LinearMap> {
        LinearMap f(dim, dim);
        decode(c, entries, spec.coefficients,
               [&](const Entry& e, const Scalar& s) { f(e.first, e.second) = s; });
        if (!is_algebra_map(f, mu)) return std::nullopt;
        return f;
      },
      [&](std::uint64_t, LinearMap f) { maps.push_back(std::move(f)); });
  return maps;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("BIHOM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t candidate_count(const SearchSpec& spec, std::size_t dim) {
  const std::size_t n = spec.support ? spec.support->size() : dim * dim;
  return saturating_pow(spec.coefficients.size(), n);
}

void search_stream(const SearchSpec& spec, const BiHomAlgebra& ambient,
                   const std::function<void(const Found&)>& sink) {
  const std::size_t dim = ambient.dim();
  validate_spec(spec, dim);
  const auto entries = free_entries(spec, dim);
  const std::uint64_t count = candidate_count(spec, dim);
  if (count > spec.budget) {
    throw SearchSpaceTooLargeError(std::to_string(count) + " candidates exceed the budget of " +
                                   std::to_string(spec.budget));
  }
  const unsigned threads = spec.threads ? spec.threads : default_thread_count();
  const BilinearOp& mu = ambient.mu;

  switch (spec.target) {
    case SearchTarget::aybe: {
      if (!check_bihom_associative(ambient)) {
        throw PreconditionError("ambient is BiHom-associative");
      }
      run_windows<Tensor2>(
          count, threads,
          [&](std::uint64_t c) -> std::optional<Tensor2> {
            Tensor2 r(dim);
            decode(c, entries, spec.coefficients,
                   [&](const Entry& e, const Scalar& s) { r(e.first, e.second) = s; });
            if (!check_aybe(ambient, r)) return std::nullopt;
            return r;
          },
          [&](std::uint64_t c, Tensor2 r) {
            certify(check_aybe(ambient, r), "aybe");
            sink(Found{c, std::move(r)});
          });
      return;
    }
    case SearchTarget::rota_baxter: {
      const RotaBaxterKind& kind = *spec.rb_kind;
      validate_rota_baxter_kind(mu, kind);
      run_windows<LinearMap>(
          count, threads,
          [&](std::uint64_t c) -> std::optional<LinearMap> {
            LinearMap f(dim, dim);
            decode(c, entries, spec.coefficients,
                   [&](const Entry& e, const Scalar& s) { f(e.first, e.second) = s; });
            if (!rota_baxter_identity(f, mu, kind)) return std::nullopt;
            return f;
          },
          [&](std::uint64_t c, LinearMap f) {
            certify(check_rota_baxter(f, mu, kind), "rota-baxter");
            sink(Found{c, std::move(f)});
          });
      return;
    }
    case SearchTarget::derivation: {
      const DerivationKind& kind = *spec.derivation_kind;
      validate_derivation_kind(mu, kind);
      run_windows<LinearMap>(
          count, threads,
          [&](std::uint64_t c) -> std::optional<LinearMap> {
            LinearMap f(dim, dim);
            decode(c, entries, spec.coefficients,
                   [&](const Entry& e, const Scalar& s) { f(e.first, e.second) = s; });
            if (!derivation_identity(f, mu, kind)) return std::nullopt;
            return f;
          },
          [&](std::uint64_t c, LinearMap f) {
            certify(check_derivation(f, mu, kind), "derivation");
            sink(Found{c, std::move(f)});
          });
      return;
    }
    case SearchTarget::algebra_map_pair: {
      const auto maps = single_maps(spec, mu, threads);
      const std::uint64_t m = maps.size();
      for (std::uint64_t i = 0; i < m; ++i) {
        for (std::uint64_t j = 0; j < m; ++j) {
          if (!commute(maps[i], maps[j])) continue;
          certify(first_failure([&] { return is_algebra_map(maps[i], mu); },
                                [&] { return is_algebra_map(maps[j], mu); },
                                [&] { return commutation("pair-commutes", maps[i], maps[j]); }),
                  "algebra-map pair");
          sink(Found{i * m + j, std::pair{maps[i], maps[j]}});
        }
      }
      return;
    }
  }
}

std::vector<Found> search(const SearchSpec& spec, const BiHomAlgebra& ambient) {
  std::vector<Found> out;
  search_stream(spec, ambient, [&](const Found& f) { out.push_back(f); });
  return out;
}

namespace {

template <class T>
std::vector<T> objects(const std::vector<Found>& found) {
  std::vector<T> out;
  out.reserve(found.size());
  for (const auto& f : found) out.push_back(std::get<T>(f.object));
  return out;
}

}  // namespace

std::vector<Tensor2> find_aybe_solutions(const BiHomAlgebra& ambient, SearchSpec spec) {
  spec.target = SearchTarget::aybe;
  return objects<Tensor2>(search(spec, ambient));
}

std::vector<LinearMap> find_rota_baxter(const BilinearOp& mu, const RotaBaxterKind& kind,
                                        SearchSpec spec) {
  spec.target = SearchTarget::rota_baxter;
  spec.rb_kind = kind;
  return objects<LinearMap>(search(spec, BiHomAlgebra::classical(mu)));
}

std::vector<LinearMap> find_derivations(const BilinearOp& mu, const DerivationKind& kind,
                                        SearchSpec spec) {
  spec.target = SearchTarget::derivation;
  spec.derivation_kind = kind;
  return objects<LinearMap>(search(spec, BiHomAlgebra::classical(mu)));
}

std::vector<LinearMap> find_algebra_maps(const BilinearOp& mu, SearchSpec spec) {
  validate_spec(spec, mu.dim());
  const std::uint64_t count = candidate_count(spec, mu.dim());
  if (count > spec.budget) {
    throw SearchSpaceTooLargeError(std::to_string(count) + " candidates exceed the budget of " +
                                   std::to_string(spec.budget));
  }
  auto maps = single_maps(spec, mu, spec.threads ? spec.threads : default_thread_count());
  for (const auto& f : maps) certify(is_algebra_map(f, mu), "algebra map");
  return maps;
}

std::vector<std::pair<LinearMap, LinearMap>> find_algebra_map_pairs(const BilinearOp& mu,
                                                                    SearchSpec spec) {
  spec.target = SearchTarget::algebra_map_pair;
  return objects<std::pair<LinearMap, LinearMap>>(search(spec, BiHomAlgebra::classical(mu)));
}

std::vector<LinearMap> enumerate_maps(std::size_t dim, const std::vector<Scalar>& coefficients,
                                      std::uint64_t budget) {
  if (coefficients.empty()) throw InvalidParameterError("empty coefficient set");
  const std::uint64_t count = saturating_pow(coefficients.size(), dim * dim);
  if (count > budget) {
    throw SearchSpaceTooLargeError(std::to_string(count) + " candidates exceed the budget of " +
                                   std::to_string(budget));
  }
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) entries.emplace_back(i, j);
  std::vector<LinearMap> out;
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    LinearMap f(dim, dim);
    decode(c, entries, coefficients,
           [&](const Entry& e, const Scalar& s) { f(e.first, e.second) = s; });
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace bihom
