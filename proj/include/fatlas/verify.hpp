#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fatlas/coloring.hpp"
#include "fatlas/errors.hpp"
#include "fatlas/graph.hpp"
#include "fatlas/lift.hpp"
#include "fatlas/multipartite.hpp"
#include "fatlas/random.hpp"
#include "fatlas/search.hpp"
#include "fatlas/spectral.hpp"

namespace fatlas {

struct SuiteReport {
  std::string suite;
  int passed = 0;
  int failed = 0;
  int skipped = 0;  // trials whose drawn input missed a theorem hypothesis
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

inline constexpr std::array<std::string_view, 6> kSuiteNames = {"turan", "multipartite", "products",
                                                                "complement", "removal", "spectral"};

namespace detail {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { report_.suite = std::move(name); }

  void check(bool condition, const std::string& what) {
    if (condition) {
      ++report_.passed;
    } else {
      ++report_.failed;
      report_.failures.push_back(what);
    }
  }

  /// Runs one trial; hypothesis errors count as skips, anything else as a failure.
  void trial(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::NotRegular:
        case ErrorCode::ComplementDisconnected:
        case ErrorCode::UnequalClassesAtAlphaZero:
        case ErrorCode::IsolatedVertexInFactor:
        case ErrorCode::PreconditionViolated:
        case ErrorCode::TooManyClassesRemoved:
        case ErrorCode::ParameterSingularity:
          ++report_.skipped;
          return;
        default:
          check(false, label + ": " + e.what());
      }
    } catch (const std::exception& e) {
      check(false, label + ": " + e.what());
    }
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  SuiteReport report_;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline std::vector<NamedGraph> lift_bases() {
  return {{"K4", complete(4)}, {"C6", cycle(6)}, {"T(6,3)", turan(6, 3)}, {"T(8,2)", turan(8, 2)}, {"C5", cycle(5)}};
}

inline std::vector<NamedGraph> lift_factors() {
  return {{"K2", complete(2)}, {"K3", complete(3)}, {"C4", cycle(4)}, {"C5", cycle(5)}, {"C6", cycle(6)}, {"T(6,3)", turan(6, 3)}};
}

/// Catalogs computed once per base graph.
class CatalogCache {
 public:
  const std::vector<CatalogEntry>& get(const NamedGraph& base) {
    auto it = cache_.find(base.name);
    if (it == cache_.end()) it = cache_.emplace(base.name, all_fat_colorings(base.graph)).first;
    return it->second;
  }

 private:
  std::map<std::string, std::vector<CatalogEntry>> cache_;
};

template <class T>
const T& pick(const std::vector<T>& items, SplitMix64& rng) {
  return items[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(items.size()) - 1))];
}

/// Every f_ij of the lifted coloring is an eigenfunction at k * alpha.
inline bool lifted_residuals_ok(const LiftResult& r, double tol) {
  const int k = r.coloring.classes();
  if (k == 1) return true;
  const double lambda = k * to_double(r.predicted_alpha);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (eigen_residual(r.graph, indicator_fij(r.coloring, i, j).values, lambda) > tol) return false;
    }
  }
  return true;
}

inline bool validates_at(const LiftResult& r) {
  const FatVerdict v = validate_fat(r.graph, r.coloring);
  const FatWitness* w = witness_of(v);
  return w != nullptr && w->alpha == r.predicted_alpha;
}

inline std::string describe(const Coloring& c) {
  std::ostringstream os;
  for (int x : c.assignment()) os << x;
  return os.str();
}

}  // namespace detail

/// Brute force against max{t, N/t} on regular Turan graphs with N <= max_order.
inline SuiteReport verify_turan(std::uint64_t seed, int trials, int max_order = 10) {
  detail::SuiteRecorder rec("turan");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> pool;
  for (int n = 1; n <= max_order; ++n) {
    for (int t = 1; t <= n; ++t) {
      if (n % t == 0) pool.emplace_back(n, t);
    }
  }
  for (int trial = 0; trial < trials; ++trial) {
    const auto [n, t] = detail::pick(pool, rng);
    const std::string label = "T(" + std::to_string(n) + "," + std::to_string(t) + ")";
    rec.trial(label, [&, n = n, t = t] {
      const int brute = fat_chromatic_brute(turan(n, t)).chi_fat;
      rec.check(brute == fat_chromatic_turan(n, t), label + ": brute " + std::to_string(brute));
    });
  }
  return rec.finish();
}

/// Closed form against brute force, construction against predicted alpha,
/// and the closed-form spectrum structure, on random specs.
inline SuiteReport verify_multipartite(std::uint64_t seed, int trials, int max_order = 10) {
  detail::SuiteRecorder rec("multipartite");
  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const MultipartiteSpec spec = random_multipartite_spec(2, max_order, 1, rng);
    const std::string label = "K_{" + spec.to_string() + "}";
    rec.trial(label, [&] {
      const Graph g = complete_multipartite(spec);
      const ChromaticVerdict verdict = fat_chromatic_multipartite(spec);
      const int brute = fat_chromatic_brute(g).chi_fat;
      rec.check(brute == verdict.chi_fat, label + ": closed " + std::to_string(verdict.chi_fat) + " brute " + std::to_string(brute));
      const FatVerdict v = validate_fat(g, verdict.construction);
      const FatWitness* w = witness_of(v);
      rec.check(w && w->k == verdict.chi_fat && w->alpha == verdict.predicted_alpha, label + ": construction");
      if (spec.part_count() >= 2) {
        const MultipartiteSpectrum s = multipartite_spectrum_closed(spec);
        rec.check(s.total_multiplicity() == spec.order(), label + ": multiplicities");
        rec.check(s.max_known_deviation <= kCertificateTol, label + ": known eigenvalues");
        bool strict = true;
        for (const auto& x : s.x_values) strict = strict && to_double(x.lower) < x.value && x.value < to_double(x.upper);
        rec.check(strict, label + ": strict brackets");
      }
    });
  }
  return rec.finish();
}

/// Product spectra and tensor / Cartesian / strong lifts of cataloged colorings.
inline SuiteReport verify_products(std::uint64_t seed, int trials) {
  detail::SuiteRecorder rec("products");
  SplitMix64 rng(seed);
  const auto bases = detail::lift_bases();
  const auto factors = detail::lift_factors();
  detail::CatalogCache catalogs;
  constexpr std::array kinds = {ProductKind::Tensor, ProductKind::Cartesian, ProductKind::Strong};
  for (int trial = 0; trial < trials; ++trial) {
    const auto& base = detail::pick(bases, rng);
    const auto& factor = detail::pick(factors, rng);
    const ProductKind kind = kinds[static_cast<std::size_t>(rng.uniform(0, 2))];
    const auto& catalog = catalogs.get(base);
    const CatalogEntry& entry = detail::pick(catalog, rng);
    const std::string label = std::string(to_string(kind)) + "(" + base.name + "[" + detail::describe(entry.coloring) +
                              "], " + factor.name + ")";
    rec.trial(label, [&] {
      rec.check(product_spectrum_check(base.graph, factor.graph, kind), label + ": spectrum");
      const LiftResult r = product_lift(base.graph, entry.coloring, entry.witness, factor.graph, kind);
      rec.check(detail::validates_at(r), label + ": predicted alpha " + to_string(r.predicted_alpha));
      rec.check(detail::lifted_residuals_ok(r, kCertificateTol), label + ": residuals");
    });
  }
  return rec.finish();
}

/// Complement lifts of cataloged colorings of regular graphs, and the involution.
inline SuiteReport verify_complement(std::uint64_t seed, int trials) {
  detail::SuiteRecorder rec("complement");
  SplitMix64 rng(seed);
  const std::vector<detail::NamedGraph> bases = {
      {"C5", cycle(5)},         {"C6", cycle(6)},          {"C7", cycle(7)},
      {"T(6,2)", turan(6, 2)},  {"T(6,3)", turan(6, 3)},   {"C4+C4", disjoint_copies(cycle(4), 2)},
      {"K3+K3", disjoint_copies(complete(3), 2)}, {"C8", cycle(8)}};
  detail::CatalogCache catalogs;
  for (int trial = 0; trial < trials; ++trial) {
    const auto& base = detail::pick(bases, rng);
    const CatalogEntry& entry = detail::pick(catalogs.get(base), rng);
    const std::string label = "complement(" + base.name + "[" + detail::describe(entry.coloring) + "])";
    rec.trial(label, [&] {
      const LiftResult once = complement_lift(base.graph, entry.coloring, entry.witness);
      rec.check(detail::validates_at(once), label + ": predicted alpha " + to_string(once.predicted_alpha));
      if (is_connected(base.graph) && entry.coloring.classes() > 1) {
        rec.check(detail::lifted_residuals_ok(once, kCertificateTol), label + ": residuals");
      }
      const FatWitness lifted = *witness_of(validate_fat(once.graph, once.coloring));
      const LiftResult twice = complement_lift(once.graph, once.coloring, lifted);
      rec.check(twice.graph == base.graph && twice.predicted_alpha == entry.witness.alpha, label + ": involution");
    });
  }
  return rec.finish();
}

/// Class removal: predicted alpha, residuals, and sequential composition.
inline SuiteReport verify_removal(std::uint64_t seed, int trials) {
  detail::SuiteRecorder rec("removal");
  SplitMix64 rng(seed);
  const std::vector<detail::NamedGraph> bases = {
      {"K4", complete(4)}, {"K5", complete(5)}, {"C6", cycle(6)}, {"T(6,3)", turan(6, 3)}, {"T(8,4)", turan(8, 4)},
      {"T(9,3)", turan(9, 3)}};
  detail::CatalogCache catalogs;
  for (int trial = 0; trial < trials; ++trial) {
    const auto& base = detail::pick(bases, rng);
    std::vector<CatalogEntry> eligible;
    for (const auto& e : catalogs.get(base)) {
      if (e.coloring.classes() >= 3) eligible.push_back(e);
    }
    if (eligible.empty()) continue;
    const CatalogEntry& entry = detail::pick(eligible, rng);
    const int k = entry.coloring.classes();
    std::vector<int> removed;
    const int count = rng.uniform(1, k - 2);
    std::vector<int> ids(static_cast<std::size_t>(k));
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < count; ++i) {
      const int at = rng.uniform(i, k - 1);
      std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(at)]);
      removed.push_back(ids[static_cast<std::size_t>(i)]);
    }
    const ClassIndexSet all(removed);
    const std::string label = "remove(" + base.name + "[" + detail::describe(entry.coloring) + "], " +
                              std::to_string(all.size()) + " classes)";
    rec.trial(label, [&] {
      const LiftResult r = remove_classes(base.graph, entry.coloring, entry.witness, all);
      rec.check(detail::validates_at(r), label + ": predicted alpha " + to_string(r.predicted_alpha));
      rec.check(detail::lifted_residuals_ok(r, kCertificateTol) || !is_connected(r.graph) ||
                    r.coloring.classes() == 1,
                label + ": residuals");
      if (all.size() >= 2) {
        // Remove the first id, then the rest (relabeled) from the result.
        const int first = all.ids().front();
        const LiftResult step = remove_classes(base.graph, entry.coloring, entry.witness, ClassIndexSet{first});
        std::vector<int> rest;
        for (std::size_t i = 1; i < all.ids().size(); ++i) rest.push_back(all.ids()[i] - (all.ids()[i] > first ? 1 : 0));
        const FatWitness mid = *witness_of(validate_fat(step.graph, step.coloring));
        const LiftResult seq = remove_classes(step.graph, step.coloring, mid, ClassIndexSet(rest));
        rec.check(seq.graph == r.graph && seq.coloring == r.coloring && seq.predicted_alpha == r.predicted_alpha,
                  label + ": sequential composition");
      }
    });
  }
  return rec.finish();
}

/// validate_fat against the spectral certificate on random connected graphs
/// and random partitions, plus cataloged colorings of the same graphs.
inline SuiteReport verify_spectral(std::uint64_t seed, int trials, int max_order = 7) {
  detail::SuiteRecorder rec("spectral");
  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = rng.uniform(2, max_order);
    const Graph g = random_connected_graph(n, 0.3 + 0.6 * rng.unit(), rng);
    std::vector<Coloring> colorings = {random_coloring(n, rng.uniform(1, n), rng)};
    for (const auto& e : all_fat_colorings(g)) colorings.push_back(e.coloring);
    const std::string label = "graph " + std::to_string(trial) + " (n=" + std::to_string(n) + ")";
    rec.trial(label, [&] {
      for (const auto& c : colorings) {
        const FatVerdict v = validate_fat(g, c);
        const auto spectral = check_fat_spectral(g, c);
        const FatWitness* w = witness_of(v);
        rec.check((w != nullptr) == spectral.has_value() && (!w || w->alpha == *spectral),
                  label + ": coloring " + detail::describe(c));
      }
    });
  }
  return rec.finish();
}

inline SuiteReport run_suite(std::string_view name, std::uint64_t seed, int trials) {
  require(trials >= 0, ErrorCode::InvalidParams, "trials must be non-negative");
  if (name == "turan") return verify_turan(seed, trials);
  if (name == "multipartite") return verify_multipartite(seed, trials);
  if (name == "products") return verify_products(seed, trials);
  if (name == "complement") return verify_complement(seed, trials);
  if (name == "removal") return verify_removal(seed, trials);
  if (name == "spectral") return verify_spectral(seed, trials);
  fail(ErrorCode::InvalidParams, "unknown suite '" + std::string(name) + "'");
}

}  // namespace fatlas
