#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fatlas/coloring.hpp"
#include "fatlas/errors.hpp"
#include "fatlas/graph.hpp"

namespace fatlas {

struct SearchOptions {
  /// Full enumeration cap.
  int max_n = 13;
  /// Cap for searches restricted to a single k <= max_k_restricted.
  int max_n_restricted = 20;
  int max_k_restricted = 3;
  unsigned workers = 1;
  /// Length of the restricted-growth prefixes used as work units. Fixed
  /// independently of `workers` so reports do not depend on the worker count.
  int split_depth = 6;

  /// Defaults, with FATLAS_MAX_N overriding max_n when set to a positive integer.
  static SearchOptions from_env() {
    SearchOptions opts;
    if (const char* env = std::getenv("FATLAS_MAX_N")) {
      char* end = nullptr;
      long value = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && value > 0 && value <= kMaxOrder) opts.max_n = static_cast<int>(value);
    }
    return opts;
  }
};

struct SearchReport {
  int chi_fat = 1;
  Coloring witness_coloring;
  FatWitness witness;
  std::uint64_t partitions_examined = 0;
  std::chrono::duration<double> elapsed{};
};

struct CatalogEntry {
  Coloring coloring;
  FatWitness witness;
};

/// Walks set partitions of {0..n-1} as restricted growth strings in
/// lexicographic order: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
class PartitionCursor {
 public:
  explicit PartitionCursor(int n) : rgs_(static_cast<std::size_t>(n), 0), prefix_max_(static_cast<std::size_t>(n), 0) {
    require(n >= 1, ErrorCode::InvalidParams, "partition cursor needs n >= 1");
  }

  const std::vector<int>& rgs() const { return rgs_; }
  int classes() const { return prefix_max_.back() + 1; }
  Coloring coloring() const { return Coloring(rgs_, classes()); }

  /// Advances to the next partition; false once the last one has been passed.
  bool next() {
    for (std::size_t i = rgs_.size(); i-- > 1;) {
      if (rgs_[i] <= prefix_max_[i - 1]) {
        ++rgs_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
        for (std::size_t j = i + 1; j < rgs_.size(); ++j) {
          rgs_[j] = 0;
          prefix_max_[j] = prefix_max_[i];
        }
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
};

inline PartitionCursor enumerate_partitions(int n, int max_n = SearchOptions{}.max_n) {
  require(n >= 1, ErrorCode::InvalidParams, "enumerate_partitions needs n >= 1");
  require(n <= max_n, ErrorCode::SizeCap, "n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(max_n));
  return PartitionCursor(n);
}

namespace detail {

/// Incremental search over restricted growth strings with exactly k classes.
///
/// Vertex `depth()` is assigned next. A push is rejected as soon as the prefix
/// cannot extend to a FAT k-coloring:
///   - too few positions remain to open all k classes;
///   - a vertex whose neighborhood is fully assigned has unequal counts over
///     the other classes, or disagrees with the alpha fixed earlier;
///   - a partially assigned neighborhood already exceeds its final targets.
/// Leaves that survive are exactly the FAT k-colorings in RGS form.
class FixedKSearch {
 public:
  FixedKSearch(const Graph& g, int k)
      : g_(&g),
        n_(g.order()),
        k_(k),
        assign_(static_cast<std::size_t>(n_), -1),
        fresh_(static_cast<std::size_t>(n_), 0),
        cnt_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_), 0),
        remaining_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v) remaining_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  int depth() const { return depth_; }
  int order() const { return n_; }
  int classes() const { return k_; }
  int highest_choice() const { return std::min(used_, k_ - 1); }
  std::vector<int> assignment() const { return {assign_.begin(), assign_.begin() + depth_}; }

  /// Always pair with pop(), whether or not the push was accepted.
  bool push(int c) {
    const Vertex p = depth_;
    assign_[idx(p)] = c;
    fresh_[idx(p)] = c == used_;
    if (c == used_) ++used_;
    for (Vertex u : g_->neighbors(p)) {
      ++count(u, c);
      --remaining_[idx(u)];
    }
    ++depth_;

    if (used_ + (n_ - depth_) < k_) return false;
    if (k_ == 1) return true;

    auto nb = g_->neighbors(p);
    if (remaining_[idx(p)] == 0 && !nb.empty() && !check_complete(p)) return false;
    for (Vertex u : nb) {
      if (u < p && remaining_[idx(u)] == 0 && !check_complete(u)) return false;
    }
    if (remaining_[idx(p)] > 0 && !check_partial(p)) return false;
    for (Vertex u : nb) {
      if (u < p && remaining_[idx(u)] > 0 && !check_partial(u)) return false;
    }
    return true;
  }

  void pop() {
    --depth_;
    const Vertex p = depth_;
    const int c = assign_[idx(p)];
    for (Vertex u : g_->neighbors(p)) {
      --count(u, c);
      ++remaining_[idx(u)];
    }
    if (fresh_[idx(p)]) --used_;
    assign_[idx(p)] = -1;
    if (alpha_depth_ == p) alpha_depth_ = -1;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  std::int64_t& count(Vertex v, int c) { return cnt_[idx(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }

  bool check_complete(Vertex w) {
    const int own = assign_[idx(w)];
    const std::int64_t d = g_->degree(w);
    const std::int64_t m = count(w, own == 0 ? 1 : 0);
    for (int c = 0; c < k_; ++c) {
      if (c != own && count(w, c) != m) return false;
    }
    if (alpha_depth_ < 0) {
      const std::int64_t gcd = std::gcd(m, d);
      alpha_num_ = m / gcd;
      alpha_den_ = d / gcd;
      alpha_depth_ = depth_ - 1;
      return true;
    }
    return m * alpha_den_ == alpha_num_ * d;
  }

  bool check_partial(Vertex w) {
    const int own = assign_[idx(w)];
    const std::int64_t d = g_->degree(w);
    if (alpha_depth_ >= 0) {
      if ((alpha_num_ * d) % alpha_den_ != 0) return false;
      const std::int64_t other_target = alpha_num_ * d / alpha_den_;
      const std::int64_t own_target = d - static_cast<std::int64_t>(k_ - 1) * other_target;
      if (own_target < 0) return false;
      for (int c = 0; c < k_; ++c) {
        if (count(w, c) > (c == own ? own_target : other_target)) return false;
      }
      return true;
    }
    std::int64_t highest = 0;
    for (int c = 0; c < k_; ++c) {
      if (c != own) highest = std::max(highest, count(w, c));
    }
    return static_cast<std::int64_t>(k_ - 1) * highest + count(w, own) <= d;
  }

  const Graph* g_;
  int n_;
  int k_;
  int depth_ = 0;
  int used_ = 0;
  std::vector<int> assign_;
  std::vector<char> fresh_;
  std::vector<std::int64_t> cnt_;
  std::vector<int> remaining_;
  std::int64_t alpha_num_ = 0;
  std::int64_t alpha_den_ = 1;
  int alpha_depth_ = -1;
};

struct FixedKResult {
  std::optional<std::vector<int>> first;
  std::vector<std::vector<int>> all;
  std::uint64_t nodes = 0;
};

/// Depth-first search below the current state of `s`. `on_leaf` returns true to stop.
template <class OnLeaf, class ShouldStop>
bool descend(FixedKSearch& s, int stop_depth, std::uint64_t& nodes, OnLeaf& on_leaf, ShouldStop& should_stop) {
  if (s.depth() == stop_depth) return on_leaf(s);
  if (should_stop()) return true;
  const int top = s.highest_choice();
  for (int c = 0; c <= top; ++c) {
    ++nodes;
    const bool ok = s.push(c);
    const bool stop = ok && descend(s, stop_depth, nodes, on_leaf, should_stop);
    s.pop();
    if (stop) return true;
  }
  return false;
}

/// Runs the fixed-k search, split into prefix tasks handed to `workers` threads.
/// In first-solution mode the lexicographically smallest solution is returned
/// and `nodes` counts exactly the work a single worker would have done.
inline FixedKResult run_fixed_k(const Graph& g, int k, bool collect_all, unsigned workers, int split_depth) {
  FixedKResult result;
  const int n = g.order();
  if (k < 1 || k > n) return result;
  const int depth = std::clamp(split_depth, 0, n);

  // Prefix generation, sequential and pruned.
  std::vector<std::vector<int>> prefixes;
  {
    FixedKSearch s(g, k);
    auto record = [&](FixedKSearch& st) {
      prefixes.push_back(st.assignment());
      return false;
    };
    auto never = [] { return false; };
    descend(s, depth, result.nodes, record, never);
  }

  struct TaskOutcome {
    std::uint64_t nodes = 0;
    std::vector<std::vector<int>> solutions;
  };
  std::vector<TaskOutcome> outcomes(prefixes.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    FixedKSearch s(g, k);
    for (;;) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= prefixes.size()) return;
      if (!collect_all && t > best.load()) continue;
      for (int c : prefixes[t]) {
        if (!s.push(c)) throw std::logic_error("replayed prefix rejected");
      }
      auto& out = outcomes[t];
      auto on_leaf = [&](FixedKSearch& st) {
        out.solutions.push_back(st.assignment());
        if (collect_all) return false;
        std::size_t current = best.load();
        while (t < current && !best.compare_exchange_weak(current, t)) {
        }
        return true;
      };
      auto should_stop = [&] { return !collect_all && t > best.load(std::memory_order_relaxed); };
      descend(s, n, out.nodes, on_leaf, should_stop);
      while (s.depth() > 0) s.pop();
    }
  };

  const unsigned count = std::max(1u, workers);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    result.nodes += outcomes[t].nodes;
    if (collect_all) {
      for (auto& sol : outcomes[t].solutions) result.all.push_back(std::move(sol));
    } else if (!outcomes[t].solutions.empty()) {
      result.first = outcomes[t].solutions.front();
      break;
    }
  }
  return result;
}

inline void check_search_size(const Graph& g, std::optional<int> k, const SearchOptions& opts) {
  const int n = g.order();
  require(n >= 1, ErrorCode::InvalidParams, "search needs at least one vertex");
  if (n <= opts.max_n) return;
  if (k && *k <= opts.max_k_restricted && n <= opts.max_n_restricted) return;
  fail(ErrorCode::SizeCap, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(opts.max_n) +
                               (k ? " (k-restricted cap " + std::to_string(opts.max_n_restricted) + " for k <= " +
                                        std::to_string(opts.max_k_restricted) + ")"
                                  : ""));
}

inline FatWitness confirm(const Graph& g, const Coloring& c) {
  const FatVerdict verdict = validate_fat(g, c);
  const FatWitness* w = witness_of(verdict);
  if (!w) throw std::logic_error("search produced a coloring that validate_fat rejects");
  return *w;
}

}  // namespace detail

/// FAT chromatic number by exhaustive search: tries k = n, n-1, ... and stops
/// at the first k with a FAT coloring, reporting its lexicographically first RGS.
/// Identical output for every worker count.
inline SearchReport search_parallel(const Graph& g, unsigned workers, const SearchOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  detail::check_search_size(g, std::nullopt, opts);
  SearchReport report;
  for (int k = g.order(); k >= 1; --k) {
    auto run = detail::run_fixed_k(g, k, false, workers, opts.split_depth);
    report.partitions_examined += run.nodes;
    if (run.first) {
      report.chi_fat = k;
      report.witness_coloring = Coloring(std::move(*run.first), k);
      report.witness = detail::confirm(g, report.witness_coloring);
      break;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

inline SearchReport fat_chromatic_brute(const Graph& g, const SearchOptions& opts = {}) {
  return search_parallel(g, 1, opts);
}

/// Every FAT coloring (as canonical RGS), optionally restricted to k classes,
/// sorted lexicographically by assignment.
inline std::vector<CatalogEntry> all_fat_colorings(const Graph& g, std::optional<int> k = std::nullopt,
                                                   const SearchOptions& opts = {}) {
  detail::check_search_size(g, k, opts);
  std::vector<CatalogEntry> out;
  const int lo = k ? *k : 1;
  const int hi = k ? *k : g.order();
  for (int kk = lo; kk <= hi; ++kk) {
    auto run = detail::run_fixed_k(g, kk, true, opts.workers, opts.split_depth);
    for (auto& rgs : run.all) {
      Coloring c(std::move(rgs), kk);
      FatWitness w = detail::confirm(g, c);
      out.push_back({std::move(c), std::move(w)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::lexicographical_compare(a.coloring.assignment().begin(), a.coloring.assignment().end(),
                                        b.coloring.assignment().begin(), b.coloring.assignment().end());
  });
  return out;
}

/// Lexicographically first FAT coloring with exactly k classes, if any.
inline std::optional<CatalogEntry> first_fat_coloring(const Graph& g, int k, const SearchOptions& opts = {}) {
  detail::check_search_size(g, k, opts);
  auto run = detail::run_fixed_k(g, k, false, opts.workers, opts.split_depth);
  if (!run.first) return std::nullopt;
  Coloring c(std::move(*run.first), k);
  FatWitness w = detail::confirm(g, c);
  return CatalogEntry{std::move(c), std::move(w)};
}

}  // namespace fatlas
