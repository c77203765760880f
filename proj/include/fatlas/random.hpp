#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "fatlas/coloring.hpp"
#include "fatlas/errors.hpp"
#include "fatlas/graph.hpp"

namespace fatlas {

/// SplitMix64 stream; same seed, same sequence on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi]. Rejection sampling rather than
  /// std::uniform_int_distribution, whose output differs between standard libraries.
  int uniform(int lo, int hi) {
    require(lo <= hi, ErrorCode::InvalidParams, "empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = max() - max() % span;
    std::uint64_t x = (*this)();
    while (x >= limit) x = (*this)();
    return lo + static_cast<int>(x % span);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

/// G(n, p): each pair independently.
inline Graph random_graph(int n, double p, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

/// G(n, p) resampled until connected.
inline Graph random_connected_graph(int n, double p, SplitMix64& rng) {
  require(n >= 1 && p > 0.0, ErrorCode::InvalidParams, "connected sampling needs n >= 1 and p > 0");
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

/// Part sizes drawn until the total lies in [min_order, max_order] with at least min_parts parts.
inline MultipartiteSpec random_multipartite_spec(int min_order, int max_order, int min_parts, SplitMix64& rng) {
  require(min_parts >= 1 && min_parts <= max_order && min_order <= max_order, ErrorCode::InvalidParams,
          "infeasible multipartite sampling bounds");
  for (;;) {
    const int target = rng.uniform(std::max(min_order, min_parts), max_order);
    std::vector<int> sizes;
    int total = 0;
    while (total < target) {
      const int s = rng.uniform(1, std::min(6, target - total));
      sizes.push_back(s);
      total += s;
    }
    if (static_cast<int>(sizes.size()) >= min_parts) return MultipartiteSpec::from_part_sizes(sizes);
  }
}

/// Uniform class per vertex, relabeled canonically; the class count is whatever occurs.
inline Coloring random_coloring(int n, int max_classes, SplitMix64& rng) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (auto& x : a) x = rng.uniform(0, max_classes - 1);
  std::vector<int> map(static_cast<std::size_t>(max_classes), -1);
  int next = 0;
  for (auto& x : a) {
    if (map[static_cast<std::size_t>(x)] < 0) map[static_cast<std::size_t>(x)] = next++;
    x = map[static_cast<std::size_t>(x)];
  }
  return Coloring(std::move(a), next);
}

}  // namespace fatlas
