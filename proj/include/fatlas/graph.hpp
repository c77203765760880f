#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fatlas/errors.hpp"

namespace fatlas {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Desk-scale bound on vertex count for every constructed graph.
inline constexpr int kMaxOrder = 4096;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet range(Vertex first, Vertex last) {
    std::vector<Vertex> m(static_cast<std::size_t>(std::max(0, last - first)));
    std::iota(m.begin(), m.end(), first);
    return VertexSet(std::move(m));
  }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  /// Membership mask over [0, n); members outside the range raise OutOfRange.
  std::vector<char> mask(int n) const {
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (Vertex v : members_) {
      require(v >= 0 && v < n, ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
      m[static_cast<std::size_t>(v)] = 1;
    }
    return m;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// One group of equally sized parts: `multiplicity` parts of `size` vertices each.
struct PartGroup {
  int size = 0;
  int multiplicity = 0;
  friend bool operator==(const PartGroup&, const PartGroup&) = default;
};

/// Part sizes of a complete multipartite graph, grouped and strictly decreasing in size.
class MultipartiteSpec {
 public:
  explicit MultipartiteSpec(std::vector<PartGroup> groups) : groups_(std::move(groups)) {
    require(!groups_.empty(), ErrorCode::InvalidParams, "multipartite spec needs at least one part");
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      require(groups_[i].size >= 1 && groups_[i].multiplicity >= 1, ErrorCode::InvalidParams,
              "part sizes and multiplicities must be positive");
      if (i > 0) {
        require(groups_[i - 1].size > groups_[i].size, ErrorCode::InvalidParams,
                "part sizes must be strictly decreasing");
      }
    }
  }

  /// Groups an arbitrary list of part sizes.
  static MultipartiteSpec from_part_sizes(const std::vector<int>& sizes) {
    std::map<int, int, std::greater<>> counts;
    for (int s : sizes) {
      require(s >= 1, ErrorCode::InvalidParams, "part sizes must be positive");
      ++counts[s];
    }
    std::vector<PartGroup> groups;
    for (auto [size, mult] : counts) groups.push_back({size, mult});
    return MultipartiteSpec(std::move(groups));
  }

  /// "6,4,4,2" in any order.
  static MultipartiteSpec parse(std::string_view text) {
    std::vector<int> sizes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(pos, comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      require(!tok.empty(), ErrorCode::ParseError, "empty part size in '" + std::string(text) + "'");
      int value = 0;
      for (char ch : tok) {
        require(ch >= '0' && ch <= '9', ErrorCode::ParseError, "bad part size in '" + std::string(text) + "'");
        value = value * 10 + (ch - '0');
        require(value <= kMaxOrder, ErrorCode::ParseError, "part size too large");
      }
      sizes.push_back(value);
      pos = comma + 1;
    }
    return from_part_sizes(sizes);
  }

  const std::vector<PartGroup>& groups() const { return groups_; }
  /// Number of distinct part sizes.
  int distinct_sizes() const { return static_cast<int>(groups_.size()); }

  int part_count() const {
    int total = 0;
    for (const auto& g : groups_) total += g.multiplicity;
    return total;
  }

  int order() const {
    int total = 0;
    for (const auto& g : groups_) total += g.size * g.multiplicity;
    return total;
  }

  /// Expanded part sizes in layout order.
  std::vector<int> part_sizes() const {
    std::vector<int> out;
    for (const auto& g : groups_) out.insert(out.end(), static_cast<std::size_t>(g.multiplicity), g.size);
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (int s : part_sizes()) {
      if (!out.empty()) out += ',';
      out += std::to_string(s);
    }
    return out;
  }

  friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;

 private:
  std::vector<PartGroup> groups_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Optional side metadata `part_labels` records the part index of each vertex
/// for complete multipartite constructions; other operations drop it.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edge_list(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      require(u >= 0 && u < n && v >= 0 && v < n, ErrorCode::OutOfRange,
              "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
      require(u != v, ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    g.normalize();
    return g;
  }

  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    std::vector<Edge> e(edges);
    return from_edge_list(n, std::span<const Edge>(e));
  }

  /// Takes ownership of adjacency lists that are already symmetric and loop-free.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj) {
    Graph g(static_cast<int>(adj.size()));
    g.adj_ = std::move(adj);
    g.normalize();
    return g;
  }

  int order() const { return n_; }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return total / 2;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::vector<int>& part_labels() const { return parts_; }
  bool has_parts() const { return !parts_.empty(); }
  int part_count() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()) + 1; }

  Graph with_part_labels(std::vector<int> labels) const {
    require(static_cast<int>(labels.size()) == n_, ErrorCode::InvalidParams, "one part label per vertex required");
    Graph g = *this;
    g.parts_ = std::move(labels);
    return g;
  }

  /// Same vertex count and edge set; part metadata is ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  static int check_order(int n) {
    require(n >= 0 && n <= kMaxOrder, ErrorCode::InvalidParams,
            "vertex count " + std::to_string(n) + " outside [0," + std::to_string(kMaxOrder) + "]");
    return n;
  }

  void check_vertex(Vertex v) const {
    require(v >= 0 && v < n_, ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
  }

  void normalize() {
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> parts_;
};

// ---------------------------------------------------------------------------
// Constructors

inline Graph edgeless(int n) { return Graph(n); }

inline Graph complete(int n) {
  require(n >= 1, ErrorCode::InvalidParams, "complete graph needs n >= 1");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) adj[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

inline Graph cycle(int n) {
  require(n >= 3, ErrorCode::InvalidParams, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, e);
}

/// Vertices are laid out part by part in spec order; part labels are attached.
inline Graph complete_multipartite(const MultipartiteSpec& spec) {
  const int n = spec.order();
  require(n <= kMaxOrder, ErrorCode::InvalidParams, "multipartite graph too large");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n));
  int part = 0;
  for (int size : spec.part_sizes()) {
    labels.insert(labels.end(), static_cast<std::size_t>(size), part);
    ++part;
  }
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (labels[static_cast<std::size_t>(u)] != labels[static_cast<std::size_t>(v)]) {
        adj[static_cast<std::size_t>(u)].push_back(v);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj)).with_part_labels(std::move(labels));
}

/// Part sizes of T(N, t): the N mod t larger parts first.
inline MultipartiteSpec turan_spec(int n, int t) {
  require(t >= 1 && t <= n, ErrorCode::InvalidParams, "turan requires 1 <= t <= N");
  std::vector<int> sizes;
  for (int i = 0; i < t; ++i) sizes.push_back(n / t + (i < n % t ? 1 : 0));
  return MultipartiteSpec::from_part_sizes(sizes);
}

inline Graph turan(int n, int t) { return complete_multipartite(turan_spec(n, t)); }

// ---------------------------------------------------------------------------
// Queries

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

/// The common degree, or nothing if degrees differ. The empty graph counts as 0-regular.
inline std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    stack.push_back(s);
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

inline bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

/// e(v, S): neighbors of v inside S.
inline int count_e(const Graph& g, Vertex v, const VertexSet& s) {
  int total = 0;
  for (Vertex w : g.neighbors(v)) total += s.contains(w) ? 1 : 0;
  return total;
}

/// e(S, T): edges with one endpoint in S and the other in T, each counted once.
inline std::size_t count_e_sets(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const auto in_s = s.mask(g.order());
  const auto in_t = t.mask(g.order());
  std::size_t total = 0;
  for (auto [u, v] : g.edges()) {
    const auto uu = static_cast<std::size_t>(u);
    const auto vv = static_cast<std::size_t>(v);
    if ((in_s[uu] && in_t[vv]) || (in_s[vv] && in_t[uu])) ++total;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Operations

inline Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = nb.begin();
    for (Vertex v = 0; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (v != u && (it == nb.end() || *it != v)) adj[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;     // -1 for dropped vertices
  std::vector<Vertex> new_to_old;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  require(!keep.empty(), ErrorCode::EmptyKeepSet, "induced subgraph needs a nonempty keep set");
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : keep) {
    require(v >= 0 && v < g.order(), ErrorCode::OutOfRange, "keep vertex " + std::to_string(v) + " out of range");
    out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<std::vector<Vertex>> adj(out.new_to_old.size());
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    for (Vertex w : g.neighbors(out.new_to_old[i])) {
      const int j = out.old_to_new[static_cast<std::size_t>(w)];
      if (j >= 0) adj[i].push_back(j);
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

/// Vertices of g2 follow those of g1.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n1 + g2.order()));
  for (Vertex v = 0; v < n1; ++v) {
    auto nb = g1.neighbors(v);
    adj[static_cast<std::size_t>(v)].assign(nb.begin(), nb.end());
  }
  for (Vertex v = 0; v < g2.order(); ++v) {
    for (Vertex w : g2.neighbors(v)) adj[static_cast<std::size_t>(n1 + v)].push_back(n1 + w);
  }
  return Graph::from_adjacency(std::move(adj));
}

inline Graph disjoint_copies(const Graph& g, int copies) {
  require(copies >= 1, ErrorCode::InvalidParams, "need at least one copy");
  Graph out = g;
  for (int i = 1; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

/// Row-major id of the product vertex (v1, v2).
constexpr Vertex product_vertex(Vertex v1, Vertex v2, int n2) { return v1 * n2 + v2; }
constexpr std::pair<Vertex, Vertex> product_coords(Vertex id, int n2) { return {id / n2, id % n2}; }

enum class ProductKind { Tensor, Cartesian, Strong };

constexpr std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Tensor: return "tensor";
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Strong: return "strong";
  }
  return "unknown";
}

inline Graph product(const Graph& g1, const Graph& g2, ProductKind kind) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  require(static_cast<long long>(n1) * n2 <= kMaxOrder, ErrorCode::InvalidParams, "product graph too large");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n1 * n2));
  const bool tensor_edges = kind != ProductKind::Cartesian;
  const bool cartesian_edges = kind != ProductKind::Tensor;
  for (Vertex u1 = 0; u1 < n1; ++u1) {
    for (Vertex u2 = 0; u2 < n2; ++u2) {
      auto& out = adj[static_cast<std::size_t>(product_vertex(u1, u2, n2))];
      if (tensor_edges) {
        for (Vertex v1 : g1.neighbors(u1)) {
          for (Vertex v2 : g2.neighbors(u2)) out.push_back(product_vertex(v1, v2, n2));
        }
      }
      if (cartesian_edges) {
        for (Vertex v2 : g2.neighbors(u2)) out.push_back(product_vertex(u1, v2, n2));
        for (Vertex v1 : g1.neighbors(u1)) out.push_back(product_vertex(v1, u2, n2));
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

inline Graph tensor(const Graph& g1, const Graph& g2) { return product(g1, g2, ProductKind::Tensor); }
inline Graph cartesian(const Graph& g1, const Graph& g2) { return product(g1, g2, ProductKind::Cartesian); }
inline Graph strong(const Graph& g1, const Graph& g2) { return product(g1, g2, ProductKind::Strong); }

}  // namespace fatlas
