#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fatlas/errors.hpp"
#include "fatlas/graph.hpp"
#include "fatlas/rational.hpp"

namespace fatlas {

/// Surjective assignment of vertices to classes 0..k-1.
class Coloring {
 public:
  Coloring() = default;

  Coloring(std::vector<int> assignment, int k) : assignment_(std::move(assignment)), k_(k) {
    require(k_ >= 1, ErrorCode::InvalidColoring, "a coloring needs k >= 1");
    require(!assignment_.empty(), ErrorCode::InvalidColoring, "empty assignment");
    std::vector<char> used(static_cast<std::size_t>(k_), 0);
    for (int c : assignment_) {
      require(c >= 0 && c < k_, ErrorCode::InvalidColoring,
              "class id " + std::to_string(c) + " outside [0," + std::to_string(k_) + ")");
      used[static_cast<std::size_t>(c)] = 1;
    }
    for (int c = 0; c < k_; ++c) {
      require(used[static_cast<std::size_t>(c)], ErrorCode::InvalidColoring, "class " + std::to_string(c) + " is empty");
    }
  }

  /// k is taken as one more than the largest class id.
  static Coloring from_assignment(std::vector<int> assignment) {
    require(!assignment.empty(), ErrorCode::InvalidColoring, "empty assignment");
    const int k = *std::max_element(assignment.begin(), assignment.end()) + 1;
    return Coloring(std::move(assignment), k);
  }

  static Coloring monochrome(int n) { return Coloring(std::vector<int>(static_cast<std::size_t>(n), 0), 1); }

  int classes() const { return k_; }
  int size() const { return static_cast<int>(assignment_.size()); }
  int operator[](Vertex v) const { return assignment_[static_cast<std::size_t>(v)]; }
  std::span<const int> assignment() const { return assignment_; }

  /// Relabels classes in order of first appearance (restricted growth string).
  Coloring canonical() const {
    std::vector<int> relabel(static_cast<std::size_t>(k_), -1);
    std::vector<int> out(assignment_.size());
    int next = 0;
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
      int& r = relabel[static_cast<std::size_t>(assignment_[v])];
      if (r < 0) r = next++;
      out[v] = r;
    }
    return Coloring(std::move(out), k_);
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> assignment_;
  int k_ = 0;
};

struct FatWitness {
  int k = 1;
  Rational alpha;
  Rational beta{1};
  friend bool operator==(const FatWitness&, const FatWitness&) = default;
};

struct Rejection {
  std::string reason;
  Vertex vertex = -1;
  int color_class = -1;
  friend bool operator==(const Rejection&, const Rejection&) = default;
};

using FatVerdict = std::variant<FatWitness, Rejection>;

inline bool accepted(const FatVerdict& v) { return std::holds_alternative<FatWitness>(v); }
inline const FatWitness* witness_of(const FatVerdict& v) { return std::get_if<FatWitness>(&v); }

inline std::vector<int> class_sizes(const Coloring& c) {
  std::vector<int> sizes(static_cast<std::size_t>(c.classes()), 0);
  for (int cls : c.assignment()) ++sizes[static_cast<std::size_t>(cls)];
  return sizes;
}

inline bool equal_class_sizes(const Coloring& c) {
  auto sizes = class_sizes(c);
  return std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
}

inline VertexSet class_members(const Coloring& c, int i) {
  require(i >= 0 && i < c.classes(), ErrorCode::IndexError,
          "class " + std::to_string(i) + " outside [0," + std::to_string(c.classes()) + ")");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] == i) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

namespace detail {

inline void check_pairing(const Graph& g, const Coloring& c) {
  require(c.size() == g.order(), ErrorCode::InvalidColoring,
          "coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.order()) + " vertices");
}

/// Neighbor counts of v per class.
inline void class_counts(const Graph& g, const Coloring& c, Vertex v, std::vector<std::int64_t>& counts) {
  counts.assign(static_cast<std::size_t>(c.classes()), 0);
  for (Vertex w : g.neighbors(v)) ++counts[static_cast<std::size_t>(c[w])];
}

}  // namespace detail

/// e(v, V_i) / deg v for the first non-isolated v and the first class i not containing v.
/// No global consistency check.
inline std::optional<Rational> infer_alpha(const Graph& g, const Coloring& c) {
  detail::check_pairing(g, c);
  require(c.classes() >= 2, ErrorCode::InvalidParams, "infer_alpha needs k >= 2");
  std::vector<std::int64_t> counts;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 0) continue;
    detail::class_counts(g, c, v, counts);
    const int other = c[v] == 0 ? 1 : 0;
    return make_rational(counts[static_cast<std::size_t>(other)], d);
  }
  return std::nullopt;
}

/// Decides whether c is a FAT coloring of g.
///
/// A single alpha is inferred from one vertex and then every (vertex, class)
/// pair is checked exactly. Isolated vertices impose no constraint. For k = 1
/// and for graphs without edges the witness is alpha = 0, beta = 1.
/// A rejection names the lexicographically smallest violating (vertex, class).
inline FatVerdict validate_fat(const Graph& g, const Coloring& c) {
  detail::check_pairing(g, c);
  const int k = c.classes();
  if (k == 1) return FatWitness{1, Rational(0), Rational(1)};

  std::optional<Rational> alpha = infer_alpha(g, c);
  if (!alpha) return FatWitness{k, Rational(0), Rational(1)};

  // alpha = a/b reduced, with a <= b <= deg bounded by kMaxOrder.
  const auto a = static_cast<std::int64_t>(boost::multiprecision::numerator(*alpha));
  const auto b = static_cast<std::int64_t>(boost::multiprecision::denominator(*alpha));
  const std::int64_t beta_num = b - static_cast<std::int64_t>(k - 1) * a;

  std::vector<std::int64_t> counts;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    if (d == 0) continue;
    detail::class_counts(g, c, v, counts);
    for (int i = 0; i < k; ++i) {
      const std::int64_t e = counts[static_cast<std::size_t>(i)];
      if (i == c[v]) {
        if (e * b != beta_num * d) {
          return Rejection{"own-class neighbor count " + std::to_string(e) + " of " + std::to_string(d) +
                               " differs from beta*deg with alpha=" + to_string(*alpha),
                           v, i};
        }
      } else if (e * b != a * d) {
        return Rejection{"neighbor count " + std::to_string(e) + " of " + std::to_string(d) +
                             " in other class differs from alpha*deg with alpha=" + to_string(*alpha),
                         v, i};
      }
    }
  }
  return FatWitness{k, *alpha, Rational(1) - Rational(k - 1) * *alpha};
}

/// One new class per group; `grouping` must partition [0, k).
inline Coloring merge_classes(const Coloring& c, const std::vector<std::vector<int>>& grouping) {
  std::vector<int> target(static_cast<std::size_t>(c.classes()), -1);
  for (std::size_t g = 0; g < grouping.size(); ++g) {
    require(!grouping[g].empty(), ErrorCode::InvalidGrouping, "empty group");
    for (int cls : grouping[g]) {
      require(cls >= 0 && cls < c.classes(), ErrorCode::InvalidGrouping, "class " + std::to_string(cls) + " out of range");
      require(target[static_cast<std::size_t>(cls)] < 0, ErrorCode::InvalidGrouping,
              "class " + std::to_string(cls) + " appears in two groups");
      target[static_cast<std::size_t>(cls)] = static_cast<int>(g);
    }
  }
  for (int cls = 0; cls < c.classes(); ++cls) {
    require(target[static_cast<std::size_t>(cls)] >= 0, ErrorCode::InvalidGrouping,
            "class " + std::to_string(cls) + " is not in any group");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (int cls : c.assignment()) out.push_back(target[static_cast<std::size_t>(cls)]);
  return Coloring(std::move(out), static_cast<int>(grouping.size()));
}

}  // namespace fatlas
