#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fatlas/coloring.hpp"
#include "fatlas/errors.hpp"
#include "fatlas/graph.hpp"
#include "fatlas/rational.hpp"
#include "fatlas/spectral.hpp"

namespace fatlas {

enum class LiftKind { Removal, Complement, Tensor, Cartesian, Strong };

constexpr std::string_view to_string(LiftKind kind) {
  switch (kind) {
    case LiftKind::Removal: return "Removal";
    case LiftKind::Complement: return "Complement";
    case LiftKind::Tensor: return "Tensor";
    case LiftKind::Cartesian: return "Cartesian";
    case LiftKind::Strong: return "Strong";
  }
  return "Unknown";
}

/// A derived graph, the coloring carried over to it, and the parameter the
/// corresponding theorem predicts for it.
struct LiftResult {
  Graph graph;
  Coloring coloring;
  Rational predicted_alpha;
  LiftKind theorem_tag = LiftKind::Removal;
};

/// Sorted, duplicate-free class ids.
class ClassIndexSet {
 public:
  ClassIndexSet() = default;
  ClassIndexSet(std::initializer_list<int> ids) : ClassIndexSet(std::vector<int>(ids)) {}
  explicit ClassIndexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  int size() const { return static_cast<int>(ids_.size()); }
  bool contains(int i) const { return std::binary_search(ids_.begin(), ids_.end(), i); }
  const std::vector<int>& ids() const { return ids_; }

 private:
  std::vector<int> ids_;
};

namespace detail {

/// The coloring must validate with exactly the given witness.
inline void require_witness(const Graph& g, const Coloring& c, const FatWitness& w) {
  const FatVerdict verdict = validate_fat(g, c);
  const FatWitness* actual = witness_of(verdict);
  if (actual == nullptr) fail(ErrorCode::NotFat, "input coloring is not FAT: " + std::get<Rejection>(verdict).reason);
  require(*actual == w, ErrorCode::PreconditionViolated,
          "witness mismatch: coloring validates with alpha=" + to_string(actual->alpha) + ", given " + to_string(w.alpha));
}

/// Classes (v, w) -> c(v) on a row-major product with n2 columns.
inline Coloring lift_to_product(const Coloring& c, int n2) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(c.size()) * static_cast<std::size_t>(n2));
  for (Vertex v = 0; v < c.size(); ++v) out.insert(out.end(), static_cast<std::size_t>(n2), c[v]);
  return Coloring(std::move(out), c.classes());
}

inline int require_regular(const Graph& g, const char* which) {
  const auto d = is_regular(g);
  require(d.has_value(), ErrorCode::NotRegular, std::string(which) + " is not regular");
  return *d;
}

}  // namespace detail

/// Deletes the classes in I (|I| <= k - 2). The rest stays FAT with alpha / (1 - alpha |I|).
inline LiftResult remove_classes(const Graph& g, const Coloring& c, const FatWitness& w, const ClassIndexSet& removed) {
  detail::require_witness(g, c, w);
  const int k = c.classes();
  for (int i : removed.ids()) require(i >= 0 && i < k, ErrorCode::IndexError, "class " + std::to_string(i) + " out of range");
  require(removed.size() <= k - 2 || removed.size() == 0, ErrorCode::TooManyClassesRemoved,
          "cannot remove " + std::to_string(removed.size()) + " of " + std::to_string(k) + " classes");
  const Rational denom = Rational(1) - w.alpha * removed.size();
  require(denom != 0, ErrorCode::ParameterSingularity, "alpha * |I| = 1");

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed.contains(c[v])) keep.push_back(v);
  }
  InducedSubgraph sub = induced_subgraph(g, VertexSet(std::move(keep)));

  std::vector<int> relabel(static_cast<std::size_t>(k), -1);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    if (!removed.contains(i)) relabel[static_cast<std::size_t>(i)] = next++;
  }
  std::vector<int> assignment;
  for (Vertex old : sub.new_to_old) assignment.push_back(relabel[static_cast<std::size_t>(c[old])]);

  LiftResult out;
  out.graph = std::move(sub.graph);
  out.coloring = Coloring(std::move(assignment), next);
  out.predicted_alpha = next == 1 ? Rational(0) : w.alpha / denom;
  out.theorem_tag = LiftKind::Removal;
  return out;
}

/// Residual, on the graph with the classes in I removed, of the restriction of
/// f at the shifted eigenvalue 1 + (lambda - 1) / (1 - |I| alpha).
/// f must vanish on the removed classes and at least two classes must remain.
inline double restricted_eigenvalue_shift(const Graph& g, const Coloring& c, const FatWitness& w, const ClassIndexSet& removed,
                                          const VertexFunction& f, double lambda) {
  detail::require_witness(g, c, w);
  require(static_cast<int>(f.size()) == g.order(), ErrorCode::InvalidParams, "function length differs from vertex count");
  require(c.classes() - removed.size() >= 2, ErrorCode::TooManyClassesRemoved, "at least two classes must remain");
  for (Vertex v = 0; v < g.order(); ++v) {
    require(!removed.contains(c[v]) || f[static_cast<std::size_t>(v)] == 0.0, ErrorCode::SupportViolation,
            "function is nonzero at vertex " + std::to_string(v) + " of a removed class");
  }
  const Rational denom = Rational(1) - w.alpha * removed.size();
  require(denom != 0, ErrorCode::ParameterSingularity, "alpha * |I| = 1");

  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed.contains(c[v])) keep.push_back(v);
  }
  InducedSubgraph sub = induced_subgraph(g, VertexSet(std::move(keep)));
  VertexFunction restricted;
  for (Vertex old : sub.new_to_old) restricted.push_back(f[static_cast<std::size_t>(old)]);
  const double shifted = 1.0 + (lambda - 1.0) / to_double(denom);
  return eigen_residual(sub.graph, restricted, shifted);
}

/// Same partition on the complement of a d-regular graph, with parameter
/// (N/k - d alpha) / (N - d - 1). The complement must be connected; for
/// alpha = 0 the classes must have equal size.
inline LiftResult complement_lift(const Graph& g, const Coloring& c, const FatWitness& w) {
  detail::require_witness(g, c, w);
  const int d = detail::require_regular(g, "graph");
  Graph comp = complement(g);
  require(is_connected(comp), ErrorCode::ComplementDisconnected, "complement is not connected");
  const int k = c.classes();
  LiftResult out;
  out.graph = std::move(comp);
  out.coloring = c;
  out.theorem_tag = LiftKind::Complement;
  if (k == 1) {
    out.predicted_alpha = 0;
    return out;
  }
  require(w.alpha != 0 || equal_class_sizes(c), ErrorCode::UnequalClassesAtAlphaZero,
          "alpha = 0 coloring with unequal class sizes does not carry over");
  const int n = g.order();
  out.predicted_alpha = (make_rational(n, k) - w.alpha * d) / Rational(n - d - 1);
  return out;
}

/// Classes V_i x V(G2) on the tensor product; alpha is unchanged.
inline LiftResult tensor_lift(const Graph& g1, const Coloring& c1, const FatWitness& w1, const Graph& g2) {
  detail::require_witness(g1, c1, w1);
  require(!has_isolated_vertex(g2), ErrorCode::IsolatedVertexInFactor, "second factor has an isolated vertex");
  LiftResult out;
  out.graph = tensor(g1, g2);
  out.coloring = detail::lift_to_product(c1, g2.order());
  out.predicted_alpha = c1.classes() == 1 ? Rational(0) : w1.alpha;
  out.theorem_tag = LiftKind::Tensor;
  return out;
}

/// Classes V_i x V(G2) on the Cartesian product of regular graphs;
/// alpha d1 / (d1 + d2).
inline LiftResult cartesian_lift(const Graph& g1, const Coloring& c1, const FatWitness& w1, const Graph& g2) {
  detail::require_witness(g1, c1, w1);
  const int d1 = detail::require_regular(g1, "first factor");
  const int d2 = detail::require_regular(g2, "second factor");
  LiftResult out;
  out.graph = cartesian(g1, g2);
  out.coloring = detail::lift_to_product(c1, g2.order());
  out.predicted_alpha = (c1.classes() == 1 || d1 + d2 == 0) ? Rational(0) : w1.alpha * d1 / Rational(d1 + d2);
  out.theorem_tag = LiftKind::Cartesian;
  return out;
}

/// Classes V_i x V(G2) on the strong product of regular graphs;
/// alpha (d1 + d1 d2) / (d1 + d2 + d1 d2).
inline LiftResult strong_lift(const Graph& g1, const Coloring& c1, const FatWitness& w1, const Graph& g2) {
  detail::require_witness(g1, c1, w1);
  const int d1 = detail::require_regular(g1, "first factor");
  const int d2 = detail::require_regular(g2, "second factor");
  const int total = d1 + d2 + d1 * d2;
  LiftResult out;
  out.graph = strong(g1, g2);
  out.coloring = detail::lift_to_product(c1, g2.order());
  out.predicted_alpha = (c1.classes() == 1 || total == 0) ? Rational(0) : w1.alpha * (d1 + d1 * d2) / Rational(total);
  out.theorem_tag = LiftKind::Strong;
  return out;
}

inline LiftResult product_lift(const Graph& g1, const Coloring& c1, const FatWitness& w1, const Graph& g2, ProductKind kind) {
  switch (kind) {
    case ProductKind::Tensor: return tensor_lift(g1, c1, w1, g2);
    case ProductKind::Cartesian: return cartesian_lift(g1, c1, w1, g2);
    case ProductKind::Strong: return strong_lift(g1, c1, w1, g2);
  }
  fail(ErrorCode::InvalidParams, "unknown product kind");
}

/// Factor eigenvalues combined by the product formula, ascending:
///   tensor     l + t - l t
///   cartesian  (d1 l + d2 t) / (d1 + d2)
///   strong     (d1 d2 (l + t - l t) + d1 l + d2 t) / (d1 d2 + d1 + d2)
inline std::vector<double> combined_product_spectrum(const std::vector<double>& s1, int d1, const std::vector<double>& s2, int d2,
                                                     ProductKind kind) {
  std::vector<double> out;
  out.reserve(s1.size() * s2.size());
  for (double l : s1) {
    for (double t : s2) {
      switch (kind) {
        case ProductKind::Tensor: out.push_back(l + t - l * t); break;
        case ProductKind::Cartesian: out.push_back((d1 * l + d2 * t) / (d1 + d2)); break;
        case ProductKind::Strong:
          out.push_back((d1 * d2 * (l + t - l * t) + d1 * l + d2 * t) / (d1 * d2 + d1 + d2));
          break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Compares the directly computed spectrum of the product with the
/// formula-combined factor spectra, pairing sorted values.
inline bool product_spectrum_check(const Graph& g1, const Graph& g2, ProductKind kind, double tol = kCertificateTol) {
  require(!has_isolated_vertex(g1) && !has_isolated_vertex(g2), ErrorCode::PreconditionViolated,
          "product spectra need factors without isolated vertices");
  int d1 = 0;
  int d2 = 0;
  if (kind != ProductKind::Tensor) {
    const auto r1 = is_regular(g1);
    const auto r2 = is_regular(g2);
    require(r1 && r2, ErrorCode::PreconditionViolated, "cartesian and strong spectra need regular factors");
    d1 = *r1;
    d2 = *r2;
  }
  const auto expected = combined_product_spectrum(spectrum(g1).eigenvalues, d1, spectrum(g2).eigenvalues, d2, kind);
  const auto actual = spectrum(product(g1, g2, kind)).eigenvalues;
  if (expected.size() != actual.size()) return false;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (std::abs(expected[i] - actual[i]) > tol) return false;
  }
  return true;
}

}  // namespace fatlas
