#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
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

/// theta1 (theta1 - 1) n1^2 == theta2 (theta2 - 1) n2^2, evaluated exactly.
inline bool bipartite_condition(int n1, int theta1, int n2, int theta2) {
  require(n1 >= 1 && theta1 >= 1 && n2 >= 1 && theta2 >= 1, ErrorCode::InvalidParams, "arguments must be positive");
  const BigInt lhs = BigInt(theta1) * (theta1 - 1) * n1 * n1;
  const BigInt rhs = BigInt(theta2) * (theta2 - 1) * n2 * n2;
  return lhs == rhs;
}

struct BipartiteSolution {
  int n1, theta1, n2, theta2;
  friend bool operator==(const BipartiteSolution&, const BipartiteSolution&) = default;
};

/// Solutions of the two-size condition with n1 > n2, gcd(n1, n2) = 1 and not
/// theta1 = theta2 = 1, inside the given box. No completeness claim beyond it.
inline std::vector<BipartiteSolution> enumerate_bipartite_solutions(int max_size, int max_multiplicity) {
  std::vector<BipartiteSolution> out;
  for (int n1 = 2; n1 <= max_size; ++n1) {
    for (int n2 = 1; n2 < n1; ++n2) {
      if (std::gcd(n1, n2) != 1) continue;
      for (int t1 = 1; t1 <= max_multiplicity; ++t1) {
        for (int t2 = 1; t2 <= max_multiplicity; ++t2) {
          if (t1 == 1 && t2 == 1) continue;
          if (bipartite_condition(n1, t1, n2, t2)) out.push_back({n1, t1, n2, t2});
        }
      }
    }
  }
  return out;
}

inline int fat_chromatic_turan(int n, int t) {
  require(t >= 1 && n >= 1 && t <= n, ErrorCode::InvalidParams, "turan requires 1 <= t <= N");
  require(n % t == 0, ErrorCode::NotRegularTuran, "T(" + std::to_string(n) + "," + std::to_string(t) + ") is not regular");
  return std::max(t, n / t);
}

/// Each part of size s puts s/k vertices in every class (offset j -> class j mod k).
inline Coloring construct_balanced(const MultipartiteSpec& spec, int k) {
  require(k >= 1, ErrorCode::InvalidParams, "k must be positive");
  for (const auto& g : spec.groups()) {
    require(g.size % k == 0, ErrorCode::DivisibilityError,
            std::to_string(k) + " does not divide part size " + std::to_string(g.size));
  }
  std::vector<int> assignment;
  for (int size : spec.part_sizes()) {
    for (int j = 0; j < size; ++j) assignment.push_back(j % k);
  }
  return Coloring(std::move(assignment), k);
}

/// Whole parts per class (part q -> class q mod k) on a regular Turan graph.
inline Coloring construct_monochromatic(const MultipartiteSpec& spec, int k) {
  require(spec.distinct_sizes() == 1, ErrorCode::NotRegularTuran, "monochromatic construction needs equal part sizes");
  require(k >= 1, ErrorCode::InvalidParams, "k must be positive");
  const int t = spec.part_count();
  require(t % k == 0, ErrorCode::DivisibilityError, std::to_string(k) + " does not divide the part count " + std::to_string(t));
  std::vector<int> assignment;
  const auto sizes = spec.part_sizes();
  for (int q = 0; q < t; ++q) assignment.insert(assignment.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(q)]), q % k);
  return Coloring(std::move(assignment), k);
}

/// Alpha of the balanced k-coloring: every vertex has (N - n)/k neighbors per class.
inline Rational balanced_alpha(const MultipartiteSpec& spec, int k) {
  if (k == 1 || spec.part_count() == 1) return Rational(0);
  return make_rational(1, k);
}

/// Alpha of the monochromatic k-coloring of T(N, t): (t/k) / (t - 1).
inline Rational monochromatic_alpha(const MultipartiteSpec& spec, int k) {
  const int t = spec.part_count();
  if (k == 1) return Rational(0);
  return make_rational(t / k, t - 1);
}

enum class MultipartiteCase { Turan, BipartiteCondition, Gcd };

constexpr std::string_view to_string(MultipartiteCase c) {
  switch (c) {
    case MultipartiteCase::Turan: return "turan";
    case MultipartiteCase::BipartiteCondition: return "bipartite-condition";
    case MultipartiteCase::Gcd: return "gcd";
  }
  return "unknown";
}

struct ChromaticVerdict {
  int chi_fat = 1;
  MultipartiteCase kind = MultipartiteCase::Gcd;
  Coloring construction;
  Rational predicted_alpha;
};

/// Closed-form FAT chromatic number of a complete multipartite graph:
///   one part size          -> max{theta1, n1}
///   two coprime sizes with theta1(theta1-1)n1^2 = theta2(theta2-1)n2^2 -> 2
///   otherwise              -> gcd of the part sizes
/// together with a coloring that attains it on complete_multipartite(spec).
inline ChromaticVerdict fat_chromatic_multipartite(const MultipartiteSpec& spec) {
  const auto& groups = spec.groups();
  ChromaticVerdict v;
  if (groups.size() == 1) {
    const int n1 = groups[0].size;
    const int theta1 = groups[0].multiplicity;
    v.kind = MultipartiteCase::Turan;
    v.chi_fat = std::max(theta1, n1);
    if (theta1 > n1) {
      v.construction = construct_monochromatic(spec, theta1);
      v.predicted_alpha = monochromatic_alpha(spec, theta1);
    } else {
      v.construction = construct_balanced(spec, n1);
      v.predicted_alpha = balanced_alpha(spec, n1);
    }
    return v;
  }

  if (groups.size() == 2 && std::gcd(groups[0].size, groups[1].size) == 1 &&
      bipartite_condition(groups[0].size, groups[0].multiplicity, groups[1].size, groups[1].multiplicity)) {
    const int n1 = groups[0].size;
    const int theta1 = groups[0].multiplicity;
    const int n2 = groups[1].size;
    const int theta2 = groups[1].multiplicity;
    std::vector<int> assignment(static_cast<std::size_t>(n1 * theta1), 0);
    assignment.insert(assignment.end(), static_cast<std::size_t>(n2 * theta2), 1);
    v.kind = MultipartiteCase::BipartiteCondition;
    v.chi_fat = 2;
    v.construction = Coloring(std::move(assignment), 2);
    v.predicted_alpha = make_rational(theta2 * n2, theta2 * n2 + (theta1 - 1) * n1);
    return v;
  }

  int g = 0;
  for (const auto& grp : groups) g = std::gcd(g, grp.size);
  v.kind = MultipartiteCase::Gcd;
  v.chi_fat = g;
  v.construction = construct_balanced(spec, g);
  v.predicted_alpha = balanced_alpha(spec, g);
  return v;
}

struct KnownEigenvalue {
  Rational value;
  int multiplicity = 0;
};

struct InterlacedEigenvalue {
  double value = 0.0;
  Rational lower;  // exclusive
  Rational upper;  // exclusive
};

struct MultipartiteSpectrum {
  std::vector<KnownEigenvalue> known;  // N/(N - n_i) with multiplicity theta_i - 1, only when theta_i >= 2
  int ones_multiplicity = 0;
  int zero_multiplicity = 1;
  std::vector<InterlacedEigenvalue> x_values;  // x_1 > x_2 > ... > x_{p-1}
  /// Largest distance between a known exact eigenvalue and the numeric eigenvalue matched to it.
  double max_known_deviation = 0.0;

  int total_multiplicity() const {
    int total = ones_multiplicity + zero_multiplicity + static_cast<int>(x_values.size());
    for (const auto& k : known) total += k.multiplicity;
    return total;
  }
};

/// Spectrum of complete_multipartite(spec): exact values where a closed form
/// exists, and the p-1 interlaced values read off a numeric decomposition
/// after removing the exact ones. Each x_i must fall in
/// (N/(N - n_{i+1}), N/(N - n_i)); escaping by more than `tol` throws.
inline MultipartiteSpectrum multipartite_spectrum_closed(const MultipartiteSpec& spec, double tol = kCertificateTol) {
  require(spec.part_count() >= 2, ErrorCode::InvalidParams, "spectrum closed form needs at least two parts");
  const int n = spec.order();
  MultipartiteSpectrum out;
  for (const auto& g : spec.groups()) {
    if (g.multiplicity >= 2) out.known.push_back({make_rational(n, n - g.size), g.multiplicity - 1});
  }
  out.ones_multiplicity = n - spec.part_count();

  std::vector<double> remaining = spectrum(complete_multipartite(spec)).eigenvalues;
  auto take_nearest = [&](double target) {
    auto it = std::min_element(remaining.begin(), remaining.end(),
                               [&](double a, double b) { return std::abs(a - target) < std::abs(b - target); });
    out.max_known_deviation = std::max(out.max_known_deviation, std::abs(*it - target));
    remaining.erase(it);
  };
  take_nearest(0.0);
  for (int i = 0; i < out.ones_multiplicity; ++i) take_nearest(1.0);
  for (const auto& k : out.known) {
    for (int i = 0; i < k.multiplicity; ++i) take_nearest(to_double(k.value));
  }

  std::sort(remaining.begin(), remaining.end(), std::greater<>());
  const auto& groups = spec.groups();
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
    InterlacedEigenvalue x{remaining[i], make_rational(n, n - groups[i + 1].size), make_rational(n, n - groups[i].size)};
    if (x.value < to_double(x.lower) - tol || x.value > to_double(x.upper) + tol) {
      fail(ErrorCode::BracketViolation, "x_" + std::to_string(i + 1) + " = " + std::to_string(x.value) + " outside (" +
                                            to_string(x.lower) + ", " + to_string(x.upper) + ")");
    }
    out.x_values.push_back(x);
  }
  return out;
}

/// A graph recognized as complete multipartite, with the map onto the
/// vertex layout of complete_multipartite(spec).
struct RecognizedMultipartite {
  MultipartiteSpec spec;
  std::vector<Vertex> to_layout;  // input vertex -> realized vertex
};

/// Parts are the components of the complement; they must be independent and
/// fully joined to each other. Parts are ordered by decreasing size, ties by
/// smallest vertex.
inline std::optional<RecognizedMultipartite> recognize_multipartite(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  auto parts = connected_components(complement(g));
  const int n = g.order();
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (Vertex v : parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& own = parts[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])];
    if (g.degree(v) != n - static_cast<int>(own.size())) return std::nullopt;
    for (Vertex w : g.neighbors(v)) {
      if (part_of[static_cast<std::size_t>(w)] == part_of[static_cast<std::size_t>(v)]) return std::nullopt;
    }
  }
  std::stable_sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  std::vector<int> sizes;
  std::vector<Vertex> to_layout(static_cast<std::size_t>(n));
  Vertex next = 0;
  for (const auto& part : parts) {
    sizes.push_back(static_cast<int>(part.size()));
    for (Vertex v : part) to_layout[static_cast<std::size_t>(v)] = next++;
  }
  return RecognizedMultipartite{MultipartiteSpec::from_part_sizes(sizes), std::move(to_layout)};
}

}  // namespace fatlas
