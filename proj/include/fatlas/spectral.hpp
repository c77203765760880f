#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fatlas/coloring.hpp"
#include "fatlas/errors.hpp"
#include "fatlas/graph.hpp"
#include "fatlas/linalg.hpp"
#include "fatlas/rational.hpp"

namespace fatlas {

using VertexFunction = std::vector<double>;

inline constexpr double kDefaultSpectrumTol = 1e-10;
inline constexpr double kJacobiThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kEigenvalueGroupTol = 1e-8;
inline constexpr double kCertificateTol = 1e-8;

/// L = I - D^{-1} A and its symmetric similar form S = I - D^{-1/2} A D^{-1/2}.
/// Rows and columns of isolated vertices are identity rows in both
/// (D^{-1}_{ii} := 0 for deg 0).
struct LaplacianMatrix {
  DenseMatrix random_walk;
  DenseMatrix symmetric;
};

inline LaplacianMatrix normalized_laplacian(const Graph& g) {
  const int n = g.order();
  LaplacianMatrix out{DenseMatrix::identity(n), DenseMatrix::identity(n)};
  for (Vertex u = 0; u < n; ++u) {
    const int du = g.degree(u);
    for (Vertex v : g.neighbors(u)) {
      out.random_walk(u, v) = -1.0 / du;
      out.symmetric(u, v) = -1.0 / std::sqrt(static_cast<double>(du) * g.degree(v));
    }
  }
  return out;
}

/// Exact entries of L for small graphs.
inline std::vector<std::vector<Rational>> exact_normalized_laplacian(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (Vertex u = 0; u < n; ++u) {
    out[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = 1;
    for (Vertex v : g.neighbors(u)) out[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = make_rational(-1, g.degree(u));
  }
  return out;
}

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending, within [0, 2]
  std::vector<VertexFunction> eigenfunctions;
  double tol = kDefaultSpectrumTol;

  /// Runs of eigenvalues within `group_tol` of the run's first member, as (mean, multiplicity).
  std::vector<std::pair<double, int>> grouped(double group_tol = kEigenvalueGroupTol) const {
    std::vector<std::pair<double, int>> out;
    std::size_t i = 0;
    while (i < eigenvalues.size()) {
      std::size_t j = i;
      double sum = 0.0;
      while (j < eigenvalues.size() && eigenvalues[j] - eigenvalues[i] <= group_tol) sum += eigenvalues[j++];
      out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
      i = j;
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Vertex functions

inline VertexFunction apply_laplacian(const Graph& g, const VertexFunction& f) {
  require(static_cast<int>(f.size()) == g.order(), ErrorCode::InvalidParams, "function length differs from vertex count");
  VertexFunction out(f.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    double sum = 0.0;
    for (Vertex w : nb) sum += f[static_cast<std::size_t>(w)];
    out[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(v)] - (nb.empty() ? 0.0 : sum / static_cast<double>(nb.size()));
  }
  return out;
}

/// <f, h> = sum_v deg(v) f(v) h(v).
inline double weighted_inner_product(const Graph& g, const VertexFunction& f, const VertexFunction& h) {
  require(static_cast<int>(f.size()) == g.order() && static_cast<int>(h.size()) == g.order(), ErrorCode::InvalidParams,
          "function length differs from vertex count");
  double sum = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v) * f[static_cast<std::size_t>(v)] * h[static_cast<std::size_t>(v)];
  return sum;
}

namespace detail {

// Degree weights with isolated vertices weighted 1, so residual norms see them.
inline double residual_norm(const Graph& g, const VertexFunction& f) {
  double sum = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const double x = f[static_cast<std::size_t>(v)];
    sum += std::max(1, g.degree(v)) * x * x;
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// ||L f - lambda f||_w / ||f||_w.
inline double eigen_residual(const Graph& g, const VertexFunction& f, double lambda) {
  require(static_cast<int>(f.size()) == g.order(), ErrorCode::InvalidParams, "function length differs from vertex count");
  const double norm = detail::residual_norm(g, f);
  require(norm > 0.0, ErrorCode::ZeroFunction, "eigen_residual of the zero function");
  VertexFunction r = apply_laplacian(g, f);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= lambda * f[i];
  return detail::residual_norm(g, r) / norm;
}

/// Eigenvalue estimate minimizing the weighted residual: <Lf, f>_w / <f, f>_w.
inline double rayleigh_quotient(const Graph& g, const VertexFunction& f) {
  const double norm = detail::residual_norm(g, f);
  require(norm > 0.0, ErrorCode::ZeroFunction, "rayleigh quotient of the zero function");
  const VertexFunction lf = apply_laplacian(g, f);
  double num = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    num += std::max(1, g.degree(v)) * lf[static_cast<std::size_t>(v)] * f[static_cast<std::size_t>(v)];
  }
  return num / (norm * norm);
}

struct IndicatorFunction {
  VertexFunction values;
  VertexSet positive;
  VertexSet negative;
};

/// +1 on `plus`, -1 on `minus`, 0 elsewhere.
inline IndicatorFunction indicator_pm(int n, const VertexSet& plus, const VertexSet& minus) {
  IndicatorFunction out{VertexFunction(static_cast<std::size_t>(n), 0.0), plus, minus};
  for (Vertex v : plus) {
    require(v >= 0 && v < n, ErrorCode::IndexError, "vertex " + std::to_string(v) + " out of range");
    out.values[static_cast<std::size_t>(v)] = 1.0;
  }
  for (Vertex v : minus) {
    require(v >= 0 && v < n, ErrorCode::IndexError, "vertex " + std::to_string(v) + " out of range");
    require(!plus.contains(v), ErrorCode::InvalidParams, "positive and negative sets overlap");
    out.values[static_cast<std::size_t>(v)] = -1.0;
  }
  return out;
}

/// f_ij: +1 on class i, -1 on class j.
inline IndicatorFunction indicator_fij(const Coloring& c, int i, int j) {
  require(i != j, ErrorCode::IndexError, "f_ij needs distinct classes");
  return indicator_pm(c.size(), class_members(c, i), class_members(c, j));
}

/// f_{v,w}: +1 at v, -1 at w.
inline IndicatorFunction indicator_fvw(int n, Vertex v, Vertex w) {
  require(v != w, ErrorCode::IndexError, "f_vw needs distinct vertices");
  require(v >= 0 && v < n && w >= 0 && w < n, ErrorCode::IndexError, "vertex out of range");
  return indicator_pm(n, VertexSet{v}, VertexSet{w});
}

/// g_ij: +1 on part i, -1 on part j of a graph carrying part labels.
inline IndicatorFunction indicator_gij(const Graph& g, int i, int j) {
  require(g.has_parts(), ErrorCode::IndexError, "graph carries no part labels");
  require(i != j && i >= 0 && j >= 0 && i < g.part_count() && j < g.part_count(), ErrorCode::IndexError,
          "part indices must be distinct and in range");
  std::vector<Vertex> plus;
  std::vector<Vertex> minus;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int part = g.part_labels()[static_cast<std::size_t>(v)];
    if (part == i) plus.push_back(v);
    if (part == j) minus.push_back(v);
  }
  return indicator_pm(g.order(), VertexSet(std::move(plus)), VertexSet(std::move(minus)));
}

// ---------------------------------------------------------------------------
// Spectrum

/// Full normalized-Laplacian spectrum via cyclic Jacobi on S.
///
/// Eigenfunctions are f = D^{-1/2} u (with D^{-1/2}_{ii} := 1 at isolated
/// vertices) scaled to unit degree-weighted norm; those supported only on
/// isolated vertices are scaled to unit Euclidean norm. Eigenvalues within
/// `tol` of 0 or 2 snap to the boundary.
inline SpectralDecomposition spectrum(const Graph& g, double tol = kDefaultSpectrumTol) {
  require(tol > 0.0, ErrorCode::InvalidParams, "spectrum tolerance must be positive");
  const int n = g.order();
  const SymmetricEigen eig = jacobi_eigen(normalized_laplacian(g).symmetric, std::min(tol, kJacobiThreshold), kJacobiMaxSweeps);

  SpectralDecomposition out;
  out.tol = tol;
  for (int i = 0; i < n; ++i) {
    double lambda = eig.values[static_cast<std::size_t>(i)];
    if (std::abs(lambda) <= tol) lambda = 0.0;
    if (std::abs(lambda - 2.0) <= tol) lambda = 2.0;
    out.eigenvalues.push_back(lambda);

    VertexFunction f = eig.vectors.column(i);
    for (Vertex v = 0; v < n; ++v) {
      const int d = g.degree(v);
      if (d > 0) f[static_cast<std::size_t>(v)] /= std::sqrt(static_cast<double>(d));
    }
    double norm = std::sqrt(std::max(0.0, weighted_inner_product(g, f, f)));
    if (norm <= tol) {
      norm = 0.0;
      for (double x : f) norm += x * x;
      norm = std::sqrt(norm);
    }
    for (double& x : f) x /= norm;
    out.eigenfunctions.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

/// Spectral FAT test on a connected graph: every f_ij (i < j) must be an
/// eigenfunction for one common eigenvalue, which must equal k * alpha for the
/// exact alpha read off the neighbor counts. Returns alpha or nothing.
inline std::optional<Rational> check_fat_spectral(const Graph& g, const Coloring& c, double tol = kCertificateTol) {
  require(c.size() == g.order(), ErrorCode::InvalidColoring, "coloring length differs from vertex count");
  require(is_connected(g), ErrorCode::Disconnected, "spectral FAT certificate needs a connected graph");
  const int k = c.classes();
  if (k == 1) return Rational(0);

  std::optional<double> common;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const VertexFunction f = indicator_fij(c, i, j).values;
      const double lambda = rayleigh_quotient(g, f);
      if (eigen_residual(g, f, lambda) > tol) return std::nullopt;
      if (!common) {
        common = lambda;
      } else if (std::abs(*common - lambda) > tol) {
        return std::nullopt;
      }
    }
  }

  const std::optional<Rational> alpha = infer_alpha(g, c);
  if (!alpha) return std::nullopt;
  const double k_alpha = k * to_double(*alpha);
  if (std::abs(k_alpha - *common) > tol) return std::nullopt;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (eigen_residual(g, indicator_fij(c, i, j).values, k_alpha) > tol) return std::nullopt;
    }
  }
  return alpha;
}

struct PlusMinusCheck {
  bool holds = false;
  std::string diagnostic;
  Vertex vertex = -1;
};

/// Exact test of whether the +1/-1 indicator of (plus, minus) is an
/// eigenfunction with eigenvalue lambda: every outside vertex sees both sides
/// equally, and every member v satisfies
///   lambda - 1 = (e(v, other side) - e(v, own side)) / deg v.
/// Isolated members satisfy L f(v) = f(v), so they require lambda = 1.
inline PlusMinusCheck plusminus_eigen_check(const Graph& g, const VertexSet& plus, const VertexSet& minus,
                                            const Rational& lambda) {
  require(!plus.empty() && !minus.empty(), ErrorCode::EmptySide, "both sides must be nonempty");
  const auto in_plus = plus.mask(g.order());
  const auto in_minus = minus.mask(g.order());
  for (Vertex v : plus) require(!in_minus[static_cast<std::size_t>(v)], ErrorCode::InvalidParams, "sides overlap");

  const Rational shift = lambda - 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    int to_plus = 0;
    int to_minus = 0;
    for (Vertex w : g.neighbors(v)) {
      to_plus += in_plus[static_cast<std::size_t>(w)];
      to_minus += in_minus[static_cast<std::size_t>(w)];
    }
    const bool is_plus = in_plus[static_cast<std::size_t>(v)];
    const bool is_minus = in_minus[static_cast<std::size_t>(v)];
    if (!is_plus && !is_minus) {
      if (to_plus != to_minus) {
        return {false,
                "outside vertex has " + std::to_string(to_plus) + " neighbors in V+ and " + std::to_string(to_minus) +
                    " in V-",
                v};
      }
      continue;
    }
    const int d = g.degree(v);
    const Rational ratio = d == 0 ? Rational(0)
                                  : (is_plus ? make_rational(to_minus - to_plus, d) : make_rational(to_plus - to_minus, d));
    if (ratio != shift) {
      return {false,
              std::string(is_plus ? "V+" : "V-") + " member gives lambda-1 = " + to_string(ratio) + ", expected " +
                  to_string(shift),
              v};
    }
  }
  return {true, "", -1};
}

}  // namespace fatlas
