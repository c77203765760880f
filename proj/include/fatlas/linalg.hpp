#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "fatlas/errors.hpp"

namespace fatlas {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[at(i, j)]; }
  double operator()(int i, int j) const { return data_[at(i, j)]; }

  std::vector<double> column(int j) const {
    std::vector<double> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
    return out;
  }

  std::vector<double> multiply(const std::vector<double>& x) const {
    std::vector<double> y(static_cast<std::size_t>(rows_), 0.0);
    for (int i = 0; i < rows_; ++i) {
      double sum = 0.0;
      for (int j = 0; j < cols_; ++j) sum += (*this)(i, j) * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = sum;
    }
    return y;
  }

  bool is_symmetric(double tol = 0.0) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
      for (int j = i + 1; j < cols_; ++j) {
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
      }
    }
    return true;
  }

 private:
  std::size_t at(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column i pairs with values[i]; orthonormal
  int sweeps = 0;
  double off_diagonal_norm = 0.0;
};

inline double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

/// Cyclic Jacobi eigensolver for a real symmetric matrix.
///
/// Sweeps over all (p, q) pairs in row order, annihilating a(p, q) with a
/// plane rotation, until the off-diagonal Frobenius norm drops below
/// `threshold`. Throws NoConvergence after `max_sweeps`.
inline SymmetricEigen jacobi_eigen(DenseMatrix a, double threshold = 1e-12, int max_sweeps = 100) {
  require(a.rows() == a.cols(), ErrorCode::InvalidParams, "jacobi needs a square matrix");
  require(a.is_symmetric(1e-12), ErrorCode::InvalidParams, "jacobi needs a symmetric matrix");
  const int n = a.rows();
  DenseMatrix v = DenseMatrix::identity(n);
  SymmetricEigen out;

  double off = off_diagonal_norm(a);
  while (off >= threshold) {
    if (out.sweeps == max_sweeps) {
      fail(ErrorCode::NoConvergence, "off-diagonal norm " + std::to_string(off) + " after " +
                                         std::to_string(max_sweeps) + " sweeps");
    }
    ++out.sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle from theta = (a_qq - a_pp) / (2 a_pq), smaller root for t.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          a(r, p) = new_rp;
          a(p, r) = new_rp;
          a(r, q) = new_rq;
          a(q, r) = new_rq;
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  out.off_diagonal_norm = off;

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = DenseMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    const int src = order[static_cast<std::size_t>(i)];
    out.values[static_cast<std::size_t>(i)] = a(src, src);
    for (int r = 0; r < n; ++r) out.vectors(r, i) = v(r, src);
  }
  return out;
}

}  // namespace fatlas
