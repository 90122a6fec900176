#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "csrec/error.hpp"

namespace csrec {

// Dense row-major matrix of doubles. Vectors are 1xN matrices. This is all the
// linear algebra the backbone needs; keeping it local makes bitwise
// determinism easy to reason about.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  double* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return a.data() + static_cast<std::size_t>(r) * cols; }

  std::size_t size() const { return a.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  void fill(double v) {
    for (auto& x : a) x = v;
  }
};

using Vec = std::vector<double>;

inline double dot(const double* x, const double* y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

// out = M x  (M: m x n, x: n)
inline void matvec(const Mat& m, const double* x, double* out) {
  for (int r = 0; r < m.rows; ++r) out[r] = dot(m.row(r), x, m.cols);
}

// out += M^T x  (M: m x n, x: m, out: n)
inline void matvec_t_add(const Mat& m, const double* x, double* out) {
  for (int r = 0; r < m.rows; ++r) {
    const double* row = m.row(r);
    double xr = x[r];
    for (int c = 0; c < m.cols; ++c) out[c] += row[c] * xr;
  }
}

// M += scale * u v^T  (u: rows, v: cols)
inline void outer_add(Mat& m, const double* u, const double* v, double scale = 1.0) {
  for (int r = 0; r < m.rows; ++r) {
    double* row = m.row(r);
    double ur = u[r] * scale;
    for (int c = 0; c < m.cols; ++c) row[c] += ur * v[c];
  }
}

inline void axpy(double alpha, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// Deterministic pairwise sum; O(log n) error growth and independent of any
// thread count because the split points depend only on length.
inline double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

inline double pairwise_mean(const std::vector<double>& xs) {
  require(!xs.empty(), Errc::EmptyInput, "mean of empty vector");
  return pairwise_sum(xs.data(), xs.size()) / static_cast<double>(xs.size());
}

}  // namespace csrec
