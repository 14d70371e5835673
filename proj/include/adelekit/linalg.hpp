#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adelekit/errors.hpp"
#include "adelekit/fields.hpp"

namespace adelekit {

/// Dense matrix over an exact field. Row-major, value semantics.
template <ExactField K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, K::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K::one();
    return m;
  }

  K& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const K& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  bool operator==(const Mat&) const = default;

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols != o.rows) throw window_mismatch("matrix product shape mismatch");
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const K& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }
  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols) throw window_mismatch("matrix-vector shape mismatch");
    std::vector<K> r(static_cast<std::size_t>(rows), K::zero());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!at(i, j).is_zero()) r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
  }

  bool is_zero() const {
    for (const K& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Reduced row echelon form in place; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (!at(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      const K inv = at(r, c).inv();
      for (int j = c; j < cols; ++j) at(r, j) *= inv;
      for (int i = 0; i < rows; ++i) {
        if (i == r || at(i, c).is_zero()) continue;
        const K f = at(i, c);
        for (int j = c; j < cols; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
  }

  /// Basis of the right kernel {v : A v = 0}.
  std::vector<std::vector<K>> kernel_basis() const {
    Mat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<K>> basis;
    for (int free = 0; free < cols; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      std::vector<K> v(static_cast<std::size_t>(cols), K::zero());
      v[static_cast<std::size_t>(free)] = K::one();
      for (std::size_t r = 0; r < pivots.size(); ++r)
        v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of A x = b, if any.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (static_cast<int>(b.size()) != rows) throw window_mismatch("solve: rhs size mismatch");
    Mat aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
    std::vector<K> x(static_cast<std::size_t>(cols), K::zero());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), cols);
    return x;
  }

  K det() const {
    if (rows != cols) throw window_mismatch("determinant of non-square matrix");
    Mat m = *this;
    K d = K::one();
    for (int c = 0; c < cols; ++c) {
      int p = -1;
      for (int i = c; i < rows; ++i)
        if (!m.at(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return K::zero();
      if (p != c) {
        for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(c, j));
        d = -d;
      }
      d = d * m.at(c, c);
      const K inv = m.at(c, c).inv();
      for (int i = c + 1; i < rows; ++i) {
        if (m.at(i, c).is_zero()) continue;
        const K f = m.at(i, c) * inv;
        for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(c, j);
      }
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    if (rows != cols) throw window_mismatch("inverse of non-square matrix");
    Mat aug(rows, 2 * cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols + i) = K::one();
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows) return std::nullopt;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] != static_cast<int>(r)) return std::nullopt;
    Mat inv(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) inv.at(i, j) = aug.at(i, cols + j);
    return inv;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw window_mismatch("matrix shape mismatch");
  }
};

}  // namespace adelekit
