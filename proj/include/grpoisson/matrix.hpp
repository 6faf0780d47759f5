#pragma once

// Dense matrices over Rat with exact elimination (rank, determinant, inverse).

#include "rational.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace grpoisson {

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(checked_size(rows, cols)) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }

  /// Rows given as nested initializer data; all rows must have equal length.
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_)
        throw std::invalid_argument("RatMatrix: ragged rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return data_[index(i, j)]; }
  const Rat& operator()(int i, int j) const { return data_[index(i, j)]; }

  /// Row-major view of all entries.
  [[nodiscard]] std::span<const Rat> entries() const { return data_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  [[nodiscard]] RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
  [[nodiscard]] RatMatrix block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
      throw std::out_of_range("RatMatrix::block out of range");
    RatMatrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  /// Rows picked by (0-based) index, in the given order.
  [[nodiscard]] RatMatrix select_rows(std::span<const int> idx) const {
    RatMatrix b(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < cols_; ++j) b(i, j) = (*this)(idx[static_cast<std::size_t>(i)], j);
    return b;
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  RatMatrix& operator-=(const RatMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  RatMatrix& operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rat& s) { return a *= s; }
  friend RatMatrix operator*(const Rat& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator-(RatMatrix a) { return a *= Rat(-1); }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int l = 0; l < a.cols_; ++l) {
        const Rat& ail = a(i, l);
        if (ail.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
      }
    return c;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << "[";
    for (int i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (int j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
    }
    return os << "]";
  }

private:
  static std::size_t checked_size(int r, int c) {
    if (r < 0 || c < 0) throw std::invalid_argument("RatMatrix: negative dimension");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(c);
  }
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  void check_same(const RatMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

namespace detail {

// In-place row reduction to echelon form. Pivot choice: first nonzero entry
// in the current column, scanning rows top-down. Returns the rank and the
// determinant sign flips from swaps.
inline std::pair<int, int> echelon(RatMatrix& m) {
  int rank = 0;
  int swaps = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
      ++swaps;
    }
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      Rat f = m(r, col) / m(rank, col);
      for (int j = col; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return {rank, swaps};
}

} // namespace detail

[[nodiscard]] inline int rank(RatMatrix m) { return detail::echelon(m).first; }

[[nodiscard]] inline Rat determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  auto [r, swaps] = detail::echelon(m);
  if (r < m.rows()) return Rat(0);
  Rat d(swaps % 2 ? -1 : 1);
  for (int i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

/// Gauss-Jordan inverse; std::nullopt when singular.
[[nodiscard]] inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rat s = Rat(1) / m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) *= s;
      inv(col, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      Rat f = m(r, col);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

} // namespace grpoisson
