#pragma once

#include "matrix.hpp"

#include <stdexcept>

namespace grpoisson {

/// An invertible n x n rational matrix acting on Gr(k, n) from the left.
/// Block names follow the parabolic shape for a given k:
///   g = [ A  B ]   A: k x k,      B: k x (n-k)
///       [ C  D ]   C: (n-k) x k,  D: (n-k) x (n-k)
class GLElement {
public:
  explicit GLElement(RatMatrix g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols()) throw std::invalid_argument("GLElement: matrix is not square");
    if (determinant(g_).is_zero()) throw std::invalid_argument("GLElement: singular matrix");
  }

  static GLElement identity(int n) { return GLElement(RatMatrix::identity(n)); }

  static GLElement diagonal(const std::vector<Rat>& t) {
    RatMatrix m(static_cast<int>(t.size()), static_cast<int>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = t[i];
    return GLElement(std::move(m));
  }

  [[nodiscard]] int n() const { return g_.rows(); }
  [[nodiscard]] const RatMatrix& matrix() const { return g_; }

  [[nodiscard]] RatMatrix A(int k) const { return g_.block(0, 0, k, k); }
  [[nodiscard]] RatMatrix B(int k) const { return g_.block(0, k, k, n() - k); }
  [[nodiscard]] RatMatrix C(int k) const { return g_.block(k, 0, n() - k, k); }
  [[nodiscard]] RatMatrix D(int k) const { return g_.block(k, k, n() - k, n() - k); }

  friend GLElement operator*(const GLElement& a, const GLElement& b) { return GLElement(a.g_ * b.g_); }
  friend bool operator==(const GLElement&, const GLElement&) = default;

private:
  RatMatrix g_;
};

} // namespace grpoisson
