#pragma once

#include <stdexcept>
#include <string>

namespace grpoisson {

/// Gr(k, n) together with its big chart of (n-k) x k matrices.
struct GrassShape {
  int k = 1;
  int n = 2;

  GrassShape() = default;
  GrassShape(int k_, int n_) : k(k_), n(n_) {
    if (k_ < 1 || k_ >= n_)
      throw std::invalid_argument("need 1 <= k < n, got k=" + std::to_string(k_) +
                                  " n=" + std::to_string(n_));
  }

  [[nodiscard]] int rows() const { return n - k; }
  [[nodiscard]] int cols() const { return k; }
  [[nodiscard]] int dim() const { return (n - k) * k; }

  friend bool operator==(const GrassShape&, const GrassShape&) = default;
};

/// Chart coordinate x_{pq}, 1-based. The flat index (p-1)k + (q-1) is the
/// only ordering of chart variables used anywhere in the library.
struct VarIndex {
  int p = 1;
  int q = 1;

  [[nodiscard]] int flat(const GrassShape& s) const { return (p - 1) * s.k + (q - 1); }

  static VarIndex from_flat(int flat, const GrassShape& s) {
    return VarIndex{flat / s.k + 1, flat % s.k + 1};
  }

  [[nodiscard]] std::string name() const {
    if (p < 10 && q < 10) return "x" + std::to_string(p) + std::to_string(q);
    return "x" + std::to_string(p) + "_" + std::to_string(q);
  }

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

} // namespace grpoisson
