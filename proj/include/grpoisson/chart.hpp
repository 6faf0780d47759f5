#pragma once

// The big affine chart of Gr(k, n) and the infinitesimal gl_n action on it.
//
// A chart point X ((n-k) x k) stands for the column span of the n x k block
// matrix (I_k ; X). GL_n acts on column spans from the left; the chart
// coordinate of g.(I;X) is (C + DX)(A + BX)^{-1}.

#include "gl.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "perm.hpp"
#include "shape.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace grpoisson {

/// Thrown when a point or its image under a group element leaves the big cell.
struct ChartEscape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ChartPoint {
public:
  ChartPoint(GrassShape shape, RatMatrix x) : shape_(shape), x_(std::move(x)) {
    if (x_.rows() != shape_.rows() || x_.cols() != shape_.cols())
      throw std::invalid_argument("ChartPoint: expected a " + std::to_string(shape_.rows()) + "x" +
                                  std::to_string(shape_.cols()) + " matrix");
  }

  static ChartPoint origin(GrassShape shape) { return {shape, RatMatrix(shape.rows(), shape.cols())}; }

  [[nodiscard]] const GrassShape& shape() const { return shape_; }
  [[nodiscard]] const RatMatrix& matrix() const { return x_; }
  [[nodiscard]] const Rat& at(VarIndex v) const { return x_(v.p - 1, v.q - 1); }
  /// Coordinates in flat order (row-major coincides with flat indexing).
  [[nodiscard]] std::span<const Rat> values() const { return x_.entries(); }

  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;

private:
  GrassShape shape_;
  RatMatrix x_;
};

class GrassPoint {
public:
  GrassPoint(GrassShape shape, RatMatrix m) : shape_(shape), m_(std::move(m)) {
    if (m_.rows() != shape_.n || m_.cols() != shape_.k)
      throw std::invalid_argument("GrassPoint: expected an n x k matrix");
    if (rank(m_) != shape_.k) throw std::invalid_argument("GrassPoint: matrix does not have rank k");
  }

  [[nodiscard]] const GrassShape& shape() const { return shape_; }
  [[nodiscard]] const RatMatrix& matrix() const { return m_; }

  /// Same subspace iff the stacked n x 2k matrix still has rank k
  /// (equivalently, proportional Plücker vectors).
  [[nodiscard]] bool same_subspace(const GrassPoint& o) const {
    if (!(o.shape_ == shape_)) return false;
    RatMatrix both(shape_.n, 2 * shape_.k);
    for (int i = 0; i < shape_.n; ++i)
      for (int j = 0; j < shape_.k; ++j) {
        both(i, j) = m_(i, j);
        both(i, j + shape_.k) = o.m_(i, j);
      }
    return rank(both) == shape_.k;
  }

private:
  GrassShape shape_;
  RatMatrix m_;
};

/// (I_k ; X).
inline GrassPoint embed(const ChartPoint& x) {
  const GrassShape& s = x.shape();
  RatMatrix m(s.n, s.k);
  for (int i = 0; i < s.k; ++i) m(i, i) = Rat(1);
  for (int p = 0; p < s.rows(); ++p)
    for (int q = 0; q < s.k; ++q) m(s.k + p, q) = x.matrix()(p, q);
  return {s, std::move(m)};
}

/// Chart coordinate of a point: bottom * top^{-1}. ChartEscape when the top
/// k x k block is singular.
inline ChartPoint chart_coordinates(const GrassPoint& g) {
  const GrassShape& s = g.shape();
  auto top_inv = inverse(g.matrix().block(0, 0, s.k, s.k));
  if (!top_inv) throw ChartEscape("point lies outside the big cell");
  return {s, g.matrix().block(s.k, 0, s.rows(), s.k) * *top_inv};
}

/// g . M (left multiplication of the representative).
inline GrassPoint act(const GLElement& g, const GrassPoint& m) {
  return {m.shape(), g.matrix() * m.matrix()};
}

// ---------------------------------------------------------------------------
// Vector fields

/// Polynomial vector field on the chart: comps[flat(p,q)] is the coefficient of
/// d/dx_{pq}.
struct VectorField {
  GrassShape shape;
  std::vector<MPoly> comps;

  explicit VectorField(GrassShape s)
      : shape(s), comps(static_cast<std::size_t>(s.dim()), MPoly(s.dim())) {}

  [[nodiscard]] const MPoly& operator[](int flat) const { return comps.at(static_cast<std::size_t>(flat)); }
  MPoly& operator[](int flat) { return comps.at(static_cast<std::size_t>(flat)); }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Value at a point as an (n-k) x k matrix.
  [[nodiscard]] RatMatrix eval(const ChartPoint& x) const {
    RatMatrix out(shape.rows(), shape.cols());
    for (int f = 0; f < shape.dim(); ++f) {
      auto v = VarIndex::from_flat(f, shape);
      out(v.p - 1, v.q - 1) = (*this)[f].eval(x.values());
    }
    return out;
  }

  VectorField& operator+=(const VectorField& o) {
    for (std::size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
    return *this;
  }
  VectorField& operator*=(const Rat& s) {
    for (auto& c : comps) c *= s;
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator*(const Rat& s, VectorField a) { return a *= s; }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.shape == b.shape && a.comps == b.comps;
  }
};

/// Infinitesimal action of a gl_n element E on the chart:
/// the field whose value at X is C + DX - XA - XBX.
inline VectorField chi_field(const RatMatrix& e, const GrassShape& s) {
  if (e.rows() != s.n || e.cols() != s.n) throw std::invalid_argument("chi_field: E must be n x n");
  const int k = s.k;
  const int m = s.rows();
  const int nv = s.dim();
  auto flat = [k](int p, int q) { return p * k + q; }; // 0-based p, q
  VectorField out(s);
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      const Rat& c = e(a, b);
      if (c.is_zero()) continue;
      if (a >= k && b < k) {
        // C block: constant field d/dx_{a-k, b}.
        out[flat(a - k, b)] += MPoly::constant(nv, c);
      } else if (a >= k && b >= k) {
        // D block: (DX)_{pq} = D_{pr} x_{rq}.
        for (int q = 0; q < k; ++q) out[flat(a - k, q)] += c * MPoly::variable(nv, flat(b - k, q));
      } else if (a < k && b < k) {
        // A block: -(XA)_{pq} = -x_{pr} A_{rq}.
        for (int p = 0; p < m; ++p) out[flat(p, b)] += (-c) * MPoly::variable(nv, flat(p, a));
      } else {
        // B block: -(XBX)_{pq} = -x_{pr} B_{rs} x_{sq}.
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < k; ++q) out[flat(p, q)] += MPoly::quadratic(nv, -c, flat(p, a), flat(b - k, q));
      }
    }
  }
  return out;
}

/// Elementary matrix E_ij (1-based indices).
inline RatMatrix elementary(int n, int i, int j) {
  RatMatrix e(n, n);
  e(i - 1, j - 1) = Rat(1);
  return e;
}

inline VectorField chi_elementary(int i, int j, const GrassShape& s) {
  return chi_field(elementary(s.n, i, j), s);
}

// ---------------------------------------------------------------------------
// Chart maps

/// phi_g(X) = (C + DX)(A + BX)^{-1}; ChartEscape when A + BX is singular.
inline ChartPoint chart_map(const GLElement& g, const ChartPoint& x) {
  const GrassShape& s = x.shape();
  if (g.n() != s.n) throw std::invalid_argument("chart_map: size mismatch");
  const RatMatrix& X = x.matrix();
  auto denom = inverse(g.A(s.k) + g.B(s.k) * X);
  if (!denom) throw ChartEscape("g.X leaves the big cell (A + BX singular)");
  return {s, (g.C(s.k) + g.D(s.k) * X) * *denom};
}

/// Differential of phi_g at X: xi -> left * xi * right with
/// left = D - phi_g(X) B and right = (A + BX)^{-1}.
class ChartDifferential {
public:
  ChartDifferential(GrassShape s, RatMatrix left, RatMatrix right)
      : shape_(s), left_(std::move(left)), right_(std::move(right)) {}

  [[nodiscard]] RatMatrix apply(const RatMatrix& xi) const { return left_ * xi * right_; }

  /// Matrix of the map in flat coordinates: L[flat(p,q)][flat(r,s)] = left_pr * right_sq.
  [[nodiscard]] RatMatrix flat_matrix() const {
    const int d = shape_.dim();
    const int k = shape_.k;
    RatMatrix l(d, d);
    for (int p = 0; p < shape_.rows(); ++p)
      for (int q = 0; q < k; ++q)
        for (int r = 0; r < shape_.rows(); ++r) {
          if (left_(p, r).is_zero()) continue;
          for (int t = 0; t < k; ++t) l(p * k + q, r * k + t) = left_(p, r) * right_(t, q);
        }
    return l;
  }

private:
  GrassShape shape_;
  RatMatrix left_;
  RatMatrix right_;
};

inline ChartDifferential chart_differential(const GLElement& g, const ChartPoint& x) {
  const GrassShape& s = x.shape();
  if (g.n() != s.n) throw std::invalid_argument("chart_differential: size mismatch");
  const RatMatrix& X = x.matrix();
  auto right = inverse(g.A(s.k) + g.B(s.k) * X);
  if (!right) throw ChartEscape("g.X leaves the big cell (A + BX singular)");
  RatMatrix image = (g.C(s.k) + g.D(s.k) * X) * *right;
  return {s, g.D(s.k) - image * g.B(s.k), std::move(*right)};
}

// ---------------------------------------------------------------------------
// Plücker coordinates and fingerprints

/// Sorted 1-based k-subset of {1..n}.
using KSubset = std::vector<int>;

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<KSubset> k_subsets(int k, int n) {
  std::vector<KSubset> out;
  KSubset cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Image of a subset under a permutation, re-sorted.
inline KSubset apply(const Perm& w, const KSubset& s) {
  KSubset out;
  out.reserve(s.size());
  for (int i : s) out.push_back(w(i));
  std::sort(out.begin(), out.end());
  return out;
}

inline Rat maximal_minor(const RatMatrix& m, const KSubset& rows) {
  std::vector<int> idx;
  idx.reserve(rows.size());
  for (int r : rows) idx.push_back(r - 1);
  return determinant(m.select_rows(idx));
}

/// S -> det of the rows S of M.
inline std::map<KSubset, Rat> plucker(const GrassPoint& g) {
  std::map<KSubset, Rat> out;
  for (auto& s : k_subsets(g.shape().k, g.shape().n)) out.emplace(s, maximal_minor(g.matrix(), s));
  return out;
}

/// Matroid (bases = nonvanishing Plücker coordinates) together with the ranks
/// of all cyclic row intervals. cyclic_rank[i][j] (0-based) is the rank of
/// rows i+1, i+2, ..., j+1 taken mod n; [i][i-1 mod n] is the full interval.
struct Fingerprint {
  std::set<KSubset> matroid;
  std::vector<std::vector<int>> cyclic_rank;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

/// Rank of rows i..j (1-based, cyclic) of M.
inline int cyclic_interval_rank(const RatMatrix& m, int i, int j) {
  const int n = m.rows();
  std::vector<int> rows;
  for (int r = i;; r = r % n + 1) {
    rows.push_back(r - 1);
    if (r == j) break;
  }
  return rank(m.select_rows(rows));
}

inline Fingerprint fingerprint(const GrassPoint& g) {
  Fingerprint fp;
  for (auto& [s, v] : plucker(g))
    if (!v.is_zero()) fp.matroid.insert(s);
  const int n = g.shape().n;
  fp.cyclic_rank.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      fp.cyclic_rank[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          cyclic_interval_rank(g.matrix(), i, j);
  return fp;
}

} // namespace grpoisson
