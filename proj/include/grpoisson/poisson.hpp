#pragma once

// Bivector fields on the big chart and the standard Poisson structure
//
//   pi_{k,n} = - sum_{i<j} chi(E_ij) ^ chi(E_ji)
//
// together with its Levi and Ad_w variants, the Jacobi (Schouten) check, and
// pointwise evaluation, rank and pushforward.

#include "chart.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "perm.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace grpoisson {

/// Antisymmetric matrix of polynomials over the chart coordinates. Only the
/// strict upper triangle is stored.
class Bivector {
public:
  explicit Bivector(GrassShape s)
      : shape_(s), upper_(static_cast<std::size_t>(s.dim() * (s.dim() - 1) / 2), MPoly(s.dim())) {}

  [[nodiscard]] const GrassShape& shape() const { return shape_; }
  [[nodiscard]] int dim() const { return shape_.dim(); }

  /// coeff[a][b] with the antisymmetric sign applied.
  [[nodiscard]] MPoly coeff(int a, int b) const {
    if (a == b) return MPoly(dim());
    return a < b ? upper_[slot(a, b)] : -upper_[slot(b, a)];
  }

  /// Stored entry for a < b.
  [[nodiscard]] const MPoly& upper(int a, int b) const { return upper_[slot(a, b)]; }

  /// Adds p to coeff[a][b] (and -p to coeff[b][a]).
  void add(int a, int b, const MPoly& p) {
    if (a == b) throw std::invalid_argument("Bivector: diagonal entries are zero");
    if (a < b)
      upper_[slot(a, b)] += p;
    else
      upper_[slot(b, a)] -= p;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& p : upper_)
      if (!p.is_zero()) return false;
    return true;
  }

  [[nodiscard]] int nonzero_count() const {
    int c = 0;
    for (const auto& p : upper_) c += p.is_zero() ? 0 : 1;
    return c;
  }

  /// First (a, b) with a < b and nonzero coefficient, in row-major order.
  [[nodiscard]] std::optional<std::pair<int, int>> first_nonzero() const {
    for (int a = 0; a < dim(); ++a)
      for (int b = a + 1; b < dim(); ++b)
        if (!upper(a, b).is_zero()) return std::pair{a, b};
    return std::nullopt;
  }

  Bivector& operator+=(const Bivector& o) {
    check(o);
    for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] += o.upper_[i];
    return *this;
  }
  Bivector& operator-=(const Bivector& o) {
    check(o);
    for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] -= o.upper_[i];
    return *this;
  }
  friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
  friend Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
  friend Bivector operator-(Bivector a) {
    for (auto& p : a.upper_) p = -p;
    return a;
  }
  friend bool operator==(const Bivector& a, const Bivector& b) {
    return a.shape_ == b.shape_ && a.upper_ == b.upper_;
  }

private:
  [[nodiscard]] std::size_t slot(int a, int b) const {
    // Row-major index into the strict upper triangle.
    const int d = dim();
    return static_cast<std::size_t>(a * d - a * (a + 1) / 2 + (b - a - 1));
  }
  void check(const Bivector& o) const {
    if (!(o.shape_ == shape_)) throw std::invalid_argument("Bivector: shape mismatch");
  }

  GrassShape shape_;
  std::vector<MPoly> upper_;
};

/// coeff[a][b] = u[a] v[b] - u[b] v[a].
inline Bivector wedge(const VectorField& u, const VectorField& v) {
  if (!(u.shape == v.shape)) throw std::invalid_argument("wedge: shape mismatch");
  Bivector out(u.shape);
  const int d = u.shape.dim();
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      if ((u[a].is_zero() || v[b].is_zero()) && (u[b].is_zero() || v[a].is_zero())) continue;
      out.add(a, b, u[a] * v[b] - u[b] * v[a]);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Root pairs: (i, j) with i < j stands for e = E_ij, f = E_ji.

using RootPair = std::pair<int, int>;

inline std::vector<RootPair> positive_roots(int n) {
  std::vector<RootPair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

/// Roots of the Levi factor S_k x S_{n-k}: both indices on the same side of k.
inline std::vector<RootPair> levi_roots(int k, int n) {
  std::vector<RootPair> out;
  for (auto [i, j] : positive_roots(n))
    if (j <= k || i >= k + 1) out.emplace_back(i, j);
  return out;
}

/// -sum over pairs of chi(E_{w(i)w(j)}) ^ chi(E_{w(j)w(i)}).
inline Bivector r_matrix_bivector(const std::vector<RootPair>& pairs, const Perm& w, const GrassShape& s) {
  if (w.size() != s.n) throw std::invalid_argument("permutation size does not match n");
  Bivector sum(s);
  for (auto [i, j] : pairs) sum += wedge(chi_elementary(w(i), w(j), s), chi_elementary(w(j), w(i), s));
  return -sum;
}

inline Bivector build_pi(const GrassShape& s) {
  return r_matrix_bivector(positive_roots(s.n), Perm::identity(s.n), s);
}

inline Bivector build_levi_pi(const GrassShape& s) {
  return r_matrix_bivector(levi_roots(s.k, s.n), Perm::identity(s.n), s);
}

/// The bivector obtained by replacing every E_ij in pi by Ad_w E_ij = E_{w(i)w(j)};
/// this is the pushforward of pi under the permutation matrix M_w.
inline Bivector ad_transform_pi(const Perm& w, const GrassShape& s) {
  return r_matrix_bivector(positive_roots(s.n), w, s);
}

/// V = sum_{i=2}^n chi(E_1i) ^ chi(E_i1).
inline Bivector build_V(const GrassShape& s) {
  Bivector v(s);
  for (int i = 2; i <= s.n; ++i) v += wedge(chi_elementary(1, i, s), chi_elementary(i, 1, s));
  return v;
}

// ---------------------------------------------------------------------------
// Jacobi identity

/// Fully antisymmetric 3-tensor of polynomials; only a < b < c is stored.
class Trivector {
public:
  explicit Trivector(int dim) : dim_(dim) {
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b)
        for (int c = b + 1; c < dim; ++c) entries_.push_back({a, b, c, MPoly(dim)});
  }

  struct Entry {
    int a, b, c;
    MPoly value;
  };

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Entry>& entries() { return entries_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.value.is_zero()) return false;
    return true;
  }

  [[nodiscard]] const Entry* first_nonzero() const {
    for (const auto& e : entries_)
      if (!e.value.is_zero()) return &e;
    return nullptr;
  }

private:
  int dim_;
  std::vector<Entry> entries_;
};

/// T[a][b][c] = sum_l ( pi[l][a] d_l pi[b][c] + pi[l][b] d_l pi[c][a] + pi[l][c] d_l pi[a][b] ).
/// pi is Poisson iff T vanishes identically.
inline Trivector schouten_jacobi(const Bivector& pi) {
  const int d = pi.dim();
  // dpi[l][a][b] for a < b.
  std::vector<std::vector<std::vector<MPoly>>> dpi(
      static_cast<std::size_t>(d),
      std::vector<std::vector<MPoly>>(static_cast<std::size_t>(d), std::vector<MPoly>(static_cast<std::size_t>(d), MPoly(d))));
  for (int l = 0; l < d; ++l)
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        MPoly p = pi.upper(a, b).partial(l);
        dpi[static_cast<std::size_t>(l)][static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -p;
        dpi[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(p);
      }
  auto D = [&](int l, int a, int b) -> const MPoly& {
    return dpi[static_cast<std::size_t>(l)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };

  Trivector t(d);
  for (auto& e : t.entries()) {
    for (int l = 0; l < d; ++l) {
      MPoly pla = pi.coeff(l, e.a), plb = pi.coeff(l, e.b), plc = pi.coeff(l, e.c);
      if (!pla.is_zero() && !D(l, e.b, e.c).is_zero()) e.value += pla * D(l, e.b, e.c);
      if (!plb.is_zero() && !D(l, e.c, e.a).is_zero()) e.value += plb * D(l, e.c, e.a);
      if (!plc.is_zero() && !D(l, e.a, e.b).is_zero()) e.value += plc * D(l, e.a, e.b);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Pointwise

inline RatMatrix eval_bivector(const Bivector& pi, const ChartPoint& x) {
  if (!(x.shape() == pi.shape())) throw std::invalid_argument("eval_bivector: shape mismatch");
  const int d = pi.dim();
  RatMatrix m(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      Rat v = pi.upper(a, b).eval(x.values());
      m(b, a) = -v;
      m(a, b) = std::move(v);
    }
  return m;
}

/// Rank of pi at X over Q (the dimension of the symplectic leaf through X).
inline int rank_at(const Bivector& pi, const ChartPoint& x) { return rank(eval_bivector(pi, x)); }

/// pi(phi_g(X)) == sign * L pi(X) L^T, L the flat matrix of d(phi_g) at X.
/// ChartEscape propagates when phi_g(X) is undefined.
inline bool pushforward_check(const GLElement& g, const ChartPoint& x, const Bivector& pi, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("pushforward_check: sign must be +1 or -1");
  ChartPoint y = chart_map(g, x);
  RatMatrix l = chart_differential(g, x).flat_matrix();
  RatMatrix pushed = l * eval_bivector(pi, x) * l.transpose();
  if (sign < 0) pushed = -pushed;
  return eval_bivector(pi, y) == pushed;
}

} // namespace grpoisson
