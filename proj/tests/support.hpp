#pragma once

// Test-only oracles. Nothing here calls into chi_field or chart_differential;
// derivatives are taken by running the group action over dual numbers.

#include <grpoisson/grpoisson.hpp>

#include <stdexcept>
#include <vector>

namespace grpoisson::testing {

/// a + b*eps with eps^2 = 0.
struct Dual {
  Rat a, b;
  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  friend Dual operator/(const Dual& x, const Dual& y) {
    // (a + b e)/(c + d e) = a/c + (b c - a d)/c^2 e
    return {x.a / y.a, (x.b * y.a - x.a * y.b) / (y.a * y.a)};
  }
};

using DualMatrix = std::vector<std::vector<Dual>>;

inline DualMatrix dual_mul(const DualMatrix& x, const DualMatrix& y) {
  DualMatrix out(x.size(), std::vector<Dual>(y.front().size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.front().size(); ++j)
      for (std::size_t l = 0; l < y.size(); ++l) out[i][j] = out[i][j] + x[i][l] * y[l][j];
  return out;
}

/// Solves Y * top = bottom for Y (right division) by Gauss-Jordan on top^T.
inline DualMatrix dual_right_divide(const DualMatrix& bottom, DualMatrix top) {
  const std::size_t k = top.size();
  // Work with transposes: top^T Y^T = bottom^T.
  DualMatrix a(k, std::vector<Dual>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = top[j][i];
  DualMatrix rhs(k, std::vector<Dual>(bottom.size()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < bottom.size(); ++j) rhs[i][j] = bottom[j][i];
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c].a.is_zero()) ++p;
    if (p == k) throw std::runtime_error("dual_right_divide: singular");
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    const Dual piv = a[c][c];
    for (auto& x : a[c]) x = x / piv;
    for (auto& x : rhs[c]) x = x / piv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const Dual f = a[r][c];
      for (std::size_t j = 0; j < k; ++j) a[r][j] = a[r][j] - f * a[c][j];
      for (std::size_t j = 0; j < rhs[r].size(); ++j) rhs[r][j] = rhs[r][j] - f * rhs[c][j];
    }
  }
  DualMatrix y(bottom.size(), std::vector<Dual>(k));
  for (std::size_t i = 0; i < bottom.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) y[i][j] = rhs[j][i];
  return y;
}

/// Chart coordinate of g.(I;X) computed over dual numbers from the full n x k
/// representative: bottom rows divided on the right by the top k rows.
inline DualMatrix dual_chart_image(const DualMatrix& g, const DualMatrix& x, int k) {
  const std::size_t n = g.size();
  DualMatrix rep(n, std::vector<Dual>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) rep[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = {Rat(1), Rat(0)};
  for (std::size_t p = 0; p < x.size(); ++p)
    for (int q = 0; q < k; ++q) rep[static_cast<std::size_t>(k) + p][static_cast<std::size_t>(q)] = x[p][static_cast<std::size_t>(q)];
  DualMatrix img = dual_mul(g, rep);
  DualMatrix top(img.begin(), img.begin() + k);
  DualMatrix bottom(img.begin() + k, img.end());
  return dual_right_divide(bottom, top);
}

/// d/ds at s=0 of the chart coordinate of (I + sE).(I;X), which equals the
/// derivative along exp(sE) since the two curves agree to first order.
inline RatMatrix curve_velocity(const RatMatrix& e, const ChartPoint& x) {
  const int n = e.rows();
  const int k = x.shape().k;
  DualMatrix g(static_cast<std::size_t>(n), std::vector<Dual>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {Rat(i == j ? 1 : 0), e(i, j)};
  DualMatrix xd(static_cast<std::size_t>(x.shape().rows()), std::vector<Dual>(static_cast<std::size_t>(k)));
  for (int p = 0; p < x.shape().rows(); ++p)
    for (int q = 0; q < k; ++q) xd[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = {x.matrix()(p, q), Rat(0)};
  DualMatrix y = dual_chart_image(g, xd, k);
  RatMatrix out(x.shape().rows(), k);
  for (int p = 0; p < x.shape().rows(); ++p)
    for (int q = 0; q < k; ++q) out(p, q) = y[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].b;
  return out;
}

/// d/dt at t=0 of the chart coordinate of g.(I; X + t xi).
inline RatMatrix directional_derivative(const GLElement& g, const ChartPoint& x, const RatMatrix& xi) {
  const int n = g.n();
  const int k = x.shape().k;
  DualMatrix gd(static_cast<std::size_t>(n), std::vector<Dual>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {g.matrix()(i, j), Rat(0)};
  DualMatrix xd(static_cast<std::size_t>(x.shape().rows()), std::vector<Dual>(static_cast<std::size_t>(k)));
  for (int p = 0; p < x.shape().rows(); ++p)
    for (int q = 0; q < k; ++q) xd[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = {x.matrix()(p, q), xi(p, q)};
  DualMatrix y = dual_chart_image(gd, xd, k);
  RatMatrix out(x.shape().rows(), k);
  for (int p = 0; p < x.shape().rows(); ++p)
    for (int q = 0; q < k; ++q) out(p, q) = y[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].b;
  return out;
}

/// Pointwise value of -sum_{i<j} chi(E_ij) ^ chi(E_ji) at X, with each chi
/// value taken from curve_velocity. Returned in flat coordinates.
inline RatMatrix pi_at_by_curves(const ChartPoint& x) {
  const GrassShape& s = x.shape();
  const int d = s.dim();
  RatMatrix out(d, d);
  for (int i = 1; i <= s.n; ++i)
    for (int j = i + 1; j <= s.n; ++j) {
      const RatMatrix u = curve_velocity(elementary(s.n, i, j), x);
      const RatMatrix v = curve_velocity(elementary(s.n, j, i), x);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const auto va = VarIndex::from_flat(a, s), vb = VarIndex::from_flat(b, s);
          out(a, b) -= u(va.p - 1, va.q - 1) * v(vb.p - 1, vb.q - 1) - u(vb.p - 1, vb.q - 1) * v(va.p - 1, va.q - 1);
        }
    }
  return out;
}

/// Random polynomial with up to `terms` terms of degree <= maxdeg.
inline MPoly random_poly(Sampler& rng, int nvars, int terms, int maxdeg) {
  MPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    const int deg = rng.uniform(0, maxdeg);
    for (int i = 0; i < deg; ++i) ++e[static_cast<std::size_t>(rng.uniform(0, nvars - 1))];
    p.add_term(e, rng.small_rat());
  }
  return p;
}

inline Perm random_perm(Sampler& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.uniform(0, i))]);
  return Perm(std::move(v));
}

inline ChartPoint chart_point(const GrassShape& s, const std::vector<std::vector<Rat>>& rows) {
  return {s, RatMatrix::from_rows(rows)};
}

inline GrassPoint grass_point(const GrassShape& s, const std::vector<std::vector<Rat>>& rows) {
  return {s, RatMatrix::from_rows(rows)};
}

} // namespace grpoisson::testing
