#pragma once

// Seeded generation of small-height rational points and group elements.
// Every item i of a batch is drawn from its own stream derived from
// (seed, i), so a batch is reproducible no matter how it is partitioned.

#include "chart.hpp"
#include "gl.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace grpoisson {

inline constexpr std::uint64_t kDefaultSeed = 20080917;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : eng_(splitmix64(seed)) {}
  Sampler(std::uint64_t seed, std::uint64_t stream) : eng_(splitmix64(seed ^ splitmix64(stream + 1))) {}

  /// Uniform integer in [lo, hi]. Rejection sampling on the raw engine output;
  /// std::uniform_int_distribution is implementation-defined.
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return lo + static_cast<int>(r % span);
  }

  bool coin(int num, int den) { return uniform(0, den - 1) < num; }

  /// p/q with p in [-9, 9], q in [1, 9].
  Rat small_rat() {
    const int p = uniform(-9, 9);
    const int q = uniform(1, 9);
    return {p, q};
  }

  Rat nonzero_rat() {
    int p = 0;
    while (p == 0) p = uniform(-9, 9);
    return {p, uniform(1, 9)};
  }

  RatMatrix matrix(int rows, int cols) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = small_rat();
    return m;
  }

  ChartPoint chart_point(const GrassShape& s) { return {s, matrix(s.rows(), s.cols())}; }

  GLElement diagonal(int n) {
    std::vector<Rat> t;
    for (int i = 0; i < n; ++i) t.push_back(nonzero_rat());
    return GLElement::diagonal(t);
  }

  GrassPoint generic_point(const GrassShape& s) {
    while (true) {
      RatMatrix m = matrix(s.n, s.k);
      if (rank(m) == s.k) return {s, std::move(m)};
    }
  }

  /// A point with a random zero pattern (entry density 1/4, 1/2 or 3/4) and,
  /// sometimes, one row replaced by a multiple of another. These reach the
  /// lower-dimensional strata that generic sampling never sees.
  GrassPoint structured_point(const GrassShape& s) {
    while (true) {
      const int keep = uniform(1, 3);
      RatMatrix m(s.n, s.k);
      for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.k; ++j)
          if (coin(keep, 4)) m(i, j) = nonzero_rat();
      if (coin(1, 3)) {
        const int from = uniform(0, s.n - 1);
        const int to = uniform(0, s.n - 1);
        const Rat f = nonzero_rat();
        if (from != to)
          for (int j = 0; j < s.k; ++j) m(to, j) = f * m(from, j);
      }
      if (rank(m) == s.k) return {s, std::move(m)};
    }
  }

private:
  std::mt19937_64 eng_;
};

/// Even indices generic, odd indices structured.
inline std::vector<GrassPoint> sample_points(const GrassShape& s, int count, std::uint64_t seed) {
  std::vector<GrassPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Sampler rng(seed, static_cast<std::uint64_t>(i));
    out.push_back(i % 2 == 0 ? rng.generic_point(s) : rng.structured_point(s));
  }
  return out;
}

} // namespace grpoisson
