#pragma once

// Permutations of {1..n}.
//
// Conventions used throughout the library:
//   composition   (u * v)(i) = u(v(i))
//   matrices      M_w e_i = e_{w(i)}, so M_u M_v = M_{u*v}
//                 and M_w E_ij M_w^{-1} = E_{w(i), w(j)}

#include "gl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace grpoisson {

class Perm {
public:
  Perm() = default;

  /// One-line notation, 1-based: images[i-1] = w(i).
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  [[nodiscard]] int size() const { return static_cast<int>(img_.size()); }
  [[nodiscard]] int operator()(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] const std::vector<int>& one_line() const { return img_; }

  friend Perm operator*(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw std::invalid_argument("composing permutations of different size");
    std::vector<int> w(v.img_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = u(v.img_[i]);
    return Perm(std::move(w));
  }

  [[nodiscard]] Perm inverse() const {
    std::vector<int> w(img_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Perm(std::move(w));
  }

  [[nodiscard]] Perm pow(long m) const {
    Perm base = m < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(m < 0 ? -m : m);
    Perm acc = identity(size());
    while (e) {
      if (e & 1UL) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Number of inversions.
  [[nodiscard]] int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
      for (std::size_t j = i + 1; j < img_.size(); ++j)
        if (img_[i] > img_[j]) ++inv;
    return inv;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
    return s + ")";
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> img_;
};

/// Simple transposition s_i = (i i+1) in S_n.
inline Perm simple_reflection(int i, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Perm(std::move(v));
}

/// All of S_n in lexicographic one-line order.
inline std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Bruhat order via the rank-matrix criterion:
/// v <= w iff #{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j} for all i, j.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  const int n = v.size();
  if (w.size() != n) throw std::invalid_argument("bruhat_leq: size mismatch");
  // Running column counts: cv[j] = #{a <= i : v(a) >= j}.
  std::vector<int> cv(static_cast<std::size_t>(n + 2), 0), cw(cv);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= v(i); ++j) ++cv[static_cast<std::size_t>(j)];
    for (int j = 1; j <= w(i); ++j) ++cw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (cv[static_cast<std::size_t>(j)] > cw[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

/// The Coxeter element c = (1 2 ... n): c(i) = i+1, c(n) = 1.
inline Perm coxeter_element(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return Perm(std::move(v));
}

/// w0(i) = n+1-i.
inline Perm longest_element(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return Perm(std::move(v));
}

/// Longest element of S_k x S_{n-k}: reverses {1..k} and {k+1..n} separately.
inline Perm longest_parabolic_element(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= k; ++i) v[static_cast<std::size_t>(i - 1)] = k + 1 - i;
  for (int i = k + 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + k + 1 - i;
  return Perm(std::move(v));
}

struct SpecialElements {
  Perm c;
  Perm w0;
  Perm w0P;
};

inline SpecialElements special_elements(int k, int n) {
  return {coxeter_element(n), longest_element(n), longest_parabolic_element(k, n)};
}

/// u lies in S_k x S_{n-k} iff it maps {1..k} into itself.
inline bool in_parabolic_subgroup(const Perm& u, int k) {
  for (int i = 1; i <= k; ++i)
    if (u(i) > k) return false;
  return true;
}

/// Maximal-length representatives of the left cosets w (S_k x S_{n-k}), one per
/// coset, sorted by one-line notation. Built as (minimal rep) * w0^P, where the
/// minimal reps are the permutations increasing on {1..k} and on {k+1..n}.
inline std::vector<Perm> max_coset_reps(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
  const Perm w0P = longest_parabolic_element(k, n);
  std::vector<Perm> reps;
  // Choose the image set of {1..k}; minimal rep lists it increasingly, then the
  // complement increasingly.
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> img;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) img.push_back(i + 1);
    for (int i = 0; i < n; ++i)
      if (!pick[static_cast<std::size_t>(i)]) img.push_back(i + 1);
    reps.push_back(Perm(std::move(img)) * w0P);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(reps.begin(), reps.end());
  return reps;
}

/// Permutation matrix with a 1 at (w(i), i), 0-based storage.
inline GLElement perm_matrix(const Perm& w) {
  RatMatrix m(w.size(), w.size());
  for (int i = 1; i <= w.size(); ++i) m(w(i) - 1, i - 1) = Rat(1);
  return GLElement(std::move(m));
}

} // namespace grpoisson
