#pragma once

// Sparse multivariate polynomials over Rat.

#include "rational.hpp"
#include "shape.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grpoisson {

using Exponents = std::vector<std::uint16_t>;

/// Terms are stored in a map keyed by exponent vector; std::map keeps them in
/// ascending lexicographic order, which is the canonical order for printing,
/// serialization and comparison. No stored coefficient is ever zero.
class MPoly {
public:
  using TermMap = std::map<Exponents, Rat>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MPoly: negative variable count");
  }

  static MPoly constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  static MPoly variable(int nvars, int var) {
    MPoly p(nvars);
    p.add_term(p.unit_exponent(var), Rat(1));
    return p;
  }

  /// c * x_a * x_b (a may equal b).
  static MPoly quadratic(int nvars, const Rat& c, int a, int b) {
    MPoly p(nvars);
    Exponents e = p.unit_exponent(a);
    e[static_cast<std::size_t>(b)] += 1;
    p.add_term(std::move(e), c);
    return p;
  }

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }

  /// Accumulates c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rat& c) {
    if (e.size() != static_cast<std::size_t>(nvars_))
      throw std::invalid_argument("MPoly: exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }

  [[nodiscard]] bool is_homogeneous(int deg) const {
    for (const auto& [e, c] : terms_)
      if (total(e) != deg) return false;
    return true;
  }

  MPoly& operator+=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const Rat& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  friend MPoly operator-(MPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly out(a.nvars_);
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  /// Formal partial derivative with respect to variable `var` (flat index).
  [[nodiscard]] MPoly partial(int var) const {
    check_var(var);
    MPoly out(nvars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents d = e;
      d[v] -= 1;
      out.add_term(d, c * Rat(static_cast<long>(e[v])));
    }
    return out;
  }
  [[nodiscard]] MPoly partial(VarIndex v, const GrassShape& s) const { return partial(v.flat(s)); }

  [[nodiscard]] Rat eval(std::span<const Rat> values) const {
    if (values.size() != static_cast<std::size_t>(nvars_))
      throw std::invalid_argument("MPoly::eval: wrong number of values");
    Rat sum;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint16_t j = 0; j < e[i]; ++j) t *= values[i];
      sum += t;
    }
    return sum;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, highest term (in canonical order) first, e.g.
  /// "-x11*x21 + 2". `name` maps a flat variable index to its printed name.
  [[nodiscard]] std::string str(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rat mag = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += name(static_cast<int>(i));
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += mag.str();
      } else {
        if (mag != Rat(1)) out += mag.str() + "*";
        out += mono;
      }
    }
    return out;
  }

  [[nodiscard]] std::string str(const GrassShape& s) const {
    return str([&](int v) { return VarIndex::from_flat(v, s).name(); });
  }

private:
  static int total(const Exponents& e) {
    int t = 0;
    for (auto x : e) t += x;
    return t;
  }
  void check_var(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("MPoly: variable index out of range");
  }
  void check_compatible(const MPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly: variable sets differ");
  }
  [[nodiscard]] Exponents unit_exponent(int var) const {
    check_var(var);
    Exponents e(static_cast<std::size_t>(nvars_), 0);
    e[static_cast<std::size_t>(var)] = 1;
    return e;
  }

  int nvars_ = 0;
  TermMap terms_;
};

} // namespace grpoisson
