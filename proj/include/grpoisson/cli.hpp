#pragma once

// Command dispatch for the grpoisson tool. Kept in the library so every
// command is testable without spawning a process.
//
// Exit codes: 0 all identities hold, 1 an identity failed, 2 bad input.

#include "chart.hpp"
#include "io.hpp"
#include "perm.hpp"
#include "poisson.hpp"
#include "sampling.hpp"
#include "strata.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace grpoisson {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { json, text };

struct RunConfig {
  std::string command;
  int k = 1;
  int n = 2;
  std::uint64_t seed = kDefaultSeed;
  int samples = 100;
  std::optional<std::string> point;
  Format format = Format::json;
};

struct RunResult {
  int exit_code = 0;
  Json report;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "verify-theorem", "verify-vzero", "verify-w0",  "verify-levi", "verify-jacobi", "verify-torus",
      "verify-group-ids", "push-check", "rank",       "strata-enumerate", "classify"};
  return names;
}

namespace detail {

inline Json offending(const Bivector& b) {
  auto at = b.first_nonzero();
  if (!at) return nullptr;
  auto [a, c] = *at;
  const auto& s = b.shape();
  return {{"a", a},
          {"b", c},
          {"pair", VarIndex::from_flat(a, s).name() + "^" + VarIndex::from_flat(c, s).name()},
          {"coefficient", b.upper(a, c).str(s)}};
}

/// Records an "expected zero" bivector in the report.
inline bool check_zero(Json& report, const std::string& key, const Bivector& b) {
  const bool ok = b.is_zero();
  report[key] = {{"nonzeroCoefficients", b.nonzero_count()}, {"firstOffending", offending(b)}};
  return ok;
}

struct PushStats {
  int accepted = 0;
  int raw = 0;
  int failures = 0;
  Json first_failure = nullptr;
};

/// Draws chart points until `samples` of them have phi_g(X) in the chart and
/// checks each. `make_g` may depend on the sample stream (random diagonals).
inline PushStats run_pushforward(const GrassShape& s, const Bivector& pi, int sign, int samples, std::uint64_t seed,
                                 std::uint64_t tag, const std::function<GLElement(Sampler&)>& make_g) {
  PushStats st;
  for (int i = 0; i < samples; ++i) {
    Sampler rng(seed ^ splitmix64(tag), static_cast<std::uint64_t>(i));
    while (true) {
      ChartPoint x = rng.chart_point(s);
      GLElement g = make_g(rng);
      ++st.raw;
      try {
        if (!pushforward_check(g, x, pi, sign)) {
          ++st.failures;
          if (st.first_failure.is_null()) st.first_failure = {{"g", to_json(g.matrix())}, {"point", to_json(x.matrix())}};
        }
      } catch (const ChartEscape&) {
        continue;
      }
      ++st.accepted;
      break;
    }
  }
  return st;
}

inline Json to_json(const PushStats& st) {
  return {{"accepted", st.accepted},
          {"rawDraws", st.raw},
          {"inChartFraction", Rat(st.accepted, st.raw).str()},
          {"failures", st.failures},
          {"firstFailure", st.first_failure}};
}

} // namespace detail

inline RunResult run(const RunConfig& cfg) {
  RunResult res;
  Json& r = res.report;
  r["command"] = cfg.command;
  r["k"] = cfg.k;
  r["n"] = cfg.n;
  r["seed"] = cfg.seed;
  r["samples"] = cfg.samples;
  r["toolVersion"] = kToolVersion;

  auto usage = [&](const std::string& msg) {
    r["pass"] = false;
    r["error"] = msg;
    res.exit_code = 2;
    return res;
  };

  GrassShape s;
  try {
    s = GrassShape(cfg.k, cfg.n);
  } catch (const std::invalid_argument& e) {
    return usage(e.what());
  }
  if (cfg.samples < 1) return usage("--samples must be at least 1");

  const auto& c = cfg.command;
  bool pass = true;
  try {
    if (c == "verify-theorem") {
      pass = detail::check_zero(r, "difference", ad_transform_pi(coxeter_element(s.n), s) - build_pi(s));
    } else if (c == "verify-vzero") {
      pass = detail::check_zero(r, "V", build_V(s));
    } else if (c == "verify-w0") {
      const Bivector pi = build_pi(s);
      const bool a = detail::check_zero(r, "w0", ad_transform_pi(longest_element(s.n), s) + pi);
      const bool b = detail::check_zero(r, "w0P", ad_transform_pi(longest_parabolic_element(s.k, s.n), s) + pi);
      pass = a && b;
    } else if (c == "verify-levi") {
      pass = detail::check_zero(r, "difference", build_levi_pi(s) - build_pi(s));
    } else if (c == "verify-jacobi") {
      const Trivector t = schouten_jacobi(build_pi(s));
      int nonzero = 0;
      for (const auto& e : t.entries()) nonzero += e.value.is_zero() ? 0 : 1;
      Json first = nullptr;
      if (const auto* e = t.first_nonzero())
        first = {{"a", e->a}, {"b", e->b}, {"c", e->c}, {"coefficient", e->value.str(s)}};
      r["jacobiator"] = {{"nonzeroCoefficients", nonzero}, {"firstOffending", first}};
      pass = nonzero == 0;
    } else if (c == "verify-torus") {
      const auto st = detail::run_pushforward(s, build_pi(s), 1, cfg.samples, cfg.seed, 3,
                                              [&](Sampler& rng) { return rng.diagonal(s.n); });
      r["diagonal"] = detail::to_json(st);
      pass = st.failures == 0;
    } else if (c == "verify-group-ids") {
      const auto [cox, w0, w0P] = special_elements(s.k, s.n);
      const bool root = w0P * w0 == cox.pow(s.k);
      const bool dihedral = w0 * cox * w0.inverse() == cox.inverse();
      const bool order = cox.pow(s.n) == Perm::identity(s.n);
      r["c"] = to_json(cox);
      r["w0"] = to_json(w0);
      r["w0P"] = to_json(w0P);
      r["w0P*w0"] = to_json(w0P * w0);
      r["c^k"] = to_json(cox.pow(s.k));
      r["identities"] = {{"w0P*w0 == c^k", root}, {"w0*c*w0^-1 == c^-1", dihedral}, {"c^n == e", order}};
      pass = root && dihedral && order;
    } else if (c == "push-check") {
      const Bivector pi = build_pi(s);
      const GLElement mc = perm_matrix(coxeter_element(s.n));
      const GLElement mw0 = perm_matrix(longest_element(s.n));
      const auto sc = detail::run_pushforward(s, pi, 1, cfg.samples, cfg.seed, 1, [&](Sampler&) { return mc; });
      const auto sw = detail::run_pushforward(s, pi, -1, cfg.samples, cfg.seed, 2, [&](Sampler&) { return mw0; });
      const auto sd = detail::run_pushforward(s, pi, 1, cfg.samples, cfg.seed, 3,
                                              [&](Sampler& rng) { return rng.diagonal(s.n); });
      r["c"] = detail::to_json(sc);
      r["w0"] = detail::to_json(sw);
      r["diagonal"] = detail::to_json(sd);
      pass = sc.failures == 0 && sw.failures == 0 && sd.failures == 0;
    } else if (c == "rank") {
      if (!cfg.point) return usage("rank needs --point");
      const AnyPoint p = load_point(*cfg.point, s);
      int rk = 0;
      if (const auto* x = std::get_if<ChartPoint>(&p)) {
        rk = rank_at(build_pi(s), *x);
        r["point"] = point_json(*x);
      } else {
        const auto& g = std::get<GrassPoint>(p);
        rk = LeafRank(s)(g);
        r["point"] = point_json(g);
      }
      r["rank"] = rk;
    } else if (c == "strata-enumerate") {
      if (s.n > 8) return usage("strata-enumerate supports n <= 8");
      const StratumCensus census = enumerate_labels(s);
      r.update(to_json(census));
      Json labels = Json::array();
      for (const auto& l : census.labels) labels.push_back({{"v", to_json(l.v)}, {"w", to_json(l.w)}, {"dim", l.dim}});
      r["labels"] = labels;
    } else if (c == "classify") {
      if (s.n > 8) return usage("classify supports n <= 8");
      r.update(to_json(enumerate_labels(s)));
      try {
        r.update(to_json(classify(sample_points(s, cfg.samples, cfg.seed), s)));
      } catch (const RankMismatch& e) {
        r["violation"] = e.what();
        pass = false;
      }
    } else {
      return usage("unknown command '" + c + "'");
    }
  } catch (const InputError& e) {
    return usage(e.what());
  }

  r["pass"] = pass;
  res.exit_code = pass ? 0 : 1;
  return res;
}

/// Text rendering: one "key: value" line per top-level field.
inline void render(const RunResult& res, Format f, std::ostream& os) {
  if (f == Format::json) {
    os << res.report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : res.report.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

} // namespace grpoisson
