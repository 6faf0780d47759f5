#pragma once

// Lusztig strata of Gr(k, n): the (v, w) label census, classification of
// sampled points by fingerprint, and the cyclic action of c on fingerprints.
//
// Two points lie in the same stratum iff their cyclic interval ranks agree;
// the matroid refines this (it determines the interval ranks but can split a
// stratum), so classification is reported at both granularities.

#include "chart.hpp"
#include "perm.hpp"
#include "poisson.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace grpoisson {

struct StratumLabel {
  Perm v;
  Perm w;
  int dim = 0;
};

struct StratumCensus {
  GrassShape shape;
  std::vector<StratumLabel> labels;
  std::map<int, int> count_by_dim;
};

/// All (v, w) with v a maximal coset representative and v <= w.
/// Enumerates S_n, so n is capped at 8.
inline StratumCensus enumerate_labels(const GrassShape& s) {
  if (s.n > 8) throw std::invalid_argument("enumerate_labels: n > 8 is not supported");
  StratumCensus census{s, {}, {}};
  const auto reps = max_coset_reps(s.k, s.n);
  const auto perms = all_perms(s.n);
  for (const auto& v : reps) {
    const int lv = v.length();
    for (const auto& w : perms) {
      if (!bruhat_leq(v, w)) continue;
      const int d = w.length() - lv;
      census.labels.push_back({v, w, d});
      ++census.count_by_dim[d];
    }
  }
  return census;
}

// ---------------------------------------------------------------------------

/// Lexicographically first basis of the point's matroid.
inline KSubset first_basis(const GrassPoint& g) {
  for (auto& s : k_subsets(g.shape().k, g.shape().n))
    if (!maximal_minor(g.matrix(), s).is_zero()) return s;
  throw std::logic_error("rank-k point without a basis");
}

/// Permutation sending the (sorted) subset S to 1..k and its complement, in
/// order, to k+1..n. M_w moves the rows S of a point to the top.
inline Perm moving_to_top(const KSubset& basis, int n) {
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  int next = 1;
  for (int r : basis) img[static_cast<std::size_t>(r - 1)] = next++;
  for (int r = 1; r <= n; ++r)
    if (img[static_cast<std::size_t>(r - 1)] == 0) img[static_cast<std::size_t>(r - 1)] = next++;
  return Perm(std::move(img));
}

/// Rank of pi at an arbitrary point of Gr(k, n). A point off the big cell is
/// moved into it by a permutation matrix M_w, and the rank is read off the
/// pushed-forward bivector Ad_w pi there (pushforward preserves rank).
class LeafRank {
public:
  explicit LeafRank(GrassShape s) : shape_(s) {}

  int operator()(const GrassPoint& g) {
    const Perm w = moving_to_top(first_basis(g), shape_.n);
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, ad_transform_pi(w, shape_)).first;
    return rank_at(it->second, chart_coordinates(act(perm_matrix(w), g)));
  }

private:
  GrassShape shape_;
  std::map<Perm, Bivector> cache_;
};

struct RankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatroidClass {
  std::set<KSubset> matroid;
  int count = 0;
  int rank = 0;
};

struct StratumClass {
  std::vector<std::vector<int>> cyclic_rank;
  int count = 0;
  int rank = 0;
  int matroids = 0; // distinct matroids seen inside the stratum
};

struct Classification {
  GrassShape shape;
  std::vector<MatroidClass> classes;  // sorted by matroid
  std::vector<StratumClass> strata;   // sorted by cyclic rank
};

/// Groups points by fingerprint and records the rank of pi per group.
/// Throws RankMismatch if two points in the same matroid class or the same
/// stratum have different rank.
inline Classification classify(const std::vector<GrassPoint>& points, const GrassShape& s) {
  LeafRank leaf_rank(s);
  std::map<std::set<KSubset>, MatroidClass> by_matroid;
  std::map<std::vector<std::vector<int>>, StratumClass> by_stratum;
  std::map<std::vector<std::vector<int>>, std::set<std::set<KSubset>>> matroids_in;

  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& g = points[i];
    if (!(g.shape() == s)) throw std::invalid_argument("classify: point has wrong shape");
    Fingerprint fp = fingerprint(g);
    const int r = leaf_rank(g);

    auto [mc, new_m] = by_matroid.try_emplace(fp.matroid, MatroidClass{fp.matroid, 0, r});
    if (mc->second.rank != r)
      throw RankMismatch("rank " + std::to_string(r) + " at point " + std::to_string(i) +
                         " differs from rank " + std::to_string(mc->second.rank) + " of its matroid class");
    ++mc->second.count;

    auto [sc, new_s] = by_stratum.try_emplace(fp.cyclic_rank, StratumClass{fp.cyclic_rank, 0, r, 0});
    if (sc->second.rank != r)
      throw RankMismatch("rank " + std::to_string(r) + " at point " + std::to_string(i) +
                         " differs from rank " + std::to_string(sc->second.rank) + " of its stratum");
    ++sc->second.count;
    matroids_in[fp.cyclic_rank].insert(fp.matroid);
  }

  Classification out{s, {}, {}};
  for (auto& [key, c] : by_matroid) out.classes.push_back(c);
  for (auto& [key, c] : by_stratum) {
    c.matroids = static_cast<int>(matroids_in[key].size());
    out.strata.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------

/// The fingerprint c^m.M must have when M has fingerprint fp: bases move by
/// c^m, and the interval starting at row i moves to start at row i+m.
inline Fingerprint rotate_fingerprint(const Fingerprint& fp, int n, int m) {
  const Perm cm = coxeter_element(n).pow(m);
  Fingerprint out;
  for (const auto& s : fp.matroid) out.matroid.insert(apply(cm, s));
  out.cyclic_rank = fp.cyclic_rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.cyclic_rank[static_cast<std::size_t>(cm(i + 1) - 1)][static_cast<std::size_t>(cm(j + 1) - 1)] =
          fp.cyclic_rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

/// Index of the first point whose c-image has the wrong fingerprint.
inline std::optional<std::size_t> first_c_action_failure(const std::vector<GrassPoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& g = points[i];
    const int n = g.shape().n;
    const GrassPoint moved = act(perm_matrix(coxeter_element(n)), g);
    if (!(fingerprint(moved) == rotate_fingerprint(fingerprint(g), n, 1))) return i;
  }
  return std::nullopt;
}

inline bool c_action_on_fingerprints(const std::vector<GrassPoint>& points) {
  return !first_c_action_failure(points).has_value();
}

} // namespace grpoisson
