#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace grpoisson;
using namespace grpoisson::testing;

namespace {

std::multiset<int> dims(const StratumCensus& c) {
  std::multiset<int> out;
  for (const auto& l : c.labels) out.insert(l.dim);
  return out;
}

} // namespace

TEST(Census, Gr13) {
  const auto census = enumerate_labels(GrassShape(1, 3));
  EXPECT_EQ(census.labels.size(), 7u);
  EXPECT_EQ(dims(census), (std::multiset<int>{0, 0, 0, 1, 1, 1, 2}));
  EXPECT_EQ(census.count_by_dim, (std::map<int, int>{{0, 3}, {1, 3}, {2, 1}}));
}

// Cross-check for Gr(1,3): supports of nonzero vectors in Q^3, with dimension
// (support size - 1), are exactly the strata of the projective plane.
TEST(Census, Gr13MatchesSupportPatterns) {
  std::multiset<int> support_dims;
  for (int mask = 1; mask < 8; ++mask) support_dims.insert(__builtin_popcount(static_cast<unsigned>(mask)) - 1);
  EXPECT_EQ(dims(enumerate_labels(GrassShape(1, 3))), support_dims);
}

TEST(Census, ProjectiveSpaces) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(enumerate_labels(GrassShape(1, n)).labels.size(), static_cast<std::size_t>((1 << n) - 1)) << n;
}

TEST(Census, DualGrassmannians) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(enumerate_labels(GrassShape(n - 1, n)).labels.size(), enumerate_labels(GrassShape(1, n)).labels.size());
    for (int k = 1; k < n; ++k)
      EXPECT_EQ(enumerate_labels(GrassShape(k, n)).count_by_dim, enumerate_labels(GrassShape(n - k, n)).count_by_dim);
  }
}

TEST(Census, LabelInvariants) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      GrassShape s(k, n);
      const auto census = enumerate_labels(s);
      const auto reps = max_coset_reps(k, n);
      int open = 0;
      for (const auto& l : census.labels) {
        EXPECT_TRUE(bruhat_leq(l.v, l.w));
        EXPECT_TRUE(std::find(reps.begin(), reps.end(), l.v) != reps.end());
        EXPECT_EQ(l.dim, l.w.length() - l.v.length());
        EXPECT_GE(l.dim, 0);
        EXPECT_LE(l.dim, s.dim());
        if (l.dim == s.dim()) {
          ++open;
          EXPECT_EQ(l.w, longest_element(n));
        }
      }
      EXPECT_EQ(open, 1);
    }
}

TEST(Census, Gr24Count) {
  // Brute force over S_4 x (6 representatives); also the number of positroids
  // of rank 2 on 4 elements.
  EXPECT_EQ(enumerate_labels(GrassShape(2, 4)).labels.size(), 33u);
}

TEST(Census, RejectsLargeN) { EXPECT_THROW(enumerate_labels(GrassShape(2, 9)), std::invalid_argument); }

TEST(LeafRank, AgreesWithChartRankInsideTheCell) {
  GrassShape s(2, 5);
  LeafRank leaf(s);
  const Bivector pi = build_pi(s);
  for (const auto& g : sample_points(s, 200, 41)) {
    try {
      EXPECT_EQ(leaf(g), rank_at(pi, chart_coordinates(g)));
    } catch (const ChartEscape&) {
    }
  }
}

TEST(LeafRank, MovingToTop) {
  const Perm w = moving_to_top({2, 4}, 5);
  EXPECT_EQ(w.one_line(), (std::vector<int>{3, 1, 4, 2, 5}));
  EXPECT_EQ(apply(w, {2, 4}), (KSubset{1, 2}));
}

TEST(Classify, Examples) {
  GrassShape s(1, 3);
  auto same = classify({grass_point(s, {{Rat(1)}, {Rat(1)}, {Rat(1)}}), grass_point(s, {{Rat(2)}, {Rat(3)}, {Rat(5)}})}, s);
  ASSERT_EQ(same.classes.size(), 1u);
  EXPECT_EQ(same.classes[0].count, 2);
  EXPECT_EQ(same.classes[0].rank, 2);
  EXPECT_EQ(same.classes[0].matroid, (std::set<KSubset>{{1}, {2}, {3}}));

  auto apart = classify({grass_point(s, {{Rat(1)}, {Rat(0)}, {Rat(0)}}), grass_point(s, {{Rat(0)}, {Rat(1)}, {Rat(0)}})}, s);
  EXPECT_EQ(apart.classes.size(), 2u);
  EXPECT_EQ(apart.strata.size(), 2u);
  for (const auto& c : apart.classes) EXPECT_EQ(c.rank, 0);
}

TEST(Classify, SampledFingerprintsWithinCensus) {
  GrassShape s(2, 4);
  const auto census = enumerate_labels(s);
  Classification c;
  ASSERT_NO_THROW(c = classify(sample_points(s, 1000, 42), s));
  EXPECT_LE(c.strata.size(), census.labels.size());
  int total = 0;
  for (const auto& st : c.strata) {
    total += st.count;
    EXPECT_EQ(st.rank % 2, 0);
  }
  EXPECT_EQ(total, 1000);
}

TEST(Classify, MatroidsRefineStrata) {
  // Rows 1,3 parallel and rows 2,4 parallel: a rank-2 matroid on 4 elements
  // that is not a positroid. It shares its stratum (cyclic interval ranks)
  // with the uniform matroid minus {1,3} and {2,4}.
  GrassShape s(2, 4);
  GrassPoint crossing = grass_point(s, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
  GrassPoint generic = grass_point(s, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(2)}});
  Fingerprint a = fingerprint(crossing), b = fingerprint(generic);
  EXPECT_EQ(a.matroid, (std::set<KSubset>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_NE(a.matroid, b.matroid);
  EXPECT_EQ(a.cyclic_rank, b.cyclic_rank);
  auto c = classify({crossing, generic}, s);
  EXPECT_EQ(c.classes.size(), 2u);
  EXPECT_EQ(c.strata.size(), 1u);
  EXPECT_EQ(c.strata[0].matroids, 2);
}

TEST(CAction, Examples) {
  GrassShape s(1, 3);
  GrassPoint e1 = grass_point(s, {{Rat(1)}, {Rat(0)}, {Rat(0)}});
  EXPECT_EQ(fingerprint(act(perm_matrix(coxeter_element(3)), e1)).matroid, (std::set<KSubset>{{2}}));
  EXPECT_TRUE(c_action_on_fingerprints({e1}));
}

TEST(CAction, FullTurnIsTrivial) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    GrassShape s(k, n);
    const GLElement cn = perm_matrix(coxeter_element(n).pow(n));
    for (const auto& g : sample_points(s, 100, 43)) {
      const Fingerprint fp = fingerprint(g);
      EXPECT_EQ(fingerprint(act(cn, g)), fp);
      EXPECT_EQ(rotate_fingerprint(fp, n, n), fp);
    }
  }
}

TEST(CAction, SampledPoints) {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    GrassShape s(k, n);
    EXPECT_TRUE(c_action_on_fingerprints(sample_points(s, 1000, 44)));
  }
}

TEST(CAction, DetectsAWrongAction) {
  // A transposition is not the cyclic shift, so some fingerprint must fail
  // to rotate correctly when the points are moved by it instead.
  GrassShape s(2, 4);
  std::vector<GrassPoint> moved;
  for (const auto& g : sample_points(s, 50, 45)) moved.push_back(act(perm_matrix(simple_reflection(1, 4)), g));
  std::vector<GrassPoint> orig = sample_points(s, 50, 45);
  int mismatches = 0;
  for (std::size_t i = 0; i < orig.size(); ++i)
    if (!(fingerprint(moved[i]) == rotate_fingerprint(fingerprint(orig[i]), 4, 1))) ++mismatches;
  EXPECT_GT(mismatches, 0);
}
