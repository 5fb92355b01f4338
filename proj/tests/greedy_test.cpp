#include "drdp/greedy.hpp"

#include <gtest/gtest.h>

#include "drdp/rational.hpp"
#include "test_support.hpp"

using namespace drdp;

namespace {

// Straightforward re-statement of the greedy rule on Rational ratios, used to
// audit the library's integer cross-multiplication.
std::vector<int> reference_picks(const CoveringInstance& inst) {
  std::vector<std::vector<std::int64_t>> a(inst.rows, std::vector<std::int64_t>(inst.cols));
  for (int i = 0; i < inst.rows; ++i) {
    for (int j = 0; j < inst.cols; ++j) a[i][j] = inst.at(i, j);
  }
  std::vector<std::int64_t> b = inst.b;
  std::vector<bool> used(inst.cols, false);
  std::vector<int> picks;
  auto open = [&] {
    for (auto v : b) {
      if (v > 0) return true;
    }
    return false;
  };
  while (open()) {
    int best = -1;
    Rational best_ratio;
    for (int j = 0; j < inst.cols; ++j) {
      if (used[j]) continue;
      std::int64_t s = 0;
      for (int i = 0; i < inst.rows; ++i) s += std::min(a[i][j], b[i]);
      if (s == 0) continue;
      Rational ratio(inst.c[j], s);
      if (best < 0 || ratio < best_ratio) {
        best = j;
        best_ratio = ratio;
      }
    }
    used[best] = true;
    picks.push_back(best);
    for (int i = 0; i < inst.rows; ++i) b[i] = std::max<std::int64_t>(0, b[i] - a[i][best]);
  }
  return picks;
}

}  // namespace

TEST(BuildCovering, K2Drdp) {
  CoveringInstance inst = build_covering(make_path(2), CoverProblem::kDrdp);
  EXPECT_EQ(inst.a, (std::vector<std::int64_t>{2, 1, 2, 2, 1, 2, 2, 2}));
  EXPECT_EQ(inst.c, (std::vector<std::int64_t>{2, 2, 3, 3}));
  EXPECT_EQ(inst.b, (std::vector<std::int64_t>{2, 2}));
}

TEST(BuildCovering, K2Rdp) {
  CoveringInstance inst = build_covering(make_path(2), CoverProblem::kRdp);
  EXPECT_EQ(inst.a, (std::vector<std::int64_t>{1, 0, 1, 1, 0, 1, 1, 1}));
  EXPECT_EQ(inst.c, (std::vector<std::int64_t>{1, 1, 2, 2}));
  EXPECT_EQ(inst.b, (std::vector<std::int64_t>{1, 1}));
}

TEST(BuildCovering, K1Drdp) {
  CoveringInstance inst = build_covering(make_path(1), CoverProblem::kDrdp);
  EXPECT_EQ(inst.a, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(inst.b, (std::vector<std::int64_t>{2}));
}

TEST(Greedy, K2Trace) {
  GreedyResult r = greedy(make_path(2), CoverProblem::kDrdp);
  EXPECT_EQ(r.W1, 4);
  EXPECT_EQ(r.W2, 4);
  EXPECT_EQ(r.labeling.values, (std::vector<int>{2, 2}));
  EXPECT_EQ(reference_picks(build_covering(make_path(2), CoverProblem::kDrdp)),
            (std::vector<int>{0, 1}));
}

TEST(Greedy, K1) {
  GreedyResult r = greedy(make_path(1), CoverProblem::kDrdp);
  EXPECT_EQ(r.W1, 2);
  EXPECT_EQ(r.W2, 2);
  EXPECT_EQ(r.labeling.values, (std::vector<int>{2}));
}

TEST(Greedy, StarWithinRatio) {
  Graph star = make_star(4);
  GreedyResult r = greedy(star, CoverProblem::kDrdp);
  EXPECT_TRUE(is_drdf(star, r.labeling));
  int gdr = reference::brute_gamma_dr(star);
  EXPECT_EQ(gdr, 3);
  EXPECT_LE(r.W2, harmonic(2 * (4 + 1)) * gdr + 1e-9);
}

TEST(Greedy, MatchesReferenceSelection) {
  for (const Graph& g : reference::small_graphs()) {
    for (CoverProblem p : {CoverProblem::kDrdp, CoverProblem::kRdp}) {
      CoveringInstance inst = build_covering(g, p);
      std::vector<int> picks = reference_picks(inst);
      std::int64_t w1 = 0;
      for (int j : picks) w1 += inst.c[j];
      EXPECT_EQ(greedy(inst).W1, w1);
    }
  }
}

TEST(Greedy, GuaranteesOnSmallGraphs) {
  for (const Graph& g : reference::small_graphs()) {
    int delta = compute_params(g).max_degree;
    GreedyResult dr = greedy(g, CoverProblem::kDrdp);
    EXPECT_TRUE(is_drdf(g, dr.labeling));
    EXPECT_LE(dr.W2, dr.W1);
    EXPECT_EQ(dr.W2, dr.labeling.weight());
    EXPECT_DOUBLE_EQ(dr.ratio_bound, harmonic(2 * (delta + 1)));
    EXPECT_LE(dr.W2, harmonic(2 * (delta + 1)) * reference::brute_gamma_dr(g) + 1e-9);

    GreedyResult r = greedy(g, CoverProblem::kRdp);
    EXPECT_TRUE(is_rdf(g, r.labeling));
    EXPECT_LE(r.W2, harmonic(delta + 1) * reference::brute_gamma_r(g) + 1e-9);
  }
}

TEST(Greedy, GridFeasible) {
  Graph g = generate_grid(5, 10);
  GreedyResult r = greedy(g, CoverProblem::kDrdp);
  EXPECT_TRUE(is_drdf(g, r.labeling));
  EXPECT_LE(r.W2, harmonic(10) * 38);
}

TEST(Harmonic, Values) {
  EXPECT_DOUBLE_EQ(harmonic(1), 1.0);
  EXPECT_NEAR(harmonic(4), 25.0 / 12.0, 1e-12);
  EXPECT_NEAR(harmonic(10), 2.9289682539682538, 1e-12);
  EXPECT_THROW(harmonic(0), std::invalid_argument);
}

TEST(Conversions, DominatingSetToDrdf) {
  Graph star = make_star(4);
  Labeling f = drdf_from_dominating_set(star, {0});
  EXPECT_EQ(f[0], 3);
  EXPECT_EQ(f.weight(), 3);
  Graph c4 = make_cycle(4);
  Labeling h = drdf_from_dominating_set(c4, {0, 2});
  EXPECT_EQ(h.weight(), 6);
  EXPECT_TRUE(is_drdf(c4, h));
  EXPECT_THROW(drdf_from_dominating_set(c4, {0}), std::invalid_argument);
}

TEST(Conversions, DrdfToDominatingSet) {
  EXPECT_EQ(dominating_set_from_drdf(make_cycle(4), Labeling(std::vector<int>{2, 0, 2, 0})),
            (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(dominating_set_from_drdf(make_path(3), Labeling(std::vector<int>{0, 3, 0})),
            (std::vector<Vertex>{1}));
  EXPECT_THROW(dominating_set_from_drdf(make_path(3), Labeling(std::vector<int>{0, 1, 0})),
               std::invalid_argument);
}

TEST(Conversions, PropertiesOnSmallGraphs) {
  for (const Graph& g : reference::small_graphs()) {
    int gamma = reference::brute_gamma(g);
    std::vector<Vertex> s = dominating_set_from_drdf(g, all_threes(g));
    EXPECT_TRUE(is_dominating_set(g, s));
    EXPECT_GE(static_cast<int>(s.size()), gamma);
    EXPECT_TRUE(is_drdf(g, drdf_from_dominating_set(g, s)));
  }
}
