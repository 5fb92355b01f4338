#include "drdp/labeling.hpp"

#include <gtest/gtest.h>

using namespace drdp;

namespace {
Labeling L(std::vector<int> v) { return Labeling(std::move(v)); }
}  // namespace

TEST(IsDrdf, Examples) {
  Graph c4 = make_cycle(4);
  EXPECT_TRUE(is_drdf(c4, L({2, 0, 2, 0})));
  CheckResult bad = is_drdf(c4, L({3, 0, 0, 0}));
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.violation, 2);
  CheckResult p3 = is_drdf(make_path(3), L({0, 1, 2}));
  EXPECT_FALSE(p3);
  EXPECT_EQ(p3.violation, 0);
}

TEST(IsDrdf, OneVertexNeedsStrongNeighbor) {
  Graph k2 = make_path(2);
  EXPECT_FALSE(is_drdf(k2, L({1, 1})));
  EXPECT_TRUE(is_drdf(k2, L({1, 2})));
  EXPECT_TRUE(is_drdf(k2, L({0, 3})));
  EXPECT_FALSE(is_drdf(k2, L({0, 2})));
}

TEST(IsDrdf, RejectsBadInput) {
  EXPECT_THROW(is_drdf(make_path(3), L({0, 3})), std::invalid_argument);
  EXPECT_THROW(is_drdf(make_path(2), L({0, 4})), std::invalid_argument);
}

TEST(IsRdf, Examples) {
  Graph p3 = make_path(3);
  EXPECT_TRUE(is_rdf(p3, L({0, 2, 0})));
  CheckResult bad = is_rdf(p3, L({1, 0, 1}));
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.violation, 1);
  EXPECT_TRUE(is_rdf(make_path(1), L({1})));
  EXPECT_THROW(is_rdf(p3, L({0, 3, 0})), std::invalid_argument);
}

TEST(IsDominatingSet, Examples) {
  Graph c4 = make_cycle(4);
  EXPECT_TRUE(is_dominating_set(c4, {0, 2}));
  EXPECT_FALSE(is_dominating_set(c4, {0}));
  Graph k6 = make_complete(6);
  for (Vertex v = 0; v < 6; ++v) EXPECT_TRUE(is_dominating_set(k6, {v}));
}

TEST(Labeling, WeightAndText) {
  Labeling f = L({0, 3, 2, 1});
  EXPECT_EQ(f.weight(), 6);
  EXPECT_EQ(f.to_string(), "0 3 2 1");
  EXPECT_TRUE(is_drdf(make_path(5), all_threes(make_path(5))));
  EXPECT_EQ(all_threes(make_path(5)).weight(), 15);
}

// Raising a nonzero label keeps a DRDF a DRDF; checked over every labeling
// of a few small graphs.
TEST(IsDrdf, MonotoneUnderRaisingNonzeroLabels) {
  for (const Graph& g : {make_path(4), make_cycle(5), make_star(3), generate_gnp(5, 0.5, 2)}) {
    const int n = g.n();
    int drdfs = 0;
    for (int code = 0; code < (1 << (2 * n)); ++code) {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = code >> (2 * i) & 3;
      if (!is_drdf(g, Labeling(v))) continue;
      ++drdfs;
      for (int i = 0; i < n; ++i) {
        if (v[i] == 0 || v[i] == 3) continue;
        std::vector<int> w = v;
        ++w[i];
        EXPECT_TRUE(is_drdf(g, Labeling(w)));
      }
    }
    EXPECT_GT(drdfs, 0);
  }
}
