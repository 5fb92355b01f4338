#include "drdp/formulations.hpp"

#include <gtest/gtest.h>

#include "drdp/pipeline.hpp"
#include "test_support.hpp"

using namespace drdp;

namespace {

IlpModel plain(const Graph& g, FormulationKind k) {
  return build_formulation(g, k, std::nullopt);
}

}  // namespace

TEST(Formulations, VariableAndRowCounts) {
  for (int n : {1, 2, 5, 9}) {
    Graph g = n == 1 ? make_path(1) : make_cycle(std::max(3, n));
    int N = g.n();
    IlpModel d1 = plain(g, FormulationKind::kDrdp1);
    EXPECT_EQ(d1.count(Integrality::kBinary), 3 * N);
    EXPECT_EQ(d1.num_constraints(), 3 * N);
    IlpModel d2 = plain(g, FormulationKind::kDrdp2);
    EXPECT_EQ(d2.count(Integrality::kBinary), 3 * N);
    EXPECT_EQ(d2.num_constraints(), 4 * N);
    IlpModel p1 = plain(g, FormulationKind::kDrdp1P);
    EXPECT_EQ(p1.count(Integrality::kBinary), 2 * N);
    EXPECT_EQ(p1.num_constraints(), 2 * N);
    IlpModel p2 = plain(g, FormulationKind::kDrdp2P);
    EXPECT_EQ(p2.count(Integrality::kBinary), 2 * N);
    EXPECT_EQ(p2.num_constraints(), 2 * N);
    IlpModel pp1 = plain(g, FormulationKind::kDrdp1PP);
    EXPECT_EQ(pp1.count(Integrality::kBinary), 2 * N);
    EXPECT_EQ(pp1.num_constraints(), N);
    IlpModel pp2 = plain(g, FormulationKind::kDrdp2PP);
    EXPECT_EQ(pp2.count(Integrality::kBinary), N);
    EXPECT_EQ(pp2.count(Integrality::kContinuous), N);
    EXPECT_EQ(pp2.num_constraints(), 2 * N);
  }
}

TEST(Formulations, K2Examples) {
  Graph k2 = make_path(2);
  IlpModel d1 = plain(k2, FormulationKind::kDrdp1);
  EXPECT_EQ(d1.count(Integrality::kBinary), 6);
  EXPECT_EQ(d1.num_constraints(), 6);
  IlpModel pp2 = plain(k2, FormulationKind::kDrdp2PP);
  EXPECT_EQ(pp2.count(Integrality::kBinary), 2);
  for (const Variable& v : pp2.variables()) {
    if (v.name[0] == 'r') {
      EXPECT_EQ(v.integrality, Integrality::kContinuous);
      EXPECT_EQ(v.lower, Rational(0));
      EXPECT_EQ(v.upper, Rational(1));
    }
  }
}

TEST(Formulations, C4DoublePrimeHasOnlyCoverRows) {
  IlpModel m = plain(make_cycle(4), FormulationKind::kDrdp1PP);
  EXPECT_EQ(m.count(Integrality::kBinary), 8);
  EXPECT_EQ(m.num_constraints(), 4);
  for (const LinearConstraint& c : m.constraints()) {
    EXPECT_EQ(c.name.rfind("cover_", 0), 0u);
    EXPECT_EQ(c.sense, Sense::kGreaterEqual);
  }
}

TEST(Formulations, HalfCoefficientsStoredExactly) {
  IlpModel m = plain(make_path(3), FormulationKind::kDrdp2);
  bool found = false;
  for (const LinearConstraint& c : m.constraints()) {
    for (const Term& t : c.terms) found = found || t.coef == Rational(1, 2);
  }
  EXPECT_TRUE(found);
}

TEST(Formulations, ObjectiveCoefficientsInOneToThree) {
  for (FormulationKind k : kAllFormulations) {
    IlpModel m = plain(make_cycle(5), k);
    for (const Term& t : m.objective()) {
      EXPECT_GE(t.coef, Rational(1));
      EXPECT_LE(t.coef, Rational(3));
    }
  }
}

TEST(Formulations, StrengthenOnlyForPrimedIntegerModels) {
  EXPECT_NO_THROW(FormulationSpec(FormulationKind::kDrdp1P, true));
  EXPECT_NO_THROW(FormulationSpec(FormulationKind::kDrdp2P, true));
  for (FormulationKind k : {FormulationKind::kDrdp1, FormulationKind::kDrdp2,
                            FormulationKind::kDrdp1PP, FormulationKind::kDrdp2PP}) {
    EXPECT_THROW(FormulationSpec(k, true), std::invalid_argument);
  }
  EXPECT_THROW(build_formulation(make_cycle(4), FormulationSpec(FormulationKind::kDrdp1P, true),
                                 std::nullopt),
               std::invalid_argument);
}

TEST(Formulations, NamesRoundTrip) {
  for (FormulationKind k : kAllFormulations) {
    EXPECT_EQ(parse_formulation_kind(to_string(k)), k);
  }
  EXPECT_EQ(to_string(FormulationSpec(FormulationKind::kDrdp2P, true)), "drdp2p+");
  EXPECT_THROW(parse_formulation_kind("drdp3"), std::invalid_argument);
}

TEST(Bounds, GridExample) {
  GraphParams p = compute_params(generate_grid(5, 10));
  BoundSet b = compute_bounds(p).value();
  EXPECT_EQ(b.L3, 30);
  ASSERT_TRUE(b.U2.has_value());
  EXPECT_EQ(*b.U2, 62);
  EXPECT_EQ(b.gamma_lower, 10);
}

TEST(Bounds, CycleExample) {
  BoundSet b = compute_bounds(compute_params(make_cycle(9))).value();
  EXPECT_EQ(b.L1, 6);
}

TEST(Bounds, AbsentForEdgelessAndDisconnectedParts) {
  EXPECT_FALSE(compute_bounds(compute_params(make_path(1))).has_value());
  EXPECT_FALSE(compute_bounds(compute_params(make_empty(4))).has_value());
  std::vector<Edge> e{{0, 1}, {2, 3}};
  BoundSet b = compute_bounds(compute_params(Graph(4, e))).value();
  EXPECT_FALSE(b.L2.has_value());
  EXPECT_FALSE(b.U2.has_value());
}

// Sandwich the bound constants around brute-force optima.
TEST(Bounds, ValidOnSmallGraphs) {
  for (const Graph& g : reference::small_graphs()) {
    auto b = compute_bounds(compute_params(g));
    if (!b) continue;
    int gdr = reference::brute_gamma_dr(g);
    int gamma = reference::brute_gamma(g);
    EXPECT_LE(b->L3, gdr) << serialize_edge_list(g);
    EXPECT_LE(gdr, b->U1) << serialize_edge_list(g);
    if (b->U2) {
      EXPECT_LE(gdr, *b->U2) << serialize_edge_list(g);
    }
    EXPECT_LE(b->gamma_lower, gamma);
    if (b->L2) {
      EXPECT_LE(b->L1, *b->L2);
    }
  }
}

TEST(ExtractLabeling, Drdp1ppRepairsDoubleSelection) {
  Graph k2 = make_path(2);
  Assignment x = {1, 0, 1, 0};  // y_0, y_1, z_0, z_1
  Labeling f = extract_labeling(k2, FormulationKind::kDrdp1PP, x);
  EXPECT_EQ(f.values, (std::vector<int>{3, 0}));
  EXPECT_EQ(f.weight(), 3);
}

TEST(ExtractLabeling, Drdp2ppReadsOff) {
  Graph p3 = make_path(3);
  Assignment x = {0, 1, 0, 0, 1.0, 0};  // q_0..q_2, r_0..r_2
  EXPECT_EQ(extract_labeling(p3, FormulationKind::kDrdp2PP, x).values,
            (std::vector<int>{0, 3, 0}));
}

TEST(ExtractLabeling, NearMissIsCertificateError) {
  Graph star = make_star(3);
  Assignment x(8, 0.0);
  x[0] = 1;         // q_center
  x[4] = 0.999999;  // r_center
  EXPECT_THROW(extract_labeling(star, FormulationKind::kDrdp2PP, x), CertificateError);
}

TEST(ExtractLabeling, RejectsFractionalBinaries) {
  Graph k2 = make_path(2);
  Assignment x = {0.5, 0.5, 0.5, 0.5};
  EXPECT_THROW(extract_labeling(k2, FormulationKind::kDrdp1PP, x), CertificateError);
}

TEST(ExtractLabeling, EncodeRoundTripOnOptimalLabelings) {
  for (const Graph& g : reference::small_graphs()) {
    for (FormulationKind k : kAllFormulations) {
      Labeling f = all_threes(g);
      Assignment x = encode_labeling(g, k, f);
      EXPECT_FALSE(first_violation(plain(g, k), x, 1e-9).has_value());
      EXPECT_EQ(extract_labeling(g, k, x), f);
    }
  }
  EXPECT_THROW(encode_labeling(make_path(2), FormulationKind::kDrdp1P,
                               Labeling(std::vector<int>{1, 2})),
               std::invalid_argument);
}

// Every DRDF without 1s is feasible in every formulation and its objective
// equals its weight.
TEST(ExtractLabeling, ObjectiveEqualsWeight) {
  Graph g = make_cycle(6);
  Labeling f(std::vector<int>{3, 0, 0, 3, 0, 0});
  ASSERT_TRUE(is_drdf(g, f));
  for (FormulationKind k : kAllFormulations) {
    IlpModel m = plain(g, k);
    Assignment x = encode_labeling(g, k, f);
    EXPECT_FALSE(first_violation(m, x, 1e-9).has_value());
    EXPECT_DOUBLE_EQ(objective_value(m, x), 6.0);
  }
}

TEST(Equivalence, AllKindsMatchBruteForce) {
  for (const Graph& g : reference::small_graphs()) {
    int expect = reference::brute_gamma_dr(g);
    for (FormulationKind k : kAllFormulations) {
      GraphSolve s = solve_graph(g, k);
      ASSERT_EQ(s.result.status, SolveStatus::kOptimal);
      EXPECT_EQ(rounded_objective(s.result), expect) << to_string(k) << "\n"
                                                     << serialize_edge_list(g);
      ASSERT_TRUE(s.labeling.has_value());
      EXPECT_TRUE(is_drdf(g, *s.labeling));
      EXPECT_EQ(s.labeling->weight(), expect);
    }
    for (FormulationKind k : {FormulationKind::kDrdp1P, FormulationKind::kDrdp2P}) {
      GraphSolve s = solve_graph(g, FormulationSpec(k, true));
      EXPECT_EQ(rounded_objective(s.result), expect) << to_string(s.spec);
    }
  }
}
