#include "drdp/model.hpp"

#include <gtest/gtest.h>

using namespace drdp;

TEST(IlpModel, VariablesAndBounds) {
  IlpModel m;
  VarId y = m.add_variable("y", Integrality::kBinary);
  VarId r = m.add_variable("r", Integrality::kContinuous, 0, Rational(1, 2));
  EXPECT_EQ(y, 0);
  EXPECT_EQ(r, 1);
  EXPECT_EQ(m.find("r"), r);
  EXPECT_FALSE(m.find("q").has_value());
  EXPECT_EQ(m.count(Integrality::kBinary), 1);
  EXPECT_EQ(m.variable(r).upper, Rational(1, 2));
  EXPECT_THROW(m.add_variable("y", Integrality::kBinary), std::invalid_argument);
  EXPECT_THROW(m.add_variable("b", Integrality::kBinary, 0, 2), std::invalid_argument);
  EXPECT_THROW(m.add_variable("c", Integrality::kContinuous, 2, 1),
               std::invalid_argument);
}

TEST(IlpModel, ObjectiveSortedAndZeroDropped) {
  IlpModel m;
  for (const char* n : {"a", "b", "c"}) m.add_variable(n, Integrality::kBinary);
  m.set_objective(2, 3);
  m.set_objective(0, 2);
  m.set_objective(1, 1);
  ASSERT_EQ(m.objective().size(), 3u);
  EXPECT_EQ(m.objective()[0].var, 0);
  EXPECT_EQ(m.objective()[2].var, 2);
  m.set_objective(1, 0);
  EXPECT_EQ(m.objective().size(), 2u);
  EXPECT_THROW(m.set_objective(5, 1), std::out_of_range);
}

TEST(IlpModel, ConstraintValidation) {
  IlpModel m;
  m.add_variable("a", Integrality::kBinary);
  m.add_variable("b", Integrality::kBinary);
  LinearConstraint dup{"dup", {{0, 1}, {0, 2}}, Sense::kGreaterEqual, 1};
  EXPECT_THROW(m.add_constraint(dup), std::invalid_argument);
  LinearConstraint zero{"zero", {{0, 0}}, Sense::kGreaterEqual, 1};
  EXPECT_THROW(m.add_constraint(zero), std::invalid_argument);
  LinearConstraint unknown{"unk", {{7, 1}}, Sense::kGreaterEqual, 1};
  EXPECT_THROW(m.add_constraint(unknown), std::out_of_range);
  LinearConstraint ok{"ok", {{0, 1}, {1, Rational(1, 2)}}, Sense::kGreaterEqual, 1};
  EXPECT_EQ(m.add_constraint(ok), 0u);
}

TEST(IlpModel, FeasibilityHelpers) {
  IlpModel m;
  m.add_variable("a", Integrality::kBinary);
  m.add_variable("b", Integrality::kBinary);
  m.set_objective(0, 2);
  m.set_objective(1, 3);
  m.add_constraint({"c0", {{0, 1}, {1, Rational(1, 2)}}, Sense::kGreaterEqual, 1});
  m.add_constraint({"c1", {{0, 1}, {1, 1}}, Sense::kLessEqual, 1});
  EXPECT_DOUBLE_EQ(objective_value(m, {1, 0}), 2.0);
  EXPECT_FALSE(first_violation(m, {1, 0}, 1e-9).has_value());
  EXPECT_EQ(first_violation(m, {0, 1}, 1e-9), 0u);
  EXPECT_EQ(first_violation(m, {1, 1}, 1e-9), 1u);
  EXPECT_EQ(first_violation(m, {1.5, -0.5}, 1e-9), 2u);  // c1 ok, bound of a
  EXPECT_THROW(first_violation(m, {1}, 1e-9), std::invalid_argument);
}

TEST(IlpModel, EqualityCoversMetadata) {
  IlpModel a, b;
  a.add_variable("x", Integrality::kBinary);
  b.add_variable("x", Integrality::kBinary);
  EXPECT_EQ(a, b);
  b.formulation_tag = "t";
  EXPECT_NE(a, b);
}
