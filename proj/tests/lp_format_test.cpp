#include "drdp/lp_format.hpp"

#include <gtest/gtest.h>

#include "drdp/corpus.hpp"
#include "drdp/formulations.hpp"

using namespace drdp;

namespace {

int count_lines_in_section(const std::string& text, const std::string& section) {
  std::istringstream in(text);
  std::string line;
  bool inside = false;
  int count = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != ' ') {
      inside = line == section;
      continue;
    }
    if (inside) ++count;
  }
  return count;
}

int lp_error_line(const std::string& text) {
  try {
    import_lp(text);
  } catch (const LpParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(ExportLp, SectionOrder) {
  IlpModel m;
  m.add_variable("y_0", Integrality::kBinary);
  m.add_variable("z_0", Integrality::kBinary);
  m.set_objective(0, 2);
  m.set_objective(1, 3);
  m.add_constraint({"c", {{0, 1}, {1, 1}}, Sense::kGreaterEqual, 1});
  std::string text = export_lp(m);
  auto a = text.find("Minimize"), b = text.find("Subject To"),
       c = text.find("Binary"), d = text.find("End");
  ASSERT_NE(a, std::string::npos);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_LT(c, d);
  EXPECT_NE(text.find(" obj: 2 y_0 + 3 z_0"), std::string::npos);
  EXPECT_NE(text.find(" c: y_0 + z_0 >= 1"), std::string::npos);
}

TEST(ExportLp, Drdp1OnK2) {
  Graph k2 = make_path(2);
  std::string text = export_lp(build_formulation(k2, FormulationKind::kDrdp1, std::nullopt));
  EXPECT_EQ(count_lines_in_section(text, "Binary"), 6);
  EXPECT_EQ(count_lines_in_section(text, "Subject To"), 6);
}

TEST(ExportLp, Drdp2ppListsContinuousBounds) {
  Graph k2 = make_path(2);
  std::string text =
      export_lp(build_formulation(k2, FormulationKind::kDrdp2PP, std::nullopt));
  EXPECT_NE(text.find("Bounds\n 0 <= r_0 <= 1\n 0 <= r_1 <= 1\n"), std::string::npos);
  std::string binary = text.substr(text.find("Binary"));
  EXPECT_EQ(binary.find("r_0"), std::string::npos);
  EXPECT_NE(binary.find("q_0"), std::string::npos);
}

TEST(ExportLp, HalfCoefficientsExact) {
  std::string text =
      export_lp(build_formulation(make_path(3), FormulationKind::kDrdp1PP, std::nullopt));
  EXPECT_NE(text.find("0.5 y_1"), std::string::npos);
}

TEST(ExportLp, Deterministic) {
  Graph g = generate_gnp(8, 0.5, 4);
  IlpModel m = build_formulation(g, FormulationKind::kDrdp2, std::nullopt);
  EXPECT_EQ(export_lp(m), export_lp(build_formulation(g, FormulationKind::kDrdp2, std::nullopt)));
}

TEST(ImportLp, RoundTripC4) {
  IlpModel m = build_formulation(make_cycle(4), FormulationKind::kDrdp1P, std::nullopt);
  EXPECT_EQ(import_lp(export_lp(m)), m);
}

TEST(ImportLp, RoundTripAllKindsAndStrengthened) {
  for (const CorpusEntry& e : desk_corpus()) {
    if (e.graph.n() > 6) continue;
    auto bounds = compute_bounds(compute_params(e.graph));
    for (FormulationKind k : kAllFormulations) {
      IlpModel m = build_formulation(e.graph, k, bounds);
      EXPECT_EQ(import_lp(export_lp(m)), m) << e.name;
      EXPECT_EQ(export_lp(import_lp(export_lp(m))), export_lp(m));
    }
    if (bounds) {
      for (FormulationKind k : {FormulationKind::kDrdp1P, FormulationKind::kDrdp2P}) {
        IlpModel m = build_formulation(e.graph, FormulationSpec(k, true), bounds);
        EXPECT_EQ(import_lp(export_lp(m)), m) << e.name;
      }
    }
  }
}

TEST(ImportLp, MissingEnd) {
  EXPECT_GT(lp_error_line("Minimize\n obj: x\nSubject To\n c: x >= 1\nBinary\n x\n"), 0);
}

TEST(ImportLp, MalformedInputsCarryLineNumbers) {
  EXPECT_EQ(lp_error_line("Minimize\n obj: x\nSubject To\n c: x >= 1\nBogus\nEnd\n"), 5);
  EXPECT_EQ(lp_error_line("Minimize\n obj: x\nSubject To\n c: x 1\nBinary\n x\nEnd\n"), 4);
  EXPECT_EQ(lp_error_line("Minimize\n obj: x\nSubject To\n c: x >= 1\n c: x >= 2\nBinary\n x\nEnd\n"), 5);
  EXPECT_EQ(lp_error_line("Minimize\n obj: x\nSubject To\n c: x >= 1\nBinary\n w\nEnd\n"), 6);
}

// A variable that only shows up through usage is inferred continuous and
// free; the Bounds section then boxes it. One used without any bounds cannot
// be represented in this boxed model and is flagged.
TEST(ImportLp, InferredVariablesFixture) {
  const std::string boxed =
      "Minimize\n obj: 2 y + w\nSubject To\n c: y + 0.5 w >= 1\n"
      "Bounds\n 0 <= w <= 1\nBinary\n y\nEnd\n";
  IlpModel m = import_lp(boxed);
  VarId w = m.find("w").value();
  EXPECT_EQ(m.variable(w).integrality, Integrality::kContinuous);
  EXPECT_EQ(m.variable(w).upper, Rational(1));
  EXPECT_EQ(m.constraints()[0].terms[1].coef, Rational(1, 2));

  const std::string unbounded =
      "Minimize\n obj: 2 y + w\nSubject To\n c: y + 0.5 w >= 1\n"
      "Binary\n y\nEnd\n";
  EXPECT_THROW(import_lp(unbounded), LpParseError);
}

TEST(ImportLp, AcceptsGeneralsSectionForBinaries) {
  const std::string text =
      "Minimize\n obj: x\nSubject To\n c: x >= 1\nBounds\n 0 <= x <= 1\nGenerals\n x\nEnd\n";
  IlpModel m = import_lp(text);
  EXPECT_EQ(m.variable(0).integrality, Integrality::kBinary);
}
