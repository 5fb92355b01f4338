#pragma once

#include <cmath>
#include <optional>

#include "drdp/bb_solver.hpp"
#include "drdp/formulations.hpp"
#include "drdp/graph.hpp"
#include "drdp/labeling.hpp"

namespace drdp {

struct GraphSolve {
  FormulationSpec spec;  // the variant actually solved
  SolveResult result;
  std::optional<Labeling> labeling;
};

// Builds the formulation for `g`, solves it seeded with the all-threes
// labeling and decodes the optimum. Edgeless graphs have no bound set, so a
// strengthened request falls back to the plain formulation there.
inline GraphSolve solve_graph(const Graph& g, FormulationSpec spec,
                              const SolverConfig& cfg = {}) {
  std::optional<BoundSet> bounds = compute_bounds(compute_params(g));
  if (spec.strengthen && !bounds) spec = FormulationSpec(spec.kind);
  IlpModel model = build_formulation(g, spec, bounds);
  Assignment seed = encode_labeling(g, spec.kind, all_threes(g));
  GraphSolve out{spec, solve(model, cfg, seed), std::nullopt};
  if (out.result.objective) {
    out.labeling = extract_labeling(g, spec.kind, out.result.assignment);
  }
  return out;
}

inline int rounded_objective(const SolveResult& r) {
  return static_cast<int>(std::lround(r.objective.value()));
}

}  // namespace drdp
