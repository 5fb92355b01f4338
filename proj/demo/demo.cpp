// Solves the 5 x 10 grid with one formulation and compares against greedy.
#include <iostream>

#include "drdp/drdp.hpp"

int main() {
  drdp::Graph g = drdp::generate_grid(5, 10);
  drdp::GraphSolve exact = drdp::solve_graph(g, drdp::FormulationKind::kDrdp1PP);
  drdp::GreedyResult approx = drdp::greedy(g, drdp::CoverProblem::kDrdp);

  std::cout << "Grid05x10: n " << g.n() << " m " << g.m() << "\n";
  std::cout << "branch and bound: " << drdp::rounded_objective(exact.result)
            << " (" << exact.result.nodes << " nodes)\n";
  std::cout << "greedy: W1 " << approx.W1 << " W2 " << approx.W2 << "\n";
  std::cout << "optimal labeling:\n";
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 10; ++c) std::cout << (*exact.labeling)[r * 10 + c] << ' ';
    std::cout << "\n";
  }
}
