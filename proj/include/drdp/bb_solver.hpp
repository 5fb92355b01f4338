#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "drdp/model.hpp"
#include "drdp/simplex.hpp"

namespace drdp {

enum class BranchingRule {
  kMostFractional,  // fraction closest to 1/2, ties to the lowest id
  kReliability,     // pseudocosts, strong branching until they are reliable
};

struct SolverConfig {
  double time_limit = 300.0;  // seconds
  double integrality_tol = 1e-6;
  double feasibility_tol = 1e-7;
  bool integral_objective = true;
  BranchingRule branching = BranchingRule::kReliability;
  int reliability_threshold = 4;  // observations per direction
  int strong_branch_candidates = 8;
  int strong_branch_lookahead = 4;
  // Until the search finds an incumbent of its own, continue with the better
  // child instead of returning to the queue. Matters on wide-gap instances
  // where best-first alone never reaches a leaf.
  bool plunge = true;

  void validate() const {
    if (!(time_limit > 0.0)) throw std::invalid_argument("time_limit must be positive");
    if (!(integrality_tol > 0.0) || !(feasibility_tol > 0.0)) {
      throw std::invalid_argument("tolerances must be positive");
    }
  }
};

enum class SolveStatus { kOptimal, kTimeLimit, kInfeasible };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kTimeLimit: return "TimeLimit";
    case SolveStatus::kInfeasible: return "Infeasible";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<double> objective;
  Assignment assignment;  // empty when no incumbent exists
  std::int64_t nodes = 0;
  std::int64_t simplex_iterations = 0;
  double best_bound = 0.0;
};

namespace detail {

// Per-node fixing state of a binary variable.
enum : std::int8_t { kFree = -1, kAtZero = 0, kAtOne = 1 };

struct BbNode {
  double bound = 0.0;
  double key = 0.0;  // bound used for ordering (rounded up for integral objectives)
  int depth = 0;
  std::int64_t seq = 0;
  int branch_var = -1;
  double branch_value = 0.0;  // LP value of the branching variable
  bool solved = false;        // LP optimal (possibly pruned afterwards)
  std::vector<std::int8_t> fixing;  // indexed by position in the binary list
  DualSimplex::Basis basis;         // optimal basis of this node's LP
};

struct BbNodeOrder {
  // priority_queue keeps the "largest" on top, so invert: smaller bound,
  // then deeper, then earlier insertion is preferred.
  bool operator()(const BbNode& a, const BbNode& b) const {
    if (a.key != b.key) return a.key > b.key;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

}  // namespace detail

// Best-first branch-and-bound over the Binary variables of `model`, with
// bounds from the LP relaxation. `hint`, when feasible and integral, seeds
// the incumbent.
inline SolveResult solve(const IlpModel& model, const SolverConfig& cfg = {},
                         const std::optional<Assignment>& hint = std::nullopt) {
  using Clock = std::chrono::steady_clock;
  cfg.validate();
  const auto start = Clock::now();
  auto out_of_time = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count() >
           cfg.time_limit;
  };

  SolveResult result;
  const int nvars = model.num_variables();
  LpData data = LpData::from_model(model);
  SimplexOptions sopts;
  sopts.feasibility_tol = cfg.feasibility_tol;
  DualSimplex simplex(data, sopts);

  std::vector<int> binaries;
  for (const Variable& v : model.variables()) {
    if (v.integrality == Integrality::kBinary) binaries.push_back(v.id);
  }
  const int nbin = static_cast<int>(binaries.size());

  double incumbent = std::numeric_limits<double>::infinity();
  int improvements = 0;
  auto accept = [&](const Assignment& x) {
    if (first_violation(model, x, 1e-6)) return false;
    double value = objective_value(model, x);
    if (value < incumbent - 1e-9) {
      incumbent = value;
      ++improvements;
      result.assignment = x;
      result.objective = value;
    }
    return true;
  };
  if (hint && hint->size() == static_cast<std::size_t>(nvars)) {
    bool integral = true;
    for (int id : binaries) {
      double v = (*hint)[id];
      integral = integral && (v == 0.0 || v == 1.0);
    }
    if (integral) accept(*hint);
  }
  const int seeded = improvements;

  auto prunable = [&](double bound) {
    if (incumbent == std::numeric_limits<double>::infinity()) return false;
    if (cfg.integral_objective) {
      return std::ceil(bound - 1e-6) >= incumbent - 1e-9;
    }
    return bound >= incumbent - 1e-6;
  };

  std::vector<double> lower(data.lower), upper(data.upper);

  // Pseudocosts: average bound gain per unit change, per direction.
  std::vector<double> pc_sum[2] = {std::vector<double>(nbin, 0.0),
                                   std::vector<double>(nbin, 0.0)};
  std::vector<int> pc_count[2] = {std::vector<int>(nbin, 0),
                                  std::vector<int>(nbin, 0)};
  auto record_gain = [&](int b, int dir, double frac, double gain) {
    if (frac <= 0.0) return;
    pc_sum[dir][b] += std::max(0.0, gain) / frac;
    ++pc_count[dir][b];
  };
  auto pseudocost = [&](int b, int dir) {
    if (pc_count[dir][b] > 0) return pc_sum[dir][b] / pc_count[dir][b];
    double sum = 0.0;
    int count = 0;
    for (int k = 0; k < nbin; ++k) {
      if (pc_count[dir][k] > 0) {
        sum += pc_sum[dir][k] / pc_count[dir][k];
        ++count;
      }
    }
    return count > 0 ? sum / count : 1.0;
  };
  auto score = [](double down, double up) {
    return std::max(down, 1e-6) * std::max(up, 1e-6);
  };
  // Large finite gain for children that are infeasible or pruned.
  const double kCutoffGain = 1e6;

  // Picks the branching variable (index into `binaries`) for a node whose
  // LP optimum `lp` has the given fractional binaries. `lower` / `upper`
  // hold the node's bounds on entry and are restored on exit.
  auto choose = [&](const detail::BbNode& node, const LpResult& lp,
                    const std::vector<int>& fractional) {
    auto frac_of = [&](int b) { return lp.x[binaries[b]]; };
    if (cfg.branching == BranchingRule::kMostFractional) {
      int pick = fractional.front();
      double best = -1.0;
      for (int b : fractional) {
        double v = frac_of(b);
        double f = std::min(v - std::floor(v), std::ceil(v) - v);
        if (f > best + 1e-12) {
          best = f;
          pick = b;
        }
      }
      return pick;
    }
    // Unreliable candidates, most fractional first, get strong branching.
    std::vector<int> unreliable;
    for (int b : fractional) {
      if (std::min(pc_count[0][b], pc_count[1][b]) < cfg.reliability_threshold) {
        unreliable.push_back(b);
      }
    }
    std::stable_sort(unreliable.begin(), unreliable.end(), [&](int a, int b) {
      return std::abs(frac_of(a) - 0.5) < std::abs(frac_of(b) - 0.5);
    });
    std::vector<double> strong(static_cast<std::size_t>(nbin), -1.0);
    int tried = 0, since_best = 0;
    double best_strong = -1.0;
    for (int b : unreliable) {
      if (tried >= cfg.strong_branch_candidates ||
          since_best >= cfg.strong_branch_lookahead) {
        break;
      }
      ++tried;
      const int id = binaries[b];
      const double v = frac_of(b);
      double gain[2];
      for (int dir = 0; dir < 2; ++dir) {
        lower[id] = upper[id] = dir;
        LpResult child = simplex.solve(lower, upper, &node.basis);
        result.simplex_iterations += child.iterations;
        if (child.status != LpStatus::kOptimal || prunable(child.value)) {
          gain[dir] = kCutoffGain;
        } else {
          gain[dir] = child.value - node.bound;
          record_gain(b, dir, dir == 0 ? v : 1.0 - v, gain[dir]);
        }
      }
      lower[id] = data.lower[id];
      upper[id] = data.upper[id];
      strong[b] = score(gain[0], gain[1]);
      if (strong[b] > best_strong + 1e-12) {
        best_strong = strong[b];
        since_best = 0;
      } else {
        ++since_best;
      }
    }
    int pick = fractional.front();
    double best = -1.0;
    for (int b : fractional) {
      double v = frac_of(b);
      double sc = strong[b] >= 0.0
                      ? strong[b]
                      : score(pseudocost(b, 0) * v, pseudocost(b, 1) * (1.0 - v));
      if (sc > best * (1.0 + 1e-9) + 1e-12) {
        best = sc;
        pick = b;
      }
    }
    return pick;
  };
  // Solves the LP for `node`; returns false when infeasible or pruned.
  // Integral solutions update the incumbent and are not queued.
  auto evaluate = [&](detail::BbNode& node, const DualSimplex::Basis* warm) {
    for (int b = 0; b < nbin; ++b) {
      int id = binaries[b];
      if (node.fixing[b] == detail::kFree) {
        lower[id] = data.lower[id];
        upper[id] = data.upper[id];
      } else {
        lower[id] = upper[id] = node.fixing[b];
      }
    }
    LpResult lp = simplex.solve(lower, upper, warm);
    ++result.nodes;
    result.simplex_iterations += lp.iterations;
    if (lp.status != LpStatus::kOptimal) return false;
    node.solved = true;
    node.bound = lp.value;
    node.key = cfg.integral_objective ? std::ceil(node.bound - 1e-6) : node.bound;
    if (prunable(node.bound)) return false;

    std::vector<int> fractional;
    for (int b = 0; b < nbin; ++b) {
      double v = lp.x[binaries[b]];
      if (std::min(v - std::floor(v), std::ceil(v) - v) > cfg.integrality_tol) {
        fractional.push_back(b);
      }
    }
    if (!fractional.empty()) {
      node.basis = simplex.basis();
      node.branch_var = choose(node, lp, fractional);
      node.branch_value = lp.x[binaries[node.branch_var]];
      return true;
    }
    Assignment x = lp.x;
    for (int id : binaries) x[id] = std::round(x[id]);
    if (!accept(x) && nbin < nvars) {
      // Rounding disturbed the continuous part; re-solve with every binary
      // fixed at its rounded value.
      for (int id : binaries) lower[id] = upper[id] = x[id];
      LpResult fixed = simplex.solve(lower, upper, nullptr);
      result.simplex_iterations += fixed.iterations;
      if (fixed.status == LpStatus::kOptimal) {
        for (int id : binaries) fixed.x[id] = x[id];
        accept(fixed.x);
      }
    }
    return false;
  };

  std::priority_queue<detail::BbNode, std::vector<detail::BbNode>,
                      detail::BbNodeOrder>
      open;
  std::int64_t seq = 0;
  detail::BbNode root;
  root.fixing.assign(static_cast<std::size_t>(nbin), detail::kFree);
  root.seq = seq++;
  bool timed_out = false;
  if (evaluate(root, nullptr)) open.push(std::move(root));

  std::optional<detail::BbNode> dive;
  while (dive || !open.empty()) {
    if (out_of_time()) {
      timed_out = true;
      if (dive) open.push(std::move(*dive));
      break;
    }
    detail::BbNode node;
    if (dive) {
      node = std::move(*dive);
      dive.reset();
    } else {
      node = open.top();
      open.pop();
    }
    if (prunable(node.bound)) continue;
    std::optional<detail::BbNode> kept[2];
    for (std::int8_t value : {detail::kAtZero, detail::kAtOne}) {
      detail::BbNode child;
      child.fixing = node.fixing;
      child.fixing[node.branch_var] = value;
      child.depth = node.depth + 1;
      child.seq = seq++;
      bool keep = evaluate(child, &node.basis);
      if (child.solved) {
        double f = value == detail::kAtZero ? node.branch_value
                                            : 1.0 - node.branch_value;
        record_gain(node.branch_var, value, f, child.bound - node.bound);
      }
      if (keep) kept[value] = std::move(child);
    }
    if (cfg.plunge && improvements == seeded) {
      // The child with the smaller bound goes next; ties follow the LP value.
      int next = -1;
      if (kept[0] && kept[1]) {
        if (kept[0]->bound != kept[1]->bound) {
          next = kept[0]->bound < kept[1]->bound ? 0 : 1;
        } else {
          next = node.branch_value >= 0.5 ? 1 : 0;
        }
      } else if (kept[0] || kept[1]) {
        next = kept[0] ? 0 : 1;
      }
      if (next >= 0) {
        dive = std::move(kept[next]);
        kept[next].reset();
      }
    }
    for (auto& c : kept) {
      if (c) open.push(std::move(*c));
    }
  }

  if (timed_out) {
    double bound = incumbent;
    while (!open.empty()) {
      bound = std::min(bound, open.top().bound);
      open.pop();
    }
    result.best_bound = bound;
    result.status = SolveStatus::kTimeLimit;
    return result;
  }
  if (result.objective) {
    result.status = SolveStatus::kOptimal;
    result.best_bound = *result.objective;
  } else {
    result.status = SolveStatus::kInfeasible;
    result.best_bound = std::numeric_limits<double>::infinity();
  }
  return result;
}

}  // namespace drdp
