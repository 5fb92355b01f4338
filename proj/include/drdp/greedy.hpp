#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "drdp/graph.hpp"
#include "drdp/labeling.hpp"

namespace drdp {

enum class CoverProblem { kDrdp, kRdp };

enum class ColumnRole { kY, kZ };

struct ColumnMeta {
  Vertex vertex = 0;
  ColumnRole role = ColumnRole::kY;
  friend bool operator==(const ColumnMeta&, const ColumnMeta&) = default;
};

// min c.x subject to A x >= b, x binary, with nonnegative integer data.
struct CoveringInstance {
  CoverProblem problem = CoverProblem::kDrdp;
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> a;  // row-major rows x cols
  std::vector<std::int64_t> b;
  std::vector<ColumnMeta> column_meta;

  std::int64_t at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
  std::int64_t& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

// Columns [0, n) are the Y columns of each vertex, [n, 2n) the Z columns.
inline CoveringInstance build_covering(const Graph& g, CoverProblem problem) {
  const int n = g.n();
  CoveringInstance inst;
  inst.problem = problem;
  inst.rows = n;
  inst.cols = 2 * n;
  inst.a.assign(static_cast<std::size_t>(n) * 2 * n, 0);
  const bool dr = problem == CoverProblem::kDrdp;
  for (Vertex v = 0; v < n; ++v) {
    inst.c.push_back(dr ? 2 : 1);
    inst.column_meta.push_back({v, ColumnRole::kY});
  }
  for (Vertex v = 0; v < n; ++v) {
    inst.c.push_back(dr ? 3 : 2);
    inst.column_meta.push_back({v, ColumnRole::kZ});
  }
  for (Vertex i = 0; i < n; ++i) {
    inst.b.push_back(dr ? 2 : 1);
    inst.at(i, i) = dr ? 2 : 1;
    inst.at(i, n + i) = dr ? 2 : 1;
    for (Vertex u : g.neighbors(i)) {
      if (dr) inst.at(i, u) = 1;
      inst.at(i, n + u) = dr ? 2 : 1;
    }
  }
  return inst;
}

inline double harmonic(int d) {
  if (d < 1) throw std::invalid_argument("harmonic: d must be at least 1");
  double h = 0.0;
  for (int i = d; i >= 1; --i) h += 1.0 / i;  // small terms first
  return h;
}

struct GreedyResult {
  std::int64_t W1 = 0;
  std::int64_t W2 = 0;
  std::vector<int> selected;  // column ids after cleanup, ascending
  Labeling labeling;
  double ratio_bound = 0.0;
};

// Greedy covering: repeatedly take the column with the least cost per unit
// of residual coverage, then drop a Y column whose Z partner was also taken.
inline GreedyResult greedy(const CoveringInstance& inst) {
  const int n = inst.rows;
  if (inst.cols != 2 * n) {
    throw std::invalid_argument("greedy: expected a 2n-column instance");
  }
  CoveringInstance work = inst;
  std::vector<std::int64_t> b = inst.b;

  std::int64_t max_sum = 0;
  for (int j = 0; j < inst.cols; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += inst.at(i, j);
    max_sum = std::max(max_sum, s);
  }

  auto column_sum = [&](int j) {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += work.at(i, j);
    return s;
  };
  auto remaining = [&] {
    for (std::int64_t v : b) {
      if (v > 0) return true;
    }
    return false;
  };

  std::vector<char> available(static_cast<std::size_t>(inst.cols), 1);
  std::vector<char> x(static_cast<std::size_t>(inst.cols), 0);
  while (remaining()) {
    int k = -1;
    std::int64_t k_sum = 0;
    for (int j = 0; j < inst.cols; ++j) {
      if (!available[j]) continue;
      std::int64_t s = column_sum(j);
      if (s == 0) continue;
      // c_j / s < c_k / k_sum, compared exactly.
      if (k < 0 || inst.c[j] * k_sum < inst.c[k] * s) {
        k = j;
        k_sum = s;
      }
    }
    if (k < 0) {
      throw std::logic_error("greedy: requirements left but no useful column");
    }
    x[k] = 1;
    available[k] = 0;
    for (int i = 0; i < n; ++i) {
      b[i] = std::max<std::int64_t>(0, b[i] - work.at(i, k));
      for (int j = 0; j < inst.cols; ++j) {
        work.at(i, j) = std::min(work.at(i, j), b[i]);
      }
    }
  }

  GreedyResult result;
  for (int j = 0; j < inst.cols; ++j) {
    if (x[j]) result.W1 += inst.c[j];
  }
  for (int i = 0; i < n; ++i) {
    if (x[i] && x[i + n]) x[i] = 0;
  }
  const bool dr = inst.problem == CoverProblem::kDrdp;
  result.labeling = Labeling(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < inst.cols; ++j) {
    if (!x[j]) continue;
    result.W2 += inst.c[j];
    result.selected.push_back(j);
    const ColumnMeta& meta = inst.column_meta[j];
    int value = meta.role == ColumnRole::kZ ? (dr ? 3 : 2) : (dr ? 2 : 1);
    result.labeling.values[meta.vertex] = value;
  }
  result.ratio_bound = max_sum > 0 ? harmonic(static_cast<int>(max_sum)) : 0.0;
  return result;
}

inline GreedyResult greedy(const Graph& g, CoverProblem problem) {
  return greedy(build_covering(g, problem));
}

inline Labeling drdf_from_dominating_set(const Graph& g,
                                         const std::vector<Vertex>& s) {
  if (!is_dominating_set(g, s)) {
    throw std::invalid_argument("vertex set is not dominating");
  }
  Labeling f(std::vector<int>(static_cast<std::size_t>(g.n()), 0));
  for (Vertex v : s) f.values[v] = 3;
  return f;
}

inline std::vector<Vertex> dominating_set_from_drdf(const Graph& g,
                                                    const Labeling& f) {
  CheckResult check = is_drdf(g, f);
  if (!check) {
    throw std::invalid_argument("labeling is not a double Roman dominating "
                                "function (vertex " +
                                std::to_string(*check.violation) + ")");
  }
  std::vector<Vertex> s;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (f[v] >= 2) s.push_back(v);
  }
  return s;
}

}  // namespace drdp
