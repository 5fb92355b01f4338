#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drdp/graph.hpp"
#include "drdp/labeling.hpp"

namespace drdp {

enum class Quantity { kGamma, kGammaR, kGammaDR };
enum class Codomain { kFull0123, kReduced023 };

inline constexpr int kOracleMaxVertices = 16;

struct ExactResult {
  int value = 0;
  Labeling labeling;            // GammaR / GammaDR certificate
  std::vector<Vertex> set;      // Gamma certificate
};

namespace detail {

// Depth-first search over labelings in lexicographic order (vertex 0
// decides first). A vertex is
// checked as soon as its whole closed neighbourhood is assigned, and a
// branch is dropped once its partial weight reaches the best weight found.
class LabelingSearch {
 public:
  LabelingSearch(const Graph& g, std::vector<int> values, bool double_roman)
      : g_(g), values_(std::move(values)), double_roman_(double_roman),
        check_at_(static_cast<std::size_t>(g.n())),
        f_(static_cast<std::size_t>(g.n()), 0) {
    for (Vertex v = 0; v < g.n(); ++v) {
      Vertex last = v;
      for (Vertex u : g.neighbors(v)) last = std::max(last, u);
      check_at_[last].push_back(v);
    }
  }

  ExactResult run() {
    best_ = 3 * g_.n() + 1;
    dfs(0, 0);
    ExactResult r;
    r.value = best_;
    r.labeling = Labeling(best_f_);
    return r;
  }

 private:
  bool satisfied(Vertex v) const {
    int value = f_[v];
    if (double_roman_) {
      if (value >= 2) return true;
      int twos = 0, threes = 0;
      for (Vertex u : g_.neighbors(v)) {
        twos += f_[u] == 2;
        threes += f_[u] == 3;
      }
      return value == 0 ? (threes >= 1 || twos >= 2) : (twos + threes >= 1);
    }
    if (value != 0) return true;
    for (Vertex u : g_.neighbors(v)) {
      if (f_[u] == 2) return true;
    }
    return false;
  }

  void dfs(Vertex i, int weight) {
    if (i == g_.n()) {
      if (weight < best_) {
        best_ = weight;
        best_f_ = f_;
      }
      return;
    }
    for (int value : values_) {
      if (weight + value >= best_) break;  // values ascend
      f_[i] = value;
      bool ok = true;
      for (Vertex w : check_at_[i]) {
        if (!satisfied(w)) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(i + 1, weight + value);
    }
    f_[i] = 0;
  }

  const Graph& g_;
  std::vector<int> values_;
  bool double_roman_;
  std::vector<std::vector<Vertex>> check_at_;
  std::vector<int> f_;
  std::vector<int> best_f_;
  int best_ = 0;
};

// Runs the search on the graph with vertex v renamed n-1-v and maps the
// labeling back, so ties go to the first optimum in counting order with
// vertex 0 as the fastest-moving digit.
inline ExactResult search_counting_order(const Graph& g, std::vector<int> values,
                                         bool double_roman) {
  const int n = g.n();
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back({n - 1 - v, n - 1 - u});
  Graph reversed(n, edges);
  ExactResult r = LabelingSearch(reversed, std::move(values), double_roman).run();
  std::reverse(r.labeling.values.begin(), r.labeling.values.end());
  return r;
}

inline std::vector<Vertex> min_dominating_set(const Graph& g) {
  const int n = g.n();
  std::vector<unsigned> closed(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= 1u << u;
  }
  const unsigned all = n == 32 ? ~0u : (1u << n) - 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      unsigned covered = 0;
      for (int i : idx) covered |= closed[i];
      if (covered == all) return std::vector<Vertex>(idx.begin(), idx.end());
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw std::logic_error("no dominating set found");
}

}  // namespace detail

// Brute-force value of `q`. Among optimal labelings the certificate is the
// first one met when counting through the codomain with vertex 0 as the
// least significant digit (C_4 gives 2 0 2 0). The codomain option applies
// to GammaDR only and defaults to {0,1,2,3}.
inline ExactResult exact(const Graph& g, Quantity q,
                         std::optional<Codomain> codomain = std::nullopt) {
  if (g.n() > kOracleMaxVertices) {
    throw std::invalid_argument(
        "oracle is limited to " + std::to_string(kOracleMaxVertices) +
        " vertices; use the ILP solver for larger graphs");
  }
  if (codomain && q != Quantity::kGammaDR) {
    throw std::invalid_argument("codomain option applies to GammaDR only");
  }
  ExactResult r;
  switch (q) {
    case Quantity::kGamma:
      r.set = detail::min_dominating_set(g);
      r.value = static_cast<int>(r.set.size());
      return r;
    case Quantity::kGammaR:
      return detail::search_counting_order(g, {0, 1, 2}, false);
    case Quantity::kGammaDR: {
      Codomain c = codomain.value_or(Codomain::kFull0123);
      std::vector<int> values = c == Codomain::kFull0123
                                    ? std::vector<int>{0, 1, 2, 3}
                                    : std::vector<int>{0, 2, 3};
      return detail::search_counting_order(g, std::move(values), true);
    }
  }
  return r;
}

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::kGamma: return "gamma";
    case Quantity::kGammaR: return "gammaR";
    case Quantity::kGammaDR: return "gammaDR";
  }
  return "?";
}

}  // namespace drdp
