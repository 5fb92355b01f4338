#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drdp/graph.hpp"

namespace drdp {

// A function f: V -> {0,1,2,3}. Both double Roman and Roman labelings use it.
struct Labeling {
  std::vector<int> values;

  Labeling() = default;
  explicit Labeling(std::vector<int> v) : values(std::move(v)) {}

  int size() const { return static_cast<int>(values.size()); }
  int operator[](Vertex v) const { return values[v]; }
  int weight() const { return std::accumulate(values.begin(), values.end(), 0); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(values[i]);
    }
    return out;
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

// Outcome of a feasibility predicate; `violation` names the first bad vertex.
struct CheckResult {
  bool ok = true;
  std::optional<Vertex> violation;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(Vertex v) { return {false, v}; }
};

namespace detail {
inline void require_size(const Graph& g, const Labeling& f) {
  if (f.size() != g.n()) {
    throw std::invalid_argument("labeling has " + std::to_string(f.size()) +
                                " entries for a graph on " +
                                std::to_string(g.n()) + " vertices");
  }
}
}  // namespace detail

// Double Roman domination: a 0-vertex needs a 3-neighbor or two 2-neighbors;
// a 1-vertex needs a neighbor valued at least 2.
inline CheckResult is_drdf(const Graph& g, const Labeling& f) {
  detail::require_size(g, f);
  for (int value : f.values) {
    if (value < 0 || value > 3) {
      throw std::invalid_argument("labeling value outside {0,1,2,3}");
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int value = f[v];
    if (value >= 2) continue;
    int twos = 0, threes = 0;
    for (Vertex u : g.neighbors(v)) {
      if (f[u] == 2) ++twos;
      if (f[u] == 3) ++threes;
    }
    bool ok = value == 0 ? (threes >= 1 || twos >= 2) : (threes + twos >= 1);
    if (!ok) return CheckResult::fail(v);
  }
  return CheckResult::pass();
}

inline CheckResult is_rdf(const Graph& g, const Labeling& f) {
  detail::require_size(g, f);
  for (int value : f.values) {
    if (value < 0 || value > 2) {
      throw std::invalid_argument("Roman labeling value outside {0,1,2}");
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (f[v] != 0) continue;
    bool covered = false;
    for (Vertex u : g.neighbors(v)) covered = covered || f[u] == 2;
    if (!covered) return CheckResult::fail(v);
  }
  return CheckResult::pass();
}

inline bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set) {
  std::vector<char> dominated(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s : set) {
    if (s < 0 || s >= g.n()) throw std::invalid_argument("vertex out of range");
    dominated[s] = 1;
    for (Vertex u : g.neighbors(s)) dominated[u] = 1;
  }
  for (char d : dominated) {
    if (!d) return false;
  }
  return true;
}

inline Labeling all_threes(const Graph& g) {
  return Labeling(std::vector<int>(static_cast<std::size_t>(g.n()), 3));
}

}  // namespace drdp
