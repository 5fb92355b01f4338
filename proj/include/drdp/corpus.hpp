#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "drdp/graph.hpp"

namespace drdp {

struct CorpusEntry {
  std::string name;
  std::string family;  // path, cycle, star, complete, gnp, tree
  Graph graph;
  std::uint64_t seed = 0;  // 0 for deterministic families
};

inline std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", p);
  return buf;
}

inline std::string gnp_name(int n, double p, std::uint64_t seed) {
  return "Gnp-" + std::to_string(n) + "-" + format_probability(p) + "-s" +
         std::to_string(seed);
}

inline std::string tree_name(int n, std::uint64_t seed) {
  return "Tree-" + std::to_string(n) + "-s" + std::to_string(seed);
}

inline std::string grid_name(int rows, int cols) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "Grid%02dx%02d", rows, cols);
  return buf;
}

// Small graphs used for cross-checking the formulations against the
// oracle: paths, cycles, stars and complete graphs up to nine vertices,
// plus eight seeded G(n, p) graphs and eight seeded trees for every
// n in 4..9 (seeds base .. base + 7). 225 graphs.
inline std::vector<CorpusEntry> desk_corpus(std::uint64_t base_seed = 1) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= 9; ++n) {
    out.push_back({"Path-" + std::to_string(n), "path", make_path(n), 0});
  }
  for (int n = 3; n <= 9; ++n) {
    out.push_back({"Cycle-" + std::to_string(n), "cycle", make_cycle(n), 0});
  }
  for (int leaves = 1; leaves <= 8; ++leaves) {
    out.push_back({"Star-" + std::to_string(leaves), "star", make_star(leaves), 0});
  }
  for (int n = 1; n <= 9; ++n) {
    out.push_back({"K-" + std::to_string(n), "complete", make_complete(n), 0});
  }
  for (int n = 4; n <= 9; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      for (std::uint64_t s = base_seed; s < base_seed + 8; ++s) {
        out.push_back({gnp_name(n, p, s), "gnp", generate_gnp(n, p, s), s});
      }
    }
  }
  for (int n = 4; n <= 9; ++n) {
    for (std::uint64_t s = base_seed; s < base_seed + 8; ++s) {
      out.push_back({tree_name(n, s), "tree", generate_random_tree(n, s), s});
    }
  }
  return out;
}

// Graphs on 10 to 12 vertices for oracle-only checks.
inline std::vector<CorpusEntry> oracle_corpus(std::uint64_t base_seed = 1) {
  std::vector<CorpusEntry> out;
  for (int n = 10; n <= 12; ++n) {
    out.push_back({"Path-" + std::to_string(n), "path", make_path(n), 0});
    out.push_back({"Cycle-" + std::to_string(n), "cycle", make_cycle(n), 0});
    out.push_back({"Star-" + std::to_string(n - 1), "star", make_star(n - 1), 0});
    out.push_back({"K-" + std::to_string(n), "complete", make_complete(n), 0});
    for (double p : {0.2, 0.5, 0.8}) {
      for (std::uint64_t s = base_seed; s < base_seed + 3; ++s) {
        out.push_back({gnp_name(n, p, s), "gnp", generate_gnp(n, p, s), s});
      }
    }
    for (std::uint64_t s = base_seed; s < base_seed + 3; ++s) {
      out.push_back({tree_name(n, s), "tree", generate_random_tree(n, s), s});
    }
  }
  return out;
}

}  // namespace drdp
