#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drdp {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Thrown for malformed edge-list input; carries the 1-based line number.
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
// kept sorted ascending, which makes equality and serialization canonical.
class Graph {
 public:
  Graph() : Graph(1, {}) {}

  Graph(int n, std::span<const Edge> edges) : adjacency_(check_order(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") out of range");
      }
      if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      }
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
        throw std::invalid_argument("duplicate edge");
      }
    }
    edge_count_ = static_cast<int>(edges.size());
  }

  int n() const { return static_cast<int>(adjacency_.size()); }
  int m() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  static std::vector<std::vector<Vertex>> check_order(int n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    return std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n));
  }

  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

struct GraphParams {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  std::optional<int> diameter;  // nullopt: disconnected
  std::optional<int> girth;     // nullopt: acyclic
  bool connected = false;
};

// splitmix64; the only randomness source in the library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound).
  int below(int bound) {
    auto k = static_cast<int>(uniform() * static_cast<double>(bound));
    return k < bound ? k : bound - 1;
  }

 private:
  std::uint64_t state_;
};

inline Graph generate_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  std::vector<Edge> edges;
  auto id = [cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
      if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
    }
  }
  return Graph(rows * cols, edges);
}

// Erdős–Rényi G(n, p): pairs (u, v), u < v, visited in lexicographic order,
// one 53-bit uniform draw each.
inline Graph generate_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Uniform labeled tree from a random Prüfer sequence.
inline Graph generate_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Graph(1, {});
  SplitMix64 rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = rng.below(n);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[c] == 1) leaves.push(c);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return Graph(n, edges);
}

inline Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

// K_{1,leaves} with center 0.
inline Graph make_star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

inline Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph make_empty(int n) { return Graph(n, {}); }

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.n(), edges);
}

// BFS distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline GraphParams compute_params(const Graph& g) {
  GraphParams p;
  p.n = g.n();
  p.m = g.m();
  p.min_degree = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.n(); ++v) {
    p.max_degree = std::max(p.max_degree, g.degree(v));
    p.min_degree = std::min(p.min_degree, g.degree(v));
  }

  int diameter = 0;
  bool connected = true;
  int girth = std::numeric_limits<int>::max();
  for (Vertex s = 0; s < g.n(); ++s) {
    // BFS tree from s; every non-tree edge closes a closed walk through s of
    // length dist[u] + dist[w] + 1, and the minimum over all roots is the girth.
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          girth = std::min(girth, dist[u] + dist[w] + 1);
        }
      }
    }
    if (static_cast<int>(queue.size()) != g.n()) connected = false;
    for (int d : dist) diameter = std::max(diameter, d);
  }
  p.connected = connected;
  if (connected) p.diameter = diameter;
  if (girth != std::numeric_limits<int>::max()) p.girth = girth;
  return p;
}

// ---------------------------------------------------------------------------
// Edge-list text format:
//   n m
//   u v      (m lines, 0 <= u < v < n)
// Lines starting with '#' and blank lines are ignored.

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string content;
  if (!next_content_line(content)) {
    throw GraphFormatError(line_no, "missing header line 'n m'");
  }
  long long n = 0, m = 0;
  {
    std::istringstream header(content);
    std::string rest;
    if (!(header >> n >> m) || (header >> rest)) {
      throw GraphFormatError(line_no, "header must be 'n m'");
    }
  }
  if (n < 1 || m < 0 || m > n * (n - 1) / 2) {
    throw GraphFormatError(line_no, "invalid vertex or edge count");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<Edge> seen;
  while (next_content_line(content)) {
    std::istringstream row(content);
    long long u = 0, v = 0;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest)) {
      throw GraphFormatError(line_no, "edge line must be 'u v'");
    }
    if (!(0 <= u && u < v && v < n)) {
      throw GraphFormatError(line_no, "edge must satisfy 0 <= u < v < n");
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw GraphFormatError(line_no, "more edges than declared in header");
    }
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw GraphFormatError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphFormatError(line_no, "fewer edges than declared in header");
  }
  return Graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return parse_edge_list(in);
}

inline void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << serialize_edge_list(g);
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

// FNV-1a over the canonical serialization, as 16 hex digits.
inline std::string graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace drdp
