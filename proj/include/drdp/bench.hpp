#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "drdp/corpus.hpp"
#include "drdp/formulations.hpp"
#include "drdp/graph.hpp"
#include "drdp/greedy.hpp"
#include "drdp/oracle.hpp"
#include "drdp/pipeline.hpp"

namespace drdp {

struct BenchInstance {
  std::string name;
  Graph graph;
  std::uint64_t seed = 0;
};

struct BenchRecord {
  std::string instance;
  int n = 0;
  int m = 0;
  std::string method;
  std::optional<double> value;
  std::string status;  // Optimal, TimeLimit, Infeasible, Heuristic, Exact
  double wall_time = 0.0;
  std::int64_t work = 0;  // B&B nodes or greedy iterations
  std::uint64_t seed = 0;
};

struct BenchOptions {
  double time_limit = 300.0;
  int jobs = 1;
  bool with_strengthened = false;
  bool with_oracle = false;  // only for graphs the oracle accepts
};

enum class BenchSuite { kGrid, kGnp, kTree, kCorpus };

inline BenchSuite parse_suite(const std::string& s) {
  if (s == "grid") return BenchSuite::kGrid;
  if (s == "gnp") return BenchSuite::kGnp;
  if (s == "tree") return BenchSuite::kTree;
  if (s == "corpus") return BenchSuite::kCorpus;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

inline std::vector<BenchInstance> suite_instances(BenchSuite suite,
                                                  std::uint64_t seed) {
  std::vector<BenchInstance> out;
  switch (suite) {
    case BenchSuite::kGrid:
      for (auto [r, c] : {std::pair{5, 10}, {5, 15}, {10, 10}}) {
        out.push_back({grid_name(r, c), generate_grid(r, c), 0});
      }
      break;
    case BenchSuite::kGnp:
      for (int n : {20, 30}) {
        for (double p : {0.2, 0.5, 0.8}) {
          for (std::uint64_t s = seed; s < seed + 3; ++s) {
            out.push_back({gnp_name(n, p, s), generate_gnp(n, p, s), s});
          }
        }
      }
      break;
    case BenchSuite::kTree:
      for (int n : {50, 100, 200}) {
        for (std::uint64_t s = seed; s < seed + 3; ++s) {
          out.push_back({tree_name(n, s), generate_random_tree(n, s), s});
        }
      }
      break;
    case BenchSuite::kCorpus:
      for (CorpusEntry& e : desk_corpus(seed)) {
        out.push_back({e.name, std::move(e.graph), e.seed});
      }
      break;
  }
  return out;
}

inline std::vector<std::string> bench_methods(const BenchOptions& opts) {
  std::vector<std::string> methods;
  for (FormulationKind k : kAllFormulations) {
    methods.push_back(to_string(k));
    if (opts.with_strengthened &&
        (k == FormulationKind::kDrdp1P || k == FormulationKind::kDrdp2P)) {
      methods.push_back(to_string(FormulationSpec(k, true)));
    }
  }
  methods.push_back("greedy");
  if (opts.with_oracle) methods.push_back("oracle");
  return methods;
}

inline BenchRecord run_method(const BenchInstance& inst,
                              const std::string& method,
                              const BenchOptions& opts) {
  using Clock = std::chrono::steady_clock;
  BenchRecord rec;
  rec.instance = inst.name;
  rec.n = inst.graph.n();
  rec.m = inst.graph.m();
  rec.method = method;
  rec.seed = inst.seed;
  const auto start = Clock::now();
  if (method == "greedy") {
    GreedyResult g = greedy(inst.graph, CoverProblem::kDrdp);
    rec.value = static_cast<double>(g.W2);
    rec.status = "Heuristic";
    rec.work = static_cast<std::int64_t>(g.selected.size());
  } else if (method == "oracle") {
    if (inst.graph.n() <= kOracleMaxVertices) {
      rec.value = exact(inst.graph, Quantity::kGammaDR).value;
      rec.status = "Exact";
    } else {
      rec.status = "Skipped";
    }
  } else {
    bool strengthen = !method.empty() && method.back() == '+';
    std::string base = strengthen ? method.substr(0, method.size() - 1) : method;
    SolverConfig cfg;
    cfg.time_limit = opts.time_limit;
    GraphSolve s = solve_graph(inst.graph,
                               FormulationSpec(parse_formulation_kind(base), strengthen),
                               cfg);
    rec.value = s.result.objective;
    if (rec.value) rec.value = std::round(*rec.value * 1e6) / 1e6;
    rec.status = to_string(s.result.status);
    rec.work = s.result.nodes;
  }
  rec.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return rec;
}

// Runs every (instance, method) pair; the result order is instance-major
// and independent of `jobs`.
inline std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& instances,
                                          const BenchOptions& opts) {
  const std::vector<std::string> methods = bench_methods(opts);
  const std::size_t total = instances.size() * methods.size();
  std::vector<BenchRecord> records(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      records[i] = run_method(instances[i / methods.size()],
                              methods[i % methods.size()], opts);
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return records;
}

inline std::string format_value(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream out;
  double r = std::round(*v);
  if (std::abs(*v - r) < 1e-9) {
    out << static_cast<long long>(r);
  } else {
    out << *v;
  }
  return out.str();
}

inline std::string format_time(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  return buf;
}

inline std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string out = "instance,n,m,method,value,status,time_s,nodes,seed\n";
  for (const BenchRecord& r : records) {
    out += r.instance + "," + std::to_string(r.n) + "," +
           std::to_string(r.m) + "," + r.method + "," + format_value(r.value) +
           "," + r.status + "," + format_time(r.wall_time) + "," +
           std::to_string(r.work) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

// One row per instance, with value / time / nodes per method. "best" is the
// smallest value found.
inline std::string to_markdown(const std::vector<BenchRecord>& records) {
  std::vector<std::string> methods;
  std::vector<std::string> instances;
  std::map<std::pair<std::string, std::string>, const BenchRecord*> cell;
  for (const BenchRecord& r : records) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
    if (std::find(instances.begin(), instances.end(), r.instance) ==
        instances.end()) {
      instances.push_back(r.instance);
    }
    cell[{r.instance, r.method}] = &r;
  }
  std::string out = "| Instance | n | m | best |";
  std::string rule = "|---|---|---|---|";
  for (const std::string& m : methods) {
    out += " " + m + " | time | nodes |";
    rule += "---|---|---|";
  }
  out += "\n" + rule + "\n";
  for (const std::string& inst : instances) {
    const BenchRecord* any = nullptr;
    std::optional<double> best;
    for (const std::string& m : methods) {
      auto it = cell.find({inst, m});
      if (it == cell.end()) continue;
      any = it->second;
      if (it->second->value && (!best || *it->second->value < *best)) {
        best = it->second->value;
      }
    }
    out += "| " + inst + " | " + std::to_string(any->n) + " | " +
           std::to_string(any->m) + " | " + format_value(best) + " |";
    for (const std::string& m : methods) {
      auto it = cell.find({inst, m});
      if (it == cell.end()) {
        out += " | | |";
        continue;
      }
      const BenchRecord& r = *it->second;
      std::string value = format_value(r.value);
      if (r.status == "TimeLimit") value += " (limit)";
      out += " " + value + " | " + format_time(r.wall_time) + " | " +
             std::to_string(r.work) + " |";
    }
    out += "\n";
  }
  return out;
}

}  // namespace drdp
