// Command-line front end for the drdp library.
#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "drdp/drdp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoIncumbent = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

drdp::Graph load_graph(const std::string& path) {
  try {
    return drdp::read_edge_list(path);
  } catch (const drdp::GraphFormatError& e) {
    throw IoError(path + ": " + e.what());
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

drdp::FormulationSpec make_spec(const std::string& kind, bool strengthen) {
  try {
    return drdp::FormulationSpec(drdp::parse_formulation_kind(kind), strengthen);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string optional_text(const std::optional<int>& v, const char* none) {
  return v ? std::to_string(*v) : std::string(none);
}

std::string optional_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string("n/a");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double Roman domination: exact, greedy and brute-force solvers"};
  app.require_subcommand(1);

  // gen
  CLI::App* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen->require_subcommand(1);
  std::string gen_out;
  int grid_rows = 0, grid_cols = 0, gnp_n = 0, tree_n = 0;
  double gnp_p = 0.0;
  std::uint64_t gnp_seed = 1, tree_seed = 1;
  CLI::App* gen_grid = gen->add_subcommand("grid", "R x C grid graph");
  gen_grid->add_option("R", grid_rows)->required()->check(CLI::PositiveNumber);
  gen_grid->add_option("C", grid_cols)->required()->check(CLI::PositiveNumber);
  gen_grid->add_option("-o,--output", gen_out, "Output file")->required();
  CLI::App* gen_gnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  gen_gnp->add_option("N", gnp_n)->required()->check(CLI::NonNegativeNumber);
  gen_gnp->add_option("P", gnp_p)->required()->check(CLI::Range(0.0, 1.0));
  gen_gnp->add_option("--seed", gnp_seed)->required();
  gen_gnp->add_option("-o,--output", gen_out, "Output file")->required();
  CLI::App* gen_tree = gen->add_subcommand("tree", "Uniform random labeled tree");
  gen_tree->add_option("N", tree_n)->required()->check(CLI::PositiveNumber);
  gen_tree->add_option("--seed", tree_seed)->required();
  gen_tree->add_option("-o,--output", gen_out, "Output file")->required();

  std::string graph_file;

  CLI::App* params = app.add_subcommand("params", "Print graph parameters");
  params->add_option("FILE", graph_file)->required();

  CLI::App* bounds = app.add_subcommand("bounds", "Print the valid-inequality constants");
  bounds->add_option("FILE", graph_file)->required();

  const std::vector<std::string> kinds = {"drdp1", "drdp2", "drdp1p",
                                          "drdp2p", "drdp1pp", "drdp2pp"};
  std::string kind;
  bool strengthen = false;

  CLI::App* model = app.add_subcommand("model", "Write a formulation in LP format");
  std::string model_out;
  model->add_option("FILE", graph_file)->required();
  model->add_option("--formulation", kind)->required()->check(CLI::IsMember(kinds));
  model->add_flag("--strengthen", strengthen, "Add the valid inequalities");
  model->add_option("-o,--output", model_out, "Output .lp file")->required();

  CLI::App* solve = app.add_subcommand("solve", "Solve a formulation by branch and bound");
  double time_limit = 300.0;
  bool no_integral_prune = false;
  solve->add_option("FILE", graph_file)->required();
  solve->add_option("--formulation", kind)->required()->check(CLI::IsMember(kinds));
  solve->add_flag("--strengthen", strengthen, "Add the valid inequalities");
  solve->add_option("--time-limit", time_limit, "Seconds")->check(CLI::PositiveNumber);
  solve->add_flag("--no-integral-prune", no_integral_prune,
                  "Do not round node bounds up to integers");

  CLI::App* greedy_cmd = app.add_subcommand("greedy", "Greedy covering heuristic");
  std::string problem;
  greedy_cmd->add_option("FILE", graph_file)->required();
  greedy_cmd->add_option("--problem", problem)
      ->required()
      ->check(CLI::IsMember({"drdp", "rdp"}));

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exact value by enumeration");
  std::string quantity;
  std::string codomain;
  oracle_cmd->add_option("FILE", graph_file)->required();
  oracle_cmd->add_option("--quantity", quantity)
      ->required()
      ->check(CLI::IsMember({"gamma", "gammaR", "gammaDR"}));
  oracle_cmd->add_option("--codomain", codomain)->check(CLI::IsMember({"full", "reduced"}));

  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite;
  std::string csv_path, md_path;
  drdp::BenchOptions bench_opts;
  std::uint64_t bench_seed = 1;
  bench->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"grid", "gnp", "tree", "corpus"}));
  bench->add_option("--jobs", bench_opts.jobs)->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv_path, "Write records as CSV");
  bench->add_option("--md", md_path, "Write a markdown table");
  bench->add_option("--seed", bench_seed);
  bench->add_option("--time-limit", bench_opts.time_limit, "Seconds per solve")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--with-strengthened", bench_opts.with_strengthened,
                  "Also run drdp1p+ and drdp2p+");
  bench->add_flag("--with-oracle", bench_opts.with_oracle,
                  "Also run the oracle where it applies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      drdp::Graph g;
      if (*gen_grid) {
        g = drdp::generate_grid(grid_rows, grid_cols);
      } else if (*gen_gnp) {
        g = drdp::generate_gnp(gnp_n, gnp_p, gnp_seed);
      } else {
        g = drdp::generate_random_tree(tree_n, tree_seed);
      }
      write_text(gen_out, drdp::serialize_edge_list(g));
      std::cout << "wrote " << gen_out << " n " << g.n() << " m " << g.m() << "\n";
      return kExitOk;
    }

    if (*params) {
      drdp::GraphParams p = drdp::compute_params(load_graph(graph_file));
      std::cout << "n " << p.n << "\n"
                << "m " << p.m << "\n"
                << "max_degree " << p.max_degree << "\n"
                << "min_degree " << p.min_degree << "\n"
                << "diameter " << optional_text(p.diameter, "disconnected") << "\n"
                << "girth " << optional_text(p.girth, "acyclic") << "\n"
                << "connected " << (p.connected ? "yes" : "no") << "\n";
      return kExitOk;
    }

    if (*bounds) {
      std::optional<drdp::BoundSet> b =
          drdp::compute_bounds(drdp::compute_params(load_graph(graph_file)));
      if (!b) {
        std::cout << "no bounds (graph has no edges)\n";
        return kExitOk;
      }
      std::cout << "gamma_lower " << b->gamma_lower << "\n"
                << "L1 " << b->L1 << "\n"
                << "L2 " << optional_text(b->L2) << "\n"
                << "L3 " << b->L3 << "\n"
                << "U1 " << b->U1 << "\n"
                << "U2 " << optional_text(b->U2) << "\n";
      return kExitOk;
    }

    if (*model) {
      drdp::Graph g = load_graph(graph_file);
      drdp::FormulationSpec spec = make_spec(kind, strengthen);
      std::optional<drdp::BoundSet> b = drdp::compute_bounds(drdp::compute_params(g));
      if (spec.strengthen && !b) {
        throw UsageError("--strengthen needs a graph with at least one edge");
      }
      drdp::IlpModel m = drdp::build_formulation(g, spec, b);
      write_text(model_out, drdp::export_lp(m));
      std::cout << "wrote " << model_out << " variables " << m.num_variables()
                << " constraints " << m.num_constraints() << "\n";
      return kExitOk;
    }

    if (*solve) {
      drdp::Graph g = load_graph(graph_file);
      drdp::SolverConfig cfg;
      cfg.time_limit = time_limit;
      cfg.integral_objective = !no_integral_prune;
      drdp::GraphSolve s = drdp::solve_graph(g, make_spec(kind, strengthen), cfg);
      std::cout << "formulation " << drdp::to_string(s.spec) << "\n"
                << "status " << drdp::to_string(s.result.status) << "\n";
      if (!s.labeling) {
        std::cerr << "error: no incumbent within the time limit\n";
        return s.result.status == drdp::SolveStatus::kTimeLimit ? kExitNoIncumbent
                                                                 : 1;
      }
      drdp::CheckResult check = drdp::is_drdf(g, *s.labeling);
      if (!check) {
        std::cerr << "error: extracted labeling fails at vertex "
                  << check.violation.value_or(-1) << "\n";
        return 1;
      }
      if (s.labeling->weight() != drdp::rounded_objective(s.result)) {
        std::cerr << "error: labeling weight " << s.labeling->weight()
                  << " differs from objective\n";
        return 1;
      }
      std::cout << "objective " << drdp::rounded_objective(s.result) << "\n"
                << "nodes " << s.result.nodes << "\n"
                << "labeling " << s.labeling->to_string() << "\n";
      return kExitOk;
    }

    if (*greedy_cmd) {
      drdp::Graph g = load_graph(graph_file);
      drdp::CoverProblem cp =
          problem == "drdp" ? drdp::CoverProblem::kDrdp : drdp::CoverProblem::kRdp;
      drdp::GreedyResult r = drdp::greedy(g, cp);
      std::cout << "W1 " << r.W1 << " W2 " << r.W2 << "\n"
                << "labeling " << r.labeling.to_string() << "\n";
      return kExitOk;
    }

    if (*oracle_cmd) {
      drdp::Graph g = load_graph(graph_file);
      drdp::Quantity q = quantity == "gamma"    ? drdp::Quantity::kGamma
                         : quantity == "gammaR" ? drdp::Quantity::kGammaR
                                                : drdp::Quantity::kGammaDR;
      std::optional<drdp::Codomain> c;
      if (!codomain.empty()) {
        c = codomain == "full" ? drdp::Codomain::kFull0123 : drdp::Codomain::kReduced023;
      }
      drdp::ExactResult r;
      try {
        r = drdp::exact(g, q, c);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << r.value << "\n";
      if (q == drdp::Quantity::kGamma) {
        for (std::size_t i = 0; i < r.set.size(); ++i) {
          std::cout << (i ? " " : "") << r.set[i];
        }
        std::cout << "\n";
      } else {
        std::cout << r.labeling.to_string() << "\n";
      }
      return kExitOk;
    }

    if (*bench) {
      std::vector<drdp::BenchInstance> instances =
          drdp::suite_instances(drdp::parse_suite(suite), bench_seed);
      std::vector<drdp::BenchRecord> records = drdp::run_bench(instances, bench_opts);
      if (!csv_path.empty()) write_text(csv_path, drdp::to_csv(records));
      if (!md_path.empty()) write_text(md_path, drdp::to_markdown(records));
      for (const drdp::BenchRecord& r : records) {
        std::cout << r.instance << " " << r.method << " " << r.status << " "
                  << drdp::format_value(r.value) << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
