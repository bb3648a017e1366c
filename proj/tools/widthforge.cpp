#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "widthforge/branch_decomposition.hpp"
#include "widthforge/compiler.hpp"
#include "widthforge/constructions.hpp"
#include "widthforge/cut_functions.hpp"
#include "widthforge/errors.hpp"
#include "widthforge/generators.hpp"
#include "widthforge/io.hpp"
#include "widthforge/tree_decomposition.hpp"
#include "widthforge/verify.hpp"

namespace wf = widthforge;

namespace {

constexpr int kPass = 0;
constexpr int kInvariant = 1;
constexpr int kInput = 2;
constexpr int kCap = 3;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    wf::write_file(path, text);
}

wf::CutKind kind_arg(const std::string& name) {
  auto k = wf::parse_cut_kind(name);
  if (!k) throw wf::InvalidArgument("unknown cut kind '" + name + "' (mim, sim, mm, rank, eta)");
  return *k;
}

wf::SolveStrategy strategy_arg(const std::string& name) {
  if (name == "auto") return wf::SolveStrategy::automatic;
  if (name == "dp") return wf::SolveStrategy::subset_dp;
  if (name == "threshold") return wf::SolveStrategy::threshold;
  throw wf::InvalidArgument("unknown strategy '" + name + "' (auto, dp, threshold)");
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Width parameters of graphs: branch decompositions, tree decompositions, invariant suites"};
  app.require_subcommand(1);

  std::string graph_path, bd_path, td_path, out_path, kind_name = "sim", strategy = "auto";

  auto* width = app.add_subcommand("width", "Evaluate a branch decomposition under a cut function");
  width->add_option("graph", graph_path, "Graph file")->required();
  width->add_option("bd", bd_path, "Branch decomposition file")->required();
  width->add_option("-k,--kind", kind_name, "mim, sim, mm, rank or eta");
  bool per_edge = false;
  width->add_flag("--per-edge", per_edge, "Print the value of every tree edge");

  auto* solve = app.add_subcommand("solve", "Exact f-branch-width with an optimal decomposition");
  solve->add_option("graph", graph_path, "Graph file")->required();
  solve->add_option("-k,--kind", kind_name, "mim, sim, mm, rank or eta");
  solve->add_option("-s,--strategy", strategy, "auto, dp or threshold");
  solve->add_option("-o,--out", out_path, "Write the decomposition here");
  bool prune = false;
  solve->add_flag("--prune", prune, "Skip splits whose own cut exceeds the incumbent");

  auto* compile_td = app.add_subcommand("compile-td", "Turn a branch decomposition into a tree decomposition");
  compile_td->add_option("graph", graph_path, "Graph file")->required();
  compile_td->add_option("bd", bd_path, "Branch decomposition on V(G)")->required();
  compile_td->add_option("-o,--out", out_path, "Write the tree decomposition here");
  std::optional<int> pn, pm, pk;
  compile_td->add_option("-n", pn, "Biclique side n (inferred when omitted)");
  compile_td->add_option("-m", pm, "Biclique side m (inferred when omitted)");
  compile_td->add_option("-K", pk, "Induced matching bound k (inferred when omitted)");
  std::string stats_path;
  compile_td->add_option("--stats", stats_path, "Write key=value statistics here");
  bool full = false, check = false;
  compile_td->add_flag("--full-recompute", full, "Recompute every frontier set after each insertion");
  compile_td->add_flag("--check", check, "Check the parameter hypotheses and report warnings");

  auto* power = app.add_subcommand("power", "Graph power, optionally with the odd-power transfer check");
  power->add_option("graph", graph_path, "Graph file")->required();
  int r = 1;
  power->add_option("-r", r, "Exponent")->required();
  power->add_option("--bd", bd_path, "Check a sim decomposition of G on G^r");
  power->add_option("-o,--out", out_path, "Write G^r here");

  auto* gen = app.add_subcommand("gen", "Generate a family member");
  std::string family;
  std::vector<int> params;
  std::optional<std::uint32_t> seed;
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Seed (random-chordal)");
  gen->add_option("-o,--out", out_path, "Output file");

  auto* line = app.add_subcommand("line", "Line graph, optionally transporting a tree decomposition");
  line->add_option("graph", graph_path, "Graph file")->required();
  line->add_option("--td", td_path, "Tree decomposition of G to transport");
  std::string td_out;
  line->add_option("--td-out", td_out, "Where to write the transported decomposition");
  line->add_option("-o,--out", out_path, "Write L(G) here");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite and print CSV");
  std::string suite, corpus;
  int threads = 0;
  verify->add_option("suite", suite, "chains, monotonicity, compiler, powers, line-graphs, counterexample")
      ->required();
  verify->add_option("-c,--corpus", corpus, "Corpus spec (connected:N, all:N, edges:A-B, random:C:N:SEED, ...)");
  verify->add_option("-j,--threads", threads, "Worker threads (0 = hardware)");
  verify->add_option("-o,--out", out_path, "Write the CSV here");

  auto* triple = app.add_subcommand("triple", "Crossing induced matching in L(G) from a branch decomposition on E(G)");
  triple->add_option("graph", graph_path, "Graph file")->required();
  triple->add_option("bd", bd_path, "Branch decomposition on E(G)")->required();
  int tree_edge = 1, size = 1;
  triple->add_option("-e,--edge", tree_edge, "Tree edge (1-based, file order)");
  triple->add_option("-n", size, "Matching size to extract");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*width) {
      const auto g = wf::parse_graph(wf::read_file(graph_path));
      const auto bd = wf::parse_bd(wf::read_file(bd_path));
      wf::CutFunction f(g, kind_arg(kind_name));
      const auto report = wf::width_of(bd, f);
      std::cout << wf::cut_kind_name(f.kind()) << " width " << report.value << '\n';
      if (per_edge)
        for (std::size_t e = 0; e < report.per_edge.size(); ++e)
          std::cout << "edge " << e + 1 << ' ' << report.per_edge[e] << '\n';
      return kPass;
    }
    if (*solve) {
      const auto g = wf::parse_graph(wf::read_file(graph_path));
      wf::CutFunction f(g, kind_arg(kind_name));
      const auto report = wf::solve_branchwidth(f, {strategy_arg(strategy), prune, std::nullopt});
      std::cout << wf::cut_kind_name(f.kind()) << " width " << report.value << '\n';
      if (!out_path.empty()) wf::write_file(out_path, wf::serialize_bd(report.witness));
      return kPass;
    }
    if (*compile_td) {
      const auto g = wf::parse_graph(wf::read_file(graph_path));
      const auto bd = wf::parse_bd(wf::read_file(bd_path));
      auto params = wf::infer_parameters(g, bd).params;
      if (pn) params.n = *pn;
      if (pm) params.m = *pm;
      if (pk) params.k = *pk;
      const auto result = wf::compile(
          g, bd, params, {full ? wf::FrontierMode::full_recompute : wf::FrontierMode::incremental, check});
      const auto report = wf::validate(g, result.td);
      const int alpha = report.valid ? wf::alpha_of(g, result.td).value : -1;
      const auto bound = wf::alpha_bound(params.n, params.m, params.k);
      emit(out_path, wf::serialize_td(result.td, g.num_vertices()));
      std::ostringstream stats;
      stats << "n=" << params.n << "\nm=" << params.m << "\nk=" << params.k << "\nsteps=" << result.stats.steps
            << "\nbad=" << result.stats.bad << "\ngood=" << result.stats.good
            << "\nloop1_iterations=" << result.stats.loop1_iterations
            << "\nloop2_iterations=" << result.stats.loop2_iterations << "\nbags=" << result.td.num_nodes()
            << "\nalpha=" << alpha << "\nalpha_bound=" << bound << "\nvalid=" << (report.valid ? 1 : 0) << '\n';
      for (const auto& w : result.stats.warnings) stats << "warning=" << w << '\n';
      if (!stats_path.empty()) wf::write_file(stats_path, stats.str());
      for (const auto& w : result.stats.warnings) std::cerr << "warning: " << w << '\n';
      if (!report.valid || static_cast<std::uint64_t>(alpha) >= bound) {
        std::cerr << "compiled decomposition violates its guarantees\n";
        return kInvariant;
      }
      return kPass;
    }
    if (*power) {
      const auto g = wf::parse_graph(wf::read_file(graph_path));
      if (!bd_path.empty()) {
        const auto bd = wf::parse_bd(wf::read_file(bd_path));
        const auto t = wf::odd_power_transfer(g, bd, r);
        std::cout << "sim width on G " << t.on_graph.value << "\nsim width on G^" << r << ' ' << t.on_power.value
                  << '\n';
        if (!t.holds()) {
          std::vector<int> ones;
          for (int e : t.violations) ones.push_back(e + 1);
          std::cerr << "transfer fails on tree edges " << join(ones) << '\n';
          return kInvariant;
        }
        if (!out_path.empty()) wf::write_file(out_path, wf::serialize_graph(wf::graph_power(g, r)));
        return kPass;
      }
      emit(out_path, wf::serialize_graph(wf::graph_power(g, r)));
      return kPass;
    }
    if (*gen) {
      auto f = wf::parse_family(family);
      if (!f) throw wf::InvalidArgument("unknown family '" + family + "'");
      emit(out_path, wf::serialize_graph(wf::generate(*f, params, seed)));
      return kPass;
    }
    if (*line) {
      const auto g = wf::parse_graph(wf::read_file(graph_path));
      emit(out_path, wf::serialize_graph(wf::line_graph(g)));
      if (!td_path.empty()) {
        const auto parsed = wf::parse_td(wf::read_file(td_path));
        if (parsed.num_vertices != g.num_vertices())
          throw wf::InvalidArgument("tree decomposition is for a graph on " + std::to_string(parsed.num_vertices) +
                                    " vertices");
        const auto ltd = wf::line_graph_td(g, parsed.td);
        const std::string text = wf::serialize_td(ltd, g.num_edges());
        if (td_out.empty())
          std::cout << text;
        else
          wf::write_file(td_out, text);
      }
      return kPass;
    }
    if (*verify) {
      const auto report =
          wf::run_verify(suite, corpus.empty() ? std::nullopt : std::optional<std::string>(corpus), threads);
      emit(out_path, wf::to_csv(report));
      std::cerr << suite << ": " << report.passed << " passed, " << report.failed << " failed, " << report.other
                << " skipped or refused\n";
      return report.ok() ? kPass : kInvariant;
    }
    if (*triple) {
      const auto g = wf::parse_graph(wf::read_file(graph_path));
      const auto bd = wf::parse_bd(wf::read_file(bd_path));
      const auto result = wf::perfect_triple_extract(g, bd, tree_edge - 1, size);
      std::cout << "matching " << result.matching.size() << '\n';
      for (const auto& e : result.matching.edges) {
        const auto& a = g.edge(e.u);
        const auto& b = g.edge(e.v);
        std::cout << "pair " << e.u + 1 << ' ' << e.v + 1 << "  (" << a.u + 1 << '-' << a.v + 1 << ") ("
                  << b.u + 1 << '-' << b.v + 1 << ")\n";
      }
      return kPass;
    }
  } catch (const wf::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kCap;
  } catch (const wf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const wf::InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInput;
  } catch (const wf::InternalError& e) {
    std::cerr << "internal invariant failed: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kPass;
}
