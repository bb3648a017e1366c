#include "widthforge/verify.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "widthforge/branch_decomposition.hpp"
#include "widthforge/compiler.hpp"
#include "widthforge/constructions.hpp"
#include "widthforge/corpus.hpp"
#include "widthforge/cut_functions.hpp"
#include "widthforge/errors.hpp"
#include "widthforge/generators.hpp"
#include "widthforge/tree_decomposition.hpp"

namespace widthforge {
namespace {

using Rows = std::vector<VerifyRow>;

class RowSink {
 public:
  RowSink(std::string suite, std::string graph_id) : suite_(std::move(suite)), graph_id_(std::move(graph_id)) {}

  void check(const std::string& check, const std::string& values, const std::string& relation, bool ok) {
    add(check, values, relation, ok ? "pass" : "fail");
  }
  void add(const std::string& check, const std::string& values, const std::string& relation,
           const std::string& result) {
    rows_.push_back({suite_, graph_id_, check, values, relation, result});
  }
  Rows take() { return std::move(rows_); }

 private:
  std::string suite_;
  std::string graph_id_;
  Rows rows_;
};

std::string kv(std::initializer_list<std::pair<const char*, long long>> items) {
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += ';';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

int width(const Graph& g, CutKind kind) {
  CutFunction f(g, kind);
  return solve_branchwidth(f).value;
}

// Parameters not involving edges are meaningless below two edges: the
// branch-width convention returns f(empty) = 0 there.
constexpr const char* kFewEdges = "skipped (fewer than 2 edges: bw is 0 by the |S| <= 1 convention)";

void chains(const Graph& g, RowSink& out) {
  const int simw = width(g, CutKind::sim);
  const int mimw = width(g, CutKind::mim);
  const int rw = width(g, CutKind::rank);
  const int mmw = width(g, CutKind::mm);
  const int bw = width(g, CutKind::eta);
  const int tw = exact_treewidth(g).value;
  const int ta = exact_tree_alpha(g).value;
  const int edges = g.num_edges();

  out.check("sim<=mim", kv({{"simw", simw}, {"mimw", mimw}}), "simw <= mimw", simw <= mimw);
  out.check("mim<=rw", kv({{"mimw", mimw}, {"rw", rw}}), "mimw <= rw", mimw <= rw);
  if (edges >= 2)
    out.check("rw<=bw", kv({{"rw", rw}, {"bw", bw}}), "rw <= bw", rw <= bw);
  else
    out.add("rw<=bw", kv({{"rw", rw}, {"bw", bw}}), "rw <= bw", kFewEdges);

  out.check("bw-1<=tw", kv({{"bw", bw}, {"tw", tw}}), "bw - 1 <= tw", bw - 1 <= tw);
  if (bw >= 2)
    out.check("tw<=3bw/2-1", kv({{"bw", bw}, {"tw", tw}}), "tw <= floor(3bw/2) - 1", tw <= 3 * bw / 2 - 1);
  else
    out.add("tw<=3bw/2-1", kv({{"bw", bw}, {"tw", tw}}), "tw <= floor(3bw/2) - 1",
            "skipped (bw < 2: the upper bound needs bw >= 2)");

  if (edges >= 2)
    out.check("mmw<=bw", kv({{"mmw", mmw}, {"bw", bw}}), "mmw <= bw", mmw <= bw);
  else
    out.add("mmw<=bw", kv({{"mmw", mmw}, {"bw", bw}}), "mmw <= bw", kFewEdges);
  out.check("bw<=tw+1", kv({{"bw", bw}, {"tw", tw}}), "bw <= tw + 1", bw <= tw + 1);
  if (edges >= 1)
    out.check("tw+1<=3mmw", kv({{"tw", tw}, {"mmw", mmw}}), "tw + 1 <= 3 mmw", tw + 1 <= 3 * mmw);
  else
    out.add("tw+1<=3mmw", kv({{"tw", tw}, {"mmw", mmw}}), "tw + 1 <= 3 mmw",
            "skipped (edgeless: tw + 1 = 1 while mmw = 0)");

  out.check("sim<=tree-alpha", kv({{"simw", simw}, {"tree_alpha", ta}}), "simw <= tree-alpha", simw <= ta);
  out.check("tree-alpha<=tw+1", kv({{"tree_alpha", ta}, {"tw", tw}}), "tree-alpha <= tw + 1", ta <= tw + 1);

  // Induced matchings in d-degenerate graphs and the mim/mm comparison.
  const int d = degeneracy(g).value;
  const int mu = max_matching_size(g);
  const int im = max_induced_matching_size(g);
  if (d >= 1)
    out.check("induced-matching-degenerate", kv({{"mu", mu}, {"im", im}, {"d", d}}), "im * (4d - 1) >= mu",
              static_cast<long long>(im) * (4 * d - 1) >= mu);
  auto [num, den] = max_average_degree(g);
  if (2 * num > den)
    out.check("mimw-vs-mmw", kv({{"mimw", mimw}, {"mmw", mmw}, {"mad_num", num}, {"mad_den", den}}),
              "mimw * (2 mad - 1) >= mmw", static_cast<long long>(mimw) * (2 * num - den) >=
                                                static_cast<long long>(mmw) * den);
}

int simw_of_line(const Graph& g) { return g.num_edges() == 0 ? 0 : width(line_graph(g), CutKind::sim); }

void monotonicity(const Graph& g, RowSink& out) {
  const int m = g.num_edges();
  if (m >= 3 && m <= 8) {
    const int base = simw_of_line(g);
    for (const Edge& e : g.edges()) {
      const int contracted = simw_of_line(contract_edge(g, e));
      out.check("line-contraction e=" + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1),
                kv({{"simw_LG", base}, {"simw_LGe", contracted}}), "simw(L(G)) >= simw(L(G/e))",
                base >= contracted);
    }
    const int simw = width(g, CutKind::sim);
    for (int v = 0; v < g.num_vertices(); ++v) {
      const int deleted = width(delete_vertex(g, v), CutKind::sim);
      out.check("vertex-deletion v=" + std::to_string(v + 1), kv({{"simw_G", simw}, {"simw_Gv", deleted}}),
                "simw(G) >= simw(G - v)", simw >= deleted);
    }
  }
  if (m >= 1 && m <= 9) {
    const int mimw = width(line_graph(g), CutKind::mim);
    const int bw = width(g, CutKind::eta);
    out.check("line-mim-vs-bw", kv({{"mimw_LG", mimw}, {"bw", bw}}), "mimw(L(G)) <= bw(G)", mimw <= bw);
  }
}

void compiler(const Graph& g, RowSink& out) {
  CutFunction f(g, CutKind::mim);
  const WidthReport opt = solve_branchwidth(f);
  if (g.num_vertices() < 2) {
    out.add("compile", kv({{"n_vertices", g.num_vertices()}}), "", "skipped (fewer than 2 vertices)");
    return;
  }
  const InferredParams inferred = infer_parameters(g, opt.witness);
  const CompilerParams& p = inferred.params;
  const CompileResult result = compile(g, opt.witness, p);
  const TdReport report = validate(g, result.td);
  out.check("T1-T3", kv({{"bags", result.td.num_nodes()}, {"violations", static_cast<long long>(report.violations.size())}}),
            "valid tree decomposition", report.valid);
  if (!report.valid) return;
  const int alpha = alpha_of(g, result.td).value;
  const std::uint64_t bound = alpha_bound(p.n, p.m, p.k);
  out.check("alpha-bound",
            kv({{"alpha", alpha}, {"n", p.n}, {"m", p.m}, {"k", p.k}, {"bound", static_cast<long long>(bound)}}),
            "alpha < 6(2^(n+k-1) + m k^(n+1))", static_cast<std::uint64_t>(alpha) < bound);
  if (g.num_vertices() <= 8) {
    const int ta = exact_tree_alpha(g).value;
    out.check("alpha>=tree-alpha", kv({{"alpha", alpha}, {"tree_alpha", ta}}), "alpha >= tree-alpha", alpha >= ta);
  }
  const CompileResult full = compile(g, opt.witness, p, {FrontierMode::full_recompute, false});
  out.check("modes-agree", kv({{"steps", result.stats.steps}, {"steps_full", full.stats.steps}}),
            "incremental td == recomputed td", full.td == result.td && full.labels == result.labels);
}

void powers(const Graph& g, RowSink& out) {
  CutFunction f(g, CutKind::sim);
  const WidthReport opt = solve_branchwidth(f);
  for (int r = 2; r <= 5; ++r) {
    const std::string tag = "r=" + std::to_string(r);
    if (r % 2 == 0) {
      out.add("per-edge " + tag, kv({{"r", r}}), "cutsim_{G^r} <= cutsim_G", "refused (odd-only theorem)");
      continue;
    }
    const PowerTransfer t = odd_power_transfer(g, opt.witness, r);
    out.check("per-edge " + tag,
              kv({{"r", r}, {"width_G", t.on_graph.value}, {"width_Gr", t.on_power.value},
                  {"violations", static_cast<long long>(t.violations.size())}}),
              "cutsim_{G^r}(e) <= cutsim_G(e) for every tree edge", t.holds());
    const int power = width(graph_power(g, r), CutKind::sim);
    out.check("simw " + tag, kv({{"r", r}, {"simw_G", opt.value}, {"simw_Gr", power}}), "simw(G^r) <= simw(G)",
              power <= opt.value);
  }
}

void line_graphs(const Graph& g, RowSink& out) {
  if (g.num_edges() == 0) {
    out.add("line-td", "", "", "skipped (edgeless)");
    return;
  }
  const Graph lg = line_graph(g);
  const TreeWidthResult tw = exact_treewidth(g);
  const TreeDecomposition ltd = line_graph_td(g, tw.td);
  const TdReport report = validate(lg, ltd);
  out.check("line-td-valid", kv({{"bags", ltd.num_nodes()}}), "line_graph_td is a tree decomposition of L(G)",
            report.valid);
  if (!report.valid) return;
  bool per_bag = true;
  for (int t = 0; t < ltd.num_nodes(); ++t)
    if (independence_number_size(lg, ltd.bag(t)) > tw.td.bag(t).count()) per_bag = false;
  out.check("line-td-bag-alpha", kv({{"tw", tw.value}}), "alpha(L(G)[B_t]) <= |X_t| for every node", per_bag);
  const int ta = exact_tree_alpha(lg).value;
  out.check("line-tree-alpha", kv({{"tree_alpha_LG", ta}, {"tw", tw.value}}), "tree-alpha(L(G)) <= tw(G) + 1",
            ta <= tw.value + 1);
  const int mimw = width(lg, CutKind::mim);
  const int bw = width(g, CutKind::eta);
  out.check("line-mim-vs-bw", kv({{"mimw_LG", mimw}, {"bw", bw}}), "mimw(L(G)) <= bw(G)", mimw <= bw);
}

// Rows that do not depend on the corpus: rook graphs and complete graphs.
Rows line_graph_constructions() {
  Rows rows;
  for (int n = 1; n <= 4; ++n)
    for (int m = n; m <= 4; ++m) {
      RowSink out("line-graphs", "K" + std::to_string(n) + "," + std::to_string(m));
      const Graph lk = line_graph(generate(Family::biclique, {n, m}));
      const Graph rook = generate(Family::rook, {n, m});
      out.check("rook-isomorphism", kv({{"n", n}, {"m", m}}), "L(K_{n,m}) isomorphic to R_{n,m}",
                canonical_form(lk) == canonical_form(rook));
      if (n >= 2) {
        CutFunction f(rook, CutKind::sim);
        const int w = width_of(rook_caterpillar_bd(n, m), f).value;
        out.check("rook-caterpillar", kv({{"width", w}, {"ceil_n_3", (n + 2) / 3}}), "width <= ceil(n/3)",
                  w <= (n + 2) / 3);
      }
      for (auto& r : out.take()) rows.push_back(std::move(r));
    }
  for (int n = 3; n <= 6; ++n) {
    RowSink out("line-graphs", "K" + std::to_string(n));
    const Graph kn = generate(Family::complete, {n});
    CutFunction eta(kn, CutKind::eta);
    const WidthReport bw = solve_branchwidth(eta);
    const Graph lk = line_graph(kn);
    CutFunction sim(lk, CutKind::sim);
    const int w = width_of(bw.witness, sim).value;
    const int ceil = (2 * n + 2) / 3;
    out.check("complete-bw", kv({{"bw", bw.value}, {"ceil_2n_3", ceil}}), "bw(K_n) = ceil(2n/3)", bw.value == ceil);
    out.check("complete-line-sim", kv({{"width", w}, {"ceil_2n_3", ceil}}),
              "sim width of the bw-optimal decomposition on L(K_n) <= ceil(2n/3)", w <= ceil);
    for (auto& r : out.take()) rows.push_back(std::move(r));
  }
  return rows;
}

Rows counterexample_rows() {
  Rows rows;
  for (int d = 1; d <= 4; ++d) {
    RowSink out("counterexample", "example-d" + std::to_string(d));
    const Graph g = generate(Family::degeneracy_counterexample, {d});
    const int deg = degeneracy(g).value;
    const int mu = max_matching_size(g);
    const int im = max_induced_matching_size(g);
    out.check("bipartite", kv({{"d", d}}), "bipartite", bipartition(g).has_value());
    out.check("degenerate", kv({{"d", d}, {"degeneracy", deg}}), "degeneracy <= d", deg <= d);
    out.check("matching", kv({{"d", d}, {"mu", mu}}), "max matching = 2d", mu == 2 * d);
    out.check("induced-matching", kv({{"d", d}, {"im", im}}), "max induced matching = 1", im == 1);
    for (auto& r : out.take()) rows.push_back(std::move(r));
  }
  return rows;
}

using Checker = std::function<void(const Graph&, RowSink&)>;

Checker checker_for(const std::string& suite) {
  if (suite == "chains") return chains;
  if (suite == "monotonicity") return monotonicity;
  if (suite == "compiler") return compiler;
  if (suite == "powers") return powers;
  if (suite == "line-graphs") return line_graphs;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"chains", "monotonicity", "compiler",
                                               "powers", "line-graphs",  "counterexample"};
  return suites;
}

std::string default_corpus(const std::string& suite) {
  if (suite == "monotonicity") return "edges:1-9";
  if (suite == "compiler") return "compiler";
  if (suite == "counterexample") return "";
  return "connected:6";
}

std::string csv_header() { return "suite,graph_id,check,values,relation,result"; }

std::string to_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& r : report.rows)
    out << csv_field(r.suite) << ',' << csv_field(r.graph_id) << ',' << csv_field(r.check) << ','
        << csv_field(r.values) << ',' << csv_field(r.relation) << ',' << csv_field(r.result) << '\n';
  return out.str();
}

VerifyReport run_verify(const std::string& suite, const std::optional<std::string>& corpus, int threads) {
  const auto& suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw InvalidArgument("unknown suite '" + suite + "'");

  Rows rows;
  if (suite == "counterexample") {
    rows = counterexample_rows();
  } else {
    const auto entries = load_corpus(corpus.value_or(default_corpus(suite)));
    const Checker check = checker_for(suite);
    std::vector<Rows> per_graph(entries.size());
    std::vector<std::string> errors(entries.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < entries.size(); i = next++) {
        RowSink sink(suite, entries[i].id);
        try {
          check(entries[i].graph, sink);
        } catch (const CapExceeded& e) {
          sink.add("cap", "", "", std::string("skipped (") + e.what() + ")");
        } catch (const std::exception& e) {
          sink.add("error", "", "", std::string("fail (") + e.what() + ")");
        }
        per_graph[i] = sink.take();
      }
    };
    int count = threads > 0 ? threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::jthread> pool;
    for (int t = 0; t < count; ++t) pool.emplace_back(work);
    pool.clear();
    for (auto& r : per_graph)
      for (auto& row : r) rows.push_back(std::move(row));
    if (suite == "line-graphs" && !corpus)
      for (auto& row : line_graph_constructions()) rows.push_back(std::move(row));
  }

  VerifyReport report;
  report.rows = std::move(rows);
  for (const auto& r : report.rows) {
    if (r.result == "pass")
      ++report.passed;
    else if (r.result.starts_with("fail"))
      ++report.failed;
    else
      ++report.other;
  }
  return report;
}

}  // namespace widthforge
