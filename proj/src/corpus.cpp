#include "widthforge/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "widthforge/errors.hpp"
#include "widthforge/generators.hpp"
#include "widthforge/io.hpp"

namespace widthforge {
namespace {

// Canonical form -> representative, so iteration order is deterministic.
using Catalogue = std::map<std::pair<int, std::string>, Graph>;

std::vector<Graph> values(const Catalogue& c) {
  std::vector<Graph> out;
  for (const auto& [key, g] : c) out.push_back(g);
  return out;
}

void add(Catalogue& c, const Graph& g) { c.try_emplace({g.num_edges(), canonical_form(g)}, g); }

Graph with_vertex(const Graph& g, unsigned neighbours) {
  Graph h = g;
  int v = h.add_vertex();
  for (int u = 0; u < g.num_vertices(); ++u)
    if (neighbours >> u & 1U) h.add_edge(u, v);
  return h;
}

int parse_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("malformed corpus spec '" + spec + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

std::vector<CorpusEntry> named(const std::string& prefix, const std::vector<Graph>& graphs) {
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    out.push_back({prefix + "-n" + std::to_string(graphs[i].num_vertices()) + "-m" +
                       std::to_string(graphs[i].num_edges()) + "-" + std::to_string(i + 1),
                   graphs[i]});
  return out;
}

std::vector<CorpusEntry> compiler_mix() {
  std::vector<CorpusEntry> out;
  auto family = [&](const std::string& id, Family f, std::vector<int> params, std::optional<std::uint32_t> seed = {}) {
    out.push_back({id, generate(f, std::move(params), seed)});
  };
  family("K2", Family::complete, {2});
  for (int n = 3; n <= 12; ++n) family("C" + std::to_string(n), Family::cycle, {n});
  for (int n = 3; n <= 10; ++n) family("P" + std::to_string(n), Family::path, {n});
  family("grid-2x3", Family::grid, {2, 3});
  family("grid-3x3", Family::grid, {3, 3});
  family("grid-3x4", Family::grid, {3, 4});
  family("grid-2x6", Family::grid, {2, 6});
  family("wall-2x2", Family::elementary_wall, {2, 2});
  family("wall-3x2", Family::elementary_wall, {3, 2});
  family("net-wall-2x2", Family::net_wall, {2, 2});
  family("star-5", Family::star, {5});
  family("K33", Family::biclique, {3, 3});
  family("K24", Family::biclique, {2, 4});
  family("rook-3x3", Family::rook, {3, 3});
  family("rook-3x4", Family::rook, {3, 4});
  family("K3boxK3", Family::kt_box_kt, {3});
  family("K4boxK4", Family::kt_box_kt, {4});
  family("K5boxS5", Family::kt_box_st, {5});
  family("counterexample-2", Family::degeneracy_counterexample, {2});
  family("counterexample-3", Family::degeneracy_counterexample, {3});
  family("caterpillar-5", Family::l_caterpillar, {5});
  for (std::uint32_t seed = 1; seed <= 10; ++seed)
    family("chordal-10-s" + std::to_string(seed), Family::random_chordal, {10}, seed);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    int n = 7 + static_cast<int>(seed % 6);
    out.push_back({"random-" + std::to_string(n) + "-s" + std::to_string(seed), random_graph(n, 0.3, seed)});
  }
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 7) throw InvalidArgument("all_graphs supports 0..7 vertices");
  Catalogue level;
  add(level, Graph(0));
  for (int size = 1; size <= n; ++size) {
    Catalogue next;
    for (const auto& [key, g] : level)
      for (unsigned mask = 0; mask < (1U << g.num_vertices()); ++mask) add(next, with_vertex(g, mask));
    level = std::move(next);
  }
  return values(level);
}

std::vector<Graph> connected_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Graph& g : all_graphs(n))
      if (is_connected(g)) out.push_back(g);
  return out;
}

std::vector<Graph> graphs_with_edges(int m) {
  if (m < 0 || m > 12) throw InvalidArgument("graphs_with_edges supports 0..12 edges");
  Catalogue level;
  add(level, Graph(0));
  for (int size = 1; size <= m; ++size) {
    Catalogue next;
    for (const auto& [key, g] : level) {
      const int n = g.num_vertices();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) {
            Graph h = g;
            h.add_edge(u, v);
            add(next, h);
          }
      for (int u = 0; u < n; ++u) {
        Graph h = g;
        h.add_edge(u, h.add_vertex());
        add(next, h);
      }
      Graph h = g;
      int a = h.add_vertex(), b = h.add_vertex();
      h.add_edge(a, b);
      add(next, h);
    }
    level = std::move(next);
  }
  return values(level);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) g.add_edge(u, v);
    }
  return g;
}

std::vector<CorpusEntry> load_corpus(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw InvalidArgument("empty corpus spec");
  const std::string& kind = parts[0];
  if (kind == "connected" && parts.size() == 2) return named("conn", connected_graphs(parse_int(parts[1], spec)));
  if (kind == "all" && parts.size() == 2) return named("all", all_graphs(parse_int(parts[1], spec)));
  if (kind == "edges" && parts.size() == 2) {
    auto range = split(parts[1], '-');
    if (range.size() != 2) throw InvalidArgument("malformed corpus spec '" + spec + "'");
    int lo = parse_int(range[0], spec), hi = parse_int(range[1], spec);
    std::vector<CorpusEntry> out;
    for (int m = lo; m <= hi; ++m)
      for (auto& e : named("edges", graphs_with_edges(m))) out.push_back(std::move(e));
    return out;
  }
  if (kind == "random" && parts.size() == 4) {
    int count = parse_int(parts[1], spec), max_n = parse_int(parts[2], spec);
    std::uint64_t seed = static_cast<std::uint64_t>(parse_int(parts[3], spec));
    if (max_n < 2 || max_n > kMaxVertices) throw InvalidArgument("random corpus needs 2..256 vertices");
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    for (int i = 0; i < count; ++i) {
      int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
      double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      out.push_back({"random-" + std::to_string(i + 1), random_graph(n, p, rng())});
    }
    return out;
  }
  if (kind == "compiler" && parts.size() == 1) return compiler_mix();
  if (kind == "file" && parts.size() >= 2) {
    std::string path = spec.substr(5);
    return {{path, parse_graph(read_file(path))}};
  }
  throw InvalidArgument("unknown corpus spec '" + spec + "'");
}

}  // namespace widthforge
