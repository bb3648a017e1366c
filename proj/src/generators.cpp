#include "widthforge/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "widthforge/errors.hpp"

namespace widthforge {
namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::path, "path", 1},
    {Family::cycle, "cycle", 1},
    {Family::complete, "complete", 1},
    {Family::biclique, "biclique", 2},
    {Family::grid, "grid", 2},
    {Family::elementary_wall, "elementary-wall", 2},
    {Family::net_wall, "net-wall", 2},
    {Family::rook, "rook", 2},
    {Family::kt_box_kt, "Kt-box-Kt", 1},
    {Family::kt_box_st, "Kt-box-St", 1},
    {Family::degeneracy_counterexample, "degeneracy-counterexample", 1},
    {Family::l_caterpillar, "l-caterpillar", 1},
    {Family::random_chordal, "random-chordal", 1},
    {Family::star, "star", 1},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw InvalidArgument("unknown family");
}

std::string coord(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Graph grid_graph(int h, int w) {
  Graph g(h * w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) g.set_label(i * w + j, coord(i + 1, j + 1));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      if (j + 1 < w) g.add_edge(i * w + j, i * w + j + 1);
      if (i + 1 < h) g.add_edge(i * w + j, (i + 1) * w + j);
    }
  return g;
}

Graph elementary_wall(int h, int r) {
  const int w = 2 * r;
  // Grid of height h and width 2r; the vertical edge between rows i and
  // i+1 of column j (both 1-based) survives iff i and j have equal parity.
  Graph grid(h * w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) grid.set_label(i * w + j, coord(i + 1, j + 1));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) {
      if (j + 1 < w) grid.add_edge(i * w + j, i * w + j + 1);
      if (i + 1 < h && ((i + 1) % 2 == (j + 1) % 2)) grid.add_edge(i * w + j, (i + 1) * w + j);
    }
  VertexSet keep;
  for (int v = 0; v < grid.num_vertices(); ++v)
    if (grid.degree(v) != 1) keep.set(v);
  return induced_subgraph(grid, keep);
}

Graph net_wall(int h, int r) {
  Graph wall = elementary_wall(h, r);
  const int n = wall.num_vertices();
  // port[u][y]: new vertex standing for u on its edge towards y
  std::vector<std::map<int, int>> port(n);
  Graph g;
  for (int u = 0; u < n; ++u) {
    const VertexSet& nb = wall.neighbors(u);
    if (wall.degree(u) == 3) {
      for (int y = nb.first(); y >= 0; y = nb.next(y))
        port[u][y] = g.add_vertex(wall.label(u) + ">" + wall.label(y));
    } else {
      int id = g.add_vertex(wall.label(u));
      for (int y = nb.first(); y >= 0; y = nb.next(y)) port[u][y] = id;
    }
  }
  for (int u = 0; u < n; ++u) {
    if (wall.degree(u) != 3) continue;
    std::vector<int> ids;
    for (auto& [y, id] : port[u]) ids.push_back(id);
    g.add_edge(ids[0], ids[1]);
    g.add_edge(ids[0], ids[2]);
    g.add_edge(ids[1], ids[2]);
  }
  for (const Edge& e : wall.edges()) g.add_edge(port[e.u][e.v], port[e.v][e.u]);
  return g;
}

Graph random_chordal(int n, std::uint32_t seed) {
  // Tree of cliques: each new vertex attaches to a nonempty subset of an
  // earlier bag, so reversed insertion order is a perfect elimination order.
  std::minstd_rand rng(seed);
  Graph g(n);
  std::vector<std::vector<int>> bags{{0}};
  for (int v = 1; v < n; ++v) {
    std::vector<int> bag = bags[rng() % bags.size()];
    const std::size_t take = 1 + rng() % bag.size();
    for (std::size_t i = 0; i < take; ++i) std::swap(bag[i], bag[i + rng() % (bag.size() - i)]);
    bag.resize(take);
    std::sort(bag.begin(), bag.end());
    for (int u : bag) g.add_edge(u, v);
    bag.push_back(v);
    bags.push_back(std::move(bag));
  }
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::optional<std::pair<int, int>> parse_coord(const std::string& s) {
  int i = 0, j = 0;
  char open = 0, comma = 0, close = 0;
  std::istringstream in(s);
  if (in >> open >> i >> comma >> j >> close && open == '(' && comma == ',' && close == ')' && in.peek() == EOF)
    return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(const std::string& name) {
  for (const auto& i : kFamilies)
    if (name == i.name) return i.family;
  return std::nullopt;
}

int family_arity(Family f) { return info(f).arity; }

Graph generate(const FamilySpec& spec) {
  const auto& fi = info(spec.family);
  const std::string name = fi.name;
  require(static_cast<int>(spec.params.size()) == fi.arity,
          name + " takes " + std::to_string(fi.arity) + " parameter(s)");
  for (int p : spec.params) require(p >= 1, name + ": all size parameters must be >= 1");
  require(!spec.seed || spec.family == Family::random_chordal, name + " does not take a seed");
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path: {
      Graph g(p[0]);
      for (int i = 0; i + 1 < p[0]; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case Family::cycle: {
      require(p[0] >= 3, "cycle: length must be >= 3");
      Graph g(p[0]);
      for (int i = 0; i + 1 < p[0]; ++i) g.add_edge(i, i + 1);
      g.add_edge(0, p[0] - 1);
      return g;
    }
    case Family::complete: {
      Graph g(p[0]);
      for (int i = 0; i < p[0]; ++i)
        for (int j = i + 1; j < p[0]; ++j) g.add_edge(i, j);
      return g;
    }
    case Family::biclique: {
      Graph g(p[0] + p[1]);
      for (int i = 0; i < p[0]; ++i) g.set_label(i, "a" + std::to_string(i + 1));
      for (int j = 0; j < p[1]; ++j) g.set_label(p[0] + j, "b" + std::to_string(j + 1));
      for (int i = 0; i < p[0]; ++i)
        for (int j = 0; j < p[1]; ++j) g.add_edge(i, p[0] + j);
      return g;
    }
    case Family::grid:
      return grid_graph(p[0], p[1]);
    case Family::elementary_wall:
      require(p[0] >= 2, "elementary-wall: height must be >= 2");
      return elementary_wall(p[0], p[1]);
    case Family::net_wall:
      require(p[0] >= 2, "net-wall: wall height must be >= 2");
      return net_wall(p[0], p[1]);
    case Family::rook: {
      const int n = p[0], m = p[1];
      Graph g(n * m);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) g.set_label(i * m + j, coord(i + 1, j + 1));
      for (int a = 0; a < n * m; ++a)
        for (int b = a + 1; b < n * m; ++b)
          if (a / m == b / m || a % m == b % m) g.add_edge(a, b);
      return g;
    }
    case Family::kt_box_kt:
    case Family::kt_box_st: {
      const int t = p[0];
      Graph g(2 * t);
      for (int i = 0; i < t; ++i) {
        g.set_label(i, "a" + std::to_string(i + 1));
        g.set_label(t + i, "b" + std::to_string(i + 1));
      }
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
          g.add_edge(i, j);
          if (spec.family == Family::kt_box_kt) g.add_edge(t + i, t + j);
        }
      for (int i = 0; i < t; ++i) g.add_edge(i, t + i);
      return g;
    }
    case Family::degeneracy_counterexample: {
      const int d = p[0];
      Graph g(4 * d);
      for (int layer = 0; layer < 4; ++layer)
        for (int i = 0; i < d; ++i)
          g.set_label(layer * d + i, "V" + std::to_string(layer + 1) + ":" + std::to_string(i + 1));
      for (int layer = 0; layer < 3; ++layer)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) g.add_edge(layer * d + i, (layer + 1) * d + j);
      return g;
    }
    case Family::l_caterpillar: {
      const int l = p[0];
      Graph g(2 * l);
      for (int i = 0; i < l; ++i) {
        g.set_label(i, "s" + std::to_string(i + 1));
        g.set_label(l + i, "t" + std::to_string(i + 1));
      }
      for (int i = 0; i < l; ++i) g.add_edge(i, l + i);
      for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case Family::random_chordal:
      return random_chordal(p[0], spec.seed.value_or(1));
    case Family::star: {
      Graph g(p[0] + 1);
      g.set_label(0, "c");
      for (int i = 1; i <= p[0]; ++i) {
        g.set_label(i, "l" + std::to_string(i));
        g.add_edge(0, i);
      }
      return g;
    }
  }
  throw InvalidArgument("unknown family");
}

FamilyReport verify_family(const Graph& g, const FamilySpec& spec) {
  FamilyReport report;
  auto fail = [&](std::string why) {
    report.pass = false;
    report.failures.push_back(std::move(why));
  };
  Graph ref;
  try {
    ref = generate(spec);
  } catch (const Error& e) {
    fail(std::string("invalid spec: ") + e.what());
    return report;
  }
  if (g.num_vertices() != ref.num_vertices()) fail("vertex count differs");
  if (g.num_edges() != ref.num_edges()) fail("edge count differs");
  if (!report.pass) return report;
  if (degree_sequence(g) != degree_sequence(ref)) fail("degree sequence differs");

  switch (spec.family) {
    case Family::biclique:
    case Family::grid:
    case Family::elementary_wall:
    case Family::degeneracy_counterexample:
    case Family::l_caterpillar:
    case Family::star:
    case Family::path:
      if (!bipartition(g)) fail("not bipartite");
      break;
    case Family::random_chordal:
    case Family::complete:
      if (!is_chordal(g)) fail("not chordal");
      break;
    default:
      break;
  }
  if (spec.family == Family::l_caterpillar || spec.family == Family::path || spec.family == Family::star)
    if (!is_connected(g) || g.num_edges() != g.num_vertices() - 1) fail("not a tree");

  // Coordinate rule for labelled boards.
  if (spec.family == Family::rook || spec.family == Family::grid) {
    std::vector<std::pair<int, int>> at;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (auto c = parse_coord(g.label(v))) at.push_back(*c);
    if (static_cast<int>(at.size()) == g.num_vertices()) {
      for (int a = 0; a < g.num_vertices(); ++a)
        for (int b = a + 1; b < g.num_vertices(); ++b) {
          auto [i1, j1] = at[a];
          auto [i2, j2] = at[b];
          bool want = spec.family == Family::rook ? (i1 == i2 || j1 == j2)
                                                  : (std::abs(i1 - i2) + std::abs(j1 - j2) == 1);
          if (want != g.adjacent(a, b)) {
            fail("coordinate adjacency rule violated at " + g.label(a) + " " + g.label(b));
            a = g.num_vertices();
            break;
          }
        }
    }
  }
  if (spec.family == Family::net_wall && g.has_labels()) {
    std::map<std::string, VertexSet> groups;
    for (int v = 0; v < g.num_vertices(); ++v) {
      auto pos = g.label(v).find('>');
      if (pos != std::string::npos) groups[g.label(v).substr(0, pos)].set(v);
    }
    for (const auto& [origin, members] : groups)
      if (members.count() != 3 || !is_clique(g, members)) fail("replaced vertex " + origin + " is not a triangle");
  }
  if (report.pass && g.num_vertices() <= 12 && canonical_form(g) != canonical_form(ref))
    fail("not isomorphic to the family member");
  return report;
}

Graph generate(Family family, std::vector<int> params, std::optional<std::uint32_t> seed) {
  return generate(FamilySpec{family, std::move(params), seed});
}

}  // namespace widthforge
