#include "widthforge/graph.hpp"

#include <cstdlib>
#include <deque>

#include "widthforge/errors.hpp"

namespace widthforge {

int size_cap(int fallback) {
  if (const char* env = std::getenv("WIDTHFORGE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return fallback;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
  adj_.resize(n);
}

int Graph::add_vertex(std::string label) {
  if (num_vertices() >= kMaxVertices)
    throw InvalidArgument("graph already has the maximum of " + std::to_string(kMaxVertices) +
                          " vertices");
  adj_.emplace_back();
  if (!label.empty() || has_labels()) {
    labels_.resize(adj_.size() - 1);
    labels_.push_back(std::move(label));
  }
  return num_vertices() - 1;
}

int Graph::add_edge(int u, int v) {
  const int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (adj_[u].test(v))
    throw InvalidArgument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  if (u > v) std::swap(u, v);
  adj_[u].set(v);
  adj_[v].set(u);
  edges_.push_back({u, v});
  return num_edges() - 1;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= num_vertices() || !adj_[u].test(v)) return -1;
  for (int i = 0; i < num_edges(); ++i)
    if (edges_[i].u == u && edges_[i].v == v) return i;
  return -1;
}

const std::string& Graph::label(int v) const {
  static const std::string empty;
  if (v < 0 || v >= static_cast<int>(labels_.size())) return empty;
  return labels_[v];
}

void Graph::set_label(int v, std::string label) {
  if (labels_.size() < adj_.size()) labels_.resize(adj_.size());
  labels_[v] = std::move(label);
}

Graph line_graph(const Graph& g) {
  if (g.num_edges() == 0) throw InvalidArgument("line graph undefined for edgeless input");
  const int m = g.num_edges();
  if (m > kMaxVertices)
    throw InvalidArgument("line graph would exceed " + std::to_string(kMaxVertices) + " vertices");
  Graph lg(m);
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(i);
    lg.set_label(i, std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = g.edge(i);
      const Edge& b = g.edge(j);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) lg.add_edge(i, j);
    }
  return lg;
}

std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      const VertexSet& nb = g.neighbors(x);
      for (int y = nb.first(); y >= 0; y = nb.next(y)) {
        if (dist[s][y] < 0) {
          dist[s][y] = dist[s][x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

Graph graph_power(const Graph& g, int r) {
  if (r < 1) throw InvalidArgument("graph power requires r >= 1");
  const int n = g.num_vertices();
  auto dist = distances(g);
  Graph p(n);
  for (int v = 0; v < n; ++v)
    if (!g.label(v).empty()) p.set_label(v, g.label(v));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dist[u][v] >= 1 && dist[u][v] <= r) p.add_edge(u, v);
  return p;
}

Graph contract_edge(const Graph& g, Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  if (e.u < 0 || e.v >= g.num_vertices() || !g.adjacent(e.u, e.v))
    throw InvalidArgument("contract_edge: edge is not in the graph");
  const int n = g.num_vertices();
  auto remap = [&](int x) {
    if (x == e.v) return e.u;
    return x > e.v ? x - 1 : x;
  };
  Graph out(n - 1);
  for (int x = 0; x < n; ++x)
    if (x != e.v && !g.label(x).empty()) out.set_label(remap(x), g.label(x));
  for (const Edge& f : g.edges()) {
    if (f == e) continue;
    int a = remap(f.u), b = remap(f.v);
    if (a != b && !out.adjacent(a, b)) out.add_edge(a, b);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> id(g.num_vertices(), -1);
  int next = 0;
  for (int v = keep.first(); v >= 0 && v < g.num_vertices(); v = keep.next(v)) id[v] = next++;
  Graph out(next);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (id[v] >= 0 && !g.label(v).empty()) out.set_label(id[v], g.label(v));
  for (const Edge& f : g.edges())
    if (id[f.u] >= 0 && id[f.v] >= 0) out.add_edge(id[f.u], id[f.v]);
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw InvalidArgument("delete_vertex: no such vertex");
  VertexSet keep = g.all_vertices();
  keep.reset(v);
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen.test(s)) continue;
    VertexSet comp, frontier;
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet grow;
      for (int x = frontier.first(); x >= 0; x = frontier.next(x)) grow |= g.neighbors(x);
      frontier = grow.minus(comp);
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      const VertexSet& nb = g.neighbors(x);
      for (int y = nb.first(); y >= 0; y = nb.next(y)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v >= 0; v = s.next(v)) {
    VertexSet others = s;
    others.reset(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search, then check the reverse order is a perfect
  // elimination ordering.
  const int n = g.num_vertices();
  std::vector<int> weight(n, 0), order;
  VertexSet numbered;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered.test(v) && (best < 0 || weight[v] > weight[best])) best = v;
    numbered.set(best);
    order.push_back(best);
    const VertexSet& nb = g.neighbors(best);
    for (int y = nb.first(); y >= 0; y = nb.next(y))
      if (!numbered.test(y)) ++weight[y];
  }
  // Vertex order[i]: its neighbours numbered earlier must form a clique.
  VertexSet earlier;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (!is_clique(g, g.neighbors(v) & earlier)) return false;
    earlier.set(v);
  }
  return true;
}

std::pair<int, int> max_average_degree(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 20) throw CapExceeded("max_average_degree", n, 20);
  std::pair<int, int> best{0, 1};
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    int vertices = std::popcount(mask), twice_edges = 0;
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1U) && (mask >> e.v & 1U)) twice_edges += 2;
    if (static_cast<long>(twice_edges) * best.second > static_cast<long>(best.first) * vertices)
      best = {twice_edges, vertices};
  }
  return best;
}

}  // namespace widthforge
