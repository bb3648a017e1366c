#include <algorithm>

#include "widthforge/compiler.hpp"
#include "widthforge/errors.hpp"

namespace widthforge {
namespace {

VertexSet neighbours_in(const Graph& g, int x, const VertexSet& s) { return g.neighbors(x) & s; }

std::string count_str(std::uint64_t x) { return std::to_string(x); }

bool is_semi_matching(const Graph& g, const std::vector<Edge>& pairs) {
  // pairs are (x in U, y in V); G[X, Y] must be exactly these edges
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!g.adjacent(pairs[i].u, pairs[i].v)) return false;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (i != j && (pairs[i].u == pairs[j].u || pairs[i].v == pairs[j].v || g.adjacent(pairs[i].u, pairs[j].v)))
        return false;
  }
  return true;
}

Matching to_matching(const std::vector<Edge>& pairs, const VertexSet& u_side) {
  Matching m;
  m.kind = MatchingKind::cut_induced;
  m.cut = u_side;
  for (Edge e : pairs) {
    if (e.u > e.v) std::swap(e.u, e.v);
    m.edges.push_back(e);
  }
  return m;
}

struct Outcome {
  std::vector<Edge> pairs;  // (x, y)
  std::optional<Biclique> biclique;
};

class KP2OrBiclique {
 public:
  KP2OrBiclique(const Graph& g, int m) : g_(g), m_(m) {}

  std::uint64_t f(int n, int k) const { return f_threshold(n, k); }
  int g(int n, int k) const {
    return static_cast<int>(std::min<std::uint64_t>(g_threshold(m_, n, k), kMaxVertices + 1));
  }

  Outcome run(const VertexSet& u, const VertexSet& v, int n, int k) {
    const int x = u.first();
    if (x < 0) throw InternalError("extract_kP2_or_biclique: empty U during recursion");
    if (k == 1) {
      int y = neighbours_in(g_, x, v).first();
      if (y < 0) throw InternalError("extract_kP2_or_biclique: vertex without neighbour in V");
      return {{{x, y}}, std::nullopt};
    }
    if (n == 1) {
      VertexSet y;
      if (!has_independent_set(g_, neighbours_in(g_, x, v), m_, &y))
        throw InternalError("extract_kP2_or_biclique: neighbourhood lost its independent set");
      VertexSet xs;
      xs.set(x);
      return {{}, Biclique{xs, y}};
    }
    const VertexSet v1 = neighbours_in(g_, x, v);
    VertexSet rich, poor;
    VertexSet others = u;
    others.reset(x);
    for (int w = others.first(); w >= 0; w = others.next(w)) {
      if (has_independent_set(g_, neighbours_in(g_, w, v1), g(n - 1, k)))
        rich.set(w);
      else
        poor.set(w);
    }
    if (static_cast<std::uint64_t>(rich.count()) >= f(n - 1, k)) {
      Outcome out = run(rich, v1, n - 1, k);
      if (out.biclique) out.biclique->x.set(x);
      return out;
    }
    Outcome out = run(poor, v.minus(v1), n, k - 1);
    if (out.biclique) return out;
    VertexSet independent;
    if (!has_independent_set(g_, v1, g(n, k), &independent))
      throw InternalError("extract_kP2_or_biclique: alpha(N_V(x)) below threshold");
    VertexSet blocked;
    for (const Edge& e : out.pairs) blocked |= g_.neighbors(e.u);
    int y = independent.minus(blocked).first();
    if (y < 0) throw InternalError("extract_kP2_or_biclique: no neighbour of x anticomplete to X'");
    out.pairs.push_back({x, y});
    return out;
  }

 private:
  const Graph& g_;
  int m_;
};

}  // namespace

Matching extract_semi_matching(const Graph& g, const VertexSet& u_in, const VertexSet& v_in, int j, int l) {
  if (j < 1 || l < 1) throw InvalidArgument("extract_semi_matching: j and l must be positive");
  if (u_in.intersects(v_in)) throw InvalidArgument("extract_semi_matching: U and V intersect");
  if (!(u_in | v_in).is_subset_of(g.all_vertices()))
    throw InvalidArgument("extract_semi_matching: vertices outside the graph");
  for (int x = u_in.first(); x >= 0; x = u_in.next(x))
    if (!g.neighbors(x).intersects(v_in))
      throw InvalidArgument("extract_semi_matching: vertex " + std::to_string(x + 1) + " of U has no neighbour in V");
  for (int y = v_in.first(); y >= 0; y = v_in.next(y))
    if (neighbours_in(g, y, u_in).count() > j)
      throw InvalidArgument("extract_semi_matching: vertex " + std::to_string(y + 1) +
                            " of V has more than j neighbours in U");
  if (u_in.count() < 2 * j * l)
    throw InvalidArgument("extract_semi_matching: |U| = " + std::to_string(u_in.count()) + " is below 2jl = " +
                          std::to_string(2 * j * l));

  VertexSet u = u_in, v = v_in;
  std::vector<Edge> pairs;
  for (int remaining = l; remaining > 0; --remaining) {
    int x = -1, best = 0;
    for (int w = u.first(); w >= 0; w = u.next(w)) {
      int d = neighbours_in(g, w, v).count();
      if (x < 0 || d < best) {
        x = w;
        best = d;
      }
    }
    if (x < 0 || best == 0) throw InternalError("extract_semi_matching: recursion lost its invariant");
    const VertexSet nx = neighbours_in(g, x, v);
    const int y = nx.first();
    pairs.push_back({x, y});
    VertexSet next;
    for (int w = u.first(); w >= 0; w = u.next(w))
      if (w != x && neighbours_in(g, w, v) != nx) next.set(w);
    u = next.minus(g.neighbors(y));
    v = v.minus(nx);
  }
  if (!is_semi_matching(g, pairs)) throw InternalError("extract_semi_matching: output failed verification");
  return to_matching(pairs, u_in);
}

MatchingOrBiclique extract_kP2_or_biclique(const Graph& g, const VertexSet& u, const VertexSet& v, int n, int m,
                                           int k) {
  if (n < 1 || m < 1 || k < 1) throw InvalidArgument("extract_kP2_or_biclique: n, m and k must be positive");
  if (u.intersects(v)) throw InvalidArgument("extract_kP2_or_biclique: U and V intersect");
  if (!(u | v).is_subset_of(g.all_vertices()))
    throw InvalidArgument("extract_kP2_or_biclique: vertices outside the graph");
  if (!is_independent(g, u)) throw InvalidArgument("extract_kP2_or_biclique: U is not independent");
  if (static_cast<std::uint64_t>(u.count()) < f_threshold(n, k))
    throw InvalidArgument("extract_kP2_or_biclique: |U| = " + std::to_string(u.count()) + " is below 2^(n+k) = " +
                          count_str(f_threshold(n, k)));
  KP2OrBiclique search(g, m);
  const int need = search.g(n, k);
  for (int x = u.first(); x >= 0; x = u.next(x))
    if (!has_independent_set(g, neighbours_in(g, x, v), need))
      throw InvalidArgument("extract_kP2_or_biclique: alpha(N_V(" + std::to_string(x + 1) + ")) is below m*k^n = " +
                            count_str(g_threshold(m, n, k)));
  Outcome out = search.run(u, v, n, k);
  MatchingOrBiclique result;
  if (out.biclique) {
    const Biclique& b = *out.biclique;
    bool ok = b.x.count() == n && b.y.count() == m && b.x.is_subset_of(u) && b.y.is_subset_of(v) &&
              is_independent(g, b.x) && is_independent(g, b.y);
    for (int x = b.x.first(); ok && x >= 0; x = b.x.next(x)) ok = b.y.is_subset_of(g.neighbors(x));
    if (!ok) throw InternalError("extract_kP2_or_biclique: biclique failed verification");
    result.biclique = b;
  } else {
    if (static_cast<int>(out.pairs.size()) != k || !is_semi_matching(g, out.pairs))
      throw InternalError("extract_kP2_or_biclique: matching failed verification");
    result.matching = to_matching(out.pairs, u);
  }
  return result;
}

}  // namespace widthforge
