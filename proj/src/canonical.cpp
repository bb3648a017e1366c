#include <algorithm>
#include <string>
#include <vector>

#include "widthforge/graph.hpp"

namespace widthforge {
namespace {

using Partition = std::vector<std::vector<int>>;  // ordered cells

// Equitable refinement. Cells are split by the count of neighbours in every
// cell; new cells are ordered by that signature so the result is invariant.
Partition refine(const std::vector<std::vector<char>>& adj, Partition p) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> cell_of(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < p.size(); ++c)
      for (int v : p[c]) cell_of[v] = static_cast<int>(c);
    Partition next;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sig;
      for (int v : cell) {
        std::vector<int> counts(p.size(), 0);
        for (int w = 0; w < n; ++w)
          if (adj[v][w]) ++counts[cell_of[w]];
        sig.emplace_back(std::move(counts), v);
      }
      std::sort(sig.begin(), sig.end());
      std::vector<int> cur{sig[0].second};
      for (std::size_t i = 1; i < sig.size(); ++i) {
        if (sig[i].first != sig[i - 1].first) {
          next.push_back(cur);
          cur.clear();
          changed = true;
        }
        cur.push_back(sig[i].second);
      }
      next.push_back(cur);
    }
    p = std::move(next);
  }
  return p;
}

// True when the cell is a clique or an independent set whose members have the
// same neighbours outside it; any permutation of such a cell is an automorphism.
bool twin_cell(const std::vector<std::vector<char>>& adj, const std::vector<int>& cell) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> in(n, 0);
  for (int v : cell) in[v] = 1;
  const int a = cell[0];
  const char inner = adj[a][cell[1]];
  for (int v : cell) {
    for (int w : cell)
      if (v != w && adj[v][w] != inner) return false;
    for (int w = 0; w < n; ++w)
      if (!in[w] && adj[v][w] != adj[a][w]) return false;
  }
  return true;
}

void search(const std::vector<std::vector<char>>& adj, const Partition& p, std::string& best) {
  const int n = static_cast<int>(adj.size());
  auto target = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
  if (target == p.end()) {
    std::vector<int> order;
    for (const auto& c : p) order.push_back(c[0]);
    std::string cert;
    cert.reserve(static_cast<std::size_t>(n) * n / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cert.push_back(adj[order[i]][order[j]] ? '1' : '0');
    if (best.empty() || cert < best) best = std::move(cert);
    return;
  }
  const std::size_t idx = static_cast<std::size_t>(target - p.begin());
  const bool twins = twin_cell(adj, p[idx]);
  for (int v : p[idx]) {
    Partition q;
    q.insert(q.end(), p.begin(), p.begin() + static_cast<long>(idx));
    q.push_back({v});
    std::vector<int> rest;
    for (int w : p[idx])
      if (w != v) rest.push_back(w);
    q.push_back(rest);
    q.insert(q.end(), p.begin() + static_cast<long>(idx) + 1, p.end());
    search(adj, refine(adj, std::move(q)), best);
    if (twins) break;
  }
}

std::string component_form(const Graph& g, const VertexSet& comp) {
  std::vector<int> verts = comp.to_vector();
  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj[i][j] = g.adjacent(verts[i], verts[j]) ? 1 : 0;
  Partition all(1);
  for (int i = 0; i < n; ++i) all[0].push_back(i);
  std::string best;
  search(adj, refine(adj, all), best);
  return std::to_string(n) + ":" + best;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  std::vector<std::string> parts;
  for (const auto& comp : connected_components(g)) parts.push_back(component_form(g, comp));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    out += p;
    out += '|';
  }
  return out;
}

}  // namespace widthforge
