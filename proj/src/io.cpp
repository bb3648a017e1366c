#include "widthforge/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "widthforge/errors.hpp"

namespace widthforge {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0] == "c") continue;
    out.push_back(std::move(line));
  }
  return out;
}

int to_int(const Line& line, std::size_t i, const char* what) {
  if (i >= line.tokens.size()) throw ParseError(line.number, std::string("missing ") + what);
  const std::string& s = line.tokens[i];
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || used == 0) throw ParseError(line.number, std::string("bad ") + what + " '" + s + "'");
  if (v < -1000000000LL || v > 1000000000LL) throw ParseError(line.number, std::string(what) + " out of range");
  return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) throw ParseError(line.number, "expected " + std::to_string(n) + " fields");
}

int id_in_range(const Line& line, std::size_t i, int limit, const char* what) {
  int v = to_int(line, i, what);
  if (v < 1 || v > limit)
    throw ParseError(line.number, std::string(what) + " " + std::to_string(v) + " outside 1.." + std::to_string(limit));
  return v - 1;
}

int last_line(const std::vector<Line>& lines) { return lines.empty() ? 0 : lines.back().number; }

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 'p edge' header");
  const Line& header = lines.front();
  if (header.tokens[0] != "p" || header.tokens.size() != 4 || header.tokens[1] != "edge")
    throw ParseError(header.number, "expected 'p edge <n> <m>'");
  int n = to_int(header, 2, "vertex count"), m = to_int(header, 3, "edge count");
  if (n < 0 || m < 0) throw ParseError(header.number, "negative count");
  if (n > kMaxVertices) throw ParseError(header.number, "more than " + std::to_string(kMaxVertices) + " vertices");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "p") throw ParseError(line.number, "second header");
    if (line.tokens[0] != "e") throw ParseError(line.number, "unknown line type '" + line.tokens[0] + "'");
    expect_arity(line, 3);
    int u = id_in_range(line, 1, n, "vertex"), v = id_in_range(line, 2, n, "vertex");
    if (u == v) throw ParseError(line.number, "self-loop");
    if (g.adjacent(u, v)) throw ParseError(line.number, "duplicate edge");
    g.add_edge(u, v);
  }
  if (g.num_edges() != m)
    throw ParseError(last_line(lines), "header announces " + std::to_string(m) + " edges, found " +
                                           std::to_string(g.num_edges()));
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

BranchDecomposition parse_bd(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 's bd' header");
  const Line& header = lines.front();
  if (header.tokens[0] != "s" || header.tokens.size() != 4 || header.tokens[1] != "bd")
    throw ParseError(header.number, "expected 's bd <nodes> <elements>'");
  int nodes = to_int(header, 2, "node count"), s = to_int(header, 3, "element count");
  if (nodes < 0 || s < 0) throw ParseError(header.number, "negative count");
  if (s > kMaxElements) throw ParseError(header.number, "too many elements");
  if (nodes > 4 * kMaxElements) throw ParseError(header.number, "too many tree nodes");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leaf(s, -1);
  std::vector<int> degree(nodes, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "e") {
      expect_arity(line, 3);
      int a = id_in_range(line, 1, nodes, "tree node"), b = id_in_range(line, 2, nodes, "tree node");
      if (++degree[a] > 3 || ++degree[b] > 3) throw ParseError(line.number, "tree node of degree > 3");
      edges.emplace_back(a, b);
    } else if (line.tokens[0] == "l") {
      expect_arity(line, 3);
      int t = id_in_range(line, 1, nodes, "tree node"), x = id_in_range(line, 2, s, "element");
      if (leaf[x] >= 0) throw ParseError(line.number, "element mapped twice");
      leaf[x] = t;
    } else {
      throw ParseError(line.number, "unknown line type '" + line.tokens[0] + "'");
    }
  }
  for (int x = 0; x < s; ++x)
    if (leaf[x] < 0) throw ParseError(last_line(lines), "element " + std::to_string(x + 1) + " has no leaf");
  try {
    return BranchDecomposition(nodes, std::move(edges), std::move(leaf));
  } catch (const InvalidArgument& e) {
    throw ParseError(last_line(lines), e.what());
  }
}

std::string serialize_bd(const BranchDecomposition& bd) {
  std::ostringstream out;
  out << "s bd " << bd.num_nodes() << ' ' << bd.num_elements() << '\n';
  for (auto [a, b] : bd.tree_edges()) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  for (int x = 0; x < bd.num_elements(); ++x) out << "l " << bd.leaf(x) + 1 << ' ' << x + 1 << '\n';
  return out.str();
}

ParsedTd parse_td(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 's td' header");
  const Line& header = lines.front();
  if (header.tokens[0] != "s" || header.tokens.size() != 5 || header.tokens[1] != "td")
    throw ParseError(header.number, "expected 's td <bags> <max-bag-size> <n>'");
  int bags = to_int(header, 2, "bag count"), width = to_int(header, 3, "max bag size"),
      n = to_int(header, 4, "vertex count");
  if (bags < 0 || width < 0 || n < 0) throw ParseError(header.number, "negative count");
  if (n > kMaxVertices) throw ParseError(header.number, "more than " + std::to_string(kMaxVertices) + " vertices");
  if (bags > 1 << 20) throw ParseError(header.number, "too many bags");
  ParsedTd out;
  out.num_vertices = n;
  std::vector<std::optional<VertexSet>> bag(bags);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "b") {
      int id = id_in_range(line, 1, bags, "bag id");
      if (bag[id]) throw ParseError(line.number, "bag id repeated");
      VertexSet s;
      for (std::size_t j = 2; j < line.tokens.size(); ++j) {
        int v = id_in_range(line, j, n, "vertex");
        if (s.test(v)) throw ParseError(line.number, "vertex repeated in bag");
        s.set(v);
      }
      bag[id] = s;
    } else if (line.tokens[0] == "s") {
      throw ParseError(line.number, "second header");
    } else {
      expect_arity(line, 2);
      int a = id_in_range(line, 0, bags, "bag id"), b = id_in_range(line, 1, bags, "bag id");
      if (a == b) throw ParseError(line.number, "tree edge is a loop");
      edges.emplace_back(a, b);
    }
  }
  for (int id = 0; id < bags; ++id) {
    if (!bag[id]) throw ParseError(last_line(lines), "bag " + std::to_string(id + 1) + " missing");
    out.td.add_node(*bag[id]);
  }
  if (out.td.max_bag_size() != width)
    throw ParseError(header.number, "header max bag size " + std::to_string(width) + " but largest bag has " +
                                        std::to_string(out.td.max_bag_size()));
  for (auto [a, b] : edges) out.td.add_edge(a, b);
  return out;
}

std::string serialize_td(const TreeDecomposition& td, int num_vertices) {
  std::ostringstream out;
  out << "s td " << td.num_nodes() << ' ' << td.max_bag_size() << ' ' << num_vertices << '\n';
  for (int t = 0; t < td.num_nodes(); ++t) {
    out << "b " << t + 1;
    const VertexSet& b = td.bag(t);
    for (int v = b.first(); v >= 0; v = b.next(v)) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges()) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace widthforge
