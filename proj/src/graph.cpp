#include "edgering/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace edgering {

Graph::Graph(int d, const std::vector<std::pair<int, int>>& edges) : d_(d) {
  if (d < 1) throw InvalidInput("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges.size());
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    auto [a, b] = edges[idx];
    std::string where = "edge " + std::to_string(idx + 1);
    if (a == b) throw InvalidInput(where + " is a loop");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > d) throw InvalidInput(where + " has an endpoint outside 1.." + std::to_string(d));
    if (!seen.insert({a, b}).second) throw InvalidInput(where + " duplicates an earlier edge");
    edges_.push_back({a, b});
  }
}

Graph new_graph(int d, const std::vector<std::pair<int, int>>& edges) { return Graph(d, edges); }

std::vector<std::vector<std::pair<int, int>>> Graph::incidence_lists() const {
  std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(d_) + 1);
  for (int l = 1; l <= edge_count(); ++l) {
    const Edge& e = edges_[static_cast<std::size_t>(l - 1)];
    inc[static_cast<std::size_t>(e.u)].push_back({l, e.v});
    inc[static_cast<std::size_t>(e.v)].push_back({l, e.u});
  }
  return inc;
}

bool Graph::connected() const {
  if (d_ == 1) return true;
  auto inc = incidence_lists();
  std::vector<char> visited(static_cast<std::size_t>(d_) + 1, 0);
  std::queue<int> queue;
  queue.push(1);
  visited[1] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (auto [l, w] : inc[static_cast<std::size_t>(v)]) {
      (void)l;
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == d_;
}

bool Graph::bipartite() const {
  auto inc = incidence_lists();
  std::vector<int> color(static_cast<std::size_t>(d_) + 1, -1);
  for (int start = 1; start <= d_; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (auto [l, w] : inc[static_cast<std::size_t>(v)]) {
        (void)l;
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          queue.push(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph family_gk6(int k) {
  if (k < 1) throw InvalidInput("family_gk6 requires k >= 1");
  std::vector<std::pair<int, int>> edges = {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}};
  for (int i = 1; i <= k; ++i) {
    edges.push_back({3, i + 6});
    edges.push_back({4, i + 6});
  }
  return Graph(k + 6, edges);
}

Graph theorem_construction(int f, int d) {
  if (f < 7 || f > d) throw InvalidInput("theorem_construction requires 7 <= f <= d");
  int k = d - f + 1;
  Graph base = family_gk6(k);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(base.edges().size() + static_cast<std::size_t>(f - 7));
  for (const Edge& e : base.edges()) edges.push_back({e.u, e.v});
  for (int v = d - f + 8; v <= d; ++v) edges.push_back({1, v});
  return Graph(d, edges);
}

int krull_dim(const Graph& g) {
  if (!g.connected()) throw InvalidInput("Krull dimension formula requires connected graph");
  return g.bipartite() ? g.vertex_count() - 1 : g.vertex_count();
}

IncidenceColumns incidence_columns(const Graph& g) {
  IncidenceColumns cols;
  cols.columns.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    DegreeVec col(static_cast<std::size_t>(g.vertex_count()), 0);
    col[static_cast<std::size_t>(e.u - 1)] = 1;
    col[static_cast<std::size_t>(e.v - 1)] = 1;
    cols.columns.push_back(std::move(col));
  }
  return cols;
}

DegreeVec t_degree(const Graph& g, const ExponentVec& c) {
  if (c.size() != static_cast<std::size_t>(g.edge_count()))
    throw InvalidInput("exponent vector length does not match edge count");
  DegreeVec s(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t l = 0; l < c.size(); ++l) {
    const Edge& e = g.edges()[l];
    s[static_cast<std::size_t>(e.u - 1)] = checked_add(s[static_cast<std::size_t>(e.u - 1)], c[l]);
    s[static_cast<std::size_t>(e.v - 1)] = checked_add(s[static_cast<std::size_t>(e.v - 1)], c[l]);
  }
  return s;
}

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

unsigned g6_byte(std::string_view line, std::size_t i) {
  unsigned char ch = static_cast<unsigned char>(line[i]);
  if (ch < 63 || ch > 126) throw InvalidInput("graph6: byte out of printable range");
  return ch - 63u;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kGraph6Prefix)) line.remove_prefix(kGraph6Prefix.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw InvalidInput("graph6: empty record");

  std::size_t pos = 0;
  long long n = 0;
  if (g6_byte(line, 0) < 63) {
    n = g6_byte(line, 0);
    pos = 1;
  } else if (line.size() >= 2 && g6_byte(line, 1) < 63) {
    if (line.size() < 4) throw InvalidInput("graph6: truncated length header");
    n = (static_cast<long long>(g6_byte(line, 1)) << 12) | (g6_byte(line, 2) << 6) | g6_byte(line, 3);
    if (n < 63) throw InvalidInput("graph6: non-canonical length header");
    pos = 4;
  } else {
    if (line.size() < 8) throw InvalidInput("graph6: truncated length header");
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | g6_byte(line, i);
    if (n < 258048) throw InvalidInput("graph6: non-canonical length header");
    pos = 8;
  }
  if (n < 1) throw InvalidInput("graph6: vertex count must be positive");
  if (n > 100000) throw InvalidInput("graph6: vertex count exceeds supported size");

  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos != nbytes) throw InvalidInput("graph6: record length mismatch");

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  long long t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      unsigned byte = g6_byte(line, pos + static_cast<std::size_t>(t / 6));
      bool bit = (byte >> (5 - (t % 6))) & 1u;
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bit ? 1 : 0;
    }
  }
  for (long long pad = nbits; pad < static_cast<long long>(nbytes) * 6; ++pad) {
    unsigned byte = g6_byte(line, pos + static_cast<std::size_t>(pad / 6));
    if ((byte >> (5 - (pad % 6))) & 1u) throw InvalidInput("graph6: nonzero padding bits");
  }

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) edges.push_back({i + 1, j + 1});
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw InvalidInput("graph6: vertex count exceeds supported size");
  }

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = 1;
  }
  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  std::vector<unsigned> body(nbytes, 0);
  long long t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        body[static_cast<std::size_t>(t / 6)] |= 1u << (5 - (t % 6));
    }
  }
  for (unsigned b : body) out.push_back(static_cast<char>(b + 63));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  int d = 0, r = 0;
  if (!(in >> d >> r)) throw InvalidInput("edge list: expected header line \"d r\"");
  if (r < 0) throw InvalidInput("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(r));
  for (int l = 0; l < r; ++l) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) throw InvalidInput("edge list: expected " + std::to_string(r) + " edge lines");
    edges.push_back({i, j});
  }
  return Graph(d, edges);
}

void print_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace edgering
