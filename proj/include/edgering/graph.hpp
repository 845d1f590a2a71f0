#ifndef EDGERING_GRAPH_HPP
#define EDGERING_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgering/util.hpp"

namespace edgering {

/// Exponent vector of a t-monomial: one entry per vertex.
using DegreeVec = std::vector<Int>;

/// Exponent vector of an x-monomial: one entry per edge variable.
using ExponentVec = std::vector<Int>;

struct Edge {
  int u = 0, v = 0;  // 1-based endpoints, u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph on vertices 1..d with an ordered edge list. The edge list
/// order is load-bearing: edge l corresponds to the variable x_l.
class Graph {
public:
  Graph(int d, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return d_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int l) const { return edges_.at(static_cast<std::size_t>(l - 1)); }  // 1-based

  bool connected() const;
  bool bipartite() const;

  /// Edges incident to each vertex, as (edge index 1-based, other endpoint).
  std::vector<std::vector<std::pair<int, int>>> incidence_lists() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int d_;
  std::vector<Edge> edges_;
};

struct IncidenceColumns {
  std::vector<DegreeVec> columns;  // column l-1 has ones at the endpoints of edge l
};

Graph new_graph(int d, const std::vector<std::pair<int, int>>& edges);

/// The k-indexed family: two triangles joined through k paths of length two.
/// Edge order: e1={1,2}, e2={1,3}, e3={2,3}, e4={4,5}, e5={4,6}, e6={5,6},
/// then e_{2(i-1)+7}={3,i+6}, e_{2(i-1)+8}={4,i+6} for i=1..k.
Graph family_gk6(int k);

/// family_gk6(d-f+1) on [d] plus the pendant edges {1,d-f+8},...,{1,d}
/// appended after the family's edges. Requires 7 <= f <= d.
Graph theorem_construction(int f, int d);

/// d for connected nonbipartite graphs, d-1 for connected bipartite ones.
/// Disconnected input is rejected.
int krull_dim(const Graph& g);

IncidenceColumns incidence_columns(const Graph& g);

/// Image of an edge-exponent vector under the incidence map (A_G * c).
DegreeVec t_degree(const Graph& g, const ExponentVec& c);

/// graph6 record (nauty convention). Decoded edges come out in row-major
/// upper-triangle order.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// Plain text edge list: first line "d r", then r lines "i j".
Graph parse_edge_list(std::istream& in);
void print_edge_list(std::ostream& out, const Graph& g);

}  // namespace edgering

#endif
