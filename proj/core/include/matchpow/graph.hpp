#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchpow/index_set.hpp"

namespace matchpow {

inline constexpr int kMaxVertices = kMaxIndex;

/// Unordered pair {u, v} of distinct vertices, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr VertexSet ends() const { return VertexSet{u, v}; }
  constexpr bool touches(int x) const { return x == u || x == v; }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on the vertices 1..n (n <= 64). Immutable once built;
/// the edge list is kept in lexicographic order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InputError on loops, duplicate edges or endpoints outside 1..n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(1, n_); }

  bool has_vertex(int x) const { return x >= 1 && x <= n_; }
  bool adjacent(int x, int y) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }
  /// N(x); throws InputError for x outside 1..n.
  VertexSet neighbors(int x) const;
  int degree(int x) const { return neighbors(x).size(); }
  /// Index of e in edges(), or -1.
  int edge_index(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void require_vertex(int x) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
};

/// An induced subgraph relabeled onto 1..|W|. origin[i-1] is the parent
/// vertex that became vertex i, so multidegrees can be pulled back.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> origin;

  /// Maps a vertex set of the subgraph back into parent labels.
  VertexSet lift(VertexSet local) const;
};

/// G_W, relabeled in increasing order of parent vertex.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);
/// G - W = G_{V \ W}, relabeled.
InducedSubgraph remove_vertices(const Graph& g, VertexSet w);
/// G - e on the same vertex set. Throws PreconditionError if e is not an edge.
Graph remove_edge(const Graph& g, Edge e);
/// Same vertex set as G, every edge meeting W dropped. The edge ideal of the
/// result equals the edge ideal of G - W in the original variables.
Graph isolate_vertices(const Graph& g, VertexSet w);

VertexSet neighborhood(const Graph& g, int x);
VertexSet closed_neighborhood(const Graph& g, int x);
/// Union of N(x) over x in W.
VertexSet neighborhood(const Graph& g, VertexSet w);

Graph complement(const Graph& g);
/// Every cycle of length >= 4 has a chord; decided by maximum cardinality
/// search followed by a perfect elimination ordering check.
bool is_chordal(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
VertexSet isolated_vertices(const Graph& g);

/// Adds t new leaves n+1..n+t, each joined to the unique neighbor of the leaf a.
Graph proliferate_leaf(const Graph& g, int a, int t);

Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,k}: center 1, leaves 2..k+1.
Graph star_graph(int k);
Graph complete_graph(int n);
/// r pairwise disjoint edges {2i-1, 2i}.
Graph perfect_matching_graph(int r);
/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Named graphs from the squarefree-powers literature used as fixtures.
struct FixtureGraphs {
  Graph fig1;     ///< P7 with pendants at its 3rd and 5th vertices.
  Graph fig2;     ///< Two disjoint 4-cycles.
  Graph h;        ///< a-x1-x2-x3 (P4).
  Graph h_prime;  ///< a-x1-x2-x3-c (P5).
  Graph h_dprime; ///< P5 plus a leaf b on the middle vertex.
  Graph h_tilde;  ///< P6.
  Graph c7;
  Graph g1_example;  ///< Type G1 spine with 3, 2 and 4 leaves.
  Graph g2_example;  ///< Type G2 spine with 4 and 2 leaves.
};
const FixtureGraphs& fixture_graphs();

/// Built-in fixture by name (fig1, fig2, H, Hprime, Hdprime, Htilde, C7,
/// G1example, G2example).
std::optional<Graph> builtin_graph(std::string_view name);
std::vector<std::string> builtin_graph_names();

std::string to_string(const Graph& g);

}  // namespace matchpow
