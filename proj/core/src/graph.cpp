#include "matchpow/graph.hpp"

#include <bit>
#include <sstream>

namespace matchpow {

namespace {

std::uint64_t bit(int x) { return std::uint64_t{1} << (x - 1); }

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0..64");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (adjacent(e.u, e.v)) {
      throw InputError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    adj_[static_cast<std::size_t>(e.u - 1)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v - 1)] |= bit(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

void Graph::require_vertex(int x) const {
  if (!has_vertex(x)) {
    throw InputError("vertex " + std::to_string(x) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::adjacent(int x, int y) const {
  if (!has_vertex(x) || !has_vertex(y)) return false;
  return (adj_[static_cast<std::size_t>(x - 1)] & bit(y)) != 0;
}

VertexSet Graph::neighbors(int x) const {
  require_vertex(x);
  return VertexSet(adj_[static_cast<std::size_t>(x - 1)]);
}

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (int i : local) out.insert(origin.at(static_cast<std::size_t>(i - 1)));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) {
    throw InputError("vertex set " + w.to_string() + " not contained in 1.." + std::to_string(g.order()));
  }
  InducedSubgraph out;
  out.origin = w.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < out.origin.size(); ++i) local[static_cast<std::size_t>(out.origin[i])] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (w.contains(e.u) && w.contains(e.v)) {
      edges.emplace_back(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);
    }
  }
  out.graph = Graph(w.size(), edges);
  return out;
}

InducedSubgraph remove_vertices(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) {
    throw InputError("vertex set " + w.to_string() + " not contained in 1.." + std::to_string(g.order()));
  }
  return induced_subgraph(g, g.vertices() - w);
}

Graph remove_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw PreconditionError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
  }
  std::vector<Edge> edges;
  for (Edge f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.order(), edges);
}

Graph isolate_vertices(const Graph& g, VertexSet w) {
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (!e.ends().intersects(w)) edges.push_back(e);
  }
  return Graph(g.order(), edges);
}

VertexSet neighborhood(const Graph& g, int x) { return g.neighbors(x); }

VertexSet closed_neighborhood(const Graph& g, int x) { return g.neighbors(x) | VertexSet::singleton(x); }

VertexSet neighborhood(const Graph& g, VertexSet w) {
  VertexSet out;
  for (int x : w) out |= g.neighbors(x);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int i = 1; i <= g.order(); ++i) {
    for (int j = i + 1; j <= g.order(); ++j) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(g.order(), edges);
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> order;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    int best = 0;
    for (int v : unvisited) {
      if (best == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]) best = v;
    }
    position[static_cast<std::size_t>(best)] = static_cast<int>(order.size());
    order.push_back(best);
    unvisited.erase(best);
    for (int u : g.neighbors(best) & unvisited) ++weight[static_cast<std::size_t>(u)];
  }
  // The reverse of a maximum cardinality search order is a perfect
  // elimination ordering iff the graph is chordal.
  VertexSet visited;
  for (int v : order) {
    VertexSet earlier = g.neighbors(v) & visited;
    if (!earlier.empty()) {
      int parent = 0;
      for (int u : earlier) {
        if (parent == 0 || position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(parent)]) parent = u;
      }
      VertexSet rest = earlier;
      rest.erase(parent);
      if (!rest.subset_of(g.neighbors(parent))) return false;
    }
    visited.insert(v);
  }
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::singleton(left.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = neighborhood(g, frontier) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_forest(g) && is_connected(g); }

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 1; v <= g.order(); ++v) {
    if (g.neighbors(v).empty()) out.insert(v);
  }
  return out;
}

Graph proliferate_leaf(const Graph& g, int a, int t) {
  if (!g.has_vertex(a)) throw InputError("vertex " + std::to_string(a) + " outside the graph");
  if (g.degree(a) != 1) throw PreconditionError("vertex " + std::to_string(a) + " is not a leaf");
  if (t < 1) throw PreconditionError("proliferation count must be at least 1");
  if (g.order() + t > kMaxVertices) throw InputError("proliferation exceeds 64 vertices");
  const int b = g.neighbors(a).min();
  std::vector<Edge> edges = g.edges();
  for (int i = 1; i <= t; ++i) edges.emplace_back(g.order() + i, b);
  return Graph(g.order() + t, edges);
}

Graph path_graph(int n) {
  check_order(n);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  check_order(n);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph star_graph(int k) {
  if (k < 1) throw InputError("a star needs at least one leaf");
  check_order(k + 1);
  std::vector<Edge> edges;
  for (int i = 2; i <= k + 1; ++i) edges.emplace_back(1, i);
  return Graph(k + 1, edges);
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph perfect_matching_graph(int r) {
  check_order(2 * r);
  std::vector<Edge> edges;
  for (int i = 1; i <= r; ++i) edges.emplace_back(2 * i - 1, 2 * i);
  return Graph(2 * r, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_order(g.order() + h.order());
  std::vector<Edge> edges = g.edges();
  for (Edge e : h.edges()) edges.emplace_back(e.u + g.order(), e.v + g.order());
  return Graph(g.order() + h.order(), edges);
}

const FixtureGraphs& fixture_graphs() {
  static const FixtureGraphs graphs = [] {
    FixtureGraphs f;
    f.fig1 = Graph(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 8}, {5, 9}});
    f.fig2 = disjoint_union(cycle_graph(4), cycle_graph(4));
    // a=1, x1=2, x2=3, x3=4, c=5, b=6
    f.h = path_graph(4);
    f.h_prime = path_graph(5);
    f.h_dprime = Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
    f.h_tilde = path_graph(6);
    f.c7 = cycle_graph(7);
    // x1=1, x2=2, x3=3; A=4..6, B=7..8, C=9..12
    f.g1_example = Graph(12, {{1, 2}, {2, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}, {2, 8}, {3, 9}, {3, 10}, {3, 11}, {3, 12}});
    // x1..x4 = 1..4; A=5..8, B=9..10
    f.g2_example = Graph(10, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {4, 9}, {4, 10}});
    return f;
  }();
  return graphs;
}

std::optional<Graph> builtin_graph(std::string_view name) {
  const FixtureGraphs& f = fixture_graphs();
  if (name == "fig1") return f.fig1;
  if (name == "fig2") return f.fig2;
  if (name == "H") return f.h;
  if (name == "Hprime") return f.h_prime;
  if (name == "Hdprime") return f.h_dprime;
  if (name == "Htilde") return f.h_tilde;
  if (name == "C7") return f.c7;
  if (name == "G1example") return f.g1_example;
  if (name == "G2example") return f.g2_example;
  return std::nullopt;
}

std::vector<std::string> builtin_graph_names() {
  return {"fig1", "fig2", "H", "Hprime", "Hdprime", "Htilde", "C7", "G1example", "G2example"};
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " E={";
  bool first = true;
  for (Edge e : g.edges()) {
    if (!first) out << ' ';
    out << e.u << '-' << e.v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace matchpow
