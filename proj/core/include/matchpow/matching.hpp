#pragma once

#include <functional>
#include <vector>

#include "matchpow/graph.hpp"

namespace matchpow {

/// A set of pairwise vertex-disjoint edges, kept sorted.
class Matching {
 public:
  Matching() = default;
  /// Throws PreconditionError if two edges share a vertex.
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  /// Union of the edges' endpoints; the support of u_M.
  VertexSet vertices() const { return vertices_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
  VertexSet vertices_;
};

/// Calls visit once per k-matching of g, in lexicographic order of the
/// sorted edge lists. Return false from visit to stop early.
void for_each_matching(const Graph& g, int k, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(const Graph& g, int k);
std::size_t count_matchings(const Graph& g, int k);

/// nu(G) by branch and bound.
int matching_number(const Graph& g);
/// nu(G_V) without relabeling.
int matching_number(const Graph& g, VertexSet within);
Matching maximum_matching(const Graph& g, VertexSet within);
Matching maximum_matching(const Graph& g);

/// nu_1(G): maximum size of a set of edges that pairwise form gaps.
int induced_matching_number(const Graph& g);
/// nu_0(G) = max over edges e of 1 + nu(F_e), F_e the edges forming a gap
/// with e. Zero for edgeless graphs.
int restricted_matching_number(const Graph& g);

/// e and f are disjoint and no edge of g joins them.
bool is_gap(const Graph& g, Edge e, Edge f);
bool is_gap_free(const Graph& g);

bool has_perfect_matching(const Graph& g);
/// Odd-component criterion: at every vertex i exactly one component of
/// G - i has odd order. Throws PreconditionError for non-trees.
bool tree_perfect_criterion(const Graph& g);

/// Every matching that cannot be extended by another edge, each once.
std::vector<Matching> enumerate_maximal_matchings(const Graph& g);
bool is_equimatchable(const Graph& g);

/// Edges e_1..e_r, r = nu(G) - nu(G_V), with nu(G_{V u e_1 u ... u e_j}) =
/// nu(G_V) + j. Throws PreconditionError unless g is equimatchable.
std::vector<Edge> greedy_matching_extension(const Graph& g, VertexSet v);

}  // namespace matchpow
