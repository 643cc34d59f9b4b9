#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchpow/betti.hpp"
#include "matchpow/graph.hpp"
#include "matchpow/ideal.hpp"

namespace matchpow {

/// I(G) in n = |V(G)| variables; the zero ideal for an edgeless graph.
MonomialIdeal edge_ideal(const Graph& g);

/// u_M = product of the variables covered by M.
inline SqfMonomial matching_monomial(VertexSet covered) { return SqfMonomial(covered); }

/// I(G)^[k] built from the k-matchings of G. Requires k >= 1.
MonomialIdeal sqfree_power_via_matchings(const Graph& g, int k);

/// Graph H on V(G) with I(H) = I(G)^[2] : x_a x_b, namely G - {a, b} plus
/// the edges cd with c in N(a), d in N(b), c != d, c, d outside {a, b}.
/// Throws PreconditionError unless e is an edge.
Graph colon_square_by_edge(const Graph& g, Edge e);

/// L(G, e, k) = I(G - e)^[k] intersected with ab * I(G - {a, b})^[k-1];
/// the zeroth power is the unit ideal. Requires e in E(G) and k >= 1.
MonomialIdeal L_ideal(const Graph& g, Edge e, int k);

/// Every k-matching M of G - e has an edge f and a vertex c != a, b with
/// c in f, c adjacent to a or b, and M - f avoiding a and b.
bool generators_degree_hypothesis(const Graph& g, Edge e, int k);

/// Monomials c * ab * u_M with c a neighbour of a or b outside {a, b} and M
/// a (k-1)-matching of G - {a, b, c}, minimalized.
MonomialIdeal L_ideal_shape(const Graph& g, Edge e, int k);

bool is_generated_in_degree(const MonomialIdeal& ideal, int d);

struct LambdaOptions {
  /// Decide linear relatedness through syzygy-graph connectivity instead of
  /// beta_1.
  bool combinatorial = false;
  BettiOptions betti;
};

/// Least k <= nu(G) with I(G)^[j] linearly related for all k <= j <= nu(G).
/// Throws PreconditionError for an edgeless graph.
int lambda(const Graph& g, const LambdaOptions& options = {});

enum class ForestType { g1, g2, g3 };

std::string to_string(ForestType type);

/// One way of reading a forest as a template.
///  g1: spine = (x1, x2, x3), leaves a = A on x1, b = B on x2, c = C on x3.
///  g2: spine = (x1, x2, x3, x4), a = A on x1, b = B on x4.
///  g3: spine = the two star centres, a and b their leaves.
struct ForestMatch {
  ForestType type = ForestType::g1;
  std::vector<int> spine;
  VertexSet a;
  VertexSet b;
  VertexSet c;

  /// The template graph with these parameters on fresh labels.
  Graph instantiate() const;
  std::string to_string() const;
};

struct ForestClass {
  /// One match per distinct template shape, in the order g3, g1, g2.
  std::vector<ForestMatch> matches;
  bool empty() const { return matches.empty(); }
};

/// Throws PreconditionError unless g is a forest without isolated vertices
/// other than a single edge.
ForestClass classify_forest(const Graph& g);

/// Template graphs: spine first (1..3 or 1..4), then the leaf groups.
Graph g1_template(int t, int s, int r);
Graph g2_template(int t, int s);
/// K_{1,p} disjoint union K_{1,q}.
Graph g3_template(int p, int q);

}  // namespace matchpow
