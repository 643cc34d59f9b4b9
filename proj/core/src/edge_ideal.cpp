#include "matchpow/edge_ideal.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "matchpow/linear.hpp"
#include "matchpow/matching.hpp"

namespace matchpow {

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<SqfMonomial> gens;
  gens.reserve(g.edges().size());
  for (Edge e : g.edges()) gens.emplace_back(e.ends());
  return MonomialIdeal(g.order(), std::move(gens));
}

MonomialIdeal sqfree_power_via_matchings(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("squarefree powers are defined for k >= 1");
  std::vector<SqfMonomial> gens;
  for_each_matching(g, k, [&gens](const Matching& m) {
    gens.push_back(matching_monomial(m.vertices()));
    return true;
  });
  return MonomialIdeal(g.order(), std::move(gens));
}

namespace {

void require_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw PreconditionError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
}

// The ideal J^[k] with J^[0] read as the unit ideal.
MonomialIdeal power_or_unit(const MonomialIdeal& ideal, int k) {
  return k == 0 ? MonomialIdeal::unit(ideal.ambient()) : sqfree_power(ideal, k);
}

}  // namespace

Graph colon_square_by_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  const VertexSet ab = e.ends();
  std::set<Edge> edges;
  for (Edge f : g.edges()) {
    if (!f.ends().intersects(ab)) edges.insert(f);
  }
  for (int c : g.neighbors(e.u) - ab) {
    for (int d : g.neighbors(e.v) - ab) {
      if (c != d) edges.emplace(c, d);
    }
  }
  return Graph(g.order(), std::vector<Edge>(edges.begin(), edges.end()));
}

MonomialIdeal L_ideal(const Graph& g, Edge e, int k) {
  require_edge(g, e);
  if (k < 1) throw PreconditionError("L(G, e, k) needs k >= 1");
  const MonomialIdeal without_edge = sqfree_power(edge_ideal(remove_edge(g, e)), k);
  const MonomialIdeal rest = power_or_unit(edge_ideal(isolate_vertices(g, e.ends())), k - 1);
  if (rest.is_zero()) return MonomialIdeal::zero(g.order());
  return intersect(without_edge, multiply(rest, SqfMonomial(e.ends()))).with_ambient(g.order());
}

bool generators_degree_hypothesis(const Graph& g, Edge e, int k) {
  require_edge(g, e);
  const VertexSet ab = e.ends();
  const VertexSet near = (g.neighbors(e.u) | g.neighbors(e.v)) - ab;
  bool holds = true;
  for_each_matching(remove_edge(g, e), k, [&](const Matching& m) {
    bool found = false;
    for (std::size_t j = 0; j < m.edges().size() && !found; ++j) {
      const Edge f = m.edges()[j];
      if (!f.ends().intersects(near)) continue;
      const VertexSet others = m.vertices() - f.ends();
      found = !others.intersects(ab);
    }
    holds = found;
    return holds;
  });
  return holds;
}

MonomialIdeal L_ideal_shape(const Graph& g, Edge e, int k) {
  require_edge(g, e);
  if (k < 1) throw PreconditionError("L(G, e, k) needs k >= 1");
  const VertexSet ab = e.ends();
  std::vector<SqfMonomial> gens;
  for (int c : (g.neighbors(e.u) | g.neighbors(e.v)) - ab) {
    VertexSet removed = ab;
    removed.insert(c);
    const Graph rest = isolate_vertices(g, removed);
    const SqfMonomial head(removed);
    if (k == 1) {
      gens.push_back(head);
      continue;
    }
    for_each_matching(rest, k - 1, [&](const Matching& m) {
      gens.push_back(head.lcm(matching_monomial(m.vertices())));
      return true;
    });
  }
  return MonomialIdeal(g.order(), std::move(gens));
}

bool is_generated_in_degree(const MonomialIdeal& ideal, int d) {
  const std::optional<int> deg = ideal.generation_degree();
  return deg && *deg == d;
}

int lambda(const Graph& g, const LambdaOptions& options) {
  if (g.size() == 0) throw PreconditionError("lambda needs at least one edge");
  const MonomialIdeal base = edge_ideal(g);
  const int nu = matching_number(g);
  for (int k = nu; k >= 1; --k) {
    const MonomialIdeal power = sqfree_power(base, k);
    const bool related = options.combinatorial ? is_linearly_related_combinatorial(power, options.betti.budget)
                                               : is_linearly_related_homological(power, options.betti);
    if (!related) return k + 1;
  }
  return 1;
}

std::string to_string(ForestType type) {
  switch (type) {
    case ForestType::g1: return "G1";
    case ForestType::g2: return "G2";
    case ForestType::g3: return "G3";
  }
  return "?";
}

Graph g1_template(int t, int s, int r) {
  std::vector<Edge> edges{{1, 2}, {2, 3}};
  int next = 4;
  for (int i = 0; i < t; ++i) edges.emplace_back(1, next++);
  for (int i = 0; i < s; ++i) edges.emplace_back(2, next++);
  for (int i = 0; i < r; ++i) edges.emplace_back(3, next++);
  return Graph(next - 1, edges);
}

Graph g2_template(int t, int s) {
  std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 4}};
  int next = 5;
  for (int i = 0; i < t; ++i) edges.emplace_back(1, next++);
  for (int i = 0; i < s; ++i) edges.emplace_back(4, next++);
  return Graph(next - 1, edges);
}

Graph g3_template(int p, int q) { return disjoint_union(star_graph(p), star_graph(q)); }

Graph ForestMatch::instantiate() const {
  switch (type) {
    case ForestType::g1: return g1_template(a.size(), b.size(), c.size());
    case ForestType::g2: return g2_template(a.size(), b.size());
    case ForestType::g3: return g3_template(a.size(), b.size());
  }
  return Graph();
}

std::string ForestMatch::to_string() const {
  std::string s = matchpow::to_string(type) + " spine=(";
  for (std::size_t i = 0; i < spine.size(); ++i) s += (i ? "," : "") + std::to_string(spine[i]);
  s += ") A=" + a.to_string() + " B=" + b.to_string();
  if (type == ForestType::g1) s += " C=" + c.to_string();
  return s;
}

namespace {

// Leaves of g hanging off `hub`, excluding `skip`.
VertexSet pendant_leaves(const Graph& g, int hub, VertexSet skip) {
  VertexSet out;
  for (int v : g.neighbors(hub) - skip) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

using ShapeKey = std::tuple<int, int, int, int>;

void add_match(ForestClass& result, std::set<ShapeKey>& shapes, ForestMatch match) {
  const int x = match.a.size();
  const int z = match.type == ForestType::g1 ? match.c.size() : match.b.size();
  const int y = match.type == ForestType::g1 ? match.b.size() : 0;
  const ShapeKey key{static_cast<int>(match.type), std::min(x, z), std::max(x, z), y};
  if (shapes.insert(key).second) result.matches.push_back(std::move(match));
}

}  // namespace

ForestClass classify_forest(const Graph& g) {
  if (!is_forest(g)) throw PreconditionError("classify_forest expects a forest");
  if (!isolated_vertices(g).empty()) throw PreconditionError("classify_forest expects no isolated vertices");
  if (g.order() == 2) throw PreconditionError("classify_forest excludes the single edge");
  ForestClass result;
  std::set<ShapeKey> shapes;
  const std::vector<VertexSet> comps = connected_components(g);

  if (comps.size() == 2) {
    ForestMatch m{ForestType::g3, {}, {}, {}, {}};
    bool stars = true;
    for (std::size_t i = 0; i < 2 && stars; ++i) {
      int centre = 0;
      for (int v : comps[i]) {
        if (centre == 0 || g.degree(v) > g.degree(centre)) centre = v;
      }
      stars = g.degree(centre) == comps[i].size() - 1;
      m.spine.push_back(centre);
      (i == 0 ? m.a : m.b) = comps[i] - VertexSet::singleton(centre);
    }
    if (stars) add_match(result, shapes, std::move(m));
  }
  if (comps.size() != 1) return result;

  const VertexSet all = g.vertices();
  for (int x2 : all) {
    const std::vector<int> nbrs = g.neighbors(x2).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const int x1 = nbrs[i];
        const int x3 = nbrs[j];
        const VertexSet spine{x1, x2, x3};
        ForestMatch m{ForestType::g1, {x1, x2, x3}, pendant_leaves(g, x1, spine), pendant_leaves(g, x2, spine),
                      pendant_leaves(g, x3, spine)};
        if ((spine | m.a | m.b | m.c) == all) add_match(result, shapes, std::move(m));
      }
    }
  }

  for (Edge mid : g.edges()) {
    if (g.degree(mid.u) != 2 || g.degree(mid.v) != 2) continue;
    const int x1 = (g.neighbors(mid.u) - mid.ends()).min();
    const int x4 = (g.neighbors(mid.v) - mid.ends()).min();
    const VertexSet spine{x1, mid.u, mid.v, x4};
    ForestMatch m{ForestType::g2, {x1, mid.u, mid.v, x4}, pendant_leaves(g, x1, spine), pendant_leaves(g, x4, spine),
                  {}};
    if (!m.a.empty() && !m.b.empty() && (spine | m.a | m.b) == all) add_match(result, shapes, std::move(m));
  }
  return result;
}

}  // namespace matchpow
