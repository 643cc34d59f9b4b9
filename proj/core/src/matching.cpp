#include "matchpow/matching.hpp"

#include <bit>

namespace matchpow {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (Edge e : edges_) {
    if (vertices_.intersects(e.ends())) throw PreconditionError("edges of a matching must be pairwise disjoint");
    vertices_ |= e.ends();
  }
}

namespace {

void matchings_from(const Graph& g, int k, std::size_t start, VertexSet used, std::vector<Edge>& chosen,
                    const std::function<bool(const Matching&)>& visit, bool& stop) {
  if (stop) return;
  if (static_cast<int>(chosen.size()) == k) {
    if (!visit(Matching(chosen))) stop = true;
    return;
  }
  const auto& edges = g.edges();
  const std::size_t need = static_cast<std::size_t>(k) - chosen.size();
  for (std::size_t i = start; i + need <= edges.size() && !stop; ++i) {
    if (edges[i].ends().intersects(used)) continue;
    chosen.push_back(edges[i]);
    matchings_from(g, k, i + 1, used | edges[i].ends(), chosen, visit, stop);
    chosen.pop_back();
  }
}

// Branch and bound for a maximum matching of G restricted to `avail`.
struct MaxMatching {
  const Graph& g;
  std::vector<Edge> current;
  std::vector<Edge> best;
  int best_size = -1;

  void search(VertexSet avail) {
    // Vertices with no neighbor left can never be matched.
    int pick = 0;
    int pick_degree = 0;
    VertexSet live;
    for (int v : avail) {
      int d = (g.neighbors(v) & avail).size();
      if (d == 0) continue;
      live.insert(v);
      if (pick == 0 || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    const int size = static_cast<int>(current.size());
    if (size + live.size() / 2 <= best_size) return;
    if (pick == 0) {
      best = current;
      best_size = size;
      return;
    }
    VertexSet rest = live;
    rest.erase(pick);
    for (int u : g.neighbors(pick) & live) {
      current.emplace_back(pick, u);
      VertexSet next = rest;
      next.erase(u);
      search(next);
      current.pop_back();
    }
    // A vertex of degree one is matched in some maximum matching.
    if (pick_degree > 1) search(rest);
  }
};

// Largest induced matching inside `avail`.
int induced_search(const Graph& g, VertexSet avail, int size, int best) {
  int pick = 0;
  VertexSet live;
  for (int v : avail) {
    if ((g.neighbors(v) & avail).empty()) continue;
    live.insert(v);
    if (pick == 0) pick = v;
  }
  if (pick == 0) return std::max(best, size);
  if (size + live.size() / 2 <= best) return best;
  VertexSet closed_pick = closed_neighborhood(g, pick);
  for (int u : g.neighbors(pick) & live) {
    best = std::max(best, induced_search(g, live - closed_pick - closed_neighborhood(g, u), size + 1, best));
  }
  VertexSet rest = live;
  rest.erase(pick);
  return induced_search(g, rest, size, best);
}

}  // namespace

void for_each_matching(const Graph& g, int k, const std::function<bool(const Matching&)>& visit) {
  if (k < 0) return;
  std::vector<Edge> chosen;
  bool stop = false;
  matchings_from(g, k, 0, VertexSet(), chosen, visit, stop);
}

std::vector<Matching> enumerate_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  for_each_matching(g, k, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t count_matchings(const Graph& g, int k) {
  std::size_t count = 0;
  for_each_matching(g, k, [&](const Matching&) {
    ++count;
    return true;
  });
  return count;
}

Matching maximum_matching(const Graph& g, VertexSet within) {
  MaxMatching mm{g, {}, {}, -1};
  mm.search(within & g.vertices());
  return Matching(mm.best);
}

Matching maximum_matching(const Graph& g) { return maximum_matching(g, g.vertices()); }

int matching_number(const Graph& g, VertexSet within) { return maximum_matching(g, within).size(); }

int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

int induced_matching_number(const Graph& g) { return induced_search(g, g.vertices(), 0, 0); }

int restricted_matching_number(const Graph& g) {
  int best = 0;
  for (Edge e : g.edges()) {
    VertexSet blocked = closed_neighborhood(g, e.u) | closed_neighborhood(g, e.v);
    best = std::max(best, 1 + matching_number(g, g.vertices() - blocked));
  }
  return best;
}

bool is_gap(const Graph& g, Edge e, Edge f) {
  if (e.ends().intersects(f.ends())) return false;
  VertexSet reach = g.neighbors(e.u) | g.neighbors(e.v);
  return !reach.intersects(f.ends());
}

bool is_gap_free(const Graph& g) { return induced_matching_number(g) <= 1; }

bool has_perfect_matching(const Graph& g) { return 2 * matching_number(g) == g.order(); }

bool tree_perfect_criterion(const Graph& g) {
  if (!is_tree(g)) throw PreconditionError("tree_perfect_criterion expects a tree");
  for (int i = 1; i <= g.order(); ++i) {
    InducedSubgraph rest = remove_vertices(g, VertexSet::singleton(i));
    int odd = 0;
    for (VertexSet comp : connected_components(rest.graph)) odd += comp.size() % 2;
    if (odd != 1) return false;
  }
  return true;
}

namespace {

// Enumerates maximal matchings by branching on the smallest vertex that can
// still be matched: match it to some free neighbor, or leave it unmatched
// for good (then each of its neighbors must end up covered).
struct MaximalSearch {
  const Graph& g;
  std::vector<Edge> current;
  const std::function<bool(const Matching&)>& visit;
  bool stop = false;

  void run(VertexSet free, VertexSet abandoned) {
    if (stop) return;
    const VertexSet open = free - abandoned;
    int pick = 0;
    for (int v : open) {
      if (!(g.neighbors(v) & open).empty()) {
        pick = v;
        break;
      }
    }
    if (pick == 0) {
      // Maximal iff no edge has both endpoints free.
      for (int v : free) {
        if (!(g.neighbors(v) & free).empty()) return;
      }
      if (!visit(Matching(current))) stop = true;
      return;
    }
    for (int u : g.neighbors(pick) & open) {
      current.emplace_back(pick, u);
      VertexSet next = free;
      next.erase(pick);
      next.erase(u);
      run(next, abandoned);
      current.pop_back();
      if (stop) return;
    }
    VertexSet gave_up = abandoned;
    gave_up.insert(pick);
    run(free, gave_up);
  }
};

void for_each_maximal_matching(const Graph& g, const std::function<bool(const Matching&)>& visit) {
  MaximalSearch s{g, {}, visit};
  s.run(g.vertices(), VertexSet());
}

}  // namespace

std::vector<Matching> enumerate_maximal_matchings(const Graph& g) {
  std::vector<Matching> out;
  for_each_maximal_matching(g, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) { return a.edges() < b.edges(); });
  return out;
}

bool is_equimatchable(const Graph& g) {
  const int nu = matching_number(g);
  bool equi = true;
  for_each_maximal_matching(g, [&](const Matching& m) {
    if (m.size() != nu) equi = false;
    return equi;
  });
  return equi;
}

std::vector<Edge> greedy_matching_extension(const Graph& g, VertexSet v) {
  if (!v.subset_of(g.vertices())) throw InputError("vertex set " + v.to_string() + " outside the graph");
  if (!is_equimatchable(g)) throw PreconditionError("greedy_matching_extension expects an equimatchable graph");
  const int target = matching_number(g);
  std::vector<Edge> out;
  VertexSet current = v;
  int nu = matching_number(g, current);
  while (nu < target) {
    Matching m = maximum_matching(g, current);
    // m is not maximal in g, so some edge avoids all of its vertices.
    Edge extension;
    bool found = false;
    for (Edge e : g.edges()) {
      if (!e.ends().intersects(m.vertices())) {
        extension = e;
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("maximum matching of G_V is maximal in G; G is not equimatchable");
    const VertexSet unmatched = current - m.vertices();
    Edge step = extension;
    for (int end : {extension.v, extension.u}) {
      VertexSet hits = g.neighbors(end) & unmatched;
      if (!hits.empty()) {
        step = Edge(end, hits.min());
        break;
      }
    }
    if (matching_number(g, current | step.ends()) != nu + 1) {
      // The construction above always works on equimatchable graphs; the scan
      // keeps the postcondition if a caller hands us something unexpected.
      found = false;
      for (Edge e : g.edges()) {
        if (matching_number(g, current | e.ends()) == nu + 1) {
          step = e;
          found = true;
          break;
        }
      }
      if (!found) throw PreconditionError("no edge raises the matching number by exactly one");
    }
    out.push_back(step);
    current |= step.ends();
    ++nu;
  }
  return out;
}

}  // namespace matchpow
