#include "matchpow/graph_enum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "matchpow/graph_io.hpp"

namespace matchpow {

namespace {

using Coloring = std::vector<int>;

// Re-ranks vertices by (color, sorted neighbor colors) until stable.
void refine(const Graph& g, Coloring& colors) {
  const int n = g.order();
  int classes = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
      std::vector<int> s;
      s.push_back(colors[static_cast<std::size_t>(v - 1)]);
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(colors[static_cast<std::size_t>(u - 1)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sigs[static_cast<std::size_t>(v - 1)] = {std::move(s), v};
    }
    std::vector<std::vector<int>> distinct;
    distinct.reserve(sigs.size());
    for (auto& s : sigs) distinct.push_back(s.first);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto& [sig, v] : sigs) {
      colors[static_cast<std::size_t>(v - 1)] =
          static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig) - distinct.begin());
    }
    int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

struct Search {
  const Graph& g;
  std::vector<std::uint64_t> best;
  std::vector<int> best_perm;

  void leaf(const Coloring& colors) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) perm[static_cast<std::size_t>(colors[static_cast<std::size_t>(v - 1)])] = v;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
          rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        }
      }
    }
    if (best_perm.empty() || rows < best) {
      best = std::move(rows);
      best_perm = std::move(perm);
    }
  }

  void run(Coloring colors) {
    refine(g, colors);
    const int n = g.order();
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (count[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> tried;
    for (int v = 1; v <= n; ++v) {
      if (colors[static_cast<std::size_t>(v - 1)] != target) continue;
      // Swapping twins in the same cell is an automorphism preserving the
      // coloring, so their subtrees produce identical certificates.
      bool twin = false;
      for (int u : tried) {
        VertexSet nu = g.neighbors(u);
        VertexSet nv = g.neighbors(v);
        nu.erase(v);
        nv.erase(u);
        if (nu == nv) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);
      Coloring next = colors;
      for (int u = 1; u <= n; ++u) {
        int& c = next[static_cast<std::size_t>(u - 1)];
        c = 2 * c + ((c == target && u != v) ? 1 : 0);
      }
      // compress back to ranks
      std::vector<int> sorted = next;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int& c : next) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
      run(std::move(next));
    }
  }
};

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  while (true) {
    std::uint64_t x = engine_() & mask;
    if (x < bound) return x;
  }
}

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  Search s{g, {}, {}};
  s.run(Coloring(static_cast<std::size_t>(g.order()), 0));
  return s.best_perm;
}

Graph canonical_form(const Graph& g) {
  std::vector<int> perm = canonical_labeling(g);
  std::vector<int> position(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < perm.size(); ++i) position[static_cast<std::size_t>(perm[i])] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (Edge e : g.edges()) edges.emplace_back(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
  return Graph(g.order(), edges);
}

std::string canonical_certificate(const Graph& g) { return to_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.size() == h.size() && canonical_certificate(g) == canonical_certificate(h);
}

namespace {

std::vector<Graph> sorted_unique(std::vector<std::pair<std::string, Graph>> found) {
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

template <typename Build>
const std::vector<Graph>& cached(std::map<int, std::vector<Graph>>& cache, std::mutex& mu, int n, Build build) {
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Graph> value = build(n);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(value)).first->second;
}

std::vector<Graph> build_graphs(int n);
std::vector<Graph> build_trees(int n);

std::map<int, std::vector<Graph>> graph_cache;
std::mutex graph_mu;
std::map<int, std::vector<Graph>> tree_cache;
std::mutex tree_mu;

std::vector<Graph> build_graphs(int n) {
  if (n == 0) return {Graph(0)};
  const std::vector<Graph>& smaller = enumerate_graphs(n - 1);
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  for (const Graph& h : smaller) {
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      std::vector<Edge> edges = h.edges();
      for (int v : VertexSet(mask)) edges.emplace_back(v, n);
      Graph g(n, edges);
      std::string cert = canonical_certificate(g);
      if (seen.insert(cert).second) found.emplace_back(cert, canonical_form(g));
    }
  }
  return sorted_unique(std::move(found));
}

std::vector<Graph> build_trees(int n) {
  if (n == 1) return {Graph(1)};
  const std::vector<Graph>& smaller = enumerate_trees(n - 1);
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  for (const Graph& t : smaller) {
    for (int v = 1; v < n; ++v) {
      std::vector<Edge> edges = t.edges();
      edges.emplace_back(v, n);
      Graph g(n, edges);
      std::string cert = canonical_certificate(g);
      if (seen.insert(cert).second) found.emplace_back(cert, canonical_form(g));
    }
  }
  return sorted_unique(std::move(found));
}

// Multisets of trees (sizes >= 2) with total order n, as non-increasing
// sequences of (size, index) pairs.
void combine_forests(int remaining, std::pair<int, std::size_t> bound, std::vector<std::pair<int, std::size_t>>& parts,
                     std::vector<Graph>& out) {
  if (remaining == 0) {
    Graph g(0);
    for (auto [size, idx] : parts) g = disjoint_union(g, enumerate_trees(size)[idx]);
    out.push_back(std::move(g));
    return;
  }
  for (int size = std::min(remaining, bound.first); size >= 2; --size) {
    const auto& trees = enumerate_trees(size);
    std::size_t limit = size == bound.first ? bound.second + 1 : trees.size();
    for (std::size_t idx = 0; idx < limit && idx < trees.size(); ++idx) {
      parts.emplace_back(size, idx);
      combine_forests(remaining - size, {size, idx}, parts, out);
      parts.pop_back();
    }
  }
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 0 || n > 8) throw InputError("exhaustive graph enumeration supports 0 <= n <= 8");
  return cached(graph_cache, graph_mu, n, build_graphs);
}

const std::vector<Graph>& enumerate_trees(int n) {
  if (n < 1 || n > 16) throw InputError("tree enumeration supports 1 <= n <= 16");
  return cached(tree_cache, tree_mu, n, build_trees);
}

std::vector<Graph> enumerate_forests(int n) {
  if (n < 2 || n > 16) return {};
  std::vector<Graph> out;
  std::vector<std::pair<int, std::size_t>> parts;
  combine_forests(n, {n, enumerate_trees(n).size()}, parts, out);
  return out;
}

Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (rng.chance(num, den)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace matchpow
