#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matchpow/graph.hpp"

namespace matchpow {

/// perm[i] is the vertex of g placed at position i+1 in the canonical
/// relabeling. Individualization-refinement; no automorphism pruning, so
/// meant for the desk-scale orders used here (n <= 10 comfortably).
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
/// graph6 of the canonical form; equal iff the graphs are isomorphic.
std::string canonical_certificate(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);

/// All non-isomorphic graphs on exactly n vertices, in a fixed order.
/// n <= 8 (12346 graphs at n = 8). Results are cached for the process.
const std::vector<Graph>& enumerate_graphs(int n);
/// All non-isomorphic trees on exactly n vertices (n >= 1).
const std::vector<Graph>& enumerate_trees(int n);
/// All non-isomorphic forests on exactly n vertices without isolated
/// vertices (every component has at least one edge).
std::vector<Graph> enumerate_forests(int n);

/// Deterministic 64-bit generator with platform-independent bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// G(n, p) with p = num/den.
Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng& rng);

}  // namespace matchpow
