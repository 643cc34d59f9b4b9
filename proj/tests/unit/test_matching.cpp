#include <set>

#include "doctest.h"
#include "matchpow/graph_enum.hpp"
#include "matchpow/graph_io.hpp"
#include "matchpow/matching.hpp"
#include "oracles.hpp"

using namespace matchpow;

namespace {

std::vector<Graph> small_graphs() {
  std::vector<Graph> out;
  for (int n = 1; n <= 6; ++n) {
    const auto& gs = enumerate_graphs(n);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  Rng rng(11);
  for (int i = 0; i < 60; ++i) out.push_back(random_graph(rng.between(7, 9), 2, 5, rng));
  return out;
}

}  // namespace

TEST_CASE("matching numbers agree with brute force") {
  for (const Graph& g : small_graphs()) {
    if (g.size() > 16) continue;
    const auto ref = oracle::matching_numbers(oracle::raw(g));
    INFO(to_graph6(g));
    CHECK(matching_number(g) == ref.nu);
    CHECK(induced_matching_number(g) == ref.nu1);
    CHECK(restricted_matching_number(g) == ref.nu0);
    CHECK(is_gap_free(g) == (ref.nu1 <= 1));
  }
}

TEST_CASE("matching number chain nu1 <= nu0 <= nu") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const int nu = matching_number(g), nu1 = induced_matching_number(g), nu0 = restricted_matching_number(g);
      CHECK(nu1 <= nu0);
      CHECK(nu0 <= nu);
    }
  }
}

TEST_CASE("k-matching enumeration agrees with subset counts") {
  for (const Graph& g : small_graphs()) {
    if (g.size() > 16) continue;
    std::map<int, std::size_t> by_size;
    for (oracle::Mask s : oracle::all_matchings(oracle::raw(g))) ++by_size[std::popcount(s)];
    for (int k = 1; k <= 4; ++k) {
      CHECK(count_matchings(g, k) == by_size[k]);
      for (const Matching& m : enumerate_matchings(g, k)) CHECK(m.size() == k);
    }
  }
}

TEST_CASE("maximal matchings agree with brute force") {
  for (const Graph& g : small_graphs()) {
    if (g.size() > 16) continue;
    const auto raw = oracle::raw(g);
    const auto ref = oracle::maximal_matchings(raw);
    std::set<oracle::Mask> got;
    for (const Matching& m : enumerate_maximal_matchings(g)) {
      oracle::Mask s = 0;
      for (Edge e : m.edges()) s |= oracle::Mask{1} << g.edge_index(e);
      got.insert(s);
    }
    CHECK(got == ref);
    const int nu = oracle::matching_numbers(raw).nu;
    bool equi = true;
    for (oracle::Mask s : ref) equi = equi && std::popcount(s) == nu;
    CHECK(is_equimatchable(g) == equi);
  }
}

TEST_CASE("matching value checks") {
  CHECK_THROWS_AS(Matching({{1, 2}, {2, 3}}), PreconditionError);
  Graph c7 = cycle_graph(7);
  CHECK(matching_number(c7) == 3);
  CHECK(induced_matching_number(c7) == 2);
  CHECK(restricted_matching_number(c7) == 2);
  CHECK(is_equimatchable(c7));
  CHECK_FALSE(is_equimatchable(path_graph(4)));
  CHECK(restricted_matching_number(Graph(3)) == 0);
  CHECK(is_gap(path_graph(5), {1, 2}, {4, 5}));
  CHECK_FALSE(is_gap(path_graph(4), {1, 2}, {3, 4}));
  CHECK(matching_number(c7, VertexSet{1, 2, 3}) == 1);
}

TEST_CASE("perfect matchings of trees: odd-component criterion") {
  for (int n = 1; n <= 12; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      // Brute force over edge subsets would be slow at n = 12; a matching
      // of size n/2 exists iff matching_number says so, and matching_number
      // itself is cross-checked above.
      CHECK(tree_perfect_criterion(t) == has_perfect_matching(t));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      CHECK(tree_perfect_criterion(t) == (2 * oracle::matching_numbers(oracle::raw(t)).nu == n));
    }
  }
  CHECK_THROWS_AS(tree_perfect_criterion(cycle_graph(4)), PreconditionError);
}

TEST_CASE("greedy matching extension raises nu one step at a time") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_equimatchable(g) || g.size() == 0) continue;
      for (oracle::Mask w = 0; w < (oracle::Mask{1} << n); w += 3) {
        const VertexSet v(w);
        const auto steps = greedy_matching_extension(g, v);
        int nu = matching_number(g, v);
        VertexSet cur = v;
        for (Edge e : steps) {
          CHECK(g.has_edge(e));
          cur |= e.ends();
          CHECK(matching_number(g, cur) == ++nu);
        }
        CHECK(nu == matching_number(g));
      }
    }
  }
  CHECK_THROWS_AS(greedy_matching_extension(path_graph(4), {}), PreconditionError);
}
