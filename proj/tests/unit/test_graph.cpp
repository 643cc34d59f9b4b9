#include <set>

#include "doctest.h"
#include "matchpow/graph.hpp"
#include "matchpow/graph_enum.hpp"
#include "matchpow/graph_io.hpp"
#include "oracles.hpp"

using namespace matchpow;

TEST_CASE("index set basics") {
  IndexSet s{1, 3, 64};
  CHECK(s.size() == 3);
  CHECK(s.min() == 1);
  CHECK(s.max() == 64);
  CHECK(s.to_vector() == std::vector<int>{1, 3, 64});
  CHECK(s.to_string() == "{1,3,64}");
  CHECK(IndexSet{1, 3}.subset_of(s));
  CHECK_FALSE(IndexSet{2}.subset_of(s));
  CHECK((s - IndexSet{3}) == IndexSet{1, 64});
  CHECK(IndexSet().min() == 0);
  CHECK_THROWS_AS(IndexSet{65}, InputError);
  CHECK_THROWS_AS(IndexSet{0}, InputError);
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(Graph(65), InputError);
  Graph g(4, {{3, 1}, {1, 2}});
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
  CHECK(g.adjacent(3, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.edge_index({3, 1}) == 1);
  CHECK(g.edge_index({2, 3}) == -1);
  CHECK_THROWS_AS(g.neighbors(5), InputError);
}

TEST_CASE("standard families") {
  CHECK(path_graph(5).size() == 4);
  CHECK(cycle_graph(7).size() == 7);
  CHECK(star_graph(3).degree(1) == 3);
  CHECK(complete_graph(5).size() == 10);
  CHECK(perfect_matching_graph(3).edges() == std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
  Graph u = disjoint_union(path_graph(2), path_graph(3));
  CHECK(u.order() == 5);
  CHECK(connected_components(u).size() == 2);
  Graph pl = proliferate_leaf(path_graph(3), 1, 2);
  CHECK(pl.order() == 5);
  CHECK(pl.degree(2) == 4);
  CHECK_THROWS_AS(proliferate_leaf(cycle_graph(4), 1, 1), PreconditionError);
}

TEST_CASE("induced subgraphs, deletions and complements") {
  Graph c = cycle_graph(6);
  InducedSubgraph s = induced_subgraph(c, {2, 3, 4, 6});
  CHECK(s.graph.order() == 4);
  CHECK(s.graph.size() == 2);
  CHECK(s.origin == std::vector<int>{2, 3, 4, 6});
  CHECK(s.lift({1, 4}) == VertexSet{2, 6});
  CHECK(remove_vertices(c, {1}).graph == path_graph(5));
  Graph iso = isolate_vertices(c, {1});
  CHECK(iso.order() == 6);
  CHECK(iso.size() == 4);
  CHECK(remove_edge(c, {1, 2}).size() == 5);
  CHECK_THROWS_AS(remove_edge(c, {1, 3}), PreconditionError);
  CHECK(complement(complement(c)) == c);
  CHECK(complement(c).size() == 15 - 6);
  CHECK(neighborhood(c, VertexSet{1, 2}) == VertexSet{1, 2, 3, 6});
  CHECK(closed_neighborhood(c, 1) == VertexSet{1, 2, 6});
}

TEST_CASE("forest and tree recognition") {
  CHECK(is_tree(path_graph(5)));
  CHECK_FALSE(is_tree(cycle_graph(5)));
  CHECK(is_forest(disjoint_union(path_graph(2), star_graph(3))));
  CHECK_FALSE(is_tree(disjoint_union(path_graph(2), star_graph(3))));
  CHECK(isolated_vertices(Graph(3, {{1, 2}})) == VertexSet{3});
}

TEST_CASE("chordality agrees with induced-cycle search on all graphs up to 8 vertices") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK_MESSAGE(is_chordal(g) == oracle::chordal(oracle::raw(g)), to_graph6(g));
    }
  }
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK(is_chordal(cycle_graph(3)));
}

TEST_CASE("edge list round trip and errors") {
  Graph g = fixture_graphs().fig1;
  CHECK(parse_edge_list(format_edge_list(g)) == g);
  CHECK(parse_edge_list("# comment\n1 2\n\n2 3  # tail\n") == path_graph(3));
  CHECK(parse_edge_list("n 5\n1 2\n").order() == 5);
  CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("1 x\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n1 3\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("1 1\n"), InputError);
}

TEST_CASE("graph6 encoding") {
  // P3: n=3 -> 'B'; upper triangle bits (1,2)=1 (1,3)=0 (2,3)=1 -> 101000 -> 'g'.
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(parse_graph6("Bg") == path_graph(3));
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK_THROWS_AS(parse_graph6("B"), InputError);
  CHECK_THROWS_AS(parse_graph6("B\x01"), InputError);
  for (const Graph& g : enumerate_graphs(5)) CHECK(parse_graph6(to_graph6(g)) == g);
  Graph big = cycle_graph(40);
  CHECK(parse_graph6(to_graph6(big)) == big);
  CHECK(parse_graph6_stream(">>graph6<<Bg\n# x\nC~\n").size() == 2);
}

TEST_CASE("enumeration counts match brute-force isomorphism classes") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_graphs(n).size() == oracle::count_unlabelled_graphs(n));
    CHECK(enumerate_trees(n).size() == oracle::count_unlabelled_graphs(n, true));
  }
  CHECK(enumerate_trees(6).size() == oracle::count_unlabelled_graphs(6, true));
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic") {
  for (int n = 1; n <= 6; ++n) {
    std::set<oracle::Mask> certs;
    for (const Graph& g : enumerate_graphs(n)) certs.insert(oracle::brute_certificate(n, oracle::raw(g).edges));
    CHECK(certs.size() == enumerate_graphs(n).size());
  }
}

TEST_CASE("forests have no isolated vertices and are distinct") {
  for (int n = 2; n <= 8; ++n) {
    std::set<std::string> certs;
    for (const Graph& g : enumerate_forests(n)) {
      CHECK(is_forest(g));
      CHECK(isolated_vertices(g).empty());
      CHECK(g.order() == n);
      certs.insert(canonical_certificate(g));
    }
    CHECK(certs.size() == enumerate_forests(n).size());
  }
  // Forests without isolated vertices on 6 vertices: trees (6), P2+tree4 (2),
  // P2+P2+P2 (1), P3+P3 (1) -> 10.
  CHECK(enumerate_forests(6).size() == 10);
}

TEST_CASE("canonical form is invariant under relabeling") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.between(1, 9);
    Graph g = random_graph(n, 1, 2, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Edge> edges;
    for (Edge e : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(e.u - 1)], perm[static_cast<std::size_t>(e.v - 1)]);
    Graph h(n, edges);
    CHECK(canonical_certificate(g) == canonical_certificate(h));
    CHECK(are_isomorphic(g, h));
  }
  CHECK_FALSE(are_isomorphic(path_graph(4), star_graph(3)));
}

TEST_CASE("rng is deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const int x = c.between(3, 5);
    CHECK((x >= 3 && x <= 5));
  }
}

TEST_CASE("fixture graphs") {
  const FixtureGraphs& f = fixture_graphs();
  CHECK(f.fig1.order() == 9);
  CHECK(f.fig1.size() == 8);
  CHECK(is_tree(f.fig1));
  CHECK(f.fig2.size() == 8);
  CHECK(connected_components(f.fig2).size() == 2);
  CHECK(f.c7 == cycle_graph(7));
  for (const std::string& name : builtin_graph_names()) CHECK(builtin_graph(name).has_value());
  CHECK_FALSE(builtin_graph("nope").has_value());
}
