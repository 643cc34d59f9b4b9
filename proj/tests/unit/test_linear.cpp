#include "doctest.h"
#include "matchpow/betti.hpp"
#include "matchpow/edge_ideal.hpp"
#include "matchpow/graph_enum.hpp"
#include "matchpow/graph_io.hpp"
#include "matchpow/harness.hpp"
#include "matchpow/linear.hpp"
#include "matchpow/matching.hpp"
#include "oracles.hpp"

using namespace matchpow;
using oracle::Mask;

namespace {

MonomialIdeal random_pure(int n, int d, int gens, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SqfMonomial> out;
  for (int i = 0; i < gens; ++i) {
    IndexSet s;
    while (s.size() < d) s.insert(rng.between(1, n));
    out.emplace_back(s);
  }
  return MonomialIdeal(n, out);
}

// Linearly related iff beta_{1,m} = 0 whenever deg m > d + 1, read off the
// Taylor oracle.
bool taylor_linearly_related(const MonomialIdeal& ideal) {
  const int d = *ideal.generation_degree();
  for (const auto& [key, value] : oracle::taylor_betti(oracle::gens(ideal), 32003)) {
    if (key.first == 1 && std::popcount(key.second) > d + 1 && value > 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("syzygy graph structure") {
  SyzygyGraph g(MonomialIdeal(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(g.degree() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.restricted_vertices(0, 2) == std::vector<int>{0, 1, 2});
  CHECK(g.connected_within(0, 2));
  CHECK(g.connected());
  CHECK_THROWS_AS(SyzygyGraph(MonomialIdeal(3, {{1}, {2, 3}})), PreconditionError);
}

TEST_CASE("combinatorial and homological linear relatedness agree") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const MonomialIdeal base = edge_ideal(g);
      for (int k = 1; k <= 3; ++k) {
        const MonomialIdeal p = sqfree_power(base, k);
        const bool comb = is_linearly_related_combinatorial(p);
        CHECK_MESSAGE(comb == is_linearly_related_homological(p), to_graph6(g), " k=", k);
        if (!p.is_zero() && p.size() <= 12) CHECK(comb == taylor_linearly_related(p));
      }
    }
  }
  for (int t = 0; t < 150; ++t) {
    const MonomialIdeal p = random_pure(7, 1 + t % 3, 2 + t % 8, 77 + static_cast<std::uint64_t>(t));
    CHECK(is_linearly_related_combinatorial(p) == taylor_linearly_related(p));
  }
}

TEST_CASE("first syzygy witnesses certify vanishing") {
  for (int t = 0; t < 100; ++t) {
    const MonomialIdeal p = random_pure(7, 2, 3 + t % 7, 300 + static_cast<std::uint64_t>(t));
    const auto taylor = oracle::taylor_betti(oracle::gens(p), 32003);
    for (SqfMonomial m : lcm_lattice(p)) {
      const WitnessReport w = first_syzygy_witness(p, m);
      for (const PairWitness& pw : w.pairs) {
        CHECK(pw.u.lcm(pw.v) == m);
        if (pw.w) {
          CHECK(pw.u.lcm(pw.v).lcm(*pw.w) == m);
          CHECK(pw.u.lcm(*pw.w) != m);
          CHECK(pw.v.lcm(*pw.w) != m);
        }
      }
      if (w.all_witnessed()) {
        auto it = taylor.find({1, m.bits()});
        CHECK((it == taylor.end() || it->second == 0));
      }
    }
  }
}

TEST_CASE("linear quotient orders agree with permutation search") {
  for (int t = 0; t < 150; ++t) {
    const MonomialIdeal p = random_pure(6, 1 + t % 3, 2 + t % 6, 1000 + static_cast<std::uint64_t>(t));
    const auto result = linear_quotients_order(p);
    const bool exists = oracle::has_linear_quotients(oracle::gens(p));
    REQUIRE(result.status != SearchStatus::inconclusive);
    CHECK((result.status == SearchStatus::found) == exists);
    if (result.status == SearchStatus::found) {
      oracle::Gens order;
      for (SqfMonomial m : result.order) order.push_back(m.bits());
      CHECK(oracle::linear_quotient_order(order));
      CHECK(is_linear_quotient_order(result.order));
      std::sort(order.begin(), order.end());
      CHECK(order == oracle::sorted_masks(p));
    }
  }
}

TEST_CASE("order predicates agree with the colon computation") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const MonomialIdeal p = random_pure(6, 2, 2 + t % 6, 2000 + static_cast<std::uint64_t>(t));
    std::vector<SqfMonomial> order = p.generators();
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    oracle::Gens raw;
    for (SqfMonomial m : order) raw.push_back(m.bits());
    CHECK(is_linear_quotient_order(order) == oracle::linear_quotient_order(raw));
    const std::span<const SqfMonomial> all(order);
    const bool prop = admits_linear_quotient(all.first(order.size() - 1), order.back());
    oracle::Gens quot;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) quot.push_back(raw[i] & ~raw.back());
    bool linear = true;
    for (Mask q : oracle::minimal(quot)) linear = linear && std::popcount(q) == 1;
    CHECK(prop == linear);
  }
}

TEST_CASE("linear quotients search edge cases") {
  auto z = linear_quotients_order(MonomialIdeal::zero(3));
  CHECK(z.status == SearchStatus::found);
  CHECK(z.order.empty());
  CHECK_THROWS_AS(linear_quotients_order(MonomialIdeal(3, {{1}, {2, 3}})), PreconditionError);
  // Two disjoint edges: no order has linear quotients.
  CHECK(linear_quotients_order(MonomialIdeal(4, {{1, 2}, {3, 4}})).status == SearchStatus::none);
  const MonomialIdeal hard = sqfree_power(edge_ideal(cycle_graph(7)), 2);
  auto limited = linear_quotients_order(hard, 3);
  CHECK(limited.status == SearchStatus::inconclusive);
  CHECK(to_string(SearchStatus::inconclusive) == "inconclusive");
}

TEST_CASE("top squarefree power has linear quotients on small graphs") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (g.size() == 0) continue;
      const int nu = matching_number(g);
      const auto r = linear_quotients_order(sqfree_power(edge_ideal(g), nu));
      CHECK_MESSAGE(r.status == SearchStatus::found, to_graph6(g));
    }
  }
}
