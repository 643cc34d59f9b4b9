#include "doctest.h"
#include "matchpow/betti.hpp"
#include "matchpow/budget.hpp"
#include "matchpow/edge_ideal.hpp"
#include "matchpow/gf_rank.hpp"
#include "matchpow/graph_enum.hpp"
#include "matchpow/harness.hpp"
#include "oracles.hpp"

using namespace matchpow;
using oracle::Mask;

namespace {

std::map<std::pair<int, Mask>, std::uint64_t> as_map(const BettiTable& t) {
  std::map<std::pair<int, Mask>, std::uint64_t> out;
  for (const BettiEntry& e : t.entries()) out[{e.i, e.m.bits()}] = e.value;
  return out;
}


std::vector<std::vector<std::int64_t>> to_dense(const std::vector<SparseVector>& cols, std::size_t rows) {
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (auto [r, v] : cols[c]) a[r][c] = v;
  }
  return a;
}

std::vector<SparseVector> random_columns(Rng& rng, std::size_t count, std::size_t rows, std::uint32_t p, int density) {
  std::vector<SparseVector> cols(count);
  for (auto& col : cols) {
    for (std::uint32_t r = 0; r < rows; ++r) {
      if (rng.chance(static_cast<std::uint64_t>(density), 100)) {
        col.emplace_back(r, static_cast<std::uint32_t>(1 + rng.below(p - 1)));
      }
    }
  }
  return cols;
}

const MonomialIdeal& fig1_cube() {
  static const MonomialIdeal i = sqfree_power(edge_ideal(fixture_graphs().fig1), 3);
  return i;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(32003));
  CHECK(is_prime(4294967291U));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(32001));
  CHECK(reduce_mod(-1, 7) == 6);
}

TEST_CASE("rank over GF(p) agrees with plain elimination") {
  Rng rng(3);
  for (std::uint32_t p : {2U, 3U, 32003U}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = static_cast<std::size_t>(rng.between(1, 30));
      const std::size_t cols = static_cast<std::size_t>(rng.between(1, 30));
      auto c = random_columns(rng, cols, rows, p, rng.between(5, 60));
      CHECK(rank_mod_p(c, rows, p) == oracle::rank_mod(to_dense(c, rows), p));
    }
  }
  SUBCASE("sparse path above the dense column limit") {
    auto c = random_columns(rng, 6000, 40, 32003, 3);
    // Duplicate some columns so the rank is not trivially full.
    for (std::size_t i = 0; i < 100; ++i) c[5000 + i] = c[i];
    CHECK(rank_mod_p(c, 40, 32003) == oracle::rank_mod(to_dense(c, 40), 32003));
  }
  CHECK(rank_mod_p({}, 5, 7) == 0);
}

TEST_CASE("Betti numbers agree with the Taylor complex") {
  for (int t = 0; t < 120; ++t) {
    const MonomialIdeal ideal = random_ideal(7, 9, 500 + static_cast<std::uint64_t>(t));
    for (std::uint32_t p : {2U, 32003U}) {
      BettiOptions o;
      o.characteristic = p;
      CHECK(as_map(multigraded_betti(ideal, o)) == oracle::taylor_betti(oracle::gens(ideal), p));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (int k = 1; k <= 3; ++k) {
        const MonomialIdeal ideal = sqfree_power(edge_ideal(g), k);
        if (ideal.size() > 12) continue;
        CHECK(as_map(multigraded_betti(ideal)) == oracle::taylor_betti(oracle::gens(ideal), 32003));
      }
    }
  }
}

TEST_CASE("fig1 cube diagram") {
  const BettiTable t = multigraded_betti(fig1_cube());
  CHECK(as_map(t) == oracle::taylor_betti(oracle::gens(fig1_cube()), 32003));
  CHECK(t.graded(0, 6) == 14);
  CHECK(t.graded(1, 7) == 19);
  CHECK(t.graded(2, 8) == 6);
  CHECK(t.graded(1, 8) == 1);
  CHECK(t.graded(2, 9) == 1);
  CHECK(t.totals() == std::vector<std::uint64_t>{14, 20, 7});
  CHECK(regularity(t) == 7);
  CHECK(projdim(t) == 2);
  CHECK_FALSE(is_linearly_related(t));
  const std::string expected =
      "          0     1     2\n"
      "-----------------------\n"
      "6:       14    19     6\n"
      "7:        -     1     1\n"
      "-----------------------\n"
      "Tot:     14    20     7\n";
  CHECK(render_betti_diagram(t) == expected);
}

TEST_CASE("fig2 cube and C7 square diagrams") {
  const MonomialIdeal f2 = sqfree_power(edge_ideal(fixture_graphs().fig2), 3);
  const BettiTable t2 = multigraded_betti(f2);
  CHECK(as_map(t2) == oracle::taylor_betti(oracle::gens(f2), 32003));
  CHECK(t2.graded_table() == std::map<std::pair<int, int>, std::uint64_t>{{{0, 6}, 8}, {{1, 7}, 8}, {{1, 8}, 1}, {{2, 8}, 2}});
  const MonomialIdeal c = sqfree_power(edge_ideal(cycle_graph(7)), 2);
  const BettiTable t3 = multigraded_betti(c);
  CHECK(as_map(t3) == oracle::taylor_betti(oracle::gens(c), 32003));
  CHECK(t3.graded_table() == std::map<std::pair<int, int>, std::uint64_t>{{{0, 4}, 14}, {{1, 5}, 21}, {{2, 6}, 7}, {{2, 7}, 1}});
  CHECK(is_linearly_related(t3));
  CHECK_FALSE(has_linear_resolution(t3));
  CHECK(regularity(t3) == 5);
}

TEST_CASE("conventions for zero and unit ideals") {
  const BettiTable z = multigraded_betti(MonomialIdeal::zero(3));
  CHECK(z.empty());
  CHECK(regularity(z) == 1);
  CHECK(projdim(z) == -1);
  CHECK(has_linear_resolution(MonomialIdeal::zero(3)));
  CHECK(render_betti_diagram(z) == "zero ideal: no Betti numbers\n");
  CHECK(regularity(MonomialIdeal::unit(3)) == 0);
  CHECK(projdim(MonomialIdeal::unit(3)) == 0);
}

TEST_CASE("option handling") {
  BettiOptions bad;
  bad.characteristic = 32001;
  CHECK_THROWS_AS(multigraded_betti(fig1_cube(), bad), InputError);
  BettiOptions tiny;
  tiny.max_generators = 3;
  CHECK_THROWS_AS(multigraded_betti(fig1_cube(), tiny), BudgetExceeded);
  CHECK_THROWS_AS(lcm_lattice(fig1_cube(), 5), BudgetExceeded);
  Budget budget(std::nullopt, 10);
  BettiOptions limited;
  limited.budget = &budget;
  CHECK_THROWS_AS(multigraded_betti(fig1_cube(), limited), BudgetExceeded);
  CHECK_THROWS_AS(has_linear_resolution(MonomialIdeal(3, {{1}, {2, 3}})), PreconditionError);
}

TEST_CASE("parallel and truncated computations agree with the full table") {
  const BettiTable full = multigraded_betti(fig1_cube());
  BettiOptions par;
  par.workers = 4;
  CHECK(multigraded_betti(fig1_cube(), par) == full);
  BettiOptions first;
  first.max_homological = 1;
  const BettiTable t = multigraded_betti(fig1_cube(), first);
  CHECK_FALSE(t.complete());
  for (const BettiEntry& e : full.entries()) {
    if (e.i <= 1) CHECK(t.at(e.i, e.m) == e.value);
  }
  for (const BettiEntry& e : t.entries()) CHECK(e.i <= 1);
}

TEST_CASE("lcm lattice is closed under lcm") {
  for (int t = 0; t < 40; ++t) {
    const MonomialIdeal ideal = random_ideal(8, 8, 900 + static_cast<std::uint64_t>(t));
    const auto lattice = lcm_lattice(ideal);
    std::set<Mask> ref;
    const auto g = oracle::gens(ideal);
    for (Mask s = 1; s < (Mask{1} << g.size()); ++s) {
      Mask l = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if ((s >> i) & 1) l |= g[i];
      }
      ref.insert(l);
    }
    std::set<Mask> got;
    for (SqfMonomial m : lattice) got.insert(m.bits());
    CHECK(got == ref);
  }
}

TEST_CASE("restriction to a multidegree") {
  const BettiTable full = multigraded_betti(fig1_cube());
  for (SqfMonomial m : lcm_lattice(fig1_cube())) {
    CHECK(multigraded_betti(restrict(fig1_cube(), m)) == full.restricted_to(m));
  }
}

TEST_CASE("json round trip") {
  const BettiTable full = multigraded_betti(fig1_cube());
  const BettiTable back = betti_from_json(betti_to_json(full));
  CHECK(back == full);
  CHECK(back.degree() == 6);
  CHECK_THROWS(betti_from_json("{\"char\": 7}"));
}

TEST_CASE("beta_1 vanishes beyond the Taylor bound in small examples") {
  // beta_{i,m} != 0 forces deg m <= (i+1) * d, since m is an lcm of at most
  // i+1 generators of degree d.
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const MonomialIdeal ideal = edge_ideal(g);
      const BettiTable t = multigraded_betti(ideal);
      for (const BettiEntry& e : t.entries()) CHECK(e.m.degree() <= 2 * (e.i + 1));
    }
  }
}
