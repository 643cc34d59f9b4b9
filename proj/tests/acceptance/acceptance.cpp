// Runs the ten acceptance criteria and prints one pass/fail line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "matchpow/betti.hpp"
#include "matchpow/edge_ideal.hpp"
#include "matchpow/graph.hpp"
#include "matchpow/graph_enum.hpp"
#include "matchpow/graph_io.hpp"
#include "matchpow/harness.hpp"
#include "matchpow/ideal.hpp"
#include "matchpow/linear.hpp"
#include "matchpow/matching.hpp"

using namespace matchpow;

namespace {

using Rows = std::map<std::pair<int, int>, std::uint64_t>;

struct Verdict {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

/// (row j - i, column i) -> value, the way a diagram is read.
Rows diagram(const BettiTable& t) {
  Rows rows;
  for (const auto& [key, value] : t.graded_table()) rows[{key.second - key.first, key.first}] = value;
  return rows;
}

std::string describe(const Rows& rows) {
  std::ostringstream s;
  for (const auto& [key, value] : rows) s << key.first << ":" << key.second << "=" << value << " ";
  return s.str();
}

int workers() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::vector<Graph> graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    const auto& gs = enumerate_graphs(k);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return out;
}

Verdict betti_fixture(const Graph& g, int k, const Rows& expected, const std::vector<std::uint64_t>& totals) {
  Verdict v;
  const BettiTable t = multigraded_betti(sqfree_power(edge_ideal(g), k));
  v.require(t.characteristic() == 32003, "characteristic");
  v.require(diagram(t) == expected, "diagram " + describe(diagram(t)));
  v.require(t.totals() == totals, "totals");
  return v;
}

Verdict fig1_cube() {
  return betti_fixture(fixture_graphs().fig1, 3, {{{6, 0}, 14}, {{6, 1}, 19}, {{6, 2}, 6}, {{7, 1}, 1}, {{7, 2}, 1}},
                       {14, 20, 7});
}

Verdict fig2_cube() {
  return betti_fixture(fixture_graphs().fig2, 3, {{{6, 0}, 8}, {{6, 1}, 8}, {{6, 2}, 2}, {{7, 1}, 1}}, {8, 9, 2});
}

Verdict cycle_seven() {
  const Graph c7 = fixture_graphs().c7;
  Verdict v = betti_fixture(c7, 2, {{{4, 0}, 14}, {{4, 1}, 21}, {{4, 2}, 7}, {{5, 2}, 1}}, {14, 21, 8});
  const MonomialIdeal sq = sqfree_power(edge_ideal(c7), 2);
  v.require(restricted_matching_number(c7) == 2, "nu0(C7)");
  v.require(is_linearly_related_homological(sq), "C7 square not linearly related");
  v.require(!has_linear_resolution(sq), "C7 square has a linear resolution");
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::size_t cases = 0;
  for (const Graph& g : graphs_up_to(7)) {
    const int nu = matching_number(g);
    const MonomialIdeal base = edge_ideal(g);
    for (int k = 1; k <= nu; ++k) {
      const MonomialIdeal p = sqfree_power(base, k);
      ++cases;
      v.require(is_linearly_related_combinatorial(p) == is_linearly_related_homological(p),
                "disagreement at " + to_graph6(g) + " k=" + std::to_string(k));
    }
  }
  if (v.ok) v.note = std::to_string(cases) + " (graph, k) pairs";
  return v;
}

Verdict run_suite(const std::string& checks, const std::string& family) {
  Verdict v;
  HarnessConfig cfg;
  cfg.workers = workers();
  const auto reports = run_checks(select_checks(checks), make_family(family, 0), cfg);
  std::size_t inconclusive = 0;
  for (const CheckReport& r : reports) {
    if (r.theorem_backed && r.outcome == Outcome::fail) {
      v.require(false, r.check + " failed on " + r.instance + " " + r.witness);
    }
    if (r.outcome == Outcome::inconclusive) ++inconclusive;
  }
  v.require(inconclusive == 0, std::to_string(inconclusive) + " inconclusive reports");
  if (v.ok) v.note = std::to_string(reports.size()) + " reports on " + family;
  return v;
}

Verdict theorem_suite() {
  return run_suite(
      "lower_bound,upper_bound_k2,linrel_monotone,nu0_lambda,nu0_le_2,ratliff_surprised,ratliff_easy,"
      "ratliff_equimatchable,generator_unimodality,beta1_vanishing,restriction_lemma,induced_monotonicity,froberg",
      "exhaustive-7");
}

Verdict forest_equivalence() {
  Verdict v;
  std::size_t count = 0;
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& g : enumerate_forests(n)) {
      ++count;
      const MonomialIdeal sq = sqfree_power(edge_ideal(g), 2);
      const bool quotients = linear_quotients_order(sq).status == SearchStatus::found;
      const bool resolution = has_linear_resolution(sq);
      const bool related = is_linearly_related_homological(sq);
      const bool small = restricted_matching_number(g) <= 2;
      const ForestClass cls = classify_forest(g);
      bool typed = !cls.empty();
      for (const ForestMatch& m : cls.matches) typed = typed && are_isomorphic(m.instantiate(), g);
      const bool agree = quotients == resolution && resolution == related && related == small && small == typed;
      v.require(agree, "split at " + to_graph6(g));
    }
  }
  if (v.ok) v.note = std::to_string(count) + " forests";
  return v;
}

Verdict trees_with_perfect_matching() {
  Verdict v;
  std::size_t count = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      // Brute force: some set of n/2 pairwise disjoint edges exists.
      const bool brute = n % 2 == 0 && count_matchings(t, n / 2) > 0;
      v.require(tree_perfect_criterion(t) == brute, "odd-component criterion wrong at " + to_graph6(t));
      if (!brute || n < 2) continue;
      ++count;
      const int nu0 = restricted_matching_number(t);
      const int nu = matching_number(t);
      v.require(has_linear_resolution(sqfree_power(edge_ideal(t), nu0)), "no linear resolution at " + to_graph6(t));
      if (n > 2) v.require(nu0 == nu - 1, "nu0 != nu - 1 at " + to_graph6(t));
    }
  }
  if (v.ok) v.note = std::to_string(count) + " trees";
  return v;
}

Verdict top_power() {
  Verdict v;
  std::size_t count = 0;
  for (const Graph& g : graphs_up_to(7)) {
    if (g.size() == 0) continue;
    ++count;
    const auto r = linear_quotients_order(sqfree_power(edge_ideal(g), matching_number(g)));
    v.require(r.status == SearchStatus::found, to_string(r.status) + " at " + to_graph6(g));
  }
  if (v.ok) v.note = std::to_string(count) + " graphs";
  return v;
}

Verdict ratliff() {
  Verdict v;
  const auto family = make_family("random-ideals-500", 0);
  v.require(family.size() == 500, "family size");
  for (const Instance& inst : family) {
    for (int k = 2; k <= 3; ++k) {
      const MonomialIdeal p = sqfree_power(inst.ideal, k);
      v.require(colon(p, inst.ideal) == p, "fails at " + inst.label + " k=" + std::to_string(k));
    }
  }
  return v;
}

Verdict lambda_counterexamples() {
  Verdict v;
  for (const Graph& g : {fixture_graphs().fig1, fixture_graphs().fig2}) {
    const int lam = lambda(g);
    const int nu0 = restricted_matching_number(g);
    v.require(lam == 4 && nu0 == 3, "lambda=" + std::to_string(lam) + " nu0=" + std::to_string(nu0));
  }
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double target_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fig1: Betti diagram of I^[3]", 60, fig1_cube},
      {2, "fig2: Betti diagram of I^[3]", 30, fig2_cube},
      {3, "C7 square: diagram, nu0, linearly related, not linear", 30, cycle_seven},
      {4, "combinatorial = homological linear relatedness, n <= 7", 1800, oracle_equivalence},
      {5, "theorem suite over all graphs n <= 7", 1800, theorem_suite},
      {6, "forest five-way equivalence, n <= 9", 1800, forest_equivalence},
      {7, "trees with a perfect matching, n <= 12", 1800, trees_with_perfect_matching},
      {8, "top squarefree power has linear quotients, n <= 7", 1800, top_power},
      {9, "I^[k] : I = I^[k] on 500 random ideals", 1800, ratliff},
      {10, "lambda = 4 > nu0 = 3 for fig1 and fig2", 60, lambda_counterexamples},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.target_seconds;
    const bool pass = v.ok && in_time;
    if (!pass) ++failed;
    std::string note = v.note;
    if (v.ok && !in_time) note = "over the " + std::to_string(static_cast<int>(c.target_seconds)) + " s target";
    std::printf("%s  %2d  %-56s %8.2f s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
