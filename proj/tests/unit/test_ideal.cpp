#include "doctest.h"
#include "matchpow/graph_enum.hpp"
#include "matchpow/harness.hpp"
#include "matchpow/ideal.hpp"
#include "matchpow/ideal_io.hpp"
#include "oracles.hpp"

using namespace matchpow;
using oracle::Mask;

namespace {

std::vector<MonomialIdeal> sample_ideals(int count, std::uint64_t seed) {
  std::vector<MonomialIdeal> out;
  for (int i = 0; i < count; ++i) out.push_back(random_ideal(7, 7, seed * 1000 + static_cast<std::uint64_t>(i)));
  return out;
}

// Every squarefree monomial in the ambient ring satisfies pred(m) exactly
// when it lies in `ideal`.
template <class Pred>
bool same_members(const MonomialIdeal& ideal, int n, Pred pred) {
  const oracle::Gens g = oracle::gens(ideal);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (oracle::member(g, m) != pred(m)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  SqfMonomial a{1, 2}, b{2, 3};
  CHECK(a.lcm(b) == SqfMonomial{1, 2, 3});
  CHECK(a.gcd(b) == SqfMonomial{2});
  CHECK(a.colon(b) == SqfMonomial{1});
  CHECK_FALSE(a.coprime(b));
  CHECK(a.to_string() == "x1x2");
  CHECK(SqfMonomial::one().to_string() == "1");
  CHECK(SqfMonomial{3} < SqfMonomial{1, 2});
  CHECK(SqfMonomial{1, 3} < SqfMonomial{2, 3});
}

TEST_CASE("construction minimalizes") {
  MonomialIdeal i(4, {{1, 2, 3}, {1, 2}, {3, 4}, {1, 2}});
  CHECK(i.size() == 2);
  CHECK(to_string(i) == "(x1x2, x3x4)");
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK(to_string(MonomialIdeal::zero(3)) == "(0)");
  CHECK(MonomialIdeal(3, {{1}, SqfMonomial::one()}).is_unit());
  CHECK_THROWS_AS(MonomialIdeal(2, {{3}}), InputError);
  CHECK(i.generation_degree() == 2);
  CHECK_FALSE(MonomialIdeal(3, {{1}, {2, 3}}).generation_degree().has_value());
  for (const auto& ideal : sample_ideals(50, 1)) {
    oracle::Gens raw = oracle::gens(ideal);
    CHECK(oracle::minimal(raw) == oracle::sorted_masks(ideal));
  }
}

TEST_CASE("squarefree powers agree with subset enumeration") {
  for (const auto& ideal : sample_ideals(80, 2)) {
    for (int k = 1; k <= 4; ++k) {
      CHECK(oracle::sorted_masks(sqfree_power(ideal, k)) == oracle::sqfree_power(oracle::gens(ideal), k));
    }
  }
  CHECK_THROWS_AS(sqfree_power(MonomialIdeal(2, {{1, 2}}), 0), PreconditionError);
  CHECK(sqfree_power(MonomialIdeal::unit(3), 3).is_unit());
}

TEST_CASE("colon, intersection and sum agree with membership") {
  auto ideals = sample_ideals(60, 3);
  for (std::size_t t = 0; t + 1 < ideals.size(); ++t) {
    const MonomialIdeal& a = ideals[t];
    const MonomialIdeal& b = ideals[t + 1];
    const int n = std::max(a.ambient(), b.ambient());
    const auto ga = oracle::gens(a), gb = oracle::gens(b);
    CHECK(same_members(intersect(a, b), n, [&](Mask m) { return oracle::member(ga, m) && oracle::member(gb, m); }));
    CHECK(same_members(sum(a, b), n, [&](Mask m) { return oracle::member(ga, m) || oracle::member(gb, m); }));
    // m in a : b iff m * v in a for every generator v of b; with squarefree
    // generators, m * v lies in a iff the union of supports does.
    CHECK(same_members(colon(a, b), n, [&](Mask m) {
      return std::all_of(gb.begin(), gb.end(), [&](Mask v) { return oracle::member(ga, m | v); });
    }));
    const Mask v = gb.front();
    CHECK(same_members(colon(a, SqfMonomial(IndexSet(v))), n, [&](Mask m) { return oracle::member(ga, m | v); }));
  }
  CHECK_THROWS_AS(colon(MonomialIdeal(2, {{1}}), MonomialIdeal::zero(2)), PreconditionError);
}

TEST_CASE("multiply, restrict, relabel") {
  MonomialIdeal i(4, {{1, 2}, {2, 3}});
  CHECK(to_string(multiply(i, SqfMonomial{4})) == "(x1x2x4, x2x3x4)");
  CHECK_THROWS_AS(multiply(i, SqfMonomial{2}), PreconditionError);
  CHECK(to_string(restrict(i, SqfMonomial{1, 2, 4})) == "(x1x2)");
  CHECK(to_string(relabel(i, {4, 3, 2, 1}, 4)) == "(x2x3, x3x4)");
}

TEST_CASE("squarefree Ratliff on random ideals") {
  for (const auto& ideal : sample_ideals(100, 4)) {
    for (int k = 2; k <= 3; ++k) CHECK(ratliff_check(ideal, k, 1) != RatliffOutcome::fails);
  }
  CHECK(ratliff_check(MonomialIdeal(2, {{1, 2}}), 2, 2) == RatliffOutcome::vacuous);
  CHECK_THROWS_AS(ratliff_check(MonomialIdeal(2, {{1, 2}}), 1, 2), PreconditionError);
}

TEST_CASE("ideal text formats round trip") {
  for (const auto& ideal : sample_ideals(30, 5)) {
    CHECK(parse_ideal_text(format_ideal_text(ideal)) == ideal);
    CHECK(parse_ideal_compact(format_ideal_compact(ideal)) == ideal);
  }
  MonomialIdeal z = parse_ideal_compact("n=4:");
  CHECK(z.is_zero());
  CHECK(z.ambient() == 4);
  CHECK(parse_ideal_text("n 3\n()\n").is_unit());
  CHECK(parse_ideal_text("# c\n1 2\n\n2 3\n") == MonomialIdeal(3, {{1, 2}, {2, 3}}));
  CHECK(format_ideal_compact(MonomialIdeal(4, {{1, 2}, {2, 3}})) == "n=4:1-2,2-3");
  CHECK(ideal_to_json(MonomialIdeal(3, {{1, 2}})) == R"({"generators":[[1,2]],"n":3})");
  CHECK_THROWS_AS(parse_ideal_text("1 1\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_text("n 2\n1 3\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_text("1 2\nn 3\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_text("a b\n"), InputError);
  CHECK_THROWS_AS(parse_ideal_compact("1-2"), InputError);
}
