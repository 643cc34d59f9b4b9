#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matchpow/budget.hpp"
#include "matchpow/ideal.hpp"

namespace matchpow {

/// Generators of a pure-degree ideal, joined when their lcm has degree d+1.
class SyzygyGraph {
 public:
  /// Throws PreconditionError for mixed generation degrees.
  explicit SyzygyGraph(const MonomialIdeal& ideal);

  int degree() const { return degree_; }
  const std::vector<SqfMonomial>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  bool adjacent(int a, int b) const;
  std::size_t edge_count() const;

  /// Indices of the generators dividing lcm(u, v): the vertex set of G^{(u,v)}.
  std::vector<int> restricted_vertices(int a, int b) const;
  /// u and v are joined by a path inside G^{(u,v)}.
  bool connected_within(int a, int b) const;
  bool connected() const;

 private:
  int degree_ = 0;
  std::vector<SqfMonomial> vertices_;
  std::vector<std::vector<int>> adjacency_;
};

/// Every pair of generators is connected inside its restricted syzygy
/// graph. True for the zero ideal.
bool is_linearly_related_combinatorial(const MonomialIdeal& ideal, Budget* budget = nullptr);

struct PairWitness {
  SqfMonomial u;
  SqfMonomial v;
  /// w with lcm(u,v,w) = m and lcm(u,w) != m != lcm(v,w).
  std::optional<SqfMonomial> w;
};

struct WitnessReport {
  SqfMonomial m;
  std::vector<PairWitness> pairs;
  /// Every pair with lcm m has a witness (vacuously true with no pairs);
  /// then beta_{1,m} = 0.
  bool all_witnessed() const;
};

WitnessReport first_syzygy_witness(const MonomialIdeal& ideal, SqfMonomial m);

enum class SearchStatus { found, none, inconclusive };

std::string to_string(SearchStatus status);

struct LinearQuotientsResult {
  SearchStatus status = SearchStatus::none;
  std::vector<SqfMonomial> order;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kLinearQuotientsNodeBudget = 10'000'000;

/// Searches for an order with linear quotients. Candidates are tried by
/// descending count of linear neighbours already placed, then generator
/// order; dead prefix sets are remembered. The zero ideal yields `found`
/// with the empty order. Throws PreconditionError for mixed degrees.
LinearQuotientsResult linear_quotients_order(const MonomialIdeal& ideal,
                                             std::uint64_t node_budget = kLinearQuotientsNodeBudget,
                                             Budget* budget = nullptr);

/// (u_1..u_{j-1}) : u_j is generated by variables for every j.
bool is_linear_quotient_order(std::span<const SqfMonomial> order);
/// Property (*) for u after the set `earlier`: each w in earlier has some
/// v in earlier with v : u a single variable dividing w : u.
bool admits_linear_quotient(std::span<const SqfMonomial> earlier, SqfMonomial u);

}  // namespace matchpow
