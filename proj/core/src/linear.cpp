#include "matchpow/linear.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace matchpow {

SyzygyGraph::SyzygyGraph(const MonomialIdeal& ideal) : vertices_(ideal.generators()) {
  if (!ideal.is_zero()) {
    const std::optional<int> d = ideal.generation_degree();
    if (!d) throw PreconditionError("syzygy graph needs a single generation degree");
    degree_ = *d;
  }
  adjacency_.resize(vertices_.size());
  for (std::size_t a = 0; a < vertices_.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
      if (vertices_[a].lcm(vertices_[b]).degree() == degree_ + 1) {
        adjacency_[a].push_back(static_cast<int>(b));
        adjacency_[b].push_back(static_cast<int>(a));
      }
    }
  }
}

bool SyzygyGraph::adjacent(int a, int b) const {
  const auto& row = adjacency_.at(static_cast<std::size_t>(a));
  return std::binary_search(row.begin(), row.end(), b);
}

std::size_t SyzygyGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

std::vector<int> SyzygyGraph::restricted_vertices(int a, int b) const {
  const SqfMonomial top = vertices_.at(static_cast<std::size_t>(a)).lcm(vertices_.at(static_cast<std::size_t>(b)));
  std::vector<int> out;
  for (std::size_t w = 0; w < vertices_.size(); ++w) {
    if (vertices_[w].divides(top)) out.push_back(static_cast<int>(w));
  }
  return out;
}

bool SyzygyGraph::connected_within(int a, int b) const {
  const SqfMonomial top = vertices_.at(static_cast<std::size_t>(a)).lcm(vertices_.at(static_cast<std::size_t>(b)));
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{a};
  seen[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == b) return true;
    for (int y : adjacency_[static_cast<std::size_t>(x)]) {
      const auto uy = static_cast<std::size_t>(y);
      if (!seen[uy] && vertices_[uy].divides(top)) {
        seen[uy] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

bool SyzygyGraph::connected() const {
  if (vertices_.empty()) return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adjacency_[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == vertices_.size();
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

bool is_linearly_related_combinatorial(const MonomialIdeal& ideal, Budget* budget) {
  if (ideal.is_zero()) return true;
  const SyzygyGraph graph(ideal);
  const auto& gens = graph.vertices();
  // Pairs sharing an lcm share the restricted graph, so one union-find per
  // lcm answers all of them.
  std::unordered_map<std::uint64_t, std::vector<std::pair<int, int>>> by_lcm;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (graph.adjacent(static_cast<int>(a), static_cast<int>(b))) continue;
      by_lcm[gens[a].lcm(gens[b]).bits()].emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  std::vector<int> parent(gens.size());
  for (const auto& [top_bits, pairs] : by_lcm) {
    const SqfMonomial top{IndexSet(top_bits)};
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t x = 0; x < gens.size(); ++x) {
      if (!gens[x].divides(top)) continue;
      for (int y : graph.adjacency()[x]) {
        if (static_cast<std::size_t>(y) < x && gens[static_cast<std::size_t>(y)].divides(top)) {
          parent[static_cast<std::size_t>(find_root(parent, static_cast<int>(x)))] = find_root(parent, y);
        }
      }
    }
    if (budget) budget->charge(gens.size());
    for (auto [a, b] : pairs) {
      if (find_root(parent, a) != find_root(parent, b)) return false;
    }
  }
  return true;
}

bool WitnessReport::all_witnessed() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairWitness& p) { return p.w.has_value(); });
}

WitnessReport first_syzygy_witness(const MonomialIdeal& ideal, SqfMonomial m) {
  WitnessReport report{m, {}};
  const auto& gens = ideal.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a].lcm(gens[b]) != m) continue;
      PairWitness pair{gens[a], gens[b], std::nullopt};
      for (std::size_t c = 0; c < gens.size(); ++c) {
        if (c == a || c == b) continue;
        const SqfMonomial w = gens[c];
        if (w.divides(m) && gens[a].lcm(w) != m && gens[b].lcm(w) != m) {
          pair.w = w;
          break;
        }
      }
      report.pairs.push_back(pair);
    }
  }
  return report;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

bool admits_linear_quotient(std::span<const SqfMonomial> earlier, SqfMonomial u) {
  std::uint64_t linear = 0;
  for (SqfMonomial v : earlier) {
    const SqfMonomial q = v.colon(u);
    if (q.degree() == 1) linear |= q.bits();
  }
  return std::all_of(earlier.begin(), earlier.end(),
                     [&](SqfMonomial w) { return (w.colon(u).bits() & linear) != 0; });
}

bool is_linear_quotient_order(std::span<const SqfMonomial> order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (!admits_linear_quotient(order.first(j), order[j])) return false;
  }
  return true;
}

namespace {

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

class QuotientSearch {
 public:
  QuotientSearch(const MonomialIdeal& ideal, std::uint64_t node_budget, Budget* budget)
      : gens_(ideal.generators()), graph_(ideal), node_budget_(node_budget), budget_(budget),
        placed_((gens_.size() + 63) / 64, 0), placed_count_(gens_.size(), 0) {}

  LinearQuotientsResult run() {
    LinearQuotientsResult result;
    // Every generator after the first needs an earlier linear neighbour.
    if (!graph_.connected()) {
      result.status = SearchStatus::none;
      return result;
    }
    bool found = false;
    try {
      found = extend();
    } catch (const BudgetExceeded&) {
      result.status = SearchStatus::inconclusive;
      result.nodes = nodes_;
      return result;
    }
    result.nodes = nodes_;
    result.status = found ? SearchStatus::found : SearchStatus::none;
    if (found) {
      for (int i : order_) result.order.push_back(gens_[static_cast<std::size_t>(i)]);
    }
    return result;
  }

 private:
  bool is_placed(int i) const { return (placed_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }

  void place(int i) {
    placed_[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (i % 64);
    const int delta = is_placed(i) ? 1 : -1;
    for (int y : graph_.adjacency()[static_cast<std::size_t>(i)]) placed_count_[static_cast<std::size_t>(y)] += delta;
    if (delta > 0) {
      order_.push_back(i);
      prefix_.push_back(gens_[static_cast<std::size_t>(i)]);
    } else {
      order_.pop_back();
      prefix_.pop_back();
    }
  }

  bool extend() {
    if (order_.size() == gens_.size()) return true;
    if (++nodes_ > node_budget_) throw BudgetExceeded("linear quotients node budget");
    if (budget_) budget_->charge();
    if (dead_.count(placed_)) return false;

    std::vector<int> candidates;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
      if (is_placed(i)) continue;
      if (!order_.empty() && placed_count_[static_cast<std::size_t>(i)] == 0) continue;
      if (admits_linear_quotient(prefix_, gens_[static_cast<std::size_t>(i)])) candidates.push_back(i);
    }
    const auto score = [this](int i) {
      return order_.empty() ? graph_.adjacency()[static_cast<std::size_t>(i)].size()
                            : static_cast<std::size_t>(placed_count_[static_cast<std::size_t>(i)]);
    };
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return score(a) > score(b); });
    for (int i : candidates) {
      place(i);
      const bool ok = extend();
      if (ok) return true;
      place(i);
    }
    dead_.insert(placed_);
    return false;
  }

  const std::vector<SqfMonomial>& gens_;
  SyzygyGraph graph_;
  std::uint64_t node_budget_;
  Budget* budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> placed_;
  std::vector<int> placed_count_;
  std::vector<int> order_;
  std::vector<SqfMonomial> prefix_;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> dead_;
};

}  // namespace

LinearQuotientsResult linear_quotients_order(const MonomialIdeal& ideal, std::uint64_t node_budget, Budget* budget) {
  if (ideal.is_zero()) return {SearchStatus::found, {}, 0};
  if (!ideal.generation_degree()) throw PreconditionError("linear quotients search needs a single generation degree");
  return QuotientSearch(ideal, node_budget, budget).run();
}

}  // namespace matchpow
