#include "matchpow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "matchpow/edge_ideal.hpp"
#include "matchpow/gf_rank.hpp"
#include "matchpow/graph_enum.hpp"
#include "matchpow/graph_io.hpp"
#include "matchpow/ideal_io.hpp"
#include "matchpow/linear.hpp"
#include "matchpow/matching.hpp"

namespace matchpow {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::vacuous: return "vacuous";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

Outcome outcome_from_string(std::string_view text) {
  if (text == "pass") return Outcome::pass;
  if (text == "fail") return Outcome::fail;
  if (text == "vacuous") return Outcome::vacuous;
  if (text == "inconclusive") return Outcome::inconclusive;
  throw InputError("unknown outcome '" + std::string(text) + "'");
}

std::string to_json_line(const CheckReport& report) {
  nlohmann::json j{{"check", report.check},
                   {"instance", report.instance},
                   {"outcome", to_string(report.outcome)},
                   {"millis", report.millis},
                   {"theorem_backed", report.theorem_backed},
                   {"char", report.characteristic}};
  if (!report.witness.empty()) j["witness"] = report.witness;
  return j.dump();
}

CheckReport report_from_json(std::string_view line) {
  try {
    const nlohmann::json j = nlohmann::json::parse(line);
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    r.millis = j.at("millis").get<double>();
    r.theorem_backed = j.value("theorem_backed", true);
    r.characteristic = j.value("char", kDefaultCharacteristic);
    r.witness = j.value("witness", std::string());
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed report: ") + ex.what());
  }
}

Instance Instance::of_graph(const Graph& g) { return {"g6:" + to_graph6(g), g, edge_ideal(g)}; }

Instance Instance::of_ideal(const MonomialIdeal& ideal) { return {"ideal:" + format_ideal_compact(ideal), std::nullopt, ideal}; }

MonomialIdeal random_ideal(int max_n, int max_gens, std::uint64_t seed) {
  Rng rng(seed);
  const int n = rng.between(2, max_n);
  const int count = rng.between(1, max_gens);
  std::vector<SqfMonomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    IndexSet s;
    for (int i = 1; i <= n; ++i) {
      if (rng.chance(1, 2)) s.insert(i);
    }
    if (!s.empty()) gens.emplace_back(s);
  }
  return MonomialIdeal(n, std::move(gens));
}

namespace {

int parse_count(std::string_view text, std::string_view spec) {
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9' || value > 1'000'000) throw InputError("bad number in family spec '" + std::string(spec) + "'");
    value = value * 10 + (c - '0');
  }
  if (text.empty()) throw InputError("bad number in family spec '" + std::string(spec) + "'");
  return value;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_label(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

}  // namespace

std::vector<Instance> make_family(std::string_view spec, std::uint64_t seed) {
  std::vector<Instance> out;
  const auto graphs = [&out](const std::vector<Graph>& gs) {
    for (const Graph& g : gs) out.push_back(Instance::of_graph(g));
  };
  if (spec.starts_with("builtin:")) {
    const auto g = builtin_graph(spec.substr(8));
    if (!g) throw InputError("unknown built-in graph '" + std::string(spec.substr(8)) + "'");
    out.push_back(Instance::of_graph(*g));
  } else if (spec.starts_with("g6:")) {
    out.push_back(Instance::of_graph(parse_graph6(spec.substr(3))));
  } else if (spec.starts_with("graph6:")) {
    graphs(parse_graph6_stream(read_text_file(std::string(spec.substr(7)))));
  } else if (spec.starts_with("ideal:")) {
    out.push_back(Instance::of_ideal(parse_ideal_compact(spec.substr(6))));
  } else if (spec.starts_with("exhaustive-")) {
    const int n = parse_count(spec.substr(11), spec);
    if (n > 8) throw InputError("exhaustive enumeration is limited to 8 vertices; pipe larger families as graph6");
    for (int k = 1; k <= n; ++k) graphs(enumerate_graphs(k));
  } else if (spec.starts_with("trees-")) {
    const int n = parse_count(spec.substr(6), spec);
    if (n > 16) throw InputError("tree enumeration is limited to 16 vertices");
    for (int k = 1; k <= n; ++k) graphs(enumerate_trees(k));
  } else if (spec.starts_with("forests-")) {
    const int n = parse_count(spec.substr(8), spec);
    if (n > 16) throw InputError("forest enumeration is limited to 16 vertices");
    for (int k = 2; k <= n; ++k) graphs(enumerate_forests(k));
  } else if (spec.starts_with("matchings-")) {
    const int r = parse_count(spec.substr(10), spec);
    if (r > 32) throw InputError("at most 32 disjoint edges");
    for (int k = 1; k <= r; ++k) out.push_back(Instance::of_graph(perfect_matching_graph(k)));
  } else if (spec.starts_with("random-ideals-")) {
    const int count = parse_count(spec.substr(14), spec);
    // Small rings repeat ideals often; keep drawing until COUNT are distinct.
    std::set<std::string> seen;
    for (std::uint64_t i = 0; static_cast<int>(out.size()) < count; ++i) {
      if (i > 1000 * static_cast<std::uint64_t>(count)) throw InputError("could not draw enough distinct ideals");
      Instance inst = Instance::of_ideal(random_ideal(8, 8, mix(seed, i)));
      if (seen.insert(inst.label).second) out.push_back(std::move(inst));
    }
  } else if (spec.starts_with("random-")) {
    const std::string_view rest = spec.substr(7);
    const std::size_t dash = rest.find('-');
    if (dash == std::string_view::npos) throw InputError("expected random-N-COUNT, got '" + std::string(spec) + "'");
    const int n = parse_count(rest.substr(0, dash), spec);
    const int count = parse_count(rest.substr(dash + 1), spec);
    if (n < 1 || n > kMaxVertices) throw InputError("random graph order must be in 1..64");
    Rng rng(seed);
    for (int i = 0; i < count; ++i) out.push_back(Instance::of_graph(random_graph(n, 1, 2, rng)));
  } else {
    throw InputError("unknown family spec '" + std::string(spec) + "'");
  }
  return out;
}

namespace {

// Memoized per-instance data shared by the findings of one check.
class Facts {
 public:
  Facts(const Instance& inst, const CheckContext& ctx) : inst_(inst), ctx_(ctx) {}

  const Graph& graph() const { return *inst_.graph; }
  const MonomialIdeal& ideal() const { return inst_.ideal; }

  int nu() {
    if (!nu_) nu_ = matching_number(graph());
    return *nu_;
  }
  int nu0() {
    if (!nu0_) nu0_ = restricted_matching_number(graph());
    return *nu0_;
  }
  int nu1() {
    if (!nu1_) nu1_ = induced_matching_number(graph());
    return *nu1_;
  }

  const MonomialIdeal& power(int k) {
    auto it = powers_.find(k);
    if (it == powers_.end()) it = powers_.emplace(k, sqfree_power(ideal(), k)).first;
    return it->second;
  }

  const BettiTable& table(int k) {
    auto it = tables_.find(k);
    if (it == tables_.end()) it = tables_.emplace(k, multigraded_betti(power(k), ctx_.betti)).first;
    return it->second;
  }

  bool linrel(int k) { return is_linearly_related_homological(power(k), ctx_.betti); }

  /// Highest k with a nonzero power of the ideal.
  int top_power() {
    if (inst_.graph) return nu();
    int k = 0;
    while (!power(k + 1).is_zero() && k + 1 <= ideal().ambient()) ++k;
    return k;
  }

  Rng rng(std::uint64_t salt) const { return Rng(mix(mix(ctx_.seed, hash_label(inst_.label)), salt)); }

  const CheckContext& ctx() const { return ctx_; }

 private:
  const Instance& inst_;
  const CheckContext& ctx_;
  std::optional<int> nu_;
  std::optional<int> nu0_;
  std::optional<int> nu1_;
  std::map<int, MonomialIdeal> powers_;
  std::map<int, BettiTable> tables_;
};

Finding verdict(bool ok, std::string detail = {}, std::string witness = {}) {
  return {std::move(detail), ok ? Outcome::pass : Outcome::fail, std::move(witness)};
}

Finding vacuous(std::string why) { return {{}, Outcome::vacuous, std::move(why)}; }

std::string kdetail(int k) { return "k=" + std::to_string(k); }

std::string bool_seq(const std::vector<bool>& seq) {
  std::string s;
  for (bool b : seq) s += b ? '1' : '0';
  return s;
}

std::vector<Finding> lower_bound(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const int nu1 = f.nu1();
  if (nu1 == 0) return {vacuous("no edges")};
  std::vector<Finding> out;
  for (int k = 1; k <= nu1; ++k) {
    const int reg = regularity(f.table(k));
    out.push_back(verdict(reg >= k + nu1, kdetail(k),
                          "reg=" + std::to_string(reg) + " bound=" + std::to_string(k + nu1)));
  }
  return out;
}

std::vector<Finding> upper_bound_k2(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() < 2) return {vacuous("nu < 2")};
  const int reg = regularity(f.table(2));
  return {verdict(reg <= 2 + f.nu(), kdetail(2), "reg=" + std::to_string(reg) + " nu=" + std::to_string(f.nu()))};
}

std::vector<Finding> upper_question(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() == 0) return {vacuous("no edges")};
  std::vector<Finding> out;
  for (int k = 1; k <= f.nu(); ++k) {
    const int reg = regularity(f.table(k));
    const bool ok = reg <= k + f.nu();
    std::string witness = "reg=" + std::to_string(reg) + " bound=" + std::to_string(k + f.nu());
    if (!ok) witness += " table=" + betti_to_json(f.table(k));
    out.push_back(verdict(ok, kdetail(k), witness));
  }
  return out;
}

std::vector<Finding> linrel_monotone(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() == 0) return {vacuous("no edges")};
  std::vector<bool> seq;
  for (int k = 1; k <= f.nu(); ++k) seq.push_back(f.linrel(k));
  bool ok = true;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) ok = ok && (!seq[i] || seq[i + 1]);
  return {verdict(ok, {}, "linrel[1..nu]=" + bool_seq(seq))};
}

std::vector<Finding> nu0_lambda(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.graph().size() == 0) return {vacuous("no edges")};
  const int lam = lambda(f.graph(), {false, ctx.betti});
  return {verdict(lam >= f.nu0(), {}, "lambda=" + std::to_string(lam) + " nu0=" + std::to_string(f.nu0()))};
}

std::vector<Finding> nu0_le_2(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.graph().size() == 0 || f.nu0() > 2) return {vacuous("nu0 > 2 or no edges")};
  if (f.nu() < 2) return {vacuous("nu < 2")};
  std::vector<Finding> out;
  for (int k = 2; k <= f.nu(); ++k) out.push_back(verdict(f.linrel(k), kdetail(k)));
  return out;
}

std::vector<Finding> tree_perfect(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const Graph& g = f.graph();
  if (!is_tree(g) || g.order() < 2 || !has_perfect_matching(g)) return {vacuous("not a tree with a perfect matching")};
  const int nu0 = f.nu0();
  const bool linear = has_linear_resolution(f.power(nu0), ctx.betti);
  const bool gap = g.order() <= 2 || nu0 == f.nu() - 1;
  return {verdict(linear && gap, kdetail(nu0),
                  "nu0=" + std::to_string(nu0) + " nu=" + std::to_string(f.nu()) +
                      " linear=" + std::to_string(linear))};
}

std::vector<Finding> perfect_criterion(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (!is_tree(f.graph())) return {vacuous("not a tree")};
  const bool criterion = tree_perfect_criterion(f.graph());
  const bool brute = has_perfect_matching(f.graph());
  return {verdict(criterion == brute, {}, "criterion=" + std::to_string(criterion) + " brute=" + std::to_string(brute))};
}

std::vector<Finding> ratliff_surprised(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.ideal().is_zero()) return {vacuous("zero ideal")};
  const int top = f.top_power();
  if (top < 2) return {vacuous("no nonzero power beyond the first")};
  std::vector<Finding> out;
  for (int k = 2; k <= top; ++k) {
    const RatliffOutcome r = ratliff_check(f.ideal(), k, 1);
    out.push_back(verdict(r != RatliffOutcome::fails, kdetail(k) + " l=1", to_string(r)));
  }
  return out;
}

std::vector<Finding> ratliff_easy(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (!isolated_vertices(f.graph()).empty()) return {vacuous("isolated vertices")};
  if (f.nu() < 3) return {vacuous("nu < 3")};
  std::vector<Finding> out;
  for (int k = 3; k <= f.nu(); ++k) {
    const RatliffOutcome r = ratliff_check(f.ideal(), k, 2);
    out.push_back(verdict(r == RatliffOutcome::holds, kdetail(k) + " l=2", to_string(r)));
  }
  return out;
}

std::vector<Finding> ratliff_equimatchable(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() < 2 || !is_equimatchable(f.graph())) return {vacuous("not equimatchable or nu < 2")};
  std::vector<Finding> out;
  for (int k = 2; k <= f.nu(); ++k) {
    for (int l = 1; l < k; ++l) {
      const RatliffOutcome r = ratliff_check(f.ideal(), k, l);
      out.push_back(verdict(r == RatliffOutcome::holds, kdetail(k) + " l=" + std::to_string(l), to_string(r)));
    }
  }
  return out;
}

std::vector<Finding> ratliff_general(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const int top = f.top_power();
  if (top < 3) return {vacuous("needs 1 < l < k with I^[k] nonzero")};
  std::vector<Finding> out;
  for (int k = 3; k <= top; ++k) {
    for (int l = 2; l < k; ++l) {
      const RatliffOutcome r = ratliff_check(f.ideal(), k, l);
      std::string witness = to_string(r);
      if (r == RatliffOutcome::fails) witness += " colon=" + to_string(colon(f.power(k), f.power(l)));
      out.push_back(verdict(r != RatliffOutcome::fails, kdetail(k) + " l=" + std::to_string(l), witness));
    }
  }
  return out;
}

std::vector<Finding> generator_unimodality(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() == 0) return {vacuous("no edges")};
  std::vector<std::size_t> counts;
  for (int k = 1; k <= f.nu(); ++k) counts.push_back(f.power(k).size());
  std::size_t i = 0;
  while (i + 1 < counts.size() && counts[i] <= counts[i + 1]) ++i;
  while (i + 1 < counts.size() && counts[i] >= counts[i + 1]) ++i;
  std::string witness = "counts=";
  for (std::size_t j = 0; j < counts.size(); ++j) witness += (j ? "," : "") + std::to_string(counts[j]);
  return {verdict(i + 1 >= counts.size(), {}, witness)};
}

std::vector<Finding> beta1_vanishing(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() < 2) return {vacuous("nu < 2")};
  std::vector<Finding> out;
  for (int k = 2; k <= f.nu(); ++k) {
    std::string bad;
    for (SqfMonomial m : lcm_lattice(f.power(k), ctx.betti.max_lattice, ctx.betti.budget)) {
      if (m.degree() < 3 * k + 1) continue;
      const auto b = betti_at(f.power(k), m, ctx.betti.characteristic, 1, ctx.betti.budget);
      if (b.size() > 1 && b[1] != 0) {
        bad = "beta_1 at " + m.to_string() + " = " + std::to_string(b[1]);
        break;
      }
    }
    out.push_back(verdict(bad.empty(), kdetail(k), bad));
  }
  return out;
}

std::vector<Finding> restriction_lemma(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.ideal().is_zero()) return {vacuous("zero ideal")};
  std::vector<std::pair<std::string, MonomialIdeal>> targets;
  if (inst.graph) {
    for (int k = 1; k <= f.nu(); ++k) targets.emplace_back(kdetail(k), f.power(k));
  } else {
    targets.emplace_back("", f.ideal());
  }
  Rng rng = f.rng(1);
  std::vector<Finding> out;
  for (const auto& [detail, ideal] : targets) {
    const BettiTable full = multigraded_betti(ideal, ctx.betti);
    const std::vector<SqfMonomial> lattice = lcm_lattice(ideal, ctx.betti.max_lattice, ctx.betti.budget);
    std::vector<SqfMonomial> probes{lattice[rng.below(lattice.size())], lattice.back()};
    IndexSet random_support;
    for (int i : ideal.support()) {
      if (rng.chance(2, 3)) random_support.insert(i);
    }
    probes.emplace_back(random_support);
    std::string bad;
    for (SqfMonomial m : probes) {
      if (!(multigraded_betti(restrict(ideal, m), ctx.betti) == full.restricted_to(m))) {
        bad = "mismatch at m=" + m.to_string();
        break;
      }
    }
    out.push_back(verdict(bad.empty(), detail, bad));
  }
  return out;
}

std::vector<Finding> induced_monotonicity(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const Graph& g = f.graph();
  if (g.size() == 0 || g.order() < 3) return {vacuous("fewer than 3 vertices or no edges")};
  // All proper induced subgraphs up to 6 vertices; vertex deletions above,
  // which cover the rest by transitivity over an exhaustive family.
  std::vector<VertexSet> subsets;
  if (g.order() <= 6) {
    for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << g.order()); ++bits) {
      if (IndexSet(bits).size() >= 2) subsets.emplace_back(bits);
    }
  } else {
    for (int v : g.vertices()) subsets.push_back(g.vertices() - VertexSet::singleton(v));
  }
  std::size_t compared = 0;
  for (VertexSet w : subsets) {
    const InducedSubgraph sub = induced_subgraph(g, w);
    const int nu_h = matching_number(sub.graph);
    const MonomialIdeal base_h = edge_ideal(sub.graph);
    for (int k = 1; k <= nu_h; ++k) {
      const BettiTable th = multigraded_betti(sqfree_power(base_h, k), ctx.betti);
      const BettiTable& tg = f.table(k);
      std::map<std::pair<int, std::uint64_t>, std::uint64_t> big;
      for (const BettiEntry& e : tg.entries()) big[{e.i, e.m.bits()}] = e.value;
      for (const BettiEntry& e : th.entries()) {
        const SqfMonomial lifted(sub.lift(e.m.support()));
        const auto it = big.find({e.i, lifted.bits()});
        const std::uint64_t value = it == big.end() ? 0 : it->second;
        ++compared;
        if (e.value > value) {
          return {verdict(false, kdetail(k),
                          "W=" + w.to_string() + " i=" + std::to_string(e.i) + " m=" + lifted.to_string() +
                              " sub=" + std::to_string(e.value) + " whole=" + std::to_string(value))};
        }
      }
    }
  }
  return {verdict(true, {}, "compared=" + std::to_string(compared))};
}

std::vector<Finding> froberg(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.graph().size() == 0) return {vacuous("no edges")};
  const bool linear = has_linear_resolution(f.ideal(), ctx.betti);
  const bool chordal = is_chordal(complement(f.graph()));
  return {verdict(linear == chordal, {}, "linear=" + std::to_string(linear) + " chordal=" + std::to_string(chordal))};
}

std::vector<Finding> linrel_oracle(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.ideal().is_zero() || !f.ideal().generation_degree()) return {vacuous("zero or mixed-degree ideal")};
  std::vector<Finding> out;
  const auto compare = [&](const MonomialIdeal& ideal, std::string detail) {
    const bool comb = is_linearly_related_combinatorial(ideal, ctx.betti.budget);
    const bool hom = is_linearly_related_homological(ideal, ctx.betti);
    out.push_back(verdict(comb == hom, std::move(detail),
                          "combinatorial=" + std::to_string(comb) + " homological=" + std::to_string(hom)));
  };
  if (inst.graph) {
    for (int k = 1; k <= f.nu(); ++k) compare(f.power(k), kdetail(k));
  } else {
    compare(f.ideal(), {});
  }
  return out;
}

std::vector<Finding> highest_power(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() == 0) return {vacuous("no edges")};
  const MonomialIdeal& top = f.power(f.nu());
  const LinearQuotientsResult lq = linear_quotients_order(top, ctx.node_budget, ctx.betti.budget);
  const std::string nodes = "nodes=" + std::to_string(lq.nodes);
  if (lq.status == SearchStatus::inconclusive) return {{kdetail(f.nu()), Outcome::inconclusive, nodes}};
  if (lq.status == SearchStatus::none) return {verdict(false, kdetail(f.nu()), "no order; " + nodes)};
  const bool valid = is_linear_quotient_order(lq.order);
  const bool linear = has_linear_resolution(top, ctx.betti);
  return {verdict(valid && linear, kdetail(f.nu()),
                  nodes + " verified=" + std::to_string(valid) + " linear=" + std::to_string(linear))};
}

std::vector<Finding> forest_equivalence(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const Graph& g = f.graph();
  if (!is_forest(g) || !isolated_vertices(g).empty() || g.order() <= 2) {
    return {vacuous("not a forest without isolated vertices other than an edge")};
  }
  const MonomialIdeal& square = f.power(2);
  const bool resolution = has_linear_resolution(square, ctx.betti);
  const LinearQuotientsResult lq = linear_quotients_order(square, ctx.node_budget, ctx.betti.budget);
  // Linear quotients force a linear resolution, so a search that gave up is
  // only informative when the resolution is linear.
  if (lq.status == SearchStatus::inconclusive && resolution) {
    return {{{}, Outcome::inconclusive, "linear quotients search gave up"}};
  }
  const bool quotients = lq.status == SearchStatus::found;
  const bool related = is_linearly_related_homological(square, ctx.betti);
  const bool small = f.nu0() <= 2;
  const ForestClass cls = classify_forest(g);
  bool templates_ok = true;
  std::string classes;
  for (const ForestMatch& m : cls.matches) {
    templates_ok = templates_ok && are_isomorphic(m.instantiate(), g);
    classes += (classes.empty() ? "" : ";") + m.to_string();
  }
  const bool typed = !cls.empty();
  const bool agree = quotients == resolution && resolution == related && related == small && small == typed;
  return {verdict(agree && templates_ok, {},
                  "lq=" + std::to_string(quotients) + " linres=" + std::to_string(resolution) +
                      " linrel=" + std::to_string(related) + " nu0<=2=" + std::to_string(small) +
                      " typed=" + std::to_string(typed) + (classes.empty() ? "" : " " + classes))};
}

std::string edge_text(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

std::vector<Finding> colon_square_formula(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.graph().size() == 0) return {vacuous("no edges")};
  for (Edge e : f.graph().edges()) {
    const MonomialIdeal formula = edge_ideal(colon_square_by_edge(f.graph(), e));
    const MonomialIdeal generic = colon(f.power(2), SqfMonomial(e.ends()));
    if (!(formula == generic)) {
      return {verdict(false, {}, "e=" + edge_text(e) + " formula=" + to_string(formula) + " colon=" + to_string(generic))};
    }
  }
  return {verdict(true)};
}

std::vector<Finding> colon_regularity(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.graph().size() == 0) return {vacuous("no edges")};
  int worst = 0;
  for (Edge e : f.graph().edges()) {
    const int reg = regularity(edge_ideal(colon_square_by_edge(f.graph(), e)), ctx.betti);
    worst = std::max(worst, reg);
    if (reg > f.nu()) return {verdict(false, {}, "e=" + edge_text(e) + " reg=" + std::to_string(reg))};
  }
  return {verdict(true, {}, "max reg=" + std::to_string(worst) + " nu=" + std::to_string(f.nu()))};
}

std::vector<Finding> l_ideal_shape(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.graph().size() == 0) return {vacuous("no edges")};
  int tested = 0;
  for (Edge e : f.graph().edges()) {
    for (int k = 1; k <= f.nu(); ++k) {
      if (!generators_degree_hypothesis(f.graph(), e, k)) continue;
      ++tested;
      const MonomialIdeal generic = L_ideal(f.graph(), e, k);
      const MonomialIdeal shape = L_ideal_shape(f.graph(), e, k);
      const bool degree_ok = generic.is_zero() || is_generated_in_degree(generic, 2 * k + 1);
      if (!(generic == shape) || !degree_ok) {
        return {verdict(false, {},
                        "e=" + edge_text(e) + " k=" + std::to_string(k) + " L=" + to_string(generic) +
                            " shape=" + to_string(shape))};
      }
    }
  }
  if (tested == 0) return {vacuous("hypothesis holds for no (e, k)")};
  return {verdict(true, {}, "cases=" + std::to_string(tested))};
}

std::vector<Finding> generated_by_variables(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const auto& edges = f.graph().edges();
  if (edges.size() < 2) return {vacuous("fewer than two edges")};
  MonomialIdeal running = f.power(2);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    running = sum(running, SqfMonomial(edges[i - 1].ends()));
    const SqfMonomial ei(edges[i].ends());
    const MonomialIdeal lhs = colon(running, ei);
    MonomialIdeal rhs = colon(f.power(2), ei);
    for (SqfMonomial g : lhs.generators()) {
      if (g.degree() == 1) rhs = sum(rhs, g);
    }
    if (!(lhs == rhs)) {
      return {verdict(false, {}, "i=" + std::to_string(i + 1) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs))};
    }
  }
  return {verdict(true)};
}

MonomialIdeal shifted(const MonomialIdeal& ideal, int by, int n) {
  std::vector<int> map;
  for (int i = 1; i <= ideal.ambient(); ++i) map.push_back(i + by);
  return relabel(ideal, map, n);
}

std::vector<Finding> disjoint_additivity(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const MonomialIdeal& a = f.ideal();
  MonomialIdeal small;
  if (inst.graph) {
    small = edge_ideal(path_graph(3));
  } else {
    small = random_ideal(4, 4, mix(ctx.seed, hash_label(inst.label)));
  }
  const int n = a.ambient() + small.ambient();
  if (n > kMaxIndex) return {vacuous("too many variables")};
  const MonomialIdeal b = shifted(small, a.ambient(), n);
  const int ra = regularity(a, ctx.betti);
  const int rb = regularity(b, ctx.betti);
  const int rs = regularity(sum(a.with_ambient(n), b), ctx.betti);
  return {verdict(rs == ra + rb - 1, {},
                  "J=" + format_ideal_compact(b) + " reg(I)=" + std::to_string(ra) + " reg(J)=" + std::to_string(rb) +
                      " reg(I+J)=" + std::to_string(rs))};
}

std::vector<Finding> colon_bound(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  std::vector<std::pair<std::string, MonomialIdeal>> targets;
  if (inst.graph) {
    for (int k = 1; k <= std::min(2, f.nu()); ++k) targets.emplace_back(kdetail(k), f.power(k));
  } else {
    targets.emplace_back("", f.ideal());
  }
  if (targets.empty() || f.ideal().ambient() == 0) return {vacuous("no edges")};
  Rng rng = f.rng(2);
  std::vector<Finding> out;
  for (const auto& [detail, ideal] : targets) {
    const int n = ideal.ambient();
    IndexSet s;
    const int degree = rng.between(1, std::min(3, n));
    while (s.size() < degree) s.insert(rng.between(1, n));
    const SqfMonomial u(s);
    const SqfMonomial x = SqfMonomial::variable(rng.between(1, n));
    const int reg = regularity(ideal, ctx.betti);
    const int reg_colon = regularity(colon(ideal, u), ctx.betti);
    const int reg_sum = regularity(sum(ideal, u), ctx.betti);
    const int reg_x = regularity(sum(ideal, x), ctx.betti);
    const bool ok = reg <= std::max(reg_colon + u.degree(), reg_sum) && reg_x <= reg;
    out.push_back(verdict(ok, detail,
                          "u=" + u.to_string() + " x=" + x.to_string() + " reg=" + std::to_string(reg) +
                              " reg(I:u)=" + std::to_string(reg_colon) + " reg(I,u)=" + std::to_string(reg_sum) +
                              " reg(I,x)=" + std::to_string(reg_x)));
  }
  return out;
}

std::vector<Finding> witness_soundness(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.nu() == 0) return {vacuous("no edges")};
  std::vector<Finding> out;
  for (int k = 1; k <= f.nu(); ++k) {
    std::size_t witnessed = 0;
    std::string bad;
    for (SqfMonomial m : lcm_lattice(f.power(k), ctx.betti.max_lattice, ctx.betti.budget)) {
      const WitnessReport w = first_syzygy_witness(f.power(k), m);
      if (w.pairs.empty() || !w.all_witnessed()) continue;
      ++witnessed;
      const auto b = betti_at(f.power(k), m, ctx.betti.characteristic, 1, ctx.betti.budget);
      if (b.size() > 1 && b[1] != 0) {
        bad = "m=" + m.to_string() + " beta_1=" + std::to_string(b[1]);
        break;
      }
    }
    out.push_back(verdict(bad.empty(), kdetail(k), bad.empty() ? "witnessed=" + std::to_string(witnessed) : bad));
  }
  return out;
}

std::vector<Finding> veronese_doubling(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const Graph& g = f.graph();
  const bool matching = g.size() > 0 && std::all_of(g.vertices().begin(), g.vertices().end(),
                                                     [&g](int v) { return g.degree(v) == 1; });
  if (!matching) return {vacuous("not a disjoint union of edges")};
  const int r = g.size();
  std::vector<SqfMonomial> vars;
  for (int i = 1; i <= r; ++i) vars.push_back(SqfMonomial::variable(i));
  const MonomialIdeal linear(r, vars);
  std::vector<Finding> out;
  for (int k = 1; k <= r; ++k) {
    const auto veronese = multigraded_betti(sqfree_power(linear, k), ctx.betti).graded_table();
    const auto doubled = f.table(k).graded_table();
    bool ok = doubled.size() == veronese.size();
    for (const auto& [key, value] : veronese) {
      const auto it = doubled.find({key.first, 2 * key.second});
      ok = ok && it != doubled.end() && it->second == value;
    }
    ok = ok && doubled.count({r - k, 2 * r}) > 0;
    out.push_back(verdict(ok, kdetail(k)));
  }
  return out;
}

std::vector<Finding> nu_chain(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  const bool ok = f.nu1() <= f.nu0() && f.nu0() <= f.nu();
  return {verdict(ok, {},
                  "nu1=" + std::to_string(f.nu1()) + " nu0=" + std::to_string(f.nu0()) + " nu=" + std::to_string(f.nu()))};
}

std::vector<Finding> power_via_matchings(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (f.graph().size() == 0) return {vacuous("no edges")};
  for (int k = 1; k <= f.nu() + 1; ++k) {
    if (!(sqfree_power_via_matchings(f.graph(), k) == f.power(k))) return {verdict(false, kdetail(k))};
  }
  return {verdict(true)};
}

std::vector<Finding> char_independence(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (ctx.betti.characteristic == 2) return {vacuous("already characteristic 2")};
  std::vector<std::pair<std::string, MonomialIdeal>> targets;
  if (inst.graph) {
    for (int k = 1; k <= f.nu(); ++k) targets.emplace_back(kdetail(k), f.power(k));
  } else if (!f.ideal().is_zero()) {
    targets.emplace_back("", f.ideal());
  }
  if (targets.empty()) return {vacuous("zero ideal")};
  BettiOptions two = ctx.betti;
  two.characteristic = 2;
  std::vector<Finding> out;
  for (const auto& [detail, ideal] : targets) {
    const BettiTable a = multigraded_betti(ideal, ctx.betti);
    const BettiTable b = multigraded_betti(ideal, two);
    const bool same = a.entries() == b.entries();
    out.push_back(verdict(same, detail, same ? "" : "p=" + betti_to_json(a) + " 2=" + betti_to_json(b)));
  }
  return out;
}

std::vector<Finding> nonforest_patterns(const Instance& inst, const CheckContext& ctx) {
  Facts f(inst, ctx);
  if (is_forest(f.graph()) || f.nu() < 2) return {vacuous("forest or nu < 2")};
  const MonomialIdeal& square = f.power(2);
  const bool resolution = has_linear_resolution(square, ctx.betti);
  const LinearQuotientsResult lq = linear_quotients_order(square, ctx.node_budget, ctx.betti.budget);
  // Linear quotients force a linear resolution, so a search that gave up is
  // only informative when the resolution is linear.
  if (lq.status == SearchStatus::inconclusive && resolution) {
    return {{{}, Outcome::inconclusive, "linear quotients search gave up"}};
  }
  const bool quotients = lq.status == SearchStatus::found;
  const bool related = is_linearly_related_homological(square, ctx.betti);
  const bool small = f.nu0() <= 2;
  const std::string pattern = "lq=" + std::to_string(quotients) + " linres=" + std::to_string(resolution) +
                              " linrel=" + std::to_string(related) + " nu0<=2=" + std::to_string(small);
  return {verdict(quotients == resolution && resolution == related && related == small, {}, pattern)};
}

std::vector<CheckSpec> build_registry() {
  using K = InputKind;
  return {
      {"lower_bound", "1 <= k <= nu1(G)", "reg(I(G)^[k]) >= k + nu1(G)", true, K::graph, lower_bound},
      {"upper_bound_k2", "nu(G) >= 2", "reg(I(G)^[2]) <= 2 + nu(G)", true, K::graph, upper_bound_k2},
      {"upper_question", "1 <= k <= nu(G)", "reg(I(G)^[k]) <= k + nu(G) (open; searched, not asserted)", false,
       K::graph, upper_question},
      {"linrel_monotone", "E(G) nonempty", "I(G)^[k] linearly related implies I(G)^[k+1] linearly related", true,
       K::graph, linrel_monotone},
      {"nu0_lambda", "E(G) nonempty", "lambda(I(G)) >= nu0(G)", true, K::graph, nu0_lambda},
      {"nu0_le_2", "nu0(G) <= 2", "I(G)^[k] linearly related for 2 <= k <= nu(G)", true, K::graph, nu0_le_2},
      {"tree_perfect", "G a tree with a perfect matching", "I(G)^[nu0] has linear resolution and nu0 = nu - 1",
       true, K::graph, tree_perfect},
      {"perfect_criterion", "G a tree", "perfect matching iff G - i has exactly one odd component for all i", true,
       K::graph, perfect_criterion},
      {"ratliff_surprised", "I nonzero squarefree", "I^[k] : I = I^[k] for k >= 2", true, K::any, ratliff_surprised},
      {"ratliff_easy", "no isolated vertices, 2 < k <= nu(G)", "I(G)^[k] : I(G)^[2] = I(G)^[k]", true, K::graph,
       ratliff_easy},
      {"ratliff_equimatchable", "G equimatchable, 1 <= l < k <= nu(G)", "I(G)^[k] : I(G)^[l] = I(G)^[k]", true,
       K::graph, ratliff_equimatchable},
      {"ratliff_general", "1 < l < k", "I^[k] : I^[l] = I^[k] (open; searched, not asserted)", false, K::ideal,
       ratliff_general},
      {"generator_unimodality", "E(G) nonempty", "|G(I(G)^[k])| is unimodal in k = 1..nu(G)", true, K::graph,
       generator_unimodality},
      {"beta1_vanishing", "k >= 2", "beta_{1,m}(I(G)^[k]) = 0 for deg m >= 3k+1", true, K::graph, beta1_vanishing},
      {"restriction_lemma", "I nonzero", "table(I restricted to m) = table(I) at multidegrees dividing m", true,
       K::any, restriction_lemma},
      {"induced_monotonicity", "H induced in G", "beta_{i,a}(I(H)^[k]) <= beta_{i,a}(I(G)^[k])", true, K::graph,
       induced_monotonicity},
      {"froberg", "E(G) nonempty", "I(G) has linear resolution iff the complement of G is chordal", true, K::graph,
       froberg},
      {"linrel_oracle", "pure degree", "syzygy-graph connectivity agrees with beta_1 linearity", true, K::any,
       linrel_oracle},
      {"highest_power", "E(G) nonempty", "I(G)^[nu(G)] has linear quotients (hence a linear resolution)", true,
       K::graph, highest_power},
      {"forest_equivalence", "forest, no isolated vertices, not an edge",
       "linear quotients, linear resolution, linearly related, nu0 <= 2 and template type agree for I(G)^[2]", true,
       K::graph, forest_equivalence},
      {"colon_square_formula", "e in E(G)", "I(G)^[2] : ab = I(G - {a,b}) + (cd : c in N(a), d in N(b), c != d)",
       true, K::graph, colon_square_formula},
      {"colon_regularity", "e in E(G)", "reg(I(G)^[2] : ab) <= nu(G)", true, K::graph, colon_regularity},
      {"l_ideal_shape", "every k-matching of G - e has an edge f meeting N(a) u N(b) with the rest avoiding a, b",
       "I(G-e)^[k] cap ab I(G-{a,b})^[k-1] = (c ab u_M) and is generated in degree 2k+1", true, K::graph,
       l_ideal_shape},
      {"generated_by_variables", "I(G) = (e_1..e_r), i > 1",
       "(I(G)^[2], e_1..e_{i-1}) : e_i = (I(G)^[2] : e_i) + (variables)", true, K::graph, generated_by_variables},
      {"disjoint_additivity", "I, J in disjoint variables", "reg(I + J) = reg(I) + reg(J) - 1", true, K::any,
       disjoint_additivity},
      {"colon_bound", "u a monomial of degree d, x a variable",
       "reg(I) <= max(reg(I : u) + d, reg(I, u)) and reg(I, x) <= reg(I)", true, K::any, colon_bound},
      {"witness_soundness", "every pair with lcm m has a Taylor witness", "beta_{1,m}(I(G)^[k]) = 0", true, K::graph,
       witness_soundness},
      {"veronese_doubling", "G = r disjoint edges",
       "beta_{i,j}(J^[k]) = beta_{i,2j}(I(G)^[k]) for J = (x_1..x_r), beta_{r-k,2r} != 0", true, K::graph,
       veronese_doubling},
      {"nu_chain", "none", "nu1(G) <= nu0(G) <= nu(G)", true, K::graph, nu_chain},
      {"power_via_matchings", "k >= 1", "I(G)^[k] = (u_M : M a k-matching)", true, K::graph, power_via_matchings},
      {"char_independence", "none", "Betti tables agree over GF(p) and GF(2) (reported, not asserted)", false,
       K::any, char_independence},
      {"nonforest_patterns", "G not a forest, nu(G) >= 2",
       "the forest equivalences for I(G)^[2] on non-forests (reported, not asserted)", false, K::graph,
       nonforest_patterns},
  };
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

const CheckSpec* find_check(std::string_view name) {
  for (const CheckSpec& spec : check_registry()) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

std::vector<const CheckSpec*> select_checks(std::string_view selector) {
  std::vector<const CheckSpec*> out;
  const auto add = [&out](const CheckSpec* spec) {
    if (std::find(out.begin(), out.end(), spec) == out.end()) out.push_back(spec);
  };
  while (!selector.empty()) {
    const std::size_t comma = selector.find(',');
    const std::string_view item = selector.substr(0, comma);
    selector = comma == std::string_view::npos ? std::string_view() : selector.substr(comma + 1);
    std::size_t before = out.size();
    if (item == "all") {
      for (const CheckSpec& spec : check_registry()) add(&spec);
    } else if (item.ends_with('*')) {
      for (const CheckSpec& spec : check_registry()) {
        if (spec.name.starts_with(item.substr(0, item.size() - 1))) add(&spec);
      }
    } else if (const CheckSpec* spec = find_check(item)) {
      add(spec);
    }
    if (out.size() == before && item != "all") throw InputError("no check matches '" + std::string(item) + "'");
  }
  if (out.empty()) throw InputError("empty check selector");
  return out;
}

std::vector<CheckReport> merge_reports(std::vector<CheckReport> reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.check, a.instance) < std::tie(b.check, b.instance);
  });
  reports.erase(std::unique(reports.begin(), reports.end(),
                            [](const CheckReport& a, const CheckReport& b) {
                              return a.check == b.check && a.instance == b.instance;
                            }),
                reports.end());
  return reports;
}

namespace {

bool applies(const CheckSpec& spec, const Instance& inst) {
  switch (spec.input) {
    case InputKind::graph: return inst.graph.has_value();
    case InputKind::ideal: return !inst.graph.has_value();
    case InputKind::any: return true;
  }
  return false;
}

std::vector<CheckReport> run_one(const CheckSpec& spec, const Instance& inst, const HarnessConfig& config) {
  Budget budget(config.instance_time, std::nullopt);
  CheckContext ctx;
  ctx.betti.characteristic = config.characteristic;
  ctx.betti.budget = &budget;
  ctx.node_budget = config.node_budget;
  ctx.seed = config.seed;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Finding> findings;
  try {
    findings = spec.body(inst, ctx);
  } catch (const BudgetExceeded& ex) {
    findings = {{{}, Outcome::inconclusive, ex.what()}};
  } catch (const std::exception& ex) {
    findings = {{{}, Outcome::fail, std::string("error: ") + ex.what()}};
  }
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::vector<CheckReport> out;
  for (Finding& f : findings) {
    CheckReport r;
    r.check = spec.name;
    r.instance = f.detail.empty() ? inst.label : inst.label + " " + f.detail;
    r.outcome = f.outcome;
    r.witness = std::move(f.witness);
    r.millis = millis;
    r.theorem_backed = spec.theorem_backed;
    r.characteristic = config.characteristic;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<CheckReport> run_checks(const std::vector<const CheckSpec*>& checks, const std::vector<Instance>& instances,
                                    const HarnessConfig& config,
                                    const std::function<void(const CheckReport&)>& on_report) {
  if (!is_prime(config.characteristic)) {
    throw InputError("characteristic " + std::to_string(config.characteristic) + " is not prime");
  }
  std::vector<std::pair<const CheckSpec*, const Instance*>> jobs;
  for (const Instance& inst : instances) {
    for (const CheckSpec* spec : checks) {
      if (applies(*spec, inst)) jobs.emplace_back(spec, &inst);
    }
  }
  std::vector<CheckReport> collected;
  std::mutex mutex;
  std::condition_variable ready;
  std::deque<std::vector<CheckReport>> inbox;
  std::atomic<std::size_t> next{0};
  std::size_t finished = 0;

  const std::size_t workers = std::min<std::size_t>(std::max(1, config.workers), std::max<std::size_t>(1, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t j = next++; j < jobs.size(); j = next++) {
        std::vector<CheckReport> reports = run_one(*jobs[j].first, *jobs[j].second, config);
        {
          std::lock_guard lock(mutex);
          inbox.push_back(std::move(reports));
        }
        ready.notify_one();
      }
      {
        std::lock_guard lock(mutex);
        ++finished;
      }
      ready.notify_one();
    });
  }
  // The calling thread is the single collector.
  for (;;) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return !inbox.empty() || finished == workers; });
    if (inbox.empty() && finished == workers) break;
    std::vector<CheckReport> batch = std::move(inbox.front());
    inbox.pop_front();
    lock.unlock();
    for (CheckReport& r : batch) {
      if (on_report) on_report(r);
      collected.push_back(std::move(r));
    }
  }
  for (std::thread& t : pool) t.join();
  return merge_reports(std::move(collected));
}

bool has_theorem_failure(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.theorem_backed && r.outcome == Outcome::fail; });
}

std::string summary_table(const std::vector<CheckReport>& reports) {
  struct Counts {
    std::size_t pass = 0, fail = 0, vacuous = 0, inconclusive = 0;
    bool theorem_backed = true;
  };
  std::map<std::string, Counts> by_check;
  for (const CheckReport& r : reports) {
    Counts& c = by_check[r.check];
    c.theorem_backed = r.theorem_backed;
    switch (r.outcome) {
      case Outcome::pass: ++c.pass; break;
      case Outcome::fail: ++c.fail; break;
      case Outcome::vacuous: ++c.vacuous; break;
      case Outcome::inconclusive: ++c.inconclusive; break;
    }
  }
  std::ostringstream out;
  out << std::left << std::setw(24) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
      << std::setw(9) << "vacuous" << std::setw(14) << "inconclusive" << "  kind\n";
  for (const auto& [name, c] : by_check) {
    out << std::left << std::setw(24) << name << std::right << std::setw(8) << c.pass << std::setw(8) << c.fail
        << std::setw(9) << c.vacuous << std::setw(14) << c.inconclusive << "  "
        << (c.theorem_backed ? "theorem" : "exploration") << '\n';
  }
  return out.str();
}

}  // namespace matchpow
