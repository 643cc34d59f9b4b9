#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchpow/betti.hpp"
#include "matchpow/edge_ideal.hpp"
#include "matchpow/gf_rank.hpp"
#include "matchpow/graph.hpp"
#include "matchpow/graph_io.hpp"
#include "matchpow/harness.hpp"
#include "matchpow/ideal_io.hpp"
#include "matchpow/linear.hpp"
#include "matchpow/matching.hpp"

namespace matchpow::cli {

namespace {

using nlohmann::json;

struct Input {
  std::string path;
  std::string builtin;
  std::string g6;
  std::string ideal;

  void attach(CLI::App* cmd, bool allow_ideal) {
    cmd->add_option("input", path, "Graph file (edge list or graph6)");
    cmd->add_option("--builtin", builtin, "Named fixture graph")->check(CLI::IsMember(builtin_graph_names()));
    cmd->add_option("--g6", g6, "Graph given inline as graph6");
    if (allow_ideal) cmd->add_option("--ideal", ideal, "Ideal file (ideal text format)");
  }

  bool is_ideal() const { return !ideal.empty(); }

  Graph graph() const {
    const int given = !path.empty() + !builtin.empty() + !g6.empty() + !ideal.empty();
    if (given != 1) throw InputError("give exactly one of: input file, --builtin, --g6" + std::string(is_ideal() ? ", --ideal" : ""));
    if (is_ideal()) throw InputError("this command needs a graph, not an ideal");
    if (!builtin.empty()) return *builtin_graph(builtin);
    if (!g6.empty()) return parse_graph6(g6);
    return read_graph_file(path);
  }

  /// The ideal itself, or I(G); with k set, its k-th squarefree power.
  MonomialIdeal target(std::optional<int> k) const {
    MonomialIdeal base;
    if (is_ideal()) {
      if (!path.empty() || !builtin.empty() || !g6.empty()) throw InputError("give either a graph or --ideal, not both");
      base = parse_ideal_text(read_text_file(ideal));
    } else {
      base = edge_ideal(graph());
    }
    return k ? sqfree_power(base, *k) : base;
  }
};

struct Global {
  bool json = false;
  std::uint32_t characteristic = kDefaultCharacteristic;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void require_k(int k) {
  if (k < 1) throw InputError("-k must be at least 1");
}

int cmd_invariants(const Input& in, const Global& g, std::ostream& out) {
  const Graph graph = in.graph();
  const int nu = matching_number(graph);
  const int nu1 = induced_matching_number(graph);
  const int nu0 = restricted_matching_number(graph);
  const bool equi = is_equimatchable(graph);
  const bool perfect = has_perfect_matching(graph);
  const bool gap_free = is_gap_free(graph);
  const bool chordal = is_chordal(complement(graph));
  if (g.json) {
    out << json{{"char", g.characteristic}, {"n", graph.order()},          {"m", graph.size()},
                {"nu", nu},                 {"nu1", nu1},                    {"nu0", nu0},
                {"equimatchable", equi},    {"perfect_matching", perfect},   {"gap_free", gap_free},
                {"chordal_complement", chordal}}
               .dump()
        << '\n';
    return kOk;
  }
  out << "char=" << g.characteristic << '\n'
      << "n=" << graph.order() << '\n'
      << "m=" << graph.size() << '\n'
      << "nu=" << nu << '\n'
      << "nu1=" << nu1 << '\n'
      << "nu0=" << nu0 << '\n'
      << "equimatchable=" << yes_no(equi) << '\n'
      << "perfect_matching=" << yes_no(perfect) << '\n'
      << "gap_free=" << yes_no(gap_free) << '\n'
      << "chordal_complement=" << yes_no(chordal) << '\n';
  return kOk;
}

int cmd_power(const Input& in, const Global& g, int k, std::ostream& out) {
  require_k(k);
  const MonomialIdeal power = in.target(k);
  if (g.json) {
    json doc = json::parse(ideal_to_json(power));
    doc["char"] = g.characteristic;
    doc["k"] = k;
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "# char=" << g.characteristic << " k=" << k << " generators=" << power.size() << '\n';
  if (power.is_zero()) out << "# zero ideal\n";
  out << format_ideal_text(power);
  return kOk;
}

int cmd_betti(const Input& in, const Global& g, std::optional<int> k, int workers, std::ostream& out) {
  if (k) require_k(*k);
  const MonomialIdeal ideal = in.target(in.is_ideal() ? k : std::optional<int>(k.value_or(1)));
  BettiOptions opts;
  opts.characteristic = g.characteristic;
  opts.workers = workers;
  const BettiTable table = multigraded_betti(ideal, opts);
  if (g.json) {
    json doc = json::parse(betti_to_json(table));
    doc["regularity"] = regularity(table);
    doc["projdim"] = projdim(table);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << render_betti_diagram(table);
  out << "reg=" << regularity(table) << '\n';
  out << "projdim=" << projdim(table) << '\n';
  out << "char=" << table.characteristic() << '\n';
  return kOk;
}

int cmd_linrel(const Input& in, const Global& g, int k, const std::string& method, std::ostream& out) {
  require_k(k);
  const MonomialIdeal ideal = in.target(k);
  BettiOptions opts;
  opts.characteristic = g.characteristic;
  std::optional<bool> hom;
  std::optional<bool> comb;
  if (method != "combinatorial") hom = is_linearly_related_homological(ideal, opts);
  if (method != "homological") comb = is_linearly_related_combinatorial(ideal);
  const bool verdict = hom.value_or(comb.value_or(false));
  if (g.json) {
    json doc{{"char", g.characteristic}, {"k", k}, {"linearly_related", verdict}};
    if (hom) doc["homological"] = *hom;
    if (comb) doc["combinatorial"] = *comb;
    out << doc.dump() << '\n';
  } else {
    out << "char=" << g.characteristic << '\n' << "k=" << k << '\n';
    if (hom) out << "homological=" << yes_no(*hom) << '\n';
    if (comb) out << "combinatorial=" << yes_no(*comb) << '\n';
    out << "linearly_related=" << yes_no(verdict) << '\n';
  }
  if (hom && comb && *hom != *comb) return kCheckFailure;
  return kOk;
}

int cmd_linquot(const Input& in, const Global& g, int k, std::uint64_t nodes, std::ostream& out) {
  require_k(k);
  const MonomialIdeal ideal = in.target(k);
  const LinearQuotientsResult result = linear_quotients_order(ideal, nodes);
  if (g.json) {
    json order = json::array();
    for (SqfMonomial m : result.order) order.push_back(m.support().to_vector());
    out << json{{"char", g.characteristic}, {"k", k}, {"status", to_string(result.status)}, {"nodes", result.nodes},
                {"order", order}}
               .dump()
        << '\n';
  } else {
    out << "char=" << g.characteristic << '\n'
        << "k=" << k << '\n'
        << "status=" << to_string(result.status) << '\n'
        << "nodes=" << result.nodes << '\n';
    for (SqfMonomial m : result.order) out << m.to_string() << '\n';
  }
  return result.status == SearchStatus::inconclusive ? kCheckFailure : kOk;
}

int cmd_lambda(const Input& in, const Global& g, bool combinatorial, std::ostream& out) {
  const Graph graph = in.graph();
  LambdaOptions opts;
  opts.combinatorial = combinatorial;
  opts.betti.characteristic = g.characteristic;
  const int lam = lambda(graph, opts);
  const int nu0 = restricted_matching_number(graph);
  const int nu = matching_number(graph);
  if (g.json) {
    out << json{{"char", g.characteristic}, {"lambda", lam}, {"nu0", nu0}, {"nu", nu}}.dump() << '\n';
  } else {
    out << "char=" << g.characteristic << '\n' << "lambda=" << lam << '\n' << "nu0=" << nu0 << '\n' << "nu=" << nu << '\n';
  }
  return kOk;
}

int cmd_colon(const Input& in, const Global& g, int k, int l, std::ostream& out) {
  require_k(k);
  if (l < 1 || l > k) throw InputError("-l must satisfy 1 <= l <= k");
  const MonomialIdeal base = in.target(std::nullopt);
  const MonomialIdeal pk = sqfree_power(base, k);
  const MonomialIdeal pl = sqfree_power(base, l);
  if (pl.is_zero()) throw InputError("I^[l] is zero; the colon is undefined");
  const MonomialIdeal result = colon(pk, pl);
  const bool equal = result == pk;
  if (g.json) {
    json doc = json::parse(ideal_to_json(result));
    doc["char"] = g.characteristic;
    doc["k"] = k;
    doc["l"] = l;
    doc["equal"] = equal;
    out << doc.dump() << '\n';
  } else {
    out << "# char=" << g.characteristic << " k=" << k << " l=" << l << " generators=" << result.size() << '\n';
    out << "# equal=" << yes_no(equal) << '\n';
    out << format_ideal_text(result);
  }
  return kOk;
}

int cmd_classify(const Input& in, const Global& g, std::ostream& out) {
  const Graph graph = in.graph();
  const ForestClass cls = classify_forest(graph);
  if (g.json) {
    json matches = json::array();
    for (const ForestMatch& m : cls.matches) {
      json entry{{"type", to_string(m.type)}, {"spine", m.spine}, {"A", m.a.to_vector()}, {"B", m.b.to_vector()}};
      if (m.type == ForestType::g1) entry["C"] = m.c.to_vector();
      matches.push_back(entry);
    }
    out << json{{"char", g.characteristic}, {"matches", matches}}.dump() << '\n';
    return kOk;
  }
  out << "char=" << g.characteristic << '\n';
  if (cls.empty()) out << "none\n";
  for (const ForestMatch& m : cls.matches) out << m.to_string() << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string selector = "all";
  std::string family = "exhaustive-6";
  std::uint64_t seed = 0;
  int workers = 1;
  int time_limit_ms = 120000;
  std::uint64_t nodes = kLinearQuotientsNodeBudget;
  bool quiet = false;
};

int cmd_verify(const VerifyArgs& v, const Global& g, std::ostream& out) {
  const std::vector<const CheckSpec*> checks = select_checks(v.selector);
  const std::vector<Instance> instances = make_family(v.family, v.seed);
  HarnessConfig config;
  config.characteristic = g.characteristic;
  config.instance_time = std::chrono::milliseconds(v.time_limit_ms);
  config.node_budget = v.nodes;
  config.workers = v.workers;
  config.seed = v.seed;
  const std::vector<CheckReport> reports = run_checks(checks, instances, config);
  const bool failed = has_theorem_failure(reports);
  if (g.json) {
    for (const CheckReport& r : reports) out << to_json_line(r) << '\n';
  } else {
    out << "family=" << v.family << " seed=" << v.seed << " char=" << g.characteristic
        << " instances=" << instances.size() << '\n';
    out << summary_table(reports);
    for (const CheckReport& r : reports) {
      if (r.outcome != Outcome::fail && r.outcome != Outcome::inconclusive) continue;
      if (v.quiet && !r.theorem_backed) continue;
      out << (r.theorem_backed ? "FAIL " : "FINDING ") << r.check << " [" << to_string(r.outcome) << "] "
          << r.instance;
      if (!r.witness.empty()) out << " :: " << r.witness;
      out << '\n';
    }
    out << (failed ? "result=fail\n" : "result=ok\n");
  }
  return failed ? kCheckFailure : kOk;
}

int cmd_list_checks(const Global& g, std::ostream& out) {
  if (g.json) {
    json arr = json::array();
    for (const CheckSpec& s : check_registry()) {
      arr.push_back({{"name", s.name},
                     {"hypotheses", s.hypotheses},
                     {"statement", s.statement},
                     {"theorem_backed", s.theorem_backed}});
    }
    out << arr.dump() << '\n';
    return kOk;
  }
  for (const CheckSpec& s : check_registry()) {
    out << std::left << std::setw(24) << s.name << std::setw(12) << (s.theorem_backed ? "theorem" : "exploration")
        << s.statement << "  [" << s.hypotheses << "]\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Squarefree powers of edge ideals: invariants, Betti numbers, verification"};
  app.name("matchpow");
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_flag("--json", global.json, "Machine-readable output");
  app.add_option("--char", global.characteristic, "Field characteristic (prime)")->capture_default_str();

  Input in;
  int k = 0;
  int l = 1;
  std::optional<int> betti_k;
  int workers = 1;
  std::string method = "both";
  std::uint64_t nodes = kLinearQuotientsNodeBudget;
  bool combinatorial = false;
  VerifyArgs verify;

  auto* invariants = app.add_subcommand("invariants", "Matching numbers and graph properties");
  in.attach(invariants, false);
  auto* power = app.add_subcommand("power", "Generators of I(G)^[k]");
  in.attach(power, true);
  power->add_option("-k", k, "Power")->required();
  auto* betti = app.add_subcommand("betti", "Betti diagram, regularity and projective dimension");
  in.attach(betti, true);
  betti->add_option("-k", betti_k, "Power (default 1 for graphs; the ideal itself for --ideal)");
  betti->add_option("--workers", workers, "Threads over multidegrees")->check(CLI::PositiveNumber);
  auto* linrel = app.add_subcommand("linrel", "Is I^[k] linearly related");
  in.attach(linrel, true);
  linrel->add_option("-k", k, "Power")->required();
  linrel->add_option("--method", method, "homological, combinatorial or both")
      ->check(CLI::IsMember({"homological", "combinatorial", "both"}))
      ->capture_default_str();
  auto* linquot = app.add_subcommand("linquot", "Search for a linear quotients order of I^[k]");
  in.attach(linquot, true);
  linquot->add_option("-k", k, "Power")->required();
  linquot->add_option("--node-budget", nodes, "Search node limit")->capture_default_str();
  auto* lam = app.add_subcommand("lambda", "Least k from which all powers are linearly related");
  in.attach(lam, false);
  lam->add_flag("--combinatorial", combinatorial, "Use syzygy-graph connectivity instead of beta_1");
  auto* col = app.add_subcommand("colon", "I^[k] : I^[l] and whether it equals I^[k]");
  in.attach(col, true);
  col->add_option("-k", k, "Power")->required();
  col->add_option("-l", l, "Divisor power")->capture_default_str();
  auto* classify = app.add_subcommand("classify", "Forest template classification");
  in.attach(classify, false);
  auto* ver = app.add_subcommand("verify", "Run property checks over a family");
  ver->add_option("checks", verify.selector, "all, a name, a comma list or a prefix*")->capture_default_str();
  ver->add_option("--family", verify.family, "Family spec")->capture_default_str();
  ver->add_option("--seed", verify.seed, "Seed for random families and probes")->capture_default_str();
  ver->add_option("--workers", verify.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  ver->add_option("--time-limit", verify.time_limit_ms, "Per-instance limit in ms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--node-budget", verify.nodes, "Linear quotients search node limit")->capture_default_str();
  ver->add_flag("--quiet", verify.quiet, "Omit exploration findings from the text output");
  auto* list = app.add_subcommand("list-checks", "List registered checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (!is_prime(global.characteristic)) {
      throw InputError("characteristic " + std::to_string(global.characteristic) + " is not prime");
    }
    if (*invariants) return cmd_invariants(in, global, out);
    if (*power) return cmd_power(in, global, k, out);
    if (*betti) return cmd_betti(in, global, betti_k, workers, out);
    if (*linrel) return cmd_linrel(in, global, k, method, out);
    if (*linquot) return cmd_linquot(in, global, k, nodes, out);
    if (*lam) return cmd_lambda(in, global, combinatorial, out);
    if (*col) return cmd_colon(in, global, k, l, out);
    if (*classify) return cmd_classify(in, global, out);
    if (*ver) return cmd_verify(verify, global, out);
    if (*list) return cmd_list_checks(global, out);
  } catch (const BudgetExceeded& e) {
    err << "matchpow: budget exceeded: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "matchpow: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace matchpow::cli
