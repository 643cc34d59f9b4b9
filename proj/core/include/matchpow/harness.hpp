#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchpow/betti.hpp"
#include "matchpow/graph.hpp"
#include "matchpow/ideal.hpp"

namespace matchpow {

enum class Outcome { pass, fail, vacuous, inconclusive };

std::string to_string(Outcome outcome);
Outcome outcome_from_string(std::string_view text);

struct CheckReport {
  std::string check;
  /// "g6:<graph6> k=2" or "ideal:n=4:1-2,2-3 k=2 l=1"; the first token is a
  /// family spec that reproduces the instance.
  std::string instance;
  Outcome outcome = Outcome::pass;
  std::string witness;
  double millis = 0;
  bool theorem_backed = true;
  std::uint32_t characteristic = kDefaultCharacteristic;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// One ND-JSON record, no trailing newline.
std::string to_json_line(const CheckReport& report);
/// Throws InputError on malformed records.
CheckReport report_from_json(std::string_view line);

/// A graph (with its edge ideal) or a bare ideal.
struct Instance {
  std::string label;
  std::optional<Graph> graph;
  MonomialIdeal ideal;

  static Instance of_graph(const Graph& g);
  static Instance of_ideal(const MonomialIdeal& ideal);
};

/// Family specs:
///   exhaustive-N      all graphs on 1..N vertices (N <= 8)
///   trees-N           all trees on 1..N vertices
///   forests-N         forests without isolated vertices on 2..N vertices
///   matchings-R       r disjoint edges for r = 1..R
///   random-N-COUNT    COUNT draws of G(N, 1/2)
///   random-ideals-COUNT  COUNT distinct squarefree ideals, n <= 8, at most 8 generators
///   builtin:NAME      a named graph
///   g6:STRING         one graph6 graph
///   graph6:PATH       every graph of a graph6 file
///   ideal:n=N:...     one ideal in compact form
/// Random families are a pure function of the seed.
std::vector<Instance> make_family(std::string_view spec, std::uint64_t seed);

/// Random squarefree ideal with 2..max_n variables and 1..max_gens
/// nonempty generators.
MonomialIdeal random_ideal(int max_n, int max_gens, std::uint64_t seed);

enum class InputKind { graph, ideal, any };

struct HarnessConfig {
  std::uint32_t characteristic = kDefaultCharacteristic;
  /// Per (check, instance) wall-time limit; exceeded means inconclusive.
  std::chrono::milliseconds instance_time{120000};
  std::uint64_t node_budget = 10'000'000;
  int workers = 1;
  std::uint64_t seed = 0;
};

struct CheckContext {
  BettiOptions betti;
  std::uint64_t node_budget = 10'000'000;
  std::uint64_t seed = 0;
};

/// One verdict inside a check; `detail` is appended to the instance label.
struct Finding {
  std::string detail;
  Outcome outcome = Outcome::pass;
  std::string witness;
};

struct CheckSpec {
  std::string name;
  std::string hypotheses;
  /// The property being tested, in formula form.
  std::string statement;
  /// Backed by a proven result; a fail is a bug. Otherwise exploratory and
  /// a fail is reported as a finding.
  bool theorem_backed = true;
  InputKind input = InputKind::graph;
  std::function<std::vector<Finding>(const Instance&, const CheckContext&)> body;
};

const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(std::string_view name);
/// "all", a name, a comma-separated list, or a prefix ending in '*'.
/// Throws InputError for selectors matching nothing.
std::vector<const CheckSpec*> select_checks(std::string_view selector);

/// Runs every applicable (check, instance) pair on a worker pool. Reports
/// are sorted by (check, instance) and deduplicated; on_report (optional)
/// sees each report as it is produced, from the collecting thread.
std::vector<CheckReport> run_checks(const std::vector<const CheckSpec*>& checks, const std::vector<Instance>& instances,
                                    const HarnessConfig& config,
                                    const std::function<void(const CheckReport&)>& on_report = {});

/// Order-independent, idempotent merge by (check, instance).
std::vector<CheckReport> merge_reports(std::vector<CheckReport> reports);

bool has_theorem_failure(const std::vector<CheckReport>& reports);

/// Per-check outcome counts; no timings, so the text is reproducible.
std::string summary_table(const std::vector<CheckReport>& reports);

}  // namespace matchpow
