#include "matchpow/betti.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "matchpow/gf_rank.hpp"

namespace matchpow {

BettiTable::BettiTable(std::uint32_t characteristic, std::optional<int> degree, int max_homological,
                       std::vector<BettiEntry> entries)
    : characteristic_(characteristic), degree_(degree), max_homological_(max_homological), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const BettiEntry& e) { return e.value == 0; });
  std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
    return a.i != b.i ? a.i < b.i : a.m < b.m;
  });
}

std::uint64_t BettiTable::at(int i, SqfMonomial m) const {
  for (const BettiEntry& e : entries_) {
    if (e.i == i && e.m == m) return e.value;
  }
  return 0;
}

std::uint64_t BettiTable::graded(int i, int j) const {
  std::uint64_t total = 0;
  for (const BettiEntry& e : entries_) {
    if (e.i == i && e.m.degree() == j) total += e.value;
  }
  return total;
}

std::map<std::pair<int, int>, std::uint64_t> BettiTable::graded_table() const {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const BettiEntry& e : entries_) out[{e.i, e.m.degree()}] += e.value;
  return out;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out;
  for (const BettiEntry& e : entries_) {
    if (static_cast<std::size_t>(e.i) >= out.size()) out.resize(static_cast<std::size_t>(e.i) + 1, 0);
    out[static_cast<std::size_t>(e.i)] += e.value;
  }
  return out;
}

BettiTable BettiTable::restricted_to(SqfMonomial m) const {
  std::vector<BettiEntry> kept;
  for (const BettiEntry& e : entries_) {
    if (e.m.divides(m)) kept.push_back(e);
  }
  return BettiTable(characteristic_, degree_, max_homological_, std::move(kept));
}

std::vector<SqfMonomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap, Budget* budget) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier;
  for (SqfMonomial g : ideal.generators()) {
    if (seen.insert(g.bits()).second) frontier.push_back(g.bits());
  }
  std::vector<std::uint64_t> next;
  while (!frontier.empty()) {
    next.clear();
    for (std::uint64_t a : frontier) {
      for (SqfMonomial g : ideal.generators()) {
        const std::uint64_t b = a | g.bits();
        if (b == a || !seen.insert(b).second) continue;
        next.push_back(b);
        if (seen.size() > cap) throw BudgetExceeded("lcm lattice exceeds " + std::to_string(cap) + " elements");
      }
      if (budget) budget->charge(ideal.size());
    }
    frontier.swap(next);
  }
  std::vector<SqfMonomial> out;
  out.reserve(seen.size());
  for (std::uint64_t b : seen) out.emplace_back(IndexSet(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> betti_at(const MonomialIdeal& ideal, SqfMonomial m, std::uint32_t p, int max_i,
                                    Budget* budget) {
  // Generators below m; a face S is admissible when some of them avoids S.
  std::vector<std::uint64_t> below;
  for (SqfMonomial g : ideal.generators()) {
    if (g.divides(m)) below.push_back(g.bits());
  }
  if (below.empty()) return {};
  const auto admissible = [&below](std::uint64_t s) {
    return std::any_of(below.begin(), below.end(), [s](std::uint64_t g) { return (g & s) == 0; });
  };
  const int top_face = max_i < 0 ? m.degree() : std::min(m.degree(), max_i + 1);

  std::vector<std::vector<std::uint64_t>> levels{{0}};
  for (int size = 1; size <= top_face; ++size) {
    std::vector<std::uint64_t> level;
    for (std::uint64_t s : levels.back()) {
      // Extend by variables above max(S) so each face appears once.
      std::uint64_t ext = m.bits();
      if (s != 0) ext &= ~((std::uint64_t{2} << (63 - std::countl_zero(s))) - 1);
      for (; ext != 0; ext &= ext - 1) {
        const std::uint64_t t = s | (ext & (~ext + 1));
        if (admissible(t)) level.push_back(t);
      }
    }
    if (budget) budget->charge(level.size() + 1);
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }

  // rank[j] = rank of the boundary from faces of size j to size j - 1.
  std::vector<std::size_t> rank(levels.size() + 1, 0);
  for (std::size_t j = 1; j < levels.size(); ++j) {
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(levels[j - 1].size());
    for (std::uint32_t r = 0; r < levels[j - 1].size(); ++r) index.emplace(levels[j - 1][r], r);
    std::vector<SparseVector> columns;
    columns.reserve(levels[j].size());
    for (std::uint64_t s : levels[j]) {
      SparseVector col;
      int position = 0;
      for (std::uint64_t rest = s; rest != 0; rest &= rest - 1, ++position) {
        const std::uint64_t face = s & ~(rest & (~rest + 1));
        col.emplace_back(index.at(face), position % 2 == 0 ? 1U : p - 1);
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    rank[j] = rank_mod_p(columns, levels[j - 1].size(), p, budget);
  }

  const int last = max_i < 0 ? static_cast<int>(levels.size()) - 1 : max_i;
  std::vector<std::uint64_t> betti(static_cast<std::size_t>(std::max(last, 0)) + 1, 0);
  for (int i = 0; i <= last && i < static_cast<int>(levels.size()); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    betti[ui] = levels[ui].size() - rank[ui] - rank[ui + 1];
  }
  return betti;
}

namespace {

void check_characteristic(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
}

void check_generators(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.size() > cap) {
    throw BudgetExceeded("ideal has " + std::to_string(ideal.size()) + " generators, cap is " + std::to_string(cap));
  }
}

std::vector<BettiEntry> entries_for(const MonomialIdeal& ideal, const std::vector<SqfMonomial>& lattice,
                                    std::size_t begin, std::size_t step, const BettiOptions& options) {
  std::vector<BettiEntry> out;
  for (std::size_t k = begin; k < lattice.size(); k += step) {
    const std::vector<std::uint64_t> b =
        betti_at(ideal, lattice[k], options.characteristic, options.max_homological, options.budget);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] != 0) out.push_back({static_cast<int>(i), lattice[k], b[i]});
    }
  }
  return out;
}

std::optional<int> pure_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  const std::optional<int> d = ideal.generation_degree();
  if (!d) throw PreconditionError("ideal " + to_string(ideal) + " is not generated in a single degree");
  return d;
}

}  // namespace

BettiTable multigraded_betti(const MonomialIdeal& ideal, const BettiOptions& options) {
  check_characteristic(options.characteristic);
  check_generators(ideal, options.max_generators);
  const std::vector<SqfMonomial> lattice = lcm_lattice(ideal, options.max_lattice, options.budget);
  std::vector<BettiEntry> entries;
  const auto workers = static_cast<std::size_t>(std::max(1, options.workers));
  if (workers == 1 || lattice.size() < 64) {
    entries = entries_for(ideal, lattice, 0, 1, options);
  } else {
    // Strided split keeps the expensive high-degree multidegrees spread out.
    std::vector<std::vector<BettiEntry>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          parts[w] = entries_for(ideal, lattice, w, workers, options);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& part : parts) entries.insert(entries.end(), part.begin(), part.end());
  }
  return BettiTable(options.characteristic, ideal.generation_degree(), options.max_homological, std::move(entries));
}

int regularity(const BettiTable& table) {
  if (table.empty()) return 1;
  int reg = 0;
  for (const BettiEntry& e : table.entries()) reg = std::max(reg, e.m.degree() - e.i);
  return reg;
}

int regularity(const MonomialIdeal& ideal, const BettiOptions& options) {
  return regularity(multigraded_betti(ideal, options));
}

int projdim(const BettiTable& table) {
  int pd = -1;
  for (const BettiEntry& e : table.entries()) pd = std::max(pd, e.i);
  return pd;
}

int projdim(const MonomialIdeal& ideal, const BettiOptions& options) {
  return projdim(multigraded_betti(ideal, options));
}

bool has_linear_resolution(const BettiTable& table) {
  if (table.empty()) return true;
  if (!table.degree()) throw PreconditionError("linear resolution needs a single generation degree");
  const int d = *table.degree();
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [d](const BettiEntry& e) { return e.m.degree() == d + e.i; });
}

bool has_linear_resolution(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (!pure_degree(ideal)) return true;
  BettiOptions full = options;
  full.max_homological = -1;
  return has_linear_resolution(multigraded_betti(ideal, full));
}

bool is_linearly_related(const BettiTable& table) {
  if (table.empty()) return true;
  if (!table.degree()) throw PreconditionError("linear relatedness needs a single generation degree");
  if (!table.complete() && table.max_homological() < 1) throw PreconditionError("table lacks beta_1");
  const int d = *table.degree();
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [d](const BettiEntry& e) { return e.i != 1 || e.m.degree() == d + 1; });
}

bool is_linearly_related_homological(const MonomialIdeal& ideal, const BettiOptions& options) {
  const std::optional<int> d = pure_degree(ideal);
  if (!d) return true;
  check_characteristic(options.characteristic);
  check_generators(ideal, options.max_generators);
  for (SqfMonomial m : lcm_lattice(ideal, options.max_lattice, options.budget)) {
    if (m.degree() <= *d + 1) continue;
    const std::vector<std::uint64_t> b = betti_at(ideal, m, options.characteristic, 1, options.budget);
    if (b.size() > 1 && b[1] != 0) return false;
  }
  return true;
}

std::string render_betti_diagram(const BettiTable& table) {
  constexpr int kLabel = 5;
  constexpr int kCell = 6;
  std::ostringstream out;
  if (table.empty()) {
    out << "zero ideal: no Betti numbers\n";
    return out.str();
  }
  const auto graded = table.graded_table();
  const std::vector<std::uint64_t> totals = table.totals();
  int low = graded.begin()->first.second - graded.begin()->first.first;
  int high = low;
  for (const auto& [key, value] : graded) {
    low = std::min(low, key.second - key.first);
    high = std::max(high, key.second - key.first);
  }
  const int columns = static_cast<int>(totals.size());
  const std::string rule(static_cast<std::size_t>(kLabel + kCell * columns), '-');
  const auto emit = [&out](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  std::ostringstream header;
  header << std::string(kLabel, ' ');
  for (int i = 0; i < columns; ++i) header << std::setw(kCell) << i;
  emit(header.str());
  emit(rule);
  for (int row = low; row <= high; ++row) {
    std::ostringstream line;
    line << std::left << std::setw(kLabel) << (std::to_string(row) + ":") << std::right;
    for (int i = 0; i < columns; ++i) {
      auto it = graded.find({i, row + i});
      if (it == graded.end()) {
        line << std::setw(kCell) << "-";
      } else {
        line << std::setw(kCell) << it->second;
      }
    }
    emit(line.str());
  }
  emit(rule);
  std::ostringstream tot;
  tot << std::left << std::setw(kLabel) << "Tot:" << std::right;
  for (std::uint64_t t : totals) tot << std::setw(kCell) << t;
  emit(tot.str());
  return out.str();
}

std::string betti_to_json(const BettiTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const BettiEntry& e : table.entries()) {
    entries.push_back(nlohmann::json::array({e.i, e.m.support().to_vector(), e.value}));
  }
  nlohmann::json doc{{"char", table.characteristic()}, {"entries", entries}};
  return doc.dump();
}

BettiTable betti_from_json(const std::string& text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<BettiEntry> entries;
    std::optional<int> degree;
    bool mixed = false;
    for (const auto& row : doc.at("entries")) {
      BettiEntry e;
      e.i = row.at(0).get<int>();
      e.m = SqfMonomial(IndexSet::from_vector(row.at(1).get<std::vector<int>>()));
      e.value = row.at(2).get<std::uint64_t>();
      if (e.i == 0) {
        mixed = mixed || (degree && *degree != e.m.degree());
        degree = e.m.degree();
      }
      entries.push_back(e);
    }
    if (mixed) degree.reset();
    return BettiTable(doc.at("char").get<std::uint32_t>(), degree, -1, std::move(entries));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed Betti JSON: ") + ex.what());
  }
}

}  // namespace matchpow
