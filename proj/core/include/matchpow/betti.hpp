#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchpow/budget.hpp"
#include "matchpow/ideal.hpp"

namespace matchpow {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

struct BettiOptions {
  std::uint32_t characteristic = kDefaultCharacteristic;
  /// Compute beta_i only for i <= max_homological; -1 means every i.
  int max_homological = -1;
  /// Refuse ideals with more minimal generators than this.
  std::size_t max_generators = 20000;
  /// Refuse lcm lattices larger than this.
  std::size_t max_lattice = 2'000'000;
  /// Multidegrees are split across this many threads.
  int workers = 1;
  Budget* budget = nullptr;
};

struct BettiEntry {
  int i = 0;
  SqfMonomial m;
  std::uint64_t value = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Nonzero multigraded Betti numbers of a squarefree monomial ideal.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::uint32_t characteristic, std::optional<int> degree, int max_homological,
             std::vector<BettiEntry> entries);

  std::uint32_t characteristic() const { return characteristic_; }
  /// Generation degree when the ideal is pure.
  std::optional<int> degree() const { return degree_; }
  /// Largest homological index that was computed; -1 when complete.
  int max_homological() const { return max_homological_; }
  bool complete() const { return max_homological_ < 0; }
  /// Sorted by (i, m), zero entries omitted.
  const std::vector<BettiEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::uint64_t at(int i, SqfMonomial m) const;
  /// beta_{i,j}: sum of beta_{i,m} over deg m = j.
  std::uint64_t graded(int i, int j) const;
  /// (i, j) -> beta_{i,j}, nonzero only.
  std::map<std::pair<int, int>, std::uint64_t> graded_table() const;
  /// beta_i summed over all multidegrees, index 0..projdim.
  std::vector<std::uint64_t> totals() const;

  /// Entries at multidegrees dividing m.
  BettiTable restricted_to(SqfMonomial m) const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.characteristic_ == b.characteristic_ && a.entries_ == b.entries_;
  }

 private:
  std::uint32_t characteristic_ = kDefaultCharacteristic;
  std::optional<int> degree_;
  int max_homological_ = -1;
  std::vector<BettiEntry> entries_;
};

/// Closure of G(I) under lcm, sorted. Throws BudgetExceeded beyond `cap`.
std::vector<SqfMonomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = 2'000'000,
                                     Budget* budget = nullptr);

/// beta_{i,m}(I) for i = 0..max_i (all i when max_i < 0), from the reduced
/// homology of the upper-Koszul complex of m.
std::vector<std::uint64_t> betti_at(const MonomialIdeal& ideal, SqfMonomial m, std::uint32_t p, int max_i = -1,
                                    Budget* budget = nullptr);

/// Throws InputError if p is not prime, BudgetExceeded past the caps.
/// The zero ideal yields an empty table.
BettiTable multigraded_betti(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// reg(I) = max(deg m - i); 1 for the zero ideal, 0 for the unit ideal.
int regularity(const BettiTable& table);
int regularity(const MonomialIdeal& ideal, const BettiOptions& options = {});
/// Largest i with beta_i != 0; -1 for the zero ideal.
int projdim(const BettiTable& table);
int projdim(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Both throw PreconditionError for mixed generation degrees. The zero
/// ideal has a (vacuously) linear resolution.
bool has_linear_resolution(const MonomialIdeal& ideal, const BettiOptions& options = {});
bool has_linear_resolution(const BettiTable& table);
/// Only beta_1 is computed.
bool is_linearly_related_homological(const MonomialIdeal& ideal, const BettiOptions& options = {});
bool is_linearly_related(const BettiTable& table);

/// CoCoA-style diagram: columns are homological degrees, rows j - i.
std::string render_betti_diagram(const BettiTable& table);
/// {"char": p, "entries": [[i, [indices], value], ...]}
std::string betti_to_json(const BettiTable& table);
BettiTable betti_from_json(const std::string& text);

}  // namespace matchpow
