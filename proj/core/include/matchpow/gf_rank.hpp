#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace matchpow {

class Budget;

/// Sparse vector over GF(p): (index, coefficient) pairs sorted by index,
/// coefficients in [1, p).
using SparseVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

bool is_prime(std::uint32_t p);

/// Rank over GF(p) of the matrix whose columns are `columns`, each of
/// length `rows`. Dense Gaussian elimination up to 5000 columns, sparse
/// elimination above; pivots are always the first nonzero entry.
std::size_t rank_mod_p(const std::vector<SparseVector>& columns, std::size_t rows, std::uint32_t p,
                       Budget* budget = nullptr);

/// Coefficient for an integer entry reduced into [0, p).
inline std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace matchpow
