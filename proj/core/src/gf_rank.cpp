#include "matchpow/gf_rank.hpp"

#include <unordered_map>

#include "matchpow/budget.hpp"

namespace matchpow {

namespace {

constexpr std::size_t kDenseColumnLimit = 5000;
constexpr std::size_t kDenseCellLimit = std::size_t{1} << 24;

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

// Row reduction of the transposed matrix: each column becomes a row.
std::size_t dense_rank(const std::vector<SparseVector>& columns, std::size_t rows, std::uint32_t p, Budget* budget) {
  const std::size_t height = columns.size();
  std::vector<std::uint32_t> a(height * rows, 0);
  for (std::size_t r = 0; r < height; ++r) {
    for (auto [idx, val] : columns[r]) a[r * rows + idx] = val % p;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < rows && rank < height; ++col) {
    std::size_t pivot = rank;
    while (pivot < height && a[pivot * rows + col] == 0) ++pivot;
    if (pivot == height) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < rows; ++c) std::swap(a[pivot * rows + c], a[rank * rows + c]);
    }
    std::uint32_t* prow = &a[rank * rows];
    const std::uint32_t inv = inverse_mod(prow[col], p);
    for (std::size_t c = col; c < rows; ++c) prow[c] = mul_mod(prow[c], inv, p);
    for (std::size_t r = rank + 1; r < height; ++r) {
      std::uint32_t* row = &a[r * rows];
      const std::uint32_t f = row[col];
      if (f == 0) continue;
      const std::uint32_t neg = p - f;
      for (std::size_t c = col; c < rows; ++c) {
        if (prow[c] != 0) row[c] = static_cast<std::uint32_t>((row[c] + static_cast<std::uint64_t>(neg) * prow[c]) % p);
      }
    }
    if (budget) budget->charge(height - rank);
    ++rank;
  }
  return rank;
}

// Incremental echelon basis keyed by leading index.
std::size_t sparse_rank(const std::vector<SparseVector>& columns, std::uint32_t p, Budget* budget) {
  std::unordered_map<std::uint32_t, SparseVector> basis;
  SparseVector scratch;
  for (const SparseVector& col : columns) {
    SparseVector v;
    for (auto [idx, val] : col) {
      if (val % p != 0) v.emplace_back(idx, val % p);
    }
    while (!v.empty()) {
      auto it = basis.find(v.front().first);
      if (it == basis.end()) break;
      const SparseVector& b = it->second;
      const std::uint32_t neg = p - v.front().second;
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < v.size() || j < b.size()) {
        if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
          scratch.push_back(v[i++]);
        } else if (i == v.size() || b[j].first < v[i].first) {
          scratch.emplace_back(b[j].first, mul_mod(neg, b[j].second, p));
          ++j;
        } else {
          const std::uint32_t val =
              static_cast<std::uint32_t>((v[i].second + static_cast<std::uint64_t>(neg) * b[j].second) % p);
          if (val != 0) scratch.emplace_back(v[i].first, val);
          ++i;
          ++j;
        }
      }
      v.swap(scratch);
    }
    if (budget) budget->charge();
    if (v.empty()) continue;
    const std::uint32_t inv = inverse_mod(v.front().second, p);
    for (auto& entry : v) entry.second = mul_mod(entry.second, inv, p);
    const std::uint32_t lead = v.front().first;
    basis.emplace(lead, std::move(v));
  }
  return basis.size();
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t rank_mod_p(const std::vector<SparseVector>& columns, std::size_t rows, std::uint32_t p, Budget* budget) {
  if (columns.empty() || rows == 0) return 0;
  if (columns.size() <= kDenseColumnLimit && columns.size() * rows <= kDenseCellLimit) return dense_rank(columns, rows, p, budget);
  return sparse_rank(columns, p, budget);
}

}  // namespace matchpow
