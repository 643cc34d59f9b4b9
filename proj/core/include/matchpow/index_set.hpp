#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "matchpow/error.hpp"

namespace matchpow {

inline constexpr int kMaxIndex = 64;

/// A set of 1-based indices in [1, 64] packed into one machine word.
/// Index i lives at bit i-1. Used for vertex sets and monomial supports.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  /// {first, ..., last}; empty when last < first.
  static constexpr IndexSet range(int first, int last) {
    IndexSet s;
    for (int i = first; i <= last; ++i) s.insert(i);
    return s;
  }
  static constexpr IndexSet singleton(int i) {
    IndexSet s;
    s.insert(i);
    return s;
  }
  static IndexSet from_vector(const std::vector<int>& indices) {
    IndexSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int i) const {
    return i >= 1 && i <= kMaxIndex && ((bits_ >> (i - 1)) & 1U) != 0;
  }
  constexpr void insert(int i) {
    check(i);
    bits_ |= bit(i);
  }
  constexpr void erase(int i) {
    check(i);
    bits_ &= ~bit(i);
  }

  /// Smallest element, 0 when empty.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest element, 0 when empty.
  constexpr int max() const { return bits_ == 0 ? 0 : kMaxIndex - std::countl_zero(bits_); }

  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
  constexpr IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }
  constexpr IndexSet& operator-=(IndexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return a |= b; }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return a &= b; }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return a -= b; }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i : *this) out.push_back(i);
    return out;
  }

  /// "{1,3,4}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : *this) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }
  static constexpr void check(int i) {
    if (i < 1 || i > kMaxIndex) throw InputError("index " + std::to_string(i) + " outside 1..64");
  }

  std::uint64_t bits_ = 0;
};

using VertexSet = IndexSet;

}  // namespace matchpow
