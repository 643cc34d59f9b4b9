#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "matchpow/index_set.hpp"

namespace matchpow {

/// Squarefree monomial x_S, identified with its support S in 1..64.
class SqfMonomial {
 public:
  constexpr SqfMonomial() = default;  // the monomial 1
  constexpr explicit SqfMonomial(IndexSet support) : support_(support) {}
  constexpr SqfMonomial(std::initializer_list<int> indices) : support_(indices) {}

  static constexpr SqfMonomial one() { return SqfMonomial(); }
  static constexpr SqfMonomial variable(int i) { return SqfMonomial(IndexSet::singleton(i)); }

  constexpr IndexSet support() const { return support_; }
  constexpr std::uint64_t bits() const { return support_.bits(); }
  constexpr int degree() const { return support_.size(); }
  constexpr bool is_one() const { return support_.empty(); }

  constexpr bool divides(SqfMonomial m) const { return support_.subset_of(m.support_); }
  constexpr SqfMonomial lcm(SqfMonomial m) const { return SqfMonomial(support_ | m.support_); }
  constexpr SqfMonomial gcd(SqfMonomial m) const { return SqfMonomial(support_ & m.support_); }
  /// u : v = u / gcd(u, v).
  constexpr SqfMonomial colon(SqfMonomial v) const { return SqfMonomial(support_ - v.support_); }
  /// The product is squarefree iff the supports are disjoint.
  constexpr bool coprime(SqfMonomial m) const { return !support_.intersects(m.support_); }

  friend constexpr bool operator==(SqfMonomial, SqfMonomial) = default;
  /// Graded, then lexicographic on the sorted index lists.
  friend constexpr std::strong_ordering operator<=>(SqfMonomial a, SqfMonomial b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return std::strong_ordering::equal;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.bits() & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// "x1x2x5", or "1".
  std::string to_string() const;

 private:
  IndexSet support_;
};

/// Monomial ideal generated by squarefree monomials, stored as its minimal
/// generating set G(I) in ascending order. The zero ideal has no generators;
/// the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes the given monomials. n is the number of ambient variables
  /// and must cover every support.
  MonomialIdeal(int n, std::vector<SqfMonomial> monomials);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(int n) { return MonomialIdeal(n, {SqfMonomial::one()}); }

  int ambient() const { return n_; }
  const std::vector<SqfMonomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  /// m lies in the ideal iff some generator divides it.
  bool contains(SqfMonomial m) const;
  /// Common degree of all generators; nullopt for mixed degrees or zero.
  std::optional<int> generation_degree() const;
  /// Union of all generator supports.
  IndexSet support() const;

  /// Same generators, larger ambient ring.
  MonomialIdeal with_ambient(int n) const { return MonomialIdeal(n, gens_); }

  /// Equality of the ideals (ambient sizes are ignored).
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

 private:
  int n_ = 0;
  std::vector<SqfMonomial> gens_;
};

/// Removes every monomial divisible by another one in the list.
MonomialIdeal minimalize(int n, std::vector<SqfMonomial> monomials);

/// I^[k]: generated by products of k generators with pairwise disjoint
/// supports. Zero when no such family exists. Requires k >= 1.
MonomialIdeal sqfree_power(const MonomialIdeal& ideal, int k);

/// Distinct unions of k generators with pairwise disjoint supports, before
/// minimalization. Backtracks over the generators sorted by least variable.
std::vector<SqfMonomial> disjoint_products(const std::vector<SqfMonomial>& gens, int k);

/// I : v, generated by u : v for u in G(I).
MonomialIdeal colon(const MonomialIdeal& ideal, SqfMonomial v);
/// I : J = intersection of I : v over v in G(J). Throws PreconditionError
/// when J is zero.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// I + (v).
MonomialIdeal sum(const MonomialIdeal& a, SqfMonomial v);
/// m * I; m must be coprime to every generator support so the result stays
/// squarefree (throws PreconditionError otherwise).
MonomialIdeal multiply(const MonomialIdeal& ideal, SqfMonomial m);
/// I^{<=m} = (u in G(I) : u | m).
MonomialIdeal restrict(const MonomialIdeal& ideal, SqfMonomial m);

/// Renames variable i to map[i-1] in every generator.
MonomialIdeal relabel(const MonomialIdeal& ideal, const std::vector<int>& map, int n);

enum class RatliffOutcome { holds, fails, vacuous };

/// Compares I^[k] : I^[l] with I^[k]. `vacuous` when I^[l] is zero.
/// Requires 1 <= l <= k.
RatliffOutcome ratliff_check(const MonomialIdeal& ideal, int k, int l);

std::string to_string(RatliffOutcome outcome);
/// "(x1x2, x2x3)", "(0)" or "(1)".
std::string to_string(const MonomialIdeal& ideal);

}  // namespace matchpow
