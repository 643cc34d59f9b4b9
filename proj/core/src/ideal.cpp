#include "matchpow/ideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace matchpow {

std::string SqfMonomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (int i : support_) s += "x" + std::to_string(i);
  return s;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<SqfMonomial> monomials) : n_(n) {
  if (n < 0 || n > kMaxIndex) throw InputError("ambient variable count " + std::to_string(n) + " outside 0..64");
  const IndexSet ambient = IndexSet::range(1, n);
  for (SqfMonomial m : monomials) {
    if (!m.support().subset_of(ambient)) {
      throw InputError("monomial " + m.to_string() + " uses a variable outside x1..x" + std::to_string(n));
    }
  }
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  // Ascending graded order: a divisor always precedes its multiples.
  for (SqfMonomial m : monomials) {
    bool redundant = false;
    for (SqfMonomial g : gens_) {
      if (g.degree() >= m.degree()) break;
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(m);
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(SqfMonomial m) const {
  return std::any_of(gens_.begin(), gens_.end(), [m](SqfMonomial g) { return g.divides(m); });
}

std::optional<int> MonomialIdeal::generation_degree() const {
  if (gens_.empty()) return std::nullopt;
  const int d = gens_.front().degree();
  if (gens_.back().degree() != d) return std::nullopt;
  return d;
}

IndexSet MonomialIdeal::support() const {
  IndexSet s;
  for (SqfMonomial g : gens_) s |= g.support();
  return s;
}

MonomialIdeal minimalize(int n, std::vector<SqfMonomial> monomials) { return MonomialIdeal(n, std::move(monomials)); }

namespace {

void disjoint_families(const std::vector<SqfMonomial>& gens, int k, std::size_t start, IndexSet used, int chosen,
                       std::unordered_set<std::uint64_t>& seen, std::vector<SqfMonomial>& out) {
  if (chosen == k) {
    if (seen.insert(used.bits()).second) out.emplace_back(used);
    return;
  }
  const std::size_t need = static_cast<std::size_t>(k - chosen);
  for (std::size_t i = start; i + need <= gens.size(); ++i) {
    if (gens[i].support().intersects(used)) continue;
    disjoint_families(gens, k, i + 1, used | gens[i].support(), chosen + 1, seen, out);
  }
}

}  // namespace

std::vector<SqfMonomial> disjoint_products(const std::vector<SqfMonomial>& gens, int k) {
  std::vector<SqfMonomial> sorted = gens;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](SqfMonomial a, SqfMonomial b) { return a.support().min() < b.support().min(); });
  std::unordered_set<std::uint64_t> seen;
  std::vector<SqfMonomial> out;
  disjoint_families(sorted, k, 0, IndexSet(), 0, seen, out);
  return out;
}

MonomialIdeal sqfree_power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw PreconditionError("squarefree powers are defined for k >= 1");
  if (ideal.is_unit()) return ideal;
  return MonomialIdeal(ideal.ambient(), disjoint_products(ideal.generators(), k));
}

MonomialIdeal colon(const MonomialIdeal& ideal, SqfMonomial v) {
  std::vector<SqfMonomial> out;
  out.reserve(ideal.size());
  for (SqfMonomial u : ideal.generators()) out.push_back(u.colon(v));
  return MonomialIdeal(std::max(ideal.ambient(), v.support().max()), std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  const int n = std::max(a.ambient(), b.ambient());
  std::vector<SqfMonomial> out;
  std::vector<SqfMonomial> rest_a;
  std::vector<SqfMonomial> rest_b;
  // Generators already lying in the other ideal survive as they are; every
  // lcm involving them is redundant.
  for (SqfMonomial u : a.generators()) (b.contains(u) ? out : rest_a).push_back(u);
  for (SqfMonomial v : b.generators()) (a.contains(v) ? out : rest_b).push_back(v);
  for (SqfMonomial u : rest_a) {
    for (SqfMonomial v : rest_b) out.push_back(u.lcm(v));
  }
  return MonomialIdeal(n, std::move(out));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  if (by.is_zero()) throw PreconditionError("colon by the zero ideal is undefined");
  MonomialIdeal result = colon(ideal, by.generators().front());
  for (std::size_t i = 1; i < by.size() && !result.is_zero(); ++i) {
    result = intersect(result, colon(ideal, by.generators()[i]));
  }
  return result.with_ambient(std::max(ideal.ambient(), by.ambient()));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<SqfMonomial> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(std::max(a.ambient(), b.ambient()), std::move(all));
}

MonomialIdeal sum(const MonomialIdeal& a, SqfMonomial v) {
  std::vector<SqfMonomial> all = a.generators();
  all.push_back(v);
  return MonomialIdeal(std::max(a.ambient(), v.support().max()), std::move(all));
}

MonomialIdeal multiply(const MonomialIdeal& ideal, SqfMonomial m) {
  std::vector<SqfMonomial> out;
  for (SqfMonomial u : ideal.generators()) {
    if (!u.coprime(m)) throw PreconditionError("product " + u.to_string() + "*" + m.to_string() + " is not squarefree");
    out.push_back(u.lcm(m));
  }
  return MonomialIdeal(std::max(ideal.ambient(), m.support().max()), std::move(out));
}

MonomialIdeal restrict(const MonomialIdeal& ideal, SqfMonomial m) {
  std::vector<SqfMonomial> out;
  for (SqfMonomial u : ideal.generators()) {
    if (u.divides(m)) out.push_back(u);
  }
  return MonomialIdeal(ideal.ambient(), std::move(out));
}

MonomialIdeal relabel(const MonomialIdeal& ideal, const std::vector<int>& map, int n) {
  std::vector<SqfMonomial> out;
  for (SqfMonomial u : ideal.generators()) {
    IndexSet s;
    for (int i : u.support()) s.insert(map.at(static_cast<std::size_t>(i - 1)));
    out.emplace_back(s);
  }
  return MonomialIdeal(n, std::move(out));
}

RatliffOutcome ratliff_check(const MonomialIdeal& ideal, int k, int l) {
  if (l < 1 || l > k) throw PreconditionError("ratliff_check requires 1 <= l <= k");
  const MonomialIdeal power_k = sqfree_power(ideal, k);
  const MonomialIdeal power_l = sqfree_power(ideal, l);
  if (power_l.is_zero()) return RatliffOutcome::vacuous;
  return colon(power_k, power_l) == power_k ? RatliffOutcome::holds : RatliffOutcome::fails;
}

std::string to_string(RatliffOutcome outcome) {
  switch (outcome) {
    case RatliffOutcome::holds: return "holds";
    case RatliffOutcome::fails: return "fails";
    case RatliffOutcome::vacuous: return "vacuous";
  }
  return "?";
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i > 0) s += ", ";
    s += ideal.generators()[i].to_string();
  }
  return s + ")";
}

}  // namespace matchpow
