#include "matchpow/betti.hpp"
#include "matchpow/edge_ideal.hpp"

int main() {
  using namespace matchpow;
  const BettiTable t = multigraded_betti(sqfree_power(edge_ideal(cycle_graph(7)), 2));
  return t.totals() == std::vector<std::uint64_t>{14, 21, 8} ? 0 : 1;
}
