#pragma once

#include <string>
#include <string_view>

#include "matchpow/ideal.hpp"

namespace matchpow {

/// Ideal text format: optional "n <count>" header, then one generator per
/// line as space-separated variable indices ("1 2" is x1x2). A line "()"
/// is the generator 1. '#' comments and blank lines are ignored. Without a
/// header n is the largest index used.
MonomialIdeal parse_ideal_text(std::string_view text);
/// Always writes the header; generators in ascending order.
std::string format_ideal_text(const MonomialIdeal& ideal);

/// Single-token form used in report instances: "n=4:1-2,2-3"; "n=4:" is
/// the zero ideal and "()" the generator 1.
MonomialIdeal parse_ideal_compact(std::string_view text);
std::string format_ideal_compact(const MonomialIdeal& ideal);

/// {"n": 4, "generators": [[1, 2], [2, 3]]}
std::string ideal_to_json(const MonomialIdeal& ideal);

}  // namespace matchpow
