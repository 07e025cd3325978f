#pragma once

#include <string>
#include <string_view>

#include "ahyp/chow_ring.hpp"

namespace ahyp {

/// Text form "3*s[2,1] + 5*s[1,1,1]"; terms in descending lexicographic
/// order, unit coefficients omitted, zero rendered as "0".
std::string to_string(const ChowElement& x);

/// Parses the text form. Whitespace is ignored; a bare integer is a multiple
/// of the unit class s[]. Out-of-box classes are dropped. Throws ParseError
/// on malformed input and std::invalid_argument on a non-partition index.
ChowElement parse_chow_element(const RingContext& context, std::string_view text);

}  // namespace ahyp
