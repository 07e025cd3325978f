#pragma once

#include <string>
#include <string_view>

#include "ahyp/variety.hpp"

namespace ahyp::cli {

/// Parses a variety specification:
///
///   variety := factor { "x" factor }
///   factor  := ("Gr" | "OG" | "SG") "(" int "," int ")"
///            | "P" "(" int ")"
///            | "Fl" "(" int { "," int } ";" int ")"
///
/// Whitespace is ignored. Throws ParseError (with the offset) on bad syntax
/// and std::invalid_argument naming the violated constraint when a factor's
/// parameters are out of its domain.
VarietyDescriptor parse_variety(std::string_view text);

/// Inverse of parse_variety for every catalog descriptor.
inline std::string render(const VarietyDescriptor& v) { return v.name; }

}  // namespace ahyp::cli
