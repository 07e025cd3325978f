#pragma once

#include <nlohmann/json.hpp>

#include "ahyp/chern_fano.hpp"
#include "ahyp/chow_ring.hpp"
#include "ahyp/genus_bound.hpp"
#include "ahyp/section_dominating.hpp"
#include "ahyp/variety.hpp"

namespace ahyp {

using Json = nlohmann::ordered_json;

/// {"k":..,"n":..,"terms":[{"partition":[..],"coeff":".."}..]}, coefficients
/// as decimal strings, terms in descending lexicographic order.
Json to_json(const ChowElement& x);
ChowElement chow_element_from_json(const Json& j);

/// {"d","N","expansion","missing_class_ok","positive_coefficients","line_count"}
Json to_json(const FanoClassReport& report);

/// name, D, a, thresholds, line-family dimensions, printed bounds and
/// discrepancy flags.
Json to_json(const VarietyDescriptor& v);

Json to_json(const Classification& c);

/// {"variety","degrees","epsilon","binding_case","binding_j","cases","ledger_flags"}
Json to_json(const GenusBoundReport& report);

Json to_json(const SectionDominatingCheck& check);
Json to_json(const ProductCheck& check);

}  // namespace ahyp
