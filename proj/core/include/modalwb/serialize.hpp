#ifndef MODALWB_SERIALIZE_HPP_
#define MODALWB_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "modalwb/algebra.hpp"

namespace modalwb {

// FinitePowerset: hex bitmask string "0x5". FiniteCofinite: {"mode": "finite" |
// "cofinite", "set": [...]} where "set" is the complement in cofinite mode.
// RationalInterval: [["0","1/2"], ...] in standard representation.
nlohmann::json element_to_json(const Element& x);
Element element_from_json(const Carrier& c, const nlohmann::json& j);

}  // namespace modalwb

#endif  // MODALWB_SERIALIZE_HPP_
