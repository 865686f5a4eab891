#pragma once

#include <string>
#include <string_view>

#include "windlass/hopf.hpp"
#include "windlass/poset.hpp"

namespace windlass {

// One node per element in canonical order, one edge per cover.
std::string to_dot(const Poset& p, const std::string& name = "poset");
// {"elements": [...], "covers": [[a, b], ...], "coordinates": [[{"num", "den_exp"}, ...], ...]}
std::string to_json(const Poset& p, bool with_coordinates = true);
// Element lines "i text" followed by cover lines "a -> b".
std::string to_text(const Poset& p);

// {"basis": "E|F|H", "terms": [{"forest": text, "coeff": {"num", "den"}}, ...]}
std::string to_json(const HopfElement& a);
HopfElement hopf_from_json(std::string_view text, const Signature& sig);
// {"basis": ..., "terms": [{"left": text, "right": text, "coeff": {...}}, ...]}
std::string to_json(const Tensor& t);

}  // namespace windlass
