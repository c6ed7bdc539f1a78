// Internal nlohmann-typed helpers behind the string-based serialize API;
// not installed.
#ifndef POLYDEC_SRC_SYSTEM_JSON_HPP
#define POLYDEC_SRC_SYSTEM_JSON_HPP

#include <json.hpp>

#include "polydec/poly.hpp"

namespace polydec {

nlohmann::json system_json(const PolySystem& sys);
PolySystem system_from_json(const nlohmann::json& j);

}  // namespace polydec

#endif
