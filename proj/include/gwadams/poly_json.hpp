#pragma once

#include <nlohmann/json.hpp>

#include "gwadams/polyring.hpp"

namespace gwadams::poly {

nlohmann::json to_json(const MultiPoly& p);
/// Throws ParseError on malformed input.
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace gwadams::poly
