#pragma once

#include <string>

#include "pq/json_type.hpp"
#include "pq/quiver.hpp"
#include "pq/shadow.hpp"

namespace pq {

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j, bool tame_mode = true);

std::string serialize_json(const Quiver& q);
Quiver deserialize_json(const std::string& text, bool tame_mode = true);
std::string to_dot(const Quiver& q, const std::string& name = "Q");

json shadow_to_json(const Shadow& a);
Shadow shadow_from_json(const json& j);

}  // namespace pq
