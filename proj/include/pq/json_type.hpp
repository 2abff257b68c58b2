#pragma once

#include "json.hpp"

namespace pq {

// insertion-ordered so that written files keep the documented key order
using json = nlohmann::ordered_json;

}  // namespace pq
