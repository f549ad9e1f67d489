#pragma once

#include <string>

#include "framelab/frames.hpp"
#include "json.hpp"

namespace framelab {

using Json = nlohmann::ordered_json;

// Canonical element literals: ground elements are the strings "bot", "tt",
// "ff", "top"; an arrow element is the JSON array of its table, one entry per
// canonical domain index.
Json element_to_json(const Element& e);
Element element_from_json(const Layer& layer, const Json& j);

// Ground elements render bare (tt), arrow elements as compact JSON.
std::string element_text(const Element& e);

}  // namespace framelab
