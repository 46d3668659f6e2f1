#pragma once

#include <json.hpp>

#include "davkit/core/ground_set.hpp"
#include "davkit/core/sequence.hpp"

namespace davkit {

using json = nlohmann::ordered_json;

// Tagged-union objects mirroring the text grammar:
//   {"type":"interval","lo":-2,"hi":4}
//   {"type":"box","axes":[[-1,1],[-1,1]]}
//   {"type":"explicit","dim":1,"elements":[[-2],[3]]}
//   {"type":"product","group":[2],"base":{...}}
json to_json(const GroundSet& g);
GroundSet ground_set_from_json(const json& j);

json to_json(const Element& e);
json to_json(const MixedElement& e);
// {"text": "...", "length": n, "entries": [{"element": [...], "group": [...], "count": k}, ...]}
json to_json(const Sequence& s);
Sequence sequence_from_json(const json& j, const GroupSpec& group = {});

}  // namespace davkit
