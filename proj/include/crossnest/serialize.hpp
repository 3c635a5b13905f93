#pragma once

#include <json.hpp>

#include "crossnest/charlier.hpp"
#include "crossnest/partition.hpp"

namespace crossnest {

/// {"n": int, "blocks": [[int]]}
nlohmann::json to_json(const SetPartition& p);
SetPartition partition_from_json(const nlohmann::json& j);

/// {"path": "NSRB...", "xi": [int]}
nlohmann::json to_json(const CharlierDiagram& d);
CharlierDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace crossnest
