#include "crossnest/serialize.hpp"

namespace crossnest {

nlohmann::json to_json(const SetPartition& p) {
    nlohmann::json j;
    j["n"] = p.n();
    j["blocks"] = p.blocks();
    return j;
}

SetPartition partition_from_json(const nlohmann::json& j) {
    return SetPartition(j.at("n").get<int>(),
                        j.at("blocks").get<std::vector<std::vector<int>>>());
}

nlohmann::json to_json(const CharlierDiagram& d) {
    nlohmann::json j;
    j["path"] = d.path.str();
    j["xi"] = d.xi;
    return j;
}

CharlierDiagram diagram_from_json(const nlohmann::json& j) {
    CharlierDiagram d;
    d.path = parse_path(j.at("path").get<std::string>());
    d.xi = j.at("xi").get<std::vector<int>>();
    return d;
}

}  // namespace crossnest
