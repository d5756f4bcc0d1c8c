#include "bnalg/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "bnalg/errors.hpp"

namespace bnalg {

RawGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("variables") || !j["variables"].is_array()) {
        throw InvalidInput("graph JSON needs a \"variables\" array");
    }
    RawGraph raw;
    for (const auto& v : j["variables"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("levels") || !v["id"].is_number_integer() ||
            !v["levels"].is_number_integer()) {
            throw InvalidInput("each variable needs integer \"id\" and \"levels\"");
        }
        raw.variables.push_back({v["id"].get<std::int64_t>(), v["levels"].get<int>()});
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InvalidInput("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
                throw InvalidInput("each edge must be a pair of integer ids");
            }
            raw.edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
        }
    }
    return raw;
}

RawGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read graph file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph_json(ss.str());
}

nlohmann::ordered_json graph_to_json(const DagModel& dag) {
    nlohmann::ordered_json j;
    j["variables"] = nlohmann::ordered_json::array();
    for (Vertex v = 1; v <= dag.size(); ++v) j["variables"].push_back({{"id", v}, {"levels", dag.levels(v)}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : dag.edges()) j["edges"].push_back({a, b});
    return j;
}

}  // namespace bnalg
