#pragma once

#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "dsep/graph.hpp"

namespace dsep {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kNetworkFormat = "dsep-net/1";

// Reads a "dsep-net/1" document:
//   {"format": "dsep-net/1",
//    "nodes": [{"id": "a", "card": 2}, ...],
//    "arcs": [["a", "b"], ...]}
// "card" is optional and defaults to 2.
inline Dag parse_network(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("network parse error: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != kNetworkFormat)
        throw ParseError(std::string("network document must declare \"format\": \"") +
                         kNetworkFormat + "\"");
    if (!doc.contains("nodes") || !doc["nodes"].is_array())
        throw ParseError("network document needs a \"nodes\" array");
    std::vector<std::string> nodes;
    std::unordered_map<std::string, int> cards;
    for (const auto& entry : doc["nodes"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string())
            throw ParseError("each node needs a string \"id\" field");
        const std::string id = entry["id"].get<std::string>();
        nodes.push_back(id);
        if (entry.contains("card")) {
            if (!entry["card"].is_number_integer() || entry["card"].get<int>() < 1)
                throw ParseError("node " + id + ": \"card\" must be an integer >= 1");
            cards[id] = entry["card"].get<int>();
        }
    }
    std::vector<Arc> arcs;
    for (const auto& entry : doc.value("arcs", nlohmann::json::array())) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string())
            throw ParseError("each arc must be a [parent, child] pair of ids");
        arcs.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
    }
    try {
        return Dag(nodes, arcs, cards);
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid network: ") + e.what());
    }
}

inline std::string serialize_network(const Dag& g, bool pretty = false) {
    nlohmann::json doc;
    doc["format"] = kNetworkFormat;
    doc["nodes"] = nlohmann::json::array();
    for (const auto& id : g.nodes())
        doc["nodes"].push_back({{"id", id}, {"card", g.cardinality(id)}});
    doc["arcs"] = nlohmann::json::array();
    for (const auto& [parent, child] : g.arcs())
        doc["arcs"].push_back({parent, child});
    return pretty ? doc.dump(2) : doc.dump();
}

struct RandomDagSpec {
    int n = 0;
    double edge_prob = 0.0;
    unsigned seed = 0;
    bool random_cards = false;
    int card_min = 2;
    int card_max = 2;
};

// Random DAG over the fixed topological order x1..xn; each forward arc
// appears independently with edge_prob. Pure function of the spec.
inline Dag random_dag(const RandomDagSpec& spec) {
    if (spec.n < 1)
        throw GraphError("random dag needs n >= 1");
    if (spec.edge_prob < 0.0 || spec.edge_prob > 1.0)
        throw GraphError("edge_prob must lie in [0, 1]");
    if (spec.random_cards && (spec.card_min < 1 || spec.card_max < spec.card_min))
        throw GraphError("invalid cardinality range");
    std::mt19937 rng(spec.seed);
    auto coin = [&] {
        // 24 high bits as a uniform draw in [0, 1)
        return static_cast<double>(rng() >> 8) * 0x1p-24 < spec.edge_prob;
    };
    std::vector<std::string> nodes;
    for (int i = 1; i <= spec.n; ++i) nodes.push_back("x" + std::to_string(i));
    std::vector<Arc> arcs;
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j)
            if (coin()) arcs.emplace_back(nodes[static_cast<std::size_t>(i)],
                                          nodes[static_cast<std::size_t>(j)]);
    std::unordered_map<std::string, int> cards;
    if (spec.random_cards) {
        const unsigned span = static_cast<unsigned>(spec.card_max - spec.card_min + 1);
        for (const auto& id : nodes)
            cards[id] = spec.card_min + static_cast<int>(rng() % span);
    }
    return Dag(nodes, arcs, cards);
}

}  // namespace dsep
