#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dsep/dseparation.hpp"
#include "dsep/graph.hpp"

namespace dsep::testing {

// Dag from arc pairs; node order is first appearance, extras appended.
inline Dag dag_from_arcs(const std::vector<Arc>& arcs,
                         const std::vector<std::string>& extra_nodes = {},
                         const std::unordered_map<std::string, int>& cards = {}) {
    NodeSet nodes;
    for (const auto& [parent, child] : arcs) {
        nodes.insert(parent);
        nodes.insert(child);
    }
    for (const auto& id : extra_nodes) nodes.insert(id);
    return Dag(nodes.items(), arcs, cards);
}

inline UndirectedGraph graph_from_edges(const std::vector<Edge>& edges,
                                        const std::vector<std::string>& extra_nodes = {}) {
    NodeSet nodes;
    for (const auto& [a, b] : edges) {
        nodes.insert(a);
        nodes.insert(b);
    }
    for (const auto& id : extra_nodes) nodes.insert(id);
    return UndirectedGraph(nodes.items(), edges);
}

inline bool connected_avoiding(const UndirectedGraph& h, const std::string& s,
                               const std::string& t, const NodeSet& removed) {
    SeparationQuery q{NodeSet{s}, NodeSet{t}, removed};
    return !separated(h, q);
}

// all minimum-weight vertex cuts between s and t by subset enumeration
struct BruteCut {
    double min_weight = -1.0;  // -1 when no cut exists
    std::vector<NodeSet> all_min_cuts;
};

inline BruteCut brute_force_vertex_cuts(const UndirectedGraph& h, const std::string& s,
                                        const std::string& t,
                                        const std::unordered_map<std::string, double>& weight = {}) {
    std::vector<std::string> pool;
    for (const auto& id : h.nodes())
        if (id != s && id != t) pool.push_back(id);
    auto weight_of = [&](const std::string& id) {
        auto it = weight.find(id);
        return it == weight.end() ? 1.0 : it->second;
    };
    BruteCut out;
    for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        NodeSet cut;
        double w = 0.0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (mask & (1u << i)) {
                cut.insert(pool[i]);
                w += weight_of(pool[i]);
            }
        }
        if (connected_avoiding(h, s, t, cut)) continue;
        if (out.min_weight < 0.0 || w < out.min_weight - 1e-9) {
            out.min_weight = w;
            out.all_min_cuts.clear();
        }
        if (std::abs(w - out.min_weight) <= 1e-9) out.all_min_cuts.push_back(cut);
    }
    return out;
}

// disjoint X, Y, Z drawn from g's nodes; X and Y non-empty
inline SeparationQuery random_query(const Dag& g, std::mt19937& rng,
                                    int max_set_size = 2) {
    std::vector<std::string> pool = g.nodes();
    std::shuffle(pool.begin(), pool.end(), rng);
    auto take = [&](int max_count, int min_count) {
        NodeSet out;
        if (pool.empty()) return out;
        const int count = std::min<int>(static_cast<int>(pool.size()),
                                        min_count + static_cast<int>(rng() % static_cast<unsigned>(max_count - min_count + 1)));
        for (int i = 0; i < count; ++i) {
            out.insert(pool.back());
            pool.pop_back();
        }
        return out;
    };
    SeparationQuery q;
    q.x_set = take(max_set_size, 1);
    q.y_set = take(max_set_size, 1);
    q.z_set = take(max_set_size, 0);
    return q;
}

}  // namespace dsep::testing
