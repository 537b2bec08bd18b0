#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dsep/dseparation.hpp"
#include "dsep/graph.hpp"
#include "dsep/vertex_cut.hpp"

namespace dsep {

// Raised when no d-separating set exists (the terminals are adjacent in
// the relevant moral graph). Distinct from an empty separator, which
// means the sets are already d-separated.
class NotSeparable : public GraphError {
public:
    explicit NotSeparable(const std::string& what) : GraphError(what) {}
};

struct SeparatorRequest {
    NodeSet x_set;
    NodeSet y_set;
    NodeSet fixed_z;
    bool weighted = false;
};

struct SeparatorResult {
    NodeSet separator;
    int size = 0;
    double weight = 0.0;        // sum of log2 cardinality over the separator
    double certificate_flow = 0.0;
};

// Moral ancestral graph with fixed nodes deleted and dummy terminals
// attached: source adjacent to the neighborhood of y_set, sink adjacent
// to the neighborhood of x_set.
struct SetQueryGraph {
    UndirectedGraph graph;
    std::string source;  // dummy on the Y side
    std::string sink;    // dummy on the X side
};

namespace detail {

inline std::string unique_name(std::string base, const NodeSet& taken) {
    while (taken.contains(base)) base += "'";
    return base;
}

inline void validate_request(const Dag& g, const SeparatorRequest& req) {
    if (req.x_set.empty() || req.y_set.empty())
        throw GraphError("separator request requires non-empty X and Y");
    if (!req.x_set.disjoint_with(req.y_set) ||
        !req.x_set.disjoint_with(req.fixed_z) ||
        !req.y_set.disjoint_with(req.fixed_z))
        throw GraphError("X, Y and fixed Z must be pairwise disjoint");
    for (const auto& id : req.x_set) (void)g.index_of(id);
    for (const auto& id : req.y_set) (void)g.index_of(id);
    for (const auto& id : req.fixed_z) (void)g.index_of(id);
}

inline double log_state_weight(const Dag& g, const std::string& id) {
    return std::log2(static_cast<double>(g.cardinality(id)));
}

inline SeparatorResult finish(const Dag& g, const CutResult& cut) {
    SeparatorResult result;
    result.separator = cut.cut_nodes;
    result.size = static_cast<int>(cut.cut_nodes.size());
    result.certificate_flow = cut.flow_value;
    for (const auto& id : cut.cut_nodes)
        result.weight += log_state_weight(g, id);
    return result;
}

}  // namespace detail

inline SetQueryGraph build_set_query_graph(const Dag& g, const NodeSet& x_set,
                                           const NodeSet& y_set,
                                           const NodeSet& fixed_z = {}) {
    const NodeSet anc = ancestors(g, x_set.set_union(y_set).set_union(fixed_z));
    const UndirectedGraph moral = moralize(induced_subgraph(g, anc));
    const NodeSet remaining = anc.set_minus(fixed_z);

    // deleting Z removes its incident edges; a direct X-Y edge that
    // survives means no separator can exist
    std::vector<Edge> edges;
    for (const auto& [a, b] : moral.edges()) {
        if (!remaining.contains(a) || !remaining.contains(b)) continue;
        const bool xy = (x_set.contains(a) && y_set.contains(b)) ||
                        (x_set.contains(b) && y_set.contains(a));
        if (xy)
            throw NotSeparable("not separable: " + a + " and " + b +
                               " are adjacent in the moral ancestral graph");
        edges.emplace_back(a, b);
    }

    const std::string sink = detail::unique_name("@x", remaining);
    NodeSet taken = remaining;
    taken.insert(sink);
    const std::string source = detail::unique_name("@y", taken);

    std::vector<std::string> nodes = remaining.items();
    nodes.push_back(sink);
    nodes.push_back(source);
    NodeSet sink_adj, source_adj;
    for (const auto& [a, b] : edges) {
        if (x_set.contains(a)) sink_adj.insert(b);
        if (x_set.contains(b)) sink_adj.insert(a);
        if (y_set.contains(a)) source_adj.insert(b);
        if (y_set.contains(b)) source_adj.insert(a);
    }
    for (const auto& id : sink_adj) edges.emplace_back(sink, id);
    for (const auto& id : source_adj) edges.emplace_back(source, id);
    return SetQueryGraph{UndirectedGraph(nodes, edges), source, sink};
}

namespace detail {

inline SeparatorResult solve_set_query(const Dag& g, const SeparatorRequest& req) {
    validate_request(g, req);
    const SetQueryGraph sq = build_set_query_graph(g, req.x_set, req.y_set, req.fixed_z);
    NodeWeights weight;
    const double inf = std::numeric_limits<double>::infinity();
    for (const auto& id : req.x_set)
        if (sq.graph.has_node(id)) weight[id] = inf;
    for (const auto& id : req.y_set)
        if (sq.graph.has_node(id)) weight[id] = inf;
    if (req.weighted)
        for (const auto& id : sq.graph.nodes())
            if (!weight.count(id) && id != sq.source && id != sq.sink)
                weight[id] = log_state_weight(g, id);
    const CutResult cut = min_vertex_cut(sq.graph, sq.source, sq.sink, weight);
    return finish(g, cut);
}

}  // namespace detail

// Minimum d-separating set for a single non-adjacent pair. The flow runs
// from the terminal whose separator neighborhood the tie-break prefers:
// with x not a descendant of y the source sits at y, so the canonical
// source-side cut is the minimum separator nearest y.
inline SeparatorResult minimum_d_separator(const Dag& g, const std::string& x,
                                           const std::string& y) {
    if (x == y)
        throw GraphError("separator endpoints must differ: " + x);
    if (g.adjacent(x, y))
        throw NotSeparable("not separable: " + x + " and " + y + " are adjacent");
    std::string source = y, sink = x;
    if (descendants(g, y).contains(x)) std::swap(source, sink);

    const NodeSet anc = ancestors(g, NodeSet{x, y});
    const UndirectedGraph h = moralize(induced_subgraph(g, anc));
    if (h.has_edge(x, y))
        throw NotSeparable("not separable: " + x + " and " + y +
                           " are adjacent in the moral ancestral graph");
    return detail::finish(g, min_vertex_cut(h, source, sink));
}

// Set-to-set variant via dummy terminals attached around X and Y.
inline SeparatorResult minimum_d_separator_sets(const Dag& g, const NodeSet& x_set,
                                                const NodeSet& y_set) {
    return detail::solve_set_query(g, SeparatorRequest{x_set, y_set, {}, false});
}

// Constrained variant: S of minimum size such that fixed_z u S
// d-separates X from Y. An empty S means fixed_z already d-separates.
inline SeparatorResult minimum_d_separator_constrained(const Dag& g,
                                                       const SeparatorRequest& req) {
    SeparatorRequest unweighted = req;
    unweighted.weighted = false;
    return detail::solve_set_query(g, unweighted);
}

// Same pipeline with capacity log2(cardinality): minimizes total log
// state space instead of node count.
inline SeparatorResult minimum_weight_d_separator(const Dag& g,
                                                  const SeparatorRequest& req) {
    SeparatorRequest weighted = req;
    weighted.weighted = true;
    return detail::solve_set_query(g, weighted);
}

}  // namespace dsep
