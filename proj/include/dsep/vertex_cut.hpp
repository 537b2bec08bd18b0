#pragma once

#include <cmath>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsep/graph.hpp"

namespace dsep {

class NoCutExists : public GraphError {
public:
    explicit NoCutExists(const std::string& what) : GraphError(what) {}
};

struct CutResult {
    NodeSet cut_nodes;
    double flow_value = 0.0;
};

// Weight map for min_vertex_cut. Missing nodes default to 1; an infinite
// weight marks a protected node that may never enter the cut.
using NodeWeights = std::unordered_map<std::string, double>;

namespace detail {

// Minimum-weight vertex cut by max-flow over the implicit node-split
// digraph: each node u becomes u+ -> u- carrying the node weight, each
// edge u-v becomes the unbounded arcs u- -> v+ and v- -> u+. The split
// graph is never materialized; the search walks (node, side) states.
class VertexCutSolver {
public:
    VertexCutSolver(const UndirectedGraph& h, int source, int sink,
                    const std::vector<double>& weight)
        : h_(h), source_(source), sink_(sink) {
        const int n = h.node_count();
        double total = 0.0;
        for (int v = 0; v < n; ++v)
            if (std::isfinite(weight[static_cast<std::size_t>(v)]))
                total += weight[static_cast<std::size_t>(v)];
        edge_cap_ = total + 1.0;  // saturates only internal arcs
        cap_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const double w = weight[static_cast<std::size_t>(v)];
            cap_[static_cast<std::size_t>(v)] =
                (v == source_ || v == sink_ || !std::isfinite(w)) ? edge_cap_ : w;
        }
        node_flow_.assign(static_cast<std::size_t>(n), 0.0);

        out_arcs_.resize(static_cast<std::size_t>(n));
        in_arcs_.resize(static_cast<std::size_t>(n));
        int arc_id = 0;
        for (const auto& [a, b] : h.edges()) {
            const int u = h.index_of(a);
            const int v = h.index_of(b);
            out_arcs_[static_cast<std::size_t>(u)].push_back({v, arc_id});
            in_arcs_[static_cast<std::size_t>(v)].push_back({u, arc_id});
            ++arc_id;
            out_arcs_[static_cast<std::size_t>(v)].push_back({u, arc_id});
            in_arcs_[static_cast<std::size_t>(u)].push_back({v, arc_id});
            ++arc_id;
        }
        arc_flow_.assign(static_cast<std::size_t>(arc_id), 0.0);
    }

    CutResult solve() {
        double total_flow = 0.0;
        while (true) {
            const double pushed = augment();
            if (pushed <= 0.0) break;
            total_flow += pushed;
        }
        CutResult result;
        result.flow_value = total_flow;
        const std::vector<char> reach = residual_reachable();
        for (int v = 0; v < h_.node_count(); ++v) {
            if (v == source_ || v == sink_) continue;
            if (reach[plus(v)] && !reach[minus(v)])
                result.cut_nodes.insert(h_.name_of(v));
        }
        return result;
    }

private:
    struct ArcRef {
        int to;
        int arc;
    };

    static constexpr double kEps = 1e-9;

    std::size_t plus(int v) const { return static_cast<std::size_t>(2 * v); }
    std::size_t minus(int v) const { return static_cast<std::size_t>(2 * v + 1); }

    // One shortest augmenting path (breadth-first over residual states);
    // returns the amount pushed, 0 when the sink is unreachable.
    double augment() {
        const int n = h_.node_count();
        // predecessor per state: previous state and the arc used (-1 for
        // internal moves)
        std::vector<int> prev_state(static_cast<std::size_t>(2 * n), -2);
        std::vector<int> prev_arc(static_cast<std::size_t>(2 * n), -1);
        std::deque<int> queue;
        const int start = static_cast<int>(minus(source_));
        const int goal = static_cast<int>(plus(sink_));
        prev_state[static_cast<std::size_t>(start)] = -1;
        queue.push_back(start);
        while (!queue.empty() && prev_state[static_cast<std::size_t>(goal)] == -2) {
            const int state = queue.front();
            queue.pop_front();
            const int v = state / 2;
            auto relax = [&](int next, int arc) {
                if (prev_state[static_cast<std::size_t>(next)] != -2) return;
                prev_state[static_cast<std::size_t>(next)] = state;
                prev_arc[static_cast<std::size_t>(next)] = arc;
                queue.push_back(next);
            };
            if (state % 2 == 0) {  // at v+
                if (node_flow_[static_cast<std::size_t>(v)] <
                    cap_[static_cast<std::size_t>(v)] - kEps)
                    relax(static_cast<int>(minus(v)), -1);
                for (const ArcRef& a : in_arcs_[static_cast<std::size_t>(v)])
                    if (arc_flow_[static_cast<std::size_t>(a.arc)] > kEps)
                        relax(static_cast<int>(minus(a.to)), a.arc);
            } else {  // at v-
                for (const ArcRef& a : out_arcs_[static_cast<std::size_t>(v)])
                    if (arc_flow_[static_cast<std::size_t>(a.arc)] < edge_cap_ - kEps)
                        relax(static_cast<int>(plus(a.to)), a.arc);
                if (node_flow_[static_cast<std::size_t>(v)] > kEps)
                    relax(static_cast<int>(plus(v)), -1);
            }
        }
        if (prev_state[static_cast<std::size_t>(goal)] == -2) return 0.0;

        // bottleneck
        double bottleneck = std::numeric_limits<double>::infinity();
        for (int state = goal; prev_state[static_cast<std::size_t>(state)] != -1;
             state = prev_state[static_cast<std::size_t>(state)]) {
            const int from = prev_state[static_cast<std::size_t>(state)];
            const int arc = prev_arc[static_cast<std::size_t>(state)];
            bottleneck = std::min(bottleneck, residual(from, state, arc));
        }
        // apply
        for (int state = goal; prev_state[static_cast<std::size_t>(state)] != -1;
             state = prev_state[static_cast<std::size_t>(state)]) {
            const int from = prev_state[static_cast<std::size_t>(state)];
            const int arc = prev_arc[static_cast<std::size_t>(state)];
            push(from, state, arc, bottleneck);
        }
        return bottleneck;
    }

    double residual(int from, int to, int arc) const {
        if (arc >= 0) {
            // forward edge arc when leaving a minus state, backward otherwise
            if (from % 2 == 1)
                return edge_cap_ - arc_flow_[static_cast<std::size_t>(arc)];
            return arc_flow_[static_cast<std::size_t>(arc)];
        }
        const int v = from / 2;
        if (from % 2 == 0)
            return cap_[static_cast<std::size_t>(v)] - node_flow_[static_cast<std::size_t>(v)];
        return node_flow_[static_cast<std::size_t>(v)];
        (void)to;
    }

    void push(int from, int to, int arc, double amount) {
        if (arc >= 0) {
            if (from % 2 == 1)
                arc_flow_[static_cast<std::size_t>(arc)] += amount;
            else
                arc_flow_[static_cast<std::size_t>(arc)] -= amount;
            return;
        }
        const int v = from / 2;
        if (from % 2 == 0)
            node_flow_[static_cast<std::size_t>(v)] += amount;
        else
            node_flow_[static_cast<std::size_t>(v)] -= amount;
        (void)to;
    }

    // states reachable from the source exit in the final residual graph
    std::vector<char> residual_reachable() const {
        const int n = h_.node_count();
        std::vector<char> reach(static_cast<std::size_t>(2 * n), 0);
        std::vector<int> stack;
        reach[minus(source_)] = 1;
        stack.push_back(static_cast<int>(minus(source_)));
        while (!stack.empty()) {
            const int state = stack.back();
            stack.pop_back();
            const int v = state / 2;
            auto visit = [&](std::size_t next) {
                if (!reach[next]) {
                    reach[next] = 1;
                    stack.push_back(static_cast<int>(next));
                }
            };
            if (state % 2 == 0) {
                if (node_flow_[static_cast<std::size_t>(v)] <
                    cap_[static_cast<std::size_t>(v)] - kEps)
                    visit(minus(v));
                for (const ArcRef& a : in_arcs_[static_cast<std::size_t>(v)])
                    if (arc_flow_[static_cast<std::size_t>(a.arc)] > kEps)
                        visit(minus(a.to));
            } else {
                for (const ArcRef& a : out_arcs_[static_cast<std::size_t>(v)])
                    if (arc_flow_[static_cast<std::size_t>(a.arc)] < edge_cap_ - kEps)
                        visit(plus(a.to));
                if (node_flow_[static_cast<std::size_t>(v)] > kEps)
                    visit(plus(v));
            }
        }
        return reach;
    }

    const UndirectedGraph& h_;
    int source_;
    int sink_;
    double edge_cap_;
    std::vector<double> cap_;
    std::vector<double> node_flow_;
    std::vector<double> arc_flow_;
    std::vector<std::vector<ArcRef>> out_arcs_;
    std::vector<std::vector<ArcRef>> in_arcs_;
};

inline std::vector<double> resolve_weights(const UndirectedGraph& h,
                                           const NodeWeights& weight) {
    std::vector<double> w(static_cast<std::size_t>(h.node_count()), 1.0);
    for (const auto& [id, value] : weight) {
        if (value < 0.0)
            throw GraphError("negative weight on node: " + id);
        w[static_cast<std::size_t>(h.index_of(id))] = value;
    }
    return w;
}

}  // namespace detail

// Minimum-weight set of non-terminal nodes disconnecting s from t,
// together with the certifying max-flow value. Among all minimum cuts
// returns the canonical source-side cut: u is cut iff u+ is reachable
// from s- in the final residual graph and u- is not.
inline CutResult min_vertex_cut(const UndirectedGraph& h, const std::string& s,
                                const std::string& t,
                                const NodeWeights& weight = {}) {
    const int source = h.index_of(s);
    const int sink = h.index_of(t);
    if (source == sink)
        throw GraphError("cut terminals must differ: " + s);
    if (h.has_edge(s, t))
        throw NoCutExists("no vertex cut exists: " + s + " and " + t + " are adjacent");
    detail::VertexCutSolver solver(h, source, sink, detail::resolve_weights(h, weight));
    return solver.solve();
}

inline double max_flow_value(const UndirectedGraph& h, const std::string& s,
                             const std::string& t,
                             const NodeWeights& weight = {}) {
    return min_vertex_cut(h, s, t, weight).flow_value;
}

}  // namespace dsep
