#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dsep {

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Unordered set of node identifiers that remembers insertion order, so
// iteration and printed output are reproducible.
class NodeSet {
public:
    NodeSet() = default;
    NodeSet(std::initializer_list<std::string> ids) {
        for (const auto& id : ids) insert(id);
    }
    explicit NodeSet(const std::vector<std::string>& ids) {
        for (const auto& id : ids) insert(id);
    }

    bool insert(const std::string& id) {
        if (members_.insert(id).second) {
            order_.push_back(id);
            return true;
        }
        return false;
    }

    void insert_all(const NodeSet& other) {
        for (const auto& id : other.order_) insert(id);
    }

    bool contains(const std::string& id) const { return members_.count(id) != 0; }
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }

    auto begin() const { return order_.begin(); }
    auto end() const { return order_.end(); }
    const std::vector<std::string>& items() const { return order_; }

    NodeSet set_union(const NodeSet& other) const {
        NodeSet out = *this;
        out.insert_all(other);
        return out;
    }

    NodeSet set_minus(const NodeSet& other) const {
        NodeSet out;
        for (const auto& id : order_)
            if (!other.contains(id)) out.insert(id);
        return out;
    }

    bool disjoint_with(const NodeSet& other) const {
        const NodeSet& small = size() <= other.size() ? *this : other;
        const NodeSet& large = size() <= other.size() ? other : *this;
        for (const auto& id : small)
            if (large.contains(id)) return false;
        return true;
    }

    bool subset_of(const NodeSet& other) const {
        for (const auto& id : order_)
            if (!other.contains(id)) return false;
        return true;
    }

    friend bool operator==(const NodeSet& a, const NodeSet& b) {
        return a.size() == b.size() && a.subset_of(b);
    }

private:
    std::vector<std::string> order_;
    std::unordered_set<std::string> members_;
};

namespace detail {

// Shared name <-> dense index bookkeeping for both graph types.
class NodeTable {
public:
    void add(const std::string& id) {
        if (index_.count(id))
            throw GraphError("duplicate node identifier: " + id);
        index_.emplace(id, names_.size());
        names_.push_back(id);
    }

    int index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end())
            throw GraphError("unknown node identifier: " + id);
        return static_cast<int>(it->second);
    }

    bool has(const std::string& id) const { return index_.count(id) != 0; }
    const std::string& name_of(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detail

using Arc = std::pair<std::string, std::string>;
using Edge = std::pair<std::string, std::string>;

// Directed acyclic graph over named nodes, with an optional domain
// cardinality per node (defaults to 2). Immutable after construction;
// acyclicity is validated eagerly.
class Dag {
public:
    Dag(const std::vector<std::string>& nodes,
        const std::vector<Arc>& arcs,
        const std::unordered_map<std::string, int>& cardinality = {}) {
        for (const auto& id : nodes) table_.add(id);
        const int n = table_.count();
        parents_.resize(n);
        children_.resize(n);
        cardinality_.assign(n, 2);
        for (const auto& [id, card] : cardinality) {
            if (card < 1)
                throw GraphError("cardinality of " + id + " must be >= 1");
            cardinality_[static_cast<std::size_t>(table_.index_of(id))] = card;
        }
        std::unordered_set<long long> seen;
        for (const auto& [parent, child] : arcs) {
            const int p = table_.index_of(parent);
            const int c = table_.index_of(child);
            if (p == c)
                throw GraphError("self-loop on node: " + parent);
            if (!seen.insert(static_cast<long long>(p) * n + c).second)
                throw GraphError("duplicate arc: " + parent + " -> " + child);
            children_[p].push_back(c);
            parents_[c].push_back(p);
            arcs_.emplace_back(parent, child);
        }
        check_acyclic();
    }

    int node_count() const { return table_.count(); }
    const std::vector<std::string>& nodes() const { return table_.names(); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_node(const std::string& id) const { return table_.has(id); }
    int index_of(const std::string& id) const { return table_.index_of(id); }
    const std::string& name_of(int i) const { return table_.name_of(i); }

    const std::vector<int>& parents_of(int i) const { return parents_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& children_of(int i) const { return children_[static_cast<std::size_t>(i)]; }

    std::vector<std::string> parents_of(const std::string& id) const {
        return names(parents_of(index_of(id)));
    }
    std::vector<std::string> children_of(const std::string& id) const {
        return names(children_of(index_of(id)));
    }

    bool has_arc(const std::string& parent, const std::string& child) const {
        const int p = index_of(parent);
        const int c = index_of(child);
        const auto& kids = children_[static_cast<std::size_t>(p)];
        return std::find(kids.begin(), kids.end(), c) != kids.end();
    }

    bool adjacent(const std::string& a, const std::string& b) const {
        return has_arc(a, b) || has_arc(b, a);
    }

    int cardinality(const std::string& id) const {
        return cardinality_[static_cast<std::size_t>(index_of(id))];
    }
    int cardinality(int i) const { return cardinality_[static_cast<std::size_t>(i)]; }

private:
    std::vector<std::string> names(const std::vector<int>& idx) const {
        std::vector<std::string> out;
        out.reserve(idx.size());
        for (int i : idx) out.push_back(table_.name_of(i));
        return out;
    }

    // Kahn's algorithm; on failure names one arc that closes a cycle.
    void check_acyclic() const {
        const int n = table_.count();
        std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            in_degree[static_cast<std::size_t>(v)] = static_cast<int>(parents_[static_cast<std::size_t>(v)].size());
        std::deque<int> ready;
        for (int v = 0; v < n; ++v)
            if (in_degree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
        int emitted = 0;
        while (!ready.empty()) {
            int v = ready.front();
            ready.pop_front();
            ++emitted;
            for (int c : children_[static_cast<std::size_t>(v)])
                if (--in_degree[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
        }
        if (emitted == n) return;
        // every remaining node lies on or feeds a cycle; report one cycle arc
        for (int v = 0; v < n; ++v) {
            if (in_degree[static_cast<std::size_t>(v)] == 0) continue;
            for (int c : children_[static_cast<std::size_t>(v)]) {
                if (in_degree[static_cast<std::size_t>(c)] > 0)
                    throw GraphError("cycle detected through arc " + table_.name_of(v) +
                                     " -> " + table_.name_of(c));
            }
        }
        throw GraphError("cycle detected");
    }

    detail::NodeTable table_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<int> cardinality_;
    std::vector<Arc> arcs_;
};

// Simple undirected graph, also immutable after construction.
class UndirectedGraph {
public:
    UndirectedGraph(const std::vector<std::string>& nodes,
                    const std::vector<Edge>& edges) {
        for (const auto& id : nodes) table_.add(id);
        const int n = table_.count();
        adjacency_.resize(n);
        std::unordered_set<long long> seen;
        for (const auto& [a, b] : edges) {
            const int u = table_.index_of(a);
            const int v = table_.index_of(b);
            if (u == v)
                throw GraphError("self-loop on node: " + a);
            const long long key = static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
            if (!seen.insert(key).second) continue;
            adjacency_[static_cast<std::size_t>(u)].push_back(v);
            adjacency_[static_cast<std::size_t>(v)].push_back(u);
            edges_.emplace_back(a, b);
        }
    }

    int node_count() const { return table_.count(); }
    const std::vector<std::string>& nodes() const { return table_.names(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_node(const std::string& id) const { return table_.has(id); }
    int index_of(const std::string& id) const { return table_.index_of(id); }
    const std::string& name_of(int i) const { return table_.name_of(i); }

    const std::vector<int>& neighbors_of(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
    std::vector<std::string> neighbors_of(const std::string& id) const {
        std::vector<std::string> out;
        for (int v : neighbors_of(index_of(id))) out.push_back(table_.name_of(v));
        return out;
    }

    bool has_edge(const std::string& a, const std::string& b) const {
        const int u = index_of(a);
        const int v = index_of(b);
        const auto& adj = adjacency_[static_cast<std::size_t>(u)];
        return std::find(adj.begin(), adj.end(), v) != adj.end();
    }

private:
    detail::NodeTable table_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Edge> edges_;
};

// Smallest ancestral set containing xs: xs plus everything with a
// directed path into a member of xs.
inline NodeSet ancestors(const Dag& g, const NodeSet& xs) {
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<int> stack;
    for (const auto& id : xs) {
        const int i = g.index_of(id);
        if (!seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = 1;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int p : g.parents_of(v)) {
            if (!seen[static_cast<std::size_t>(p)]) {
                seen[static_cast<std::size_t>(p)] = 1;
                stack.push_back(p);
            }
        }
    }
    NodeSet out;
    for (int i = 0; i < g.node_count(); ++i)
        if (seen[static_cast<std::size_t>(i)]) out.insert(g.name_of(i));
    return out;
}

// All nodes reachable from x by directed paths, excluding x itself.
inline NodeSet descendants(const Dag& g, const std::string& x) {
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<int> stack{g.index_of(x)};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int c : g.children_of(v)) {
            if (!seen[static_cast<std::size_t>(c)]) {
                seen[static_cast<std::size_t>(c)] = 1;
                stack.push_back(c);
            }
        }
    }
    seen[static_cast<std::size_t>(g.index_of(x))] = 0;
    NodeSet out;
    for (int i = 0; i < g.node_count(); ++i)
        if (seen[static_cast<std::size_t>(i)]) out.insert(g.name_of(i));
    return out;
}

inline Dag induced_subgraph(const Dag& g, const NodeSet& s) {
    std::vector<std::string> nodes;
    std::unordered_map<std::string, int> cards;
    for (const auto& id : g.nodes()) {
        if (!s.contains(id)) continue;
        nodes.push_back(id);
        cards[id] = g.cardinality(id);
    }
    for (const auto& id : s)
        (void)g.index_of(id);  // membership check
    std::vector<Arc> arcs;
    for (const auto& [parent, child] : g.arcs())
        if (s.contains(parent) && s.contains(child)) arcs.emplace_back(parent, child);
    return Dag(nodes, arcs, cards);
}

// Moral graph: edge u-v iff the arc exists in either direction or u and v
// share a child.
inline UndirectedGraph moralize(const Dag& g) {
    const int n = g.node_count();
    std::vector<Edge> edges;
    std::unordered_set<long long> seen;
    auto add = [&](int u, int v) {
        const long long key = static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
        if (seen.insert(key).second)
            edges.emplace_back(g.name_of(u), g.name_of(v));
    };
    for (int v = 0; v < n; ++v) {
        const auto& pa = g.parents_of(v);
        for (int p : pa) add(p, v);
        for (std::size_t i = 0; i < pa.size(); ++i)
            for (std::size_t j = i + 1; j < pa.size(); ++j)
                add(pa[i], pa[j]);
    }
    return UndirectedGraph(g.nodes(), edges);
}

// Kahn's algorithm with a FIFO queue seeded in insertion order, so the
// result is deterministic for a given construction order.
inline std::vector<std::string> topological_order(const Dag& g) {
    const int n = g.node_count();
    std::vector<int> in_degree(static_cast<std::size_t>(n));
    std::deque<int> ready;
    for (int v = 0; v < n; ++v) {
        in_degree[static_cast<std::size_t>(v)] = static_cast<int>(g.parents_of(v).size());
        if (in_degree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
    std::vector<std::string> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop_front();
        order.push_back(g.name_of(v));
        for (int c : g.children_of(v))
            if (--in_degree[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
    }
    return order;  // Dag construction already guarantees acyclicity
}

}  // namespace dsep
