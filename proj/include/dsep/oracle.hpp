#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dsep/dseparation.hpp"
#include "dsep/graph.hpp"
#include "dsep/min_separator.hpp"

namespace dsep {

class OracleBudgetExceeded : public GraphError {
public:
    explicit OracleBudgetExceeded(const std::string& what) : GraphError(what) {}
};

// Exhaustive ground truth for small instances: every minimum separator,
// not just one.
struct OracleReport {
    int minimum_size = 0;
    double minimum_weight = 0.0;
    std::vector<NodeSet> all_minimum_sets;
    std::int64_t candidates_examined = 0;
};

namespace detail {

inline bool separates(const Dag& g, const SeparatorRequest& req, const NodeSet& s) {
    SeparationQuery q{req.x_set, req.y_set, req.fixed_z.set_union(s)};
    return d_separated_direct(g, q);
}

inline NodeSet subset_of(const std::vector<std::string>& pool, std::uint32_t mask) {
    NodeSet out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask & (1u << i)) out.insert(pool[i]);
    return out;
}

// smallest separators among subsets of the given candidate pool,
// enumerated in nondecreasing size then insertion order
inline void enumerate_by_size(const Dag& g, const SeparatorRequest& req,
                              const std::vector<std::string>& pool,
                              OracleReport& report) {
    const std::size_t n = pool.size();
    std::vector<std::vector<std::uint32_t>> by_size(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    for (std::size_t k = 0; k <= n; ++k) {
        bool found = false;
        for (std::uint32_t mask : by_size[k]) {
            ++report.candidates_examined;
            const NodeSet s = subset_of(pool, mask);
            if (separates(g, req, s)) {
                report.all_minimum_sets.push_back(s);
                found = true;
            }
        }
        if (found) {
            report.minimum_size = static_cast<int>(k);
            report.minimum_weight = static_cast<double>(k);
            return;
        }
    }
    throw NotSeparable("not separable: no subset of the candidate pool d-separates X and Y");
}

// weight is not monotone in subset size, so the weighted oracle scans
// every subset, keeps the minimum-weight ones, and filters those down to
// inclusion-minimal sets
inline void enumerate_by_weight(const Dag& g, const SeparatorRequest& req,
                                const std::vector<std::string>& pool,
                                OracleReport& report) {
    const std::size_t n = pool.size();
    constexpr double tol = 1e-9;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, NodeSet>> separating;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ++report.candidates_examined;
        const NodeSet s = subset_of(pool, mask);
        if (!separates(g, req, s)) continue;
        double w = 0.0;
        for (const auto& id : s) w += std::log2(static_cast<double>(g.cardinality(id)));
        best = std::min(best, w);
        separating.emplace_back(w, s);
    }
    if (separating.empty())
        throw NotSeparable("not separable: no subset of the candidate pool d-separates X and Y");
    for (const auto& [w, s] : separating) {
        if (w > best + tol) continue;
        bool minimal = true;
        for (const auto& [w2, s2] : separating) {
            if (s2.size() < s.size() && s2.subset_of(s)) {
                minimal = false;
                break;
            }
        }
        if (minimal) report.all_minimum_sets.push_back(s);
    }
    report.minimum_weight = best;
    report.minimum_size = static_cast<int>(report.all_minimum_sets.front().size());
}

}  // namespace detail

// Brute-force minimum d-separating sets over subsets of
// An(X u Y u Z) \ (X u Y u Z). On graphs with at most 10 nodes also
// verifies that widening the pool to the full node set finds nothing
// smaller (the ancestral restriction loses no minimum).
inline OracleReport brute_force_minimum(const Dag& g, const SeparatorRequest& req,
                                        int node_budget = 16) {
    detail::validate_request(g, req);
    const NodeSet anc = ancestors(g, req.x_set.set_union(req.y_set).set_union(req.fixed_z));
    if (static_cast<int>(anc.size()) > node_budget)
        throw OracleBudgetExceeded("ancestral set has " + std::to_string(anc.size()) +
                                   " nodes, over the budget of " +
                                   std::to_string(node_budget));
    const NodeSet excluded = req.x_set.set_union(req.y_set).set_union(req.fixed_z);
    const std::vector<std::string> pool = anc.set_minus(excluded).items();

    OracleReport report;
    bool separable = true;
    try {
        if (req.weighted)
            detail::enumerate_by_weight(g, req, pool, report);
        else
            detail::enumerate_by_size(g, req, pool, report);
    } catch (const NotSeparable&) {
        separable = false;
    }

    if (!separable) {
        if (g.node_count() <= 10) {
            // the ancestral restriction must not hide a separator that a
            // wider pool would find
            const std::vector<std::string> full_pool =
                NodeSet(g.nodes()).set_minus(excluded).items();
            OracleReport full;
            bool full_separable = true;
            try {
                detail::enumerate_by_size(g, req, full_pool, full);
            } catch (const NotSeparable&) {
                full_separable = false;
            }
            if (full_separable)
                throw GraphError("internal error: full-node enumeration separates "
                                 "where the ancestral pool does not");
        }
        throw NotSeparable("not separable: no subset of An(X u Y u Z) d-separates X and Y");
    }

    if (g.node_count() <= 10) {
        const std::vector<std::string> full_pool =
            NodeSet(g.nodes()).set_minus(excluded).items();
        OracleReport full;
        if (req.weighted)
            detail::enumerate_by_weight(g, req, full_pool, full);
        else
            detail::enumerate_by_size(g, req, full_pool, full);
        const bool consistent = req.weighted
                                    ? std::abs(full.minimum_weight - report.minimum_weight) <= 1e-9
                                    : full.minimum_size == report.minimum_size;
        if (!consistent)
            throw GraphError("internal error: full-node enumeration found a smaller "
                             "separator than the ancestral pool");
    }
    return report;
}

}  // namespace dsep
