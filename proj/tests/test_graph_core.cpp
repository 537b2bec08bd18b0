#include <catch2/catch_amalgamated.hpp>

#include "dsep/graph.hpp"
#include "dsep/net_format.hpp"
#include "helpers.hpp"

using namespace dsep;
using testing::dag_from_arcs;

TEST_CASE("dag construction validates its invariants") {
    CHECK_NOTHROW(Dag({"a", "b"}, {{"a", "b"}}));
    CHECK_THROWS_AS(Dag({"a", "a"}, {}), GraphError);                    // duplicate id
    CHECK_THROWS_AS(Dag({"a"}, {{"a", "a"}}), GraphError);               // self-loop
    CHECK_THROWS_AS(Dag({"a", "b"}, {{"a", "b"}, {"a", "b"}}), GraphError);
    CHECK_THROWS_AS(Dag({"a", "b"}, {{"a", "c"}}), GraphError);          // dangling endpoint
    CHECK_THROWS_AS(Dag({"a", "b"}, {{"a", "b"}, {"b", "a"}}), GraphError);
    CHECK_THROWS_AS(Dag({"a"}, {}, {{"a", 0}}), GraphError);             // cardinality < 1
}

TEST_CASE("cycle errors name an offending arc") {
    try {
        Dag({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
        FAIL("expected a cycle error");
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("cycle") != std::string::npos);
        CHECK(std::string(e.what()).find("->") != std::string::npos);
    }
}

TEST_CASE("ancestors") {
    const Dag chain = dag_from_arcs({{"a", "b"}, {"b", "c"}});
    CHECK(ancestors(chain, {"c"}) == NodeSet{"a", "b", "c"});
    CHECK(ancestors(chain, {"a"}) == NodeSet{"a"});
    const Dag vee = dag_from_arcs({{"a", "c"}, {"b", "c"}, {"c", "d"}});
    CHECK(ancestors(vee, {"d"}) == NodeSet{"a", "b", "c", "d"});
    CHECK_THROWS_AS(ancestors(chain, {"nope"}), GraphError);
}

TEST_CASE("descendants") {
    const Dag chain = dag_from_arcs({{"a", "b"}, {"b", "c"}});
    CHECK(descendants(chain, "a") == NodeSet{"b", "c"});
    CHECK(descendants(chain, "c") == NodeSet{});
    const Dag vee = dag_from_arcs({{"a", "c"}, {"b", "c"}});
    CHECK(descendants(vee, "b") == NodeSet{"c"});
    CHECK_THROWS_AS(descendants(chain, "nope"), GraphError);
}

TEST_CASE("induced subgraph") {
    const Dag chain = dag_from_arcs({{"a", "b"}, {"b", "c"}});
    const Dag sub = induced_subgraph(chain, {"a", "b"});
    CHECK(sub.nodes() == std::vector<std::string>{"a", "b"});
    CHECK(sub.arcs() == std::vector<Arc>{{"a", "b"}});

    const Dag all = induced_subgraph(chain, NodeSet(chain.nodes()));
    CHECK(all.nodes() == chain.nodes());
    CHECK(all.arcs() == chain.arcs());

    const Dag sparse = induced_subgraph(chain, {"a", "c"});
    CHECK(sparse.node_count() == 2);
    CHECK(sparse.arcs().empty());
    CHECK_THROWS_AS(induced_subgraph(chain, {"nope"}), GraphError);
}

TEST_CASE("moralize") {
    const Dag vee = dag_from_arcs({{"a", "c"}, {"b", "c"}});
    const UndirectedGraph m1 = moralize(vee);
    CHECK(m1.has_edge("a", "c"));
    CHECK(m1.has_edge("b", "c"));
    CHECK(m1.has_edge("a", "b"));  // married parents
    CHECK(m1.edges().size() == 3);

    const UndirectedGraph m2 = moralize(dag_from_arcs({{"a", "b"}, {"b", "c"}}));
    CHECK(m2.edges().size() == 2);
    CHECK_FALSE(m2.has_edge("a", "c"));

    const UndirectedGraph m3 =
        moralize(dag_from_arcs({{"a", "d"}, {"b", "d"}, {"c", "d"}}));
    CHECK(m3.edges().size() == 6);  // three parent arcs + all pairwise marriages
    CHECK(m3.has_edge("a", "b"));
    CHECK(m3.has_edge("a", "c"));
    CHECK(m3.has_edge("b", "c"));
}

TEST_CASE("topological order") {
    const Dag chain = dag_from_arcs({{"a", "b"}, {"b", "c"}});
    CHECK(topological_order(chain) == std::vector<std::string>{"a", "b", "c"});
    const Dag loose = Dag({"a", "b"}, {});
    CHECK(topological_order(loose) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("ancestor properties on random dags") {
    std::mt19937 rng(7);
    for (unsigned seed = 0; seed < 40; ++seed) {
        const Dag g = random_dag({8, 0.3, seed});
        const auto q = testing::random_query(g, rng);
        const NodeSet ax = ancestors(g, q.x_set);
        const NodeSet ay = ancestors(g, q.x_set.set_union(q.y_set));

        CHECK(q.x_set.subset_of(ax));
        CHECK(ancestors(g, ax) == ax);  // idempotent
        CHECK(ax.subset_of(ay));        // monotone

        // x in de(y) iff y in an({x}) \ {x}
        for (const auto& y : g.nodes()) {
            const NodeSet dy = descendants(g, y);
            for (const auto& x : g.nodes()) {
                const bool via_anc = ancestors(g, NodeSet{x}).contains(y) && x != y;
                CHECK(dy.contains(x) == via_anc);
            }
        }

        // moral graph contains the skeleton
        const UndirectedGraph m = moralize(g);
        for (const auto& [parent, child] : g.arcs()) CHECK(m.has_edge(parent, child));

        // moralizing an ancestral induced subgraph only drops edges
        const Dag sub = induced_subgraph(g, ax);
        const UndirectedGraph msub = moralize(sub);
        for (const auto& [a, b] : msub.edges()) CHECK(m.has_edge(a, b));
    }
}
