#include "doctest.h"
#include "support.hpp"

#include "subthresh/canonical.hpp"
#include "subthresh/embedding.hpp"
#include "subthresh/error.hpp"
#include "subthresh/families.hpp"
#include "subthresh/graph.hpp"
#include "subthresh/graph_io.hpp"

#include <map>
#include <random>

using namespace subthresh;
using support::edges_graph;

namespace {

Graph path_edges(int edges) { return make_family({FamilyKind::path, edges}); }
Graph star_leaves(int leaves) { return make_family({FamilyKind::star, leaves}); }

ErrorKind error_kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::input;
}

} // namespace

TEST_CASE("graph keeps symmetric adjacency and edge count") {
    Graph g(5);
    g.add_edge(0, 3);
    g.add_edge(4, 1);
    CHECK(g.has_edge(3, 0));
    CHECK(g.has_edge(1, 4));
    CHECK_FALSE(g.has_edge(0, 0));
    CHECK(g.edge_count() == 2);
    g.remove_edge(3, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.non_isolated_count() == 2);
    CHECK(error_kind_of([&] { g.add_edge(2, 2); }) == ErrorKind::input);
    CHECK(error_kind_of([&] { g.add_edge(1, 4); }) == ErrorKind::input);
    CHECK(error_kind_of([&] { g.add_edge(0, 5); }) == ErrorKind::input);
    CHECK(error_kind_of([] { Graph big(65); }) == ErrorKind::capacity);
    CHECK(Graph::complete(64).edge_count() == 64 * 63 / 2);
}

TEST_CASE("canonical form: relabelled triangle inside a larger vertex set") {
    const Graph a = edges_graph(5, {{0, 1}, {1, 2}, {0, 2}});
    const Graph b = edges_graph(5, {{3, 1}, {1, 4}, {3, 4}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) == canonical_form(Graph::complete(3)));
}

TEST_CASE("canonical form: path 0-1-2 equals star centred at 1") {
    const Graph path = edges_graph(3, {{0, 1}, {1, 2}});
    const Graph star = edges_graph(3, {{1, 0}, {1, 2}});
    CHECK(canonical_form(path) == canonical_form(star));
}

TEST_CASE("canonical form: P4 and K13 differ") {
    const Graph p4 = edges_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const Graph k13 = edges_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(support::brute_isomorphic(p4, k13));
    CHECK(canonical_form(p4) != canonical_form(k13));
}

TEST_CASE("canonical form of the empty graph is the designated empty key") {
    const auto empty = canonical_form(Graph(4));
    CHECK(empty.key == std::string(1, '\0'));
    CHECK(empty.order == 0);
    CHECK(empty.edge_count == 0);
    CHECK(empty == canonical_form(Graph(1)));
}

TEST_CASE("canonical form is invariant under random relabelling") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> order(1, 8);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = support::random_graph(order(rng), density(rng), rng);
        const Graph h = support::random_relabel(g, rng);
        REQUIRE(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical form round-trips through graph_from_canonical") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = support::random_graph(7, 0.35, rng);
        const auto form = canonical_form(g);
        const Graph back = graph_from_canonical(form);
        CHECK(support::brute_isomorphic(back, g));
        CHECK(canonical_form(back) == form);
    }
}

TEST_CASE("canonical keys separate exactly the isomorphism classes on 5 vertices") {
    // Every labelled graph on 5 vertices; keys are compared against a brute-force
    // class assignment built from all 5! bijections.
    const auto pairs = Graph::complete(5).edges();
    std::vector<Graph> reps;
    std::map<std::string, int> key_to_class;
    for (EdgeMask mask = 0; mask < (EdgeMask{1} << pairs.size()); ++mask) {
        const Graph g = edge_induced_subgraph(Graph::complete(5), mask);
        int cls = -1;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (support::brute_isomorphic(reps[i], g)) {
                cls = static_cast<int>(i);
                break;
            }
        }
        if (cls < 0) {
            cls = static_cast<int>(reps.size());
            reps.push_back(g);
        }
        const auto [it, inserted] = key_to_class.emplace(canonical_form(g).key, cls);
        REQUIRE(it->second == cls);
    }
    CHECK(key_to_class.size() == reps.size());
    // Graphs on at most 5 vertices without isolated vertices, plus the empty graph.
    CHECK(reps.size() == 34);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(Graph::complete(3)) == 6);
    CHECK(automorphism_count(path_edges(2)) == support::brute_automorphisms(path_edges(2)));
    CHECK(automorphism_count(path_edges(2)) == 2);
    const Graph c4 = make_family({FamilyKind::cycle, 4});
    CHECK(support::brute_automorphisms(c4) == 8);
    CHECK(automorphism_count(c4) == 8);
    CHECK(automorphism_count(make_family({FamilyKind::matching, 4})) == 384);
    CHECK(automorphism_count(Graph::complete(10)) == 3628800);
}

TEST_CASE("automorphism counts agree with permutation filtering up to 7 vertices") {
    std::vector<Graph> graphs = {Graph::complete(2), Graph::complete(4), Graph::complete(5)};
    for (int k = 3; k <= 7; ++k) graphs.push_back(make_family({FamilyKind::cycle, k}));
    for (int l = 2; l <= 6; ++l) graphs.push_back(path_edges(l));
    for (int s = 3; s <= 5; ++s) graphs.push_back(star_leaves(s));
    for (int j = 1; j <= 3; ++j) graphs.push_back(make_family({FamilyKind::matching, j}));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) graphs.push_back(support::random_graph(7, 0.45, rng));
    for (const Graph& g : graphs) {
        CHECK(automorphism_count(g) == support::brute_automorphisms(g));
    }
}

TEST_CASE("automorphism count of the cube and of larger symmetric graphs") {
    Graph q3(8);
    for (int v = 0; v < 8; ++v) {
        for (int b = 0; b < 3; ++b) {
            const int w = v ^ (1 << b);
            if (v < w) q3.add_edge(v, w);
        }
    }
    CHECK(automorphism_count(q3) == 48);
    CHECK(automorphism_count(make_family({FamilyKind::cycle, 40})) == 80);
    // Petersen graph
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    CHECK(automorphism_count(petersen) == 120);
}

TEST_CASE("edge-induced subgraphs keep the labelled vertex set") {
    const Graph k3 = Graph::complete(3);
    CHECK(edge_induced_subgraph(k3, 0b111) == k3);
    const Graph one = edge_induced_subgraph(k3, 0b001);
    CHECK(one.order() == 3);
    CHECK(one.edge_count() == 1);
    CHECK(one.non_isolated_count() == 2);

    const Graph c4 = make_family({FamilyKind::cycle, 4});
    const auto edges = c4.edges();  // (0,1) (0,3) (1,2) (2,3)
    EdgeMask opposite = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] == Edge{0, 1} || edges[i] == Edge{2, 3}) opposite |= EdgeMask{1} << i;
    }
    const Graph m = edge_induced_subgraph(c4, opposite);
    CHECK(canonical_form(m) == canonical_form(make_family({FamilyKind::matching, 2})));
    CHECK(error_kind_of([&] { edge_induced_subgraph(k3, 0b1000); }) == ErrorKind::input);
}

TEST_CASE("embedding counts") {
    const Graph k2 = Graph::complete(2);
    const Graph k3 = Graph::complete(3);
    const Graph p3 = path_edges(2);
    CHECK(count_embeddings(k2, k3) == 6);
    CHECK(count_embeddings(k3, k3) == 6);
    CHECK(support::brute_embeddings(p3, k3) == 6);
    CHECK(count_embeddings(p3, k3) == 6);
    CHECK(count_embeddings(Graph::complete(4), k3) == 0);
    CHECK(EmbeddingPlan(k3).exists(Graph::complete(4)));
    CHECK_FALSE(EmbeddingPlan(k3).exists(make_family({FamilyKind::cycle, 5})));
}

TEST_CASE("embedding counts agree with exhaustive maps on random hosts") {
    std::mt19937_64 rng(5);
    const std::vector<Graph> patterns = {path_edges(3), star_leaves(3), make_family({FamilyKind::cycle, 4}),
                                         make_family({FamilyKind::matching, 2}), Graph::complete(3)};
    for (int trial = 0; trial < 60; ++trial) {
        const Graph host = support::random_graph(7, 0.5, rng);
        for (const Graph& p : patterns) {
            REQUIRE(count_embeddings(p, host) == support::brute_embeddings(p, host));
        }
    }
}

TEST_CASE("self-embeddings equal the automorphism count") {
    std::vector<Graph> graphs;
    for (int k = 2; k <= 5; ++k) graphs.push_back(Graph::complete(k));
    for (int k = 3; k <= 8; ++k) graphs.push_back(make_family({FamilyKind::cycle, k}));
    for (int l = 2; l <= 7; ++l) graphs.push_back(path_edges(l));
    for (int s = 3; s <= 5; ++s) graphs.push_back(star_leaves(s));
    for (int j = 1; j <= 4; ++j) graphs.push_back(make_family({FamilyKind::matching, j}));
    for (const Graph& g : graphs) {
        CHECK(BigInt(count_embeddings(g, g)) == automorphism_count(g));
    }
}

TEST_CASE("edge-list parsing") {
    CHECK(parse_graph("0 1\n1 2\n2 0") == Graph::complete(3));
    CHECK(parse_graph("0 1") == Graph::complete(2));
    CHECK(parse_graph("# triangle\n\n0 1   # first\n1\t2\n2 0\n") == Graph::complete(3));
    const Graph padded = parse_graph("# order 6\n0 1\n");
    CHECK(padded.order() == 6);
    CHECK(padded.edge_count() == 1);
}

TEST_CASE("edge-list parse errors carry line numbers") {
    auto message_of = [](std::string_view text) {
        try {
            parse_graph(text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::input);
            return std::string(e.what());
        }
        FAIL("expected a parse error");
        return std::string();
    };
    CHECK(message_of("0 0").find("line 1") != std::string::npos);
    CHECK(message_of("0 1\n1 2\n2 1").find("line 3") != std::string::npos);
    CHECK(message_of("0 1\nx y").find("line 2") != std::string::npos);
    CHECK(message_of("0 64").find("line 1") != std::string::npos);
    CHECK(message_of("0 1 2").find("line 1") != std::string::npos);
    CHECK_FALSE(message_of("").empty());
}

TEST_CASE("graph6 parsing and serialisation") {
    // Petersen graph in graph6 as printed by nauty's geng/showg.
    const Graph petersen = parse_graph("IheA@GUAo");
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(automorphism_count(petersen) == 120);
    CHECK(to_graph6(petersen) == "IheA@GUAo");
    CHECK(parse_graph(">>graph6<<Bw") == Graph::complete(3));
    std::mt19937_64 rng(9);
    for (int n : {1, 2, 7, 30, 62, 63, 64}) {
        const Graph g = support::random_graph(n, 0.3, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("edge-list round trip preserves adjacency and order") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = support::random_graph(1 + trial % 20, 0.2, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    CHECK(parse_graph(serialize_graph(Graph(64))) == Graph(64));
}

TEST_CASE("connected components are compacted") {
    const Graph g = edges_graph(8, {{0, 5}, {5, 7}, {2, 3}});
    const auto parts = connected_components(g);
    REQUIRE(parts.size() == 2);
    int total = 0;
    for (const auto& c : parts) {
        CHECK(c.order() == c.non_isolated_count());
        total += c.edge_count();
    }
    CHECK(total == 3);
}
