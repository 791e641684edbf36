#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "tgraph/labelings.hpp"
#include "tgraph/verify.hpp"

using namespace tgraph;

TEST_CASE("diameter") {
    CHECK(diameter(directed_ring(5)) == 4);
    CHECK(diameter(directed_line(4)) == 3);
    CHECK(diameter(grid_graph(3, 2)) == 3);
    CHECK(diameter(StaticGraph::directed(3, {})) == 0);
}

TEST_CASE("strongly connected components in condensation order") {
    // two 2-cycles joined by a bridge, plus a sink
    auto g = StaticGraph::directed(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}, {3, 4}});
    auto comps = strongly_connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<NodeId>{0, 1});
    CHECK(comps[1] == std::vector<NodeId>{2, 3});
    CHECK(comps[2] == std::vector<NodeId>{4});
}

TEST_CASE("trivial labeling uses the longest path everywhere") {
    auto g = directed_line(4); // longest path 3 edges
    auto lab = label_all_paths_trivial(g);
    for (const auto& e : g.edges()) CHECK(lab.labels(e) == std::vector<Label>{1, 2, 3});
    CHECK(preserves_all_paths(build_temporal_graph(g, lab)));
    CHECK_THROWS_AS(label_all_paths_trivial(directed_ring(13)), GuardExceeded);
}

TEST_CASE("ring labeling gives each edge two labels") {
    auto ring = directed_ring(4);
    auto lab = label_ring_all_paths(ring);
    CHECK(lab.labels(Edge{0, 1}) == std::vector<Label>{1, 5});
    CHECK(lab.labels(Edge{1, 2}) == std::vector<Label>{2, 6});
    CHECK(lab.labels(Edge{2, 3}) == std::vector<Label>{3, 7});
    CHECK(lab.labels(Edge{3, 0}) == std::vector<Label>{4, 8});
    for (int n = 3; n <= 6; ++n) {
        auto r = directed_ring(n);
        auto l = label_ring_all_paths(r);
        CHECK(l.max_labels_per_edge() == 2);
        CHECK(preserves_all_paths(build_temporal_graph(r, l)));
    }
    CHECK_THROWS_AS(label_ring_all_paths(directed_line(4)), std::invalid_argument);
    CHECK_THROWS_AS(label_ring_all_paths(complete_digraph(3)), std::invalid_argument);
}

TEST_CASE("dag labeling is one label per edge") {
    std::mt19937 rng(5501);
    for (int round = 0; round < 40; ++round) {
        auto g = tsupport::random_dag(rng, tsupport::pick(rng, 2, 7), 0.5);
        if (g.edge_count() == 0) continue;
        auto lab = label_dag_all_paths(g);
        CHECK(lab.max_labels_per_edge() == 1);
        CHECK(preserves_all_paths(build_temporal_graph(g, lab)));
    }
    CHECK_THROWS_AS(label_dag_all_paths(directed_ring(3)), std::invalid_argument);
}

TEST_CASE("strong connectivity reach labeling routes through the root") {
    for (int n = 3; n <= 6; ++n) {
        auto ring = directed_ring(n);
        auto lab = label_strongly_connected_reach(ring, 0);
        auto tg = build_temporal_graph(ring, lab);
        CHECK(preserves_reach(tg));
        CHECK(lab.max_labels_per_edge() <= 2);
    }
    std::mt19937 rng(5502);
    int built = 0;
    for (int round = 0; round < 60; ++round) {
        int n = tsupport::pick(rng, 2, 6);
        auto g = tsupport::random_digraph(rng, n, 0.5);
        bool strong = true;
        for (NodeId u = 0; u < n; ++u)
            strong = strong && static_cast<int>(g.reachable_from(u).size()) == n - 1;
        if (!strong) continue;
        ++built;
        auto lab = label_strongly_connected_reach(g, tsupport::pick(rng, 0, n - 1));
        CHECK(preserves_reach(build_temporal_graph(g, lab)));
        CHECK(lab.max_labels_per_edge() <= 2);
    }
    CHECK(built > 5);
    CHECK_THROWS_AS(label_strongly_connected_reach(directed_line(3), 0),
                    std::invalid_argument);
}

TEST_CASE("reach labeling on arbitrary digraphs") {
    // a DAG degenerates to one label per edge
    auto line = directed_line(4);
    auto lab = label_reach(line);
    CHECK(lab.max_labels_per_edge() == 1);
    CHECK(preserves_reach(build_temporal_graph(line, lab)));

    std::mt19937 rng(5503);
    for (int round = 0; round < 60; ++round) {
        auto g = tsupport::random_digraph(rng, tsupport::pick(rng, 2, 7), 0.4);
        auto l = label_reach(g);
        CHECK(l.max_labels_per_edge() <= 2);
        CHECK(preserves_reach(build_temporal_graph(g, l)));
    }
}

TEST_CASE("tree labeling stays within the diameter") {
    // path on three nodes
    auto path = StaticGraph::undirected(3, {{0, 1}, {1, 2}});
    auto lab = label_tree_all_paths(path);
    CHECK(preserves_all_paths(build_temporal_graph(path, lab)));
    CHECK(*lab.max_label() <= 2);

    std::mt19937 rng(5504);
    for (int round = 0; round < 40; ++round) {
        auto t = tsupport::random_tree(rng, tsupport::pick(rng, 2, 8));
        auto l = label_tree_all_paths(t);
        CHECK(l.max_labels_per_edge() <= 2);
        CHECK(*l.max_label() <= diameter(t));
        CHECK(preserves_all_paths(build_temporal_graph(t, l)));
    }
    CHECK_THROWS_AS(label_tree_all_paths(grid_graph(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(label_tree_all_paths(directed_line(3)), std::invalid_argument);
}

TEST_CASE("ring labelings trade age for labels per edge") {
    auto worst = label_ring_tradeoff(directed_ring(4), 0);
    for (const auto& [e, ls] : worst.all()) CHECK(ls == std::vector<Label>{1, 2, 3});

    for (int n = 4; n <= 7; ++n) {
        auto ring = directed_ring(n);
        for (int k = 1; k < n; ++k) {
            auto lab = label_ring_tradeoff(ring, k);
            CHECK(*lab.age() <= (n - 1) + k);
            CHECK(lab.max_labels_per_edge() <= (n + k) / (k + 1) + 1);
            CHECK(preserves_all_paths(build_temporal_graph(ring, lab)));
        }
    }
    CHECK_THROWS_AS(label_ring_tradeoff(directed_ring(4), -1), std::invalid_argument);
    CHECK_THROWS_AS(label_ring_tradeoff(directed_line(4), 1), std::invalid_argument);
}

TEST_CASE("bfs forest labeling accounting") {
    // two sources sharing their trees' lower edges
    auto g = StaticGraph::directed(4, {{0, 2}, {1, 2}, {2, 3}});
    auto res = label_reach_diameter_bfs(g);
    CHECK(res.per_tree_cost == 5); // trees of sizes 2, 2, 1
    CHECK(res.per_tree_cost == reachability_count(g));
    CHECK(res.stored_cost == 4); // (2,3)@2 is shared between both big trees
    CHECK(res.max_label == 2);
    CHECK(preserves_reach(build_temporal_graph(g, res.labeling)));

    std::mt19937 rng(5505);
    for (int round = 0; round < 40; ++round) {
        auto h = tsupport::random_weak_digraph(rng, tsupport::pick(rng, 2, 7), 0.4);
        auto r = label_reach_diameter_bfs(h);
        CHECK(r.per_tree_cost == reachability_count(h));
        CHECK(r.max_label <= diameter(h));
        CHECK(r.stored_cost == r.labeling.size());
        CHECK(preserves_reach(build_temporal_graph(h, r.labeling)));
    }
    auto split = StaticGraph::directed(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(label_reach_diameter_bfs(split), std::invalid_argument);
}
