#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "tgraph/core.hpp"

#include <set>

using namespace tgraph;

namespace {

TemporalGraph two_label_ring(int n) {
    StaticGraph g = directed_ring(n);
    Labeling lab;
    for (int i = 0; i < n; ++i) {
        Edge e{i, (i + 1) % n};
        lab.add_label(e, i + 1);
        lab.add_label(e, n + i + 1);
    }
    return build_temporal_graph(g, lab);
}

/// Journey checker written from scratch: simplicity, adjacency, membership
/// and strict monotonicity verified step by step.
bool check_journey(const TemporalGraph& tg, const std::vector<TimeEdge>& steps) {
    std::set<NodeId> seen;
    Label last = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& te = steps[i];
        if (i == 0)
            seen.insert(te.from);
        else if (steps[i - 1].to != te.from)
            return false;
        if (seen.count(te.to)) return false;
        seen.insert(te.to);
        if (te.label <= last) return false;
        last = te.label;
        if (!tg.graph().has_edge(te.from, te.to)) return false;
        const auto& ls = tg.labeling().labels(tg.graph().edge_key(te.from, te.to));
        if (std::find(ls.begin(), ls.end(), te.label) == ls.end()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("directed and undirected edge storage") {
    auto d = StaticGraph::directed(3, {{0, 1}, {1, 2}});
    CHECK(d.has_edge(0, 1));
    CHECK_FALSE(d.has_edge(1, 0));
    CHECK(d.edge_key(0, 1) == Edge{0, 1});

    auto u = StaticGraph::undirected(3, {{2, 0}, {1, 2}});
    CHECK(u.has_edge(0, 2));
    CHECK(u.has_edge(2, 0));
    CHECK(u.edge_key(2, 0) == Edge{0, 2});
    CHECK(u.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(u.out_neighbors(2) == std::vector<NodeId>{0, 1});
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(StaticGraph::directed(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(StaticGraph::directed(2, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StaticGraph::undirected(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(StaticGraph::directed(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("weights cover all edges and stay positive") {
    auto g = StaticGraph::undirected(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(g.set_weights({{Edge{0, 1}, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(g.set_weights({{Edge{0, 1}, 1.0}, {Edge{1, 2}, 0.0}}),
                    std::invalid_argument);
    g.set_weights({{Edge{0, 1}, 1.5}, {Edge{1, 2}, 2.0}});
    CHECK(g.weight(Edge{0, 1}) == doctest::Approx(1.5));
}

TEST_CASE("connectivity and reachability") {
    auto g = StaticGraph::directed(4, {{0, 1}, {1, 2}});
    auto r = g.reachable_from(0);
    CHECK(r == std::vector<NodeId>{1, 2});
    CHECK_FALSE(g.is_weakly_connected()); // node 3 isolated
    auto h = StaticGraph::directed(3, {{0, 1}, {2, 1}});
    CHECK(h.is_weakly_connected());
}

TEST_CASE("graph family factories") {
    CHECK(directed_ring(4).edge_count() == 4);
    CHECK(directed_line(5).edge_count() == 4);
    CHECK(complete_digraph(4).edge_count() == 12);
    auto grid = grid_graph(3, 2);
    CHECK(grid.node_count() == 6);
    CHECK(grid.edge_count() == 7); // 2 rows * 2 + 3 columns * 1
    CHECK_FALSE(grid.is_directed());
}

TEST_CASE("temporal graph construction and measures") {
    auto tg = two_label_ring(4);
    CHECK(tg.time_edge_count() == 8);
    CHECK(tg.lambda_min() == 1);
    CHECK(tg.lambda_max() == 8);
    CHECK(tg.age() == 8);
    CHECK(tg.labeling().max_labels_per_edge() == 2);
    CHECK(tg.labeling().total_cost() == 8);

    Labeling empty;
    auto bare = build_temporal_graph(directed_ring(3), empty);
    CHECK(bare.time_edge_count() == 0);
    CHECK_FALSE(bare.labeling().age().has_value());

    Labeling bad;
    bad.add_label(Edge{0, 5}, 1);
    CHECK_THROWS_AS(build_temporal_graph(directed_ring(3), bad), std::invalid_argument);
    Labeling zero;
    CHECK_THROWS_AS(zero.add_label(Edge{0, 1}, 0), std::invalid_argument);
}

TEST_CASE("labeling set semantics") {
    Labeling lab;
    lab.add_label(Edge{0, 1}, 3);
    lab.add_label(Edge{0, 1}, 1);
    lab.add_label(Edge{0, 1}, 3); // duplicate collapses
    CHECK(lab.labels(Edge{0, 1}) == std::vector<Label>{1, 3});
    CHECK(lab.size() == 2);
    lab.remove_label(Edge{0, 1}, 1);
    CHECK(lab.labels(Edge{0, 1}) == std::vector<Label>{3});
    auto moved = lab.shifted(2);
    CHECK(moved.labels(Edge{0, 1}) == std::vector<Label>{5});
    CHECK_THROWS_AS(lab.shifted(-5), std::invalid_argument);
}

TEST_CASE("instances pick exactly the labeled edges") {
    auto tg = two_label_ring(4);
    auto at5 = instance_at(tg, 5);
    CHECK(at5.edges() == std::vector<Edge>{{0, 1}});
    CHECK(instance_at(tg, 99).edge_count() == 0);
    CHECK(instance_at(tg, 3).edges() == std::vector<Edge>{{2, 3}});
}

TEST_CASE("instances recomputed from raw label sets") {
    std::mt19937 rng(7101);
    for (int round = 0; round < 30; ++round) {
        auto tg = tsupport::random_temporal(rng, 5, 10, 6);
        for (Label r = 1; r <= 7; ++r) {
            std::set<Edge> expect;
            for (const auto& [e, ls] : tg.labeling().all())
                if (std::find(ls.begin(), ls.end(), r) != ls.end()) expect.insert(e);
            auto inst = instance_at(tg, r);
            CHECK(std::set<Edge>(inst.edges().begin(), inst.edges().end()) == expect);
        }
    }
}

TEST_CASE("static expansion shapes") {
    // one directed edge available at time 2
    Labeling single;
    single.add_label(Edge{0, 1}, 2);
    auto tiny = build_temporal_graph(StaticGraph::directed(2, {{0, 1}}), single);
    auto ex = static_expansion(tiny);
    CHECK(ex.level_count() == 2);
    CHECK(ex.diagonal_arc_count() == 1);
    CHECK(ex.vertical_arc_count() == 2);
    CHECK(ex.time_node_count() == 4);
    CHECK(ex.is_acyclic());

    auto ring_ex = static_expansion(two_label_ring(4));
    CHECK(ring_ex.level_count() == 9);
    CHECK(ring_ex.diagonal_arc_count() == 8);
    CHECK(ring_ex.vertical_arc_count() == 8 * 4);

    Labeling both;
    both.add_label(Edge{0, 1}, 1);
    auto undir = build_temporal_graph(StaticGraph::undirected(2, {{0, 1}}), both);
    CHECK(static_expansion(undir).diagonal_arc_count() == 2);

    CHECK_THROWS_AS(static_expansion(build_temporal_graph(directed_ring(3), {})),
                    std::invalid_argument);
}

TEST_CASE("expansion diagonal count equals the instance total") {
    std::mt19937 rng(7102);
    for (int round = 0; round < 30; ++round) {
        auto tg = tsupport::random_temporal(rng, 5, 10, 6);
        auto ex = static_expansion(tg);
        int total = 0;
        for (Label r = tg.lambda_min(); r <= tg.lambda_max(); ++r) {
            int mult = tg.graph().is_directed() ? 1 : 2;
            total += instance_at(tg, r).edge_count() * mult;
        }
        CHECK(ex.diagonal_arc_count() == total);
        CHECK(ex.is_acyclic());
        for (const auto& arc : ex.arcs()) CHECK(arc.to_level == arc.from_level + 1);
    }
}

TEST_CASE("journey recognition") {
    Labeling lab;
    lab.add_label(Edge{0, 1}, 1);
    lab.add_label(Edge{1, 2}, 2);
    lab.add_label(Edge{2, 0}, 3);
    auto tg = build_temporal_graph(directed_ring(3), lab);

    CHECK(is_journey(tg, {{0, 1, 1}, {1, 2, 2}}));
    CHECK(is_journey(tg, {}));
    CHECK_FALSE(is_journey(tg, {{0, 1, 2}, {1, 2, 2}}));  // not strictly increasing
    CHECK_FALSE(is_journey(tg, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}})); // revisits 0
    CHECK_FALSE(is_journey(tg, {{0, 1, 1}, {2, 0, 3}}));  // not contiguous
    CHECK_FALSE(is_journey(tg, {{0, 1, 7}}));             // label not available
    CHECK_FALSE(is_journey(tg, {{1, 0, 1}}));             // arc direction missing
}

TEST_CASE("journey recognition agrees with an independent checker") {
    std::mt19937 rng(7103);
    for (int round = 0; round < 200; ++round) {
        auto tg = tsupport::random_temporal(rng, 5, 10, 5);
        auto tes = tg.time_edges();
        // random short sequences, valid or not
        std::vector<TimeEdge> seq;
        int len = tsupport::pick(rng, 0, 4);
        for (int i = 0; i < len && !tes.empty(); ++i)
            seq.push_back(tes[static_cast<size_t>(
                tsupport::pick(rng, 0, static_cast<int>(tes.size()) - 1))]);
        CHECK(is_journey(tg, seq) == check_journey(tg, seq));
    }
}

TEST_CASE("journey accessors") {
    Journey j(std::vector<TimeEdge>{{0, 1, 2}, {1, 3, 5}});
    CHECK(j.hops() == 2);
    CHECK(j.departure() == 2);
    CHECK(j.arrival() == 5);
    CHECK(j.duration() == 4);
    CHECK(j.nodes() == std::vector<NodeId>{0, 1, 3});
    CHECK(to_string(j) == "(0,1)@2 (1,3)@5");
    CHECK(Journey{}.is_empty());
    CHECK(Journey{}.duration() == 0);

    auto g = StaticGraph::undirected(4, {{0, 1}, {1, 3}});
    g.set_weights({{Edge{0, 1}, 1.5}, {Edge{1, 3}, 2.0}});
    CHECK(j.total_weight(g) == doctest::Approx(3.5));
}
