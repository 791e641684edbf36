// Acceptance suite: battery of end-to-end checks against exact expected
// values, one printed line per criterion. Run time budgets are enforced.

#include "support.hpp"
#include "tgraph/gadgets.hpp"
#include "tgraph/io.hpp"
#include "tgraph/journeys.hpp"
#include "tgraph/labelings.hpp"
#include "tgraph/menger.hpp"
#include "tgraph/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace tgraph;
using tsupport::chance;
using tsupport::pick;

namespace {

std::string where(const std::string& what, int round) {
    return what + " (round " + std::to_string(round) + ")";
}

// ---------------------------------------------------------------- criterion 1

std::string ring_temporality() {
    for (int n : {3, 4}) {
        auto ring = directed_ring(n);
        int t = oracle_temporality(ring, PathProperty::AllPaths);
        if (t != 2) return "ring " + std::to_string(n) + " temporality " + std::to_string(t);
        auto tg = build_temporal_graph(ring, label_ring_all_paths(ring));
        if (!preserves_all_paths(tg))
            return "ring " + std::to_string(n) + " labeling loses a path";
    }
    return "";
}

// ---------------------------------------------------------------- criterion 2

std::string dag_single_label() {
    std::mt19937 rng(9102);
    for (int round = 0; round < 50; ++round) {
        StaticGraph g = tsupport::random_dag(rng, pick(rng, 2, 8), 0.5);
        if (g.edge_count() == 0) {
            --round;
            continue;
        }
        auto lab = label_dag_all_paths(g);
        if (lab.max_labels_per_edge() != 1) return where("dag labeling uses > 1 label", round);
        if (!preserves_all_paths(build_temporal_graph(g, lab)))
            return where("dag labeling loses a path", round);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 3

std::string ring_tradeoff_sandwich() {
    auto ring4 = directed_ring(4);
    int tight = oracle_temporality(ring4, PathProperty::AllPaths, 3);
    if (tight != 3) return "ring 4 under age 3 gave " + std::to_string(tight);
    int loose = oracle_temporality(ring4, PathProperty::AllPaths, 6);
    if (loose != 2) return "ring 4 under age 6 gave " + std::to_string(loose);

    for (int n : {4, 5}) {
        auto ring = directed_ring(n);
        for (int k = 1; k <= n - 1; ++k) {
            int age = (n - 1) + k;
            int lower = (n - 1) / (k + 1) + 1;
            int upper = (n + k) / (k + 1) + 1;
            int opt = oracle_temporality(ring, PathProperty::AllPaths, age);
            if (opt < lower || opt > upper)
                return "ring " + std::to_string(n) + " k " + std::to_string(k) + " optimum " +
                       std::to_string(opt) + " outside [" + std::to_string(lower) + "," +
                       std::to_string(upper) + "]";
            auto lab = label_ring_tradeoff(ring, k);
            if (lab.max_labels_per_edge() > upper)
                return "tradeoff labeling exceeds the upper bound";
            if (!lab.age() || *lab.age() > age) return "tradeoff labeling exceeds the age";
            if (!preserves_all_paths(build_temporal_graph(ring, lab)))
                return "tradeoff labeling loses a path";
        }
    }
    return "";
}

// ---------------------------------------------------------------- criterion 4

std::string reach_two_labels() {
    std::mt19937 rng(9104);
    for (int round = 0; round < 100; ++round) {
        StaticGraph g = tsupport::random_digraph(rng, pick(rng, 2, 10), 0.1 + 0.05 * (round % 10));
        if (g.edge_count() == 0) {
            --round;
            continue;
        }
        auto lab = label_reach(g);
        if (lab.max_labels_per_edge() > 2) return where("reach labeling uses > 2 labels", round);
        if (!preserves_reach(build_temporal_graph(g, lab)))
            return where("reach labeling loses a pair", round);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 5

std::string tree_labeling() {
    std::mt19937 rng(9105);
    for (int round = 0; round < 50; ++round) {
        StaticGraph g = tsupport::random_tree(rng, pick(rng, 2, 9));
        auto lab = label_tree_all_paths(g);
        if (lab.max_labels_per_edge() > 2) return where("tree labeling uses > 2 labels", round);
        if (!lab.max_label() || *lab.max_label() > diameter(g))
            return where("tree labeling exceeds the diameter", round);
        if (!preserves_all_paths(build_temporal_graph(g, lab)))
            return where("tree labeling loses a path", round);
    }
    return "";
}

// ---------------------------------------------------------------- criterion 6

const DisjointnessMode kModes[4] = {
    DisjointnessMode::OutDisjoint,
    DisjointnessMode::InDisjoint,
    DisjointnessMode::TimeNodeDisjoint,
    DisjointnessMode::TimeEdgeDisjoint,
};

struct MengerActivity {
    int multi = 0;     // pairs admitting >= 2 disjoint journeys in some mode
    int adjacent = 0;  // stay-separator refusals exercised
    int blocked = 0;   // nonempty separators verified destructive
};

std::string menger_pair(const TemporalGraph& tg, NodeId s, NodeId v, int round,
                        MengerActivity& act) {
    bool adjacent = false;
    for (const auto& te : tg.time_edges()) adjacent = adjacent || (te.from == s && te.to == v);
    for (auto mode : kModes) {
        auto best = max_disjoint_journeys(tg, s, v, mode);
        if (best.count >= 2) ++act.multi;
        if (static_cast<int>(best.witnesses.size()) != best.count)
            return where("witness count mismatch", round);
        for (const auto& j : best.witnesses) {
            if (j.is_empty() || !is_journey(tg, j.steps()) || j.steps().front().from != s ||
                j.steps().back().to != v)
                return where("invalid witness journey", round);
        }
        if (!pairwise_disjoint(tg, best.witnesses, mode, s, v))
            return where("witnesses are not disjoint", round);

        if (mode == DisjointnessMode::TimeNodeDisjoint && adjacent) {
            try {
                min_separator(tg, s, v, mode);
                return where("adjacent terminals must refuse a stay separator", round);
            } catch (const std::invalid_argument&) {
                ++act.adjacent;
            }
            continue;
        }
        auto sep = min_separator(tg, s, v, mode);
        if (sep.size() != best.count)
            return where("separator size " + std::to_string(sep.size()) + " != maximum " +
                             std::to_string(best.count),
                         round);
        if (!separator_disconnects(tg, s, v, sep))
            return where("separator leaves a journey alive", round);
        if (sep.size() > 0) ++act.blocked;
    }
    return "";
}

std::string menger_equality() {
    std::mt19937 rng(9106);
    MengerActivity act;
    for (int round = 0; round < 2000; ++round) {
        auto tg = tsupport::random_temporal(rng, 4, 6, 6);
        int n = tg.graph().node_count();
        for (NodeId s = 0; s < n; ++s)
            for (NodeId v = 0; v < n; ++v)
                if (s != v)
                    if (auto msg = menger_pair(tg, s, v, round, act); !msg.empty()) return msg;
    }
    for (int round = 0; round < 500; ++round) {
        auto tg = tsupport::random_temporal(rng, 6, 8, 7);
        int n = tg.graph().node_count();
        for (NodeId s = 0; s < n; ++s)
            for (NodeId v = 0; v < n; ++v)
                if (s != v)
                    if (auto msg = menger_pair(tg, s, v, 2000 + round, act); !msg.empty())
                        return msg;
    }
    // the family must actually exercise the interesting shapes
    if (act.multi < 200 || act.adjacent < 100 || act.blocked < 500)
        return "family too thin: multi " + std::to_string(act.multi) + ", adjacent " +
               std::to_string(act.adjacent) + ", blocked " + std::to_string(act.blocked);
    return "";
}

// ---------------------------------------------------------------- criterion 7

std::string tedge_separator_exceeds_out() {
    std::mt19937 rng(9107);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        auto tg = tsupport::random_temporal(rng, 5, 8, 6);
        int n = tg.graph().node_count();
        for (NodeId s = 0; s < n; ++s)
            for (NodeId v = 0; v < n; ++v) {
                if (s == v) continue;
                int out = max_disjoint_journeys(tg, s, v, DisjointnessMode::OutDisjoint).count;
                if (out == 0) continue;
                auto sep = min_separator(tg, s, v, DisjointnessMode::TimeEdgeDisjoint);
                if (sep.size() > out) return "";
            }
    }
    return "no instance found where the time-edge separator beats the departure maximum";
}

// ---------------------------------------------------------------- criterion 8

std::string journeys_match_enumeration() {
    std::mt19937 rng(9108);
    for (int round = 0; round < 500; ++round) {
        auto tg = tsupport::random_temporal(rng, 6, 12, 8);
        int n = tg.graph().node_count();
        NodeId s = pick(rng, 0, n - 1);
        Label t0 = pick(rng, tg.lambda_min(), tg.lambda_max());
        auto table = foremost_journeys(tg, s, t0);
        for (NodeId v = 0; v < n; ++v) {
            if (v == s) continue;
            std::optional<Label> best;
            for (const auto& j : tsupport::brute_journeys(tg, s, v)) {
                if (j.front().label < t0) continue;
                Label a = j.back().label;
                if (!best || a < *best) best = a;
            }
            if (table.arrival[static_cast<size_t>(v)] != best)
                return where("foremost arrival mismatch", round);
            if (best) {
                auto j = journey_to(tg, table, v);
                if (!j || !is_journey(tg, j->steps()) || j->arrival() != *best ||
                    j->departure() < t0)
                    return where("foremost journey mismatch", round);
            }
        }
    }
    for (int round = 0; round < 250; ++round) {
        int n = pick(rng, 2, 6);
        StaticGraph g = tsupport::random_undirected(rng, n, 0.5);
        if (g.edge_count() == 0) {
            --round;
            continue;
        }
        std::map<Edge, double> w;
        for (const auto& e : g.edges()) w[e] = pick(rng, 1, 9);
        g.set_weights(w);
        Labeling lab = tsupport::random_labeling(rng, g, 3, 8);
        if (lab.empty()) {
            --round;
            continue;
        }
        auto tg = build_temporal_graph(g, lab);
        NodeId s = pick(rng, 0, n - 1);
        NodeId v = pick(rng, 0, n - 2);
        if (v >= s) ++v;
        std::optional<double> best;
        for (const auto& j : tsupport::brute_journeys(tg, s, v)) {
            double total = 0;
            for (const auto& te : j) total += g.weight(g.edge_key(te.from, te.to));
            if (!best || total < *best) best = total;
        }
        auto j = shortest_weighted_journey(tg, s, v);
        if (j.has_value() != best.has_value())
            return where("shortest reachability mismatch", round);
        if (j) {
            if (!is_journey(tg, j->steps())) return where("shortest journey invalid", round);
            if (std::abs(j->total_weight(g) - *best) > 1e-9)
                return where("shortest weight mismatch", round);
        }
    }
    return "";
}

// ---------------------------------------------------------------- criterion 9

std::string kernels_floor_temporality() {
    auto clique = clique_kernel(4);
    if (!is_edge_kernel(clique.graph, clique.kernel)) return "matching in the 4-clique rejected";
    auto grid = grid_kernel(2);
    if (!is_edge_kernel(grid.graph, grid.kernel, 4, 40)) return "grid kernel rejected";

    struct Floor {
        StaticGraph g;
        std::vector<Edge> kernel;
        std::optional<int> age;
    };
    std::vector<Floor> floors;
    floors.push_back({directed_line(3), {Edge{0, 1}}, std::nullopt});
    floors.push_back({directed_ring(4), {Edge{1, 2}, Edge{3, 0}}, std::nullopt});
    floors.push_back({directed_ring(5), {Edge{1, 2}, Edge{3, 4}}, 8});
    for (size_t i = 0; i < floors.size(); ++i) {
        const auto& f = floors[i];
        if (!is_edge_kernel(f.g, f.kernel)) return "floor kernel " + std::to_string(i) + " rejected";
        int t = oracle_temporality(f.g, PathProperty::AllPaths, f.age);
        if (t < static_cast<int>(f.kernel.size()))
            return "temporality " + std::to_string(t) + " below kernel size on graph " +
                   std::to_string(i);
    }

    auto triple = clique_kernel(6);
    if (!is_edge_kernel(triple.graph, triple.kernel)) return "matching in the 6-clique rejected";
    std::mt19937 rng(9109);
    for (int round = 0; round < 100; ++round) {
        int k = (round % 2 == 0) ? 2 : 3;
        std::vector<std::vector<Label>> sets(static_cast<size_t>(k));
        for (auto& set : sets) {
            int size = pick(rng, 1, k - 1);
            std::set<Label> vals;
            while (static_cast<int>(vals.size()) < size) vals.insert(pick(rng, 1, 9));
            set.assign(vals.begin(), vals.end());
        }
        auto pi = adversarial_permutation(sets);
        if (permutation_realizable(sets, pi))
            return where("adversarial order realizable with too few labels", round);
    }
    return "";
}

// --------------------------------------------------------------- criterion 10

std::string bfs_reach_cost() {
    std::mt19937 rng(9110);
    int oracle_checked = 0;
    for (int round = 0; round < 100; ++round) {
        int n = pick(rng, 2, 8);
        StaticGraph g = tsupport::random_weak_digraph(rng, n, 0.15 + 0.05 * (round % 6));
        auto res = label_reach_diameter_bfs(g);
        if (res.per_tree_cost != reachability_count(g))
            return where("per-tree cost differs from the reachable pair count", round);
        if (res.max_label > diameter(g)) return where("labels exceed the diameter", round);
        if (!preserves_reach(build_temporal_graph(g, res.labeling)))
            return where("bfs labeling loses a pair", round);
        if (g.edge_count() <= 5) {
            int opt = oracle_temporal_cost(g, PathProperty::Reach);
            if (opt < g.node_count() - 1)
                return where("optimum cost below node count - 1", round);
            ++oracle_checked;
        }
    }
    while (oracle_checked < 10) {
        int n = pick(rng, 3, 5);
        StaticGraph g = tsupport::random_weak_digraph(rng, n, 0.12);
        if (g.edge_count() > 5) continue;
        int opt = oracle_temporal_cost(g, PathProperty::Reach);
        if (opt < g.node_count() - 1) return "optimum cost below node count - 1 (extra round)";
        ++oracle_checked;
    }
    return "";
}

// --------------------------------------------------------------- criterion 11

XorFormula random_formula(std::mt19937& rng, int max_vars, int max_clauses) {
    int n = pick(rng, 2, max_vars);
    int m = pick(rng, 1, max_clauses);
    std::vector<XorClause> clauses;
    for (int c = 0; c < m; ++c) {
        int a = pick(rng, 0, n - 1);
        int b = pick(rng, 0, n - 2);
        if (b >= a) ++b;
        clauses.push_back({{a, chance(rng, 0.5)}, {b, chance(rng, 0.5)}});
    }
    return XorFormula(n, std::move(clauses));
}

std::string reduction_identity() {
    std::mt19937 rng(9111);
    for (int round = 0; round < 50; ++round) {
        auto f = random_formula(rng, 6, 8);
        auto reduced = reduce_to_occurrence3(f);
        int base = max_xor_brute(f).best;
        int shifted = max_xor_brute(reduced, 25).best;
        if (shifted != base + 2 * f.num_clauses())
            return where("reduced optimum is " + std::to_string(shifted) + ", expected " +
                             std::to_string(base + 2 * f.num_clauses()),
                         round);
    }
    return "";
}

// --------------------------------------------------------------- criterion 12

std::string gadget_encoding() {
    std::mt19937 rng(9112);
    for (int round = 0; round < 20; ++round) {
        XorFormula f = normalize(random_formula(rng, 4, 4));
        if (f.max_variable_occurrence() > 3) {
            --round;
            continue;
        }
        auto gg = build_gadget_graph(f);
        if (gg.diameter() != 9) return where("gadget diameter differs from 9", round);
        if (gg.max_directed_cycle_length() != 2)
            return where("gadget cycle length differs from 2", round);
        int n = f.num_vars(), m = f.num_clauses();
        for (unsigned bits = 0; bits < (1u << n); ++bits) {
            std::vector<char> a(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) a[static_cast<size_t>(v)] = (bits >> v) & 1u;
            int k = xor_satisfied_count(f, a);
            auto lab = labeling_from_assignment(gg, a);
            if (lab.size() != 39 * n - 4 * m - 2 * k)
                return where("labeling cost differs from 39n-4m-2k", round);
            if (!preserves_reach_within_age(build_temporal_graph(gg.graph(), lab), 9))
                return where("assignment labeling loses reachability", round);
            auto extracted = assignment_from_labeling(gg, lab);
            int recovered = xor_satisfied_count(f, extracted.assignment);
            if (2 * recovered < 39 * n - 4 * m - lab.size())
                return where("extraction violates the satisfaction bound", round);
        }
    }
    return "";
}

// -------------------------------------------------------------------- driver

struct Criterion {
    int id;
    double budget_seconds;
    std::function<std::string()> body;
};

} // namespace

int main() {
    std::vector<Criterion> table = {
        {1, 10, ring_temporality},
        {2, 10, dag_single_label},
        {3, 300, ring_tradeoff_sandwich},
        {4, 30, reach_two_labels},
        {5, 30, tree_labeling},
        {6, 300, menger_equality},
        {7, 60, tedge_separator_exceeds_out},
        {8, 60, journeys_match_enumeration},
        {9, 300, kernels_floor_temporality},
        {10, 300, bfs_reach_cost},
        {11, 60, reduction_identity},
        {12, 300, gadget_encoding},
    };

    bool all_ok = true;
    for (const auto& c : table) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (detail.empty() && secs > c.budget_seconds)
            detail = "over the time budget of " + std::to_string(c.budget_seconds) + "s";
        bool ok = detail.empty();
        all_ok = all_ok && ok;
        char line[64];
        std::snprintf(line, sizeof(line), "criterion %d %s (%.1fs)", c.id,
                      ok ? "pass" : "fail", secs);
        std::cout << line;
        if (!ok) std::cout << " - " << detail;
        std::cout << std::endl;
    }
    return all_ok ? 0 : 1;
}
