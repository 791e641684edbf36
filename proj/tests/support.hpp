#pragma once

// Shared generators and brute-force oracles for the test suites. Everything
// here is deliberately naive: oracles re-derive answers straight from the
// definitions so the library's algorithms are checked against independent
// code paths.

#include "tgraph/core.hpp"
#include "tgraph/menger.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace tsupport {

using namespace tgraph;

// ---------------------------------------------------------------- generators

inline int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline StaticGraph random_digraph(std::mt19937& rng, int n, double p) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
            if (u != v && chance(rng, p)) edges.push_back({u, v});
    return StaticGraph::directed(n, edges);
}

inline StaticGraph random_undirected(std::mt19937& rng, int n, double p) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (chance(rng, p)) edges.push_back({u, v});
    return StaticGraph::undirected(n, edges);
}

inline StaticGraph random_dag(std::mt19937& rng, int n, double p) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (chance(rng, p)) edges.push_back({u, v});
    return StaticGraph::directed(n, edges);
}

/// Uniform random labeled tree: node i > 0 hangs below a random earlier node.
inline StaticGraph random_tree(std::mt19937& rng, int n) {
    std::vector<Edge> edges;
    for (NodeId i = 1; i < n; ++i) edges.push_back({pick(rng, 0, i - 1), i});
    return StaticGraph::undirected(n, edges);
}

inline StaticGraph random_weak_digraph(std::mt19937& rng, int n, double p) {
    for (;;) {
        auto g = random_digraph(rng, n, p);
        if (g.edge_count() > 0 && g.is_weakly_connected()) return g;
    }
}

/// Random labeling over the graph's edges: every edge gets 0..max_per labels
/// drawn from 1..label_range.
inline Labeling random_labeling(std::mt19937& rng, const StaticGraph& g, int max_per,
                                int label_range) {
    Labeling lab;
    for (const auto& e : g.edges()) {
        int count = pick(rng, 0, max_per);
        for (int i = 0; i < count; ++i) lab.add_label(e, pick(rng, 1, label_range));
    }
    return lab;
}

/// Random temporal graph with a bounded time-edge total; labelings are
/// redrawn until nonempty.
inline TemporalGraph random_temporal(std::mt19937& rng, int max_n, int max_time_edges,
                                     int label_range, bool allow_undirected = true) {
    for (;;) {
        int n = pick(rng, 2, max_n);
        bool undirected = allow_undirected && chance(rng, 0.4);
        StaticGraph g = undirected ? random_undirected(rng, n, 0.5)
                                   : random_digraph(rng, n, 0.4);
        if (g.edge_count() == 0) continue;
        Labeling lab = random_labeling(rng, g, 3, label_range);
        while (lab.size() > max_time_edges) {
            // Trim overflow labels deterministically.
            auto all = lab.all();
            for (auto it = all.rbegin(); it != all.rend() && lab.size() > max_time_edges; ++it)
                if (!it->second.empty()) lab.remove_label(it->first, it->second.back());
        }
        if (lab.empty()) continue;
        return build_temporal_graph(g, lab);
    }
}

// -------------------------------------------------------- journey brute force

/// Every (s,v)-journey by plain recursion over the time-edge list.
inline std::vector<std::vector<TimeEdge>> brute_journeys(const TemporalGraph& tg, NodeId s,
                                                         NodeId v) {
    auto tes = tg.time_edges();
    std::vector<std::vector<TimeEdge>> found;
    std::vector<TimeEdge> cur;
    std::set<NodeId> visited{s};
    auto rec = [&](auto&& self, NodeId at, Label after) -> void {
        if (at == v && !cur.empty()) found.push_back(cur);
        for (const auto& te : tes) {
            if (te.from != at || te.label <= after || visited.count(te.to)) continue;
            visited.insert(te.to);
            cur.push_back(te);
            self(self, te.to, te.label);
            cur.pop_back();
            visited.erase(te.to);
        }
    };
    if (s != v) rec(rec, s, 0);
    return found;
}

// ------------------------------------------------------------ menger oracles

/// Disjointness per the definitions, re-derived: shared departures, shared
/// arrivals, shared time-edges, or overlapping stays at an inner node.
inline bool oracle_disjoint(const TemporalGraph& tg, const std::vector<TimeEdge>& a,
                            const std::vector<TimeEdge>& b, DisjointnessMode mode, NodeId s,
                            NodeId v) {
    if (a == b) return false;
    if (mode == DisjointnessMode::TimeNodeDisjoint) {
        // stay at inner node = [arrival, next departure - 1]
        auto stays = [&](const std::vector<TimeEdge>& j) {
            std::set<std::pair<NodeId, Label>> occ;
            for (size_t i = 0; i + 1 < j.size(); ++i)
                for (Label t = j[i].label; t < j[i + 1].label; ++t)
                    if (j[i].to != s && j[i].to != v) occ.emplace(j[i].to, t);
            return occ;
        };
        auto oa = stays(a);
        for (const auto& key : stays(b))
            if (oa.count(key)) return false;
        return true;
    }
    auto mark = [&](const TimeEdge& te) -> std::pair<std::pair<NodeId, NodeId>, Label> {
        switch (mode) {
            case DisjointnessMode::OutDisjoint: return {{te.from, -1}, te.label};
            case DisjointnessMode::InDisjoint: return {{te.to, -1}, te.label};
            default: {
                Edge e = tg.graph().edge_key(te.from, te.to);
                return {{e.u, e.v}, te.label};
            }
        }
    };
    std::set<std::pair<std::pair<NodeId, NodeId>, Label>> used;
    for (const auto& te : a) used.insert(mark(te));
    for (const auto& te : b)
        if (used.count(mark(te))) return false;
    return true;
}

/// Exhaustive maximum pairwise-disjoint subset of the listed journeys.
inline int oracle_max_disjoint(const TemporalGraph& tg, NodeId s, NodeId v,
                               DisjointnessMode mode) {
    auto js = brute_journeys(tg, s, v);
    int best = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, size_t i) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (size_t j = i; j < js.size(); ++j) {
            bool ok = true;
            for (int c : chosen)
                ok = ok && oracle_disjoint(tg, js[static_cast<size_t>(c)], js[j], mode, s, v);
            if (!ok) continue;
            chosen.push_back(static_cast<int>(j));
            self(self, j + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

struct OracleUnit {
    NodeId node = -1;
    Label time = 0;
    Edge edge{-1, -1};
    bool is_edge = false;
};

inline std::vector<OracleUnit> oracle_units(const TemporalGraph& tg, NodeId s, NodeId v,
                                            DisjointnessMode mode) {
    std::set<std::pair<std::pair<NodeId, NodeId>, Label>> seen;
    std::vector<OracleUnit> units;
    if (mode == DisjointnessMode::TimeNodeDisjoint) {
        for (NodeId u = 0; u < tg.graph().node_count(); ++u)
            if (u != s && u != v)
                for (Label t = tg.lambda_min(); t <= tg.lambda_max(); ++t)
                    units.push_back({u, t, {}, false});
        return units;
    }
    for (const auto& te : tg.time_edges()) {
        OracleUnit unit;
        unit.time = te.label;
        if (mode == DisjointnessMode::TimeEdgeDisjoint) {
            unit.edge = tg.graph().edge_key(te.from, te.to);
            unit.is_edge = true;
            if (!seen.insert({{unit.edge.u, unit.edge.v}, te.label}).second) continue;
        } else {
            unit.node = mode == DisjointnessMode::OutDisjoint ? te.from : te.to;
            if (!seen.insert({{unit.node, -1}, te.label}).second) continue;
        }
        units.push_back(unit);
    }
    return units;
}

inline bool oracle_blocks(const TemporalGraph& tg, const std::vector<TimeEdge>& j,
                          const OracleUnit& u, DisjointnessMode mode, NodeId s, NodeId v) {
    switch (mode) {
        case DisjointnessMode::OutDisjoint:
            for (const auto& te : j)
                if (te.from == u.node && te.label == u.time) return true;
            return false;
        case DisjointnessMode::InDisjoint:
            for (const auto& te : j)
                if (te.to == u.node && te.label == u.time) return true;
            return false;
        case DisjointnessMode::TimeEdgeDisjoint:
            for (const auto& te : j)
                if (tg.graph().edge_key(te.from, te.to) == u.edge && te.label == u.time)
                    return true;
            return false;
        case DisjointnessMode::TimeNodeDisjoint:
            for (size_t i = 0; i + 1 < j.size(); ++i)
                if (j[i].to == u.node && j[i].to != s && j[i].to != v &&
                    j[i].label <= u.time && u.time < j[i + 1].label)
                    return true;
            return false;
    }
    return false;
}

/// Smallest number of unit removals leaving no journey: subsets by size.
/// `cap` bounds the search (the expected answer is known when calling).
inline int oracle_min_separator(const TemporalGraph& tg, NodeId s, NodeId v,
                                DisjointnessMode mode, int cap) {
    auto js = brute_journeys(tg, s, v);
    if (js.empty()) return 0;
    auto units = oracle_units(tg, s, v, mode);
    int m = static_cast<int>(units.size());
    std::vector<int> pick;
    auto covered = [&]() {
        for (const auto& j : js) {
            bool blocked = false;
            for (int ui : pick)
                blocked = blocked || oracle_blocks(tg, j, units[static_cast<size_t>(ui)], mode, s, v);
            if (!blocked) return false;
        }
        return true;
    };
    for (int size = 1; size <= std::min(cap, m); ++size) {
        pick.assign(static_cast<size_t>(size), 0);
        auto rec = [&](auto&& self, int from, int depth) -> bool {
            if (depth == size) return covered();
            for (int i = from; i < m; ++i) {
                pick[static_cast<size_t>(depth)] = i;
                if (self(self, i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return size;
    }
    return cap + 1;
}

} // namespace tsupport
