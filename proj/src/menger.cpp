#include "tgraph/menger.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace tgraph {

namespace {

// ------------------------------------------------------------ Dinic solver

struct ResidualEdge {
    int to;
    int cap;
    int rev;      // index of the reverse edge in adj[to]
    int arc = -1; // source FlowNetwork arc, -1 for reverse edges
};

struct Solved {
    int value = 0;
    std::vector<int> arc_flow; // parallel to net.arcs
};

Solved solve_max_flow(const FlowNetwork& net, const std::vector<int>* caps) {
    std::vector<std::vector<ResidualEdge>> adj(static_cast<size_t>(net.node_count));
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        const auto& a = net.arcs[i];
        int cap = caps ? (*caps)[i] : a.capacity;
        adj[static_cast<size_t>(a.from)].push_back(
            {a.to, cap, static_cast<int>(adj[static_cast<size_t>(a.to)].size()),
             static_cast<int>(i)});
        adj[static_cast<size_t>(a.to)].push_back(
            {a.from, 0, static_cast<int>(adj[static_cast<size_t>(a.from)].size()) - 1, -1});
    }
    std::vector<int> level(static_cast<size_t>(net.node_count));
    std::vector<size_t> iter(static_cast<size_t>(net.node_count));
    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[static_cast<size_t>(net.source)] = 0;
        q.push(net.source);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (const auto& e : adj[static_cast<size_t>(x)]) {
                if (e.cap > 0 && level[static_cast<size_t>(e.to)] < 0) {
                    level[static_cast<size_t>(e.to)] = level[static_cast<size_t>(x)] + 1;
                    q.push(e.to);
                }
            }
        }
        return level[static_cast<size_t>(net.sink)] >= 0;
    };
    auto dfs = [&](auto&& self, int x, int pushed) -> int {
        if (x == net.sink) return pushed;
        for (auto& i = iter[static_cast<size_t>(x)]; i < adj[static_cast<size_t>(x)].size(); ++i) {
            auto& e = adj[static_cast<size_t>(x)][i];
            if (e.cap <= 0 || level[static_cast<size_t>(e.to)] != level[static_cast<size_t>(x)] + 1)
                continue;
            int got = self(self, e.to, std::min(pushed, e.cap));
            if (got > 0) {
                e.cap -= got;
                adj[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].cap += got;
                return got;
            }
        }
        return 0;
    };
    Solved out;
    if (net.source == net.sink) return out;
    while (bfs()) {
        std::fill(iter.begin(), iter.end(), 0);
        while (int got = dfs(dfs, net.source, std::numeric_limits<int>::max())) out.value += got;
    }
    out.arc_flow.assign(net.arcs.size(), 0);
    for (int x = 0; x < net.node_count; ++x)
        for (const auto& e : adj[static_cast<size_t>(x)])
            if (e.arc >= 0) {
                int orig = caps ? (*caps)[static_cast<size_t>(e.arc)]
                                : net.arcs[static_cast<size_t>(e.arc)].capacity;
                out.arc_flow[static_cast<size_t>(e.arc)] = orig - e.cap;
            }
    return out;
}

// --------------------------------------------------------- walk extraction

/// One flow unit's diagonal steps per path, walking flow-carrying arcs from
/// the source; at each node moves are preferred to waiting, lowest label and
/// head first, which makes witnesses deterministic.
std::vector<std::vector<TimeEdge>> decompose_flow(const FlowNetwork& net, Solved& solved) {
    std::vector<std::vector<int>> out(static_cast<size_t>(net.node_count));
    for (size_t i = 0; i < net.arcs.size(); ++i)
        out[static_cast<size_t>(net.arcs[i].from)].push_back(static_cast<int>(i));
    auto key = [&](int i) {
        const auto& a = net.arcs[static_cast<size_t>(i)];
        return std::tuple(a.kind == FlowNetwork::ArcKind::Vertical ? 1 : 0, a.time, a.to, i);
    };
    for (auto& list : out)
        std::sort(list.begin(), list.end(), [&](int a, int b) { return key(a) < key(b); });

    std::vector<std::vector<TimeEdge>> walks;
    for (int unit = 0; unit < solved.value; ++unit) {
        std::vector<TimeEdge> walk;
        int x = net.source;
        while (x != net.sink) {
            int chosen = -1;
            for (int i : out[static_cast<size_t>(x)])
                if (solved.arc_flow[static_cast<size_t>(i)] > 0) {
                    chosen = i;
                    break;
                }
            if (chosen < 0) throw std::logic_error("flow decomposition ran out of arcs");
            --solved.arc_flow[static_cast<size_t>(chosen)];
            const auto& a = net.arcs[static_cast<size_t>(chosen)];
            if (a.kind == FlowNetwork::ArcKind::Diagonal) walk.push_back(a.edge);
            x = a.to;
        }
        walks.push_back(std::move(walk));
    }
    return walks;
}

/// Trim the walk at its first arrival at v, then erase loops keeping the
/// first arrival at every node. Labels stay strictly increasing because the
/// result is a subsequence of the walk.
Journey walk_to_journey(const std::vector<TimeEdge>& walk, NodeId s, NodeId v) {
    std::vector<TimeEdge> path;
    for (const auto& te : walk) {
        if (te.to == s) {
            path.clear();
            continue;
        }
        int seen = -1;
        for (size_t i = 0; i < path.size(); ++i)
            if (path[i].to == te.to) {
                seen = static_cast<int>(i);
                break;
            }
        if (seen >= 0) {
            path.resize(static_cast<size_t>(seen) + 1);
            continue;
        }
        path.push_back(te);
        if (te.to == v) break;
    }
    return Journey(std::move(path));
}

// ------------------------------------------------------------- mode pieces

std::pair<Edge, Label> canonical_time_edge(const TemporalGraph& tg, const TimeEdge& te) {
    return {tg.graph().edge_key(te.from, te.to), te.label};
}

/// Occupied levels of each inner node: from arrival until just before the
/// next departure. The journey's own endpoints occupy nothing.
std::map<NodeId, std::pair<Label, Label>> occupancy(const Journey& j) {
    std::map<NodeId, std::pair<Label, Label>> occ;
    const auto& st = j.steps();
    for (size_t i = 0; i + 1 < st.size(); ++i)
        occ[st[i].to] = {st[i].label, st[i + 1].label - 1};
    return occ;
}

bool unit_hits(const TemporalGraph& tg, const Journey& j, DisjointnessMode mode,
               const NodeTime& nt, const TimeEdge& te_unit, NodeId s, NodeId v) {
    switch (mode) {
        case DisjointnessMode::OutDisjoint:
            for (const auto& te : j.steps())
                if (te.from == nt.node && te.label == nt.time) return true;
            return false;
        case DisjointnessMode::InDisjoint:
            for (const auto& te : j.steps())
                if (te.to == nt.node && te.label == nt.time) return true;
            return false;
        case DisjointnessMode::TimeEdgeDisjoint: {
            auto unit = canonical_time_edge(tg, te_unit);
            for (const auto& te : j.steps())
                if (canonical_time_edge(tg, te) == unit) return true;
            return false;
        }
        case DisjointnessMode::TimeNodeDisjoint: {
            if (nt.node == s || nt.node == v) return false;
            auto occ = occupancy(j);
            auto it = occ.find(nt.node);
            return it != occ.end() && it->second.first <= nt.time && nt.time <= it->second.second;
        }
    }
    return false;
}

struct ExactBest {
    int count = 0;
    std::vector<Journey> witnesses;
};

/// Maximum pairwise-disjoint subset by branch and bound over the journey
/// list (include-first order, size bound pruning).
ExactBest exact_max_disjoint(const TemporalGraph& tg, const std::vector<Journey>& js,
                             DisjointnessMode mode, NodeId s, NodeId v) {
    int n = static_cast<int>(js.size());
    std::vector<std::vector<char>> ok(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            ok[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                ok[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    journeys_disjoint(tg, js[static_cast<size_t>(i)], js[static_cast<size_t>(j)],
                                      mode, s, v);
    ExactBest best;
    std::vector<int> current;
    auto grow = [&](auto&& self, const std::vector<int>& cands, size_t from) -> void {
        if (static_cast<int>(current.size()) > best.count) {
            best.count = static_cast<int>(current.size());
            best.witnesses.clear();
            for (int i : current) best.witnesses.push_back(js[static_cast<size_t>(i)]);
        }
        for (size_t ci = from; ci < cands.size(); ++ci) {
            if (static_cast<int>(current.size() + cands.size() - ci) <= best.count) return;
            int c = cands[ci];
            std::vector<int> next;
            for (size_t cj = ci + 1; cj < cands.size(); ++cj)
                if (ok[static_cast<size_t>(c)][static_cast<size_t>(cands[cj])])
                    next.push_back(cands[cj]);
            current.push_back(c);
            self(self, next, 0);
            current.pop_back();
        }
    };
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    grow(grow, all, 0);
    return best;
}

bool flow_value_is_exact(const TemporalGraph& tg, DisjointnessMode mode) {
    // Loop-erasing a walk only shrinks its departure, arrival, and time-edge
    // sets, so those modes realize the flow value exactly. Occupancy can
    // grow under erasure, and an undirected time-edge has two diagonals, so
    // there the flow only bounds from above.
    switch (mode) {
        case DisjointnessMode::OutDisjoint:
        case DisjointnessMode::InDisjoint:
            return true;
        case DisjointnessMode::TimeEdgeDisjoint:
            return tg.graph().is_directed();
        case DisjointnessMode::TimeNodeDisjoint:
            return false;
    }
    return false;
}

std::vector<NodeTime> separator_candidates_nodes(const TemporalGraph& tg, NodeId s, NodeId v,
                                                 DisjointnessMode mode) {
    std::set<std::pair<Label, NodeId>> set;
    if (mode == DisjointnessMode::TimeNodeDisjoint) {
        for (NodeId u = 0; u < tg.graph().node_count(); ++u) {
            if (u == s || u == v) continue;
            for (Label t = tg.lambda_min(); t <= tg.lambda_max(); ++t) set.emplace(t, u);
        }
    } else {
        for (const auto& te : tg.time_edges())
            set.emplace(te.label, mode == DisjointnessMode::OutDisjoint ? te.from : te.to);
    }
    std::vector<NodeTime> out;
    out.reserve(set.size());
    for (const auto& [t, u] : set) out.push_back({u, t});
    return out;
}

std::vector<TimeEdge> separator_candidates_edges(const TemporalGraph& tg) {
    std::set<std::pair<Label, Edge>> set;
    for (const auto& te : tg.time_edges()) {
        auto [e, l] = canonical_time_edge(tg, te);
        set.emplace(l, e);
    }
    std::vector<TimeEdge> out;
    out.reserve(set.size());
    for (const auto& [l, e] : set) out.push_back({e.u, e.v, l});
    return out;
}

/// Capacities with one removal unit taken out of the network.
void zero_unit(const FlowNetwork& net, std::vector<int>& caps, DisjointnessMode mode,
               const NodeTime& nt, const TimeEdge& te_unit,
               const TemporalGraph& tg) {
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        const auto& a = net.arcs[i];
        bool hit = false;
        switch (mode) {
            case DisjointnessMode::OutDisjoint:
                hit = (a.kind == FlowNetwork::ArcKind::Gadget && a.node == nt.node &&
                       a.time == nt.time) ||
                      (a.kind == FlowNetwork::ArcKind::Diagonal && a.edge.from == nt.node &&
                       a.edge.label == nt.time);
                break;
            case DisjointnessMode::InDisjoint:
                hit = (a.kind == FlowNetwork::ArcKind::Gadget && a.node == nt.node &&
                       a.time == nt.time) ||
                      (a.kind == FlowNetwork::ArcKind::Diagonal && a.edge.to == nt.node &&
                       a.edge.label == nt.time);
                break;
            case DisjointnessMode::TimeNodeDisjoint:
                hit = a.kind == FlowNetwork::ArcKind::NodeCap && a.node == nt.node &&
                      a.time == nt.time;
                break;
            case DisjointnessMode::TimeEdgeDisjoint:
                hit = a.kind == FlowNetwork::ArcKind::Diagonal &&
                      canonical_time_edge(tg, a.edge) ==
                          canonical_time_edge(tg, te_unit);
                break;
        }
        if (hit) caps[i] = 0;
    }
}

TemporalGraph truncated(const TemporalGraph& tg, Label horizon) {
    Labeling lab;
    for (const auto& [e, ls] : tg.labeling().all())
        for (Label l : ls)
            if (l <= horizon) lab.add_label(e, l);
    return build_temporal_graph(tg.graph(), lab);
}

void validate_terminal_pair(const TemporalGraph& tg, NodeId s, NodeId v) {
    if (s < 0 || s >= tg.graph().node_count() || v < 0 || v >= tg.graph().node_count())
        throw std::invalid_argument("terminal out of range");
    if (s == v) throw std::invalid_argument("source and target must differ");
    if (tg.labeling().empty()) throw std::invalid_argument("labeling is empty");
}

} // namespace

// ---------------------------------------------------------------- networks

FlowNetwork flow_expansion(const TemporalGraph& tg, NodeId s, NodeId v, DisjointnessMode mode) {
    validate_terminal_pair(tg, s, v);
    int n = tg.graph().node_count();
    Label lmin = tg.lambda_min(), lmax = tg.lambda_max();
    auto li = [&](Label t) { return t - (lmin - 1); };
    int levels = li(lmax) + 1;
    // The out/in constructions bound the flow by the number of distinct
    // departure (arrival) times at a terminal, which is at most lambda_max;
    // the unit-capacity modes have no such bound, so waiting arcs there get
    // a capacity no flow can reach.
    int wait_cap = (mode == DisjointnessMode::OutDisjoint || mode == DisjointnessMode::InDisjoint)
                       ? lmax
                       : tg.time_edge_count() + 1;

    FlowNetwork net;
    using Kind = FlowNetwork::ArcKind;
    if (mode == DisjointnessMode::TimeNodeDisjoint) {
        auto in_node = [&](NodeId u, Label t) { return 2 * (li(t) * n + u); };
        auto out_node = [&](NodeId u, Label t) { return 2 * (li(t) * n + u) + 1; };
        net.node_count = 2 * n * levels;
        net.source = in_node(s, lmin - 1);
        net.sink = out_node(v, lmax);
        for (NodeId u = 0; u < n; ++u)
            for (Label t = lmin - 1; t <= lmax; ++t) {
                int cap = (u == s || u == v) ? wait_cap : 1;
                net.arcs.push_back({in_node(u, t), out_node(u, t), cap, Kind::NodeCap, {}, u, t});
                if (t < lmax)
                    net.arcs.push_back(
                        {out_node(u, t), in_node(u, t + 1), wait_cap, Kind::Vertical, {}, u, t + 1});
            }
        for (const auto& te : tg.time_edges())
            net.arcs.push_back({out_node(te.from, te.label - 1), in_node(te.to, te.label), 1,
                                Kind::Diagonal, te, -1, te.label});
        return net;
    }

    auto tn = [&](NodeId u, Label t) { return li(t) * n + u; };
    net.node_count = n * levels;
    net.source = tn(s, lmin - 1);
    net.sink = tn(v, lmax);
    for (NodeId u = 0; u < n; ++u)
        for (Label t = lmin - 1; t < lmax; ++t)
            net.arcs.push_back({tn(u, t), tn(u, t + 1), wait_cap, Kind::Vertical, {}, u, t + 1});

    if (mode == DisjointnessMode::TimeEdgeDisjoint) {
        for (const auto& te : tg.time_edges())
            net.arcs.push_back({tn(te.from, te.label - 1), tn(te.to, te.label), 1, Kind::Diagonal,
                                te, -1, te.label});
        return net;
    }

    bool out_mode = mode == DisjointnessMode::OutDisjoint;
    std::map<std::pair<NodeId, Label>, std::vector<TimeEdge>> buckets;
    for (const auto& te : tg.time_edges())
        buckets[{out_mode ? te.from : te.to, te.label}].push_back(te);
    for (const auto& [key, group] : buckets) {
        auto [pivot, t] = key;
        if (group.size() == 1) {
            const auto& te = group.front();
            net.arcs.push_back({tn(te.from, t - 1), tn(te.to, t), 1, Kind::Diagonal, te, -1, t});
            continue;
        }
        int w = net.node_count++;
        if (out_mode) {
            net.arcs.push_back({tn(pivot, t - 1), w, 1, Kind::Gadget, {}, pivot, t});
            for (const auto& te : group)
                net.arcs.push_back({w, tn(te.to, t), 1, Kind::Diagonal, te, -1, t});
        } else {
            for (const auto& te : group)
                net.arcs.push_back({tn(te.from, t - 1), w, 1, Kind::Diagonal, te, -1, t});
            net.arcs.push_back({w, tn(pivot, t), 1, Kind::Gadget, {}, pivot, t});
        }
    }
    return net;
}

int max_flow_value(const FlowNetwork& net) { return solve_max_flow(net, nullptr).value; }

int Separator::size() const {
    return static_cast<int>(node_times.size() + time_edges.size());
}

// -------------------------------------------------------------- predicates

bool journeys_disjoint(const TemporalGraph& tg, const Journey& a, const Journey& b,
                       DisjointnessMode mode, NodeId s, NodeId v) {
    if (a.steps() == b.steps()) return false;
    switch (mode) {
        case DisjointnessMode::OutDisjoint: {
            std::set<std::pair<NodeId, Label>> dep;
            for (const auto& te : a.steps()) dep.emplace(te.from, te.label);
            for (const auto& te : b.steps())
                if (dep.count({te.from, te.label})) return false;
            return true;
        }
        case DisjointnessMode::InDisjoint: {
            std::set<std::pair<NodeId, Label>> arr;
            for (const auto& te : a.steps()) arr.emplace(te.to, te.label);
            for (const auto& te : b.steps())
                if (arr.count({te.to, te.label})) return false;
            return true;
        }
        case DisjointnessMode::TimeEdgeDisjoint: {
            std::set<std::pair<Edge, Label>> used;
            for (const auto& te : a.steps()) used.insert(canonical_time_edge(tg, te));
            for (const auto& te : b.steps())
                if (used.count(canonical_time_edge(tg, te))) return false;
            return true;
        }
        case DisjointnessMode::TimeNodeDisjoint: {
            auto oa = occupancy(a), ob = occupancy(b);
            for (const auto& [u, ia] : oa) {
                if (u == s || u == v) continue;
                auto it = ob.find(u);
                if (it == ob.end()) continue;
                if (ia.first <= it->second.second && it->second.first <= ia.second) return false;
            }
            return true;
        }
    }
    return true;
}

bool pairwise_disjoint(const TemporalGraph& tg, const std::vector<Journey>& js,
                       DisjointnessMode mode, NodeId s, NodeId v) {
    for (size_t i = 0; i < js.size(); ++i)
        for (size_t j = i + 1; j < js.size(); ++j)
            if (!journeys_disjoint(tg, js[i], js[j], mode, s, v)) return false;
    return true;
}

bool journey_blocked(const TemporalGraph& tg, const Journey& j, const Separator& sep,
                     NodeId s, NodeId v) {
    for (const auto& nt : sep.node_times)
        if (unit_hits(tg, j, sep.mode, nt, {}, s, v)) return true;
    for (const auto& te : sep.time_edges)
        if (unit_hits(tg, j, sep.mode, {}, te, s, v)) return true;
    return false;
}

// ---------------------------------------------------------------- maximums

DisjointJourneys max_disjoint_journeys(const TemporalGraph& tg, NodeId s, NodeId v,
                                       DisjointnessMode mode) {
    auto net = flow_expansion(tg, s, v, mode);
    auto solved = solve_max_flow(net, nullptr);
    DisjointJourneys result;
    if (solved.value == 0) return result;

    auto walks = decompose_flow(net, solved);
    std::vector<Journey> witnesses;
    witnesses.reserve(walks.size());
    for (const auto& w : walks) {
        Journey j = walk_to_journey(w, s, v);
        if (!is_journey(tg, j.steps()) || j.is_empty() || j.steps().front().from != s ||
            j.steps().back().to != v)
            throw std::logic_error("flow decomposition produced a malformed journey");
        witnesses.push_back(std::move(j));
    }
    if (pairwise_disjoint(tg, witnesses, mode, s, v)) {
        result.count = solved.value;
        result.witnesses = std::move(witnesses);
        return result;
    }
    // The flow value is only an upper bound here; fall back to the exact
    // search over all journeys.
    auto js = enumerate_journeys(tg, s, v);
    auto exact = exact_max_disjoint(tg, js, mode, s, v);
    result.count = exact.count;
    result.witnesses = std::move(exact.witnesses);
    return result;
}

// -------------------------------------------------------------- separators

Separator min_separator(const TemporalGraph& tg, NodeId s, NodeId v, DisjointnessMode mode) {
    Separator sep;
    sep.mode = mode;
    auto net = flow_expansion(tg, s, v, mode); // validates the query
    if (mode == DisjointnessMode::TimeNodeDisjoint)
        for (const auto& te : tg.time_edges())
            if (te.from == s && te.to == v)
                throw std::invalid_argument(
                    "no time-node separator exists between temporally adjacent terminals");
    bool edge_units = mode == DisjointnessMode::TimeEdgeDisjoint;
    auto node_cands = edge_units ? std::vector<NodeTime>{}
                                 : separator_candidates_nodes(tg, s, v, mode);
    auto edge_cands = edge_units ? separator_candidates_edges(tg) : std::vector<TimeEdge>{};
    size_t cand_count = edge_units ? edge_cands.size() : node_cands.size();

    if (flow_value_is_exact(tg, mode)) {
        std::vector<int> caps(net.arcs.size());
        for (size_t i = 0; i < net.arcs.size(); ++i) caps[i] = net.arcs[i].capacity;
        int current = solve_max_flow(net, &caps).value;
        for (size_t c = 0; c < cand_count && current > 0; ++c) {
            std::vector<int> trial = caps;
            if (edge_units)
                zero_unit(net, trial, mode, {}, edge_cands[c], tg);
            else
                zero_unit(net, trial, mode, node_cands[c], {}, tg);
            int val = solve_max_flow(net, &trial).value;
            if (val < current) {
                current = val;
                caps = std::move(trial);
                if (edge_units)
                    sep.time_edges.push_back(edge_cands[c]);
                else
                    sep.node_times.push_back(node_cands[c]);
            }
        }
        if (current == 0) return sep;
        throw std::logic_error("separator extraction failed to exhaust the flow");
    }

    // Exact regime: evaluate survivals by searching the enumerated journeys.
    auto js = enumerate_journeys(tg, s, v);
    auto alive_value = [&](const Separator& trial) {
        std::vector<Journey> alive;
        for (const auto& j : js)
            if (!journey_blocked(tg, j, trial, s, v)) alive.push_back(j);
        return exact_max_disjoint(tg, alive, mode, s, v).count;
    };
    int current = alive_value(sep);
    for (size_t c = 0; c < cand_count && current > 0; ++c) {
        Separator trial = sep;
        if (edge_units)
            trial.time_edges.push_back(edge_cands[c]);
        else
            trial.node_times.push_back(node_cands[c]);
        int val = alive_value(trial);
        if (val < current) {
            current = val;
            sep = std::move(trial);
        }
    }
    if (current == 0) return sep;

    // No single further removal lowers the maximum; find a true minimum
    // blocking set outright (sizes ascending). This is a safety net beyond
    // the greedy argument and is guarded against blowup.
    std::vector<Journey> alive;
    for (const auto& j : js)
        if (!journey_blocked(tg, j, sep, s, v)) alive.push_back(j);
    for (size_t extra = 1; extra <= cand_count; ++extra) {
        if (extra > 8) throw GuardExceeded("separator completion search too large");
        std::vector<size_t> pick(extra);
        auto search = [&](auto&& self, size_t from, size_t depth) -> bool {
            if (depth == extra) {
                Separator trial = sep;
                for (size_t i : pick) {
                    if (edge_units)
                        trial.time_edges.push_back(edge_cands[i]);
                    else
                        trial.node_times.push_back(node_cands[i]);
                }
                for (const auto& j : alive)
                    if (!journey_blocked(tg, j, trial, s, v)) return false;
                sep = std::move(trial);
                return true;
            }
            for (size_t c = from; c < cand_count; ++c) {
                pick[depth] = c;
                if (self(self, c + 1, depth + 1)) return true;
            }
            return false;
        };
        if (search(search, 0, 0)) return sep;
    }
    throw std::logic_error("no separator exists over the candidate units");
}

TemporalGraph apply_separator(const TemporalGraph& tg, const Separator& sep) {
    Labeling lab = tg.labeling();
    switch (sep.mode) {
        case DisjointnessMode::TimeNodeDisjoint:
            throw std::invalid_argument(
                "time-node removals cannot be expressed as label deletions");
        case DisjointnessMode::OutDisjoint:
        case DisjointnessMode::InDisjoint: {
            if (!tg.graph().is_directed())
                throw std::invalid_argument(
                    "departure/arrival removals need directed edges");
            bool out = sep.mode == DisjointnessMode::OutDisjoint;
            for (const auto& nt : sep.node_times)
                for (const auto& e : tg.graph().edges())
                    if ((out ? e.u : e.v) == nt.node) lab.remove_label(e, nt.time);
            break;
        }
        case DisjointnessMode::TimeEdgeDisjoint:
            for (const auto& te : sep.time_edges)
                lab.remove_label(tg.graph().edge_key(te.from, te.to), te.label);
            break;
    }
    return build_temporal_graph(tg.graph(), lab);
}

bool separator_disconnects(const TemporalGraph& tg, NodeId s, NodeId v, const Separator& sep) {
    bool expressible = sep.mode == DisjointnessMode::TimeEdgeDisjoint ||
                       (sep.mode != DisjointnessMode::TimeNodeDisjoint &&
                        tg.graph().is_directed());
    if (expressible) {
        auto cut = apply_separator(tg, sep);
        if (cut.labeling().empty()) return true;
        auto table = foremost_journeys(cut, s, cut.lambda_min());
        return !table.arrival[static_cast<size_t>(v)].has_value();
    }
    for (const auto& j : enumerate_journeys(tg, s, v))
        if (!journey_blocked(tg, j, sep, s, v)) return false;
    return true;
}

// ----------------------------------------------------------------- packing

std::optional<ForemostPacking> foremost_disjoint_packing(const TemporalGraph& tg, NodeId s,
                                                         NodeId v, int q) {
    if (q < 1) throw std::invalid_argument("need a positive journey count");
    validate_terminal_pair(tg, s, v);
    std::set<Label> label_set;
    for (const auto& te : tg.time_edges()) label_set.insert(te.label);
    std::vector<Label> horizons(label_set.begin(), label_set.end());
    auto feasible = [&](Label T) {
        return max_flow_value(flow_expansion(truncated(tg, T), s, v,
                                             DisjointnessMode::OutDisjoint)) >= q;
    };
    if (!feasible(horizons.back())) return std::nullopt;
    size_t lo = 0, hi = horizons.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (feasible(horizons[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    ForemostPacking out;
    out.arrival = horizons[lo];
    auto best = max_disjoint_journeys(truncated(tg, out.arrival), s, v,
                                      DisjointnessMode::OutDisjoint);
    out.journeys.assign(best.witnesses.begin(), best.witnesses.begin() + q);
    return out;
}

MultiSourcePacking multi_source_packing(const TemporalGraph& tg,
                                        const std::map<NodeId, int>& sources, NodeId v) {
    int n = tg.graph().node_count();
    if (v < 0 || v >= n) throw std::invalid_argument("target out of range");
    int k = 0;
    for (const auto& [node, tokens] : sources) {
        if (node < 0 || node >= n) throw std::invalid_argument("source out of range");
        if (tokens < 0) throw std::invalid_argument("negative token count");
        k += tokens;
    }
    if (k < 1) throw std::invalid_argument("need at least one token");

    MultiSourcePacking res;
    res.total_tokens = k;
    if (!tg.labeling().empty()) {
        res.age_sufficient = tg.age() >= n + k;
        res.instances_connected = true;
        for (Label r = tg.lambda_min(); r <= tg.lambda_max() && res.instances_connected; ++r)
            res.instances_connected = instance_at(tg, r).is_weakly_connected();
    }

    NodeId super = n;
    std::vector<Edge> edges = tg.graph().edges();
    for (const auto& [node, tokens] : sources)
        if (tokens > 0) edges.push_back({super, node});
    StaticGraph big_graph = tg.graph().is_directed() ? StaticGraph::directed(n + 1, edges)
                                                     : StaticGraph::undirected(n + 1, edges);
    Labeling big_lab = tg.labeling().shifted(k);
    int next_token = 1;
    for (const auto& [node, tokens] : sources)
        for (int i = 0; i < tokens; ++i)
            big_lab.add_label(big_graph.edge_key(super, node), next_token++);
    auto big = build_temporal_graph(big_graph, big_lab);

    auto dj = max_disjoint_journeys(big, super, v, DisjointnessMode::OutDisjoint);
    if (dj.count < k) return res;

    // Witnesses in token order: the first step's label is the token number.
    std::sort(dj.witnesses.begin(), dj.witnesses.end(), [](const Journey& a, const Journey& b) {
        return a.steps().front().label < b.steps().front().label;
    });
    for (auto& j : dj.witnesses) {
        const auto& st = j.steps();
        if (st.empty() || st.front().from != super)
            throw std::logic_error("packing witness does not start at the supersource");
        std::vector<TimeEdge> stripped;
        for (size_t i = 1; i < st.size(); ++i)
            stripped.push_back({st[i].from, st[i].to, st[i].label - k});
        j = Journey(std::move(stripped));
    }
    res.success = true;
    res.journeys = std::move(dj.witnesses);
    return res;
}

} // namespace tgraph
