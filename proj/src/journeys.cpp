#include "tgraph/journeys.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <set>

namespace tgraph {

ForemostTable foremost_journeys(const TemporalGraph& tg, NodeId s, Label t_start,
                                bool prefer_fastest) {
    if (tg.labeling().empty()) throw std::invalid_argument("labeling is empty");
    if (s < 0 || s >= tg.graph().node_count()) throw std::invalid_argument("bad source");
    if (t_start < tg.lambda_min() || t_start > tg.lambda_max())
        throw std::invalid_argument("t_start outside [lambda_min, lambda_max]");

    const int n = tg.graph().node_count();
    ForemostTable table;
    table.source = s;
    table.t_start = t_start;
    table.arrival.assign(n, std::nullopt);
    table.pred.assign(n, std::nullopt);
    table.dep.assign(n, std::nullopt);
    table.arrival[s] = t_start - 1;

    const auto time_edges = tg.time_edges(); // sorted by (label, from, to)
    std::size_t idx = 0;
    while (idx < time_edges.size() && time_edges[idx].label < t_start) ++idx;

    std::vector<char> reached(n, 0);
    reached[s] = 1;

    while (idx < time_edges.size()) {
        const Label t = time_edges[idx].label;
        // Extensions at time t may only leave nodes reached strictly earlier,
        // so additions are applied after the whole bucket is scanned.
        struct Candidate {
            TimeEdge step;
            Label dep;
        };
        std::vector<std::pair<NodeId, Candidate>> additions;
        for (; idx < time_edges.size() && time_edges[idx].label == t; ++idx) {
            const TimeEdge& te = time_edges[idx];
            if (!reached[te.from] || reached[te.to]) continue;
            Label dep = (te.from == s) ? t : *table.dep[te.from];
            auto it = std::find_if(additions.begin(), additions.end(),
                                   [&](const auto& a) { return a.first == te.to; });
            if (it == additions.end()) {
                additions.push_back({te.to, {te, dep}});
            } else if (prefer_fastest && dep > it->second.dep) {
                it->second = {te, dep}; // later departure, same arrival: faster
            }
        }
        for (const auto& [v, cand] : additions) {
            reached[v] = 1;
            table.arrival[v] = t;
            table.pred[v] = cand.step;
            table.dep[v] = cand.dep;
        }
    }
    return table;
}

std::optional<Journey> journey_to(const TemporalGraph& tg, const ForemostTable& table, NodeId v) {
    if (v < 0 || v >= static_cast<int>(table.arrival.size()))
        throw std::invalid_argument("bad target");
    if (!table.arrival[v]) return std::nullopt;
    std::vector<TimeEdge> steps;
    NodeId at = v;
    while (at != table.source) {
        const TimeEdge& te = *table.pred[at];
        steps.push_back(te);
        at = te.from;
    }
    std::reverse(steps.begin(), steps.end());
    assert(is_journey(tg, steps));
    return Journey(std::move(steps));
}

std::optional<Journey> foremost_journey(const TemporalGraph& tg, NodeId s, NodeId v,
                                        Label t_start, bool prefer_fastest) {
    return journey_to(tg, foremost_journeys(tg, s, t_start, prefer_fastest), v);
}

std::optional<Journey> fastest_journey(const TemporalGraph& tg, NodeId s, NodeId v) {
    if (s < 0 || s >= tg.graph().node_count() || v < 0 || v >= tg.graph().node_count())
        throw std::invalid_argument("bad endpoint");
    if (s == v) return Journey{};
    if (tg.labeling().empty()) return std::nullopt;

    // Departure times of journeys from s are labels of edges leaving s.
    std::set<Label> candidates;
    for (NodeId w : tg.graph().out_neighbors(s))
        for (Label l : tg.labeling().labels(tg.graph().edge_key(s, w))) candidates.insert(l);

    std::optional<Journey> best;
    for (Label t0 : candidates) {
        auto j = foremost_journey(tg, s, v, t0, /*prefer_fastest=*/true);
        if (j && !j->is_empty() && (!best || j->duration() < best->duration())) best = j;
    }
    return best;
}

namespace {

// Vertex of the incidence graph: an edge of the weighted graph together with
// one of its labels. Terminals use fictitious endpoints -1 (start) and -2 (end).
struct IncidenceVertex {
    NodeId a, b; // endpoints, a < b except for terminals
    Label label;
    double weight;
};

bool share_endpoint(const IncidenceVertex& x, const IncidenceVertex& y) {
    return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

} // namespace

std::optional<Journey> shortest_weighted_journey(const TemporalGraph& tg, NodeId s, NodeId t) {
    if (tg.graph().is_directed())
        throw std::invalid_argument("shortest weighted journeys require an undirected graph");
    if (!tg.graph().has_weights()) throw std::invalid_argument("graph has no weights");
    if (s < 0 || s >= tg.graph().node_count() || t < 0 || t >= tg.graph().node_count())
        throw std::invalid_argument("bad endpoint");
    if (s == t) return Journey{};
    if (tg.labeling().empty()) return std::nullopt;

    const Label lmax = tg.lambda_max();
    std::vector<IncidenceVertex> verts;
    verts.push_back({-1, s, 0, 0.0}); // start terminal, label below everything
    for (const auto& [e, ls] : tg.labeling().all())
        for (Label l : ls) verts.push_back({e.u, e.v, l, tg.graph().weight(e)});
    verts.push_back({-2, t, lmax + 1, 0.0}); // end terminal, label above everything
    const int nv = static_cast<int>(verts.size());

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(nv, inf);
    std::vector<int> pred(nv, -1);
    std::vector<char> done(nv, 0);
    dist[0] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0.0, 0});
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (done[x]) continue;
        done[x] = 1;
        for (int y = 0; y < nv; ++y) {
            if (done[y] || verts[x].label >= verts[y].label) continue;
            if (!share_endpoint(verts[x], verts[y])) continue;
            double nd = d + verts[y].weight;
            if (nd < dist[y]) {
                dist[y] = nd;
                pred[y] = x;
                pq.push({nd, y});
            }
        }
    }
    if (dist[nv - 1] == inf) return std::nullopt;

    std::vector<int> hpath;
    for (int x = nv - 1; x != -1; x = pred[x]) hpath.push_back(x);
    std::reverse(hpath.begin(), hpath.end());

    // Drop the two terminals and orient the edge sequence into a walk from s.
    std::vector<TimeEdge> steps;
    NodeId at = s;
    for (std::size_t i = 1; i + 1 < hpath.size(); ++i) {
        const auto& ev = verts[hpath[i]];
        NodeId to;
        if (ev.a == at)
            to = ev.b;
        else if (ev.b == at)
            to = ev.a;
        else
            throw std::logic_error("incidence path does not map to a walk");
        steps.push_back({at, to, ev.label});
        at = to;
    }
    if (at != t) throw std::logic_error("incidence path misses the target");
    // Shortest incidence paths map to simple journeys; weights are strictly
    // positive, so any revisit could be shortcut. Enforced, not assumed.
    if (!is_journey(tg, steps)) throw std::logic_error("mapped walk is not a journey");
    return Journey(std::move(steps));
}

std::vector<Journey> enumerate_journeys(const TemporalGraph& tg, NodeId s, NodeId v,
                                        int node_guard, int time_edge_guard) {
    const int n = tg.graph().node_count();
    if (s < 0 || s >= n || v < 0 || v >= n) throw std::invalid_argument("bad endpoint");
    if (n > node_guard)
        throw GuardExceeded("enumerate_journeys: node count exceeds guard");
    if (tg.time_edge_count() > time_edge_guard)
        throw GuardExceeded("enumerate_journeys: time-edge count exceeds guard");
    std::vector<Journey> out;
    if (s == v || tg.labeling().empty()) return out;

    // Outgoing time-edges per node, sorted by (label, to) for determinism.
    std::vector<std::vector<TimeEdge>> by_node(n);
    for (const TimeEdge& te : tg.time_edges()) by_node[te.from].push_back(te);

    std::vector<char> visited(n, 0);
    std::vector<TimeEdge> stack;
    visited[s] = 1;

    auto dfs = [&](auto&& self, NodeId at, Label last) -> void {
        for (const TimeEdge& te : by_node[at]) {
            if (te.label <= last || visited[te.to]) continue;
            stack.push_back(te);
            if (te.to == v) {
                out.emplace_back(stack);
            } else {
                visited[te.to] = 1;
                self(self, te.to, te.label);
                visited[te.to] = 0;
            }
            stack.pop_back();
        }
    };
    dfs(dfs, s, 0);
    return out;
}

} // namespace tgraph
