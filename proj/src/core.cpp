#include "tgraph/core.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace tgraph {

// ---------------------------------------------------------------- StaticGraph

StaticGraph::StaticGraph(int n, bool directed, std::vector<Edge> edges)
    : n_(n), directed_(directed), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("node count must be non-negative");
    for (auto& e : edges_) {
        if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
        check_node(e.u);
        check_node(e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& e : edges_) {
        out_[e.u].push_back(e.v);
        in_[e.v].push_back(e.u);
        if (!directed_) {
            out_[e.v].push_back(e.u);
            in_[e.u].push_back(e.v);
        }
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

StaticGraph StaticGraph::directed(int node_count, const std::vector<Edge>& edges) {
    return StaticGraph(node_count, true, edges);
}

StaticGraph StaticGraph::undirected(int node_count, const std::vector<Edge>& edges) {
    return StaticGraph(node_count, false, edges);
}

void StaticGraph::check_node(NodeId x) const {
    if (x < 0 || x >= n_) throw std::invalid_argument("node id out of range");
}

Edge StaticGraph::edge_key(NodeId from, NodeId to) const {
    check_node(from);
    check_node(to);
    if (!directed_ && from > to) return Edge{to, from};
    return Edge{from, to};
}

std::optional<int> StaticGraph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

bool StaticGraph::has_edge(NodeId from, NodeId to) const {
    if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
    return edge_index(edge_key(from, to)).has_value();
}

const std::vector<NodeId>& StaticGraph::out_neighbors(NodeId u) const {
    check_node(u);
    return out_[u];
}

const std::vector<NodeId>& StaticGraph::in_neighbors(NodeId u) const {
    check_node(u);
    return in_[u];
}

void StaticGraph::set_weights(const std::map<Edge, double>& w) {
    for (const auto& [e, val] : w) {
        if (!edge_index(e)) throw std::invalid_argument("weight on unknown edge");
        if (!(val > 0.0)) throw std::invalid_argument("weights must be strictly positive");
    }
    for (const auto& e : edges_)
        if (!w.count(e)) throw std::invalid_argument("weight missing for an edge");
    weights_ = w;
}

double StaticGraph::weight(const Edge& e) const {
    auto it = weights_.find(e);
    if (it == weights_.end()) throw std::invalid_argument("edge has no weight");
    return it->second;
}

std::vector<NodeId> StaticGraph::reachable_from(NodeId u) const {
    check_node(u);
    std::vector<char> seen(n_, 0);
    seen[u] = 1;
    std::queue<NodeId> q;
    q.push(u);
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (NodeId y : out_[x])
            if (!seen[y]) {
                seen[y] = 1;
                q.push(y);
            }
    }
    std::vector<NodeId> out;
    for (NodeId x = 0; x < n_; ++x)
        if (seen[x] && x != u) out.push_back(x);
    return out;
}

bool StaticGraph::is_weakly_connected() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<NodeId>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n_, 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (NodeId y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++cnt;
                q.push(y);
            }
    }
    return cnt == n_;
}

StaticGraph directed_ring(int n) {
    if (n < 3) throw std::invalid_argument("ring needs at least 3 nodes");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return StaticGraph::directed(n, es);
}

StaticGraph directed_line(int n) {
    if (n < 1) throw std::invalid_argument("line needs at least 1 node");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return StaticGraph::directed(n, es);
}

StaticGraph complete_digraph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) es.push_back({i, j});
    return StaticGraph::directed(n, es);
}

StaticGraph grid_graph(int width, int height) {
    if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<Edge> es;
    auto id = [width](int row, int col) { return row * width + col; };
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) {
            if (c + 1 < width) es.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < height) es.push_back({id(r, c), id(r + 1, c)});
        }
    return StaticGraph::undirected(width * height, es);
}

// ------------------------------------------------------------------- Labeling

namespace {
const std::vector<Label> kNoLabels;
}

void Labeling::set_labels(const Edge& e, std::vector<Label> labels) {
    for (Label l : labels)
        if (l < 1) throw std::invalid_argument("labels must be >= 1");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.empty())
        labels_.erase(e);
    else
        labels_[e] = std::move(labels);
}

void Labeling::add_label(const Edge& e, Label l) {
    if (l < 1) throw std::invalid_argument("labels must be >= 1");
    auto& ls = labels_[e];
    auto it = std::lower_bound(ls.begin(), ls.end(), l);
    if (it == ls.end() || *it != l) ls.insert(it, l);
}

void Labeling::remove_label(const Edge& e, Label l) {
    auto it = labels_.find(e);
    if (it == labels_.end()) return;
    auto& ls = it->second;
    auto pos = std::lower_bound(ls.begin(), ls.end(), l);
    if (pos != ls.end() && *pos == l) ls.erase(pos);
    if (ls.empty()) labels_.erase(it);
}

void Labeling::clear_labels(const Edge& e) { labels_.erase(e); }

const std::vector<Label>& Labeling::labels(const Edge& e) const {
    auto it = labels_.find(e);
    return it == labels_.end() ? kNoLabels : it->second;
}

bool Labeling::has_labels(const Edge& e) const { return labels_.count(e) > 0; }

int Labeling::size() const {
    int total = 0;
    for (const auto& [e, ls] : labels_) total += static_cast<int>(ls.size());
    return total;
}

std::optional<Label> Labeling::min_label() const {
    std::optional<Label> best;
    for (const auto& [e, ls] : labels_)
        if (!best || ls.front() < *best) best = ls.front();
    return best;
}

std::optional<Label> Labeling::max_label() const {
    std::optional<Label> best;
    for (const auto& [e, ls] : labels_)
        if (!best || ls.back() > *best) best = ls.back();
    return best;
}

std::optional<int> Labeling::age() const {
    auto lo = min_label(), hi = max_label();
    if (!lo) return std::nullopt;
    return *hi - *lo + 1;
}

int Labeling::max_labels_per_edge() const {
    int best = 0;
    for (const auto& [e, ls] : labels_) best = std::max(best, static_cast<int>(ls.size()));
    return best;
}

Labeling Labeling::shifted(int delta) const {
    Labeling out;
    for (const auto& [e, ls] : labels_) {
        std::vector<Label> moved;
        moved.reserve(ls.size());
        for (Label l : ls) {
            if (l + delta < 1) throw std::invalid_argument("shift would make a label < 1");
            moved.push_back(l + delta);
        }
        out.set_labels(e, std::move(moved));
    }
    return out;
}

// -------------------------------------------------------------- TemporalGraph

TemporalGraph build_temporal_graph(const StaticGraph& graph, const Labeling& labeling) {
    for (const auto& [e, ls] : labeling.all()) {
        if (!graph.edge_index(e))
            throw std::invalid_argument("labeling refers to an edge not in the graph");
        for (Label l : ls)
            if (l < 1) throw std::invalid_argument("labels must be >= 1");
    }
    TemporalGraph tg;
    tg.graph_ = graph;
    tg.labeling_ = labeling;
    return tg;
}

Label TemporalGraph::lambda_min() const {
    auto v = labeling_.min_label();
    if (!v) throw std::invalid_argument("labeling is empty");
    return *v;
}

Label TemporalGraph::lambda_max() const {
    auto v = labeling_.max_label();
    if (!v) throw std::invalid_argument("labeling is empty");
    return *v;
}

int TemporalGraph::age() const {
    auto v = labeling_.age();
    if (!v) throw std::invalid_argument("labeling is empty");
    return *v;
}

std::vector<TimeEdge> TemporalGraph::time_edges() const {
    std::vector<TimeEdge> out;
    for (const auto& [e, ls] : labeling_.all())
        for (Label l : ls) {
            out.push_back({e.u, e.v, l});
            if (!graph_.is_directed()) out.push_back({e.v, e.u, l});
        }
    std::sort(out.begin(), out.end(), [](const TimeEdge& a, const TimeEdge& b) {
        return std::tie(a.label, a.from, a.to) < std::tie(b.label, b.from, b.to);
    });
    return out;
}

StaticGraph instance_at(const TemporalGraph& tg, Label r) {
    std::vector<Edge> es;
    for (const auto& [e, ls] : tg.labeling().all())
        if (std::binary_search(ls.begin(), ls.end(), r)) es.push_back(e);
    return tg.graph().is_directed() ? StaticGraph::directed(tg.graph().node_count(), es)
                                    : StaticGraph::undirected(tg.graph().node_count(), es);
}

// ------------------------------------------------------------ StaticExpansion

StaticExpansion static_expansion(const TemporalGraph& tg) {
    if (tg.labeling().empty())
        throw std::invalid_argument("static expansion requires a nonempty labeling");
    StaticExpansion ex;
    ex.n_ = tg.graph().node_count();
    ex.min_level_ = tg.lambda_min() - 1;
    ex.max_level_ = tg.lambda_max();
    for (Label i = ex.min_level_ + 1; i <= ex.max_level_; ++i) {
        for (NodeId j = 0; j < ex.n_; ++j)
            ex.arcs_.push_back({i - 1, j, i, j, false, i});
        for (const TimeEdge& te : tg.time_edges())
            if (te.label == i) ex.arcs_.push_back({i - 1, te.from, i, te.to, true, i});
    }
    return ex;
}

int StaticExpansion::diagonal_arc_count() const {
    int c = 0;
    for (const auto& a : arcs_) c += a.diagonal ? 1 : 0;
    return c;
}

int StaticExpansion::vertical_arc_count() const {
    return static_cast<int>(arcs_.size()) - diagonal_arc_count();
}

bool StaticExpansion::is_acyclic() const {
    for (const auto& a : arcs_)
        if (a.to_level != a.from_level + 1) return false;
    return true;
}

// -------------------------------------------------------------------- Journey

std::vector<NodeId> Journey::nodes() const {
    std::vector<NodeId> out;
    if (steps_.empty()) return out;
    out.push_back(steps_.front().from);
    for (const auto& s : steps_) out.push_back(s.to);
    return out;
}

double Journey::total_weight(const StaticGraph& g) const {
    double w = 0.0;
    for (const auto& s : steps_) w += g.weight(g.edge_key(s.from, s.to));
    return w;
}

bool is_journey(const TemporalGraph& tg, const std::vector<TimeEdge>& steps) {
    if (steps.empty()) return true;
    std::set<NodeId> seen;
    seen.insert(steps.front().from);
    Label prev = 0;
    NodeId at = steps.front().from;
    for (const auto& s : steps) {
        if (s.from != at) return false;
        if (!tg.graph().has_edge(s.from, s.to)) return false;
        const auto& ls = tg.labeling().labels(tg.graph().edge_key(s.from, s.to));
        if (!std::binary_search(ls.begin(), ls.end(), s.label)) return false;
        if (s.label <= prev) return false;
        if (seen.count(s.to)) return false;
        seen.insert(s.to);
        prev = s.label;
        at = s.to;
    }
    return true;
}

std::string to_string(const Journey& j) {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : j.steps()) {
        if (!first) os << ' ';
        first = false;
        os << '(' << s.from << ',' << s.to << ")@" << s.label;
    }
    return os.str();
}

} // namespace tgraph
