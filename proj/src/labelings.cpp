#include "tgraph/labelings.hpp"

#include "tgraph/verify.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tgraph {

namespace {

std::vector<int> bfs_distances(const StaticGraph& g, NodeId s) {
    std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
    std::queue<NodeId> q;
    dist[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (NodeId y : g.out_neighbors(x)) {
            if (dist[static_cast<size_t>(y)] < 0) {
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

// Nodes of a directed ring in cycle order, starting at node 0.
std::vector<NodeId> ring_order(const StaticGraph& g) {
    if (!g.is_directed())
        throw std::invalid_argument("ring labeling requires a directed ring");
    int n = g.node_count();
    if (n < 3 || static_cast<int>(g.edges().size()) != n)
        throw std::invalid_argument("graph is not a directed ring");
    std::vector<NodeId> order;
    order.reserve(static_cast<size_t>(n));
    NodeId at = 0;
    for (int i = 0; i < n; ++i) {
        const auto& out = g.out_neighbors(at);
        if (out.size() != 1 || g.in_neighbors(at).size() != 1)
            throw std::invalid_argument("graph is not a directed ring");
        order.push_back(at);
        at = out[0];
    }
    if (at != 0)
        throw std::invalid_argument("graph is not a directed ring");
    return order;
}

} // namespace

int diameter(const StaticGraph& g) {
    int best = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int d : dist) best = std::max(best, d);
    }
    return best;
}

std::vector<std::vector<NodeId>> strongly_connected_components(const StaticGraph& g) {
    int n = g.node_count();
    // Kosaraju: finish order on g, then sweeps over reversed arcs.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<NodeId> finish;
    finish.reserve(static_cast<size_t>(n));
    for (NodeId s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        // Iterative DFS; second visit of a frame records the finish time.
        std::vector<std::pair<NodeId, size_t>> stack{{s, 0}};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            const auto& out = g.out_neighbors(x);
            if (next < out.size()) {
                NodeId y = out[next++];
                if (!seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    stack.emplace_back(y, 0);
                }
            } else {
                finish.push_back(x);
                stack.pop_back();
            }
        }
    }
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<NodeId>> comps;
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (comp[static_cast<size_t>(*it)] >= 0) continue;
        int c = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<NodeId> stack{*it};
        comp[static_cast<size_t>(*it)] = c;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            comps[static_cast<size_t>(c)].push_back(x);
            for (NodeId y : g.in_neighbors(x)) {
                if (comp[static_cast<size_t>(y)] < 0) {
                    comp[static_cast<size_t>(y)] = c;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comps[static_cast<size_t>(c)].begin(), comps[static_cast<size_t>(c)].end());
    }
    // Kosaraju emits components in reverse topological order of the
    // condensation; re-sort topologically with a min-id tie break.
    int k = static_cast<int>(comps.size());
    std::vector<std::vector<int>> succ(static_cast<size_t>(k));
    std::vector<int> indeg(static_cast<size_t>(k), 0);
    for (const auto& [u, v] : g.edges()) {
        int cu = comp[static_cast<size_t>(u)], cv = comp[static_cast<size_t>(v)];
        if (cu != cv) succ[static_cast<size_t>(cu)].push_back(cv);
        if (!g.is_directed() && cu != cv) succ[static_cast<size_t>(cv)].push_back(cu);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    for (const auto& s : succ)
        for (int c : s) ++indeg[static_cast<size_t>(c)];
    std::priority_queue<std::pair<NodeId, int>, std::vector<std::pair<NodeId, int>>,
                        std::greater<>> ready;
    for (int c = 0; c < k; ++c)
        if (indeg[static_cast<size_t>(c)] == 0) ready.emplace(comps[static_cast<size_t>(c)][0], c);
    std::vector<std::vector<NodeId>> ordered;
    ordered.reserve(static_cast<size_t>(k));
    while (!ready.empty()) {
        auto [id, c] = ready.top();
        ready.pop();
        ordered.push_back(std::move(comps[static_cast<size_t>(c)]));
        for (int d : succ[static_cast<size_t>(c)])
            if (--indeg[static_cast<size_t>(d)] == 0) ready.emplace(comps[static_cast<size_t>(d)][0], d);
    }
    return ordered;
}

Labeling label_all_paths_trivial(const StaticGraph& g, int node_guard) {
    int p = longest_path_length(g, node_guard);
    std::vector<Label> all(static_cast<size_t>(p));
    for (int l = 1; l <= p; ++l) all[static_cast<size_t>(l - 1)] = l;
    Labeling lab;
    for (const auto& e : g.edges()) lab.set_labels(e, all);
    return lab;
}

Labeling label_ring_all_paths(const StaticGraph& ring) {
    auto order = ring_order(ring);
    int n = static_cast<int>(order.size());
    Labeling lab;
    for (int i = 0; i < n; ++i) {
        Edge e{order[static_cast<size_t>(i)], order[static_cast<size_t>((i + 1) % n)]};
        lab.set_labels(e, {i + 1, n + i + 1});
    }
    return lab;
}

Labeling label_dag_all_paths(const StaticGraph& dag) {
    if (!dag.is_directed())
        throw std::invalid_argument("DAG labeling requires a directed graph");
    int n = dag.node_count();
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (const auto& e : dag.edges()) ++indeg[static_cast<size_t>(e.v)];
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId u = 0; u < n; ++u)
        if (indeg[static_cast<size_t>(u)] == 0) ready.push(u);
    std::vector<int> topo_index(static_cast<size_t>(n), 0);
    int next = 0;
    while (!ready.empty()) {
        NodeId u = ready.top();
        ready.pop();
        topo_index[static_cast<size_t>(u)] = ++next;
        for (NodeId v : dag.out_neighbors(u))
            if (--indeg[static_cast<size_t>(v)] == 0) ready.push(v);
    }
    if (next != n)
        throw std::invalid_argument("graph has a directed cycle");
    Labeling lab;
    for (const auto& e : dag.edges()) lab.set_labels(e, {topo_index[static_cast<size_t>(e.u)]});
    return lab;
}

Labeling label_strongly_connected_reach(const StaticGraph& g, NodeId root) {
    int n = g.node_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    for (NodeId u = 0; u < n; ++u)
        if (static_cast<int>(g.reachable_from(u).size()) != n - 1)
            throw std::invalid_argument("graph is not strongly connected");
    Labeling lab;
    if (n == 1) return lab;

    // In-tree: BFS from the root over reversed arcs; the tree edge of a node
    // at depth d is labeled k - d + 1, so labels increase toward the root.
    std::vector<int> depth_in(static_cast<size_t>(n), -1);
    std::vector<NodeId> parent_in(static_cast<size_t>(n), -1);
    std::queue<NodeId> q;
    depth_in[static_cast<size_t>(root)] = 0;
    q.push(root);
    int k = 0;
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (NodeId y : g.in_neighbors(x)) {
            if (depth_in[static_cast<size_t>(y)] >= 0) continue;
            depth_in[static_cast<size_t>(y)] = depth_in[static_cast<size_t>(x)] + 1;
            parent_in[static_cast<size_t>(y)] = x;
            k = std::max(k, depth_in[static_cast<size_t>(y)]);
            q.push(y);
        }
    }
    for (NodeId y = 0; y < n; ++y) {
        if (parent_in[static_cast<size_t>(y)] < 0) continue;
        Edge e = g.edge_key(y, parent_in[static_cast<size_t>(y)]);
        lab.add_label(e, k - depth_in[static_cast<size_t>(y)] + 1);
    }

    // Out-tree: BFS from the root forward; a tree edge into depth d gets k+d.
    std::vector<int> depth_out(static_cast<size_t>(n), -1);
    std::vector<NodeId> parent_out(static_cast<size_t>(n), -1);
    depth_out[static_cast<size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        for (NodeId y : g.out_neighbors(x)) {
            if (depth_out[static_cast<size_t>(y)] >= 0) continue;
            depth_out[static_cast<size_t>(y)] = depth_out[static_cast<size_t>(x)] + 1;
            parent_out[static_cast<size_t>(y)] = x;
            q.push(y);
        }
    }
    for (NodeId y = 0; y < n; ++y) {
        if (parent_out[static_cast<size_t>(y)] < 0) continue;
        Edge e = g.edge_key(parent_out[static_cast<size_t>(y)], y);
        lab.add_label(e, k + depth_out[static_cast<size_t>(y)]);
    }
    return lab;
}

Labeling label_reach(const StaticGraph& g) {
    if (!g.is_directed())
        throw std::invalid_argument("reachability labeling requires a directed graph");
    auto comps = strongly_connected_components(g);
    int n = g.node_count();
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (NodeId u : comps[c]) comp_of[static_cast<size_t>(u)] = static_cast<int>(c);

    Labeling lab;
    Label window_start = 1;
    std::vector<Label> window_end(comps.size(), 0);
    for (size_t c = 0; c < comps.size(); ++c) {
        const auto& nodes = comps[c];
        int span;  // lambda_max - lambda_min within the component
        if (nodes.size() == 1) {
            span = -1;  // empty window: the out-label sits at window_start
        } else {
            // Label the component on its own node ids, then translate.
            std::vector<int> local(static_cast<size_t>(n), -1);
            for (size_t i = 0; i < nodes.size(); ++i)
                local[static_cast<size_t>(nodes[i])] = static_cast<int>(i);
            std::vector<Edge> sub_edges;
            for (const auto& e : g.edges()) {
                if (comp_of[static_cast<size_t>(e.u)] == static_cast<int>(c) &&
                    comp_of[static_cast<size_t>(e.v)] == static_cast<int>(c))
                    sub_edges.emplace_back(local[static_cast<size_t>(e.u)],
                                           local[static_cast<size_t>(e.v)]);
            }
            auto sub = StaticGraph::directed(static_cast<int>(nodes.size()), sub_edges);
            Labeling inner = label_strongly_connected_reach(sub, 0);
            Label shift = window_start - *inner.min_label();
            span = *inner.max_label() - *inner.min_label();
            for (const auto& [e, ls] : inner.all())
                for (Label l : ls)
                    lab.add_label(Edge{nodes[static_cast<size_t>(e.u)],
                                       nodes[static_cast<size_t>(e.v)]},
                                  l + shift);
        }
        window_end[c] = window_start + span;
        window_start = window_end[c] + 2;
    }
    for (const auto& e : g.edges()) {
        int cu = comp_of[static_cast<size_t>(e.u)];
        if (cu != comp_of[static_cast<size_t>(e.v)])
            lab.add_label(e, window_end[static_cast<size_t>(cu)] + 1);
    }
    return lab;
}

Labeling label_tree_all_paths(const StaticGraph& tree) {
    if (tree.is_directed())
        throw std::invalid_argument("tree labeling requires an undirected tree");
    int n = tree.node_count();
    if (static_cast<int>(tree.edges().size()) != n - 1 || !tree.is_weakly_connected())
        throw std::invalid_argument("graph is not a tree");
    Labeling lab;
    if (n <= 1) return lab;
    int d = diameter(tree);

    // Root at node 0; process nodes deepest-first so child slots exist.
    std::vector<NodeId> parent(static_cast<size_t>(n), -1);
    std::vector<NodeId> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop();
        order.push_back(x);
        for (NodeId y : tree.out_neighbors(x)) {
            if (seen[static_cast<size_t>(y)]) continue;
            seen[static_cast<size_t>(y)] = 1;
            parent[static_cast<size_t>(y)] = x;
            q.push(y);
        }
    }
    std::vector<Label> slot1(static_cast<size_t>(n), 0), slot2(static_cast<size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeId u = *it;
        if (u == 0) continue;
        Label hi = 0, lo = 0;
        bool leaf = true;
        for (NodeId y : tree.out_neighbors(u)) {
            if (y == parent[static_cast<size_t>(u)]) continue;
            Label s1 = slot1[static_cast<size_t>(y)], s2 = slot2[static_cast<size_t>(y)];
            hi = leaf ? s1 : std::max(hi, s1);
            lo = leaf ? s2 : std::min(lo, s2);
            leaf = false;
        }
        slot1[static_cast<size_t>(u)] = leaf ? 1 : hi + 1;
        slot2[static_cast<size_t>(u)] = leaf ? d : lo - 1;
        Edge e = tree.edge_key(u, parent[static_cast<size_t>(u)]);
        if (slot1[static_cast<size_t>(u)] == slot2[static_cast<size_t>(u)])
            lab.set_labels(e, {slot1[static_cast<size_t>(u)]});
        else
            lab.set_labels(e, {slot1[static_cast<size_t>(u)], slot2[static_cast<size_t>(u)]});
    }
    return lab;
}

Labeling label_ring_tradeoff(const StaticGraph& ring, int k) {
    auto order = ring_order(ring);
    int n = static_cast<int>(order.size());
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("age surplus must be between 0 and n-1");
    auto edge_at = [&](int i) {
        i %= n;
        return Edge{order[static_cast<size_t>(i)], order[static_cast<size_t>((i + 1) % n)]};
    };
    Labeling lab;
    if (k == 0) {
        for (int i = 0; i < n; ++i) {
            std::vector<Label> all(static_cast<size_t>(n - 1));
            for (int l = 1; l <= n - 1; ++l) all[static_cast<size_t>(l - 1)] = l;
            lab.set_labels(edge_at(i), all);
        }
        return lab;
    }
    // Round i serves journeys starting on edges j0..j0+k (j0 = i*(k+1)): a
    // run of consecutive labels 1, 2, ... laid along the ring from edge j0,
    // long enough that edge j0+r can start at label r+1 and go full circle.
    for (int j0 = 0; j0 < n; j0 += k + 1) {
        int run = (n - 1) + std::min(k, n - 1 - j0);
        for (int l = 1; l <= run; ++l) lab.add_label(edge_at(j0 + l - 1), l);
    }
    return lab;
}

BfsLabelingResult label_reach_diameter_bfs(const StaticGraph& g) {
    if (!g.is_weakly_connected())
        throw std::invalid_argument("graph is not weakly connected");
    int n = g.node_count();
    BfsLabelingResult res;
    res.per_tree_cost = 0;
    res.max_label = 0;
    for (NodeId s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        std::vector<NodeId> parent(static_cast<size_t>(n), -1);
        for (NodeId x = 0; x < n; ++x) {
            if (dist[static_cast<size_t>(x)] < 0) continue;
            for (NodeId y : g.out_neighbors(x))
                if (dist[static_cast<size_t>(y)] == dist[static_cast<size_t>(x)] + 1 &&
                    parent[static_cast<size_t>(y)] < 0)
                    parent[static_cast<size_t>(y)] = x;
        }
        for (NodeId y = 0; y < n; ++y) {
            if (parent[static_cast<size_t>(y)] < 0) continue;
            Edge e = g.edge_key(parent[static_cast<size_t>(y)], y);
            res.labeling.add_label(e, dist[static_cast<size_t>(y)]);
            res.per_tree_cost += 1;
            res.max_label = std::max(res.max_label, dist[static_cast<size_t>(y)]);
        }
    }
    res.stored_cost = res.labeling.size();
    return res;
}

} // namespace tgraph
