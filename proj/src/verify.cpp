#include "tgraph/verify.hpp"

#include "tgraph/journeys.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>

namespace tgraph {

bool preserves_path(const TemporalGraph& tg, const std::vector<NodeId>& path) {
    if (path.size() < 2) return true;
    std::set<NodeId> seen(path.begin(), path.end());
    if (seen.size() != path.size()) throw std::invalid_argument("node sequence is not simple");
    Label cur = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!tg.graph().has_edge(path[i], path[i + 1]))
            throw std::invalid_argument("node sequence is not a path of the graph");
        const auto& ls = tg.labeling().labels(tg.graph().edge_key(path[i], path[i + 1]));
        auto it = std::upper_bound(ls.begin(), ls.end(), cur);
        if (it == ls.end()) return false;
        cur = *it;
    }
    return true;
}

namespace {

constexpr std::int64_t kPathBudget = 20'000'000;

// Enumerates simple directed traversals; calls sink on each. Throws
// GuardExceeded when the expansion budget runs out.
template <typename Sink>
void for_each_simple_path(const StaticGraph& g, Sink&& sink) {
    const int n = g.node_count();
    std::vector<char> visited(n, 0);
    std::vector<NodeId> path;
    std::int64_t budget = kPathBudget;
    auto dfs = [&](auto&& self, NodeId at) -> void {
        if (--budget < 0) throw GuardExceeded("simple path enumeration budget exceeded");
        if (path.size() >= 2) sink(path);
        for (NodeId y : g.out_neighbors(at)) {
            if (visited[y]) continue;
            visited[y] = 1;
            path.push_back(y);
            self(self, y);
            path.pop_back();
            visited[y] = 0;
        }
    };
    for (NodeId s = 0; s < n; ++s) {
        visited[s] = 1;
        path = {s};
        dfs(dfs, s);
        visited[s] = 0;
    }
}

bool front_extendable(const StaticGraph& g, const std::vector<NodeId>& path) {
    std::set<NodeId> on(path.begin(), path.end());
    for (NodeId w : g.in_neighbors(path.front()))
        if (!on.count(w)) return true;
    return false;
}

bool back_extendable(const StaticGraph& g, const std::vector<NodeId>& path) {
    std::set<NodeId> on(path.begin(), path.end());
    for (NodeId w : g.out_neighbors(path.back()))
        if (!on.count(w)) return true;
    return false;
}

} // namespace

std::vector<std::vector<NodeId>> all_simple_paths(const StaticGraph& g, int node_guard) {
    if (g.node_count() > node_guard)
        throw GuardExceeded("all_simple_paths: node count exceeds guard");
    std::vector<std::vector<NodeId>> out;
    for_each_simple_path(g, [&](const std::vector<NodeId>& p) { out.push_back(p); });
    return out;
}

std::vector<std::vector<NodeId>> maximal_simple_paths(const StaticGraph& g, int node_guard) {
    if (g.node_count() > node_guard)
        throw GuardExceeded("maximal_simple_paths: node count exceeds guard");
    std::vector<std::vector<NodeId>> out;
    for_each_simple_path(g, [&](const std::vector<NodeId>& p) {
        if (!back_extendable(g, p) && !front_extendable(g, p)) out.push_back(p);
    });
    return out;
}

int longest_path_length(const StaticGraph& g, int node_guard) {
    if (g.node_count() > node_guard)
        throw GuardExceeded("longest_path_length: node count exceeds guard");
    int best = 0;
    for_each_simple_path(g, [&](const std::vector<NodeId>& p) {
        best = std::max(best, static_cast<int>(p.size()) - 1);
    });
    return best;
}

bool preserves_all_paths(const TemporalGraph& tg, int node_guard) {
    for (const auto& p : maximal_simple_paths(tg.graph(), node_guard))
        if (!preserves_path(tg, p)) return false;
    return true;
}

bool preserves_reach(const TemporalGraph& tg) {
    const StaticGraph& g = tg.graph();
    if (tg.labeling().empty()) {
        for (NodeId u = 0; u < g.node_count(); ++u)
            if (!g.reachable_from(u).empty()) return false;
        return true;
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto targets = g.reachable_from(u);
        if (targets.empty()) continue;
        auto table = foremost_journeys(tg, u, tg.lambda_min());
        for (NodeId v : targets)
            if (!table.arrival[v]) return false;
    }
    return true;
}

bool preserves_reach_within_age(const TemporalGraph& tg, int age_max) {
    if (age_max < 1) throw std::invalid_argument("age bound must be >= 1");
    auto age = tg.labeling().age();
    if (age && *age > age_max) return false;
    return preserves_reach(tg);
}

// ----------------------------------------------------------------- oracles

namespace {

// Lightweight feasibility check used inside the oracles: label vectors are
// indexed by edge position in g.edges().
struct PropertyChecker {
    const StaticGraph& g;
    PathProperty prop;
    // For AllPaths: unextendable paths as edge-index+direction sequences.
    std::vector<std::vector<NodeId>> paths;
    // For Reach: the static reachability relation.
    std::vector<std::vector<NodeId>> reach_targets;

    explicit PropertyChecker(const StaticGraph& graph, PathProperty p) : g(graph), prop(p) {
        if (prop == PathProperty::AllPaths) {
            paths = maximal_simple_paths(g, g.node_count());
        } else {
            reach_targets.resize(g.node_count());
            for (NodeId u = 0; u < g.node_count(); ++u) reach_targets[u] = g.reachable_from(u);
        }
    }

    bool path_ok(const std::vector<NodeId>& path,
                 const std::vector<std::vector<Label>>& labels) const {
        Label cur = 0;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const auto& ls = labels[*g.edge_index(g.edge_key(path[i], path[i + 1]))];
            auto it = std::upper_bound(ls.begin(), ls.end(), cur);
            if (it == ls.end()) return false;
            cur = *it;
        }
        return true;
    }

    bool reach_ok(const std::vector<std::vector<Label>>& labels) const {
        // Earliest-arrival sweep per source over the candidate labeling.
        struct Avail {
            NodeId from, to;
            int edge;
        };
        Label max_label = 0;
        for (const auto& ls : labels)
            if (!ls.empty()) max_label = std::max(max_label, ls.back());
        for (NodeId s = 0; s < g.node_count(); ++s) {
            if (reach_targets[s].empty()) continue;
            std::vector<Label> arrival(g.node_count(), max_label + 1);
            arrival[s] = 0;
            // Bellman-style relaxation is fine at oracle sizes.
            bool changed = true;
            while (changed) {
                changed = false;
                for (int ei = 0; ei < g.edge_count(); ++ei) {
                    const Edge& e = g.edges()[ei];
                    auto relax = [&](NodeId a, NodeId b) {
                        if (arrival[a] > max_label) return;
                        const auto& ls = labels[ei];
                        auto it = std::upper_bound(ls.begin(), ls.end(), arrival[a]);
                        if (it != ls.end() && *it < arrival[b]) {
                            arrival[b] = *it;
                            changed = true;
                        }
                    };
                    relax(e.u, e.v);
                    if (!g.is_directed()) relax(e.v, e.u);
                }
            }
            for (NodeId v : reach_targets[s])
                if (arrival[v] > max_label) return false;
        }
        return true;
    }

    bool ok(const std::vector<std::vector<Label>>& labels) const {
        if (prop == PathProperty::AllPaths) {
            for (const auto& p : paths)
                if (!path_ok(p, labels)) return false;
            return true;
        }
        return reach_ok(labels);
    }
};

// All label subsets of {1..universe} with exactly `size` elements.
std::vector<std::vector<Label>> subsets_of_size(int universe, int size) {
    std::vector<std::vector<Label>> out;
    std::vector<Label> cur;
    auto rec = [&](auto&& self, Label next) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (Label l = next; l <= universe - (size - static_cast<int>(cur.size())) + 1; ++l) {
            cur.push_back(l);
            self(self, l + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace

int oracle_temporality(const StaticGraph& g, PathProperty prop, std::optional<int> age_max,
                       int edge_guard) {
    if (g.edge_count() > edge_guard)
        throw GuardExceeded("oracle_temporality: edge count exceeds guard");
    if (g.edge_count() == 0) return 0;
    PropertyChecker checker(g, prop);

    std::vector<std::vector<Label>> labels(g.edge_count());
    if (prop == PathProperty::Reach && checker.reach_ok(labels)) return 0;

    const int upper = std::max(1, longest_path_length(g, g.node_count()));
    for (int budget = 1; budget <= upper; ++budget) {
        const int universe = age_max ? *age_max : budget * g.edge_count();
        // Per-edge choices, smaller sets first so found labelings stay lean.
        std::vector<std::vector<std::vector<Label>>> choices;
        for (int size = 0; size <= std::min(budget, universe); ++size)
            for (auto& s : subsets_of_size(universe, size)) choices.push_back({s});
        std::vector<std::vector<Label>> flat;
        for (auto& c : choices) flat.push_back(c[0]);

        auto assign = [&](auto&& self, int ei) -> bool {
            if (ei == g.edge_count()) return checker.ok(labels);
            for (const auto& cand : flat) {
                labels[ei] = cand;
                // Prune: any unextendable path fully inside the assigned
                // prefix must already be preservable.
                if (prop == PathProperty::AllPaths) {
                    bool bad = false;
                    for (const auto& p : checker.paths) {
                        bool inside = true;
                        Label cur = 0;
                        for (std::size_t i = 0; !bad && i + 1 < p.size(); ++i) {
                            int idx = *g.edge_index(g.edge_key(p[i], p[i + 1]));
                            if (idx > ei) {
                                inside = false;
                                break;
                            }
                            const auto& ls = labels[idx];
                            auto it = std::upper_bound(ls.begin(), ls.end(), cur);
                            if (it == ls.end()) {
                                bad = true;
                                break;
                            }
                            cur = *it;
                        }
                        if (bad && inside) break;
                        bad = bad && inside;
                    }
                    if (bad) continue;
                }
                if (self(self, ei + 1)) return true;
            }
            labels[ei].clear();
            return false;
        };
        if (assign(assign, 0)) return budget;
    }
    throw std::logic_error("no labeling found within the trivial budget");
}

int oracle_temporal_cost(const StaticGraph& g, PathProperty prop, std::optional<int> age_max,
                         int edge_guard) {
    if (g.edge_count() > edge_guard)
        throw GuardExceeded("oracle_temporal_cost: edge count exceeds guard");
    if (g.edge_count() == 0) return 0;
    PropertyChecker checker(g, prop);

    std::vector<std::vector<Label>> labels(g.edge_count());
    if (prop == PathProperty::Reach && checker.reach_ok(labels)) return 0;

    const int per_edge_cap = std::max(1, longest_path_length(g, g.node_count()));
    const int total_cap = per_edge_cap * g.edge_count();
    for (int total = 1; total <= total_cap; ++total) {
        const int universe = age_max ? *age_max : total;
        auto assign = [&](auto&& self, int ei, int remaining) -> bool {
            if (ei == g.edge_count())
                return remaining == 0 && checker.ok(labels);
            int max_here = std::min({remaining, per_edge_cap, universe});
            for (int size = 0; size <= max_here; ++size) {
                // Leave enough room for the rest to absorb the remainder.
                if (remaining - size > (g.edge_count() - ei - 1) * std::min(per_edge_cap, universe))
                    continue;
                for (auto& s : subsets_of_size(universe, size)) {
                    labels[ei] = s;
                    if (self(self, ei + 1, remaining - size)) return true;
                }
            }
            labels[ei].clear();
            return false;
        };
        if (assign(assign, 0, total)) return total;
    }
    throw std::logic_error("no labeling found within the trivial budget");
}

// ------------------------------------------------------------------ kernels

namespace {

struct KernelSearch {
    const StaticGraph& g;
    const std::vector<Edge>& kernel;
    std::vector<int> order; // permutation under test
    std::vector<char> visited;
    std::vector<char> is_kernel_edge; // by edge index
    std::int64_t budget = 50'000'000;

    bool path_exists();
    bool route(NodeId at, std::size_t next);
};

bool KernelSearch::route(NodeId at, std::size_t next) {
    if (next == order.size()) return true;
    if (--budget < 0) throw GuardExceeded("is_edge_kernel search budget exceeded");
    const Edge& e = kernel[order[next]];
    // Either traverse the awaited kernel edge right now ...
    auto try_kernel = [&](NodeId a, NodeId b) -> bool {
        if (at != a || visited[b]) return false;
        visited[b] = 1;
        bool ok = route(b, next + 1);
        visited[b] = 0;
        return ok;
    };
    if (g.has_edge(e.u, e.v) && try_kernel(e.u, e.v)) return true;
    if (!g.is_directed() && try_kernel(e.v, e.u)) return true;
    // ... or move along a non-kernel edge towards it.
    for (NodeId y : g.out_neighbors(at)) {
        if (visited[y]) continue;
        if (is_kernel_edge[*g.edge_index(g.edge_key(at, y))]) continue;
        visited[y] = 1;
        if (route(y, next)) {
            visited[y] = 0;
            return true;
        }
        visited[y] = 0;
    }
    return false;
}

bool KernelSearch::path_exists() {
    const Edge& first = kernel[order[0]];
    std::vector<NodeId> starts = {first.u};
    if (!g.is_directed()) starts.push_back(first.v);
    for (NodeId s : starts) {
        visited.assign(g.node_count(), 0);
        visited[s] = 1;
        if (route(s, 0)) return true;
    }
    return false;
}

} // namespace

bool is_edge_kernel(const StaticGraph& g, const std::vector<Edge>& kernel, int kernel_guard,
                    int node_guard) {
    if (static_cast<int>(kernel.size()) > kernel_guard)
        throw GuardExceeded("is_edge_kernel: kernel size exceeds guard");
    if (g.node_count() > node_guard)
        throw GuardExceeded("is_edge_kernel: node count exceeds guard");
    if (kernel.empty()) return true;
    KernelSearch search{g, kernel};
    search.is_kernel_edge.assign(g.edge_count(), 0);
    for (const Edge& e : kernel) {
        auto idx = g.edge_index(e);
        if (!idx) throw std::invalid_argument("kernel edge not in graph");
        search.is_kernel_edge[*idx] = 1;
    }
    std::vector<int> perm(kernel.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        search.order = perm;
        if (!search.path_exists()) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

std::vector<int> adversarial_permutation(std::vector<std::vector<Label>> kernel_labels) {
    const int k = static_cast<int>(kernel_labels.size());
    if (k == 0) return {};
    Label top = 0;
    for (auto& ls : kernel_labels) {
        std::sort(ls.begin(), ls.end());
        ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
        if (static_cast<int>(ls.size()) > k - 1)
            throw std::invalid_argument("kernel edge carries more than k-1 labels");
        if (!ls.empty()) top = std::max(top, ls.back());
    }
    for (auto& ls : kernel_labels) // pad to exactly k-1 labels
        while (static_cast<int>(ls.size()) < k - 1) ls.push_back(++top);

    std::vector<int> remaining(k), pi;
    std::iota(remaining.begin(), remaining.end(), 0);
    for (int i = 0; i < k - 1; ++i) {
        // Position i takes the edge whose i-th smallest label is largest.
        int best = remaining[0];
        for (int cand : remaining)
            if (kernel_labels[cand][i] > kernel_labels[best][i]) best = cand;
        pi.push_back(best);
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    }
    pi.push_back(remaining[0]);
    return pi;
}

bool permutation_realizable(const std::vector<std::vector<Label>>& kernel_labels,
                            const std::vector<int>& pi) {
    Label cur = 0;
    for (int idx : pi) {
        const auto& ls = kernel_labels.at(idx);
        Label pick = 0;
        bool found = false;
        for (Label l : ls)
            if (l > cur && (!found || l < pick)) {
                pick = l;
                found = true;
            }
        if (!found) return false;
        cur = pick;
    }
    return true;
}

GraphWithKernel clique_kernel(int n) {
    if (n < 2) throw std::invalid_argument("clique kernel needs at least 2 nodes");
    GraphWithKernel out{complete_digraph(n), {}};
    for (int i = 0; i + 1 < n; i += 2) out.kernel.push_back({i, i + 1});
    return out;
}

GraphWithKernel grid_kernel(int n) {
    if (n < 1) throw std::invalid_argument("grid kernel needs n >= 1");
    const int width = 2 * n * n, height = 2 * n;
    GraphWithKernel out{grid_graph(width, height), {}};
    // 1-based grid coordinates (column x, row y), row 1 at the bottom:
    // p_i = v[(2i-1)n, n], q_i = v[(2i-1)n + 1, n].
    auto id = [width](int x, int y) { return (y - 1) * width + (x - 1); };
    for (int i = 1; i <= n; ++i) {
        int x = (2 * i - 1) * n;
        out.kernel.push_back(out.graph.edge_key(id(x, n), id(x + 1, n)));
    }
    return out;
}

long long reachability_count(const StaticGraph& g) {
    long long total = 0;
    for (NodeId u = 0; u < g.node_count(); ++u)
        total += static_cast<long long>(g.reachable_from(u).size());
    return total;
}

} // namespace tgraph
