#include "tgraph/gadgets.hpp"

#include "tgraph/labelings.hpp"
#include "tgraph/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tgraph {

XorFormula::XorFormula(int num_vars, std::vector<XorClause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ < 0) throw std::invalid_argument("negative variable count");
    for (const auto& c : clauses_) {
        for (const auto& l : {c.first, c.second})
            if (l.var < 0 || l.var >= num_vars_)
                throw std::invalid_argument("clause variable out of range");
        if (c.first.var == c.second.var)
            throw std::invalid_argument("degenerate clause over a single variable");
    }
}

bool XorFormula::is_normalized() const {
    for (const auto& c : clauses_)
        if (c.first.negated || c.first.var >= c.second.var) return false;
    return true;
}

int XorFormula::literal_occurrences(const Literal& l) const {
    int count = 0;
    for (const auto& c : clauses_) count += (c.first == l) + (c.second == l);
    return count;
}

int XorFormula::variable_occurrences(int var) const {
    int count = 0;
    for (const auto& c : clauses_) count += (c.first.var == var) + (c.second.var == var);
    return count;
}

int XorFormula::max_literal_occurrence() const {
    int best = 0;
    for (int v = 0; v < num_vars_; ++v)
        for (bool neg : {false, true})
            best = std::max(best, literal_occurrences(Literal{v, neg}));
    return best;
}

int XorFormula::max_variable_occurrence() const {
    int best = 0;
    for (int v = 0; v < num_vars_; ++v) best = std::max(best, variable_occurrences(v));
    return best;
}

bool literal_value(const Literal& l, const std::vector<char>& assignment) {
    bool value = assignment[static_cast<size_t>(l.var)] != 0;
    return l.negated ? !value : value;
}

bool xor_satisfied(const XorClause& c, const std::vector<char>& assignment) {
    return literal_value(c.first, assignment) != literal_value(c.second, assignment);
}

int xor_satisfied_count(const XorFormula& f, const std::vector<char>& assignment) {
    int count = 0;
    for (const auto& c : f.clauses()) count += xor_satisfied(c, assignment);
    return count;
}

XorFormula normalize(const XorFormula& f) {
    std::vector<XorClause> out;
    out.reserve(f.clauses().size());
    for (XorClause c : f.clauses()) {
        if (c.first.var > c.second.var) std::swap(c.first, c.second);
        if (c.first.negated) {
            c.first.negated = false;
            c.second.negated = !c.second.negated;
        }
        out.push_back(c);
    }
    return XorFormula(f.num_vars(), std::move(out));
}

MaxXorResult max_xor_brute(const XorFormula& f, int var_guard) {
    int n = f.num_vars();
    if (n > var_guard) throw GuardExceeded("too many variables for exhaustive search");
    MaxXorResult res;
    res.best = -1;
    std::vector<char> a(static_cast<size_t>(n), 0);
    for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
        for (int v = 0; v < n; ++v) a[static_cast<size_t>(v)] = (bits >> v) & 1ull ? 1 : 0;
        int sat = xor_satisfied_count(f, a);
        if (sat > res.best) {
            res.best = sat;
            res.assignment = a;
        }
    }
    return res;
}

XorFormula reduce_to_occurrence3(const XorFormula& f) {
    int n = f.num_vars();
    std::vector<XorClause> out;
    out.reserve(3 * f.clauses().size());
    for (int c = 0; c < f.num_clauses(); ++c) {
        const auto& cl = f.clauses()[static_cast<size_t>(c)];
        Literal a{n + 2 * c, false}, b{n + 2 * c + 1, false};
        out.push_back({cl.first, a});
        out.push_back({cl.second, b});
        out.push_back({a, b});
    }
    return normalize(XorFormula(n + 2 * f.num_clauses(), std::move(out)));
}

std::vector<char> extend_assignment(const XorFormula& original, const std::vector<char>& a) {
    if (static_cast<int>(a.size()) != original.num_vars())
        throw std::invalid_argument("assignment size mismatch");
    std::vector<char> out = a;
    for (const auto& c : original.clauses()) {
        out.push_back(literal_value(c.first, a) ? 0 : 1);
        out.push_back(literal_value(c.second, a) ? 0 : 1);
    }
    return out;
}

// -------------------------------------------------------------- gadget graph

namespace {

GadgetGraph::BranchView flipped(const GadgetGraph::BranchView& b) {
    return {b.v7, b.v8, b.u7, b.u8, b.t};
}

} // namespace

NodeId GadgetGraph::start(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("gadget index out of range");
    return start_[static_cast<size_t>(i)];
}

NodeId GadgetGraph::u(int i, int z) const {
    if (i < 0 || i >= n_ || z < 1 || z > 6) throw std::invalid_argument("trunk index out of range");
    return u_[static_cast<size_t>(i)][static_cast<size_t>(z)];
}

NodeId GadgetGraph::v(int i, int z) const {
    if (i < 0 || i >= n_ || z < 1 || z > 6) throw std::invalid_argument("trunk index out of range");
    return v_[static_cast<size_t>(i)][static_cast<size_t>(z)];
}

const GadgetGraph::BranchView& GadgetGraph::branch_view(int i, int p) const {
    if (i < 0 || i >= n_ || p < 0 || p > 2) throw std::invalid_argument("slot index out of range");
    return slot_view_[static_cast<size_t>(i)][static_cast<size_t>(p)];
}

int GadgetGraph::branch_of(int i, int p) const {
    if (i < 0 || i >= n_ || p < 0 || p > 2) throw std::invalid_argument("slot index out of range");
    return slot_branch_[static_cast<size_t>(i)][static_cast<size_t>(p)];
}

int GadgetGraph::single_branch_count() const {
    int count = 0;
    for (const auto& b : branches_) count += b.owners.size() == 1;
    return count;
}

int GadgetGraph::shared_branch_count() const {
    int count = 0;
    for (const auto& b : branches_) count += b.owners.size() == 2;
    return count;
}

int GadgetGraph::diameter() const { return tgraph::diameter(graph_); }

bool GadgetGraph::layering_intact() const {
    for (const auto& [a, b] : graph_.edges()) {
        int la = layer_[static_cast<size_t>(a)], lb = layer_[static_cast<size_t>(b)];
        bool forward = lb == la + 1;
        bool paired = lb == la && graph_.has_edge(b, a);
        if (!forward && !paired) return false;
    }
    return true;
}

int GadgetGraph::max_directed_cycle_length() const {
    int N = graph_.node_count();
    long long budget = 10'000'000;
    int best = 0;
    std::vector<char> can_reach(static_cast<size_t>(N)), on_path(static_cast<size_t>(N));
    for (NodeId s = 0; s < N; ++s) {
        // Only nodes that can reach s may lie on a cycle through s; cycles
        // are counted once, from their lowest node.
        std::fill(can_reach.begin(), can_reach.end(), 0);
        can_reach[static_cast<size_t>(s)] = 1;
        std::vector<NodeId> stack{s};
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : graph_.in_neighbors(x))
                if (y >= s && !can_reach[static_cast<size_t>(y)]) {
                    can_reach[static_cast<size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[static_cast<size_t>(s)] = 1;
        auto dfs = [&](auto&& self, NodeId x, int len) -> void {
            if (--budget < 0) throw GuardExceeded("cycle search budget exhausted");
            for (NodeId y : graph_.out_neighbors(x)) {
                if (y == s) {
                    best = std::max(best, len + 1);
                } else if (y > s && !on_path[static_cast<size_t>(y)] &&
                           can_reach[static_cast<size_t>(y)]) {
                    on_path[static_cast<size_t>(y)] = 1;
                    self(self, y, len + 1);
                    on_path[static_cast<size_t>(y)] = 0;
                }
            }
        };
        dfs(dfs, s, 0);
    }
    return best;
}

int GadgetGraph::count_length9_paths(int i, int p) const {
    NodeId target = branches_[static_cast<size_t>(branch_of(i, p))].canonical.t;
    std::vector<char> on_path(static_cast<size_t>(graph_.node_count()), 0);
    int count = 0;
    auto dfs = [&](auto&& self, NodeId x, int len) -> void {
        if (len == 9) {
            count += x == target;
            return;
        }
        for (NodeId y : graph_.out_neighbors(x)) {
            if (on_path[static_cast<size_t>(y)]) continue;
            on_path[static_cast<size_t>(y)] = 1;
            self(self, y, len + 1);
            on_path[static_cast<size_t>(y)] = 0;
        }
    };
    NodeId s = start(i);
    on_path[static_cast<size_t>(s)] = 1;
    dfs(dfs, s, 0);
    return count;
}

GadgetGraph build_gadget_graph(const XorFormula& f) {
    if (!f.is_normalized())
        throw std::invalid_argument("formula must be normalized");
    if (f.max_variable_occurrence() > 3)
        throw std::invalid_argument("a variable occurs in more than three clauses");
    GadgetGraph gg;
    gg.formula_ = f;
    int n = gg.n_ = f.num_vars();
    gg.m_ = f.num_clauses();

    auto add_node = [&gg](std::string name, int layer) {
        gg.names_.push_back(std::move(name));
        gg.layer_.push_back(layer);
        return static_cast<NodeId>(gg.names_.size() - 1);
    };
    gg.start_.resize(static_cast<size_t>(n));
    gg.u_.resize(static_cast<size_t>(n));
    gg.v_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string si = std::to_string(i);
        gg.start_[static_cast<size_t>(i)] = add_node("s" + si, 0);
        for (int z = 1; z <= 6; ++z)
            gg.u_[static_cast<size_t>(i)][static_cast<size_t>(z)] =
                add_node("u" + si + "_" + std::to_string(z), z);
        for (int z = 1; z <= 6; ++z)
            gg.v_[static_cast<size_t>(i)][static_cast<size_t>(z)] =
                add_node("v" + si + "_" + std::to_string(z), z);
    }

    auto make_branch = [&](int i, int p) {
        std::string tag = std::to_string(i) + "_" + std::to_string(p);
        GadgetGraph::BranchView bv;
        bv.u7 = add_node("u" + tag + "_7", 7);
        bv.u8 = add_node("u" + tag + "_8", 8);
        bv.v7 = add_node("v" + tag + "_7", 7);
        bv.v8 = add_node("v" + tag + "_8", 8);
        bv.t = add_node("t" + tag, 9);
        return bv;
    };
    gg.slot_branch_.assign(static_cast<size_t>(n), {-1, -1, -1});
    gg.slot_view_.resize(static_cast<size_t>(n));
    std::vector<int> used(static_cast<size_t>(n), 0);
    for (const auto& c : f.clauses()) {
        int i = c.first.var, j = c.second.var;
        bool swap_partner = !c.second.negated;
        int pi = used[static_cast<size_t>(i)]++;
        int pj = used[static_cast<size_t>(j)]++;
        int b = static_cast<int>(gg.branches_.size());
        GadgetGraph::Branch br;
        br.canonical = make_branch(i, pi);
        br.owners.push_back({i, pi, 0});
        br.owners.push_back({j, pj, swap_partner ? 1 : 0});
        gg.slot_branch_[static_cast<size_t>(i)][static_cast<size_t>(pi)] = b;
        gg.slot_view_[static_cast<size_t>(i)][static_cast<size_t>(pi)] = br.canonical;
        gg.slot_branch_[static_cast<size_t>(j)][static_cast<size_t>(pj)] = b;
        gg.slot_view_[static_cast<size_t>(j)][static_cast<size_t>(pj)] =
            swap_partner ? flipped(br.canonical) : br.canonical;
        gg.branches_.push_back(std::move(br));
    }
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < 3; ++p) {
            if (gg.slot_branch_[static_cast<size_t>(i)][static_cast<size_t>(p)] >= 0) continue;
            int b = static_cast<int>(gg.branches_.size());
            GadgetGraph::Branch br;
            br.canonical = make_branch(i, p);
            br.owners.push_back({i, p, 0});
            gg.slot_branch_[static_cast<size_t>(i)][static_cast<size_t>(p)] = b;
            gg.slot_view_[static_cast<size_t>(i)][static_cast<size_t>(p)] = br.canonical;
            gg.branches_.push_back(std::move(br));
        }
    }

    std::vector<Edge> arcs;
    for (int i = 0; i < n; ++i) {
        NodeId s = gg.start_[static_cast<size_t>(i)];
        const auto& u = gg.u_[static_cast<size_t>(i)];
        const auto& v = gg.v_[static_cast<size_t>(i)];
        arcs.emplace_back(s, u[1]);
        arcs.emplace_back(s, v[1]);
        for (int z = 1; z <= 5; ++z) {
            arcs.emplace_back(u[static_cast<size_t>(z)], u[static_cast<size_t>(z) + 1]);
            arcs.emplace_back(v[static_cast<size_t>(z)], v[static_cast<size_t>(z) + 1]);
        }
        for (int z = 1; z <= 6; ++z) {
            arcs.emplace_back(u[static_cast<size_t>(z)], v[static_cast<size_t>(z)]);
            arcs.emplace_back(v[static_cast<size_t>(z)], u[static_cast<size_t>(z)]);
        }
        for (int p = 0; p < 3; ++p) {
            const auto& view = gg.slot_view_[static_cast<size_t>(i)][static_cast<size_t>(p)];
            arcs.emplace_back(u[6], view.u7);
            arcs.emplace_back(v[6], view.v7);
        }
    }
    for (const auto& br : gg.branches_) {
        const auto& c = br.canonical;
        arcs.emplace_back(c.u7, c.u8);
        arcs.emplace_back(c.u8, c.t);
        arcs.emplace_back(c.v7, c.v8);
        arcs.emplace_back(c.v8, c.t);
        arcs.emplace_back(c.u7, c.v7);
        arcs.emplace_back(c.v7, c.u7);
        arcs.emplace_back(c.u8, c.v8);
        arcs.emplace_back(c.v8, c.u8);
    }
    gg.graph_ = StaticGraph::directed(static_cast<int>(gg.names_.size()), arcs);
    return gg;
}

Labeling labeling_from_assignment(const GadgetGraph& gg, const std::vector<char>& assignment) {
    int n = gg.gadget_count();
    if (static_cast<int>(assignment.size()) != n)
        throw std::invalid_argument("assignment size mismatch");
    Labeling lab;
    for (int i = 0; i < n; ++i) {
        bool vside = assignment[static_cast<size_t>(i)] != 0;
        auto K = [&](int z) { return vside ? gg.v(i, z) : gg.u(i, z); };
        auto D = [&](int z) { return vside ? gg.u(i, z) : gg.v(i, z); };
        lab.add_label(Edge{gg.start(i), K(1)}, 1);
        for (int z = 1; z <= 5; ++z) lab.add_label(Edge{K(z), K(z + 1)}, z + 1);
        for (int z = 1; z <= 6; ++z) {
            lab.add_label(Edge{D(z), K(z)}, z);      // step onto the live chain
            lab.add_label(Edge{K(z), D(z)}, z + 1);  // step off to reach d_z
        }
        for (int p = 0; p < 3; ++p) {
            const auto& view = gg.branch_view(i, p);
            lab.add_label(Edge{K(6), vside ? view.v7 : view.u7}, 7);
        }
    }
    for (const auto& br : gg.branches()) {
        bool lit_u = false, lit_v = false;
        for (const auto& owner : br.owners) {
            bool owner_v = assignment[static_cast<size_t>(owner[0])] != 0;
            (owner_v != (owner[2] != 0) ? lit_v : lit_u) = true;
        }
        const auto& c = br.canonical;
        if (lit_u && lit_v) {
            // Unsatisfied shared clause: both chains live, crosses late.
            lab.add_label(Edge{c.u7, c.u8}, 8);
            lab.add_label(Edge{c.u8, c.t}, 9);
            lab.add_label(Edge{c.v7, c.v8}, 8);
            lab.add_label(Edge{c.v8, c.t}, 9);
            lab.add_label(Edge{c.u7, c.v7}, 8);
            lab.add_label(Edge{c.v7, c.u7}, 8);
            lab.add_label(Edge{c.u8, c.v8}, 9);
            lab.add_label(Edge{c.v8, c.u8}, 9);
        } else {
            NodeId l7 = lit_u ? c.u7 : c.v7, l8 = lit_u ? c.u8 : c.v8;
            NodeId o7 = lit_u ? c.v7 : c.u7, o8 = lit_u ? c.v8 : c.u8;
            lab.add_label(Edge{l7, l8}, 8);
            lab.add_label(Edge{l8, c.t}, 9);
            lab.add_label(Edge{l7, o7}, 8);
            lab.add_label(Edge{o7, l7}, 7);
            lab.add_label(Edge{l8, o8}, 9);
            lab.add_label(Edge{o8, l8}, 8);
        }
    }
    return lab;
}

int gadget_labeling_cost(int n, int m, int satisfied) {
    return 39 * n - 4 * m - 2 * satisfied;
}

namespace {

// The cross arcs of a branch, in a fixed order for the repair search.
std::array<Edge, 4> cross_edges(const GadgetGraph::Branch& br) {
    const auto& c = br.canonical;
    return {Edge{c.u7, c.v7}, Edge{c.v7, c.u7}, Edge{c.u8, c.v8}, Edge{c.v8, c.u8}};
}

bool reach_ok(const StaticGraph& g, const Labeling& lab) {
    return preserves_reach_within_age(build_temporal_graph(g, lab), 9);
}

/// Retime the four cross arcs of one shared branch so that the whole
/// labeling preserves reachability again; tries the canonical patterns
/// first, then everything. Each cross arc ends with exactly one label.
bool repair_branch_crosses(const StaticGraph& g, Labeling& lab, const GadgetGraph::Branch& br) {
    auto edges = cross_edges(br);
    std::array<std::vector<Label>, 4> saved;
    for (int e = 0; e < 4; ++e) saved[static_cast<size_t>(e)] = lab.labels(edges[static_cast<size_t>(e)]);
    std::vector<std::array<Label, 4>> candidates = {
        {8, 8, 9, 9},  // both chains live
        {8, 7, 9, 8},  // u-chain live
        {7, 8, 8, 9},  // v-chain live
    };
    for (Label c1 = 1; c1 <= 9; ++c1)
        for (Label c2 = 1; c2 <= 9; ++c2)
            for (Label c3 = 1; c3 <= 9; ++c3)
                for (Label c4 = 1; c4 <= 9; ++c4)
                    candidates.push_back({c1, c2, c3, c4});
    for (const auto& cand : candidates) {
        for (int e = 0; e < 4; ++e)
            lab.set_labels(edges[static_cast<size_t>(e)], {cand[static_cast<size_t>(e)]});
        if (reach_ok(g, lab)) return true;
    }
    for (int e = 0; e < 4; ++e)
        lab.set_labels(edges[static_cast<size_t>(e)], saved[static_cast<size_t>(e)]);
    return false;
}

} // namespace

ExtractionResult assignment_from_labeling(const GadgetGraph& gg, const Labeling& lambda) {
    const StaticGraph& g = gg.graph();
    if (lambda.max_label() && *lambda.max_label() > 9)
        throw std::invalid_argument("labeling must use labels 1..9");
    if (!reach_ok(g, lambda))
        throw std::invalid_argument("labeling does not preserve reachability within age 9");

    Labeling lab = lambda;
    int n = gg.gadget_count();
    auto labeled = [&lab](NodeId a, NodeId b) { return !lab.labels(Edge{a, b}).empty(); };
    auto chain_full = [&](int i, bool vside) {
        NodeId prev = gg.start(i);
        for (int z = 1; z <= 6; ++z) {
            NodeId next = vside ? gg.v(i, z) : gg.u(i, z);
            if (!labeled(prev, next)) return false;
            prev = next;
        }
        return true;
    };
    // Missing labels on the branch route of one side of slot (i,p):
    // transition at 7, then the two chain arcs at 8 and 9.
    auto route_missing = [&](int i, int p, bool vside) {
        const auto& view = gg.branch_view(i, p);
        NodeId n7 = vside ? view.v7 : view.u7;
        NodeId n8 = vside ? view.v8 : view.u8;
        NodeId k6 = vside ? gg.v(i, 6) : gg.u(i, 6);
        return !labeled(k6, n7) + !labeled(n7, n8) + !labeled(n8, view.t);
    };

    int rewrites = 0;
    for (;;) {
        int target = -1;
        for (int i = 0; i < n; ++i)
            if (chain_full(i, false) && chain_full(i, true)) {
                target = i;
                break;
            }
        if (target < 0) break;

        int miss_u = 0, miss_v = 0;
        for (int p = 0; p < 3; ++p) {
            miss_u += route_missing(target, p, false);
            miss_v += route_missing(target, p, true);
        }
        bool keep_v = miss_v < miss_u;
        auto K = [&](int z) { return keep_v ? gg.v(target, z) : gg.u(target, z); };
        auto D = [&](int z) { return keep_v ? gg.u(target, z) : gg.v(target, z); };
        NodeId s = gg.start(target);

        lab.clear_labels(Edge{s, D(1)});
        for (int z = 1; z <= 5; ++z) lab.clear_labels(Edge{D(z), D(z + 1)});
        lab.set_labels(Edge{s, K(1)}, {1});
        for (int z = 1; z <= 5; ++z) lab.set_labels(Edge{K(z), K(z + 1)}, {z + 1});
        for (int z = 1; z <= 6; ++z) {
            lab.set_labels(Edge{D(z), K(z)}, {z});
            lab.set_labels(Edge{K(z), D(z)}, {z + 1});
        }
        for (int p = 0; p < 3; ++p) {
            const auto& view = gg.branch_view(target, p);
            NodeId k7 = keep_v ? view.v7 : view.u7, k8 = keep_v ? view.v8 : view.u8;
            NodeId d7 = keep_v ? view.u7 : view.v7, d8 = keep_v ? view.u8 : view.v8;
            lab.clear_labels(Edge{D(6), d7});
            lab.set_labels(Edge{K(6), k7}, {7});
            const auto& br = gg.branches()[static_cast<size_t>(gg.branch_of(target, p))];
            if (br.owners.size() == 1) {
                lab.set_labels(Edge{k7, k8}, {8});
                lab.set_labels(Edge{k8, view.t}, {9});
                lab.set_labels(Edge{k7, d7}, {8});
                lab.set_labels(Edge{d7, k7}, {7});
                lab.set_labels(Edge{k8, d8}, {9});
                lab.set_labels(Edge{d8, k8}, {8});
                lab.clear_labels(Edge{d7, d8});
                lab.clear_labels(Edge{d8, view.t});
            } else {
                // Shared with another gadget: only add what our route needs.
                lab.add_label(Edge{k7, k8}, 8);
                lab.add_label(Edge{k8, view.t}, 9);
            }
        }
        if (!reach_ok(g, lab)) {
            bool fixed = false;
            for (int p = 0; p < 3 && !fixed; ++p) {
                const auto& br = gg.branches()[static_cast<size_t>(gg.branch_of(target, p))];
                if (br.owners.size() == 2) fixed = repair_branch_crosses(g, lab, br);
            }
            if (!fixed || !reach_ok(g, lab))
                throw std::logic_error("rewrite could not restore reachability");
        }
        ++rewrites;
    }

    std::vector<char> assignment(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        bool pu = chain_full(i, false), pv = chain_full(i, true);
        if (pu == pv)
            throw std::invalid_argument("labeling leaves a trunk without a complete chain");
        assignment[static_cast<size_t>(i)] = pv ? 1 : 0;
    }
    return {std::move(assignment), std::move(lab), rewrites};
}

} // namespace tgraph
