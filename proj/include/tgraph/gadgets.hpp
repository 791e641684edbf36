#pragma once

#include "tgraph/core.hpp"

#include <array>

namespace tgraph {

// ----------------------------------------------------------- XOR 2-SAT side

struct Literal {
    int var = 0; // 0-based
    bool negated = false;
    auto operator<=>(const Literal&) const = default;
};

struct XorClause {
    Literal first, second;
    auto operator<=>(const XorClause&) const = default;
};

/// Conjunction of two-literal XOR constraints: a clause is satisfied when its
/// literals evaluate to different values.
class XorFormula {
public:
    XorFormula() = default;
    XorFormula(int num_vars, std::vector<XorClause> clauses);

    int num_vars() const { return num_vars_; }
    int num_clauses() const { return static_cast<int>(clauses_.size()); }
    const std::vector<XorClause>& clauses() const { return clauses_; }

    /// Normal form: first literal positive, vars ordered within each clause
    /// (so clauses look like (x_i or x_j) or (x_i or not x_j), i < j).
    bool is_normalized() const;

    int literal_occurrences(const Literal& l) const;
    int variable_occurrences(int var) const;
    int max_literal_occurrence() const;
    int max_variable_occurrence() const;

private:
    int num_vars_ = 0;
    std::vector<XorClause> clauses_;
};

bool literal_value(const Literal& l, const std::vector<char>& assignment);
bool xor_satisfied(const XorClause& c, const std::vector<char>& assignment);
int xor_satisfied_count(const XorFormula& f, const std::vector<char>& assignment);

/// Rewrites every clause into normal form. Negating both literals of an XOR
/// clause does not change it, so this is truth-preserving. Degenerate
/// clauses over a single variable are rejected.
XorFormula normalize(const XorFormula& f);

struct MaxXorResult {
    int best = 0;
    std::vector<char> assignment;
};

/// Exhaustive maximum over all assignments; first maximizer in counting
/// order. Guarded at var_guard variables.
MaxXorResult max_xor_brute(const XorFormula& f, int var_guard = 20);

/// Occurrence-reducing rewrite: clause (l1 or l2) becomes the three clauses
/// (l1 or a), (l2 or b), (a or b) over fresh variables a, b. The optimum
/// shifts by exactly 2m; fresh variables occur twice each while original
/// literal counts are unchanged.
XorFormula reduce_to_occurrence3(const XorFormula& f);

/// The assignment of the reduced formula that realizes opt + 2m: fresh
/// variables take the complement of the literal they are paired with.
std::vector<char> extend_assignment(const XorFormula& original, const std::vector<char>& a);

// -------------------------------------------------------------- gadget graph

/// Hardness gadget for the reach-labeling cost problem. One gadget per
/// variable: two parallel directed chains of six nodes from a start node,
/// linked by two-cycles at every level, ending in three branches of five
/// nodes each. Clauses merge one branch of each of their two variables
/// (orientation swapped for (x or y), aligned for (x or not y)).
class GadgetGraph {
public:
    struct BranchView {
        // The branch seen from one owning gadget: u7/u8 continue the owner's
        // u-chain, v7/v8 the v-chain, t is the branch sink.
        NodeId u7, u8, v7, v8, t;
    };
    struct Branch {
        BranchView canonical;               // the first owner's orientation
        std::vector<std::array<int, 3>> owners; // (gadget, slot, swapped)
    };

    const StaticGraph& graph() const { return graph_; }
    const XorFormula& formula() const { return formula_; }
    int gadget_count() const { return n_; }
    int clause_count() const { return m_; }

    NodeId start(int i) const;          // s of gadget i
    NodeId u(int i, int z) const;       // z in 1..6
    NodeId v(int i, int z) const;
    const BranchView& branch_view(int i, int p) const; // p in 0..2, i's orientation
    const std::vector<Branch>& branches() const { return branches_; }
    int branch_of(int i, int p) const;  // index into branches()

    int single_branch_count() const;
    int shared_branch_count() const;
    const std::string& node_name(NodeId x) const { return names_[x]; }

    /// Longest finite shortest-path distance.
    int diameter() const;
    /// Every arc either advances one structural layer or sits inside a
    /// two-cycle pair, which bounds directed cycles at length two.
    bool layering_intact() const;
    /// Length of the longest simple directed cycle, found by search with an
    /// expansion budget (the structure keeps this cheap).
    int max_directed_cycle_length() const;
    /// Number of simple paths of length exactly 9 from start(i) to the sink
    /// of branch (i,p); the construction promises exactly two.
    int count_length9_paths(int i, int p) const;

    friend GadgetGraph build_gadget_graph(const XorFormula&);

private:
    XorFormula formula_;
    StaticGraph graph_;
    int n_ = 0, m_ = 0;
    std::vector<NodeId> start_;
    std::vector<std::array<NodeId, 7>> u_, v_; // index 1..6 used
    std::vector<std::array<int, 3>> slot_branch_;      // gadget,slot -> branch id
    std::vector<std::array<BranchView, 3>> slot_view_; // gadget,slot -> owner view
    std::vector<Branch> branches_;
    std::vector<std::string> names_;
    std::vector<int> layer_;
};

/// Requires a normalized formula in which every variable appears in at most
/// three clauses (three branch slots per gadget).
GadgetGraph build_gadget_graph(const XorFormula& f);

/// The canonical labeling encoding an assignment: 18 labels per trunk on the
/// side selected by the variable's value, one transition label per branch
/// slot, and a fixed branch pattern costing 6 per single-owner or satisfied
/// branch and 8 per unsatisfied shared branch. Total cost is exactly
/// 39n - 4m - 2k for k XOR-satisfied clauses.
Labeling labeling_from_assignment(const GadgetGraph& g, const std::vector<char>& assignment);

int gadget_labeling_cost(int n, int m, int satisfied);

struct ExtractionResult {
    std::vector<char> assignment;
    Labeling rewritten;     // input after normalization rewrites
    int rewrites = 0;       // gadgets whose redundant side was stripped
};

/// Reads an assignment off a reach-preserving labeling with labels <= 9.
/// Gadgets with both trunk sides fully labeled are first rewritten to keep
/// only the cheaper side (strictly reducing the label count, re-verified);
/// afterwards each trunk has exactly one fully labeled side, which names the
/// variable's value.
ExtractionResult assignment_from_labeling(const GadgetGraph& g, const Labeling& lambda);

} // namespace tgraph
