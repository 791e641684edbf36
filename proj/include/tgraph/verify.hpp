#pragma once

#include "tgraph/core.hpp"

namespace tgraph {

enum class PathProperty { AllPaths, Reach };

/// True iff labels can be picked strictly increasing along the given node
/// sequence. Greedily taking the smallest usable label at each step is
/// exact: any valid selection can be exchanged downward onto the greedy one.
/// The sequence must be a simple path of the underlying graph.
bool preserves_path(const TemporalGraph& tg, const std::vector<NodeId>& path);

/// Every simple path of the underlying graph is preserved. It suffices to
/// check unextendable paths, since a preserved path preserves all its
/// contiguous subpaths. Undirected graphs are checked in both traversal
/// directions. Guarded by node count plus a search budget.
bool preserves_all_paths(const TemporalGraph& tg, int node_guard = 12);

/// Every pair u,v with a static path also has a journey (checked with the
/// earliest-arrival sweep from each source at t_start = lambda_min).
bool preserves_reach(const TemporalGraph& tg);

/// preserves_reach and the labeling's age is at most age_max.
bool preserves_reach_within_age(const TemporalGraph& tg, int age_max);

/// All simple directed traversals (paths) of g; each undirected path shows
/// up once per direction. Guarded.
std::vector<std::vector<NodeId>> all_simple_paths(const StaticGraph& g, int node_guard = 12);

/// The paths from all_simple_paths that cannot be extended at either end.
std::vector<std::vector<NodeId>> maximal_simple_paths(const StaticGraph& g, int node_guard = 12);

/// Number of edges of the longest simple path, p(G). Guarded.
int longest_path_length(const StaticGraph& g, int node_guard = 12);

/// Exact minimum over labelings of the largest per-edge label count subject
/// to the property (and optionally a maximum age). Tries per-edge budgets
/// B = 1, 2, ... and exhausts label-set assignments drawn from {1..age_max},
/// or from {1..B*|E|} when the age is unbounded: only the relative order of
/// labels matters, so any feasible labeling compresses into that range.
/// Guarded by edge count.
int oracle_temporality(const StaticGraph& g, PathProperty prop,
                       std::optional<int> age_max = std::nullopt, int edge_guard = 5);

/// Exact minimum total number of labels subject to the property, by
/// exhausting assignments of increasing total count c (universe {1..age_max}
/// or {1..c}). Guarded by edge count.
int oracle_temporal_cost(const StaticGraph& g, PathProperty prop,
                         std::optional<int> age_max = std::nullopt, int edge_guard = 5);

/// Edge kernel: every ordering of the kernel edges is realized by some
/// simple path visiting them in exactly that order (kernel edges may not be
/// used as connectors). Exhaustive permutation-by-permutation search,
/// distance-guided; guarded by kernel size, node count and a search budget.
bool is_edge_kernel(const StaticGraph& g, const std::vector<Edge>& kernel,
                    int kernel_guard = 4, int node_guard = 30);

/// Worst-case ordering for a kernel labeled with k-1 labels per edge: place
/// the edge whose i-th smallest label is largest at position i. No strictly
/// increasing selection along the result exists. Sets larger than k-1 are
/// rejected; smaller ones are padded with fresh labels above the maximum.
std::vector<int> adversarial_permutation(std::vector<std::vector<Label>> kernel_labels);

/// Can one label per set be picked strictly increasing along order pi?
bool permutation_realizable(const std::vector<std::vector<Label>>& kernel_labels,
                            const std::vector<int>& pi);

struct GraphWithKernel {
    StaticGraph graph;
    std::vector<Edge> kernel;
};

/// Complete digraph on n nodes with the matching (0,1),(2,3),... as kernel.
GraphWithKernel clique_kernel(int n);

/// Undirected 2n^2 x 2n grid whose kernel is the n horizontal edges
/// p_i q_i at height n, where p_i sits in column (2i-1)n.
GraphWithKernel grid_kernel(int n);

/// r(G) = sum over u of the number of nodes reachable from u (u excluded).
long long reachability_count(const StaticGraph& g);

} // namespace tgraph
