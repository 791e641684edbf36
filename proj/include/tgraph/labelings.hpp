#pragma once

#include "tgraph/core.hpp"

namespace tgraph {

/// Longest finite shortest-path distance (0 when no pair is connected).
int diameter(const StaticGraph& g);

/// Strongly connected components, one vector of nodes each, in a
/// topological order of the condensation (sources first, deterministic).
std::vector<std::vector<NodeId>> strongly_connected_components(const StaticGraph& g);

/// Every edge gets {1..p(G)}: preserves all paths on any graph, at the price
/// of p(G) labels per edge. Guarded through the longest-path search.
Labeling label_all_paths_trivial(const StaticGraph& g, int node_guard = 12);

/// Directed ring: edge i along the cycle gets {i+1, n+i+1}, two labels per
/// edge, preserving all paths. The graph must be a single directed cycle.
Labeling label_ring_all_paths(const StaticGraph& ring);

/// DAG: every edge carries one label, the 1-based topological index of its
/// tail, which is increasing along any path.
Labeling label_dag_all_paths(const StaticGraph& dag);

/// Strongly connected graph: label an in-tree of the root with 1..k upward
/// (deeper edges earlier) and an out-tree with k+1.. outward. Any node
/// reaches any other through the root with at most 2 labels per edge.
Labeling label_strongly_connected_reach(const StaticGraph& g, NodeId root);

/// General digraph: each strongly connected component is labeled in its own
/// time window (components in topological order, windows separated by one
/// step), and edges leaving a component get the label just above its window.
Labeling label_reach(const StaticGraph& g);

/// Undirected tree, diameter d: leaf edges get {1, d}; walking up, an edge
/// gets slots (max child slot1 + 1, min child slot2 - 1). Two labels per
/// edge, maximum label d, preserves all paths. Rooted at node 0.
Labeling label_tree_all_paths(const StaticGraph& tree);

/// Ring with age budget (n-1)+k: k = 0 gives every edge {1..n-1}; otherwise
/// each round starts a label run 1, 2, ... at edge i*(k+1), walking the ring
/// so that the k+1 edges after the start can head a full-circle journey.
/// At most ceil(n/(k+1)) + 1 labels per edge.
Labeling label_ring_tradeoff(const StaticGraph& ring, int k);

struct BfsLabelingResult {
    Labeling labeling;        // union of all trees (shared labels stored once)
    long long per_tree_cost;  // sum of tree sizes, equals r(G)
    int stored_cost;          // labeling.size()
    Label max_label;          // bounded by the diameter
};

/// One BFS out-tree per source (children in ascending id order); a tree edge
/// at depth i gets label i. Journeys down a tree realize every reachable
/// pair. Requires a weakly connected graph.
BfsLabelingResult label_reach_diameter_bfs(const StaticGraph& g);

} // namespace tgraph
