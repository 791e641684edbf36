#pragma once

#include <compare>
#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgraph {

using NodeId = int;
using Label = int; // discrete availability time, always >= 1

/// Thrown when an operation would exceed its enumeration guard
/// (exponential searches are refused above a size limit unless overridden).
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A stored edge. Directed graphs keep (u,v) as given; undirected graphs
/// store the canonical orientation u < v and are traversable both ways.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// One traversal step: edge taken in direction from->to at time `label`.
struct TimeEdge {
    NodeId from = 0;
    NodeId to = 0;
    Label label = 0;
    auto operator<=>(const TimeEdge&) const = default;
};

/// Underlying (di)graph: nodes 0..n-1, no self-loops, no duplicate edges,
/// optional strictly positive edge weights.
class StaticGraph {
public:
    StaticGraph() = default;

    static StaticGraph directed(int node_count, const std::vector<Edge>& edges);
    static StaticGraph undirected(int node_count, const std::vector<Edge>& edges);

    int node_count() const { return n_; }
    bool is_directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Canonical stored form of an edge given a traversal direction.
    Edge edge_key(NodeId from, NodeId to) const;
    bool has_edge(NodeId from, NodeId to) const;
    std::optional<int> edge_index(const Edge& e) const;

    /// Nodes reachable in one step from u (respecting direction).
    const std::vector<NodeId>& out_neighbors(NodeId u) const;
    /// Nodes with an edge into u (equals out_neighbors for undirected graphs).
    const std::vector<NodeId>& in_neighbors(NodeId u) const;

    void set_weights(const std::map<Edge, double>& w);
    bool has_weights() const { return !weights_.empty(); }
    double weight(const Edge& e) const;

    /// Set of nodes reachable from u by any directed path, excluding u itself.
    std::vector<NodeId> reachable_from(NodeId u) const;
    bool is_weakly_connected() const;

private:
    StaticGraph(int n, bool directed, std::vector<Edge> edges);
    void check_node(NodeId x) const;

    int n_ = 0;
    bool directed_ = true;
    std::vector<Edge> edges_;               // sorted, unique
    std::map<Edge, double> weights_;        // empty unless weighted
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
};

/// Convenience factories for the graph families used throughout.
StaticGraph directed_ring(int n);
StaticGraph directed_line(int n);
StaticGraph complete_digraph(int n);
StaticGraph grid_graph(int width, int height); // undirected, node = row*width+col

/// Per-edge label sets. Sets are kept sorted and duplicate-free;
/// all labels are >= 1.
class Labeling {
public:
    Labeling() = default;

    void set_labels(const Edge& e, std::vector<Label> labels);
    void add_label(const Edge& e, Label l);
    void remove_label(const Edge& e, Label l);
    void clear_labels(const Edge& e);

    const std::vector<Label>& labels(const Edge& e) const;
    bool has_labels(const Edge& e) const;
    const std::map<Edge, std::vector<Label>>& all() const { return labels_; }

    /// Total number of labels, |lambda|.
    int size() const;
    bool empty() const { return size() == 0; }

    std::optional<Label> min_label() const;
    std::optional<Label> max_label() const;
    /// Age alpha = max - min + 1; empty labelings have no age.
    std::optional<int> age() const;

    /// max_e |lambda(e)| over edges that carry labels (the temporality metric).
    int max_labels_per_edge() const;
    /// Synonym for size(): the temporal cost metric.
    int total_cost() const { return size(); }

    /// New labeling with every label shifted by delta.
    Labeling shifted(int delta) const;

private:
    std::map<Edge, std::vector<Label>> labels_;
};

class TemporalGraph {
public:
    TemporalGraph() = default;

    const StaticGraph& graph() const { return graph_; }
    const Labeling& labeling() const { return labeling_; }

    int time_edge_count() const { return labeling_.size(); } // m_t
    Label lambda_min() const;                                 // requires labels
    Label lambda_max() const;
    int age() const;

    /// All time-edges as directed traversal steps, sorted by (label, from, to).
    /// Undirected edges contribute one step per direction.
    std::vector<TimeEdge> time_edges() const;

    friend TemporalGraph build_temporal_graph(const StaticGraph&, const Labeling&);

private:
    StaticGraph graph_;
    Labeling labeling_;
};

/// Validates that every labeled edge exists and all labels are >= 1.
/// Throws std::invalid_argument otherwise.
TemporalGraph build_temporal_graph(const StaticGraph& graph, const Labeling& labeling);

/// The r-th instance: (V, E(r)) with E(r) = { e : r in lambda(e) }.
StaticGraph instance_at(const TemporalGraph& tg, Label r);

/// Layered DAG with one node copy per time level lambda_min-1 .. lambda_max.
/// Vertical arcs connect consecutive copies of a node; a diagonal arc
/// (level i-1, u) -> (level i, w) exists when (u,w) is traversable at time i.
class StaticExpansion {
public:
    struct Arc {
        int from_level, from_node;
        int to_level, to_node;
        bool diagonal;
        Label time; // == to_level
    };

    Label min_level() const { return min_level_; }
    Label max_level() const { return max_level_; }
    int level_count() const { return max_level_ - min_level_ + 1; }
    int node_count() const { return n_; }
    int time_node_count() const { return level_count() * n_; }

    const std::vector<Arc>& arcs() const { return arcs_; }
    int diagonal_arc_count() const;
    int vertical_arc_count() const;

    /// Arcs only ever go from one level to the next, so this always holds;
    /// exposed so tests can assert it independently.
    bool is_acyclic() const;

    friend StaticExpansion static_expansion(const TemporalGraph&);

private:
    int n_ = 0;
    Label min_level_ = 0, max_level_ = 0;
    std::vector<Arc> arcs_;
};

/// Requires a nonempty labeling.
StaticExpansion static_expansion(const TemporalGraph& tg);

/// Journey: simple path traversed with strictly increasing labels.
class Journey {
public:
    Journey() = default;
    explicit Journey(std::vector<TimeEdge> steps) : steps_(std::move(steps)) {}

    const std::vector<TimeEdge>& steps() const { return steps_; }
    bool is_empty() const { return steps_.empty(); }
    int hops() const { return static_cast<int>(steps_.size()); }

    Label departure() const { return steps_.front().label; } // d(J), requires nonempty
    Label arrival() const { return steps_.back().label; }    // a(J)
    int duration() const { return is_empty() ? 0 : arrival() - departure() + 1; }

    /// Visited nodes in order (hops()+1 entries for a nonempty journey).
    std::vector<NodeId> nodes() const;

    double total_weight(const StaticGraph& g) const;

    bool operator==(const Journey&) const = default;

private:
    std::vector<TimeEdge> steps_;
};

/// True iff the steps form a simple path of tg's underlying graph with
/// strictly increasing labels, each drawn from the traversed edge's set.
/// The empty sequence is a valid (0-hop) journey.
bool is_journey(const TemporalGraph& tg, const std::vector<TimeEdge>& steps);

std::string to_string(const Journey& j);

} // namespace tgraph
