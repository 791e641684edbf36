#pragma once

#include "tgraph/core.hpp"

namespace tgraph {

/// Result of the single-source earliest-arrival computation started at
/// t_start. arrival[v] is the earliest a(J) over journeys departing at
/// t_start or later; the source is assigned t_start-1 (reached before
/// moving) and is reported as a 0-hop journey. Unreached nodes hold nullopt.
struct ForemostTable {
    NodeId source = 0;
    Label t_start = 1;
    std::vector<std::optional<Label>> arrival;
    std::vector<std::optional<TimeEdge>> pred; // step that first reached v
    std::vector<std::optional<Label>> dep;     // departure of the stored journey
};

/// Sweeps times t_start..lambda_max once, extending the reached set with the
/// time-edges of each instance; O(m_t + n * age). Nodes reached at time t can
/// be extended only at strictly later times. Among simultaneous extensions
/// the lowest tail id wins; with prefer_fastest the latest stored departure
/// wins instead (ties by lowest id), so reconstructed journeys are fastest
/// among foremost.
/// Requires a nonempty labeling and lambda_min <= t_start <= lambda_max.
ForemostTable foremost_journeys(const TemporalGraph& tg, NodeId s, Label t_start,
                                bool prefer_fastest = false);

/// Reconstructs the stored journey to v; nullopt if unreached, the empty
/// journey for v == source.
std::optional<Journey> journey_to(const TemporalGraph& tg, const ForemostTable& table, NodeId v);

std::optional<Journey> foremost_journey(const TemporalGraph& tg, NodeId s, NodeId v,
                                        Label t_start, bool prefer_fastest = false);

/// Minimum-duration journey over all departure times (restarts the foremost
/// sweep from every label available at s). Ties resolve to the earliest
/// departure. Returns the empty journey when s == v.
std::optional<Journey> fastest_journey(const TemporalGraph& tg, NodeId s, NodeId v);

/// Minimum-total-weight journey on an undirected, fully weighted temporal
/// graph. Runs Dijkstra on the incidence graph whose vertices are time-edges
/// plus two fictitious terminal edges at s (label 0) and t (label
/// lambda_max+1); an arc joins incident time-edges with increasing labels and
/// costs the head edge's weight. The returned journey is asserted simple.
/// Directed input is refused.
std::optional<Journey> shortest_weighted_journey(const TemporalGraph& tg, NodeId s, NodeId t);

/// All journeys from s to v (nonempty; s == v yields none), found by depth
/// first search over time-edges with simplicity and label-monotonicity
/// pruning. Deterministic order. Guarded: refuses graphs with more than
/// node_guard nodes or more than time_edge_guard time-edges.
std::vector<Journey> enumerate_journeys(const TemporalGraph& tg, NodeId s, NodeId v,
                                        int node_guard = 20, int time_edge_guard = 64);

} // namespace tgraph
