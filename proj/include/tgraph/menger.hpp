#pragma once

#include "tgraph/core.hpp"
#include "tgraph/journeys.hpp"

#include <map>
#include <optional>

namespace tgraph {

enum class DisjointnessMode { OutDisjoint, InDisjoint, TimeNodeDisjoint, TimeEdgeDisjoint };

struct FlowNetwork {
    enum class ArcKind { Vertical, Diagonal, Gadget, NodeCap };
    struct Arc {
        int from = 0, to = 0;
        int capacity = 0;
        ArcKind kind = ArcKind::Vertical;
        TimeEdge edge{};   // the move realized; meaningful on Diagonal arcs
        NodeId node = -1;  // graph node; meaningful on Gadget and NodeCap arcs
        Label time = 0;    // label of the move, or the occupancy level
    };
    int node_count = 0;
    int source = -1;
    int sink = -1;
    std::vector<Arc> arcs;
};

/// Flow model of disjoint journeys on the level expansion. Waiting arcs
/// carry capacity lambda_max, moves capacity 1. The out (in) mode funnels
/// all moves sharing a departure (arrival) through one capacity-1 gadget
/// arc; the time-node mode splits every level copy of a node, terminals
/// excepted; the time-edge mode is the plain unit-capacity expansion.
FlowNetwork flow_expansion(const TemporalGraph& tg, NodeId s, NodeId v, DisjointnessMode mode);

int max_flow_value(const FlowNetwork& net);

struct NodeTime {
    NodeId node = -1;
    Label time = 0;
    auto operator<=>(const NodeTime&) const = default;
};

/// A set of removals that leaves no (s,v)-journey. Units are mode-typed:
/// node departure times, node arrival times, occupied time-nodes, or
/// time-edges (canonical orientation on undirected graphs).
struct Separator {
    DisjointnessMode mode = DisjointnessMode::OutDisjoint;
    std::vector<NodeTime> node_times;
    std::vector<TimeEdge> time_edges;
    int size() const;
};

struct DisjointJourneys {
    int count = 0;
    std::vector<Journey> witnesses;  // pairwise disjoint in the query's mode
};

/// True when the two journeys are disjoint in the given mode. Equal journeys
/// are never disjoint. Time-node disjointness compares the levels a journey
/// occupies at each inner node, from its arrival until just before its
/// departure; the endpoints s and v are exempt.
bool journeys_disjoint(const TemporalGraph& tg, const Journey& a, const Journey& b,
                       DisjointnessMode mode, NodeId s, NodeId v);
bool pairwise_disjoint(const TemporalGraph& tg, const std::vector<Journey>& js,
                       DisjointnessMode mode, NodeId s, NodeId v);

/// True when the journey is destroyed by one of the separator's removals.
bool journey_blocked(const TemporalGraph& tg, const Journey& j, const Separator& sep,
                     NodeId s, NodeId v);

/// The maximum set of pairwise disjoint (s,v)-journeys. Resolved by max-flow
/// with the flow paths decomposed into witnesses; when loop-erasing the
/// decomposition cannot realize the flow value (possible in the time-node
/// mode and for time-edge mode on undirected graphs, where the flow value
/// only bounds from above), an exact search over enumerated journeys
/// replaces it.
DisjointJourneys max_disjoint_journeys(const TemporalGraph& tg, NodeId s, NodeId v,
                                       DisjointnessMode mode);

/// A minimum separator, built by keeping exactly those candidate removals
/// that lower the surviving disjoint-journey maximum. Its size matches
/// max_disjoint_journeys. Time-node separators do not exist when a time-edge
/// joins s to v directly (a one-hop journey occupies nothing), mirroring the
/// non-adjacency hypothesis of the classical node version; that query throws
/// invalid_argument.
Separator min_separator(const TemporalGraph& tg, NodeId s, NodeId v, DisjointnessMode mode);

/// Rebuilds the temporal graph with the separator's removals applied.
/// Departure and arrival units are only expressible as label deletions on
/// directed graphs; time-node units never are. Throws invalid_argument when
/// the surgery cannot be expressed.
TemporalGraph apply_separator(const TemporalGraph& tg, const Separator& sep);

/// Verifies that no (s,v)-journey survives the removals: through foremost
/// search on the rewritten graph when apply_separator is expressible,
/// otherwise by checking every enumerated journey against the units.
bool separator_disconnects(const TemporalGraph& tg, NodeId s, NodeId v, const Separator& sep);

struct ForemostPacking {
    Label arrival = 0;  // least horizon admitting the requested packing
    std::vector<Journey> journeys;
};

/// The earliest time by which q out-disjoint (s,v)-journeys can all have
/// arrived: binary search over truncation horizons, each tested by flow.
/// Empty when fewer than q out-disjoint journeys exist at any horizon.
std::optional<ForemostPacking> foremost_disjoint_packing(const TemporalGraph& tg, NodeId s,
                                                         NodeId v, int q);

struct MultiSourcePacking {
    bool success = false;
    std::vector<Journey> journeys;  // per source, token-count many; in-graph labels
    int total_tokens = 0;
    // The hypothesis under which success is guaranteed, reported as found.
    bool instances_connected = false;
    bool age_sufficient = false;
};

/// Token gathering: each source holds some tokens which must all reach v
/// along out-disjoint journeys, token counts respected per source. Adds a
/// supersource wired to each source by one edge labeled with that source's
/// token numbers, shifts all original labels above the token range, and
/// asks for a full flow; witnesses are returned stripped back into the
/// original graph.
MultiSourcePacking multi_source_packing(const TemporalGraph& tg,
                                        const std::map<NodeId, int>& sources, NodeId v);

} // namespace tgraph
