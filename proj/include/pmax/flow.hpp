#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmax/common.hpp"

namespace pmax {

// Unit-capacity directed network. Between two vertices at most one of (u,v)
// and (v,u) may be present, and self-arcs are rejected; inputs that need
// parallel or antiparallel arcs go through normalize_capacities instead.
struct Network {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    int s = 0;
    int t = 0;

    Network() = default;
    Network(int n_, std::vector<std::pair<int, int>> arcs_, int s_, int t_);

    int arc_count() const { return int(arcs.size()); }
    // Index of arc (u,v), or -1.
    int arc_index(int u, int v) const;
};

// 0-1 flow aligned with Network::arcs.
struct UnitFlow {
    std::vector<std::uint8_t> on;

    UnitFlow() = default;
    explicit UnitFlow(int arc_count) : on(std::size_t(arc_count), 0) {}

    bool operator==(const UnitFlow& o) const { return on == o.on; }
};

struct ResidualGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

// Throws on size mismatch, non-0/1 values, or violated conservation at a
// vertex outside {s,t}.
void validate_flow(const Network& net, const UnitFlow& f);

// Outflow minus inflow at the source.
int flow_value(const Network& net, const UnitFlow& f);

// Unflowed original arcs plus reversals of flowed arcs.
ResidualGraph build_residual(const Network& net, const UnitFlow& f);

// Shortest s-t path with deterministic tie-breaking: from each vertex, the
// lexicographically smallest successor among those one step closer to t.
// Returns the vertex sequence (just {s} when s == t), or nullopt.
std::optional<std::vector<int>> shortest_path(int n, const std::vector<std::pair<int, int>>& arcs,
                                              int s, int t);
std::optional<std::vector<int>> shortest_path(const ResidualGraph& g, int s, int t);

// One augmentation step along the shortest residual path; fixed point at a
// maximum flow.
UnitFlow augment(const Network& net, const UnitFlow& f);

// k augmentation rounds from the empty flow; stops early at a maximum flow,
// so exactly min(k, maxflow) augment calls happen. augment_calls, when given,
// receives that count.
UnitFlow flow_of_value_k(const Network& net, std::int64_t k, std::int64_t* augment_calls = nullptr);

// k augmentation rounds from f.
UnitFlow flow_update(const Network& net, const UnitFlow& f, std::int64_t k,
                     std::int64_t* augment_calls = nullptr);

// Directed arcs with integer capacity; parallel and antiparallel arcs are
// fine here, normalization removes them.
struct CapArc {
    int u = 0;
    int v = 0;
    std::uint64_t cap = 1;
};

struct CapNetwork {
    int n = 0;
    std::vector<CapArc> arcs;
    int s = 0;
    int t = 0;
};

// Unit network plus the index of the capacitated arc each unit arc came
// from; vertices below original_n are the input's, the rest are midpoints.
struct NormalizedNetwork {
    Network net;
    std::vector<int> arc_origin;
    int original_n = 0;
};

// Expand a capacity-c arc into c parallel unit arcs and subdivide every one
// of them with a fresh midpoint (self-arcs get two midpoints); the result
// honors the one-direction invariant and preserves the maximum flow value.
NormalizedNetwork normalize_capacities(const CapNetwork& cnet);

// Total unit flow through the halves of normalized arcs, per original
// capacitated arc.
std::vector<std::uint64_t> flow_per_origin(const NormalizedNetwork& nn, const UnitFlow& f,
                                           int origin_count);

// "p max n m" header, "n s t" source/sink line, "a u v" arcs (1-based).
Network parse_network(const std::string& text);
std::string to_network_text(const Network& net);

}  // namespace pmax
