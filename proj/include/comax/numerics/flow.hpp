#pragma once

#include <optional>
#include <vector>

namespace comax {

// Integral flow network with per-arc lower bounds (exact_fill forces
// flow == capacity) and per-node supplies (positive = source side).
struct FlowArc {
    int from = 0;
    int to = 0;
    long capacity = 0;
    bool exact_fill = false;
};

struct FlowNetwork {
    int num_nodes = 0;
    std::vector<FlowArc> arcs;
    std::vector<long> supply;  // size num_nodes, sums to zero
};

struct IntegralFlow {
    std::vector<long> arc_flow;  // aligned with FlowNetwork::arcs
};

// Feasible integral flow meeting all supplies and exact-fill arcs, via the
// lower-bound-to-circulation reduction and BFS augmenting paths.
// Empty optional when infeasible.
std::optional<IntegralFlow> max_flow_exact_fill(const FlowNetwork& net);

} // namespace comax
