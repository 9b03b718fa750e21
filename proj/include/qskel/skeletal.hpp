#pragma once

#include "qskel/plane_sequence.hpp"

namespace qskel {

// The partition is skeletal for q: every class connected and anticonnected, and the
// complement quotient carries no quasicycle.
bool is_skeletal(const Hypergraph3& h, const Quasigraph& q, const Partition& p,
                 CycleSemantics semantics);

// Endpoint choice for closing a quasicycle whose classes sit inside x. Validates: q
// anticonnected on x; partition solid and refining {x, rest}; cycle a quasicycle of
// the complement quotient confined to x; edge a redundant member attaining the
// cycle's exposure. Returns the minimum vertex of the edge inside each of its two
// cycle classes, in class order; assigning that pair keeps x anticonnected (checked).
std::pair<Vertex, Vertex> qc_addition(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                                      const Partition& partition, const ClassCycle& cycle,
                                      EdgeId edge, CycleSemantics semantics);

enum class ImproveReason {
    kDone,
    kAdditionAtStop,        // stop edge unused: close its witness cycle through it
    kRemovalUsedLeading,    // stop edge used: drop it
    kRemovalQuotientCycle,  // pair-graph cycle across classes: drop a leading edge
    kRemovalInnerCycle,     // pair-graph cycle inside one class: drop a cycle edge
};

struct ImproveStep {
    ImproveReason reason = ImproveReason::kDone;
    Quasigraph next;         // == input when done
    EdgeId edge = -1;        // edge acted on (not kDone)
    Vertex u = -1, v = -1;   // endpoints when kAdditionAtStop
    PlaneSequence seq;       // sequence of the input quasigraph
    int compare_result = 0;  // sign of next versus input; 0 when done or tied removal
};

// One improvement move. Done iff the quasigraph is acyclic and its final partition
// is skeletal; otherwise the move strictly increases the record, or keeps it equal
// while dropping a used edge (always checked).
ImproveStep improve_step(const Hypergraph3& h, const Quasigraph& q, CycleSemantics semantics);

struct SkeletalOutcome {
    Hypergraph3 host;
    Quasigraph pi;
    Partition partition;  // final stabilized partition, skeletal for pi
    PlaneSequence seq;
    int steps = 0;  // improvement moves taken
};

// Iterates improve_step to a fixpoint: an acyclic quasigraph whose final partition
// is skeletal.
SkeletalOutcome solve(const Hypergraph3& h, const Quasigraph& start, CycleSemantics semantics);
SkeletalOutcome solve(const Hypergraph3& h, CycleSemantics semantics);

}  // namespace qskel
