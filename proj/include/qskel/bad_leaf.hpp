#pragma once

#include <functional>

#include "qskel/skeletal.hpp"

namespace qskel {

// Chooses the root of a pair-graph component; must return a member of it.
using RootPicker = std::function<Vertex(VertexSet)>;

// Tail assignment of an acyclic quasigraph: each used pair, a tree edge of its
// component, gets the endpoint farther from that component's root.
struct Orientation {
    std::vector<Vertex> tail;  // per edge index; -1 for unused edges
};

Orientation orient(const Hypergraph3& h, const Quasigraph& q, const RootPicker& pick_root);
Orientation orient(const Hypergraph3& h, const Quasigraph& q);  // minimum-vertex roots

// Vertices u, ascending, such that: u is a leaf of the pair graph, u lies in exactly
// three hyperedges of which exactly one has size 3, and that 3-edge is used with
// tail u. Requires an acyclic quasigraph.
std::vector<Vertex> bad_leaves(const Hypergraph3& h, const Quasigraph& q,
                               const RootPicker& pick_root);
std::vector<Vertex> bad_leaves(const Hypergraph3& h, const Quasigraph& q);

struct SwitchRecord {
    Vertex pivot = -1;
    std::vector<EdgeId> removed;   // the two 2-edges then the 3-edge at the pivot
    std::vector<Hyperedge> added;  // fresh edges in append order
};

struct SwitchResult {
    Hypergraph3 host;
    Quasigraph pi;
    SwitchRecord record;
};

// Local surgery at a bad leaf u with 2-edges ua, ub and used 3-edge ucd valued
// {u,c}: replaces them by uab (unused), uc (valued {u,c}) and ud (unused) under
// fresh ids. The pair graph is unchanged, so the record of the result never drops
// below the original, and u stops being bad.
SwitchResult switch_at(const Hypergraph3& h, const Quasigraph& q, Vertex u);

// Rewrites a quasicycle of the complement quotient by p across a switch, entry by
// entry: edges away from the pivot carry over; the two 2-edges at the pivot fold
// into the fresh 3-edge; the old 3-edge, kept inside a class by its value, reappears
// as the fresh 2-edge toward its outside vertex.
ClassCycle transfer_quasicycle(const Hypergraph3& h, const Quasigraph& q, const Partition& p,
                               const SwitchResult& sw, const ClassCycle& cycle);

struct NoBadOutcome {
    Hypergraph3 host;  // final hypergraph; switches replace edges
    Quasigraph pi;
    Partition partition;
    PlaneSequence seq;
    std::vector<SwitchRecord> switches;
    int solve_steps = 0;             // improvement moves over all phases
    bool bad_count_monotone = true;  // every switch strictly decreased the bad-leaf count
};

// Alternates solve with a switch at the minimum bad leaf until none remains.
// Progress: solve raises (record, -used edges); a switch keeps both while dropping
// the total size of used edges by one, so phases cannot repeat.
NoBadOutcome solve_no_bad(const Hypergraph3& h, const Quasigraph& start,
                          CycleSemantics semantics);
NoBadOutcome solve_no_bad(const Hypergraph3& h, CycleSemantics semantics);

}  // namespace qskel
