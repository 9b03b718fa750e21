#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "qskel/connectivity.hpp"

namespace qskel {

// Position (i, j) in a plane sequence: row i, refinement column j.
// j = kInfJ denotes the stabilized column of a row.
struct StepIndex {
    int i = 0;
    int j = 0;

    static constexpr int kInfJ = std::numeric_limits<int>::max();

    bool operator==(const StepIndex&) const = default;
};

inline int step_compare(StepIndex a, StepIndex b) {
    if (a.i != b.i) return a.i < b.i ? -1 : 1;
    if (a.j != b.j) return a.j < b.j ? -1 : 1;
    return 0;
}

enum class DecisiveKind { kContinue, kStop, kTerminate };

// Decisive entry of a row: a continuation edge or the stop / terminate marker.
struct Decisive {
    DecisiveKind kind = DecisiveKind::kTerminate;
    EdgeId edge = -1;        // kContinue only
    VertexSet edge_vertices; // kContinue only
    bool edge_used = false;  // kContinue only: whether the quasigraph uses that edge
};

// Order on decisive entries: Terminate below every continuation edge, continuation
// edges by content, every edge below Stop. Terminate is minimal because a terminating
// record is never beaten on a decisive tie, and Stop is maximal so that trading a stop
// for a continuation edge never lowers the record; the improvement and switch
// arguments both lean on exactly this placement. Edge comparison is content-based so
// related hypergraphs compare consistently.
int decisive_compare(const Decisive& a, const Decisive& b);

// A cycle on the quotient by a stabilized partition, stored as (source edge id,
// pair of class indices), ascending by edge id.
using ClassCycle = std::vector<std::pair<EdgeId, VertexSet>>;

// Recorded at a Stop: the chosen weakly redundant leading edge, a quasicycle it
// leads, and that quasicycle's exposure step.
struct StopWitness {
    EdgeId edge = -1;
    VertexSet edge_vertices;
    StepIndex step;
    ClassCycle cycle;
};

struct PlaneSequenceRow {
    // refinement chain j = 0.. stored through the first occurrence of the
    // stabilized value (later columns repeat it)
    std::vector<Partition> partitions;
    Decisive decisive;
    std::optional<StopWitness> witness;  // present iff decisive is Stop

    const Partition& limit() const { return partitions.back(); }
    int last_j() const { return static_cast<int>(partitions.size()) - 1; }
};

// The full refinement record of a quasigraph: rows of partitions interleaving
// component and anticomponent refinements, each closed by a decisive entry, ending
// at the first Stop or Terminate. Self-contained: carries its host and quasigraph.
struct PlaneSequence {
    Hypergraph3 host;
    Quasigraph pi;
    CycleSemantics semantics = CycleSemantics::kMultigraph;
    std::vector<PlaneSequenceRow> rows;

    const Partition& final_partition() const { return rows.back().limit(); }
};

// P_{i,j}: row i clamped to the last row, column j clamped to the stabilized value.
const Partition& partition_at(const PlaneSequence& seq, int i, int j);

PlaneSequence build_plane_sequence(const Hypergraph3& h, const Quasigraph& q,
                                   CycleSemantics semantics);

// First (i, j), scanning rows then columns, whose partition separates a and b.
// Each set must sit inside a single class at every index until separation.
// Domain error when the sequence never separates them.
StepIndex exposure_step(const PlaneSequence& seq, VertexSet a, VertexSet b);
StepIndex exposure_step(const PlaneSequence& seq, Vertex u, Vertex v);

struct LeadingInfo {
    StepIndex step;             // minimum exposure over the cycle's pairs
    std::vector<EdgeId> edges;  // ascending ids of the members attaining it
};

// Exposure step and leading edges of a cycle given by class pairs over p, which must
// be the stabilized partition of one of seq's rows.
LeadingInfo leading_edges(const PlaneSequence& seq, const Partition& p,
                          const ClassCycle& cycle);

// The edges of the complement quotient by p that lead at least one quasicycle,
// ascending ids. p must be a stabilized partition of seq and the complement quotient
// must carry a quasicycle (domain errors otherwise).
std::vector<EdgeId> leading_edge_set(const PlaneSequence& seq, const Partition& p);

// Total order on plane sequences (and thereby on quasigraphs of related
// hypergraphs): rows compared in order, columns padded with the stabilized value,
// then the decisive entries. Equal decisives of stopping kind end both sequences, so
// equality is only reached when the records agree entirely.
int compare_signatures(const PlaneSequence& a, const PlaneSequence& b);

// Comparison of the records up to position (i, j) inclusive; j = kInfJ includes row
// i's decisive entry. Rows past a sequence's end read as its final partition with
// its last decisive repeated.
int compare_prefix(const PlaneSequence& a, const PlaneSequence& b, StepIndex upto);

int compare_quasigraphs(const Hypergraph3& ha, const Quasigraph& qa,
                        const Hypergraph3& hb, const Quasigraph& qb,
                        CycleSemantics semantics);

}  // namespace qskel
