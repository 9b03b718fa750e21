#pragma once

#include <functional>

#include "qskel/bad_leaf.hpp"

namespace qskel {

// Caps for the exhaustive checkers; exceeding one raises a capacity error.
struct EnumBudget {
    long long max_quasigraphs = 65536;  // product of per-edge option counts
    long long max_partitions = 4140;    // partitions of one ground set
};

// Number of quasigraphs of h (the mixed-radix space size), respecting the budget.
long long quasigraph_space_size(const Hypergraph3& h, const EnumBudget& budget);

// Quasigraph of the given rank: per edge the options are unused then the pairs in
// lexicographic order, earlier edges varying slowest.
Quasigraph quasigraph_by_rank(const Hypergraph3& h, long long rank);

// All quasigraphs of h in rank order; fn returns false to stop early.
void enumerate_quasigraphs(const Hypergraph3& h, const EnumBudget& budget,
                           const std::function<bool(const Quasigraph&)>& fn);

// All partitions of x via restricted growth strings over its sorted vertices.
std::vector<Partition> enumerate_partitions(VertexSet x, const EnumBudget& budget);

// Anticonnectedness straight from the definition: every partition of x into two or
// more classes has a hyperedge meeting at least two classes whose value is empty or
// inside a single class. exclude_id >= 0 evaluates with that edge deleted.
bool anticonnected_def(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                       const EnumBudget& budget, EdgeId exclude_id = -1);

// Same check against a caller-supplied list of the partitions of x, for bulk
// queries where the lists are cached.
bool anticonnected_def_with(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                            const std::vector<Partition>& partitions_of_x,
                            EdgeId exclude_id = -1);

// Maximal anticonnected subsets of x, assembled from a table indexed by raw subset
// mask (true = anticonnected); checked to partition x.
Partition anticomponents_from_table(const std::vector<char>& anticonnected_by_mask,
                                    VertexSet x);

// Maximal anticonnected subsets of x straight from the definition.
Partition anticomponents_def(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                             const EnumBudget& budget);

// Existence of a quasicycle by exhaustive enumeration. The plain form may shard the
// scan across threads; the serial form is the single-threaded reference.
bool quasicycle_exists_def(const Hypergraph3& g, CycleSemantics semantics,
                           const EnumBudget& budget);
bool quasicycle_exists_def_serial(const Hypergraph3& g, CycleSemantics semantics,
                                  const EnumBudget& budget);

// Skeletal check from the definitions: classes connected and anticonnected, no
// quasicycle in the complement quotient.
bool skeletal_def(const Hypergraph3& h, const Quasigraph& q, const Partition& p,
                  CycleSemantics semantics, const EnumBudget& budget);

// Edges of the complement quotient by p leading at least one quasicycle, by
// enumerating every quasicycle. Domain error when there is none.
std::vector<EdgeId> leading_set_def(const PlaneSequence& seq, const Partition& p,
                                    const EnumBudget& budget);

struct MaxSearchReport {
    bool maxima_ok = true;            // least-edge record maxima are acyclic and skeletal
    int maxima = 0;                   // quasigraphs attaining the maximal record
    int least_edge_maxima = 0;        // those among them with fewest used edges
    bool fixpoint_dominated = false;  // informational: the improvement fixpoint's
                                      // record is strictly below the maximum
    Quasigraph fixpoint;
};

// Exhaustive study of the record order over every quasigraph of h.
MaxSearchReport max_search(const Hypergraph3& h, CycleSemantics semantics,
                           const EnumBudget& budget);

}  // namespace qskel
