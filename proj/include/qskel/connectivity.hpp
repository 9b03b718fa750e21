#pragma once

#include "qskel/quasigraph.hpp"

namespace qskel {

// Partition of X into the vertex sets of the connected components of the pair
// graph induced on X (pairs with both endpoints in X).
Partition components_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x);

bool connected_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x);

// Partition of X into the maximal subsets Y on which q is anticonnected.
// Computed as a merge fixpoint from singletons: classes Y1, Y2 merge when some
// hyperedge (other than exclude_id) meets both while its assigned pair is empty or
// lies inside one current class. Merged sets stay anticonnected; a set spanning two
// fixpoint classes would yield a witness edge licensing one more merge, so the
// fixpoint classes are exactly the maximal anticonnected sets.
// exclude_id >= 0 evaluates in the hypergraph with that edge deleted.
Partition anticomponents_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                            EdgeId exclude_id = -1);

bool anticonnected_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                      EdgeId exclude_id = -1);

// Whether q is connected and anticonnected on every class (the solidity required of
// every stabilized partition in a plane sequence).
bool is_solid(const Hypergraph3& h, const Quasigraph& q, const Partition& p);

// e is used, its pair lies inside X, and removing e disconnects X.
// Requires |e cap X| = 2 and q connected on X (domain errors otherwise; the notion
// presupposes only the connectivity half of solidity).
bool is_x_bridge(const Hypergraph3& h, const Quasigraph& q, VertexSet x, EdgeId id);

// e is unused and q stops being anticonnected on X once e is deleted.
// Requires |e cap X| = 2 and q anticonnected on X.
bool is_x_antibridge(const Hypergraph3& h, const Quasigraph& q, VertexSet x, EdgeId id);

struct EdgeRole {
    enum Kind { kNone, kRedundant, kWeaklyRedundant, kBridge, kAntibridge };
    Kind kind = kNone;
    int class_index = -1;  // the witnessing class for kBridge / kAntibridge
};

// A redundant or weakly redundant edge is removable without losing the decisive
// structure; bridges and antibridges are the splitting edges of the sequence.
inline bool is_weakly_redundant(const EdgeRole& r) {
    return r.kind == EdgeRole::kRedundant || r.kind == EdgeRole::kWeaklyRedundant;
}

// Classifies edge id against a solid partition r it crosses:
//   unused: kAntibridge(X) when it is an X-antibridge for the (unique) class X with
//           |e cap X| = 2, else kRedundant;
//   used:   kBridge(X) when its pair lies inside a class X and it is an X-bridge,
//           else kWeaklyRedundant.
// Domain errors: r not solid, or e not crossing r.
EdgeRole redundancy_class(const Hypergraph3& h, const Quasigraph& q, const Partition& r,
                          EdgeId id);

}  // namespace qskel
