#pragma once

#include <optional>
#include <vector>

#include "qskel/hypergraph.hpp"

namespace qskel {

// What counts as a cycle in the pair graph of a quasigraph.
// Multigraph: two distinct hyperedges carrying the same pair form a 2-cycle (default).
// Simple: cycles need at least three distinct vertices and pairwise distinct pairs.
enum class CycleSemantics { kMultigraph, kSimple };

// Assignment of a 2-subset (or nothing) to each hyperedge of a host hypergraph.
// pairs[k] belongs to host.edges[k]; an empty set means the edge is unused.
struct Quasigraph {
    std::vector<VertexSet> pairs;

    static Quasigraph empty_on(const Hypergraph3& h) {
        Quasigraph q;
        q.pairs.assign(h.edges.size(), VertexSet());
        return q;
    }

    bool uses(int index) const { return !pairs[static_cast<size_t>(index)].empty(); }
    VertexSet pair_at(int index) const { return pairs[static_cast<size_t>(index)]; }

    int used_count() const {
        int n = 0;
        for (const auto& p : pairs) n += !p.empty();
        return n;
    }

    bool operator==(const Quasigraph&) const = default;
};

// Checks sizes and containment of every assigned pair; throws DomainError.
void validate_quasigraph(const Hypergraph3& h, const Quasigraph& q);

// q with value {u,v} at the edge of the given id; the edge must be unused and u,v
// distinct members of it.
Quasigraph with_pair(const Hypergraph3& h, const Quasigraph& q, EdgeId id, Vertex u, Vertex v);

// q with the edge of the given id unused; removing an unused edge is the identity.
Quasigraph without_edge(const Hypergraph3& h, const Quasigraph& q, EdgeId id);

// Edge list of the pair graph: (host edge index, pair) for each used edge.
std::vector<std::pair<int, VertexSet>> underlying_graph(const Hypergraph3& h, const Quasigraph& q);

// True iff the pair graph is a forest in the multigraph sense: distinct used
// hyperedges with equal pairs already form a cycle. (Deliberately independent of
// CycleSemantics: parallel pairs never count as a forest.)
bool is_acyclic(const Hypergraph3& h, const Quasigraph& q);

// Sub-hypergraph of the unused edges (ids preserved).
Hypergraph3 complement(const Hypergraph3& h, const Quasigraph& q);

// Quasigraph on qh.graph: for each crossing source edge, the pair of class indices
// of its value when that value crosses the partition, otherwise unused.
Quasigraph quotient_quasigraph(const Hypergraph3& h, const Quasigraph& q,
                               const QuotientHypergraph& qh);

// Sub-hypergraph of qh.graph consisting of the quotient edges not used by the
// quotient quasigraph (the complement of q/P in H/P).
Hypergraph3 complement_quotient(const Hypergraph3& h, const Quasigraph& q,
                                const QuotientHypergraph& qh);

// The 2-subsets of a vertex set of size 2 or 3, in lexicographic order.
std::vector<VertexSet> pairs_of(VertexSet vertices);

// True iff the used edges of q form one cycle (under the given semantics) plus
// isolated vertices in the pair graph on g.
bool is_quasicycle(const Hypergraph3& g, const Quasigraph& q, CycleSemantics semantics);

// Path in the pair availability graph of g from one vertex to another: a sequence of
// (edge index, pair) steps chaining from..to, using each hyperedge at most once and
// only pairs accepted by the filter; edge exclude_index is off limits entirely.
// Under simple semantics the path has length >= 2 and never uses a direct from-to pair.
// pair_ok must be closed under the 3-edge shortcut: if two pairs of an edge pass, so
// does the third. Deterministic; returns the steps or nothing.
template <typename PairFilter>
std::optional<std::vector<std::pair<int, VertexSet>>> find_pair_path(
    const Hypergraph3& g, Vertex from, Vertex to, int exclude_index, PairFilter pair_ok,
    CycleSemantics semantics);

// A quasicycle in g if one exists under the given semantics; deterministic.
std::optional<Quasigraph> find_quasicycle(const Hypergraph3& g, CycleSemantics semantics);

// First cycle of the pair graph restricted to pairs inside the given set, closed by
// an ascending edge scan: the closing edge plus its tree path, as (edge id, pair)
// entries ascending by id; nothing when that restriction is a forest. Cycles here
// are multigraph cycles: two used edges with equal pairs close one.
std::optional<std::vector<std::pair<EdgeId, VertexSet>>> pair_graph_cycle(
    const Hypergraph3& g, const Quasigraph& q, VertexSet within);

namespace detail {
std::optional<std::vector<std::pair<int, VertexSet>>> pair_path_impl(
    const Hypergraph3& g, Vertex from, Vertex to,
    const std::vector<std::vector<VertexSet>>& allowed, CycleSemantics semantics);
}

template <typename PairFilter>
std::optional<std::vector<std::pair<int, VertexSet>>> find_pair_path(
    const Hypergraph3& g, Vertex from, Vertex to, int exclude_index, PairFilter pair_ok,
    CycleSemantics semantics) {
    std::vector<std::vector<VertexSet>> allowed(g.edges.size());
    for (int k = 0; k < g.edge_count(); ++k) {
        if (k == exclude_index) continue;
        for (VertexSet pr : pairs_of(g.edges[static_cast<size_t>(k)].vertices))
            if (pair_ok(pr)) allowed[static_cast<size_t>(k)].push_back(pr);
    }
    return detail::pair_path_impl(g, from, to, allowed, semantics);
}

}  // namespace qskel
