#pragma once

#include <vector>

#include "qskel/error.hpp"
#include "qskel/partition.hpp"
#include "qskel/vertex_set.hpp"

namespace qskel {

using EdgeId = int;

struct Hyperedge {
    EdgeId id = -1;
    VertexSet vertices;

    int size() const { return vertices.count(); }
    bool operator==(const Hyperedge&) const = default;
};

// Hypergraph with edges of size 2 or 3 over vertices 0..vertex_count-1.
// Edge ids are stable identity tokens: they survive quotients and edge removal,
// and freshly added edges get ids never used before (next_edge_id).
// Input hypergraphs have pairwise distinct edge vertex sets; quotient hypergraphs
// may carry parallel edges (equal vertex sets, distinct ids).
struct Hypergraph3 {
    int vertex_count = 0;
    std::vector<Hyperedge> edges;
    EdgeId next_edge_id = 0;

    VertexSet vertex_set() const { return VertexSet::full(vertex_count); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    // position in edges, or -1 if the id is absent
    int index_of(EdgeId id) const {
        for (int i = 0; i < edge_count(); ++i)
            if (edges[i].id == id) return i;
        return -1;
    }
    const Hyperedge& edge_by_id(EdgeId id) const {
        int i = index_of(id);
        QSKEL_CHECK(i >= 0);
        return edges[static_cast<size_t>(i)];
    }

    // validates sizes and vertex range; duplicate_check additionally rejects
    // repeated vertex sets (used for input hypergraphs, not for quotients)
    void validate(bool duplicate_check) const;
};

// Builds a hypergraph from edge vertex sets, assigning ids 0,1,... in order.
Hypergraph3 make_hypergraph(int vertex_count, const std::vector<VertexSet>& edge_sets);

// H - e: same hypergraph without the edge of the given id.
Hypergraph3 without_edge(const Hypergraph3& h, EdgeId id);

// Content order on hyperedges: every 3-edge precedes every 2-edge; within a size
// class, lexicographic on the sorted vertex lists. Identity-independent, so edges
// of related hypergraphs compare consistently. Returns -1, 0 or 1.
int edge_order_compare(VertexSet a, VertexSet b);
inline int edge_order_compare(const Hyperedge& a, const Hyperedge& b) {
    return edge_order_compare(a.vertices, b.vertices);
}

struct EdgeQuotient {
    VertexSet classes;  // class indices of the partition, as a set
    bool crossing = false;
};

// Set of classes of p met by the vertex set s, as class indices.
EdgeQuotient edge_quotient(const Partition& p, VertexSet s);

// H/P: vertices are class indices of p (canonical order), one edge per p-crossing
// source edge, keeping the source id. Parallel quotient edges may coexist.
struct QuotientHypergraph {
    Hypergraph3 graph;
    Partition partition;
};

QuotientHypergraph quotient_hypergraph(const Hypergraph3& h, const Partition& p);

}  // namespace qskel
