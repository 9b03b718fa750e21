#include "qskel/hypergraph.hpp"

#include <algorithm>

namespace qskel {

void Hypergraph3::validate(bool duplicate_check) const {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw DomainError("vertex count out of range 0..64");
    VertexSet universe = vertex_set();
    for (const auto& e : edges) {
        if (e.size() != 2 && e.size() != 3)
            throw DomainError("hyperedge size must be 2 or 3");
        if (!e.vertices.subset_of(universe))
            throw DomainError("hyperedge vertex outside the vertex universe");
        if (e.id < 0) throw DomainError("hyperedge id must be nonnegative");
    }
    for (int i = 0; i < edge_count(); ++i)
        for (int j = i + 1; j < edge_count(); ++j) {
            if (edges[i].id == edges[j].id) throw DomainError("duplicate hyperedge id");
            if (duplicate_check && edges[i].vertices == edges[j].vertices)
                throw DomainError("duplicate hyperedge vertex set");
        }
}

Hypergraph3 make_hypergraph(int vertex_count, const std::vector<VertexSet>& edge_sets) {
    Hypergraph3 h;
    h.vertex_count = vertex_count;
    for (const auto& s : edge_sets) h.edges.push_back({h.next_edge_id++, s});
    h.validate(true);
    return h;
}

Hypergraph3 without_edge(const Hypergraph3& h, EdgeId id) {
    if (h.index_of(id) < 0) throw DomainError("without_edge: no edge with that id");
    Hypergraph3 out;
    out.vertex_count = h.vertex_count;
    out.next_edge_id = h.next_edge_id;
    for (const auto& e : h.edges)
        if (e.id != id) out.edges.push_back(e);
    return out;
}

int edge_order_compare(VertexSet a, VertexSet b) {
    int sa = a.count(), sb = b.count();
    if (sa != sb) return sa > sb ? -1 : 1;  // 3-edges before 2-edges
    return lex_compare_vertex_sets(a, b);
}

EdgeQuotient edge_quotient(const Partition& p, VertexSet s) {
    if (!s.subset_of(p.ground)) throw DomainError("edge quotient: vertices outside the ground set");
    EdgeQuotient q;
    for (int i = 0; i < p.class_count(); ++i)
        if (p.classes[i].intersects(s)) q.classes.add(i);
    q.crossing = q.classes.count() >= 2;
    return q;
}

QuotientHypergraph quotient_hypergraph(const Hypergraph3& h, const Partition& p) {
    if (p.ground != h.vertex_set()) throw DomainError("quotient: partition must cover V(H)");
    QuotientHypergraph out;
    out.partition = p;
    out.graph.vertex_count = p.class_count();
    out.graph.next_edge_id = h.next_edge_id;
    for (const auto& e : h.edges) {
        EdgeQuotient q = edge_quotient(p, e.vertices);
        if (q.crossing) out.graph.edges.push_back({e.id, q.classes});
    }
    return out;
}

}  // namespace qskel
