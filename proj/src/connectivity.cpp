#include "qskel/connectivity.hpp"

#include <vector>

#include "qskel/error.hpp"

namespace qskel {

Partition components_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x) {
    if (!x.subset_of(h.vertex_set())) throw DomainError("components_on: set outside vertex range");
    std::vector<VertexSet> classes;
    for (Vertex v : x.to_vector()) classes.push_back(VertexSet::single(v));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
            if (!q.uses(static_cast<int>(ei))) continue;
            VertexSet p = q.pair_at(static_cast<int>(ei));
            if (!p.subset_of(x)) continue;
            int a = -1, b = -1;
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (classes[c].intersects(p)) (a < 0 ? a : b) = static_cast<int>(c);
            }
            if (a >= 0 && b >= 0) {
                classes[a] = classes[a] | classes[b];
                classes.erase(classes.begin() + b);
                changed = true;
            }
        }
    }
    if (classes.empty()) return Partition{};  // x empty: the empty partition of the empty set
    return Partition::from_classes(classes);
}

bool connected_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x) {
    return components_on(h, q, x).class_count() <= 1;
}

Partition anticomponents_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                            EdgeId exclude_id) {
    if (!x.subset_of(h.vertex_set()))
        throw DomainError("anticomponents_on: set outside vertex range");
    std::vector<VertexSet> classes;
    for (Vertex v : x.to_vector()) classes.push_back(VertexSet::single(v));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
            const Hyperedge& e = h.edges[ei];
            if (e.id == exclude_id) continue;
            VertexSet p = q.pair_at(static_cast<int>(ei));
            for (std::size_t a = 0; a < classes.size() && !changed; ++a) {
                if (!e.vertices.intersects(classes[a])) continue;
                for (std::size_t b = a + 1; b < classes.size(); ++b) {
                    if (!e.vertices.intersects(classes[b])) continue;
                    bool licensed = p.empty() || p.subset_of(classes[a]) || p.subset_of(classes[b]);
                    if (!licensed) continue;
                    classes[a] = classes[a] | classes[b];
                    classes.erase(classes.begin() + b);
                    changed = true;
                    break;
                }
            }
            if (changed) break;  // rescan from the first edge; merge order does not matter
        }
    }
    if (classes.empty()) return Partition{};
    return Partition::from_classes(classes);
}

bool anticonnected_on(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                      EdgeId exclude_id) {
    if (x.count() <= 1) return true;
    return anticomponents_on(h, q, x, exclude_id).class_count() == 1;
}

bool is_solid(const Hypergraph3& h, const Quasigraph& q, const Partition& p) {
    for (const VertexSet& c : p.classes) {
        if (!connected_on(h, q, c)) return false;
        if (!anticonnected_on(h, q, c)) return false;
    }
    return true;
}

namespace {

const Hyperedge& edge_with_two_in(const Hypergraph3& h, VertexSet x, EdgeId id,
                                  const char* who) {
    int idx = h.index_of(id);
    if (idx < 0) throw DomainError(std::string(who) + ": no edge with that id");
    const Hyperedge& e = h.edges[idx];
    if ((e.vertices & x).count() != 2)
        throw DomainError(std::string(who) + ": edge must meet the set in exactly two vertices");
    return e;
}

}  // namespace

bool is_x_bridge(const Hypergraph3& h, const Quasigraph& q, VertexSet x, EdgeId id) {
    edge_with_two_in(h, x, id, "is_x_bridge");
    if (!connected_on(h, q, x)) throw DomainError("is_x_bridge: not connected on the set");
    int idx = h.index_of(id);
    if (!q.uses(idx)) return false;
    if (!q.pair_at(idx).subset_of(x)) return false;
    return !connected_on(h, without_edge(h, q, id), x);
}

bool is_x_antibridge(const Hypergraph3& h, const Quasigraph& q, VertexSet x, EdgeId id) {
    edge_with_two_in(h, x, id, "is_x_antibridge");
    if (!anticonnected_on(h, q, x))
        throw DomainError("is_x_antibridge: not anticonnected on the set");
    int idx = h.index_of(id);
    if (q.uses(idx)) return false;
    return !anticonnected_on(h, q, x, id);
}

EdgeRole redundancy_class(const Hypergraph3& h, const Quasigraph& q, const Partition& r,
                          EdgeId id) {
    if (!is_solid(h, q, r)) throw DomainError("redundancy_class: partition is not solid");
    int idx = h.index_of(id);
    if (idx < 0) throw DomainError("redundancy_class: no edge with that id");
    const Hyperedge& e = h.edges[idx];
    EdgeQuotient eq = edge_quotient(r, e.vertices);
    if (!eq.crossing) throw DomainError("redundancy_class: edge does not cross the partition");

    if (!q.uses(idx)) {
        // At most one class can meet e twice: e has <= 3 vertices spread over >= 2 classes.
        for (int c : eq.classes.to_vector()) {
            if ((e.vertices & r.classes[c]).count() == 2) {
                if (is_x_antibridge(h, q, r.classes[c], id)) return {EdgeRole::kAntibridge, c};
                return {EdgeRole::kRedundant, -1};
            }
        }
        return {EdgeRole::kRedundant, -1};
    }

    VertexSet p = q.pair_at(idx);
    int pc = r.class_index_containing(p);
    if (pc < 0) return {EdgeRole::kWeaklyRedundant, -1};
    // e crosses r while its pair stays inside class pc, so |e cap class| is exactly 2.
    if (is_x_bridge(h, q, r.classes[pc], id)) return {EdgeRole::kBridge, pc};
    return {EdgeRole::kWeaklyRedundant, -1};
}

}  // namespace qskel
