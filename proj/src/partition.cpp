#include "qskel/partition.hpp"

#include <algorithm>

namespace qskel {

Partition Partition::from_classes(std::vector<VertexSet> cls) {
    Partition p;
    for (const auto& c : cls) {
        if (c.empty()) throw DomainError("partition class must be nonempty");
        if (c.intersects(p.ground)) throw DomainError("partition classes must be disjoint");
        p.ground = p.ground | c;
    }
    std::sort(cls.begin(), cls.end(),
              [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    p.classes = std::move(cls);
    return p;
}

Partition Partition::singletons(VertexSet ground) {
    Partition p;
    p.ground = ground;
    for (Vertex v : ground.to_vector()) p.classes.push_back(VertexSet::single(v));
    return p;
}

Partition Partition::trivial(VertexSet ground) {
    if (ground.empty()) throw DomainError("trivial partition needs a nonempty ground set");
    Partition p;
    p.ground = ground;
    p.classes.push_back(ground);
    return p;
}

int Partition::class_index_of(Vertex v) const {
    for (int i = 0; i < class_count(); ++i)
        if (classes[i].contains(v)) return i;
    return -1;
}

VertexSet Partition::class_of(Vertex v) const {
    int i = class_index_of(v);
    QSKEL_CHECK(i >= 0);
    return classes[i];
}

int Partition::class_index_containing(VertexSet s) const {
    QSKEL_CHECK(!s.empty());
    int i = class_index_of(s.min());
    if (i < 0) return -1;
    return s.subset_of(classes[i]) ? i : -1;
}

bool Partition::refines(const Partition& other) const {
    QSKEL_CHECK(ground == other.ground);
    for (const auto& c : classes)
        if (other.class_index_containing(c) < 0) return false;
    return true;
}

Partition induced_partition(const Partition& p, VertexSet x) {
    if (!x.subset_of(p.ground)) throw DomainError("induced partition: X not within the ground set");
    Partition out;
    out.ground = x;
    for (const auto& c : p.classes) {
        VertexSet inter = c & x;
        if (!inter.empty()) out.classes.push_back(inter);
    }
    // intersecting can reorder class minima, so re-canonicalize
    std::sort(out.classes.begin(), out.classes.end(),
              [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
    return out;
}

int partition_compare_total(const Partition& p, const Partition& q) {
    if (p.ground != q.ground)
        throw DomainError("partition comparison requires a common ground set");
    if (p.class_count() != q.class_count())
        return p.class_count() > q.class_count() ? -1 : 1;  // more classes = finer = smaller
    for (int i = 0; i < p.class_count(); ++i) {
        int c = lex_compare_vertex_sets(p.classes[i], q.classes[i]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace qskel
