#pragma once

#include <vector>

#include "qskel/error.hpp"
#include "qskel/vertex_set.hpp"

namespace qskel {

// Partition of a ground vertex set into disjoint nonempty classes.
// Canonical form: classes sorted by minimum vertex. All constructors canonicalize,
// so operator== is structural equality of partitions.
struct Partition {
    VertexSet ground;
    std::vector<VertexSet> classes;

    Partition() = default;

    static Partition from_classes(std::vector<VertexSet> cls);
    static Partition singletons(VertexSet ground);
    // the one-class partition {ground}; ground must be nonempty
    static Partition trivial(VertexSet ground);

    int class_count() const { return static_cast<int>(classes.size()); }
    bool is_trivial() const { return classes.size() == 1; }

    // index into classes, or -1 when v is outside the ground set
    int class_index_of(Vertex v) const;
    VertexSet class_of(Vertex v) const;
    // class containing the whole set s (s must not straddle classes); -1 if straddling
    int class_index_containing(VertexSet s) const;

    bool operator==(const Partition&) const = default;

    // every class of this is a subset of a class of other (same ground)
    bool refines(const Partition& other) const;
};

// Partition of X induced by P: all nonempty intersections with X.
Partition induced_partition(const Partition& p, VertexSet x);

// Total order on partitions of a common ground set. Coarser partitions are greater:
// compare by class count descending, ties broken by the canonical class lists
// compared positionally (lexicographically on sorted vertex lists).
// Strict refinement implies strictly smaller. Returns -1, 0 or 1.
int partition_compare_total(const Partition& p, const Partition& q);

}  // namespace qskel
