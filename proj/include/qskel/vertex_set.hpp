#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qskel/error.hpp"

namespace qskel {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

// Set of vertices over a universe of at most 64, as a bitmask.
// Value type; all operations are O(1) or O(popcount).
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t raw) : bits(raw) {}

    static VertexSet single(Vertex v) { return VertexSet(mask(v)); }
    static VertexSet pair(Vertex u, Vertex v) {
        QSKEL_CHECK(u != v);
        return VertexSet(mask(u) | mask(v));
    }
    // {0, 1, ..., n-1}
    static VertexSet full(int n) {
        QSKEL_CHECK(n >= 0 && n <= kMaxVertices);
        return n == 64 ? VertexSet(~0ULL) : VertexSet((1ULL << n) - 1);
    }

    bool contains(Vertex v) const { return (bits & mask(v)) != 0; }
    void add(Vertex v) { bits |= mask(v); }
    void remove(Vertex v) { bits &= ~mask(v); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
    bool intersects(VertexSet other) const { return (bits & other.bits) != 0; }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    // set difference
    VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }

    bool operator==(const VertexSet&) const = default;

    Vertex min() const {
        QSKEL_CHECK(bits != 0);
        return std::countr_zero(bits);
    }

    // Vertices in increasing order.
    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

private:
    static std::uint64_t mask(Vertex v) {
        QSKEL_CHECK(v >= 0 && v < kMaxVertices);
        return 1ULL << v;
    }
};

// Lexicographic comparison of the increasing vertex lists, shorter-prefix-first.
// Distinct from numeric comparison of masks: {0,1,5} < {0,2,3} lexicographically
// even though its mask is numerically larger.
inline int lex_compare_vertex_sets(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits, y = b.bits;
    while (x != 0 && y != 0) {
        int va = std::countr_zero(x), vb = std::countr_zero(y);
        if (va != vb) return va < vb ? -1 : 1;
        x &= x - 1;
        y &= y - 1;
    }
    if (x == y) return 0;  // both empty
    return x == 0 ? -1 : 1;
}

}  // namespace qskel
