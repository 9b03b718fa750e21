#include "qskel/gen.hpp"

#include <map>

namespace qskel {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    QSKEL_CHECK(n > 0);
    return rng() % n;
}

Hypergraph3 random_hypergraph(std::mt19937_64& rng, int n, int m, int tri_percent) {
    if (n < 1 || n > kMaxVertices) throw DomainError("vertex count out of range");
    if (m < 0 || tri_percent < 0 || tri_percent > 100)
        throw DomainError("bad edge count or triple chance");
    if (m > 0 && n < 2) throw DomainError("edges need at least two vertices");
    std::vector<VertexSet> sets;
    std::map<std::uint64_t, bool> seen;
    long long attempts = 0;
    const long long cap = 10000LL * (m + 1);
    while (static_cast<int>(sets.size()) < m) {
        if (++attempts > cap)
            throw DomainError("cannot draw that many distinct edges");
        int size = rng_below(rng, 100) < static_cast<std::uint64_t>(tri_percent) ? 3 : 2;
        if (size > n) size = 2;
        VertexSet e;
        while (e.count() < size) e.add(static_cast<Vertex>(rng_below(rng, n)));
        if (seen.emplace(e.bits, true).second) sets.push_back(e);
    }
    return make_hypergraph(n, sets);
}

Quasigraph random_quasigraph(std::mt19937_64& rng, const Hypergraph3& h) {
    Quasigraph q = Quasigraph::empty_on(h);
    for (int k = 0; k < h.edge_count(); ++k) {
        auto pairs = pairs_of(h.edges[static_cast<size_t>(k)].vertices);
        auto r = rng_below(rng, pairs.size() + 1);
        if (r > 0) q.pairs[static_cast<size_t>(k)] = pairs[static_cast<size_t>(r - 1)];
    }
    return q;
}

VertexSet random_subset(std::mt19937_64& rng, VertexSet universe) {
    VertexSet s;
    for (Vertex v : universe.to_vector())
        if (rng_below(rng, 2)) s.add(v);
    return s;
}

}  // namespace qskel
