#pragma once

#include <cstdint>
#include <random>

#include "qskel/hypergraph.hpp"
#include "qskel/quasigraph.hpp"

namespace qskel {

// Uniform-ish draw in [0, n) via plain modulo. Chosen over the standard
// distributions because mt19937_64 output is pinned by the standard while the
// distributions are not, and reproducibility across toolchains matters here.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n);

// n vertices, m edges with pairwise distinct vertex sets; each edge is a triple
// with probability tri_percent/100, otherwise a pair. Domain error when m distinct
// edges cannot be found.
Hypergraph3 random_hypergraph(std::mt19937_64& rng, int n, int m, int tri_percent);

// Each edge independently unused or any of its pairs, uniformly.
Quasigraph random_quasigraph(std::mt19937_64& rng, const Hypergraph3& h);

// Uniform subset of the universe.
VertexSet random_subset(std::mt19937_64& rng, VertexSet universe);

}  // namespace qskel
