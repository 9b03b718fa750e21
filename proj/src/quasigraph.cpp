#include "qskel/quasigraph.hpp"

#include <algorithm>
#include <deque>

namespace qskel {

void validate_quasigraph(const Hypergraph3& h, const Quasigraph& q) {
    if (q.pairs.size() != h.edges.size())
        throw DomainError("quasigraph does not match the host edge list");
    for (size_t k = 0; k < q.pairs.size(); ++k) {
        VertexSet p = q.pairs[k];
        if (p.empty()) continue;
        if (p.count() != 2 || !p.subset_of(h.edges[k].vertices))
            throw DomainError("assigned value must be a 2-subset of its hyperedge");
    }
}

Quasigraph with_pair(const Hypergraph3& h, const Quasigraph& q, EdgeId id, Vertex u, Vertex v) {
    int k = h.index_of(id);
    if (k < 0) throw DomainError("with_pair: no such edge");
    if (q.uses(k)) throw DomainError("with_pair: edge already used");
    if (u == v) throw DomainError("with_pair: vertices must be distinct");
    VertexSet pr = VertexSet::pair(u, v);
    if (!pr.subset_of(h.edges[static_cast<size_t>(k)].vertices))
        throw DomainError("with_pair: vertices not in the edge");
    Quasigraph out = q;
    out.pairs[static_cast<size_t>(k)] = pr;
    return out;
}

Quasigraph without_edge(const Hypergraph3& h, const Quasigraph& q, EdgeId id) {
    int k = h.index_of(id);
    if (k < 0) throw DomainError("without_edge: no such edge");
    Quasigraph out = q;
    out.pairs[static_cast<size_t>(k)] = VertexSet();
    return out;
}

std::vector<std::pair<int, VertexSet>> underlying_graph(const Hypergraph3& h,
                                                        const Quasigraph& q) {
    std::vector<std::pair<int, VertexSet>> out;
    for (int k = 0; k < h.edge_count(); ++k)
        if (q.uses(k)) out.emplace_back(k, q.pair_at(k));
    return out;
}

namespace {

// Small union-find over vertex ids.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    // returns false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

bool is_acyclic(const Hypergraph3& h, const Quasigraph& q) {
    UnionFind uf(h.vertex_count);
    for (int k = 0; k < h.edge_count(); ++k) {
        if (!q.uses(k)) continue;
        auto vs = q.pair_at(k).to_vector();
        if (!uf.unite(vs[0], vs[1])) return false;
    }
    return true;
}

Hypergraph3 complement(const Hypergraph3& h, const Quasigraph& q) {
    Hypergraph3 out;
    out.vertex_count = h.vertex_count;
    out.next_edge_id = h.next_edge_id;
    for (int k = 0; k < h.edge_count(); ++k)
        if (!q.uses(k)) out.edges.push_back(h.edges[static_cast<size_t>(k)]);
    return out;
}

Quasigraph quotient_quasigraph(const Hypergraph3& h, const Quasigraph& q,
                               const QuotientHypergraph& qh) {
    Quasigraph out;
    out.pairs.reserve(qh.graph.edges.size());
    for (const auto& qe : qh.graph.edges) {
        int k = h.index_of(qe.id);
        QSKEL_CHECK(k >= 0);
        VertexSet value;
        if (q.uses(k)) {
            EdgeQuotient pq = edge_quotient(qh.partition, q.pair_at(k));
            if (pq.crossing) value = pq.classes;
        }
        out.pairs.push_back(value);
    }
    return out;
}

Hypergraph3 complement_quotient(const Hypergraph3& h, const Quasigraph& q,
                                const QuotientHypergraph& qh) {
    Quasigraph qq = quotient_quasigraph(h, q, qh);
    return complement(qh.graph, qq);
}

std::vector<VertexSet> pairs_of(VertexSet vertices) {
    auto vs = vertices.to_vector();
    std::vector<VertexSet> out;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            out.push_back(VertexSet::pair(vs[i], vs[j]));
    return out;
}

bool is_quasicycle(const Hypergraph3& g, const Quasigraph& q, CycleSemantics semantics) {
    auto used = underlying_graph(g, q);
    int min_len = semantics == CycleSemantics::kMultigraph ? 2 : 3;
    if (static_cast<int>(used.size()) < min_len) return false;

    if (semantics == CycleSemantics::kSimple) {
        for (size_t i = 0; i < used.size(); ++i)
            for (size_t j = i + 1; j < used.size(); ++j)
                if (used[i].second == used[j].second) return false;
    }

    std::vector<int> degree(static_cast<size_t>(g.vertex_count), 0);
    VertexSet touched;
    for (const auto& [k, pr] : used) {
        (void)k;
        for (Vertex v : pr.to_vector()) {
            ++degree[static_cast<size_t>(v)];
            touched.add(v);
        }
    }
    for (Vertex v : touched.to_vector())
        if (degree[static_cast<size_t>(v)] != 2) return false;

    UnionFind uf(g.vertex_count);
    int components = touched.count();
    for (const auto& [k, pr] : used) {
        (void)k;
        auto vs = pr.to_vector();
        if (uf.unite(vs[0], vs[1])) --components;
    }
    if (components != 1) return false;
    QSKEL_CHECK(static_cast<int>(used.size()) == touched.count());
    return true;
}

namespace detail {

namespace {

// Exhaustive search for a vertex-simple path of length >= 2 using each edge at most
// once; needed under simple cycle semantics, where the shortest-path reduction is
// incomplete (a repaired path may collapse onto a forbidden direct pair).
bool rainbow_dfs(const Hypergraph3& g, Vertex at, Vertex to, VertexSet visited,
                 std::vector<char>& used_edge,
                 const std::vector<std::vector<VertexSet>>& allowed,
                 std::vector<std::pair<int, VertexSet>>& path) {
    for (int k = 0; k < g.edge_count(); ++k) {
        if (used_edge[static_cast<size_t>(k)]) continue;
        for (VertexSet pr : allowed[static_cast<size_t>(k)]) {
            if (!pr.contains(at)) continue;
            Vertex next = (pr - VertexSet::single(at)).min();
            if (next == to) {
                if (path.empty()) continue;  // length-1 path would close a 2-cycle
                path.emplace_back(k, pr);
                return true;
            }
            if (visited.contains(next)) continue;
            VertexSet visited2 = visited;
            visited2.add(next);
            used_edge[static_cast<size_t>(k)] = 1;
            path.emplace_back(k, pr);
            if (rainbow_dfs(g, next, to, visited2, used_edge, allowed, path)) return true;
            path.pop_back();
            used_edge[static_cast<size_t>(k)] = 0;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::pair<int, VertexSet>>> pair_path_impl(
    const Hypergraph3& g, Vertex from, Vertex to,
    const std::vector<std::vector<VertexSet>>& allowed, CycleSemantics semantics) {
    QSKEL_CHECK(from != to);

    if (semantics == CycleSemantics::kSimple) {
        std::vector<char> used_edge(g.edges.size(), 0);
        std::vector<std::pair<int, VertexSet>> path;
        if (rainbow_dfs(g, from, to, VertexSet::single(from), used_edge, allowed, path))
            return path;
        return std::nullopt;
    }

    // Multigraph: BFS for a shortest path, then repair hyperedge reuse. Two pairs of
    // one 3-edge on a vertex-simple path are adjacent (they share a vertex), and the
    // filter is shortcut-closed, so replacing them by the third pair stays allowed.
    // A shortest path in fact never needs repair; the loop guards filter misuse.
    std::vector<int> prev_vertex(static_cast<size_t>(g.vertex_count), -1);
    std::vector<std::pair<int, VertexSet>> prev_step(static_cast<size_t>(g.vertex_count),
                                                     {-1, VertexSet()});
    std::deque<Vertex> queue;
    VertexSet seen = VertexSet::single(from);
    queue.push_back(from);
    bool reached = false;
    while (!queue.empty() && !reached) {
        Vertex at = queue.front();
        queue.pop_front();
        for (int k = 0; k < g.edge_count() && !reached; ++k) {
            for (VertexSet pr : allowed[static_cast<size_t>(k)]) {
                if (!pr.contains(at)) continue;
                Vertex next = (pr - VertexSet::single(at)).min();
                if (seen.contains(next)) continue;
                seen.add(next);
                prev_vertex[static_cast<size_t>(next)] = at;
                prev_step[static_cast<size_t>(next)] = {k, pr};
                if (next == to) {
                    reached = true;
                    break;
                }
                queue.push_back(next);
            }
        }
    }
    if (!reached) return std::nullopt;

    std::vector<std::pair<int, VertexSet>> path;
    for (Vertex v = to; v != from; v = prev_vertex[static_cast<size_t>(v)])
        path.push_back(prev_step[static_cast<size_t>(v)]);
    std::reverse(path.begin(), path.end());

    // repair: collapse duplicate uses of one hyperedge onto its remaining pair
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < path.size() && !changed; ++i)
            for (size_t j = i + 1; j < path.size() && !changed; ++j) {
                if (path[i].first != path[j].first) continue;
                QSKEL_CHECK(j == i + 1);  // shared vertex makes reuses adjacent
                VertexSet third = (path[i].second | path[j].second) - (path[i].second & path[j].second);
                QSKEL_CHECK(third.count() == 2);
                path[i].second = third;
                path.erase(path.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
            }
    }
    return path;
}

}  // namespace detail

std::optional<std::vector<std::pair<EdgeId, VertexSet>>> pair_graph_cycle(
    const Hypergraph3& g, const Quasigraph& q, VertexSet within) {
    UnionFind uf(g.vertex_count);
    std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<size_t>(g.vertex_count));
    for (int k = 0; k < g.edge_count(); ++k) {
        if (!q.uses(k)) continue;
        VertexSet pr = q.pair_at(k);
        if (!pr.subset_of(within)) continue;
        auto vs = pr.to_vector();
        if (uf.unite(vs[0], vs[1])) {
            adj[static_cast<size_t>(vs[0])].emplace_back(vs[1], k);
            adj[static_cast<size_t>(vs[1])].emplace_back(vs[0], k);
            continue;
        }
        // endpoints already joined: this edge plus the tree path between them
        std::vector<int> prev_v(static_cast<size_t>(g.vertex_count), -1);
        std::vector<int> prev_e(static_cast<size_t>(g.vertex_count), -1);
        std::deque<Vertex> bfs;
        bfs.push_back(vs[0]);
        VertexSet seen = VertexSet::single(vs[0]);
        while (!bfs.empty()) {
            Vertex at = bfs.front();
            bfs.pop_front();
            if (at == vs[1]) break;
            for (auto [nb, ek] : adj[static_cast<size_t>(at)]) {
                if (seen.contains(nb)) continue;
                seen.add(nb);
                prev_v[static_cast<size_t>(nb)] = at;
                prev_e[static_cast<size_t>(nb)] = ek;
                bfs.push_back(nb);
            }
        }
        QSKEL_CHECK(seen.contains(vs[1]));
        std::vector<std::pair<EdgeId, VertexSet>> cyc;
        cyc.emplace_back(g.edges[static_cast<size_t>(k)].id, pr);
        for (Vertex v = vs[1]; v != vs[0]; v = prev_v[static_cast<size_t>(v)]) {
            int ek = prev_e[static_cast<size_t>(v)];
            cyc.emplace_back(g.edges[static_cast<size_t>(ek)].id, q.pair_at(ek));
        }
        std::sort(cyc.begin(), cyc.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return cyc;
    }
    return std::nullopt;
}

std::optional<Quasigraph> find_quasicycle(const Hypergraph3& g, CycleSemantics semantics) {
    for (int k = 0; k < g.edge_count(); ++k) {
        for (VertexSet pr : pairs_of(g.edges[static_cast<size_t>(k)].vertices)) {
            auto vs = pr.to_vector();
            auto path = find_pair_path(
                g, vs[0], vs[1], k, [](VertexSet) { return true; }, semantics);
            if (!path) continue;
            Quasigraph q = Quasigraph::empty_on(g);
            q.pairs[static_cast<size_t>(k)] = pr;
            for (const auto& [idx, p] : *path) {
                QSKEL_CHECK(!q.uses(idx));
                q.pairs[static_cast<size_t>(idx)] = p;
            }
            QSKEL_CHECK(is_quasicycle(g, q, semantics));
            return q;
        }
    }
    return std::nullopt;
}

}  // namespace qskel
