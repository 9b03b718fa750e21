#include "qskel/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>

#include "qskel/connectivity.hpp"
#include "qskel/skeletal.hpp"

namespace qskel {
namespace {

// Per-edge value options: unused first, then the pairs in lexicographic order.
std::vector<std::vector<VertexSet>> edge_options(const Hypergraph3& h) {
    std::vector<std::vector<VertexSet>> opts;
    opts.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::vector<VertexSet> o{VertexSet()};
        for (VertexSet p : pairs_of(e.vertices)) o.push_back(p);
        opts.push_back(std::move(o));
    }
    return opts;
}

long long space_size_of(const std::vector<std::vector<VertexSet>>& opts,
                        const EnumBudget& budget) {
    long long n = 1;
    for (const auto& o : opts) {
        n *= static_cast<long long>(o.size());
        if (n > budget.max_quasigraphs)
            throw CapacityError("quasigraph space exceeds the enumeration budget");
    }
    return n;
}

Quasigraph decode_rank(const Hypergraph3& h,
                       const std::vector<std::vector<VertexSet>>& opts, long long rank) {
    Quasigraph q = Quasigraph::empty_on(h);
    for (int k = static_cast<int>(opts.size()) - 1; k >= 0; --k) {
        auto radix = static_cast<long long>(opts[static_cast<size_t>(k)].size());
        q.pairs[static_cast<size_t>(k)] =
            opts[static_cast<size_t>(k)][static_cast<size_t>(rank % radix)];
        rank /= radix;
    }
    QSKEL_CHECK(rank == 0);
    return q;
}

}  // namespace

long long quasigraph_space_size(const Hypergraph3& h, const EnumBudget& budget) {
    return space_size_of(edge_options(h), budget);
}

Quasigraph quasigraph_by_rank(const Hypergraph3& h, long long rank) {
    auto opts = edge_options(h);
    QSKEL_CHECK(rank >= 0);
    return decode_rank(h, opts, rank);
}

void enumerate_quasigraphs(const Hypergraph3& h, const EnumBudget& budget,
                           const std::function<bool(const Quasigraph&)>& fn) {
    auto opts = edge_options(h);
    space_size_of(opts, budget);
    int m = static_cast<int>(opts.size());
    std::vector<size_t> counter(static_cast<size_t>(m), 0);
    Quasigraph q = Quasigraph::empty_on(h);
    for (;;) {
        for (int k = 0; k < m; ++k)
            q.pairs[static_cast<size_t>(k)] =
                opts[static_cast<size_t>(k)][counter[static_cast<size_t>(k)]];
        if (!fn(q)) return;
        int k = m - 1;  // last edge varies fastest
        for (; k >= 0; --k) {
            if (++counter[static_cast<size_t>(k)] < opts[static_cast<size_t>(k)].size()) break;
            counter[static_cast<size_t>(k)] = 0;
        }
        if (k < 0) return;
    }
}

std::vector<Partition> enumerate_partitions(VertexSet x, const EnumBudget& budget) {
    std::vector<Vertex> vs = x.to_vector();
    int n = static_cast<int>(vs.size());
    std::vector<Partition> out;
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    // Restricted growth: rgs[i] <= 1 + max(rgs[0..i-1]); each string is one partition.
    auto emit = [&] {
        int classes = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<VertexSet> cls(static_cast<size_t>(classes));
        for (int i = 0; i < n; ++i)
            cls[static_cast<size_t>(rgs[static_cast<size_t>(i)])].add(vs[static_cast<size_t>(i)]);
        out.push_back(Partition::from_classes(cls));
        if (static_cast<long long>(out.size()) > budget.max_partitions)
            throw CapacityError("partition count exceeds the enumeration budget");
    };
    std::function<void(int, int)> rec = [&](int i, int hi) {
        if (i == n) {
            emit();
            return;
        }
        for (int c = 0; c <= hi + 1; ++c) {
            rgs[static_cast<size_t>(i)] = c;
            rec(i + 1, std::max(hi, c));
        }
    };
    if (n == 0)
        out.push_back(Partition{});
    else
        rec(0, -1);
    return out;
}

bool anticonnected_def_with(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                            const std::vector<Partition>& partitions_of_x,
                            EdgeId exclude_id) {
    if (x.count() <= 1) return true;
    for (const Partition& r : partitions_of_x) {
        if (r.class_count() < 2) continue;
        bool witnessed = false;
        for (int k = 0; k < h.edge_count() && !witnessed; ++k) {
            const auto& e = h.edges[static_cast<size_t>(k)];
            if (e.id == exclude_id) continue;
            int met = 0;
            for (const VertexSet& c : r.classes) met += e.vertices.intersects(c);
            if (met < 2) continue;
            VertexSet val = q.pair_at(k);
            if (val.empty()) {
                witnessed = true;
                break;
            }
            for (const VertexSet& c : r.classes)
                if (val.subset_of(c)) {
                    witnessed = true;
                    break;
                }
        }
        if (!witnessed) return false;
    }
    return true;
}

bool anticonnected_def(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                       const EnumBudget& budget, EdgeId exclude_id) {
    if (x.count() <= 1) return true;
    return anticonnected_def_with(h, q, x, enumerate_partitions(x, budget), exclude_id);
}

Partition anticomponents_from_table(const std::vector<char>& anticonnected_by_mask,
                                    VertexSet x) {
    if (x.empty()) return Partition{};
    QSKEL_CHECK(x.bits < anticonnected_by_mask.size());
    std::vector<std::uint64_t> anti;
    for (std::uint64_t sub = x.bits;; sub = (sub - 1) & x.bits) {
        if (sub != 0 && anticonnected_by_mask[sub]) anti.push_back(sub);
        if (sub == 0) break;
    }
    std::vector<VertexSet> maximal;
    for (std::uint64_t a : anti) {
        bool dominated = false;
        for (std::uint64_t b : anti)
            if (a != b && (a & b) == a) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(VertexSet(a));
    }
    // The maximal anticonnected subsets partition x.
    std::uint64_t covered = 0;
    for (const VertexSet& c : maximal) {
        QSKEL_CHECK((covered & c.bits) == 0);
        covered |= c.bits;
    }
    QSKEL_CHECK(covered == x.bits);
    return Partition::from_classes(maximal);
}

Partition anticomponents_def(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                             const EnumBudget& budget) {
    if (x.empty()) return Partition{};
    std::vector<char> table(static_cast<size_t>(x.bits) + 1, 0);
    for (std::uint64_t sub = x.bits;; sub = (sub - 1) & x.bits) {
        if (sub != 0) table[sub] = anticonnected_def(h, q, VertexSet(sub), budget);
        if (sub == 0) break;
    }
    return anticomponents_from_table(table, x);
}

bool quasicycle_exists_def_serial(const Hypergraph3& g, CycleSemantics semantics,
                                  const EnumBudget& budget) {
    bool found = false;
    enumerate_quasigraphs(g, budget, [&](const Quasigraph& q) {
        if (is_quasicycle(g, q, semantics)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

bool quasicycle_exists_def(const Hypergraph3& g, CycleSemantics semantics,
                           const EnumBudget& budget) {
#ifdef _OPENMP
    auto opts = edge_options(g);
    long long space = space_size_of(opts, budget);
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 256)
    for (long long rank = 0; rank < space; ++rank) {
        if (found.load(std::memory_order_relaxed)) continue;
        if (is_quasicycle(g, decode_rank(g, opts, rank), semantics))
            found.store(true, std::memory_order_relaxed);
    }
    return found.load();
#else
    return quasicycle_exists_def_serial(g, semantics, budget);
#endif
}

bool skeletal_def(const Hypergraph3& h, const Quasigraph& q, const Partition& p,
                  CycleSemantics semantics, const EnumBudget& budget) {
    if (!(p.ground == h.vertex_set()))
        throw DomainError("partition ground set differs from the vertex set");
    for (const VertexSet& c : p.classes) {
        if (!connected_on(h, q, c)) return false;
        if (!anticonnected_def(h, q, c, budget)) return false;
    }
    auto qh = quotient_hypergraph(h, p);
    return !quasicycle_exists_def(complement_quotient(h, q, qh), semantics, budget);
}

std::vector<EdgeId> leading_set_def(const PlaneSequence& seq, const Partition& p,
                                    const EnumBudget& budget) {
    auto qh = quotient_hypergraph(seq.host, p);
    Hypergraph3 comp = complement_quotient(seq.host, seq.pi, qh);
    std::set<EdgeId> acc;
    bool any = false;
    enumerate_quasigraphs(comp, budget, [&](const Quasigraph& qc) {
        if (!is_quasicycle(comp, qc, seq.semantics)) return true;
        any = true;
        ClassCycle cycle;
        for (int k = 0; k < comp.edge_count(); ++k)
            if (qc.uses(k)) cycle.emplace_back(comp.edges[static_cast<size_t>(k)].id, qc.pair_at(k));
        LeadingInfo li = leading_edges(seq, p, cycle);
        acc.insert(li.edges.begin(), li.edges.end());
        return true;
    });
    if (!any) throw DomainError("complement quotient carries no quasicycle");
    return {acc.begin(), acc.end()};
}

MaxSearchReport max_search(const Hypergraph3& h, CycleSemantics semantics,
                           const EnumBudget& budget) {
    std::optional<PlaneSequence> best;
    std::vector<Quasigraph> argmax;
    enumerate_quasigraphs(h, budget, [&](const Quasigraph& q) {
        PlaneSequence seq = build_plane_sequence(h, q, semantics);
        int c = best ? compare_signatures(seq, *best) : 1;
        if (c > 0) {
            best = std::move(seq);
            argmax.assign(1, q);
        } else if (c == 0) {
            argmax.push_back(q);
        }
        return true;
    });
    QSKEL_CHECK(best.has_value());
    int min_used = argmax.front().used_count();
    for (const auto& m : argmax) min_used = std::min(min_used, m.used_count());

    MaxSearchReport rep;
    rep.maxima = static_cast<int>(argmax.size());
    for (const auto& m : argmax) {
        if (m.used_count() != min_used) continue;
        ++rep.least_edge_maxima;
        PlaneSequence seq = build_plane_sequence(h, m, semantics);
        if (!is_acyclic(h, m) || !skeletal_def(h, m, seq.final_partition(), semantics, budget))
            rep.maxima_ok = false;
    }
    SkeletalOutcome fix = solve(h, semantics);
    rep.fixpoint = fix.pi;
    rep.fixpoint_dominated = compare_signatures(*best, fix.seq) > 0;
    return rep;
}

}  // namespace qskel
