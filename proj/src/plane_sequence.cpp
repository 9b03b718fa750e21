#include "qskel/plane_sequence.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "qskel/error.hpp"

namespace qskel {

int decisive_compare(const Decisive& a, const Decisive& b) {
    auto rank = [](DecisiveKind k) {
        switch (k) {
            case DecisiveKind::kTerminate: return 0;
            case DecisiveKind::kContinue: return 1;
            default: return 2;
        }
    };
    int ra = rank(a.kind), rb = rank(b.kind);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (a.kind == DecisiveKind::kContinue) return edge_order_compare(a.edge_vertices, b.edge_vertices);
    return 0;
}

const Partition& partition_at(const PlaneSequence& seq, int i, int j) {
    QSKEL_CHECK(i >= 0 && j >= 0 && !seq.rows.empty());
    if (i >= static_cast<int>(seq.rows.size())) return seq.rows.back().limit();
    const PlaneSequenceRow& row = seq.rows[static_cast<std::size_t>(i)];
    if (j > row.last_j()) return row.limit();
    return row.partitions[static_cast<std::size_t>(j)];
}

StepIndex exposure_step(const PlaneSequence& seq, VertexSet a, VertexSet b) {
    if (a.empty() || b.empty() || a.intersects(b))
        throw DomainError("exposure_step: sets must be nonempty and disjoint");
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
        const PlaneSequenceRow& row = seq.rows[i];
        for (std::size_t j = 0; j < row.partitions.size(); ++j) {
            const Partition& p = row.partitions[j];
            int ia = p.class_index_containing(a);
            int ib = p.class_index_containing(b);
            if (ia < 0 || ib < 0)
                throw DomainError("exposure_step: set straddles classes before separation");
            if (ia != ib) return {static_cast<int>(i), static_cast<int>(j)};
        }
    }
    throw DomainError("exposure_step: never separated");
}

StepIndex exposure_step(const PlaneSequence& seq, Vertex u, Vertex v) {
    return exposure_step(seq, VertexSet::single(u), VertexSet::single(v));
}

namespace {

Partition refine_by_components(const Hypergraph3& h, const Quasigraph& q, const Partition& p) {
    std::vector<VertexSet> cls;
    for (const VertexSet& x : p.classes)
        for (const VertexSet& c : components_on(h, q, x).classes) cls.push_back(c);
    return Partition::from_classes(cls);
}

Partition refine_by_anticomponents(const Hypergraph3& h, const Quasigraph& q,
                                   const Partition& p) {
    std::vector<VertexSet> cls;
    for (const VertexSet& x : p.classes)
        for (const VertexSet& c : anticomponents_on(h, q, x).classes) cls.push_back(c);
    return Partition::from_classes(cls);
}

// Exposure of pairs of classes of p, memoized; p's classes separate within the rows
// that stabilize to p, so lookups never run off the sequence.
struct ExposureCache {
    const PlaneSequence& seq;
    const Partition& p;
    std::map<std::pair<int, int>, StepIndex> memo;

    StepIndex of_pair(VertexSet class_pair) {
        QSKEL_CHECK(class_pair.count() == 2);
        int ca = class_pair.min();
        VertexSet rest = class_pair;
        rest.remove(ca);
        int cb = rest.min();
        auto key = std::make_pair(ca, cb);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        StepIndex s = exposure_step(seq, p.classes[static_cast<std::size_t>(ca)],
                                    p.classes[static_cast<std::size_t>(cb)]);
        // the start partition has one class, so nothing separates at (0, 0)
        QSKEL_CHECK(!(s == StepIndex{0, 0}));
        memo.emplace(key, s);
        return s;
    }
};

// Edges of the complement quotient of row row_index that lead a quasicycle: f leads
// one iff some class pair of f admits a cycle-completing path avoiding f whose pairs
// all have exposure at least that of f's pair (the pair's exposure then attains the
// cycle's minimum).
std::vector<EdgeId> leading_set_for_row(const PlaneSequence& seq, int row_index) {
    const Partition& p = seq.rows[static_cast<std::size_t>(row_index)].limit();
    QuotientHypergraph quot = quotient_hypergraph(seq.host, p);
    Hypergraph3 comp = complement_quotient(seq.host, seq.pi, quot);
    ExposureCache cache{seq, p, {}};
    std::vector<EdgeId> out;
    for (int idx = 0; idx < comp.edge_count(); ++idx) {
        const Hyperedge& f = comp.edges[static_cast<std::size_t>(idx)];
        for (VertexSet pr : pairs_of(f.vertices)) {
            StepIndex t = cache.of_pair(pr);
            auto filt = [&](VertexSet other) { return step_compare(cache.of_pair(other), t) >= 0; };
            Vertex a = pr.min();
            VertexSet rest = pr;
            rest.remove(a);
            if (find_pair_path(comp, a, rest.min(), idx, filt, seq.semantics)) {
                out.push_back(f.id);
                break;
            }
        }
    }
    return out;
}

StopWitness make_stop_witness(const PlaneSequence& seq, int row_index, EdgeId e) {
    const Partition& p = seq.rows[static_cast<std::size_t>(row_index)].limit();
    QuotientHypergraph quot = quotient_hypergraph(seq.host, p);
    Hypergraph3 comp = complement_quotient(seq.host, seq.pi, quot);
    ExposureCache cache{seq, p, {}};
    int eidx = comp.index_of(e);
    QSKEL_CHECK(eidx >= 0);
    for (VertexSet pr : pairs_of(comp.edges[static_cast<std::size_t>(eidx)].vertices)) {
        StepIndex t = cache.of_pair(pr);
        auto filt = [&](VertexSet other) { return step_compare(cache.of_pair(other), t) >= 0; };
        Vertex a = pr.min();
        VertexSet rest = pr;
        rest.remove(a);
        auto path = find_pair_path(comp, a, rest.min(), eidx, filt, seq.semantics);
        if (!path) continue;
        ClassCycle cyc;
        cyc.emplace_back(e, pr);
        for (const auto& [sidx, spr] : *path)
            cyc.emplace_back(comp.edges[static_cast<std::size_t>(sidx)].id, spr);
        std::sort(cyc.begin(), cyc.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Quasigraph check = Quasigraph::empty_on(comp);
        for (const auto& [id, cpr] : cyc) {
            int ci = comp.index_of(id);
            QSKEL_CHECK(ci >= 0 && !check.uses(ci));
            check.pairs[static_cast<std::size_t>(ci)] = cpr;
        }
        QSKEL_CHECK(is_quasicycle(comp, check, seq.semantics));
        return StopWitness{e, seq.host.edge_by_id(e).vertices, t, cyc};
    }
    throw InternalError("stop witness: leading edge admits no cycle");
}

}  // namespace

PlaneSequence build_plane_sequence(const Hypergraph3& h, const Quasigraph& q,
                                   CycleSemantics semantics) {
    validate_quasigraph(h, q);
    if (h.vertex_count < 1) throw DomainError("plane sequence needs a nonempty vertex set");
    PlaneSequence seq{h, q, semantics, {}};
    Partition start = Partition::trivial(h.vertex_set());
    for (int i = 0;; ++i) {
        QSKEL_CHECK(i <= h.vertex_count + 1);
        PlaneSequenceRow row;
        row.partitions.push_back(start);
        int streak = 0;
        for (int j = 1; streak < 2; ++j) {
            QSKEL_CHECK(j <= 2 * h.vertex_count + 4);
            const Partition& cur = row.partitions.back();
            Partition next = (j % 2 == 1) ? refine_by_components(h, q, cur)
                                          : refine_by_anticomponents(h, q, cur);
            QSKEL_CHECK(next.refines(cur));
            streak = (next == cur) ? streak + 1 : 0;
            row.partitions.push_back(std::move(next));
        }
        // stabilized; store columns through the first occurrence of the limit value
        Partition limit = row.partitions.back();
        for (std::size_t k = 0; k < row.partitions.size(); ++k) {
            if (row.partitions[k] == limit) {
                row.partitions.resize(k + 1);
                break;
            }
        }
        QSKEL_CHECK(is_solid(h, q, limit));
        seq.rows.push_back(std::move(row));

        QuotientHypergraph quot = quotient_hypergraph(h, limit);
        Hypergraph3 comp = complement_quotient(h, q, quot);
        if (!find_quasicycle(comp, semantics)) {
            seq.rows.back().decisive = Decisive{DecisiveKind::kTerminate, -1, VertexSet{}, false};
            return seq;
        }

        int row_index = static_cast<int>(seq.rows.size()) - 1;
        std::vector<EdgeId> lead = leading_set_for_row(seq, row_index);
        QSKEL_CHECK(!lead.empty());
        auto content_max = [&](const std::vector<EdgeId>& ids) {
            EdgeId best = ids.front();
            for (EdgeId id : ids)
                if (edge_order_compare(h.edge_by_id(id).vertices, h.edge_by_id(best).vertices) > 0)
                    best = id;
            return best;
        };
        std::vector<EdgeId> weak;
        std::map<EdgeId, EdgeRole> roles;
        for (EdgeId id : lead) {
            EdgeRole r = redundancy_class(h, q, limit, id);
            roles[id] = r;
            if (is_weakly_redundant(r)) weak.push_back(id);
        }
        if (!weak.empty()) {
            EdgeId e = content_max(weak);
            seq.rows.back().witness = make_stop_witness(seq, row_index, e);
            seq.rows.back().decisive = Decisive{DecisiveKind::kStop, -1, VertexSet{}, false};
            return seq;
        }

        EdgeId e = content_max(lead);
        const EdgeRole& role = roles[e];
        QSKEL_CHECK(role.kind == EdgeRole::kBridge || role.kind == EdgeRole::kAntibridge);
        std::vector<VertexSet> cls;
        if (role.kind == EdgeRole::kAntibridge) {
            for (const VertexSet& x : limit.classes)
                for (const VertexSet& c : anticomponents_on(h, q, x, e).classes) cls.push_back(c);
        } else {
            Quasigraph qe = without_edge(h, q, e);
            for (const VertexSet& x : limit.classes)
                for (const VertexSet& c : components_on(h, qe, x).classes) cls.push_back(c);
        }
        Partition split = Partition::from_classes(cls);
        QSKEL_CHECK(split.refines(limit) && !(split == limit));
        int eidx = h.index_of(e);
        seq.rows.back().decisive =
            Decisive{DecisiveKind::kContinue, e, h.edges[static_cast<std::size_t>(eidx)].vertices,
                     q.uses(eidx)};
        start = std::move(split);
    }
}

LeadingInfo leading_edges(const PlaneSequence& seq, const Partition& p, const ClassCycle& cycle) {
    QSKEL_CHECK(!cycle.empty());
    ExposureCache cache{seq, p, {}};
    LeadingInfo info;
    bool first = true;
    for (const auto& [id, pr] : cycle) {
        StepIndex t = cache.of_pair(pr);
        if (first || step_compare(t, info.step) < 0) {
            info.step = t;
            info.edges.assign(1, id);
            first = false;
        } else if (step_compare(t, info.step) == 0) {
            info.edges.push_back(id);
        }
    }
    std::sort(info.edges.begin(), info.edges.end());
    return info;
}

std::vector<EdgeId> leading_edge_set(const PlaneSequence& seq, const Partition& p) {
    int row_index = -1;
    for (std::size_t i = 0; i < seq.rows.size(); ++i)
        if (seq.rows[i].limit() == p) {
            row_index = static_cast<int>(i);
            break;
        }
    if (row_index < 0)
        throw DomainError("leading_edge_set: partition is not a stabilized row of the sequence");
    QuotientHypergraph quot = quotient_hypergraph(seq.host, p);
    Hypergraph3 comp = complement_quotient(seq.host, seq.pi, quot);
    if (!find_quasicycle(comp, seq.semantics))
        throw DomainError("leading_edge_set: complement quotient has no quasicycle");
    return leading_set_for_row(seq, row_index);
}

int compare_signatures(const PlaneSequence& a, const PlaneSequence& b) {
    QSKEL_CHECK(a.host.vertex_count == b.host.vertex_count);
    for (std::size_t i = 0;; ++i) {
        // equality through a stopping decisive returns before either side runs out
        QSKEL_CHECK(i < a.rows.size() && i < b.rows.size());
        const PlaneSequenceRow& ra = a.rows[i];
        const PlaneSequenceRow& rb = b.rows[i];
        int jmax = std::max(ra.last_j(), rb.last_j());
        for (int j = 0; j <= jmax; ++j) {
            const Partition& pa = j <= ra.last_j() ? ra.partitions[static_cast<std::size_t>(j)]
                                                   : ra.limit();
            const Partition& pb = j <= rb.last_j() ? rb.partitions[static_cast<std::size_t>(j)]
                                                   : rb.limit();
            int c = partition_compare_total(pa, pb);
            if (c != 0) return c;
        }
        int c = decisive_compare(ra.decisive, rb.decisive);
        if (c != 0) return c;
        if (ra.decisive.kind != DecisiveKind::kContinue) return 0;
    }
}

int compare_prefix(const PlaneSequence& a, const PlaneSequence& b, StepIndex upto) {
    QSKEL_CHECK(a.host.vertex_count == b.host.vertex_count);
    QSKEL_CHECK(upto.i >= 0 && upto.j >= 0);
    auto last_j_at = [](const PlaneSequence& s, int i) {
        if (i >= static_cast<int>(s.rows.size())) return 0;  // settled: one repeated column
        return s.rows[static_cast<std::size_t>(i)].last_j();
    };
    auto decisive_at = [](const PlaneSequence& s, int i) -> const Decisive& {
        int last = static_cast<int>(s.rows.size()) - 1;
        return s.rows[static_cast<std::size_t>(std::min(i, last))].decisive;
    };
    for (int i = 0; i <= upto.i; ++i) {
        bool full_row = i < upto.i || upto.j == StepIndex::kInfJ;
        int jmax = full_row ? std::max(last_j_at(a, i), last_j_at(b, i)) : upto.j;
        for (int j = 0; j <= jmax; ++j) {
            int c = partition_compare_total(partition_at(a, i, j), partition_at(b, i, j));
            if (c != 0) return c;
        }
        if (full_row) {
            int c = decisive_compare(decisive_at(a, i), decisive_at(b, i));
            if (c != 0) return c;
        }
    }
    return 0;
}

int compare_quasigraphs(const Hypergraph3& ha, const Quasigraph& qa, const Hypergraph3& hb,
                        const Quasigraph& qb, CycleSemantics semantics) {
    PlaneSequence sa = build_plane_sequence(ha, qa, semantics);
    PlaneSequence sb = build_plane_sequence(hb, qb, semantics);
    return compare_signatures(sa, sb);
}

}  // namespace qskel
