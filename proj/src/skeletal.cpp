#include "qskel/skeletal.hpp"

#include <algorithm>

#include "qskel/error.hpp"

namespace qskel {

bool is_skeletal(const Hypergraph3& h, const Quasigraph& q, const Partition& p,
                 CycleSemantics semantics) {
    if (!is_solid(h, q, p)) return false;
    QuotientHypergraph quot = quotient_hypergraph(h, p);
    Hypergraph3 comp = complement_quotient(h, q, quot);
    return !find_quasicycle(comp, semantics).has_value();
}

std::pair<Vertex, Vertex> qc_addition(const Hypergraph3& h, const Quasigraph& q, VertexSet x,
                                      const Partition& partition, const ClassCycle& cycle,
                                      EdgeId edge, CycleSemantics semantics) {
    if (!anticonnected_on(h, q, x))
        throw DomainError("qc_addition: not anticonnected on the set");
    for (const VertexSet& c : partition.classes)
        if (c.intersects(x) && !c.subset_of(x))
            throw DomainError("qc_addition: partition does not refine the split at the set");
    if (!is_solid(h, q, partition)) throw DomainError("qc_addition: partition is not solid");

    QuotientHypergraph quot = quotient_hypergraph(h, partition);
    Hypergraph3 comp = complement_quotient(h, q, quot);
    Quasigraph gamma = Quasigraph::empty_on(comp);
    VertexSet touched_classes;
    for (const auto& [id, pr] : cycle) {
        int ci = comp.index_of(id);
        if (ci < 0 || gamma.uses(ci))
            throw DomainError("qc_addition: cycle edge unavailable in the complement quotient");
        if (pr.count() != 2 || !pr.subset_of(comp.edges[static_cast<size_t>(ci)].vertices))
            throw DomainError("qc_addition: cycle pair not a 2-subset of its quotient edge");
        gamma.pairs[static_cast<size_t>(ci)] = pr;
        touched_classes = touched_classes | pr;
    }
    if (!is_quasicycle(comp, gamma, semantics))
        throw DomainError("qc_addition: entries do not form a quasicycle");
    for (int c : touched_classes.to_vector())
        if (!partition.classes[static_cast<size_t>(c)].subset_of(x))
            throw DomainError("qc_addition: cycle leaves the set");

    int eidx = h.index_of(edge);
    if (eidx < 0 || q.uses(eidx)) throw DomainError("qc_addition: edge must be unused");
    if (redundancy_class(h, q, partition, edge).kind != EdgeRole::kRedundant)
        throw DomainError("qc_addition: edge is not redundant");

    PlaneSequence seq = build_plane_sequence(h, q, semantics);
    LeadingInfo li = leading_edges(seq, partition, cycle);
    if (std::find(li.edges.begin(), li.edges.end(), edge) == li.edges.end())
        throw DomainError("qc_addition: edge does not attain the cycle's exposure");

    VertexSet epr;
    for (const auto& [id, pr] : cycle)
        if (id == edge) epr = pr;
    QSKEL_CHECK(epr.count() == 2);
    int ca = epr.min();
    VertexSet rest = epr;
    rest.remove(ca);
    int cb = rest.min();
    VertexSet ea = h.edge_by_id(edge).vertices & partition.classes[static_cast<size_t>(ca)];
    VertexSet eb = h.edge_by_id(edge).vertices & partition.classes[static_cast<size_t>(cb)];
    QSKEL_CHECK(!ea.empty() && !eb.empty());
    Vertex u = ea.min(), v = eb.min();

    Quasigraph added = with_pair(h, q, edge, u, v);
    QSKEL_CHECK(anticonnected_on(h, added, x));
    return {u, v};
}

namespace {

EdgeId content_max(const Hypergraph3& h, const std::vector<EdgeId>& ids) {
    QSKEL_CHECK(!ids.empty());
    EdgeId best = ids.front();
    for (EdgeId id : ids)
        if (edge_order_compare(h.edge_by_id(id).vertices, h.edge_by_id(best).vertices) > 0)
            best = id;
    return best;
}

// Class of the partition containing all classes named by the cycle's pairs. The
// cycle's exposure is the minimum over its pairs, so every pair is still unseparated
// one step earlier: all its classes sit inside one class there.
VertexSet enclosing_class(const PlaneSequence& seq, const Partition& fin,
                          const ClassCycle& cycle, StepIndex step) {
    const Partition* pred;
    if (step.j > 0) {
        pred = &partition_at(seq, step.i, step.j - 1);
    } else {
        QSKEL_CHECK(step.i >= 1);
        pred = &seq.rows[static_cast<size_t>(step.i - 1)].limit();
    }
    VertexSet members;
    for (const auto& [id, pr] : cycle) {
        (void)id;
        for (int c : pr.to_vector()) members = members | fin.classes[static_cast<size_t>(c)];
    }
    int xi = pred->class_index_containing(members);
    QSKEL_CHECK(xi >= 0);
    return pred->classes[static_cast<size_t>(xi)];
}

}  // namespace

ImproveStep improve_step(const Hypergraph3& h, const Quasigraph& q, CycleSemantics semantics) {
    ImproveStep st;
    st.seq = build_plane_sequence(h, q, semantics);
    const PlaneSequence& seq = st.seq;
    const Partition& fin = seq.final_partition();
    const Decisive& last = seq.rows.back().decisive;
    bool acyclic = is_acyclic(h, q);
    // final partitions are solid, so skeletal reduces to the terminate outcome
    QSKEL_CHECK((last.kind == DecisiveKind::kTerminate) == is_skeletal(h, q, fin, semantics));

    if (last.kind == DecisiveKind::kTerminate && acyclic) {
        st.reason = ImproveReason::kDone;
        st.next = q;
        return st;
    }

    if (last.kind == DecisiveKind::kStop) {
        const StopWitness& w = *seq.rows.back().witness;
        VertexSet x = enclosing_class(seq, fin, w.cycle, w.step);
        int eidx = h.index_of(w.edge);
        QSKEL_CHECK(eidx >= 0);
        if (!q.uses(eidx)) {
            // an anticomponent split cannot separate the classes met by an unused
            // edge (the edge itself licenses their merge), so the column is odd or 0
            QSKEL_CHECK(w.step.j == 0 || w.step.j % 2 == 1);
            if (w.step.j == 1 && w.step.i >= 1) {
                // a used continuation edge splits by components, and the following
                // component column repeats that split, exposing nothing
                const Decisive& d = seq.rows[static_cast<size_t>(w.step.i - 1)].decisive;
                QSKEL_CHECK(d.kind == DecisiveKind::kContinue && !d.edge_used);
            }
            VertexSet epr;
            for (const auto& [id, pr] : w.cycle)
                if (id == w.edge) epr = pr;
            QSKEL_CHECK(epr.count() == 2);
            int ca = epr.min();
            VertexSet rest = epr;
            rest.remove(ca);
            int cb = rest.min();
            VertexSet ea = w.edge_vertices & fin.classes[static_cast<size_t>(ca)];
            VertexSet eb = w.edge_vertices & fin.classes[static_cast<size_t>(cb)];
            QSKEL_CHECK(!ea.empty() && !eb.empty());
            Vertex u = ea.min(), v = eb.min();
            if (anticonnected_on(h, q, x)) {
                auto [uu, vv] = qc_addition(h, q, x, fin, w.cycle, w.edge, semantics);
                QSKEL_CHECK(uu == u && vv == v);
            } else {
                // only the very first component column can lack anticonnectedness:
                // every later predecessor is an anticomponent or a stabilized class
                QSKEL_CHECK(w.step.i == 0 && w.step.j == 1 && x == h.vertex_set());
            }
            st.reason = ImproveReason::kAdditionAtStop;
            st.edge = w.edge;
            st.u = u;
            st.v = v;
            st.next = with_pair(h, q, w.edge, u, v);
        } else {
            // a used member of the complement quotient keeps its value inside a class
            int pc = fin.class_index_containing(q.pair_at(eidx));
            QSKEL_CHECK(pc >= 0);
            st.reason = ImproveReason::kRemovalUsedLeading;
            st.edge = w.edge;
            st.next = without_edge(h, q, w.edge);
            // weakly redundant, not a bridge: the class stays connected
            QSKEL_CHECK(connected_on(h, st.next, fin.classes[static_cast<size_t>(pc)]));
        }
    } else {
        // terminate but cyclic: a pair-graph cycle survives; it cannot cross the
        // final partition and sit inside a class at once, so exactly one case fires
        QuotientHypergraph quot = quotient_hypergraph(h, fin);
        Quasigraph qq = quotient_quasigraph(h, q, quot);
        auto qcycle = pair_graph_cycle(quot.graph, qq, quot.graph.vertex_set());
        if (qcycle) {
            LeadingInfo li = leading_edges(seq, fin, *qcycle);
            // component splits cannot separate a used pair, so the column is even
            QSKEL_CHECK(li.step.j % 2 == 0);
            EdgeId e = content_max(h, li.edges);
            VertexSet x = enclosing_class(seq, fin, *qcycle, li.step);
            st.reason = ImproveReason::kRemovalQuotientCycle;
            st.edge = e;
            st.next = without_edge(h, q, e);
            // the rest of the lifted cycle keeps the enclosing class connected
            QSKEL_CHECK(connected_on(h, st.next, x));
        } else {
            bool found = false;
            for (const VertexSet& c : fin.classes) {
                auto inner = pair_graph_cycle(h, q, c);
                if (!inner) continue;
                std::vector<EdgeId> ids;
                for (const auto& [id, pr] : *inner) {
                    (void)pr;
                    ids.push_back(id);
                }
                EdgeId e = content_max(h, ids);
                st.reason = ImproveReason::kRemovalInnerCycle;
                st.edge = e;
                st.next = without_edge(h, q, e);
                found = true;
                break;
            }
            QSKEL_CHECK(found);
        }
    }

    PlaneSequence nseq = build_plane_sequence(h, st.next, semantics);
    st.compare_result = compare_signatures(nseq, seq);
    if (st.reason == ImproveReason::kAdditionAtStop) {
        QSKEL_CHECK(st.compare_result > 0);
    } else {
        QSKEL_CHECK(st.compare_result > 0 ||
                    (st.compare_result == 0 && st.next.used_count() < q.used_count()));
    }
    return st;
}

SkeletalOutcome solve(const Hypergraph3& h, const Quasigraph& start, CycleSemantics semantics) {
    Quasigraph q = start;
    // each move raises (record, -used edges) lexicographically in a finite space
    for (int iter = 0; iter < 100000; ++iter) {
        ImproveStep st = improve_step(h, q, semantics);
        if (st.reason == ImproveReason::kDone) {
            QSKEL_CHECK(is_acyclic(h, q));
            QSKEL_CHECK(is_skeletal(h, q, st.seq.final_partition(), semantics));
            Partition fin = st.seq.final_partition();
            return SkeletalOutcome{h, std::move(q), std::move(fin), std::move(st.seq), iter};
        }
        q = std::move(st.next);
    }
    throw InternalError("solve: iteration cap exceeded");
}

SkeletalOutcome solve(const Hypergraph3& h, CycleSemantics semantics) {
    return solve(h, Quasigraph::empty_on(h), semantics);
}

}  // namespace qskel
