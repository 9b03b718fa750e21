#include "qskel/bad_leaf.hpp"

#include <algorithm>
#include <deque>

#include "qskel/error.hpp"

namespace qskel {

Orientation orient(const Hypergraph3& h, const Quasigraph& q, const RootPicker& pick_root) {
    if (!is_acyclic(h, q)) throw DomainError("orient: quasigraph must be acyclic");
    Orientation o;
    o.tail.assign(h.edges.size(), -1);
    Partition comps = components_on(h, q, h.vertex_set());
    std::vector<Vertex> parent(static_cast<size_t>(h.vertex_count), -1);
    for (const VertexSet& comp : comps.classes) {
        Vertex root = pick_root(comp);
        if (!comp.contains(root)) throw DomainError("orient: root outside its component");
        std::deque<Vertex> bfs;
        bfs.push_back(root);
        VertexSet seen = VertexSet::single(root);
        while (!bfs.empty()) {
            Vertex at = bfs.front();
            bfs.pop_front();
            for (int k = 0; k < h.edge_count(); ++k) {
                if (!q.uses(k)) continue;
                VertexSet pr = q.pair_at(k);
                if (!pr.contains(at)) continue;
                Vertex nb = (pr - VertexSet::single(at)).min();
                if (seen.contains(nb)) continue;
                seen.add(nb);
                parent[static_cast<size_t>(nb)] = at;
                bfs.push_back(nb);
            }
        }
        QSKEL_CHECK(seen == comp);
    }
    for (int k = 0; k < h.edge_count(); ++k) {
        if (!q.uses(k)) continue;
        auto vs = q.pair_at(k).to_vector();
        // a tree edge joins a vertex to its parent; the child is the tail
        if (parent[static_cast<size_t>(vs[0])] == vs[1]) o.tail[static_cast<size_t>(k)] = vs[0];
        else {
            QSKEL_CHECK(parent[static_cast<size_t>(vs[1])] == vs[0]);
            o.tail[static_cast<size_t>(k)] = vs[1];
        }
    }
    return o;
}

Orientation orient(const Hypergraph3& h, const Quasigraph& q) {
    return orient(h, q, [](VertexSet comp) { return comp.min(); });
}

std::vector<Vertex> bad_leaves(const Hypergraph3& h, const Quasigraph& q,
                               const RootPicker& pick_root) {
    Orientation o = orient(h, q, pick_root);
    std::vector<int> degree(static_cast<size_t>(h.vertex_count), 0);
    for (int k = 0; k < h.edge_count(); ++k) {
        if (!q.uses(k)) continue;
        for (Vertex v : q.pair_at(k).to_vector()) ++degree[static_cast<size_t>(v)];
    }
    std::vector<Vertex> out;
    for (Vertex u = 0; u < h.vertex_count; ++u) {
        if (degree[static_cast<size_t>(u)] != 1) continue;
        int incident = 0, triples = 0, e3 = -1;
        for (int k = 0; k < h.edge_count(); ++k) {
            if (!h.edges[static_cast<size_t>(k)].vertices.contains(u)) continue;
            ++incident;
            if (h.edges[static_cast<size_t>(k)].size() == 3) {
                ++triples;
                e3 = k;
            }
        }
        if (incident != 3 || triples != 1) continue;
        if (!q.uses(e3) || o.tail[static_cast<size_t>(e3)] != u) continue;
        out.push_back(u);
    }
    return out;
}

std::vector<Vertex> bad_leaves(const Hypergraph3& h, const Quasigraph& q) {
    return bad_leaves(h, q, [](VertexSet comp) { return comp.min(); });
}

namespace {

std::vector<VertexSet> used_pair_multiset(const Quasigraph& q) {
    std::vector<VertexSet> out;
    for (const VertexSet& p : q.pairs)
        if (!p.empty()) out.push_back(p);
    std::sort(out.begin(), out.end(),
              [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
    return out;
}

}  // namespace

SwitchResult switch_at(const Hypergraph3& h, const Quasigraph& q, Vertex u) {
    auto bad = bad_leaves(h, q);
    if (!std::binary_search(bad.begin(), bad.end(), u))
        throw DomainError("switch_at: vertex is not a bad leaf");

    int t1 = -1, t2 = -1, t3 = -1;
    for (int k = 0; k < h.edge_count(); ++k) {
        const Hyperedge& e = h.edges[static_cast<size_t>(k)];
        if (!e.vertices.contains(u)) continue;
        if (e.size() == 3) t3 = k;
        else (t1 < 0 ? t1 : t2) = k;
    }
    QSKEL_CHECK(t1 >= 0 && t2 >= 0 && t3 >= 0);
    VertexSet uset = VertexSet::single(u);
    Vertex a = (h.edges[static_cast<size_t>(t1)].vertices - uset).min();
    Vertex b = (h.edges[static_cast<size_t>(t2)].vertices - uset).min();
    VertexSet pr3 = q.pair_at(t3);
    QSKEL_CHECK(pr3.contains(u));
    Vertex c = (pr3 - uset).min();
    VertexSet dset = h.edges[static_cast<size_t>(t3)].vertices - pr3;
    QSKEL_CHECK(dset.count() == 1);
    Vertex d = dset.min();

    SwitchResult res;
    res.record.pivot = u;
    res.record.removed = {h.edges[static_cast<size_t>(t1)].id, h.edges[static_cast<size_t>(t2)].id,
                          h.edges[static_cast<size_t>(t3)].id};

    Hypergraph3 h2;
    h2.vertex_count = h.vertex_count;
    for (int k = 0; k < h.edge_count(); ++k)
        if (k != t1 && k != t2 && k != t3) h2.edges.push_back(h.edges[static_cast<size_t>(k)]);
    EdgeId base = h.next_edge_id;
    VertexSet vab = VertexSet::pair(a, b);
    vab.add(u);
    Hyperedge uab{base, vab};
    Hyperedge uc{base + 1, VertexSet::pair(u, c)};
    Hyperedge ud{base + 2, VertexSet::pair(u, d)};
    h2.edges.push_back(uab);
    h2.edges.push_back(uc);
    h2.edges.push_back(ud);
    h2.next_edge_id = base + 3;
    try {
        h2.validate(true);
    } catch (const DomainError& e) {
        throw InternalError(std::string("switch_at produced an invalid hypergraph: ") + e.what());
    }
    res.record.added = {uab, uc, ud};

    Quasigraph q2 = Quasigraph::empty_on(h2);
    for (int k = 0; k < h2.edge_count(); ++k) {
        EdgeId id = h2.edges[static_cast<size_t>(k)].id;
        if (id == uc.id) q2.pairs[static_cast<size_t>(k)] = VertexSet::pair(u, c);
        else if (id == uab.id || id == ud.id) continue;
        else q2.pairs[static_cast<size_t>(k)] = q.pair_at(h.index_of(id));
    }
    QSKEL_CHECK(used_pair_multiset(q2) == used_pair_multiset(q));

    auto bad2 = bad_leaves(h2, q2);
    QSKEL_CHECK(!std::binary_search(bad2.begin(), bad2.end(), u));

    res.host = std::move(h2);
    res.pi = std::move(q2);
    return res;
}

ClassCycle transfer_quasicycle(const Hypergraph3& h, const Quasigraph& q, const Partition& p,
                               const SwitchResult& sw, const ClassCycle& cycle) {
    QSKEL_CHECK(sw.record.removed.size() == 3 && sw.record.added.size() == 3);
    EdgeId ua_id = sw.record.removed[0], ub_id = sw.record.removed[1],
           ucd_id = sw.record.removed[2];
    EdgeId uab_id = sw.record.added[0].id, uc_id = sw.record.added[1].id,
           ud_id = sw.record.added[2].id;
    (void)uc_id;
    Vertex u = sw.record.pivot;
    int ucls = p.class_index_of(u);
    QSKEL_CHECK(ucls >= 0);

    auto other_end = [&](EdgeId id) {
        return (h.edge_by_id(id).vertices - VertexSet::single(u)).min();
    };

    ClassCycle out;
    std::optional<VertexSet> at_ua, at_ub;
    for (const auto& [id, pr] : cycle) {
        if (id == ua_id) at_ua = pr;
        else if (id == ub_id) at_ub = pr;
        else if (id == ucd_id) {
            // the 3-edge's value stays inside the pivot's class, so its quotient
            // classes are that class and the class of its remaining vertex
            int idx = h.index_of(ucd_id);
            VertexSet dset = h.edge_by_id(ucd_id).vertices - q.pair_at(idx);
            QSKEL_CHECK(dset.count() == 1);
            int dcls = p.class_index_of(dset.min());
            QSKEL_CHECK(pr == VertexSet::pair(ucls, dcls));
            out.emplace_back(ud_id, pr);
        } else {
            out.emplace_back(id, pr);
        }
    }
    if (at_ua && at_ub) {
        int acls = p.class_index_of(other_end(ua_id));
        int bcls = p.class_index_of(other_end(ub_id));
        QSKEL_CHECK(*at_ua == VertexSet::pair(ucls, acls));
        QSKEL_CHECK(*at_ub == VertexSet::pair(ucls, bcls));
        QSKEL_CHECK(acls != bcls);
        out.emplace_back(uab_id, VertexSet::pair(acls, bcls));
    } else if (at_ua) {
        out.emplace_back(uab_id, *at_ua);
    } else if (at_ub) {
        out.emplace_back(uab_id, *at_ub);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

NoBadOutcome solve_no_bad(const Hypergraph3& h, const Quasigraph& start,
                          CycleSemantics semantics) {
    auto used_size_total = [](const Hypergraph3& hh, const Quasigraph& qq) {
        int total = 0;
        for (int k = 0; k < hh.edge_count(); ++k)
            if (qq.uses(k)) total += hh.edges[static_cast<size_t>(k)].size();
        return total;
    };

    NoBadOutcome out;
    Hypergraph3 cur_h = h;
    Quasigraph cur_q = start;
    for (int phase = 0; phase < 100000; ++phase) {
        SkeletalOutcome sk = solve(cur_h, cur_q, semantics);
        out.solve_steps += sk.steps;
        auto bad = bad_leaves(sk.host, sk.pi);
        if (bad.empty()) {
            out.host = sk.host;
            out.pi = sk.pi;
            out.partition = sk.partition;
            out.seq = std::move(sk.seq);
            return out;
        }
        SwitchResult sw = switch_at(sk.host, sk.pi, bad.front());
        // the record never drops across a switch; the used size budget strictly
        // falls at equal record and used count, so phases cannot repeat
        int c = compare_quasigraphs(sw.host, sw.pi, sk.host, sk.pi, semantics);
        QSKEL_CHECK(c >= 0);
        QSKEL_CHECK(sw.pi.used_count() == sk.pi.used_count());
        QSKEL_CHECK(used_size_total(sw.host, sw.pi) == used_size_total(sk.host, sk.pi) - 1);
        if (bad_leaves(sw.host, sw.pi).size() >= bad.size()) out.bad_count_monotone = false;
        out.switches.push_back(sw.record);
        cur_h = std::move(sw.host);
        cur_q = std::move(sw.pi);
    }
    throw InternalError("solve_no_bad: phase cap exceeded");
}

NoBadOutcome solve_no_bad(const Hypergraph3& h, CycleSemantics semantics) {
    return solve_no_bad(h, Quasigraph::empty_on(h), semantics);
}

}  // namespace qskel
