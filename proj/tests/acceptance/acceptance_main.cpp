// Acceptance suite: eight end-to-end checks over the whole library, printing one
// PASS/FAIL line per criterion and exiting nonzero when any of them fails. Every
// randomized sweep runs from a fixed seed so reruns are byte-identical.
#include "../test_util.hpp"
#include "qskel/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace qskel;

using Clock = std::chrono::steady_clock;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void req(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

int below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
}

// Draws instance sizes until the generator can satisfy them.
Hypergraph3 rand_host(std::mt19937_64& rng, int nmin, int nmax, int mmin, int mmax, int tri) {
    for (;;) {
        int n = nmin + below(rng, nmax - nmin + 1);
        int m = mmin + below(rng, mmax - mmin + 1);
        try {
            return random_hypergraph(rng, n, m, tri);
        } catch (const DomainError&) {
            // the requested edge count is unreachable for this size; redraw
        }
    }
}

VertexSet random_pair_of(std::mt19937_64& rng, VertexSet edge) {
    std::vector<VertexSet> prs = pairs_of(edge);
    return prs[static_cast<std::size_t>(below(rng, static_cast<int>(prs.size())))];
}

Vertex other_end(VertexSet pr, Vertex u) { return (pr - VertexSet::single(u)).min(); }

// Random partition of a ground set with at most max_blocks classes.
Partition random_partition(std::mt19937_64& rng, VertexSet ground, int max_blocks) {
    if (ground.empty()) return Partition();
    int blocks = 1 + below(rng, max_blocks);
    std::vector<VertexSet> cells(static_cast<std::size_t>(blocks));
    for (Vertex v : ground.to_vector()) cells[static_cast<std::size_t>(below(rng, blocks))].add(v);
    std::vector<VertexSet> nonempty;
    for (const VertexSet& c : cells)
        if (!c.empty()) nonempty.push_back(c);
    return Partition::from_classes(nonempty);
}

// Used entries of a quasigraph as (edge id, pair), ascending by id.
ClassCycle cycle_entries(const Hypergraph3& host, const Quasigraph& g) {
    ClassCycle out;
    for (int k = 0; k < host.edge_count(); ++k)
        if (g.uses(k)) out.push_back({host.edges[static_cast<std::size_t>(k)].id, g.pair_at(k)});
    std::sort(out.begin(), out.end(),
              [](const std::pair<EdgeId, VertexSet>& x, const std::pair<EdgeId, VertexSet>& y) {
                  return x.first < y.first;
              });
    return out;
}

Quasigraph entries_to_quasigraph(const Hypergraph3& host, const ClassCycle& cycle) {
    Quasigraph g = Quasigraph::empty_on(host);
    for (const std::pair<EdgeId, VertexSet>& entry : cycle) {
        int k = host.index_of(entry.first);
        req(k >= 0, "a cycle entry names an edge missing from its quotient");
        g.pairs[static_cast<std::size_t>(k)] = entry.second;
    }
    return g;
}

// Used pairs with multiplicity, sorted; the pair graph up to renaming of the
// carrying hyperedges.
std::vector<std::uint64_t> pair_multiset(const Quasigraph& q) {
    std::vector<std::uint64_t> out;
    for (const VertexSet& p : q.pairs)
        if (!p.empty()) out.push_back(p.bits);
    std::sort(out.begin(), out.end());
    return out;
}

const Partition& predecessor_partition(const PlaneSequence& seq, StepIndex at) {
    req(!(at.i == 0 && at.j == 0), "the very first partition has no predecessor");
    if (at.j > 0) return partition_at(seq, at.i, at.j - 1);
    return partition_at(seq, at.i - 1, StepIndex::kInfJ);
}

// ---------------------------------------------------------------------------
// criterion 1: the anticomponent fixpoint against the definitional scan
// ---------------------------------------------------------------------------

std::string criterion1_anticomponents() {
    const EnumBudget budget;
    long long shell_pairs = 0;
    // Exhaustive shell: every host on up to four labelled vertices, every
    // quasigraph on it, every vertex subset queried.
    for (int n = 1; n <= 4; ++n) {
        std::vector<VertexSet> cand = tu::all_candidate_edges(n);
        int masks = 1 << n;
        std::vector<std::vector<Partition>> parts(static_cast<std::size_t>(masks));
        for (int mask = 0; mask < masks; ++mask)
            parts[static_cast<std::size_t>(mask)] =
                enumerate_partitions(VertexSet(static_cast<std::uint64_t>(mask)), budget);
        int ecount = static_cast<int>(cand.size());
        std::vector<char> table(static_cast<std::size_t>(masks));
        for (int pick = 0; pick < (1 << ecount); ++pick) {
            std::vector<VertexSet> sel;
            for (int k = 0; k < ecount; ++k)
                if (pick >> k & 1) sel.push_back(cand[static_cast<std::size_t>(k)]);
            Hypergraph3 h = make_hypergraph(n, sel);
            enumerate_quasigraphs(h, budget, [&](const Quasigraph& q) {
                ++shell_pairs;
                for (int mask = 0; mask < masks; ++mask)
                    table[static_cast<std::size_t>(mask)] =
                        anticonnected_def_with(h, q, VertexSet(static_cast<std::uint64_t>(mask)),
                                               parts[static_cast<std::size_t>(mask)])
                            ? 1
                            : 0;
                for (int mask = 0; mask < masks; ++mask) {
                    VertexSet x(static_cast<std::uint64_t>(mask));
                    req(anticonnected_on(h, q, x) == (table[static_cast<std::size_t>(mask)] != 0),
                        "anticonnected fixpoint disagrees with the definition on the exhaustive shell");
                    req(anticomponents_on(h, q, x) == anticomponents_from_table(table, x),
                        "anticomponent fixpoint disagrees with the definition on the exhaustive shell");
                }
                return true;
            });
        }
    }
    // Seeded random instances, each queried on every vertex subset.
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 500) {
        Hypergraph3 h = rand_host(rng, 2, 6, 1, 6, 50);
        Quasigraph q = random_quasigraph(rng, h);
        int masks = 1 << h.vertex_count;
        std::vector<char> table(static_cast<std::size_t>(masks));
        for (int mask = 0; mask < masks; ++mask)
            table[static_cast<std::size_t>(mask)] =
                anticonnected_def(h, q, VertexSet(static_cast<std::uint64_t>(mask)), budget) ? 1
                                                                                             : 0;
        for (int mask = 0; mask < masks; ++mask) {
            VertexSet x(static_cast<std::uint64_t>(mask));
            req(anticonnected_on(h, q, x) == (table[static_cast<std::size_t>(mask)] != 0),
                "anticonnected fixpoint disagrees with the definition on a seeded instance");
            req(anticomponents_on(h, q, x) == anticomponents_from_table(table, x),
                "anticomponent fixpoint disagrees with the definition on a seeded instance");
        }
        ++done;
    }
    std::ostringstream os;
    os << "exhaustive shell of " << shell_pairs << " host/quasigraph pairs plus " << done
       << " seeded instances, every subset queried, all agree";
    return os.str();
}

// ---------------------------------------------------------------------------
// criterion 2: quasicycle search and leading-edge sets against enumeration
// ---------------------------------------------------------------------------

std::string criterion2_quasicycles_and_leaders() {
    const EnumBudget budget;
    std::mt19937_64 rng(22);
    int done = 0;
    long long existence_checks = 0, leader_rows = 0, cycle_free_rows = 0;
    while (done < 500) {
        Hypergraph3 h = rand_host(rng, 3, 6, 1, 6, 50);
        for (CycleSemantics sem : {CycleSemantics::kMultigraph, CycleSemantics::kSimple}) {
            std::optional<Quasigraph> found = find_quasicycle(h, sem);
            req(found.has_value() == quasicycle_exists_def(h, sem, budget),
                "quasicycle search disagrees with exhaustive existence");
            if (found)
                req(is_quasicycle(h, *found, sem), "quasicycle search returned a non-quasicycle");
            ++existence_checks;

            // quotient of the unused part by a random partition; may carry
            // parallel edges
            Partition p = random_partition(rng, h.vertex_set(), h.vertex_count);
            Quasigraph q = random_quasigraph(rng, h);
            Hypergraph3 cq = complement_quotient(h, q, quotient_hypergraph(h, p));
            std::optional<Quasigraph> qfound = find_quasicycle(cq, sem);
            req(qfound.has_value() == quasicycle_exists_def(cq, sem, budget),
                "quasicycle search disagrees with exhaustive existence on a quotient");
            if (qfound)
                req(is_quasicycle(cq, *qfound, sem),
                    "quasicycle search returned a non-quasicycle on a quotient");
            ++existence_checks;

            // leading-edge sets at every stabilized row of a refinement trace
            Quasigraph q2 = random_quasigraph(rng, h);
            PlaneSequence seq = build_plane_sequence(h, q2, sem);
            for (const PlaneSequenceRow& row : seq.rows) {
                const Partition& lim = row.limit();
                try {
                    std::vector<EdgeId> want = leading_set_def(seq, lim, budget);
                    req(leading_edge_set(seq, lim) == want,
                        "incremental leading-edge set disagrees with enumeration");
                    ++leader_rows;
                } catch (const DomainError&) {
                    bool threw = false;
                    try {
                        leading_edge_set(seq, lim);
                    } catch (const DomainError&) {
                        threw = true;
                    }
                    req(threw, "incremental leading-edge set accepted a cycle-free quotient");
                    ++cycle_free_rows;
                }
            }
        }
        ++done;
    }
    std::ostringstream os;
    os << done << " instances under both semantics: " << existence_checks
       << " existence checks, leading sets at " << leader_rows << " rows ("
       << cycle_free_rows << " cycle-free rows rejected consistently)";
    return os.str();
}

// ---------------------------------------------------------------------------
// criteria 3 and 4: the solver sweep and the per-step dichotomy
// ---------------------------------------------------------------------------

struct SolverSweep {
    long long improve_calls = 0;
    long long additions = 0;
    long long removals = 0;
    long long dichotomy_violations = 0;
    int max_steps = 0;
    std::string transcript;
};

SolverSweep run_solver_sweep(bool check_validity) {
    const EnumBudget budget;
    SolverSweep out;
    std::mt19937_64 rng(33);
    int done = 0;
    while (done < 1000) {
        Hypergraph3 h = rand_host(rng, 2, 8, 1, 8, 50);
        CycleSemantics sem =
            done % 2 == 0 ? CycleSemantics::kMultigraph : CycleSemantics::kSimple;
        Quasigraph start =
            done % 4 == 0 ? Quasigraph::empty_on(h) : random_quasigraph(rng, h);

        Quasigraph cur = start;
        int steps = 0;
        for (;;) {
            ImproveStep st = improve_step(h, cur, sem);
            ++out.improve_calls;
            if (st.reason == ImproveReason::kDone) {
                req(st.next == cur, "a finished improvement step altered the quasigraph");
                break;
            }
            int cmp = compare_quasigraphs(h, st.next, h, cur, sem);
            req(cmp == st.compare_result, "an improvement step misreported its comparison");
            if (!(cmp > 0 || (cmp == 0 && st.next.used_count() < cur.used_count())))
                ++out.dichotomy_violations;
            if (st.reason == ImproveReason::kAdditionAtStop) {
                req(cmp > 0, "an addition step failed to raise the record");
                req(st.next.used_count() == cur.used_count() + 1,
                    "an addition step did not add exactly one used edge");
                ++out.additions;
            } else {
                req(st.next.used_count() == cur.used_count() - 1,
                    "a removal step did not drop exactly one used edge");
                ++out.removals;
            }
            cur = st.next;
            ++steps;
            req(steps <= 100000, "improvement loop failed to converge");
        }

        SkeletalOutcome so = solve(h, start, sem);
        req(so.pi == cur, "solver result differs from the stepwise improvement loop");
        req(so.steps == steps, "solver step count differs from the stepwise loop");
        req(is_acyclic(h, so.pi), "solver returned a cyclic quasigraph");
        req(so.partition == so.seq.final_partition(),
            "solver partition is not the final partition of its trace");
        if (check_validity)
            req(skeletal_def(h, so.pi, so.partition, sem, budget),
                "solver partition fails the exhaustive skeletal check");
        out.transcript += skeletal_outcome_to_json(so);
        out.max_steps = std::max(out.max_steps, steps);
        ++done;
    }
    return out;
}

// ---------------------------------------------------------------------------
// criterion 5: the frozen worked example, end to end
// ---------------------------------------------------------------------------

struct GoldenRun {
    std::string detail;
    std::string transcript;
};

GoldenRun run_golden_chain() {
    const EnumBudget budget;
    Hypergraph3 m4 = tu::m4();
    Quasigraph pi0 = tu::pi0(m4);
    const CycleSemantics sem = CycleSemantics::kMultigraph;

    PlaneSequence seq = build_plane_sequence(m4, pi0, sem);
    req(seq.rows.size() == 2, "golden trace: expected exactly two rows");
    const PlaneSequenceRow& r0 = seq.rows[0];
    req(r0.partitions.size() == 2, "golden trace: row 0 must store two partitions");
    req(r0.partitions[0] == Partition::trivial(m4.vertex_set()),
        "golden trace: row 0 starts at the one-class partition");
    req(r0.partitions[1] == tu::ptn({{0, 1}, {2, 3}}),
        "golden trace: row 0 stabilizes at {{0,1},{2,3}}");
    req(r0.decisive.kind == DecisiveKind::kContinue, "golden trace: row 0 must continue");
    req(r0.decisive.edge == 2 && r0.decisive.edge_vertices == tu::vs({0, 2, 3}) &&
            !r0.decisive.edge_used,
        "golden trace: row 0 continues at the unused 3-edge {0,2,3}");

    const PlaneSequenceRow& r1 = seq.rows[1];
    req(r1.partitions.size() == 1 && r1.partitions[0] == tu::ptn({{0, 1}, {2}, {3}}),
        "golden trace: row 1 is {{0,1},{2},{3}} throughout");
    req(r1.decisive.kind == DecisiveKind::kStop, "golden trace: row 1 must stop");
    req(r1.witness.has_value(), "golden trace: a stop must carry a witness");
    req(r1.witness->edge == 2 && r1.witness->edge_vertices == tu::vs({0, 2, 3}),
        "golden trace: the stop witness edge is the 3-edge {0,2,3}");
    req(r1.witness->step == StepIndex{0, 1}, "golden trace: witness cycle exposed at (0,1)");
    ClassCycle expect_cycle = {{0, tu::vs({0, 1})}, {2, tu::vs({0, 1})}};
    req(r1.witness->cycle == expect_cycle,
        "golden trace: witness cycle joins classes 0 and 1 via edges 0 and 2");

    const Partition& p0 = r0.limit();
    const Partition& p1 = r1.limit();
    EdgeRole role = redundancy_class(m4, pi0, p0, 0);
    req(role.kind == EdgeRole::kBridge && role.class_index == 0,
        "golden roles: edge 0 bridges class 0 of row 0");
    role = redundancy_class(m4, pi0, p0, 1);
    req(role.kind == EdgeRole::kAntibridge && role.class_index == 0,
        "golden roles: edge 1 antibridges class 0 of row 0");
    role = redundancy_class(m4, pi0, p0, 2);
    req(role.kind == EdgeRole::kAntibridge && role.class_index == 1,
        "golden roles: edge 2 antibridges class 1 of row 0");
    role = redundancy_class(m4, pi0, p1, 0);
    req(role.kind == EdgeRole::kBridge && role.class_index == 0,
        "golden roles: edge 0 bridges class 0 of row 1");
    role = redundancy_class(m4, pi0, p1, 1);
    req(role.kind == EdgeRole::kAntibridge && role.class_index == 0,
        "golden roles: edge 1 antibridges class 0 of row 1");
    role = redundancy_class(m4, pi0, p1, 2);
    req(role.kind == EdgeRole::kRedundant, "golden roles: edge 2 is redundant at row 1");
    role = redundancy_class(m4, pi0, p1, 3);
    req(role.kind == EdgeRole::kWeaklyRedundant,
        "golden roles: edge 3 is weakly redundant at row 1");

    req(exposure_step(seq, 0, 2) == StepIndex{0, 1},
        "golden exposure: vertices 0 and 2 separate at (0,1)");
    req(exposure_step(seq, 2, 3) == StepIndex{1, 0},
        "golden exposure: vertices 2 and 3 separate at (1,0)");
    bool threw = false;
    try {
        exposure_step(seq, 0, 1);
    } catch (const DomainError&) {
        threw = true;
    }
    req(threw, "golden exposure: vertices 0 and 1 never separate");
    req(exposure_step(seq, tu::vs({0, 1}), tu::vs({2})) == StepIndex{0, 1},
        "golden exposure: classes {0,1} and {2} separate at (0,1)");

    LeadingInfo li = leading_edges(seq, p1, r1.witness->cycle);
    req(li.step == StepIndex{0, 1}, "golden leaders: witness cycle exposed at (0,1)");
    req(li.edges == (std::vector<EdgeId>{0, 2}),
        "golden leaders: witness cycle led by edges 0 and 2");
    req(leading_edge_set(seq, p0) == (std::vector<EdgeId>{0, 1, 2}),
        "golden leaders: edges 0, 1, 2 lead quasicycles at row 0");
    req(leading_edge_set(seq, p1) == (std::vector<EdgeId>{0, 1, 2}),
        "golden leaders: edges 0, 1, 2 lead quasicycles at row 1");

    std::pair<Vertex, Vertex> uv =
        qc_addition(m4, pi0, m4.vertex_set(), p1, r1.witness->cycle, 2, sem);
    req(uv.first == 0 && uv.second == 2, "golden addition: edge 2 closes through 0 and 2");

    ImproveStep st = improve_step(m4, pi0, sem);
    req(st.reason == ImproveReason::kAdditionAtStop,
        "golden step: expected an addition at the stop");
    req(st.edge == 2 && st.u == 0 && st.v == 2, "golden step: the addition assigns {0,2} to edge 2");
    req(st.compare_result > 0, "golden step: the addition must raise the record");
    Quasigraph pi1 =
        tu::quas(m4, {{0, tu::vs({0, 1})}, {2, tu::vs({0, 2})}, {3, tu::vs({2, 3})}});
    req(st.next == pi1, "golden step: the successor uses edges 0, 2 and 3");

    PlaneSequence seq1 = build_plane_sequence(m4, pi1, sem);
    req(seq1.rows.size() == 1 && seq1.rows[0].partitions.size() == 1 &&
            seq1.rows[0].partitions[0] == Partition::trivial(m4.vertex_set()) &&
            seq1.rows[0].decisive.kind == DecisiveKind::kTerminate,
        "golden successor: a single one-class row that terminates");

    SkeletalOutcome so = solve(m4, pi0, sem);
    req(so.steps == 1 && so.pi == pi1, "golden solve: one move to the successor");
    req(so.partition == Partition::trivial(m4.vertex_set()),
        "golden solve: final partition is the one-class partition");
    req(so.pi.used_count() == 3, "golden solve: exactly three used hyperedges");
    req(is_skeletal(m4, so.pi, so.partition, sem), "golden solve: final partition not skeletal");
    req(skeletal_def(m4, so.pi, so.partition, sem, budget),
        "golden solve: exhaustive skeletal check failed");
    req(compare_quasigraphs(m4, pi1, m4, pi0, sem) > 0,
        "golden solve: the successor must outrank the start");

    GoldenRun out;
    out.transcript = trace_to_json(seq) + skeletal_outcome_to_json(so);
    out.detail =
        "two-row trace, stop witness, roles, exposures, leaders, addition (0,2), "
        "one solve step to three used edges, all as frozen";
    return out;
}

// ---------------------------------------------------------------------------
// criterion 6: randomized property samplers, one per structural fact
// ---------------------------------------------------------------------------

// Union of two overlapping-or-linked anticonnected sets stays anticonnected.
std::string sampler_union() {
    std::mt19937_64 rng(6601);
    long long total = 0, proper = 0, attempts = 0;
    while (total < 10000 || proper < 2500) {
        req(++attempts <= 300000, "union: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 1, 7, 50);
        Quasigraph q = random_quasigraph(rng, h);
        for (int t = 0; t < 20; ++t) {
            VertexSet x = random_subset(rng, h.vertex_set());
            VertexSet y = random_subset(rng, h.vertex_set());
            if (below(rng, 2) == 0 && !x.empty()) {
                std::vector<Vertex> xs = x.to_vector();
                y.add(xs[static_cast<std::size_t>(below(rng, static_cast<int>(xs.size())))]);
            }
            bool linked = x.intersects(y);
            for (int k = 0; k < h.edge_count() && !linked; ++k) {
                VertexSet e = h.edges[static_cast<std::size_t>(k)].vertices;
                VertexSet val = q.pair_at(k);
                linked = e.intersects(x) && e.intersects(y) &&
                         (val.empty() || val.subset_of(x) || val.subset_of(y));
            }
            if (!linked) continue;
            if (!anticonnected_on(h, q, x) || !anticonnected_on(h, q, y)) continue;
            req(anticonnected_on(h, q, x | y),
                "union: joining linked anticonnected sets lost anticonnectivity");
            ++total;
            if (!x.subset_of(y) && !y.subset_of(x)) ++proper;
        }
    }
    std::ostringstream os;
    os << "union " << total << " (" << proper << " proper)";
    return os.str();
}

// Values of edges meeting a set in at most one vertex never affect its
// anticonnectivity status.
std::string sampler_outside_values() {
    std::mt19937_64 rng(6602);
    long long total = 0, held = 0, failed = 0, attempts = 0;
    while (total < 10000 || held < 100 || failed < 100) {
        req(++attempts <= 300000, "outside-values: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 1, 7, 50);
        Quasigraph q = random_quasigraph(rng, h);
        for (int t = 0; t < 10; ++t) {
            VertexSet y = random_subset(rng, h.vertex_set());
            Quasigraph r = q;
            for (int k = 0; k < h.edge_count(); ++k) {
                VertexSet e = h.edges[static_cast<std::size_t>(k)].vertices;
                if ((e & y).count() >= 2) continue;
                std::vector<VertexSet> prs = pairs_of(e);
                int roll = below(rng, static_cast<int>(prs.size()) + 1);
                r.pairs[static_cast<std::size_t>(k)] =
                    roll == 0 ? VertexSet() : prs[static_cast<std::size_t>(roll - 1)];
            }
            bool a = anticonnected_on(h, q, y);
            req(a == anticonnected_on(h, r, y),
                "outside-values: rewriting detached values changed anticonnectivity");
            ++total;
            ++(a ? held : failed);
        }
    }
    std::ostringstream os;
    os << "outside-values " << total << " (" << held << " anticonnected, " << failed
       << " not)";
    return os.str();
}

// Deleting an edge that meets an anticonnected set in at most one vertex keeps
// the set anticonnected, both via exclusion and via actual removal.
std::string sampler_detached_deletion() {
    std::mt19937_64 rng(6603);
    long long total = 0, attempts = 0;
    while (total < 10000) {
        req(++attempts <= 300000, "detached-deletion: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 2, 7, 50);
        Quasigraph q = random_quasigraph(rng, h);
        for (int t = 0; t < 10; ++t) {
            VertexSet x = random_subset(rng, h.vertex_set());
            std::vector<int> loose;
            for (int k = 0; k < h.edge_count(); ++k)
                if ((h.edges[static_cast<std::size_t>(k)].vertices & x).count() <= 1)
                    loose.push_back(k);
            if (loose.empty()) continue;
            if (!anticonnected_on(h, q, x)) continue;
            int k = loose[static_cast<std::size_t>(below(rng, static_cast<int>(loose.size())))];
            EdgeId id = h.edges[static_cast<std::size_t>(k)].id;
            req(anticonnected_on(h, q, x, id),
                "detached-deletion: excluding the edge broke anticonnectivity");
            Hypergraph3 h2 = without_edge(h, id);
            Quasigraph q2;
            q2.pairs.reserve(h2.edges.size());
            for (const Hyperedge& e : h2.edges)
                q2.pairs.push_back(q.pair_at(h.index_of(e.id)));
            req(anticonnected_on(h2, q2, x),
                "detached-deletion: removing the edge broke anticonnectivity");
            ++total;
        }
    }
    return "detached-deletion " + std::to_string(total);
}

// Assigning a pair inside a subset: anticonnectivity lifts from the subset to
// the superset, and connectivity of the superset is never lost.
std::string sampler_inside_addition() {
    std::mt19937_64 rng(6604);
    long long anti_cases = 0, conn_cases = 0, attempts = 0;
    while (anti_cases < 10000 || conn_cases < 10000) {
        req(++attempts <= 2000000, "inside-addition: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 2, 7, 50);
        Quasigraph q = random_quasigraph(rng, h);
        Partition comp = components_on(h, q, h.vertex_set());
        for (int t = 0; t < 10; ++t) {
            int k = below(rng, h.edge_count());
            if (q.uses(k)) continue;
            const Hyperedge& e = h.edges[static_cast<std::size_t>(k)];
            VertexSet pr = random_pair_of(rng, e.vertices);
            Vertex u = pr.min();
            Vertex v = other_end(pr, u);
            VertexSet x = t % 2 == 0 ? (random_subset(rng, h.vertex_set()) | pr)
                                     : (comp.class_of(u) | pr);
            VertexSet y = (random_subset(rng, h.vertex_set()) & x) | pr;
            Quasigraph r = with_pair(h, q, e.id, u, v);
            if (anticonnected_on(h, q, x) && anticonnected_on(h, r, y)) {
                req(anticonnected_on(h, r, x),
                    "inside-addition: anticonnectivity on the superset was lost");
                ++anti_cases;
            }
            if (connected_on(h, q, x)) {
                req(connected_on(h, r, x),
                    "inside-addition: connectivity was lost by adding a pair");
                ++conn_cases;
            }
        }
    }
    std::ostringstream os;
    os << "inside-addition " << anti_cases << "+" << conn_cases;
    return os.str();
}

// Unassigning an edge whose pair lies inside a subset: anticonnectivity of any
// superset survives; connectivity survives when the subset stays connected.
std::string sampler_inside_removal() {
    std::mt19937_64 rng(6605);
    long long anti_cases = 0, conn_cases = 0, attempts = 0;
    while (anti_cases < 10000 || conn_cases < 10000) {
        req(++attempts <= 2000000, "inside-removal: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 2, 8, 60);
        Quasigraph q = Quasigraph::empty_on(h);
        for (int k = 0; k < h.edge_count(); ++k)
            if (below(rng, 4) < 3)
                q.pairs[static_cast<std::size_t>(k)] =
                    random_pair_of(rng, h.edges[static_cast<std::size_t>(k)].vertices);
        std::vector<int> used;
        for (int k = 0; k < h.edge_count(); ++k)
            if (q.uses(k)) used.push_back(k);
        if (used.empty()) continue;
        Partition comp = components_on(h, q, h.vertex_set());
        for (int t = 0; t < 10; ++t) {
            int k = used[static_cast<std::size_t>(below(rng, static_cast<int>(used.size())))];
            const Hyperedge& e = h.edges[static_cast<std::size_t>(k)];
            VertexSet pr = q.pair_at(k);
            Vertex u = pr.min();
            Quasigraph s = without_edge(h, q, e.id);
            VertexSet x, y;
            if (t % 2 == 0) {
                x = random_subset(rng, h.vertex_set()) | pr;
                y = (random_subset(rng, h.vertex_set()) & x) | pr;
            } else {
                x = comp.class_of(u);
                Partition scomp = components_on(h, s, h.vertex_set());
                y = scomp.class_of(u);
                if (!pr.subset_of(y)) y = x;
            }
            if (anticonnected_on(h, q, x)) {
                req(anticonnected_on(h, s, x),
                    "inside-removal: anticonnectivity lost by unassigning a contained pair");
                ++anti_cases;
            }
            if (pr.subset_of(y) && y.subset_of(x) && connected_on(h, q, x) &&
                connected_on(h, s, y)) {
                req(connected_on(h, s, x),
                    "inside-removal: connectivity lost though the subset stays connected");
                ++conn_cases;
            }
        }
    }
    std::ostringstream os;
    os << "inside-removal " << anti_cases << "+" << conn_cases;
    return os.str();
}

// Assigning a pair inside one class of a partition leaves the complement of the
// quotient unchanged, edge for edge.
std::string sampler_quotient_stability() {
    std::mt19937_64 rng(6606);
    long long total = 0, attempts = 0;
    while (total < 10000) {
        req(++attempts <= 300000, "quotient-stability: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 2, 7, 50);
        Quasigraph q = random_quasigraph(rng, h);
        for (int t = 0; t < 10; ++t) {
            int k = below(rng, h.edge_count());
            if (q.uses(k)) continue;
            const Hyperedge& e = h.edges[static_cast<std::size_t>(k)];
            VertexSet pr = random_pair_of(rng, e.vertices);
            Vertex u = pr.min();
            Vertex v = other_end(pr, u);
            VertexSet x = random_subset(rng, h.vertex_set()) | pr;
            std::vector<VertexSet> cells = {x};
            VertexSet rest = h.vertex_set() - x;
            if (!rest.empty())
                for (const VertexSet& c : random_partition(rng, rest, 3).classes)
                    cells.push_back(c);
            Partition r = Partition::from_classes(cells);
            QuotientHypergraph qh = quotient_hypergraph(h, r);
            Hypergraph3 before = complement_quotient(h, q, qh);
            Quasigraph tau = with_pair(h, q, e.id, u, v);
            Hypergraph3 after = complement_quotient(h, tau, qh);
            req(before.vertex_count == after.vertex_count && before.edges == after.edges,
                "quotient-stability: an in-class assignment changed the complement quotient");
            ++total;
        }
    }
    return "quotient-stability " + std::to_string(total);
}

// Checks every quasicycle of each row-limit complement quotient of (h, q): the
// earliest separation of a cycle pair is never the origin, a first-column separation
// in a later row follows an unused continuation edge, and the incremental leader
// computation agrees with the definitional minimum. Tallies samples into total /
// first_column.
void scan_cycle_exposures(const Hypergraph3& h, const Quasigraph& q, CycleSemantics sem,
                          long long& total, long long& first_column) {
    const EnumBudget budget;
    PlaneSequence seq = build_plane_sequence(h, q, sem);
    for (const PlaneSequenceRow& row : seq.rows) {
        const Partition& lim = row.limit();
        if (lim.class_count() < 2) continue;
        Hypergraph3 cq = complement_quotient(h, q, quotient_hypergraph(h, lim));
        if (cq.edge_count() == 0) continue;
        int found_here = 0;
        enumerate_quasigraphs(cq, budget, [&](const Quasigraph& g) {
            if (!is_quasicycle(cq, g, sem)) return true;
            ClassCycle cyc = cycle_entries(cq, g);
            StepIndex best{};
            bool first = true;
            for (const std::pair<EdgeId, VertexSet>& entry : cyc) {
                int c1 = entry.second.min();
                int c2 = other_end(entry.second, c1);
                StepIndex st = exposure_step(seq, lim.classes[static_cast<std::size_t>(c1)],
                                             lim.classes[static_cast<std::size_t>(c2)]);
                if (first || step_compare(st, best) < 0) {
                    best = st;
                    first = false;
                }
            }
            req(!(best == StepIndex{0, 0}),
                "exposure-position: a cycle pair separated at the origin");
            if (best.j == 1 && best.i >= 1) {
                const Decisive& d = seq.rows[static_cast<std::size_t>(best.i - 1)].decisive;
                req(d.kind == DecisiveKind::kContinue && !d.edge_used,
                    "exposure-position: a first-column exposure must follow an unused "
                    "continuation edge");
                ++first_column;
            }
            LeadingInfo li = leading_edges(seq, lim, cyc);
            req(li.step == best, "exposure-position: incremental leader step disagrees");
            req(!li.edges.empty(), "exposure-position: empty leader set");
            ++total;
            ++found_here;
            return found_here < 40;
        });
    }
}

// Instance whose row-0 decisive is an anticonnection-only edge, so the next row's
// first component column splits a class and exposes a cycle pair there. Core roles:
// {x, y, z} is a class held together by pairs through z and anticonnected only via
// the planted triple {y, z, d}; that triple runs parallel to the used triple
// {x, z, d} in the quotient, forming the row-0 cycle that elects it (x < y keeps it
// content-maximal). Excluding it leaves {x, y} merged through {w, x, y}, which the
// component column then splits; {x, y} and {w, x, y} survive into the next quotient
// as a parallel pair, a cycle first separated at that column. Random decorations:
// pendant chains or an anticonnected pendant triple, an extra unused triple over
// {x, y}, and a second used carrier of the {y, z} pair. Verified by the same scan
// the sampler runs, under multigraph semantics.
std::pair<Hypergraph3, Quasigraph> plant_first_column_instance(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 40; ++attempt) {
        int extra = below(rng, 4);
        int n = 5 + extra;
        std::vector<int> lab(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) lab[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < 5; ++i) {
            int j = i + below(rng, n - i);
            std::swap(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)]);
        }
        int w = lab[0], x = lab[1], y = lab[2], z = lab[3], d = lab[4];
        if (x > y) std::swap(x, y);
        std::vector<int> pend(lab.begin() + 5, lab.end());

        std::vector<std::pair<VertexSet, VertexSet>> edges;
        auto add = [&](std::initializer_list<Vertex> content, std::initializer_list<Vertex> value) {
            VertexSet c, v;
            for (Vertex a : content) c.add(a);
            for (Vertex a : value) v.add(a);
            edges.push_back({c, v});
        };
        add({x, z, d}, {x, z});
        add({y, z}, {y, z});
        add({y, z, d}, {});
        add({w, x, y}, {});
        add({x, y}, {});

        std::size_t next_pend = 0;
        if (next_pend < pend.size() && below(rng, 2) == 1) {
            add({x, y, pend[next_pend]}, {});
            ++next_pend;
        }
        if (next_pend < pend.size() && below(rng, 2) == 1) {
            add({y, z, pend[next_pend]}, {y, z});
            ++next_pend;
        }
        std::size_t left = pend.size() - next_pend;
        if (left == 3 && below(rng, 2) == 1) {
            int p = pend[next_pend], s = pend[next_pend + 1], r = pend[next_pend + 2];
            add({p, s}, {p, s});
            add({s, r}, {s, r});
            add({p, s, r}, {});
        } else if (left >= 2 && below(rng, 2) == 1) {
            int p = pend[next_pend], s = pend[next_pend + 1];
            add({p, s}, {p, s});
        }

        for (std::size_t i = edges.size(); i > 1; --i)
            std::swap(edges[i - 1], edges[static_cast<std::size_t>(below(rng, static_cast<int>(i)))]);
        std::vector<VertexSet> contents;
        for (const auto& [c, v] : edges) contents.push_back(c);
        Hypergraph3 h = make_hypergraph(n, contents);
        Quasigraph q = Quasigraph::empty_on(h);
        for (std::size_t k = 0; k < edges.size(); ++k) q.pairs[k] = edges[k].second;

        long long tot = 0, fc = 0;
        scan_cycle_exposures(h, q, CycleSemantics::kMultigraph, tot, fc);
        if (fc >= 1) return {h, q};
    }
    req(false, "exposure-position: planted instance never verified");
    throw Failure("unreachable");
}

// Exposure positions of quotient-complement cycles: never the origin, and a
// first-column exposure in a later row follows an unused continuation edge. Random
// instances fill the bulk quota; while the first-column quota is open, multigraph
// attempts draw planted instances instead.
std::string sampler_exposure_position() {
    std::mt19937_64 rng(6607);
    long long total = 0, first_column = 0, attempts = 0;
    while (total < 10000 || first_column < 100) {
        req(++attempts <= 200000, "exposure-position: sample quota unmet");
        CycleSemantics sem =
            attempts % 2 == 0 ? CycleSemantics::kMultigraph : CycleSemantics::kSimple;
        if (sem == CycleSemantics::kMultigraph && first_column < 100) {
            auto [h, q] = plant_first_column_instance(rng);
            scan_cycle_exposures(h, q, sem, total, first_column);
        } else {
            Hypergraph3 h = rand_host(rng, 3, 6, 2, 6, 50);
            Quasigraph q = random_quasigraph(rng, h);
            scan_cycle_exposures(h, q, sem, total, first_column);
        }
    }
    std::ostringstream os;
    os << "exposure-position " << total << " (" << first_column << " first-column)";
    return os.str();
}

// If assigning the unique crossing pair of an edge keeps the set anticonnected,
// that edge cannot be what holds the set's anticonnectivity together.
std::string sampler_antibridge_exclusion() {
    std::mt19937_64 rng(6608);
    long long total = 0, attempts = 0;
    while (total < 10000) {
        req(++attempts <= 400000, "antibridge-exclusion: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 2, 7, 60);
        Quasigraph q = random_quasigraph(rng, h);
        for (int t = 0; t < 10; ++t) {
            int k = below(rng, h.edge_count());
            if (q.uses(k)) continue;
            const Hyperedge& e = h.edges[static_cast<std::size_t>(k)];
            VertexSet pr = random_pair_of(rng, e.vertices);
            VertexSet x = pr | random_subset(rng, h.vertex_set() - e.vertices);
            if (!anticonnected_on(h, q, x)) continue;
            Vertex u = pr.min();
            Vertex v = other_end(pr, u);
            Quasigraph r = with_pair(h, q, e.id, u, v);
            if (!anticonnected_on(h, r, x)) continue;
            req(!is_x_antibridge(h, q, x, e.id),
                "antibridge-exclusion: edge stayed an antibridge though its assigned "
                "crossing pair keeps the set anticonnected");
            ++total;
        }
    }
    return "antibridge-exclusion " + std::to_string(total);
}

// Assigning a pair that the refinement trace separates, inside the class that
// last held both endpoints, strictly raises the record when anticonnectivity
// on that class survives.
std::string sampler_separated_addition() {
    std::mt19937_64 rng(6609);
    long long total = 0, attempts = 0;
    while (total < 10000) {
        req(++attempts <= 400000, "separated-addition: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 2, 7, 50);
        Quasigraph q = random_quasigraph(rng, h);
        CycleSemantics sem =
            attempts % 2 == 0 ? CycleSemantics::kMultigraph : CycleSemantics::kSimple;
        PlaneSequence seq = build_plane_sequence(h, q, sem);
        for (int k = 0; k < h.edge_count(); ++k) {
            if (q.uses(k)) continue;
            const Hyperedge& e = h.edges[static_cast<std::size_t>(k)];
            for (VertexSet pr : pairs_of(e.vertices)) {
                Vertex u = pr.min();
                Vertex v = other_end(pr, u);
                StepIndex at{};
                try {
                    at = exposure_step(seq, u, v);
                } catch (const DomainError&) {
                    continue;
                }
                const Partition& pred = predecessor_partition(seq, at);
                VertexSet x = pred.class_of(u);
                req(x.contains(v), "separated-addition: predecessor class must hold both ends");
                Quasigraph r = with_pair(h, q, e.id, u, v);
                if (!anticonnected_on(h, r, x)) continue;
                ++total;
                req(compare_quasigraphs(h, r, h, q, sem) > 0,
                    "separated-addition: assigning a separated pair failed to raise the record");
            }
        }
    }
    return "separated-addition " + std::to_string(total);
}

// Unassigning a used edge whose removal keeps the enclosing class connected:
// strictly raises the record when the trace separates its endpoints, and never
// lowers it when the pair sits inside a class of a terminated trace's final
// partition.
std::string sampler_cycle_removal() {
    std::mt19937_64 rng(6610);
    long long refine_cases = 0, final_cases = 0, attempts = 0;
    while (refine_cases < 10000 || final_cases < 10000) {
        req(++attempts <= 2000000, "cycle-removal: sample quota unmet");
        Hypergraph3 h = rand_host(rng, 3, 7, 3, 8, 60);
        Quasigraph q = Quasigraph::empty_on(h);
        int mode = static_cast<int>(attempts % 3);
        for (int k = 0; k < h.edge_count(); ++k) {
            bool use = mode == 0 ? below(rng, 2) == 0 : (mode == 1 || below(rng, 4) < 3);
            if (use)
                q.pairs[static_cast<std::size_t>(k)] =
                    random_pair_of(rng, h.edges[static_cast<std::size_t>(k)].vertices);
        }
        CycleSemantics sem =
            attempts % 2 == 0 ? CycleSemantics::kMultigraph : CycleSemantics::kSimple;
        PlaneSequence seq = build_plane_sequence(h, q, sem);
        bool terminated = seq.rows.back().decisive.kind == DecisiveKind::kTerminate;
        const Partition& fin = seq.final_partition();
        for (int k = 0; k < h.edge_count(); ++k) {
            if (!q.uses(k)) continue;
            const Hyperedge& e = h.edges[static_cast<std::size_t>(k)];
            VertexSet pr = q.pair_at(k);
            Vertex u = pr.min();
            Vertex v = other_end(pr, u);
            Quasigraph s = without_edge(h, q, e.id);
            try {
                StepIndex at = exposure_step(seq, u, v);
                const Partition& pred = predecessor_partition(seq, at);
                VertexSet x = pred.class_of(u);
                if (x.contains(v) && connected_on(h, s, x)) {
                    ++refine_cases;
                    req(compare_quasigraphs(h, s, h, q, sem) > 0,
                        "cycle-removal: removing a separated cycle edge failed to raise the "
                        "record");
                }
            } catch (const DomainError&) {
                // the trace never separates this pair; only the final-class case applies
            }
            if (terminated) {
                int ci = fin.class_index_containing(pr);
                if (ci >= 0 && connected_on(h, s, fin.classes[static_cast<std::size_t>(ci)])) {
                    ++final_cases;
                    req(compare_quasigraphs(h, s, h, q, sem) >= 0,
                        "cycle-removal: removing a contained cycle edge dropped the record");
                }
            }
        }
    }
    std::ostringstream os;
    os << "cycle-removal " << refine_cases << "+" << final_cases;
    return os.str();
}

// Builds a host with a guaranteed pendant pivot: 2-edges {u,a} and {u,b} plus a
// used 3-edge {u,c,d} valued {u,c}; extra edges avoid the pivot. with_cycle_edges
// adds unused {a,b} and {a,d} so quotient complements carry cycles through the
// pivot's edges (ids 0, 1, 2).
struct Planted {
    Hypergraph3 h;
    Quasigraph q;
    Vertex pivot = -1;
};

std::optional<Planted> plant_gadget(std::mt19937_64& rng, bool with_cycle_edges) {
    for (int attempt = 0; attempt < 80; ++attempt) {
        int n = 5 + below(rng, 4);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < 5; ++i) {
            int j = i + below(rng, n - i);
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        }
        Vertex u = perm[0], a = perm[1], b = perm[2], c = perm[3], d = perm[4];
        std::vector<VertexSet> sets = {VertexSet::pair(u, a), VertexSet::pair(u, b),
                                       VertexSet::pair(c, d) | VertexSet::single(u)};
        std::size_t fixed = 3;
        if (with_cycle_edges) {
            sets.push_back(VertexSet::pair(a, b));
            sets.push_back(VertexSet::pair(a, d));
            fixed = 5;
        }
        std::vector<Vertex> pool = (VertexSet::full(n) - VertexSet::single(u)).to_vector();
        int extras = below(rng, with_cycle_edges ? 2 : 4);
        for (int t = 0; t < extras; ++t) {
            for (int tries = 0; tries < 30; ++tries) {
                int want = below(rng, 100) < 50 ? 3 : 2;
                VertexSet cand;
                while (cand.count() < want)
                    cand.add(pool[static_cast<std::size_t>(
                        below(rng, static_cast<int>(pool.size())))]);
                if (std::find(sets.begin(), sets.end(), cand) == sets.end()) {
                    sets.push_back(cand);
                    break;
                }
            }
        }
        Hypergraph3 h = make_hypergraph(n, sets);
        Quasigraph q = Quasigraph::empty_on(h);
        q.pairs[2] = VertexSet::pair(u, c);
        for (std::size_t k = fixed; k < h.edges.size(); ++k)
            if (below(rng, 2) == 0) q.pairs[k] = random_pair_of(rng, h.edges[k].vertices);
        if (!is_acyclic(h, q)) continue;
        std::vector<Vertex> bad = bad_leaves(h, q);
        if (std::find(bad.begin(), bad.end(), u) == bad.end()) continue;
        return Planted{h, q, u};
    }
    return std::nullopt;
}

// Switching away a pendant pivot preserves connectivity and anticonnectivity on
// every vertex set.
std::string sampler_switch_preservation() {
    std::mt19937_64 rng(6611);
    long long anti_cases = 0, conn_cases = 0, attempts = 0;
    while (anti_cases < 10000 || conn_cases < 10000) {
        req(++attempts <= 300000, "switch-preservation: sample quota unmet");
        Hypergraph3 h;
        Quasigraph q;
        Vertex pivot = -1;
        if (attempts % 2 == 0) {
            h = rand_host(rng, 4, 8, 2, 8, 60);
            q = random_quasigraph(rng, h);
            if (!is_acyclic(h, q)) continue;
            std::vector<Vertex> bad = bad_leaves(h, q);
            if (bad.empty()) continue;
            pivot = bad.front();
        } else {
            std::optional<Planted> pl = plant_gadget(rng, false);
            if (!pl) continue;
            h = pl->h;
            q = pl->q;
            pivot = pl->pivot;
        }
        SwitchResult sw = switch_at(h, q, pivot);
        Partition comp = components_on(h, q, h.vertex_set());
        for (int t = 0; t < 20; ++t) {
            VertexSet x;
            if (t % 3 == 0) {
                Vertex seed = below(rng, h.vertex_count);
                x = comp.class_of(seed);
            } else {
                x = random_subset(rng, h.vertex_set());
            }
            if (x.count() < 2) continue;
            if (anticonnected_on(h, q, x)) {
                req(anticonnected_on(sw.host, sw.pi, x),
                    "switch-preservation: anticonnectivity lost by a switch");
                ++anti_cases;
            }
            if (connected_on(h, q, x)) {
                req(connected_on(sw.host, sw.pi, x),
                    "switch-preservation: connectivity lost by a switch");
                ++conn_cases;
            }
        }
    }
    std::ostringstream os;
    os << "switch-preservation " << anti_cases << "+" << conn_cases;
    return os.str();
}

// Every quasicycle of a quotient complement survives a switch entry by entry:
// the rewritten cycle is a quasicycle of the switched pair's quotient complement.
std::string sampler_cycle_transfer() {
    const EnumBudget budget;
    std::mt19937_64 rng(6612);
    long long total = 0, fold = 0, half = 0, triple = 0, attempts = 0;
    while (total < 10000 || fold < 300 || half < 300 || triple < 300) {
        req(++attempts <= 200000, "cycle-transfer: sample quota unmet");
        std::optional<Planted> pl = plant_gadget(rng, true);
        if (!pl) continue;
        const Hypergraph3& h = pl->h;
        const Quasigraph& q = pl->q;
        SwitchResult sw = switch_at(h, q, pl->pivot);
        std::vector<Partition> cuts;
        auto add_cut = [&cuts](const Partition& p) {
            for (const Partition& c : cuts)
                if (c == p) return;
            cuts.push_back(p);
        };
        add_cut(components_on(h, q, h.vertex_set()));
        add_cut(Partition::singletons(h.vertex_set()));
        PlaneSequence seq = build_plane_sequence(h, q, CycleSemantics::kMultigraph);
        add_cut(seq.rows.front().limit());
        add_cut(seq.final_partition());
        for (const Partition& p : cuts) {
            if (p.class_count() < 2) continue;
            Hypergraph3 cq = complement_quotient(h, q, quotient_hypergraph(h, p));
            if (cq.edge_count() == 0) continue;
            Hypergraph3 cq2 =
                complement_quotient(sw.host, sw.pi, quotient_hypergraph(sw.host, p));
            int found_here = 0;
            enumerate_quasigraphs(cq, budget, [&](const Quasigraph& g) {
                if (!is_quasicycle(cq, g, CycleSemantics::kMultigraph)) return true;
                ClassCycle before = cycle_entries(cq, g);
                ClassCycle after = transfer_quasicycle(h, q, p, sw, before);
                Quasigraph g2 = entries_to_quasigraph(cq2, after);
                req(is_quasicycle(cq2, g2, CycleSemantics::kMultigraph),
                    "cycle-transfer: transferred entries are not a quasicycle of the "
                    "switched quotient");
                bool used_ua = false, used_ub = false, used_ucd = false;
                for (const std::pair<EdgeId, VertexSet>& entry : before) {
                    used_ua = used_ua || entry.first == 0;
                    used_ub = used_ub || entry.first == 1;
                    used_ucd = used_ucd || entry.first == 2;
                }
                if (used_ua && used_ub)
                    ++fold;
                else if (used_ua || used_ub)
                    ++half;
                if (used_ucd) ++triple;
                ++total;
                ++found_here;
                return found_here < 60;
            });
        }
    }
    std::ostringstream os;
    os << "cycle-transfer " << total << " (" << fold << " folded, " << half << " half, "
       << triple << " via the 3-edge)";
    return os.str();
}

std::string criterion6_property_suite() {
    std::vector<std::string> parts;
    parts.push_back(sampler_union());
    parts.push_back(sampler_outside_values());
    parts.push_back(sampler_detached_deletion());
    parts.push_back(sampler_inside_addition());
    parts.push_back(sampler_inside_removal());
    parts.push_back(sampler_quotient_stability());
    parts.push_back(sampler_exposure_position());
    parts.push_back(sampler_antibridge_exclusion());
    parts.push_back(sampler_separated_addition());
    parts.push_back(sampler_cycle_removal());
    parts.push_back(sampler_switch_preservation());
    parts.push_back(sampler_cycle_transfer());
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) joined += "; ";
        joined += parts[i];
    }
    return joined;
}

// ---------------------------------------------------------------------------
// criterion 7: the switch-elimination driver
// ---------------------------------------------------------------------------

struct SwitchSweep {
    long long switches = 0;
    long long strict_violations = 0;
    long long planted = 0;
    int max_phases = 0;
    std::string transcript;
};

SwitchSweep run_switch_sweep(bool check_validity) {
    const EnumBudget budget;
    SwitchSweep out;
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 500) {
        Hypergraph3 h;
        Quasigraph start;
        if (done % 2 == 0) {
            h = rand_host(rng, 2, 8, 1, 8, 50);
            start = done % 4 == 0 ? Quasigraph::empty_on(h) : random_quasigraph(rng, h);
        } else {
            std::optional<Planted> pl = plant_gadget(rng, false);
            if (pl) {
                h = pl->h;
                start = pl->q;
                ++out.planted;
            } else {
                h = rand_host(rng, 2, 8, 1, 8, 50);
                start = random_quasigraph(rng, h);
            }
        }
        const CycleSemantics sem = CycleSemantics::kMultigraph;

        Hypergraph3 cur_host = h;
        Quasigraph cur = start;
        int phases = 0;
        int solve_steps = 0;
        bool monotone = true;
        for (;;) {
            SkeletalOutcome so = solve(cur_host, cur, sem);
            solve_steps += so.steps;
            cur = so.pi;
            std::vector<Vertex> bad = bad_leaves(cur_host, cur);
            if (bad.empty()) break;
            std::vector<std::uint64_t> before_pairs = pair_multiset(cur);
            std::size_t before_bad = bad.size();
            SwitchResult sw = switch_at(cur_host, cur, bad.front());
            req(pair_multiset(sw.pi) == before_pairs, "a switch changed the pair graph");
            std::size_t after_bad = bad_leaves(sw.host, sw.pi).size();
            if (after_bad >= before_bad) {
                ++out.strict_violations;
                monotone = false;
            }
            int cmp = compare_quasigraphs(sw.host, sw.pi, cur_host, cur, sem);
            req(cmp >= 0, "a switch dropped the record");
            req(cmp > 0 || sw.pi.used_count() < cur.used_count() || after_bad < before_bad,
                "a switch failed to raise the phase measure");
            cur_host = sw.host;
            cur = sw.pi;
            ++phases;
            ++out.switches;
            req(phases <= 100000, "switch loop failed to converge");
        }

        NoBadOutcome nb = solve_no_bad(h, start, sem);
        req(nb.pi == cur, "combined driver differs from the stepwise loop (quasigraph)");
        req(nb.host.edges == cur_host.edges && nb.host.next_edge_id == cur_host.next_edge_id,
            "combined driver differs from the stepwise loop (host)");
        req(nb.solve_steps == solve_steps,
            "combined driver differs from the stepwise loop (step count)");
        req(static_cast<int>(nb.switches.size()) == phases,
            "combined driver differs from the stepwise loop (switch count)");
        req(nb.bad_count_monotone == monotone,
            "combined driver misreported bad-leaf monotonicity");
        req(bad_leaves(nb.host, nb.pi).empty(), "driver finished with a pendant pivot left");
        req(is_acyclic(nb.host, nb.pi), "driver finished with a cyclic quasigraph");
        if (check_validity)
            req(skeletal_def(nb.host, nb.pi, nb.partition, sem, budget),
                "driver partition fails the exhaustive skeletal check");
        out.transcript += no_bad_outcome_to_json(nb);
        out.max_phases = std::max(out.max_phases, phases);
        ++done;
    }
    return out;
}

// ---------------------------------------------------------------------------
// main driver
// ---------------------------------------------------------------------------

int run_all() {
    std::optional<SolverSweep> solver_sweep;
    std::optional<SwitchSweep> switch_sweep;
    std::string golden_transcript;
    bool all_pass = true;

    auto run = [&all_pass](int idx, double bound_seconds,
                           const std::function<std::string()>& fn) {
        Clock::time_point t0 = Clock::now();
        bool pass = true;
        std::string detail;
        try {
            detail = fn();
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream os;
        os << detail;
        if (pass && bound_seconds > 0 && secs > bound_seconds) {
            pass = false;
            os << " — exceeded the " << bound_seconds << " s bound";
        }
        os << " (" << std::fixed << std::setprecision(1) << secs << " s)";
        std::cout << "criterion " << idx << ": " << (pass ? "PASS" : "FAIL") << " — "
                  << os.str() << std::endl;
        if (!pass) all_pass = false;
    };

    run(1, 60.0, criterion1_anticomponents);
    run(2, 120.0, criterion2_quasicycles_and_leaders);
    run(3, 300.0, [&solver_sweep]() {
        solver_sweep = run_solver_sweep(true);
        std::ostringstream os;
        os << "1000 instances solved to acyclic, exhaustively skeletal fixpoints; "
           << solver_sweep->improve_calls << " improvement calls (max "
           << solver_sweep->max_steps << " steps on one instance)";
        return os.str();
    });
    run(4, 0.0, [&solver_sweep]() {
        req(solver_sweep.has_value(), "prerequisite solver sweep did not finish");
        req(solver_sweep->dichotomy_violations == 0,
            std::to_string(solver_sweep->dichotomy_violations) +
                " step(s) neither raised the record nor tied with one fewer used edge");
        std::ostringstream os;
        os << solver_sweep->additions + solver_sweep->removals << " moves ("
           << solver_sweep->additions << " additions, " << solver_sweep->removals
           << " removals), each raised the record or tied with one fewer used edge";
        return os.str();
    });
    run(5, 0.0, [&golden_transcript]() {
        GoldenRun g = run_golden_chain();
        golden_transcript = g.transcript;
        return g.detail;
    });
    run(6, 0.0, criterion6_property_suite);
    run(7, 300.0, [&switch_sweep]() {
        switch_sweep = run_switch_sweep(true);
        req(switch_sweep->strict_violations == 0,
            std::to_string(switch_sweep->strict_violations) +
                " switch(es) failed to strictly drop the pendant-pivot count");
        std::ostringstream os;
        os << "500 instances (" << switch_sweep->planted << " planted), "
           << switch_sweep->switches
           << " switches: pair graph preserved, pivot count strictly down, measure "
              "strictly up";
        return os.str();
    });
    run(8, 0.0, [&solver_sweep, &switch_sweep, &golden_transcript]() {
        req(solver_sweep.has_value() && switch_sweep.has_value() &&
                !golden_transcript.empty(),
            "prerequisite sweeps did not finish");
        SolverSweep again3 = run_solver_sweep(false);
        req(again3.transcript == solver_sweep->transcript,
            "solver sweep transcript changed between runs");
        GoldenRun again5 = run_golden_chain();
        req(again5.transcript == golden_transcript,
            "golden chain transcript changed between runs");
        SwitchSweep again7 = run_switch_sweep(false);
        req(again7.transcript == switch_sweep->transcript,
            "switch sweep transcript changed between runs");
        std::ostringstream os;
        os << "reruns byte-identical: solver sweep " << solver_sweep->transcript.size()
           << " B, golden chain " << golden_transcript.size() << " B, switch sweep "
           << switch_sweep->transcript.size() << " B";
        return os.str();
    });

    return all_pass ? 0 : 1;
}

}  // namespace

int main() { return run_all(); }
