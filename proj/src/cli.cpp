#include "qskel/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qskel/connectivity.hpp"
#include "qskel/gen.hpp"
#include "qskel/io.hpp"
#include "qskel/oracle.hpp"

namespace qskel {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << content;
}

void write_dots(const std::string& dir, const Hypergraph3& h, const Quasigraph& q,
                const Partition& p) {
    std::filesystem::create_directories(dir);
    auto at = [&](const char* name) { return (std::filesystem::path(dir) / name).string(); };
    write_file(at("pi_star.dot"), pi_star_dot(h, q));
    write_file(at("quotient.dot"), quotient_dot(h, q, p));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Args {
    std::string file, quasigraph_path, partition_path, trace_path, dot_dir, check;
    bool simple = false;
    bool allow_switches = false;
    int vertices = 6, edges = 6;
    std::uint64_t seed = 1;
    double tri_prob = 0.5;
    EnumBudget budget;

    CycleSemantics semantics() const {
        return simple ? CycleSemantics::kSimple : CycleSemantics::kMultigraph;
    }
    Hypergraph3 host() const { return parse_hypergraph(read_file(file)); }
    Quasigraph start(const Hypergraph3& h) const {
        if (quasigraph_path.empty()) return Quasigraph::empty_on(h);
        return quasigraph_from_json(h, read_file(quasigraph_path));
    }
};

int do_solve(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    Quasigraph q0 = a.start(h);
    if (a.allow_switches) {
        NoBadOutcome nb = solve_no_bad(h, q0, a.semantics());
        out << no_bad_outcome_to_json(nb);
        if (!a.trace_path.empty()) write_file(a.trace_path, trace_to_json(nb.seq));
        if (!a.dot_dir.empty()) write_dots(a.dot_dir, nb.host, nb.pi, nb.partition);
    } else {
        SkeletalOutcome so = solve(h, q0, a.semantics());
        out << skeletal_outcome_to_json(so);
        if (!a.trace_path.empty()) write_file(a.trace_path, trace_to_json(so.seq));
        if (!a.dot_dir.empty()) write_dots(a.dot_dir, so.host, so.pi, so.partition);
    }
    return 0;
}

int do_verify(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    Quasigraph q = quasigraph_from_json(h, read_file(a.quasigraph_path));
    Partition p = partition_from_json(h, read_file(a.partition_path));
    bool ok = skeletal_def(h, q, p, a.semantics(), a.budget);
    out << dump(json{{"skeletal", ok}});
    return ok ? 0 : 1;
}

int do_trace(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    Quasigraph q = a.start(h);
    out << trace_to_json(build_plane_sequence(h, q, a.semantics()));
    return 0;
}

int do_gen(const Args& a, std::ostream& out) {
    std::mt19937_64 rng(a.seed);
    int percent = static_cast<int>(a.tri_prob * 100.0 + 0.5);
    out << serialize_hypergraph(random_hypergraph(rng, a.vertices, a.edges, percent));
    return 0;
}

int oracle_anticomponents(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    Quasigraph q = a.start(h);
    if (h.vertex_count > 8)
        throw CapacityError("anticomponents check enumerates all subsets; needs at most 8 vertices");
    bool agree = true;
    int subsets = 0;
    std::uint64_t full = h.vertex_set().bits;
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
        VertexSet x(sub);
        ++subsets;
        if (partition_compare_total(anticomponents_on(h, q, x),
                                    anticomponents_def(h, q, x, a.budget)) != 0)
            agree = false;
        if (sub == 0) break;
    }
    out << dump(json{{"check", "anticomponents"}, {"agree", agree}, {"subsets", subsets}});
    return agree ? 0 : 1;
}

int oracle_quasicycles(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    Hypergraph3 g = a.quasigraph_path.empty() ? h : complement(h, a.start(h));
    auto found = find_quasicycle(g, a.semantics());
    if (found) QSKEL_CHECK(is_quasicycle(g, *found, a.semantics()));
    bool exists = quasicycle_exists_def(g, a.semantics(), a.budget);
    bool agree = found.has_value() == exists;
    out << dump(json{{"check", "quasicycles"}, {"agree", agree}, {"found", exists}});
    return agree ? 0 : 1;
}

int oracle_skeletal(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    Quasigraph q;
    Partition p;
    if (!a.partition_path.empty()) {
        q = a.start(h);
        p = partition_from_json(h, read_file(a.partition_path));
    } else {
        SkeletalOutcome so = solve(h, a.start(h), a.semantics());
        q = so.pi;
        p = so.partition;
    }
    bool fast = is_skeletal(h, q, p, a.semantics());
    bool def = skeletal_def(h, q, p, a.semantics(), a.budget);
    bool agree = fast == def;
    out << dump(json{{"check", "skeletal"}, {"agree", agree}, {"skeletal", def}});
    return agree ? 0 : 1;
}

int oracle_leading_set(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    Quasigraph q = a.start(h);
    PlaneSequence seq = build_plane_sequence(h, q, a.semantics());
    bool agree = true;
    int rows_checked = 0;
    for (const PlaneSequenceRow& row : seq.rows) {
        const Partition& p = row.limit();
        auto qh = quotient_hypergraph(h, p);
        if (!find_quasicycle(complement_quotient(h, q, qh), a.semantics())) continue;
        ++rows_checked;
        if (leading_edge_set(seq, p) != leading_set_def(seq, p, a.budget)) agree = false;
    }
    out << dump(json{{"check", "leading-set"}, {"agree", agree}, {"rows", rows_checked}});
    return agree ? 0 : 1;
}

int oracle_max_search(const Args& a, std::ostream& out) {
    Hypergraph3 h = a.host();
    MaxSearchReport rep = max_search(h, a.semantics(), a.budget);
    out << dump(json{{"check", "max-search"},
                     {"maxima_ok", rep.maxima_ok},
                     {"maxima", rep.maxima},
                     {"least_edge_maxima", rep.least_edge_maxima},
                     {"fixpoint_dominated", rep.fixpoint_dominated}});
    return rep.maxima_ok ? 0 : 1;
}

int do_oracle(const Args& a, std::ostream& out) {
    if (a.check == "anticomponents") return oracle_anticomponents(a, out);
    if (a.check == "quasicycles") return oracle_quasicycles(a, out);
    if (a.check == "skeletal") return oracle_skeletal(a, out);
    if (a.check == "leading-set") return oracle_leading_set(a, out);
    return oracle_max_search(a, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"quasigraph skeleton toolkit"};
    app.require_subcommand(1);
    Args a;

    CLI::App* solve_cmd = app.add_subcommand("solve", "improve a quasigraph to a skeletal fixpoint");
    solve_cmd->add_option("file", a.file, "hypergraph text file")->required();
    solve_cmd->add_option("--quasigraph", a.quasigraph_path, "starting quasigraph JSON");
    solve_cmd->add_option("--trace", a.trace_path, "write the final plane sequence here");
    solve_cmd->add_option("--dot", a.dot_dir, "write pi_star.dot and quotient.dot here");
    solve_cmd->add_flag("--allow-switches", a.allow_switches,
                        "also clear bad leaves by local switches");
    solve_cmd->add_flag("--simple-cycles", a.simple, "simple cycle semantics");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a quasigraph/partition pair");
    verify_cmd->add_option("file", a.file, "hypergraph text file")->required();
    verify_cmd->add_option("--quasigraph", a.quasigraph_path, "quasigraph JSON")->required();
    verify_cmd->add_option("--partition", a.partition_path, "partition JSON")->required();
    verify_cmd->add_flag("--simple-cycles", a.simple, "simple cycle semantics");

    CLI::App* trace_cmd = app.add_subcommand("trace", "print the plane sequence");
    trace_cmd->add_option("file", a.file, "hypergraph text file")->required();
    trace_cmd->add_option("--quasigraph", a.quasigraph_path, "quasigraph JSON");
    trace_cmd->add_flag("--simple-cycles", a.simple, "simple cycle semantics");

    CLI::App* gen_cmd = app.add_subcommand("gen", "print a random hypergraph");
    gen_cmd->add_option("--vertices", a.vertices, "vertex count")->required();
    gen_cmd->add_option("--edges", a.edges, "edge count")->required();
    gen_cmd->add_option("--seed", a.seed, "rng seed")->required();
    gen_cmd->add_option("--tri-prob", a.tri_prob, "chance of a 3-edge")
        ->check(CLI::Range(0.0, 1.0));

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "cross-check against exhaustive definitions");
    oracle_cmd->add_option("file", a.file, "hypergraph text file")->required();
    oracle_cmd
        ->add_option("--check", a.check, "which comparison to run")
        ->required()
        ->check(CLI::IsMember(
            {"anticomponents", "quasicycles", "skeletal", "leading-set", "max-search"}));
    oracle_cmd->add_option("--quasigraph", a.quasigraph_path, "quasigraph JSON");
    oracle_cmd->add_option("--partition", a.partition_path, "partition JSON");
    oracle_cmd->add_flag("--simple-cycles", a.simple, "simple cycle semantics");
    oracle_cmd->add_option("--max-quasigraphs", a.budget.max_quasigraphs, "enumeration cap");
    oracle_cmd->add_option("--max-partitions", a.budget.max_partitions, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << error_json("usage", e.what());
        return 2;
    }

    try {
        if (solve_cmd->parsed()) return do_solve(a, out);
        if (verify_cmd->parsed()) return do_verify(a, out);
        if (trace_cmd->parsed()) return do_trace(a, out);
        if (gen_cmd->parsed()) return do_gen(a, out);
        return do_oracle(a, out);
    } catch (const ParseError& e) {
        err << error_json("parse", e.what(), e.line);
        return 2;
    } catch (const CapacityError& e) {
        err << error_json("capacity", e.what());
        return 3;
    } catch (const DomainError& e) {
        err << error_json("domain", e.what());
        return 2;
    } catch (const InternalError& e) {
        err << error_json("internal", e.what());
        return 2;
    }
}

}  // namespace qskel
