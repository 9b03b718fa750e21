#include "qskel/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qskel/connectivity.hpp"

namespace qskel {
namespace {

using nlohmann::json;

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

int parse_int(const std::string& tok, int line) {
    if (!all_digits(tok) || tok.size() > 9)
        throw ParseError("expected a vertex number, got '" + tok + "'", line);
    return std::stoi(tok);
}

json vset_json(VertexSet s) {
    json a = json::array();
    for (Vertex v : s.to_vector()) a.push_back(v);
    return a;
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (const VertexSet& c : p.classes) a.push_back(vset_json(c));
    return a;
}

json quasigraph_json(const Hypergraph3& h, const Quasigraph& q) {
    json edges = json::object();
    for (int k = 0; k < h.edge_count(); ++k) {
        std::string key = std::to_string(h.edges[static_cast<size_t>(k)].id);
        if (q.uses(k))
            edges[key] = vset_json(q.pair_at(k));
        else
            edges[key] = nullptr;
    }
    return json{{"edges", edges}};
}

json switch_json(const SwitchRecord& r) {
    json added = json::array();
    for (const Hyperedge& e : r.added)
        added.push_back(json{{"id", e.id}, {"vertices", vset_json(e.vertices)}});
    return json{{"pivot", r.pivot}, {"removed", r.removed}, {"added", added}};
}

// Per-class connectivity facts plus the size of the complement quotient.
json certificate_json(const Hypergraph3& h, const Quasigraph& q, const Partition& p) {
    json classes = json::array();
    for (const VertexSet& c : p.classes)
        classes.push_back(json{{"vertices", vset_json(c)},
                               {"connected", connected_on(h, q, c)},
                               {"anticonnected", anticonnected_on(h, q, c)}});
    auto qh = quotient_hypergraph(h, p);
    return json{{"classes", classes},
                {"complement_quotient_edges", complement_quotient(h, q, qh).edge_count()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const json& require(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(what) + ": missing key '" + key + "'");
    return j.at(key);
}

json parse_json_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    return j;
}

int int_member(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

}  // namespace

Hypergraph3 parse_hypergraph(const std::string& text) {
    // Structure pass: validate the v line and directives so those complaints
    // point at their own lines even when edge lines precede them.
    struct EdgeLine {
        int line;
        std::vector<std::string> toks;
    };
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    int declared = -1;  // numeric mode iff >= 0
    bool saw_edge = false;
    std::vector<EdgeLine> edge_lines;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = trimmed(s);
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string tag;
        ls >> tag;
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (tag == "v") {
            if (declared >= 0) throw ParseError("repeated v line", line);
            if (saw_edge) throw ParseError("v line after an edge line", line);
            if (toks.size() != 1) throw ParseError("v takes exactly one number", line);
            int n = parse_int(toks[0], line);
            if (n < 1) throw ParseError("vertex count must be positive", line);
            if (n > kMaxVertices)
                throw CapacityError("vertex count exceeds " + std::to_string(kMaxVertices));
            declared = n;
        } else if (tag == "e") {
            saw_edge = true;
            edge_lines.push_back({line, std::move(toks)});
        } else {
            throw ParseError("unknown directive '" + tag + "'", line);
        }
    }
    if (declared < 0 && !saw_edge) throw ParseError("empty input");

    // Edge pass, with the numbering mode settled.
    std::map<std::string, int> names;
    std::vector<VertexSet> sets;
    std::map<std::uint64_t, int> seen;  // vertex set -> first line
    for (const EdgeLine& el : edge_lines) {
        if (el.toks.size() != 2 && el.toks.size() != 3)
            throw ParseError("an edge needs two or three vertices", el.line);
        VertexSet e;
        for (const std::string& t : el.toks) {
            int v;
            if (declared >= 0) {
                v = parse_int(t, el.line);
                if (v >= declared) throw ParseError("vertex " + t + " out of range", el.line);
            } else {
                if (all_digits(t))
                    throw ParseError("numeric vertex token requires a v line", el.line);
                auto it = names.find(t);
                if (it == names.end()) {
                    if (static_cast<int>(names.size()) >= kMaxVertices)
                        throw CapacityError("vertex count exceeds " +
                                            std::to_string(kMaxVertices));
                    it = names.emplace(t, static_cast<int>(names.size())).first;
                }
                v = it->second;
            }
            if (e.contains(v)) throw ParseError("repeated vertex '" + t + "'", el.line);
            e.add(v);
        }
        auto [it, fresh] = seen.emplace(e.bits, el.line);
        if (!fresh)
            throw ParseError(
                "duplicate edge (first on line " + std::to_string(it->second) + ")", el.line);
        sets.push_back(e);
    }
    int n = declared >= 0 ? declared : static_cast<int>(names.size());
    Hypergraph3 h = make_hypergraph(n, sets);
    h.validate(true);
    return h;
}

std::string serialize_hypergraph(const Hypergraph3& h) {
    std::ostringstream out;
    out << "v " << h.vertex_count << "\n";
    for (const Hyperedge& e : h.edges) {
        out << "e";
        for (Vertex v : e.vertices.to_vector()) out << " " << v;
        out << "\n";
    }
    return out.str();
}

std::string quasigraph_to_json(const Hypergraph3& h, const Quasigraph& q) {
    return dump(quasigraph_json(h, q));
}

Quasigraph quasigraph_from_json(const Hypergraph3& h, const std::string& json_text) {
    json j = parse_json_text(json_text, "quasigraph");
    const json& edges = require(j, "edges", "quasigraph");
    if (!edges.is_object()) throw ParseError("quasigraph: 'edges' must be an object");
    if (edges.size() != static_cast<size_t>(h.edge_count()))
        throw ParseError("quasigraph: expected " + std::to_string(h.edge_count()) +
                         " edge entries, got " + std::to_string(edges.size()));
    Quasigraph q = Quasigraph::empty_on(h);
    for (int k = 0; k < h.edge_count(); ++k) {
        std::string key = std::to_string(h.edges[static_cast<size_t>(k)].id);
        if (!edges.contains(key)) throw ParseError("quasigraph: missing edge '" + key + "'");
        const json& val = edges.at(key);
        if (val.is_null()) continue;
        if (!val.is_array() || val.size() != 2)
            throw ParseError("quasigraph: edge '" + key + "' needs null or a pair");
        int u = int_member(val.at(0), "quasigraph");
        int v = int_member(val.at(1), "quasigraph");
        if (u == v) throw ParseError("quasigraph: edge '" + key + "' repeats a vertex");
        if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices)
            throw ParseError("quasigraph: edge '" + key + "' vertex out of range");
        q.pairs[static_cast<size_t>(k)] = VertexSet::pair(u, v);
    }
    validate_quasigraph(h, q);
    return q;
}

std::string partition_to_json(const Partition& p) { return dump(partition_json(p)); }

Partition partition_from_json(const Hypergraph3& h, const std::string& json_text) {
    json j = parse_json_text(json_text, "partition");
    if (!j.is_array()) throw ParseError("partition: expected an array of classes");
    std::vector<VertexSet> classes;
    for (const json& cj : j) {
        if (!cj.is_array()) throw ParseError("partition: each class must be an array");
        VertexSet c;
        for (const json& vj : cj) {
            int v = int_member(vj, "partition");
            if (v < 0 || v >= h.vertex_count)
                throw ParseError("partition: vertex out of range");
            if (c.contains(v)) throw ParseError("partition: repeated vertex in a class");
            c.add(v);
        }
        classes.push_back(c);
    }
    Partition p = Partition::from_classes(classes);
    if (!(p.ground == h.vertex_set()))
        throw DomainError("partition does not cover the vertex set");
    return p;
}

std::string trace_to_json(const PlaneSequence& seq) {
    json rows = json::array();
    for (size_t i = 0; i < seq.rows.size(); ++i) {
        const PlaneSequenceRow& row = seq.rows[i];
        json parts = json::array();
        for (const Partition& p : row.partitions) parts.push_back(partition_json(p));
        json r{{"i", static_cast<int>(i)},
               {"partitions", parts},
               {"limit", partition_json(row.limit())}};
        switch (row.decisive.kind) {
            case DecisiveKind::kTerminate: r["decisive"] = "terminate"; break;
            case DecisiveKind::kStop: r["decisive"] = "stop"; break;
            case DecisiveKind::kContinue: r["decisive"] = json{{"continue", row.decisive.edge}}; break;
        }
        if (row.witness) {
            const StopWitness& w = *row.witness;
            const Partition& lim = row.limit();
            json cyc = json::object();
            for (const auto& [id, pr] : w.cycle) {
                auto cls = pr.to_vector();
                QSKEL_CHECK(cls.size() == 2);
                cyc[std::to_string(id)] =
                    json::array({vset_json(lim.classes[static_cast<size_t>(cls[0])]),
                                 vset_json(lim.classes[static_cast<size_t>(cls[1])])});
            }
            r["witness"] = json{{"edge", w.edge}, {"step", json::array({w.step.i, w.step.j})},
                                {"cycle", cyc}};
        }
        rows.push_back(r);
    }
    return dump(json{{"rows", rows}, {"final", partition_json(seq.final_partition())}});
}

std::string skeletal_outcome_to_json(const SkeletalOutcome& out) {
    return dump(json{{"quasigraph", quasigraph_json(out.host, out.pi)},
                     {"partition", partition_json(out.partition)},
                     {"certificate", certificate_json(out.host, out.pi, out.partition)},
                     {"steps", out.steps}});
}

std::string no_bad_outcome_to_json(const NoBadOutcome& out) {
    json switches = json::array();
    for (const SwitchRecord& r : out.switches) switches.push_back(switch_json(r));
    return dump(json{{"quasigraph", quasigraph_json(out.host, out.pi)},
                     {"partition", partition_json(out.partition)},
                     {"certificate", certificate_json(out.host, out.pi, out.partition)},
                     {"switches", switches},
                     {"hypergraph", serialize_hypergraph(out.host)},
                     {"bad_count_monotone", out.bad_count_monotone},
                     {"steps", out.solve_steps}});
}

std::string pi_star_dot(const Hypergraph3& h, const Quasigraph& q) {
    std::ostringstream out;
    out << "graph pi_star {\n  node [shape=circle];\n";
    for (int v = 0; v < h.vertex_count; ++v) out << "  " << v << ";\n";
    for (int k = 0; k < h.edge_count(); ++k) {
        if (!q.uses(k)) continue;
        auto pr = q.pair_at(k).to_vector();
        out << "  " << pr[0] << " -- " << pr[1] << " [label=\""
            << h.edges[static_cast<size_t>(k)].id << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string quotient_dot(const Hypergraph3& h, const Quasigraph& q, const Partition& p) {
    auto qh = quotient_hypergraph(h, p);
    Quasigraph qq = quotient_quasigraph(h, q, qh);
    std::ostringstream out;
    out << "graph quotient {\n";
    for (int c = 0; c < p.class_count(); ++c) {
        out << "  c" << c << " [label=\"{";
        auto vs = p.classes[static_cast<size_t>(c)].to_vector();
        for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
        out << "}\"];\n";
    }
    // One box node per quotient edge, linked to its classes; links inside the
    // quotient value drawn solid, the rest dashed.
    for (int k = 0; k < qh.graph.edge_count(); ++k) {
        const Hyperedge& e = qh.graph.edges[static_cast<size_t>(k)];
        out << "  e" << e.id << " [shape=box, label=\"" << e.id << "\"];\n";
        VertexSet val = qq.pair_at(k);
        for (Vertex c : e.vertices.to_vector())
            out << "  e" << e.id << " -- c" << c
                << (val.contains(c) ? ";\n" : " [style=dashed];\n");
    }
    out << "}\n";
    return out.str();
}

std::string error_json(const std::string& kind, const std::string& message, int line) {
    json e{{"kind", kind}, {"message", message}};
    if (line > 0) e["line"] = line;
    return dump(json{{"error", e}});
}

}  // namespace qskel
