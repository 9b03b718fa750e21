#pragma once

#include <string>

#include "qskel/bad_leaf.hpp"

namespace qskel {

// Text format, one directive per line, '#' starts a comment:
//   v <n>          numeric mode: vertices are 0..n-1 (must precede every edge line)
//   e <a> <b> [c]  one edge; tokens are numbers in numeric mode, otherwise names
//                  that receive ids 0,1,... in order of first appearance
// Named mode forbids the v line and purely numeric tokens. Duplicate vertex sets
// and repeated vertices within an edge are rejected with the offending line number.
Hypergraph3 parse_hypergraph(const std::string& text);

// Numeric-mode text for h (ids are positional, matching edge order).
std::string serialize_hypergraph(const Hypergraph3& h);

// {"edges": {"<id>": [u, v] | null, ...}} with every edge of h present.
std::string quasigraph_to_json(const Hypergraph3& h, const Quasigraph& q);
Quasigraph quasigraph_from_json(const Hypergraph3& h, const std::string& json_text);

// Array of classes, each an ascending vertex list; classes ordered by minimum.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const Hypergraph3& h, const std::string& json_text);

// Full row-by-row record of a plane sequence, including decisive entries and stop
// witnesses.
std::string trace_to_json(const PlaneSequence& seq);

// Solution report: quasigraph, partition, and a per-class certificate.
std::string skeletal_outcome_to_json(const SkeletalOutcome& out);

// Like skeletal_outcome_to_json plus the switch records and the final hypergraph.
std::string no_bad_outcome_to_json(const NoBadOutcome& out);

// Undirected pair graph of q; nodes are vertices, edge labels are hyperedge ids.
std::string pi_star_dot(const Hypergraph3& h, const Quasigraph& q);

// Quotient by p: nodes are classes, crossing edges labelled with id and value.
std::string quotient_dot(const Hypergraph3& h, const Quasigraph& q, const Partition& p);

// {"error": {"kind": ..., "message": ..., "line": ...}} (line omitted when 0).
std::string error_json(const std::string& kind, const std::string& message, int line = 0);

}  // namespace qskel
