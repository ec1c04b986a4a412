#pragma once

#include <string>

#include <json.hpp>

#include "tropgal/arboreal.hpp"
#include "tropgal/excision.hpp"
#include "tropgal/fan.hpp"
#include "tropgal/flats.hpp"
#include "tropgal/galaxy.hpp"
#include "tropgal/intersect.hpp"
#include "tropgal/multigraph.hpp"

namespace tropgal {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; parsing accepts both.
Json to_json(const Int& v);
Int int_from_json(const Json& j);

// {"n": vertices, "edges": [[u, v], ...]}; an edge's label is its 1-based
// position in the list.
Json to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const Json& j);

// {"n": vertices, "edges": [{"label": l, "u": u, "v": v}, ...]} with labels
// exactly 1..m.
Json to_json(const Multigraph& g);
Multigraph multigraph_from_json(const Json& j);

// Accepts either graph encoding and promotes simple graphs to multigraphs.
Multigraph any_graph_from_json(const Json& j);

// Sorted label array.
Json to_json(const LabelSet& s);
LabelSet labelset_from_json(const Json& j);

// Per-component array of flats, each flat a sorted label array; components
// follow the host's component order.
Json to_json(const ChainOfFlats& c);
ChainOfFlats chain_from_json(const Multigraph& g, const Json& j);

// Ordered array of excised multiedges, each a sorted label array.
Json to_json(const ExcisionHistory& h);
ExcisionHistory history_from_json(const SimpleGraph& root, const Json& j);

// {"lineality": [[...], ...], "maximal_cones": [chain, ...]}.
Json to_json(const Fan& f);

// {"value": v, "shift": [...], "witnesses": [{"chain1": c1, "chain2": c2,
// "index": i}, ...], "retries": r}.
Json to_json(const PairingResult& r);
PairingResult pairing_result_from_json(const Multigraph& g1, const Multigraph& g2, const Json& j);

// {"arboreal": b, "pairing": p, "rank": r, "m": m}.
Json to_json(const ArborealReport& r);
ArborealReport arboreal_report_from_json(const Json& j);

// {"root": g, "nodes": [{"key": k, "graph": mg, "witness": h}, ...],
// "edges": [{"parent": p, "child": c, "excised": e}, ...]}. Witness steps
// are replayed from the root on parse, and each node's graph must match its
// key.
Json to_json(const Galaxy& gal);
Galaxy galaxy_from_json(const Json& j);

// Plain Graphviz digraph: one node per canonical form, labeled by the
// multiedge partition (classes joined with '|'), edges labeled by the
// excised multiedge.
std::string to_dot(const Galaxy& gal);

// Header line node_key,value,method; an entry that failed keeps an empty
// value column and the method column "error".
std::string to_csv(const PairingTable& t);
PairingTable table_from_csv(const std::string& text, std::string base = "");

} // namespace tropgal
