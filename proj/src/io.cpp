#include "tropgal/io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "tropgal/error.hpp"

namespace tropgal {

namespace {

// Runs a parse body and converts json access failures into parse errors.
template <typename F>
auto parsing(const char* what, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(errc::parse, std::string(what) + ": " + e.what());
    }
}

} // namespace

Json to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parsing("integer", [&] { return Int(j.get<std::string>()); });
    fail(errc::parse, "expected an integer or a decimal string");
}

Json to_json(const SimpleGraph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    return Json{{"n", g.n}, {"edges", std::move(edges)}};
}

SimpleGraph simple_graph_from_json(const Json& j) {
    return parsing("simple graph", [&] {
        SimpleGraph g;
        g.n = j.at("n").get<int>();
        for (const Json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                fail(errc::parse, "simple graph edge must be a pair [u, v]");
            g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        validate(g);
        return g;
    });
}

Json to_json(const Multigraph& g) {
    Json edges = Json::array();
    for (int l = 1; l <= g.m(); ++l) {
        auto [u, v] = g.edge(l);
        edges.push_back(Json{{"label", l}, {"u", u}, {"v", v}});
    }
    return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Multigraph multigraph_from_json(const Json& j) {
    return parsing("multigraph", [&] {
        int n = j.at("n").get<int>();
        const Json& edges = j.at("edges");
        std::vector<std::pair<int, int>> endpoints(edges.size());
        std::vector<bool> seen(edges.size(), false);
        for (const Json& e : edges) {
            int label = e.at("label").get<int>();
            if (label < 1 || label > static_cast<int>(edges.size()) || seen[label - 1])
                fail(errc::parse, "multigraph labels must be exactly 1.." +
                                      std::to_string(edges.size()));
            seen[label - 1] = true;
            endpoints[label - 1] = {e.at("u").get<int>(), e.at("v").get<int>()};
        }
        return Multigraph(n, endpoints);
    });
}

Multigraph any_graph_from_json(const Json& j) {
    return parsing("graph", [&] {
        const Json& edges = j.at("edges");
        if (!edges.empty() && edges.front().is_object()) return multigraph_from_json(j);
        return Multigraph::from_simple(simple_graph_from_json(j));
    });
}

Json to_json(const LabelSet& s) {
    Json out = Json::array();
    for (int l : s.labels()) out.push_back(l);
    return out;
}

LabelSet labelset_from_json(const Json& j) {
    return parsing("label set", [&] {
        std::vector<int> labels;
        for (const Json& l : j) labels.push_back(l.get<int>());
        return LabelSet::from_labels(labels);
    });
}

Json to_json(const ChainOfFlats& c) {
    Json out = Json::array();
    for (const ComponentChain& cc : c.components) {
        Json flats = Json::array();
        for (const Flat& f : cc.flats) flats.push_back(to_json(f.labels));
        out.push_back(std::move(flats));
    }
    return out;
}

ChainOfFlats chain_from_json(const Multigraph& g, const Json& j) {
    return parsing("chain of flats", [&] {
        std::vector<std::vector<LabelSet>> sets;
        for (const Json& comp : j) {
            std::vector<LabelSet> flats;
            for (const Json& f : comp) flats.push_back(labelset_from_json(f));
            sets.push_back(std::move(flats));
        }
        return chain_from_sets(g, sets);
    });
}

Json to_json(const ExcisionHistory& h) {
    Json out = Json::array();
    for (const ExcisionStep& s : h.steps) out.push_back(to_json(s.multiedge));
    return out;
}

ExcisionHistory history_from_json(const SimpleGraph& root, const Json& j) {
    return parsing("excision history", [&] {
        std::vector<LabelSet> classes;
        for (const Json& s : j) classes.push_back(labelset_from_json(s));
        return make_history(root, classes);
    });
}

Json to_json(const Fan& f) {
    Json lin = Json::array();
    for (const std::vector<Int>& row : f.lineality_basis()) {
        Json r = Json::array();
        for (const Int& x : row) r.push_back(to_json(x));
        lin.push_back(std::move(r));
    }
    Json cones = Json::array();
    ChainEnumerator chains = f.maximal_chains();
    while (std::optional<ChainOfFlats> c = chains.next()) cones.push_back(to_json(*c));
    return Json{{"lineality", std::move(lin)}, {"maximal_cones", std::move(cones)}};
}

Json to_json(const PairingResult& r) {
    Json shift = Json::array();
    for (const Int& x : r.shift) shift.push_back(to_json(x));
    Json witnesses = Json::array();
    for (const PairingWitness& w : r.witnesses)
        witnesses.push_back(Json{{"chain1", to_json(w.chain1)},
                                 {"chain2", to_json(w.chain2)},
                                 {"index", to_json(w.index)}});
    return Json{{"value", to_json(r.value)},
                {"shift", std::move(shift)},
                {"witnesses", std::move(witnesses)},
                {"retries", r.retries}};
}

PairingResult pairing_result_from_json(const Multigraph& g1, const Multigraph& g2,
                                       const Json& j) {
    return parsing("pairing result", [&] {
        PairingResult r;
        r.value = int_from_json(j.at("value"));
        for (const Json& x : j.at("shift")) r.shift.push_back(int_from_json(x));
        for (const Json& w : j.at("witnesses"))
            r.witnesses.push_back(PairingWitness{chain_from_json(g1, w.at("chain1")),
                                                 chain_from_json(g2, w.at("chain2")),
                                                 int_from_json(w.at("index"))});
        r.retries = j.at("retries").get<int>();
        return r;
    });
}

Json to_json(const ArborealReport& r) {
    return Json{{"arboreal", r.arboreal}, {"pairing", to_json(r.pairing)}, {"rank", r.rank},
                {"m", r.m}};
}

ArborealReport arboreal_report_from_json(const Json& j) {
    return parsing("arboreal report", [&] {
        ArborealReport r;
        r.arboreal = j.at("arboreal").get<bool>();
        r.pairing = int_from_json(j.at("pairing"));
        r.rank = j.at("rank").get<int>();
        r.m = j.at("m").get<int>();
        return r;
    });
}

Json to_json(const Galaxy& gal) {
    Json nodes = Json::array();
    for (const auto& [key, node] : gal.nodes)
        nodes.push_back(Json{{"key", key},
                             {"graph", to_json(node.graph)},
                             {"witness", to_json(node.witness)}});
    Json edges = Json::array();
    for (const GalaxyEdge& e : gal.edges)
        edges.push_back(
            Json{{"parent", e.parent}, {"child", e.child}, {"excised", to_json(e.excised)}});
    return Json{{"root", to_json(gal.root)}, {"nodes", std::move(nodes)},
                {"edges", std::move(edges)}};
}

Galaxy galaxy_from_json(const Json& j) {
    return parsing("galaxy", [&] {
        Galaxy gal;
        gal.root = simple_graph_from_json(j.at("root"));
        gal.root_key = canonical_form(Multigraph::from_simple(gal.root));
        for (const Json& n : j.at("nodes")) {
            std::string key = n.at("key").get<std::string>();
            GalaxyNode node{multigraph_from_json(n.at("graph")),
                            history_from_json(gal.root, n.at("witness"))};
            if (canonical_form(node.graph) != key)
                fail(errc::parse, "galaxy node graph does not match its key " + key);
            gal.nodes.emplace(std::move(key), std::move(node));
        }
        if (!gal.nodes.count(gal.root_key))
            fail(errc::parse, "galaxy is missing its root node");
        for (const Json& e : j.at("edges")) {
            GalaxyEdge edge{e.at("parent").get<std::string>(), e.at("child").get<std::string>(),
                            labelset_from_json(e.at("excised"))};
            if (!gal.nodes.count(edge.parent) || !gal.nodes.count(edge.child))
                fail(errc::parse, "galaxy edge endpoints are not nodes");
            gal.edges.push_back(std::move(edge));
        }
        return gal;
    });
}

std::string to_dot(const Galaxy& gal) {
    std::ostringstream out;
    out << "digraph galaxy {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (const auto& [key, node] : gal.nodes) {
        std::string label;
        for (const LabelSet& cls : node.graph.multiedge_classes()) {
            if (!label.empty()) label += '|';
            label += cls.pretty();
        }
        out << "  \"" << key << "\" [label=\"" << label << "\"];\n";
    }
    for (const GalaxyEdge& e : gal.edges)
        out << "  \"" << e.parent << "\" -> \"" << e.child << "\" [label=\""
            << e.excised.pretty() << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_csv(const PairingTable& t) {
    std::string out = "node_key,value,method\n";
    for (const auto& [key, entry] : t.entries) {
        out += key;
        out += ',';
        if (entry.value) out += entry.value->str();
        out += ',';
        out += entry.error.empty() ? entry.method : "error";
        out += '\n';
    }
    return out;
}

PairingTable table_from_csv(const std::string& text, std::string base) {
    PairingTable t;
    t.base = std::move(base);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "node_key,value,method")
        fail(errc::parse, "table csv must start with node_key,value,method");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            fail(errc::parse, "table csv row needs three columns: " + line);
        std::string key = line.substr(0, c1);
        std::string value = line.substr(c1 + 1, c2 - c1 - 1);
        std::string method = line.substr(c2 + 1);
        TableEntry entry;
        if (!value.empty()) {
            entry.value = parsing("table value", [&] { return Int(value); });
            entry.method = method;
        } else {
            entry.method = method;
            entry.error = "not recorded";
        }
        t.entries.emplace(std::move(key), std::move(entry));
    }
    return t;
}

} // namespace tropgal
