#include "tropgal/galaxy.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <set>
#include <thread>

#include "tropgal/arboreal.hpp"
#include "tropgal/error.hpp"
#include "tropgal/flats.hpp"
#include "tropgal/intersect.hpp"
#include "tropgal/lp.hpp"
#include "tropgal/rng.hpp"

namespace tropgal {

namespace {

std::atomic<int> table_thread_cap{0};

bool history_less(const ExcisionHistory& a, const ExcisionHistory& b) {
    const auto& x = a.steps;
    const auto& y = b.steps;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
        if (x[i].multiedge != y[i].multiedge)
            return x[i].multiedge.labels() < y[i].multiedge.labels();
    return x.size() < y.size();
}

std::map<std::string, std::vector<std::string>> adjacency(const Galaxy& gal, bool forward) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const GalaxyEdge& e : gal.edges) {
        if (forward)
            adj[e.parent].push_back(e.child);
        else
            adj[e.child].push_back(e.parent);
    }
    return adj;
}

std::map<std::string, int> bfs_depths(const std::map<std::string, std::vector<std::string>>& adj,
                                      const std::string& start) {
    std::map<std::string, int> depth{{start, 0}};
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
        std::string key = queue.front();
        queue.pop_front();
        int d = depth.at(key);
        auto it = adj.find(key);
        if (it == adj.end()) continue;
        for (const std::string& next : it->second)
            if (depth.emplace(next, d + 1).second) queue.push_back(next);
    }
    return depth;
}

// Classes of the unique component made of three multiedges.
std::vector<LabelSet> triangle_classes(const Multigraph& g) {
    for (LabelSet comp : g.components()) {
        std::vector<LabelSet> inside;
        for (LabelSet cls : g.multiedge_classes())
            if ((cls & comp) == cls) inside.push_back(cls);
        if (inside.size() == 3) return inside;
    }
    fail(errc::precondition, "graph has no multitriangle component");
}

struct EngineResult {
    std::optional<Int> value;
    std::string error;
};

// Independent pairings of one base graph against many nodes, split over
// threads; each entry draws its shifts from a seed derived from its key, so
// the outcome does not depend on the schedule.
std::map<std::string, EngineResult> run_engine(const Galaxy& gal, const Multigraph& base,
                                               const std::vector<std::string>& keys,
                                               std::uint64_t seed) {
    std::vector<EngineResult> results(keys.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < keys.size();) {
            try {
                results[i].value =
                    stable_pairing(base, gal.nodes.at(keys[i]).graph, derive_seed(seed, keys[i]))
                        .value;
            } catch (const Error& e) {
                results[i].error = e.code();
            }
        }
    };
    int cap = table_thread_cap.load();
    std::size_t limit = cap > 0 ? static_cast<std::size_t>(cap)
                                : static_cast<std::size_t>(
                                      std::max(1u, std::thread::hardware_concurrency()));
    std::size_t workers = std::min(keys.size(), limit);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }
    std::map<std::string, EngineResult> out;
    for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], std::move(results[i]));
    return out;
}

} // namespace

Galaxy build_galaxy(const SimpleGraph& g, std::optional<int> max_depth) {
    if (!is_laman(g)) fail(errc::precondition, "root graph is not Laman");
    Galaxy gal;
    gal.root = g;
    Multigraph root_graph = Multigraph::from_simple(g);
    gal.root_key = canonical_form(root_graph);
    gal.nodes.emplace(gal.root_key, GalaxyNode{std::move(root_graph), ExcisionHistory{g, {}}});

    std::vector<std::string> frontier{gal.root_key};
    for (int depth = 0; !frontier.empty() && (!max_depth || depth < *max_depth); ++depth) {
        // All parents of a node sit one level up, so the level's witnesses are
        // final before any of its children are formed.
        std::map<std::string, GalaxyNode> next;
        for (const std::string& parent_key : frontier) {
            const GalaxyNode& parent = gal.nodes.at(parent_key);
            for (LabelSet cls : parent.graph.multiedge_classes()) {
                if (parent.graph.is_isolated(cls)) continue;
                Multigraph child = excise(parent.graph, cls);
                std::string child_key = canonical_form(child);
                gal.edges.push_back(GalaxyEdge{parent_key, child_key, cls});
                auto [u, v] = parent.graph.edge(cls.min_label());
                ExcisionHistory witness = parent.witness;
                witness.steps.push_back(ExcisionStep{cls, u, v});
                auto it = next.find(child_key);
                if (it == next.end()) {
                    next.emplace(child_key, GalaxyNode{std::move(child), std::move(witness)});
                } else if (history_less(witness, it->second.witness)) {
                    it->second.graph = std::move(child);
                    it->second.witness = std::move(witness);
                }
            }
        }
        frontier.clear();
        for (auto& [key, node] : next) {
            frontier.push_back(key);
            gal.nodes.emplace(key, std::move(node));
        }
    }
    return gal;
}

std::optional<int> distance(const Galaxy& gal, const std::string& a, const std::string& b) {
    if (!gal.nodes.count(a) || !gal.nodes.count(b))
        fail(errc::unknown_node, "unknown galaxy node");
    auto depths = bfs_depths(adjacency(gal, true), a);
    auto it = depths.find(b);
    if (it == depths.end()) return std::nullopt;
    return it->second;
}

bool is_chain_of_multiedges(const Multigraph& g) {
    for (LabelSet comp : g.components()) {
        int classes = 0;
        for (LabelSet cls : g.multiedge_classes())
            if ((cls & comp) == cls) ++classes;
        std::set<int> vertices;
        for (int l : comp.labels()) {
            auto [u, v] = g.edge(l);
            vertices.insert(u);
            vertices.insert(v);
        }
        // A connected component is a tree of multiedges exactly when its
        // class count is one less than its vertex count.
        if (classes != static_cast<int>(vertices.size()) - 1) return false;
    }
    return true;
}

PairingTable pairing_table(const Galaxy& gal, const std::string& base, bool use_shortcuts,
                           std::uint64_t seed) {
    auto base_it = gal.nodes.find(base);
    if (base_it == gal.nodes.end()) fail(errc::unknown_node, "unknown galaxy node: " + base);
    const Multigraph& base_graph = base_it->second.graph;
    const int m = base_graph.m();
    const int base_rank = rank(base_graph, LabelSet::full(m));

    PairingTable table;
    table.base = base;
    auto set_value = [&](const std::string& key, Int value, std::string method) {
        table.entries[key] = TableEntry{std::move(value), std::move(method), ""};
    };
    auto set_error = [&](const std::string& key, std::string code) {
        table.entries[key] = TableEntry{std::nullopt, "error", std::move(code)};
    };
    auto is_set = [&](const std::string& key) { return table.entries.count(key) != 0; };

    // The pairing needs the two cone dimensions to sum to m+1.
    for (const auto& [key, node] : gal.nodes)
        if (base_rank + rank(node.graph, LabelSet::full(m)) != m + 1)
            table.entries[key] = TableEntry{std::nullopt, "inapplicable", ""};

    auto forward = adjacency(gal, true);
    std::vector<std::string> engine_keys;
    std::vector<std::string> arboreal_keys;
    std::vector<std::string> triangle_keys;
    std::map<std::string, std::string> chain_source;

    if (use_shortcuts) {
        // Every node below a non-root ancestor of the base pairs to zero:
        // both cone spans contain that ancestor's component indicators, so
        // their sum is everywhere deficient and a generic shift misses.
        std::set<std::string> marked;
        std::deque<std::string> queue;
        for (const auto& [key, d] : bfs_depths(adjacency(gal, false), base))
            if (key != gal.root_key && marked.insert(key).second) queue.push_back(key);
        while (!queue.empty()) {
            std::string key = queue.front();
            queue.pop_front();
            auto it = forward.find(key);
            if (it == forward.end()) continue;
            for (const std::string& child : it->second)
                if (marked.insert(child).second) queue.push_back(child);
        }
        for (const std::string& key : marked)
            if (!is_set(key)) set_value(key, 0, "branch-trivial");

        // Plan the rest by increasing depth so chains precede their
        // descendants, which reuse the one computed value.
        std::vector<std::pair<int, std::string>> order;
        for (const auto& [key, node] : gal.nodes) order.emplace_back(node.depth(), key);
        std::sort(order.begin(), order.end());
        const bool base_leaf = classify(base_graph) == ExcisionClass::fully_excised;
        std::set<std::string> planned;
        for (const auto& [d, key] : order) {
            if (is_set(key) || planned.count(key)) continue;
            planned.insert(key);
            const Multigraph& graph = gal.nodes.at(key).graph;
            ExcisionClass cls = classify(graph);
            if (cls == ExcisionClass::fully_excised) {
                (base_leaf ? arboreal_keys : engine_keys).push_back(key);
            } else if (is_chain_of_multiedges(graph)) {
                engine_keys.push_back(key);
                std::deque<std::string> down{key};
                while (!down.empty()) {
                    std::string at = down.front();
                    down.pop_front();
                    auto it = forward.find(at);
                    if (it == forward.end()) continue;
                    for (const std::string& child : it->second)
                        if (planned.insert(child).second) {
                            if (!is_set(child)) chain_source[child] = key;
                            down.push_back(child);
                        }
                }
            } else if (cls == ExcisionClass::excised_triangle) {
                triangle_keys.push_back(key);
            } else {
                engine_keys.push_back(key);
            }
        }
    } else {
        for (const auto& [key, node] : gal.nodes)
            if (!is_set(key)) engine_keys.push_back(key);
    }

    for (const auto& [key, res] : run_engine(gal, base_graph, engine_keys, seed)) {
        if (res.value)
            set_value(key, *res.value, "general");
        else
            set_error(key, res.error);
    }

    // Leaf against leaf: the two full excision chains pair to 1 exactly when
    // their reduced flats interleave as a tree.
    for (const std::string& key : arboreal_keys) {
        try {
            ChainOfFlats c1 = history_to_chain(base_it->second.witness);
            ChainOfFlats c2 = history_to_chain(gal.nodes.at(key).witness);
            set_value(key, is_arboreal_pair(gal.root, c1, c2) ? 1 : 0, "leaf-arboreal");
        } catch (const Error& e) {
            set_error(key, e.code());
        }
    }

    for (const auto& [key, source] : chain_source) {
        const TableEntry& from = table.entries.at(source);
        if (from.value)
            set_value(key, *from.value, "chain-lemma");
        else
            set_error(key, from.error);
    }

    // An excised triangle's fan is covered by the supports of its three
    // collapse leaves, so with no positive child it pairs to zero and with
    // exactly one it inherits that child's value.
    for (const std::string& key : triangle_keys) {
        auto it = forward.find(key);
        std::set<std::string> children;
        if (it != forward.end()) children.insert(it->second.begin(), it->second.end());
        bool known = !children.empty();
        int positives = 0;
        Int inherited = 0;
        for (const std::string& child : children) {
            auto entry = table.entries.find(child);
            if (entry == table.entries.end() || !entry->second.value) {
                known = false;
                break;
            }
            if (*entry->second.value > 0) {
                ++positives;
                inherited = *entry->second.value;
            }
        }
        if (known && positives <= 1) {
            set_value(key, positives == 0 ? Int(0) : inherited, "triangle-lemma");
            continue;
        }
        try {
            set_value(key, stable_pairing(base_graph, gal.nodes.at(key).graph,
                                          derive_seed(seed, key))
                               .value,
                      "general");
        } catch (const Error& e) {
            set_error(key, e.code());
        }
    }
    return table;
}

SubadditivityReport check_subadditivity(const Galaxy& gal, const std::string& base,
                                        const std::string& target, int ell,
                                        std::uint64_t seed) {
    if (!gal.nodes.count(base) || !gal.nodes.count(target))
        fail(errc::unknown_node, "unknown galaxy node");
    if (ell <= 0) fail(errc::precondition, "distance must be positive");
    std::vector<std::string> at_distance;
    for (const auto& [key, d] : bfs_depths(adjacency(gal, true), target))
        if (d == ell) at_distance.push_back(key);
    if (at_distance.empty())
        fail(errc::not_found, "no node at distance " + std::to_string(ell) + " below the target");

    const Multigraph& base_graph = gal.nodes.at(base).graph;
    SubadditivityReport report;
    report.value =
        stable_pairing(base_graph, gal.nodes.at(target).graph, derive_seed(seed, target)).value;
    for (const std::string& key : at_distance) {
        Int v = stable_pairing(base_graph, gal.nodes.at(key).graph, derive_seed(seed, key)).value;
        report.total += v;
        report.terms.emplace_back(key, std::move(v));
    }
    report.holds = report.value <= report.total;
    return report;
}

bool is_additive_pair(const std::string& h, const std::string& h2,
                      std::pair<LabelSet, LabelSet> p1, std::pair<LabelSet, LabelSet> p2,
                      const Galaxy& gal) {
    auto it1 = gal.nodes.find(h);
    auto it2 = gal.nodes.find(h2);
    if (it1 == gal.nodes.end() || it2 == gal.nodes.end())
        fail(errc::unknown_node, "unknown galaxy node");
    const Multigraph& g1 = it1->second.graph;
    const Multigraph& g2 = it2->second.graph;
    if (classify(g1) != ExcisionClass::excised_triangle ||
        classify(g2) != ExcisionClass::excised_triangle)
        fail(errc::precondition, "both nodes must be excised triangles");
    if (p1 == p2) fail(errc::precondition, "the two cone selections coincide");
    std::vector<LabelSet> t1 = triangle_classes(g1);
    std::vector<LabelSet> t2 = triangle_classes(g2);
    auto member = [](const std::vector<LabelSet>& t, LabelSet e) {
        return std::find(t.begin(), t.end(), e) != t.end();
    };
    for (auto [e1, e2] : {p1, p2}) {
        if (!member(t1, e1) || !member(t2, e2))
            fail(errc::precondition, "selection is not a triangle multiedge of its node");
        Int leaf = stable_pairing(excise(g1, e1), excise(g2, e2)).value;
        if (leaf != 1)
            fail(errc::precondition, "collapse leaves pair to " + leaf.str() + ", expected 1");
    }

    // Feasibility of u_1 + u_1' = u_2 + u_2' with u_i interior to the cone of
    // g1 whose triangle multiedge p_i.first is largest, u_i' likewise in g2.
    // Variables are the four points plus one slack s under every strict
    // inequality; the system is a cone, so a positive s is one that grows
    // without bound.
    const int m = g1.m();
    const int dim = 4 * m + 1;
    std::vector<std::vector<Rat>> lhs;
    std::vector<Rat> rhs;
    auto zero_row = [&] { return std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0)); };
    auto add_equality = [&](std::vector<Rat> row) {
        std::vector<Rat> neg(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
        lhs.push_back(std::move(row));
        rhs.push_back(0);
        lhs.push_back(std::move(neg));
        rhs.push_back(0);
    };
    for (int j = 0; j < m; ++j) {
        auto row = zero_row();
        row[0 * m + j] = 1;
        row[1 * m + j] = 1;
        row[2 * m + j] = -1;
        row[3 * m + j] = -1;
        add_equality(std::move(row));
    }
    auto add_cone = [&](int block, const Multigraph& g, const std::vector<LabelSet>& triangle,
                        LabelSet e) {
        LabelSet comp = triangle[0] | triangle[1] | triangle[2];
        LabelSet rest = comp - e;
        std::vector<LabelSet> layers{e, rest};
        for (LabelSet cls : g.multiedge_classes())
            if ((cls & comp) != cls) layers.push_back(cls);
        for (LabelSet layer : layers) {
            auto labels = layer.labels();
            for (std::size_t i = 1; i < labels.size(); ++i) {
                auto row = zero_row();
                row[block * m + labels[0] - 1] = 1;
                row[block * m + labels[i] - 1] = -1;
                add_equality(std::move(row));
            }
        }
        auto row = zero_row();
        row[block * m + e.min_label() - 1] = -1;
        row[block * m + rest.min_label() - 1] = 1;
        row[4 * m] = 1;
        lhs.push_back(std::move(row));
        rhs.push_back(0);
    };
    add_cone(0, g1, t1, p1.first);
    add_cone(1, g2, t2, p1.second);
    add_cone(2, g1, t1, p2.first);
    add_cone(3, g2, t2, p2.second);

    std::vector<Rat> objective(static_cast<std::size_t>(dim), Rat(0));
    objective[static_cast<std::size_t>(4 * m)] = 1;
    LpResult res = lp_maximize(lhs, rhs, objective);
    return res.feasible && (!res.bounded || res.value > 0);
}

void set_table_threads(int n) { table_thread_cap.store(n < 0 ? 0 : n); }

} // namespace tropgal
