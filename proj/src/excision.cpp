#include "tropgal/excision.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropgal/error.hpp"

namespace tropgal {

Multigraph excise(const Multigraph& g, LabelSet e) {
    if (!g.is_multiedge(e))
        fail(errc::not_multiedge, "label set " + e.key() + " is not a multiedge class");
    if (g.is_isolated(e))
        fail(errc::isolated_multiedge, "multiedge " + e.key() + " is isolated");
    auto [v1, v2] = g.edge(e.min_label());
    int v12 = g.n() + 1;
    std::vector<std::pair<int, int>> endpoints;
    endpoints.reserve(static_cast<std::size_t>(g.m()));
    for (int l = 1; l <= g.m(); ++l) {
        auto [a, b] = g.edge(l);
        if (!e.contains(l)) {
            // Edges parallel to e are in e's class, so at most one endpoint
            // moves and no loop can appear.
            if (a == v1 || a == v2) a = v12;
            if (b == v1 || b == v2) b = v12;
            if (a > b) std::swap(a, b);
        }
        endpoints.emplace_back(a, b);
    }
    return Multigraph(g.n() + 1, std::move(endpoints));
}

ExcisionHistory make_history(const SimpleGraph& root, const std::vector<LabelSet>& classes) {
    ExcisionHistory h{root, {}};
    Multigraph cur = Multigraph::from_simple(root);
    for (LabelSet e : classes) {
        Multigraph next = excise(cur, e);
        auto [u, v] = cur.edge(e.min_label());
        h.steps.push_back(ExcisionStep{e, u, v});
        cur = std::move(next);
    }
    return h;
}

Multigraph apply(const ExcisionHistory& h) {
    Multigraph cur = Multigraph::from_simple(h.root);
    for (const ExcisionStep& s : h.steps) cur = excise(cur, s.multiedge);
    return cur;
}

std::string canonical_form(const Multigraph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.components().size(); ++i) {
        if (i) out += ';';
        LabelSet comp = g.components()[i];
        bool first_class = true;
        for (LabelSet cls : g.multiedge_classes()) {
            if (!cls.subset_of(comp)) continue;
            if (!first_class) out += '|';
            first_class = false;
            bool first_label = true;
            for (int l : cls.labels()) {
                if (!first_label) out += '.';
                first_label = false;
                out += std::to_string(l);
            }
        }
    }
    return out;
}

bool excisions_commute(const Multigraph& g, LabelSet e1, LabelSet e2) {
    if (!g.is_multiedge(e1))
        fail(errc::not_multiedge, "label set " + e1.key() + " is not a multiedge class");
    if (!g.is_multiedge(e2))
        fail(errc::not_multiedge, "label set " + e2.key() + " is not a multiedge class");
    auto [a1, b1] = g.edge(e1.min_label());
    auto [a2, b2] = g.edge(e2.min_label());
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
        fail(errc::precondition,
             "multiedges " + e1.key() + " and " + e2.key() + " share a vertex");
    auto run = [&](LabelSet first, LabelSet second) -> std::pair<bool, std::string> {
        try {
            return {true, canonical_form(excise(excise(g, first), second))};
        } catch (const Error& err) {
            return {false, err.code()};
        }
    };
    return run(e1, e2) == run(e2, e1);
}

ChainOfFlats history_to_chain(const ExcisionHistory& h) {
    Multigraph root = Multigraph::from_simple(h.root);
    ChainOfFlats out;
    for (LabelSet comp : root.components())
        out.components.push_back(ComponentChain{comp, rank(root, comp), {}});
    for (const ExcisionStep& s : h.steps) {
        ComponentChain& cc = out.components[static_cast<std::size_t>(
            root.component_index_of(s.multiedge.min_label()))];
        LabelSet u = (cc.flats.empty() ? LabelSet{} : cc.flats.back().labels) | s.multiedge;
        cc.flats.push_back(Flat{u, rank(root, u)});
    }
    return out;
}

ExcisionHistory chain_to_history(const SimpleGraph& g, const ChainOfFlats& c) {
    Multigraph root = Multigraph::from_simple(g);
    const std::vector<LabelSet>& comps = root.components();
    if (c.components.size() != comps.size())
        fail(errc::dimension_mismatch,
             "chain lists " + std::to_string(c.components.size()) +
                 " components, graph has " + std::to_string(comps.size()));
    ExcisionHistory h{g, {}};
    Multigraph cur = root;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const ComponentChain& cc = c.components[i];
        if (cc.edges != comps[i])
            fail(errc::dimension_mismatch, "chain component " + cc.edges.key() +
                                               " does not match graph component " +
                                               comps[i].key());
        LabelSet prev;
        int prev_rank = 0;
        for (const Flat& f : cc.flats) {
            int r = rank(root, f.labels);
            if (r != prev_rank + 1)
                fail(errc::chain_gap,
                     "rank gap between " + (prev.empty() ? std::string("{}") : prev.key()) +
                         " and " + f.labels.key());
            LabelSet diff = f.labels - prev;
            Multigraph next = excise(cur, diff);
            auto [u, v] = cur.edge(diff.min_label());
            h.steps.push_back(ExcisionStep{diff, u, v});
            cur = std::move(next);
            prev = f.labels;
            prev_rank = r;
        }
    }
    return h;
}

ExcisionClass classify(const Multigraph& g) {
    int big_components = 0;
    bool triangle = false;
    for (LabelSet comp : g.components()) {
        int classes = 0;
        for (LabelSet cls : g.multiedge_classes())
            if (cls.subset_of(comp)) ++classes;
        if (classes == 1) continue;
        ++big_components;
        std::set<int> vertices;
        for (int l : comp.labels()) {
            auto [a, b] = g.edge(l);
            vertices.insert(a);
            vertices.insert(b);
        }
        triangle = classes == 3 && vertices.size() == 3;
    }
    if (big_components == 0) return ExcisionClass::fully_excised;
    if (big_components == 1 && triangle) return ExcisionClass::excised_triangle;
    return ExcisionClass::other;
}

ExcisionHistory find_excised_triangle(const SimpleGraph& g) {
    if (g.n < 3)
        fail(errc::precondition, "a graph on " + std::to_string(g.n) +
                                     " vertices has no excised triangle (need n >= 3)");
    if (!is_laman(g)) fail(errc::precondition, "graph is not Laman");
    struct Node {
        std::vector<ExcisionStep> steps;
        Multigraph graph;
    };
    std::vector<Node> frontier;
    frontier.push_back(Node{{}, Multigraph::from_simple(g)});
    std::set<std::string> seen{canonical_form(frontier.front().graph)};
    while (!frontier.empty()) {
        // Frontier is in history-lex order (parents in order, classes by
        // smallest label), so the first hit is the tie-break winner.
        for (const Node& node : frontier)
            if (classify(node.graph) == ExcisionClass::excised_triangle)
                return ExcisionHistory{g, node.steps};
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (LabelSet cls : node.graph.multiedge_classes()) {
                if (node.graph.is_isolated(cls)) continue;
                Multigraph child = excise(node.graph, cls);
                if (!seen.insert(canonical_form(child)).second) continue;
                auto [u, v] = node.graph.edge(cls.min_label());
                Node grown{node.steps, std::move(child)};
                grown.steps.push_back(ExcisionStep{cls, u, v});
                next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    fail(errc::internal, "excision search exhausted without finding a triangle");
}

} // namespace tropgal
