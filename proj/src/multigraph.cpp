#include "tropgal/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "tropgal/detail/unionfind.hpp"
#include "tropgal/error.hpp"

namespace tropgal {

using detail::UnionFind;

void validate(const SimpleGraph& g) {
    if (g.n < 1) fail(errc::parse, "vertex count must be positive");
    if (g.m() > LabelSet::max_labels)
        fail(errc::parse, "at most 64 edges supported, got " + std::to_string(g.m()));
    std::vector<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 1 || v < 1 || u > g.n || v > g.n)
            fail(errc::parse, "edge endpoint out of range");
        if (u >= v) fail(errc::parse, "simple graph edges must satisfy u < v");
        seen.emplace_back(u, v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        fail(errc::parse, "repeated edge in simple graph");
}

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<int, int>> endpoints)
    : n_(vertex_count), edges_(std::move(endpoints)) {
    if (n_ < 1) fail(errc::parse, "vertex count must be positive");
    if (m() > LabelSet::max_labels)
        fail(errc::parse, "at most 64 edges supported, got " + std::to_string(m()));
    for (auto& [u, v] : edges_) {
        if (u < 1 || v < 1 || u > n_ || v > n_) fail(errc::parse, "edge endpoint out of range");
        if (u == v) fail(errc::parse, "loops are not allowed");
        if (u > v) std::swap(u, v);
    }

    // Multiedge classes: group labels by endpoint pair.
    std::map<std::pair<int, int>, LabelSet> by_pair;
    for (int l = 1; l <= m(); ++l) by_pair[edges_[l - 1]].add(l);
    for (auto& [pair, cls] : by_pair) classes_.push_back(cls);
    std::sort(classes_.begin(), classes_.end(),
              [](LabelSet a, LabelSet b) { return a.min_label() < b.min_label(); });
    class_of_.assign(static_cast<std::size_t>(m()), 0);
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
        for (int l : classes_[c].labels()) class_of_[l - 1] = c;

    // Components of the edge set.
    UnionFind uf(n_ + 1);
    for (auto [u, v] : edges_) uf.unite(u, v);
    std::map<int, LabelSet> by_root;
    for (int l = 1; l <= m(); ++l) by_root[uf.find(edges_[l - 1].first)].add(l);
    for (auto& [root, comp] : by_root) components_.push_back(comp);
    std::sort(components_.begin(), components_.end(),
              [](LabelSet a, LabelSet b) { return a.min_label() < b.min_label(); });
    component_of_.assign(static_cast<std::size_t>(m()), 0);
    for (int c = 0; c < static_cast<int>(components_.size()); ++c)
        for (int l : components_[c].labels()) component_of_[l - 1] = c;
}

Multigraph Multigraph::from_simple(const SimpleGraph& g) {
    validate(g);
    return Multigraph(g.n, g.edges);
}

bool Multigraph::is_multiedge(LabelSet s) const {
    if (s.empty()) return false;
    return multiedge_of(s.min_label()) == s;
}

bool Multigraph::is_isolated(LabelSet multiedge) const {
    auto [u, v] = edges_[multiedge.min_label() - 1];
    for (int l = 1; l <= m(); ++l) {
        if (multiedge.contains(l)) continue;
        auto [a, b] = edges_[l - 1];
        if (a == u || a == v || b == u || b == v) return false;
    }
    return true;
}

MultiedgePartition multiedges(const Multigraph& g) {
    MultiedgePartition p;
    p.classes = g.multiedge_classes();
    p.isolated.reserve(p.classes.size());
    for (LabelSet cls : p.classes) p.isolated.push_back(g.is_isolated(cls));
    return p;
}

// (2,3)-pebble game. Each vertex starts with two pebbles; inserting an edge
// uv requires gathering four pebbles on {u,v} by reversing directed paths,
// then spends one. All m edges insert iff the subset counts |E'| <= 2|V'|-3
// hold everywhere; with m = 2n-3 that is exactly the Laman condition.
bool is_laman(const SimpleGraph& g) {
    validate(g);
    int n = g.n;
    if (n == 1) return false;
    if (g.m() != 2 * n - 3) return false;

    std::vector<int> pebbles(n + 1, 2);
    std::vector<std::vector<int>> out(n + 1);

    auto pull_to = [&](int target, int avoid) -> bool {
        // Find a pebble reachable from `target` along directed edges, not
        // sitting on `avoid`, and reverse the path to move it onto `target`.
        std::vector<int> prev(n + 1, -1);
        std::vector<int> stack{target};
        prev[target] = target;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x != target && x != avoid && pebbles[x] > 0) {
                --pebbles[x];
                ++pebbles[target];
                int cur = x;
                while (cur != target) {
                    int p = prev[cur];
                    auto it = std::find(out[p].begin(), out[p].end(), cur);
                    out[p].erase(it);
                    out[cur].push_back(p);
                    cur = p;
                }
                return true;
            }
            for (int y : out[x])
                if (prev[y] < 0) {
                    prev[y] = x;
                    stack.push_back(y);
                }
        }
        return false;
    };

    for (auto [u, v] : g.edges) {
        while (pebbles[u] + pebbles[v] < 4) {
            if (!pull_to(u, v) && !pull_to(v, u)) return false;
        }
        --pebbles[u];
        out[u].push_back(v);
    }
    return true;
}

SimpleGraph henneberg0(const SimpleGraph& g, int i, int j) {
    if (i == j) fail(errc::invalid_move, "H0 endpoints must differ");
    if (i < 1 || j < 1 || i > g.n || j > g.n)
        fail(errc::invalid_move, "H0 vertex out of range");
    SimpleGraph out = g;
    out.n = g.n + 1;
    out.edges.emplace_back(std::min(i, out.n), std::max(i, out.n));
    out.edges.emplace_back(std::min(j, out.n), std::max(j, out.n));
    return out;
}

SimpleGraph henneberg1(const SimpleGraph& g, int e, int k) {
    if (e < 1 || e > g.m()) fail(errc::invalid_move, "H1 edge label out of range");
    auto [i, j] = g.edges[static_cast<std::size_t>(e - 1)];
    if (k == i || k == j) fail(errc::invalid_move, "H1 vertex k must avoid the removed edge");
    if (k < 1 || k > g.n) fail(errc::invalid_move, "H1 vertex out of range");
    SimpleGraph out;
    out.n = g.n + 1;
    for (int l = 1; l <= g.m(); ++l)
        if (l != e) out.edges.push_back(g.edges[static_cast<std::size_t>(l - 1)]);
    out.edges.emplace_back(i, out.n);
    out.edges.emplace_back(j, out.n);
    out.edges.emplace_back(k, out.n);
    return out;
}

SimpleGraph from_henneberg_sequence(const HennebergSequence& seq) {
    SimpleGraph g{2, {{1, 2}}};
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto& mv = seq[i];
        try {
            g = mv.kind == HennebergMove::H0 ? henneberg0(g, mv.a, mv.b)
                                             : henneberg1(g, mv.a, mv.b);
        } catch (const Error& err) {
            fail(errc::invalid_move,
                 "move " + std::to_string(i + 1) + ": " + err.what());
        }
    }
    return g;
}

HennebergSequence parse_henneberg(const std::string& line) {
    HennebergSequence seq;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        std::stringstream ts(tok);
        std::string kind;
        if (!(ts >> kind)) continue; // empty segment
        HennebergMove mv{};
        if (kind == "H0")
            mv.kind = HennebergMove::H0;
        else if (kind == "H1")
            mv.kind = HennebergMove::H1;
        else
            fail(errc::parse, "unknown Henneberg move '" + kind + "'");
        if (!(ts >> mv.a >> mv.b)) fail(errc::parse, "malformed Henneberg move '" + tok + "'");
        seq.push_back(mv);
    }
    return seq;
}

std::string format_henneberg(const HennebergSequence& seq) {
    std::string out;
    for (const auto& mv : seq) {
        if (!out.empty()) out += "; ";
        out += (mv.kind == HennebergMove::H0 ? "H0 " : "H1 ");
        out += std::to_string(mv.a) + " " + std::to_string(mv.b);
    }
    return out;
}

} // namespace tropgal
