#include "tropgal/flats.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "tropgal/detail/unionfind.hpp"
#include "tropgal/error.hpp"

namespace tropgal {

namespace {

// Vertex sets of the connected components of the subgraph on s, as bitmasks
// over 1..n (n <= 64 is not guaranteed, so use vector<char> marking).
struct SubgraphComponents {
    int count = 0;
    int touched = 0;
    std::vector<int> comp_of_vertex; // -1 when the vertex is untouched

    SubgraphComponents(const Multigraph& g, LabelSet s) {
        detail::UnionFind uf(g.n() + 1);
        std::vector<char> used(static_cast<std::size_t>(g.n()) + 1, 0);
        for (int l : s.labels()) {
            auto [u, v] = g.edge(l);
            used[u] = used[v] = 1;
            uf.unite(u, v);
        }
        comp_of_vertex.assign(static_cast<std::size_t>(g.n()) + 1, -1);
        std::vector<int> index_of_root(static_cast<std::size_t>(g.n()) + 1, -1);
        for (int v = 1; v <= g.n(); ++v) {
            if (!used[v]) continue;
            ++touched;
            int r = uf.find(v);
            if (index_of_root[r] < 0) index_of_root[r] = count++;
            comp_of_vertex[v] = index_of_root[r];
        }
    }
};

} // namespace

bool is_flat(const Multigraph& g, LabelSet s) {
    SubgraphComponents sc(g, s);
    for (int l = 1; l <= g.m(); ++l) {
        if (s.contains(l)) continue;
        auto [u, v] = g.edge(l);
        if (sc.comp_of_vertex[u] >= 0 && sc.comp_of_vertex[u] == sc.comp_of_vertex[v])
            return false;
    }
    return true;
}

int rank(const Multigraph& g, LabelSet s) {
    SubgraphComponents sc(g, s);
    return sc.touched - sc.count;
}

Flat closure(const Multigraph& g, LabelSet s) {
    for (;;) {
        SubgraphComponents sc(g, s);
        LabelSet grown = s;
        for (int l = 1; l <= g.m(); ++l) {
            if (s.contains(l)) continue;
            auto [u, v] = g.edge(l);
            if (sc.comp_of_vertex[u] >= 0 && sc.comp_of_vertex[u] == sc.comp_of_vertex[v])
                grown.add(l);
        }
        if (grown == s) return Flat{s, sc.touched - sc.count};
        s = grown;
    }
}

std::vector<std::vector<Flat>> proper_flats(const Multigraph& g) {
    // BFS upward from the rank-1 flats (multiedge classes): every flat of rank
    // k+1 is the closure of a rank-k flat plus one edge, so each level reaches
    // the next. Memoized by bitset; 2^m subset scans stay out of the picture.
    std::vector<std::vector<Flat>> out;
    for (LabelSet comp : g.components()) {
        std::map<std::uint64_t, int> seen;
        std::vector<Flat> frontier;
        for (LabelSet cls : g.multiedge_classes()) {
            if (!cls.subset_of(comp) || cls == comp) continue;
            if (seen.emplace(cls.bits, 1).second) frontier.push_back(Flat{cls, 1});
        }
        std::vector<Flat> flats;
        flats.push_back(Flat{LabelSet{}, 0});
        while (!frontier.empty()) {
            std::vector<Flat> next;
            for (const Flat& f : frontier) {
                flats.push_back(f);
                for (int l : (comp - f.labels).labels()) {
                    LabelSet grown = f.labels;
                    grown.add(l);
                    Flat c = closure(g, grown);
                    if (c.labels == comp) continue;
                    if (seen.emplace(c.labels.bits, c.rank).second) next.push_back(c);
                }
            }
            frontier = std::move(next);
        }
        std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
            return std::pair(a.rank, a.labels.bits) < std::pair(b.rank, b.labels.bits);
        });
        out.push_back(std::move(flats));
    }
    return out;
}

std::vector<Flat> covers(const Multigraph& g, const Flat& f) {
    std::set<LabelSet> seen;
    std::vector<Flat> out;
    for (int l = 1; l <= g.m(); ++l) {
        if (f.labels.contains(l)) continue;
        LabelSet grown = f.labels;
        grown.add(l);
        Flat c = closure(g, grown);
        if (seen.insert(c.labels).second) out.push_back(c);
    }
    return out;
}

bool ComponentChain::maximal() const {
    if (static_cast<int>(flats.size()) != rank - 1) return false;
    for (std::size_t i = 0; i < flats.size(); ++i)
        if (flats[i].rank != static_cast<int>(i) + 1) return false;
    return true;
}

int ChainOfFlats::length() const {
    int total = 0;
    for (const ComponentChain& c : components) total += static_cast<int>(c.flats.size());
    return total;
}

bool ChainOfFlats::maximal() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentChain& c) { return c.maximal(); });
}

namespace {

// All maximal chains within one component, each as the list of flats of
// ranks 1..target. The empty chain is the unique answer when target = 0.
void maximal_chains_of_component(const Multigraph& g, LabelSet comp, int target,
                                 std::vector<Flat>& prefix, std::vector<std::vector<Flat>>& out) {
    if (static_cast<int>(prefix.size()) == target) {
        out.push_back(prefix);
        return;
    }
    Flat base = prefix.empty() ? Flat{LabelSet{}, 0} : prefix.back();
    for (const Flat& c : covers(g, base)) {
        if (!c.labels.subset_of(comp) || c.labels == comp) continue;
        prefix.push_back(c);
        maximal_chains_of_component(g, comp, target, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

ChainEnumerator::ChainEnumerator(const Multigraph& g) {
    for (LabelSet comp : g.components()) {
        component_edges_.push_back(comp);
        int r = rank(g, comp);
        component_ranks_.push_back(r);
        std::vector<std::vector<Flat>> chains;
        std::vector<Flat> prefix;
        maximal_chains_of_component(g, comp, r - 1, prefix, chains);
        std::sort(chains.begin(), chains.end());
        if (chains.empty()) done_ = true; // cannot happen: r >= 1 per component
        per_component_.push_back(std::move(chains));
    }
    odometer_.assign(per_component_.size(), 0);
}

unsigned long long ChainEnumerator::count() const {
    unsigned long long total = 1;
    for (const auto& chains : per_component_) total *= chains.size();
    return total;
}

std::optional<ChainOfFlats> ChainEnumerator::next() {
    if (done_) return std::nullopt;
    ChainOfFlats out;
    for (std::size_t i = 0; i < per_component_.size(); ++i)
        out.components.push_back(
            ComponentChain{component_edges_[i], component_ranks_[i], per_component_[i][odometer_[i]]});
    for (std::size_t i = per_component_.size(); i-- > 0;) {
        if (++odometer_[i] < per_component_[i].size()) return out;
        odometer_[i] = 0;
    }
    done_ = true;
    return out;
}

std::vector<ChainOfFlats> all_maximal_chains(const Multigraph& g) {
    ChainEnumerator en(g);
    std::vector<ChainOfFlats> out;
    while (auto c = en.next()) out.push_back(std::move(*c));
    return out;
}

ChainOfFlats chain_from_sets(const Multigraph& g, const std::vector<std::vector<LabelSet>>& sets) {
    const std::vector<LabelSet>& comps = g.components();
    if (sets.size() != comps.size())
        fail(errc::dimension_mismatch,
             "chain lists " + std::to_string(sets.size()) + " components, graph has " +
                 std::to_string(comps.size()));
    ChainOfFlats out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        ComponentChain cc;
        cc.edges = comps[i];
        cc.rank = rank(g, comps[i]);
        for (LabelSet s : sets[i]) {
            if (s.empty()) continue;
            if (!s.subset_of(comps[i]))
                fail(errc::not_flat, "set " + s.key() + " is not inside its component");
            if (s == comps[i])
                fail(errc::not_flat, "set " + s.key() + " is the full component, not a proper flat");
            if (!is_flat(g, s)) fail(errc::not_flat, "set " + s.key() + " is not a flat");
            if (!cc.flats.empty() && !(cc.flats.back().labels.subset_of(s) &&
                                       cc.flats.back().labels != s))
                fail(errc::not_flat, "sets are not strictly nested at " + s.key());
            cc.flats.push_back(Flat{s, rank(g, s)});
        }
        out.components.push_back(std::move(cc));
    }
    return out;
}

ReducedChain reduce(const ChainOfFlats& c, LabelSet component_edges) {
    const ComponentChain* cc = nullptr;
    for (const ComponentChain& k : c.components)
        if (k.edges == component_edges) cc = &k;
    if (!cc) fail(errc::not_found, "no chain component with edges " + component_edges.key());
    if (!cc->maximal())
        fail(errc::chain_gap, "reduced form requires a maximal chain on " + component_edges.key());
    ReducedChain out;
    LabelSet prev;
    for (const Flat& f : cc->flats) {
        out.parts.push_back(f.labels - prev);
        prev = f.labels;
    }
    out.parts.push_back(component_edges - prev);
    return out;
}

} // namespace tropgal
