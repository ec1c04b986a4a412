#include "tropgal/fan.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "tropgal/detail/unionfind.hpp"
#include "tropgal/error.hpp"
#include "tropgal/excision.hpp"

namespace tropgal {

namespace {

std::vector<Int> indicator(LabelSet s, int m) {
    std::vector<Int> v(static_cast<std::size_t>(m), Int(0));
    for (int l : s.labels()) v[static_cast<std::size_t>(l - 1)] = 1;
    return v;
}

bool gapless(const ChainOfFlats& c) {
    for (const ComponentChain& cc : c.components) {
        int prev = 0;
        for (const Flat& f : cc.flats) {
            if (f.rank != prev + 1) return false;
            prev = f.rank;
        }
    }
    return true;
}

// Excises the successive differences of the chain, component by component.
Multigraph excise_chain(const Multigraph& g, const ChainOfFlats& c) {
    Multigraph cur = g;
    for (const ComponentChain& cc : c.components) {
        LabelSet prev;
        for (const Flat& f : cc.flats) {
            cur = excise(cur, f.labels - prev);
            prev = f.labels;
        }
    }
    return cur;
}

// Disjoint union, over consecutive chain entries F_{j-1} < F_j (with the full
// component on top), of the minors (G|F_j)/F_{j-1}, each on fresh vertices.
// Contracting a flat never creates loops, so the result stays loopless.
Multigraph layered_host(const Multigraph& g, const ChainOfFlats& c) {
    std::vector<std::pair<int, int>> endpoints(static_cast<std::size_t>(g.m()));
    int vertices = 0;
    for (const ComponentChain& cc : c.components) {
        std::vector<LabelSet> uppers;
        for (const Flat& f : cc.flats) uppers.push_back(f.labels);
        uppers.push_back(cc.edges);
        LabelSet prev;
        for (LabelSet upper : uppers) {
            LabelSet layer = upper - prev;
            detail::UnionFind uf(g.n() + 1);
            for (int l : prev.labels()) {
                auto [u, v] = g.edge(l);
                uf.unite(u, v);
            }
            std::map<int, int> id;
            for (int l : layer.labels()) {
                auto [u, v] = g.edge(l);
                int a = uf.find(u);
                int b = uf.find(v);
                int na = id.emplace(a, vertices + static_cast<int>(id.size()) + 1).first->second;
                int nb = id.emplace(b, vertices + static_cast<int>(id.size()) + 1).first->second;
                endpoints[static_cast<std::size_t>(l - 1)] = {na, nb};
            }
            vertices += static_cast<int>(id.size());
            prev = upper;
        }
    }
    return Multigraph(vertices, endpoints);
}

} // namespace

std::vector<std::vector<Int>> lineality(const Multigraph& g) {
    std::vector<std::vector<Int>> basis;
    for (LabelSet comp : g.components()) basis.push_back(indicator(comp, g.m()));
    return basis;
}

Fan::Fan(Multigraph host) : host_(std::move(host)), lineality_(lineality(host_)) {}

int Fan::dim() const {
    // #components + sum of (component rank - 1) = rank of the ground set.
    return rank(host_, LabelSet::full(host_.m()));
}

unsigned long long Fan::maximal_cone_count() const { return ChainEnumerator(host_).count(); }

ChainEnumerator Fan::maximal_chains() const { return ChainEnumerator(host_); }

BergmanCone Fan::cone(const ChainOfFlats& chain) const {
    std::vector<std::vector<LabelSet>> sets;
    for (const ComponentChain& cc : chain.components) {
        std::vector<LabelSet> s;
        for (const Flat& f : cc.flats) s.push_back(f.labels);
        sets.push_back(std::move(s));
    }
    ChainOfFlats rebuilt = chain_from_sets(host_, sets);
    if (!(rebuilt == chain))
        fail(errc::precondition, "chain carries component or rank data not matching the host");
    return BergmanCone{host_, rebuilt};
}

Fan tropicalize(const Multigraph& g) { return Fan(g); }

std::optional<ChainOfFlats> cone_of_point(const Multigraph& g, const std::vector<Rat>& w) {
    if (static_cast<int>(w.size()) != g.m())
        fail(errc::dimension_mismatch, "point has " + std::to_string(w.size()) +
                                           " coordinates, ground set has " + std::to_string(g.m()));
    ChainOfFlats out;
    for (LabelSet comp : g.components()) {
        std::vector<Rat> values;
        for (int l : comp.labels()) values.push_back(w[static_cast<std::size_t>(l - 1)]);
        std::sort(values.begin(), values.end(), std::greater<Rat>());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        ComponentChain cc;
        cc.edges = comp;
        cc.rank = rank(g, comp);
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            LabelSet s;
            for (int l : comp.labels())
                if (w[static_cast<std::size_t>(l - 1)] >= values[i]) s.add(l);
            if (!is_flat(g, s)) return std::nullopt;
            cc.flats.push_back(Flat{s, rank(g, s)});
        }
        out.components.push_back(std::move(cc));
    }
    return out;
}

Fan star(const Multigraph& g, const BergmanCone& c) {
    if (!(c.host == g)) fail(errc::precondition, "cone was built on a different host graph");
    BergmanCone v = Fan(g).cone(c.chain);
    if (gapless(v.chain)) return Fan(excise_chain(g, v.chain));
    return Fan(layered_host(g, v.chain));
}

ConeGenerators cone_generators(const BergmanCone& c) {
    ConeGenerators out;
    out.lineality = lineality(c.host);
    for (const ComponentChain& cc : c.chain.components)
        for (const Flat& f : cc.flats) out.rays.push_back(indicator(f.labels, c.host.m()));
    return out;
}

} // namespace tropgal
