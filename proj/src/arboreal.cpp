#include "tropgal/arboreal.hpp"

#include <cstddef>
#include <numeric>
#include <string>

#include "tropgal/error.hpp"
#include "tropgal/excision.hpp"
#include "tropgal/fan.hpp"
#include "tropgal/intersect.hpp"

namespace tropgal {

namespace {

// Reduced flats of a maximal chain on a connected host, after checking that
// the chain really is a maximal chain of g.
std::vector<LabelSet> reduced_parts(const Multigraph& g, const ChainOfFlats& c) {
    Fan f = tropicalize(g);
    f.cone(c); // validates the chain against the host
    LabelSet full = LabelSet::full(g.m());
    if (c.components.size() != 1 ||
        static_cast<int>(c.components.front().flats.size()) != rank(g, full) - 1)
        fail(errc::precondition, "chain is not maximal");
    return reduce(c, full).parts;
}

int part_of(const std::vector<LabelSet>& parts, int label) {
    for (std::size_t p = 0; p < parts.size(); ++p)
        if (parts[p].contains(label)) return static_cast<int>(p);
    fail(errc::internal, "reduced flats do not partition the ground set");
}

} // namespace

IntersectionGraph intersection_graph(const SimpleGraph& g, const ChainOfFlats& c1,
                                     const ChainOfFlats& c2) {
    if (!is_laman(g)) fail(errc::precondition, "graph is not minimally rigid");
    Multigraph mg = Multigraph::from_simple(g);
    IntersectionGraph out;
    out.left = reduced_parts(mg, c1);
    out.right = reduced_parts(mg, c2);
    for (int i = 1; i <= mg.m(); ++i)
        out.edges.push_back({part_of(out.left, i), part_of(out.right, i)});
    return out;
}

bool is_arboreal_pair(const SimpleGraph& g, const ChainOfFlats& c1, const ChainOfFlats& c2) {
    IntersectionGraph ig = intersection_graph(g, c1, c2);
    const int n = static_cast<int>(ig.left.size() + ig.right.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int comps = n;
    for (auto [l, r] : ig.edges) {
        int a = find(l);
        int b = find(static_cast<int>(ig.left.size()) + r);
        if (a == b) return false; // a cycle, e.g. a parallel edge pair
        parent[static_cast<std::size_t>(a)] = b;
        --comps;
    }
    return comps == 1;
}

ArborealReport arboreal_matches_pairing(const SimpleGraph& g, const ChainOfFlats& c1,
                                        const ChainOfFlats& c2, std::uint64_t seed) {
    IntersectionGraph ig = intersection_graph(g, c1, c2);
    ArborealReport rep;
    rep.arboreal = is_arboreal_pair(g, c1, c2);
    rep.m = static_cast<int>(ig.edges.size());

    Multigraph f1 = apply(chain_to_history(g, c1));
    Multigraph f2 = apply(chain_to_history(g, c2));
    rep.pairing = stable_pairing(f1, f2, seed).value;

    IntegerMatrix ind(rep.m, static_cast<int>(ig.left.size() + ig.right.size()));
    int col = 0;
    for (const std::vector<LabelSet>* side : {&ig.left, &ig.right})
        for (const LabelSet& part : *side) {
            for (int l : part.labels()) ind.at(l - 1, col) = 1;
            ++col;
        }
    rep.rank = integer_rank(ind);
    return rep;
}

} // namespace tropgal
