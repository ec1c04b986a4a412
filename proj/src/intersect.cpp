#include "tropgal/intersect.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "tropgal/error.hpp"
#include "tropgal/lp.hpp"
#include "tropgal/rng.hpp"

namespace tropgal {

namespace {

// A maximal cone, stored as the partition of the ground set into the layers
// of its chain: the successive flat differences of each component followed by
// that component's remainder. The cone's span is the space of vectors
// constant on each layer, and a point is in the relative interior exactly
// when its layer potentials strictly decrease along every component run.
struct LayerData {
    ChainOfFlats chain;
    std::vector<int> layer_of;             // 0-based ground-set element -> layer
    std::vector<std::pair<int, int>> runs; // [begin, end) layer range per component
    int layers = 0;
};

std::vector<LayerData> layer_data(const Multigraph& g) {
    std::vector<LayerData> out;
    Fan f = tropicalize(g);
    ChainEnumerator en = f.maximal_chains();
    while (std::optional<ChainOfFlats> c = en.next()) {
        LayerData d;
        d.layer_of.assign(static_cast<std::size_t>(g.m()), -1);
        for (const ComponentChain& cc : c->components) {
            int begin = d.layers;
            LabelSet prev;
            for (const Flat& fl : cc.flats) {
                for (int l : (fl.labels - prev).labels())
                    d.layer_of[static_cast<std::size_t>(l - 1)] = d.layers;
                ++d.layers;
                prev = fl.labels;
            }
            for (int l : (cc.edges - prev).labels())
                d.layer_of[static_cast<std::size_t>(l - 1)] = d.layers;
            ++d.layers;
            d.runs.push_back({begin, d.layers});
        }
        d.chain = std::move(*c);
        out.push_back(std::move(d));
    }
    return out;
}

// Saturated basis of the cone's linear span: the layer indicator vectors.
IntegerMatrix layer_lattice(const LayerData& d, int m) {
    IntegerMatrix mat(d.layers, m);
    for (int e = 0; e < m; ++e) mat.at(d.layer_of[static_cast<std::size_t>(e)], e) = 1;
    return mat;
}

enum class PairOutcome { no_meet, meet, non_generic };

// Classify one ordered pair of maximal cones under the shift u. Points of
// sigma1 and of sigma2 summing to u are potential assignments t with
// t[layer1(e)] + t[layer2(e)] = u_e for every element e, so the pair is
// explored as a bipartite graph on the layers. With complementary
// codimensions the layer counts satisfy p1 + p2 = m + 1, hence the pair is
// transversal exactly when that graph is a spanning tree.
PairOutcome classify_pair(const LayerData& a, const LayerData& b,
                          const std::vector<long long>& u) {
    const int m = static_cast<int>(u.size());
    const int pa = a.layers;
    const int n = pa + b.layers;

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int e = 0; e < m; ++e) {
        int va = a.layer_of[static_cast<std::size_t>(e)];
        int vb = pa + b.layer_of[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(va)].push_back({vb, e});
        adj[static_cast<std::size_t>(vb)].push_back({va, e});
    }

    std::vector<long long> t(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::vector<int> stack;
    int comps = 0;
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        ++comps;
        seen[static_cast<std::size_t>(root)] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                t[static_cast<std::size_t>(w)] =
                    u[static_cast<std::size_t>(e)] - t[static_cast<std::size_t>(v)];
                used[static_cast<std::size_t>(e)] = 1;
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }

    if (comps > 1) {
        // Not transversal. The shift is degenerate when u lies in the span of
        // the two cones, i.e. when every non-tree relation is consistent.
        for (int e = 0; e < m; ++e) {
            if (used[static_cast<std::size_t>(e)]) continue;
            long long ta = t[static_cast<std::size_t>(a.layer_of[static_cast<std::size_t>(e)])];
            long long tb = t[static_cast<std::size_t>(pa + b.layer_of[static_cast<std::size_t>(e)])];
            if (ta + tb != u[static_cast<std::size_t>(e)]) return PairOutcome::no_meet;
        }
        return PairOutcome::non_generic;
    }

    for (int e = 0; e < m; ++e)
        if (!used[static_cast<std::size_t>(e)])
            fail(errc::internal, "transversal layer graph is not a spanning tree");

    bool zero = false;
    for (int side = 0; side < 2; ++side) {
        const LayerData& d = side ? b : a;
        const int off = side ? pa : 0;
        for (auto [lo, hi] : d.runs)
            for (int j = lo; j + 1 < hi; ++j) {
                long long diff =
                    t[static_cast<std::size_t>(off + j)] - t[static_cast<std::size_t>(off + j + 1)];
                if (diff < 0) return PairOutcome::no_meet; // the meeting point escapes a cone
                if (diff == 0) zero = true;                // it sits on a proper face
            }
    }
    return zero ? PairOutcome::non_generic : PairOutcome::meet;
}

} // namespace

bool cones_meet(const std::vector<std::vector<Int>>& rays1,
                const std::vector<std::vector<Int>>& lin1,
                const std::vector<std::vector<Int>>& rays2,
                const std::vector<std::vector<Int>>& lin2, const std::vector<Rat>& shift) {
    const std::size_t m = shift.size();
    for (const auto* block : {&rays1, &lin1, &rays2, &lin2})
        for (const std::vector<Int>& v : *block)
            if (v.size() != m)
                fail(errc::dimension_mismatch, "generator length " + std::to_string(v.size()) +
                                                   " does not match ambient dimension " +
                                                   std::to_string(m));

    // Variables: coefficients on rays1, lin1, rays2, lin2; ray ones sign-bound.
    const std::size_t k1 = rays1.size(), l1 = lin1.size(), k2 = rays2.size(), l2 = lin2.size();
    const std::size_t n = k1 + l1 + k2 + l2;
    std::vector<LinIneq> sys;
    for (std::size_t r = 0; r < m; ++r) {
        LinIneq eq;
        eq.a.assign(n, Rat(0));
        std::size_t col = 0;
        for (const std::vector<Int>& v : rays1) eq.a[col++] = Rat(v[r]);
        for (const std::vector<Int>& v : lin1) eq.a[col++] = Rat(v[r]);
        for (const std::vector<Int>& v : rays2) eq.a[col++] = -Rat(v[r]);
        for (const std::vector<Int>& v : lin2) eq.a[col++] = -Rat(v[r]);
        eq.c = shift[r];
        LinIneq ge = eq;
        for (Rat& x : ge.a) x = -x;
        ge.c = -ge.c;
        sys.push_back(std::move(eq));
        sys.push_back(std::move(ge));
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (q >= k1 && q < k1 + l1) continue;
        if (q >= k1 + l1 + k2) continue;
        LinIneq nn;
        nn.a.assign(n, Rat(0));
        nn.a[q] = Rat(-1);
        nn.c = Rat(0);
        sys.push_back(std::move(nn));
    }
    return ineq_feasible(sys, static_cast<int>(n));
}

PairingResult stable_pairing(const Multigraph& g1, const Multigraph& g2, std::uint64_t seed,
                             int shift_bound, int max_retries) {
    const int m = g1.m();
    if (g2.m() != m)
        fail(errc::dimension_mismatch, "ground sets have sizes " + std::to_string(m) + " and " +
                                           std::to_string(g2.m()));
    const int codim1 = m - rank(g1, LabelSet::full(m));
    const int codim2 = m - rank(g2, LabelSet::full(m));
    if (codim1 + codim2 != m - 1)
        fail(errc::codimension_mismatch, "codimensions " + std::to_string(codim1) + " + " +
                                             std::to_string(codim2) + " != " +
                                             std::to_string(m - 1));

    const std::vector<LayerData> c1 = layer_data(g1);
    const std::vector<LayerData> c2 = layer_data(g2);

    Rng rng(seed);
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<Int> u(static_cast<std::size_t>(m));
        std::vector<long long> ull(static_cast<std::size_t>(m));
        for (std::size_t r = 0; r < u.size(); ++r) {
            long long x = rng.uniform(-shift_bound, shift_bound);
            u[r] = Int(x);
            ull[r] = x;
        }

        PairingResult res;
        res.value = 0;
        res.shift = u;
        res.retries = attempt;
        bool generic = true;

        for (const LayerData& a : c1) {
            for (const LayerData& b : c2) {
                PairOutcome outcome = classify_pair(a, b, ull);
                if (outcome == PairOutcome::no_meet) continue;
                if (outcome == PairOutcome::non_generic) {
                    generic = false;
                    break;
                }
                Int index = lattice_index(layer_lattice(a, m), layer_lattice(b, m), m);
                res.witnesses.push_back(PairingWitness{a.chain, b.chain, index});
                res.value += index;
            }
            if (!generic) break;
        }

        if (generic) return res;
    }
    fail(errc::genericity_exhausted,
         "no generic shift after " + std::to_string(max_retries + 1) + " draws");
}

Int realization_number(const SimpleGraph& g, std::uint64_t seed, int shift_bound,
                       int max_retries) {
    if (!is_laman(g)) fail(errc::precondition, "graph is not minimally rigid");
    Multigraph mg = Multigraph::from_simple(g);
    PairingResult r = stable_pairing(mg, mg, seed, shift_bound, max_retries);
    if (r.value % 2 != 0) fail(errc::internal, "self-pairing " + r.value.str() + " is odd");
    return r.value / 2;
}

} // namespace tropgal
