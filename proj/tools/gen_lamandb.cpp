// Regenerates data/lamandb.txt: one Henneberg sequence per isomorphism class
// of Laman graphs on 3..8 vertices, indexed by ascending canonical code.
//
//   gen_lamandb <output-file>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <vector>

#include "tropgal/error.hpp"
#include "tropgal/multigraph.hpp"

using namespace tropgal;

namespace {

// Smallest adjacency bitmask over all vertex relabelings.
std::uint64_t canonical_code(const SimpleGraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : g.edges) {
            int a = perm[u - 1], b = perm[v - 1];
            if (a > b) std::swap(a, b);
            int pos = (a - 1) * g.n - (a - 1) * a / 2 + (b - a - 1);
            code |= 1ull << pos;
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_lamandb <output-file>\n";
        return 1;
    }
    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 1;
    }

    // level: canonical code -> first Henneberg sequence reaching the class.
    std::map<std::uint64_t, HennebergSequence> level;
    level[canonical_code(SimpleGraph{2, {{1, 2}}})] = {};

    for (int n = 3; n <= 8; ++n) {
        std::map<std::uint64_t, HennebergSequence> next;
        for (const auto& [code, seq] : level) {
            SimpleGraph g = from_henneberg_sequence(seq);
            auto consider = [&](HennebergMove mv) {
                HennebergSequence extended = seq;
                extended.push_back(mv);
                SimpleGraph h = mv.kind == HennebergMove::H0 ? henneberg0(g, mv.a, mv.b)
                                                             : henneberg1(g, mv.a, mv.b);
                if (!is_laman(h)) fail(errc::internal, "henneberg move left the Laman class");
                next.emplace(canonical_code(h), std::move(extended));
            };
            for (int i = 1; i <= g.n; ++i)
                for (int j = i + 1; j <= g.n; ++j) consider({HennebergMove::H0, i, j});
            for (int e = 1; e <= g.m(); ++e)
                for (int k = 1; k <= g.n; ++k) {
                    auto [u, v] = g.edges[e - 1];
                    if (k != u && k != v) consider({HennebergMove::H1, e, k});
                }
        }
        level = std::move(next);
        for (const auto& [code, seq] : level)
            out << n << " " << format_henneberg(seq) << "\n";
        std::cout << "n=" << n << ": " << level.size() << " classes\n";
    }
    return 0;
}
