#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgal/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fixtures.hpp"

using namespace tropgal;

TEST_CASE("validation") {
    fixtures::expect_error(errc::parse, [] { Multigraph(0, {}); });
    fixtures::expect_error(errc::parse, [] { Multigraph(2, {{1, 1}}); });
    fixtures::expect_error(errc::parse, [] { Multigraph(2, {{1, 3}}); });
    fixtures::expect_error(errc::parse, [] {
        validate(SimpleGraph{3, {{1, 2}, {1, 2}}});
    });
    fixtures::expect_error(errc::parse, [] {
        validate(SimpleGraph{3, {{2, 1}}});
    });
    CHECK(Multigraph(2, {{2, 1}}).edge(1) == std::pair<int, int>{1, 2});
}

TEST_CASE("multiedge classes and components") {
    Multigraph g = fixtures::multitriangle();
    auto classes = multiedges(g);
    REQUIRE(classes.classes.size() == 3);
    CHECK(classes.classes[0] == LabelSet::from_labels({1, 2}));
    CHECK(classes.classes[1] == LabelSet::from_labels({3}));
    CHECK(classes.classes[2] == LabelSet::from_labels({4, 5}));
    CHECK(!classes.isolated[0]);
    CHECK(g.is_multiedge(LabelSet::from_labels({1, 2})));
    CHECK(!g.is_multiedge(LabelSet::from_labels({1})));
    CHECK(!g.is_multiedge(LabelSet::from_labels({1, 3})));

    Multigraph h(4, {{1, 2}, {1, 2}, {3, 4}});
    CHECK(h.components().size() == 2);
    CHECK(h.components()[0] == LabelSet::from_labels({1, 2}));
    CHECK(h.components()[1] == LabelSet::from_labels({3}));
    CHECK(h.is_isolated(LabelSet::from_labels({1, 2})));
    CHECK(h.is_isolated(LabelSet::from_labels({3})));
    CHECK(!fixtures::k3().is_isolated(LabelSet::from_labels({1})));
    CHECK(h.component_of(2) == LabelSet::from_labels({1, 2}));
}

namespace {

// Counting characterization: |E| = 2n-3 and every vertex subset of size >= 2
// spans at most 2k-3 edges.
bool laman_by_counting(int n, const std::vector<std::pair<int, int>>& edges) {
    if (static_cast<int>(edges.size()) != 2 * n - 3) return false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int k = std::popcount(mask);
        if (k < 2) continue;
        int inside = 0;
        for (auto [u, v] : edges)
            if ((mask >> (u - 1) & 1) && (mask >> (v - 1) & 1)) ++inside;
        if (inside > 2 * k - 3) return false;
    }
    return true;
}

} // namespace

TEST_CASE("pebble game matches the counting characterization") {
    CHECK(is_laman(fixtures::k3_s()));
    CHECK(is_laman(fixtures::prism_s()));
    CHECK(is_laman(fixtures::fan5_s()));
    CHECK(!is_laman(fixtures::k4_s()));
    CHECK(is_laman(SimpleGraph{2, {{1, 2}}}));
    CHECK(!is_laman(SimpleGraph{1, {}}));
    CHECK(is_laman(SimpleGraph{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}}));

    // Exhaustive on n = 5: all 7-edge subgraphs of K5.
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) all.emplace_back(u, v);
    int laman_count = 0;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        if (std::popcount(mask) != 7) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) edges.push_back(all[i]);
        bool expected = laman_by_counting(5, edges);
        CHECK(is_laman(SimpleGraph{5, edges}) == expected);
        laman_count += expected;
    }
    CHECK(laman_count > 0);

    // Random 9-edge subgraphs of K6.
    std::mt19937_64 rng(7);
    std::vector<std::pair<int, int>> all6;
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v) all6.emplace_back(u, v);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<std::pair<int, int>> pool = all6;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 9; ++i) {
            std::size_t j = rng() % pool.size();
            edges.push_back(pool[j]);
            pool.erase(pool.begin() + static_cast<long>(j));
        }
        CHECK(is_laman(SimpleGraph{6, edges}) == laman_by_counting(6, edges));
    }
}

TEST_CASE("henneberg moves") {
    SimpleGraph single{2, {{1, 2}}};
    SimpleGraph tri = henneberg0(single, 1, 2);
    CHECK(tri == fixtures::k3_s());
    fixtures::expect_error(errc::invalid_move, [&] { henneberg0(tri, 1, 1); });
    fixtures::expect_error(errc::invalid_move, [&] { henneberg0(tri, 1, 4); });

    // Splitting edge 1 = {1,2} of the triangle onto vertex 3.
    SimpleGraph h1 = henneberg1(tri, 1, 3);
    CHECK(h1 == SimpleGraph{4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}});
    CHECK(is_laman(h1));
    fixtures::expect_error(errc::invalid_move, [&] { henneberg1(tri, 9, 3); });
    fixtures::expect_error(errc::invalid_move, [&] { henneberg1(tri, 1, 1); });

    HennebergSequence seq = {
        {HennebergMove::H0, 1, 2}, {HennebergMove::H0, 1, 3},
        {HennebergMove::H0, 4, 2}, {HennebergMove::H1, 5, 5}};
    CHECK(from_henneberg_sequence(seq) == fixtures::prism_s());
    fixtures::expect_error(errc::invalid_move, [] {
        from_henneberg_sequence({{HennebergMove::H0, 3, 4}});
    });
}

TEST_CASE("henneberg sequence round trip") {
    std::string text = "H0 1 2; H0 1 3; H0 4 2; H1 5 5";
    HennebergSequence seq = parse_henneberg(text);
    REQUIRE(seq.size() == 4);
    CHECK(format_henneberg(seq) == text);
    CHECK(from_henneberg_sequence(seq) == fixtures::prism_s());
    fixtures::expect_error(errc::parse, [] { parse_henneberg("H2 1 2"); });
    fixtures::expect_error(errc::parse, [] { parse_henneberg("H0 1"); });
    fixtures::expect_error(errc::parse, [] { parse_henneberg("H0 1 x"); });
}

TEST_CASE("laman database") {
    CHECK(laman_db_count(3) == 1);
    CHECK(laman_db_count(4) == 1);
    CHECK(laman_db_count(5) == 3);
    CHECK(laman_db_count(6) == 13);
    CHECK(laman_db_count(7) == 70);
    CHECK(laman_db_count(8) == 608);

    CHECK(laman_db(3, 1) == fixtures::k3_s());

    // The unique class on 4 vertices is K4 minus an edge: degrees 2,2,3,3.
    SimpleGraph g4 = laman_db(4, 1);
    std::vector<int> deg(5, 0);
    for (auto [u, v] : g4.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::sort(deg.begin() + 1, deg.end());
    CHECK(g4.n == 4);
    CHECK(std::vector<int>(deg.begin() + 1, deg.end()) == std::vector<int>{2, 2, 3, 3});

    for (int n = 3; n <= 6; ++n)
        for (int i = 1; i <= laman_db_count(n); ++i) {
            SimpleGraph g = laman_db(n, i);
            CHECK(g.n == n);
            CHECK(is_laman(g));
        }
    fixtures::expect_error(errc::not_found, [] { laman_db(2, 1); });
    fixtures::expect_error(errc::not_found, [] { laman_db(9, 1); });
    fixtures::expect_error(errc::not_found, [] { laman_db(5, 4); });
    fixtures::expect_error(errc::not_found, [] { laman_db(5, 0); });
}

namespace {

// Smallest adjacency bitmask over all vertex relabelings; n <= 8.
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

TEST_CASE("database entries are pairwise non-isomorphic and complete for n=5") {
    for (int n = 3; n <= 6; ++n) {
        std::set<std::uint64_t> codes;
        for (int i = 1; i <= laman_db_count(n); ++i)
            codes.insert(canonical_code(laman_db(n, i)));
        CHECK(static_cast<int>(codes.size()) == laman_db_count(n));
    }

    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) all.emplace_back(u, v);
    std::set<std::uint64_t> enumerated;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        if (std::popcount(mask) != 7) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) edges.push_back(all[i]);
        SimpleGraph g{5, edges};
        if (is_laman(g)) enumerated.insert(canonical_code(g));
    }
    std::set<std::uint64_t> bundled;
    for (int i = 1; i <= laman_db_count(5); ++i)
        bundled.insert(canonical_code(laman_db(5, i)));
    CHECK(enumerated == bundled);
}
