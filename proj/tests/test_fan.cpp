#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgal/fan.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tropgal/error.hpp"
#include "tropgal/exact.hpp"
#include "tropgal/excision.hpp"

#include "fixtures.hpp"

using namespace tropgal;
using namespace fixtures;

namespace {

LabelSet ls(std::initializer_list<int> labels) { return LabelSet::from_labels(labels); }

std::vector<Int> row01(std::initializer_list<int> labels, int m) {
    std::vector<Int> v(static_cast<std::size_t>(m), Int(0));
    for (int l : labels) v[static_cast<std::size_t>(l - 1)] = 1;
    return v;
}

// Chain on a connected host from raw flat sets.
ChainOfFlats chain1(const Multigraph& g, const std::vector<LabelSet>& sets) {
    return chain_from_sets(g, {sets});
}

// All chains with consecutive ranks 1..k on a connected host, k = 0..rank-1.
void gapless_rec(const Multigraph& g, std::vector<LabelSet>& cur, std::vector<std::vector<LabelSet>>& out) {
    out.push_back(cur);
    Flat base{LabelSet{}, 0};
    if (!cur.empty()) base = Flat{cur.back(), rank(g, cur.back())};
    for (const Flat& c : covers(g, base)) {
        if (c.labels == g.components()[0]) continue;
        cur.push_back(c.labels);
        gapless_rec(g, cur, out);
        cur.pop_back();
    }
}

std::vector<ChainOfFlats> all_gapless_chains(const Multigraph& g) {
    REQUIRE(g.components().size() == 1);
    std::vector<std::vector<LabelSet>> raw;
    std::vector<LabelSet> cur;
    gapless_rec(g, cur, raw);
    std::vector<ChainOfFlats> out;
    for (const std::vector<LabelSet>& sets : raw) out.push_back(chain1(g, sets));
    return out;
}

std::vector<ChainOfFlats> sorted_chains(const Fan& f) {
    std::vector<ChainOfFlats> out;
    ChainEnumerator en = f.maximal_chains();
    while (std::optional<ChainOfFlats> c = en.next()) out.push_back(*c);
    std::sort(out.begin(), out.end());
    return out;
}

// Componentwise: every flat of t appears in s.
bool chain_contains(const ChainOfFlats& s, const ChainOfFlats& t) {
    for (std::size_t i = 0; i < s.components.size(); ++i)
        for (const Flat& f : t.components[i].flats) {
            const std::vector<Flat>& sf = s.components[i].flats;
            if (std::find(sf.begin(), sf.end(), f) == sf.end()) return false;
        }
    return true;
}

// Point with the cone's chain as superlevel structure: positive random
// weights on the flat indicators, arbitrary shifts along the lineality.
std::vector<Rat> interior_point(const Multigraph& g, const ChainOfFlats& c, std::mt19937& rng) {
    std::uniform_int_distribution<int> pos(1, 5);
    std::uniform_int_distribution<int> any(-3, 3);
    std::vector<Rat> w(static_cast<std::size_t>(g.m()), Rat(0));
    for (const ComponentChain& cc : c.components) {
        for (const Flat& f : cc.flats) {
            int a = pos(rng);
            for (int l : f.labels.labels()) w[static_cast<std::size_t>(l - 1)] += a;
        }
        int b = any(rng);
        for (int l : cc.edges.labels()) w[static_cast<std::size_t>(l - 1)] += b;
    }
    return w;
}

IntegerMatrix stack_rows(const std::vector<std::vector<Int>>& rows, int cols) {
    IntegerMatrix m(0, cols);
    for (const std::vector<Int>& r : rows) m.append_row(r);
    return m;
}

// Full excision of the host along its first maximal chain.
Multigraph fully_excised(const SimpleGraph& g) {
    Multigraph mg = Multigraph::from_simple(g);
    std::vector<ChainOfFlats> chains = all_maximal_chains(mg);
    return apply(chain_to_history(g, chains.front()));
}

// The running excision with a multitriangle component: isolated classes
// {1}, {2,3}, {4,5}, {10} plus the triangle {6,7} | {8} | {9,11}.
Multigraph strip7_multitriangle() {
    ChainOfFlats c = chain1(strip7(), {ls({1}), ls({1, 2, 3}), ls({1, 2, 3, 4, 5}),
                                       ls({1, 2, 3, 4, 5, 10})});
    return apply(chain_to_history(strip7_s(), c));
}

} // namespace

TEST_CASE("lineality bases") {
    Multigraph g = k3();
    CHECK(lineality(g) == std::vector<std::vector<Int>>{row01({1, 2, 3}, 3)});
    CHECK(Fan(g).lineality_dim() == 1);

    Multigraph f1 = excise(g, ls({1}));
    CHECK(lineality(f1) == std::vector<std::vector<Int>>{row01({1}, 3), row01({2, 3}, 3)});

    CHECK(lineality(multitriangle()) == std::vector<std::vector<Int>>{row01({1, 2, 3, 4, 5}, 5)});

    Multigraph tt = two_triangles();
    CHECK(lineality(tt) == std::vector<std::vector<Int>>{row01({1, 2, 3}, 6), row01({4, 5, 6}, 6)});

    CHECK(classify(fully_excised(prism_s())) == ExcisionClass::fully_excised);
    CHECK(Fan(fully_excised(prism_s())).lineality_dim() == (9 + 1) / 2);
    CHECK(Fan(fully_excised(strip7_s())).lineality_dim() == (11 + 1) / 2);
    CHECK(Fan(fully_excised(k4_s())).lineality_dim() == (6 + 1) / 2);
}

TEST_CASE("tropicalize counts cones by tuples of per-component maximal chains") {
    Fan f = tropicalize(k3());
    CHECK(f.maximal_cone_count() == 3);
    CHECK(f.dim() == 2);
    CHECK(sorted_chains(f).size() == 3);

    CHECK(tropicalize(multitriangle()).maximal_cone_count() == 3);
    CHECK(tropicalize(two_triangles()).maximal_cone_count() == 9);
    CHECK(tropicalize(fully_excised(prism_s())).maximal_cone_count() == 1);
    CHECK(tropicalize(strip7_multitriangle()).maximal_cone_count() == 3);

    Multigraph p = prism();
    CHECK(tropicalize(p).maximal_cone_count() == all_maximal_chains(p).size());
    CHECK(tropicalize(p).dim() == 5);

    // Restartable streams: two independent iterations see the same chains.
    Fan fp = tropicalize(p);
    ChainEnumerator a = fp.maximal_chains();
    ChainEnumerator b = fp.maximal_chains();
    a.next();
    ChainEnumerator c = fp.maximal_chains();
    CHECK(*b.next() == *c.next());
}

TEST_CASE("cone accepts exactly the chains of the host") {
    Multigraph g = k3();
    Fan f = tropicalize(g);

    ChainOfFlats sigma1 = chain1(g, {ls({1})});
    BergmanCone c = f.cone(sigma1);
    CHECK(c.chain == sigma1);
    CHECK(c.host == g);
    CHECK(f.multiplicity(c) == 1);

    ChainOfFlats stale = sigma1;
    stale.components[0].flats[0].rank = 2;
    expect_error(errc::precondition, [&] { f.cone(stale); });

    expect_error(errc::not_flat, [&] { f.cone(chain1(g, {ls({1, 2})})); });
    expect_error(errc::dimension_mismatch, [&] { f.cone(ChainOfFlats{}); });

    Multigraph d = diamond();
    expect_error(errc::not_flat,
                 [&] { Fan(d).cone(chain1(d, {ls({1}), ls({4, 5})})); });
}

TEST_CASE("cone_of_point locates points by superlevel chains") {
    Multigraph g = k3();
    auto at = [&](int a, int b, int c) { return cone_of_point(g, {Rat(a), Rat(b), Rat(c)}); };

    std::optional<ChainOfFlats> lin = at(1, 1, 1);
    REQUIRE(lin.has_value());
    CHECK(lin->length() == 0);

    std::optional<ChainOfFlats> s1 = at(1, 0, 0);
    REQUIRE(s1.has_value());
    CHECK(*s1 == chain1(g, {ls({1})}));

    CHECK_FALSE(at(1, 2, 0).has_value());

    std::optional<ChainOfFlats> frac = cone_of_point(g, {Rat(1, 2), Rat(1, 3), Rat(1, 3)});
    REQUIRE(frac.has_value());
    CHECK(*frac == chain1(g, {ls({1})}));

    expect_error(errc::dimension_mismatch, [&] { cone_of_point(g, {Rat(0), Rat(0)}); });

    // Isolated class: membership only constrains the parallel labels to agree.
    Multigraph f1 = excise(k3(), ls({1}));
    CHECK(cone_of_point(f1, {Rat(5), Rat(2), Rat(2)}).has_value());
    CHECK_FALSE(cone_of_point(f1, {Rat(5), Rat(2), Rat(3)}).has_value());
}

TEST_CASE("interior points of maximal cones round-trip") {
    std::mt19937 rng(20260814);
    for (const Multigraph& g : {k3(), diamond(), fan5(), prism(), two_triangles(),
                                multitriangle(), strip7_multitriangle()}) {
        Fan f = tropicalize(g);
        ChainEnumerator en = f.maximal_chains();
        while (std::optional<ChainOfFlats> c = en.next()) {
            for (int trial = 0; trial < 3; ++trial) {
                std::optional<ChainOfFlats> back = cone_of_point(g, interior_point(g, *c, rng));
                REQUIRE(back.has_value());
                REQUIRE(*back == *c);
            }
        }
    }
}

TEST_CASE("cone_generators lists flat indicators plus the lineality") {
    Multigraph g = k3();
    Fan f = tropicalize(g);

    ConeGenerators s1 = cone_generators(f.cone(chain1(g, {ls({1})})));
    CHECK(s1.rays == std::vector<std::vector<Int>>{row01({1}, 3)});
    CHECK(s1.lineality == std::vector<std::vector<Int>>{row01({1, 2, 3}, 3)});

    ConeGenerators lin = cone_generators(f.cone(chain1(g, {})));
    CHECK(lin.rays.empty());
    CHECK(lin.lineality == lineality(g));

    // Chain behind the excision G followed by 2, 4, 6 of the triangle strip.
    Multigraph s = strip7();
    ChainOfFlats c = chain1(s, {ls({2}), ls({2, 4}), ls({2, 4, 6})});
    ConeGenerators gp = cone_generators(Fan(s).cone(c));
    CHECK(gp.rays == std::vector<std::vector<Int>>{row01({2}, 11), row01({2, 4}, 11),
                                                   row01({2, 4, 6}, 11)});
    std::vector<std::vector<Int>> rows = gp.rays;
    rows.insert(rows.end(), gp.lineality.begin(), gp.lineality.end());
    CHECK(integer_rank(stack_rows(rows, s.m())) == Fan(s).lineality_dim() + 3);
}

TEST_CASE("generator span dimension is lineality plus chain length") {
    for (const Multigraph& g : {k4(), fan5(), two_triangles()}) {
        Fan f = tropicalize(g);
        ChainEnumerator en = f.maximal_chains();
        while (std::optional<ChainOfFlats> c = en.next()) {
            // The maximal chain and all its truncations by one flat.
            std::vector<ChainOfFlats> cones{*c};
            for (std::size_t ci = 0; ci < c->components.size(); ++ci)
                for (std::size_t fi = 0; fi < c->components[ci].flats.size(); ++fi) {
                    ChainOfFlats t = *c;
                    t.components[ci].flats.erase(t.components[ci].flats.begin() +
                                                 static_cast<std::ptrdiff_t>(fi));
                    cones.push_back(t);
                }
            for (const ChainOfFlats& t : cones) {
                ConeGenerators gen = cone_generators(f.cone(t));
                std::vector<std::vector<Int>> rows = gen.rays;
                rows.insert(rows.end(), gen.lineality.begin(), gen.lineality.end());
                REQUIRE(integer_rank(stack_rows(rows, g.m())) ==
                        f.lineality_dim() + t.length());
            }
        }
    }
}

TEST_CASE("star at the lineality cone is the fan itself") {
    for (const Multigraph& g : {k3(), diamond(), two_triangles(), strip7_multitriangle()}) {
        Fan f = tropicalize(g);
        std::vector<std::vector<LabelSet>> empty(g.components().size());
        Fan st = star(g, f.cone(chain_from_sets(g, empty)));
        CHECK(st.host() == g);
        CHECK(st.maximal_cone_count() == f.maximal_cone_count());
        CHECK(st.lineality_basis() == f.lineality_basis());
    }
}

TEST_CASE("star of the triangle fan at a ray isolates the ray's edge") {
    Multigraph g = k3();
    Fan f = tropicalize(g);
    Fan st = star(g, f.cone(chain1(g, {ls({1})})));
    CHECK(canonical_form(st.host()) == "1;2.3");
    CHECK(st.lineality_basis() ==
          std::vector<std::vector<Int>>{row01({1}, 3), row01({2, 3}, 3)});
    CHECK(st.maximal_cone_count() == 1);
    CHECK(st.dim() == 2);

    CHECK(canonical_form(star(g, f.cone(chain1(g, {ls({2})}))).host()) == "1.3;2");

    expect_error(errc::precondition, [&] {
        Multigraph d = diamond();
        star(g, Fan(d).cone(chain1(d, {ls({1})})));
    });
    BergmanCone bad{g, chain1(g, {ls({1})})};
    bad.chain.components[0].flats[0].labels = ls({1, 2});
    expect_error(errc::not_flat, [&] { star(g, bad); });
}

TEST_CASE("star cones are the chains extending the base chain") {
    for (const Multigraph& g : {k3(), diamond(), k4(), fan5()}) {
        Fan f = tropicalize(g);
        std::vector<ChainOfFlats> maximal = all_maximal_chains(g);
        LabelSet comp = g.components()[0];
        for (const ChainOfFlats& c : all_gapless_chains(g)) {
            Fan st = star(g, f.cone(c));
            const std::vector<Flat>& base = c.components[0].flats;
            LabelSet top = base.empty() ? LabelSet{} : base.back().labels;

            // Lift each star chain: base flats, then core flats joined with top.
            std::vector<ChainOfFlats> lifted;
            ChainEnumerator en = st.maximal_chains();
            while (std::optional<ChainOfFlats> hc = en.next()) {
                std::vector<LabelSet> sets;
                for (const Flat& fl : base) sets.push_back(fl.labels);
                for (const ComponentChain& cc : hc->components) {
                    if (!(cc.edges == comp - top)) {
                        REQUIRE(cc.flats.empty());
                        continue;
                    }
                    for (const Flat& fl : cc.flats) sets.push_back(fl.labels | top);
                }
                lifted.push_back(chain1(g, sets));
            }
            std::sort(lifted.begin(), lifted.end());

            std::vector<ChainOfFlats> extending;
            for (const ChainOfFlats& m : maximal)
                if (chain_contains(m, c)) extending.push_back(m);
            std::sort(extending.begin(), extending.end());

            REQUIRE(lifted == extending);
        }
    }
}

TEST_CASE("star agrees with excision on the bundled minimally rigid graphs") {
    for (int n = 3; n <= 6; ++n) {
        for (int i = 1; i <= laman_db_count(n); ++i) {
            SimpleGraph root = laman_db(n, i);
            Multigraph g = Multigraph::from_simple(root);
            Fan f = tropicalize(g);
            for (const ChainOfFlats& c : all_gapless_chains(g)) {
                ExcisionHistory h = chain_to_history(root, c);
                Fan via_excision = tropicalize(apply(h));
                Fan via_star = star(g, f.cone(history_to_chain(h)));
                REQUIRE(canonical_form(via_excision.host()) ==
                        canonical_form(via_star.host()));
                REQUIRE(sorted_chains(via_excision) == sorted_chains(via_star));
            }
        }
    }
}

TEST_CASE("iterated stars compose") {
    // Consecutive flats: restar at the leftover rank-one flat of the core.
    Multigraph s = strip7();
    Fan fs = tropicalize(s);
    Fan once = star(s, fs.cone(chain1(s, {ls({2})})));
    const Multigraph& h1 = once.host();
    REQUIRE(h1.components().size() == 2);
    ChainOfFlats inner = chain_from_sets(h1, {{ls({4})}, {}});
    Fan twice = star(h1, once.cone(inner));
    Fan direct = star(s, fs.cone(chain1(s, {ls({2}), ls({2, 4})})));
    CHECK(canonical_form(twice.host()) == canonical_form(direct.host()));
    CHECK(sorted_chains(twice) == sorted_chains(direct));
    CHECK(twice.lineality_basis() == direct.lineality_basis());

    // Rank gap: star at a rank-two flat alone, then at a ray below it.
    auto compose_gapped = [](const Multigraph& g, LabelSet low, LabelSet high) {
        Fan f = tropicalize(g);
        Fan outer = star(g, f.cone(chain_from_sets(g, {{high}})));
        const Multigraph& l = outer.host();
        std::vector<std::vector<LabelSet>> sets(l.components().size());
        for (std::size_t ci = 0; ci < l.components().size(); ++ci)
            if (low.subset_of(l.components()[ci])) sets[ci] = {low};
        Fan inner = star(l, outer.cone(chain_from_sets(l, sets)));
        Fan direct = star(g, f.cone(chain_from_sets(g, {{low, high}})));
        CHECK(canonical_form(inner.host()) == canonical_form(direct.host()));
        CHECK(sorted_chains(inner) == sorted_chains(direct));
    };
    compose_gapped(k4(), ls({1}), ls({1, 2, 4}));
    compose_gapped(prism(), ls({1}), ls({1, 2, 3}));
}

TEST_CASE("star has the support germ of the fan at its cone") {
    std::mt19937 rng(977);
    std::uniform_int_distribution<int> dir(-3, 3);
    const Rat eps(1, 1 << 20);

    auto check_germ = [&](const Multigraph& g, const ChainOfFlats& c) {
        Fan f = tropicalize(g);
        Fan st = star(g, f.cone(c));
        std::vector<Rat> w(static_cast<std::size_t>(g.m()), Rat(0));
        for (const ComponentChain& cc : c.components)
            for (const Flat& fl : cc.flats)
                for (int l : fl.labels.labels()) w[static_cast<std::size_t>(l - 1)] += 1;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rat> u(static_cast<std::size_t>(g.m()));
            std::vector<Rat> moved(static_cast<std::size_t>(g.m()));
            for (std::size_t i = 0; i < u.size(); ++i) {
                u[i] = dir(rng);
                moved[i] = w[i] + eps * u[i];
            }
            REQUIRE(cone_of_point(g, moved).has_value() ==
                    cone_of_point(st.host(), u).has_value());
        }
    };

    check_germ(k3(), chain1(k3(), {ls({1})}));
    check_germ(k3(), chain1(k3(), {}));
    Multigraph d = diamond();
    check_germ(d, chain1(d, {ls({3})}));
    Multigraph f5 = fan5();
    check_germ(f5, all_maximal_chains(f5).front());
    check_germ(f5, chain1(f5, {ls({1})}));
    // Rank-gapped cones, both with connected and with disconnected layers.
    check_germ(k4(), chain_from_sets(k4(), {{ls({1, 2, 4})}}));
    check_germ(strip7(), chain_from_sets(strip7(), {{ls({2, 4})}}));
    check_germ(strip7(), chain_from_sets(strip7(), {{ls({2}), ls({2, 4, 6})}}));
}

TEST_CASE("sums of adjacent rays at codimension-one cones stay in the cone span") {
    for (const Multigraph& g : {k3(), diamond(), multitriangle(), k4(), two_triangles(), fan5()}) {
        Fan f = tropicalize(g);
        std::vector<ChainOfFlats> maximal = all_maximal_chains(g);
        std::set<ChainOfFlats> seen;
        for (const ChainOfFlats& m : maximal) {
            for (std::size_t ci = 0; ci < m.components.size(); ++ci)
                for (std::size_t fi = 0; fi < m.components[ci].flats.size(); ++fi) {
                    ChainOfFlats tau = m;
                    tau.components[ci].flats.erase(tau.components[ci].flats.begin() +
                                                   static_cast<std::ptrdiff_t>(fi));
                    if (!seen.insert(tau).second) continue;

                    std::vector<Int> sum(static_cast<std::size_t>(g.m()), Int(0));
                    int adjacent = 0;
                    for (const ChainOfFlats& other : maximal) {
                        if (!chain_contains(other, tau)) continue;
                        ++adjacent;
                        for (std::size_t fj = 0; fj < other.components[ci].flats.size(); ++fj) {
                            const Flat& fl = other.components[ci].flats[fj];
                            const std::vector<Flat>& tf = tau.components[ci].flats;
                            if (std::find(tf.begin(), tf.end(), fl) != tf.end()) continue;
                            for (int l : fl.labels.labels())
                                sum[static_cast<std::size_t>(l - 1)] += 1;
                        }
                    }
                    REQUIRE(adjacent >= 2);

                    ConeGenerators gen = cone_generators(f.cone(tau));
                    std::vector<std::vector<Int>> rows = gen.rays;
                    rows.insert(rows.end(), gen.lineality.begin(), gen.lineality.end());
                    int base_rank = integer_rank(stack_rows(rows, g.m()));
                    rows.push_back(sum);
                    REQUIRE(integer_rank(stack_rows(rows, g.m())) == base_rank);
                }
        }
    }
}
