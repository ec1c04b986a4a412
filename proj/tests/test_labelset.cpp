#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropgal/labelset.hpp"

#include "fixtures.hpp"

using tropgal::LabelSet;

TEST_CASE("construction and membership") {
    LabelSet s;
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.add(3);
    s.add(1);
    CHECK(s.contains(1));
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK(s.count() == 2);
    CHECK(s.min_label() == 1);
    CHECK(s.labels() == std::vector<int>{1, 3});

    CHECK(LabelSet::full(4) == LabelSet::from_labels({1, 2, 3, 4}));
    CHECK(LabelSet::single(64).contains(64));
    fixtures::expect_error(tropgal::errc::parse, [] { LabelSet{}.add(0); });
    fixtures::expect_error(tropgal::errc::parse, [] { LabelSet{}.add(65); });
}

TEST_CASE("set algebra") {
    LabelSet a = LabelSet::from_labels({1, 2, 5});
    LabelSet b = LabelSet::from_labels({2, 5, 7});
    CHECK((a & b) == LabelSet::from_labels({2, 5}));
    CHECK((a | b) == LabelSet::from_labels({1, 2, 5, 7}));
    CHECK((a - b) == LabelSet::from_labels({1}));
    CHECK(a.intersects(b));
    CHECK(!(a - b).intersects(b));
    CHECK(LabelSet::from_labels({2, 5}).subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(LabelSet{}.subset_of(a));

    LabelSet c = a;
    c.remove(5);
    CHECK(c == LabelSet::from_labels({1, 2}));
}

TEST_CASE("string forms") {
    CHECK(LabelSet::from_labels({1, 5, 12}).key() == "1.5.12");
    CHECK(LabelSet{}.key() == "");
    CHECK(LabelSet::from_labels({2, 3, 5}).pretty() == "235");
    CHECK(LabelSet::from_labels({2, 10}).pretty() == "2,10");
}
