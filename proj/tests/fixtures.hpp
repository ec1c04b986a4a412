#pragma once

#include <functional>
#include <string>

#include <doctest.h>

#include "tropgal/error.hpp"
#include "tropgal/multigraph.hpp"

namespace fixtures {

inline tropgal::SimpleGraph k3_s() {
    return {3, {{1, 2}, {1, 3}, {2, 3}}};
}

inline tropgal::SimpleGraph k4_s() {
    return {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
}

// Two triangles 123 and 456 joined by the matching 14, 25, 36.
inline tropgal::SimpleGraph prism_s() {
    return {6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {2, 5}, {3, 6}, {4, 6}, {5, 6}}};
}

// Laman graph on 5 vertices used for the chain-reduction and arboreal
// examples: a strip of three triangles 124, 245, 235.
inline tropgal::SimpleGraph fan5_s() {
    return {5, {{1, 4}, {1, 2}, {2, 4}, {4, 5}, {2, 5}, {2, 3}, {3, 5}}};
}

// K4 minus an edge; labels follow the worked excision identities:
// 1={1,3}, 2={1,2}, 3={2,3}, 4={3,4}, 5={2,4}.
inline tropgal::SimpleGraph diamond_s() {
    return {4, {{1, 3}, {1, 2}, {2, 3}, {3, 4}, {2, 4}}};
}

// Strip of five triangles on 7 vertices and 11 edges; the host of the
// excised-triangle and non-additivity examples.
inline tropgal::SimpleGraph strip7_s() {
    return {7,
            {{1, 3},
             {1, 2},
             {2, 3},
             {3, 4},
             {2, 4},
             {2, 5},
             {4, 5},
             {4, 6},
             {5, 6},
             {5, 7},
             {6, 7}}};
}

// Two vertex-disjoint triangles; labels 1..3 and 4..6.
inline tropgal::SimpleGraph two_triangles_s() {
    return {6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}};
}

inline tropgal::Multigraph k3() { return tropgal::Multigraph::from_simple(k3_s()); }
inline tropgal::Multigraph k4() { return tropgal::Multigraph::from_simple(k4_s()); }
inline tropgal::Multigraph prism() { return tropgal::Multigraph::from_simple(prism_s()); }
inline tropgal::Multigraph fan5() { return tropgal::Multigraph::from_simple(fan5_s()); }
inline tropgal::Multigraph diamond() { return tropgal::Multigraph::from_simple(diamond_s()); }
inline tropgal::Multigraph strip7() { return tropgal::Multigraph::from_simple(strip7_s()); }
inline tropgal::Multigraph two_triangles() {
    return tropgal::Multigraph::from_simple(two_triangles_s());
}

// Triangle whose edges 12 and 45 are doubled: classes {1,2}, {3}, {4,5}.
inline tropgal::Multigraph multitriangle() {
    return tropgal::Multigraph(3, {{1, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 3}});
}

inline void expect_error(const std::string& code, const std::function<void()>& fn) {
    try {
        fn();
        FAIL_CHECK("expected error with code " << code);
    } catch (const tropgal::Error& e) {
        CHECK(e.code() == code);
    }
}

} // namespace fixtures
