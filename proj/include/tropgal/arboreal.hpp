#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tropgal/exact.hpp"
#include "tropgal/flats.hpp"
#include "tropgal/multigraph.hpp"

namespace tropgal {

// Bipartite multigraph on the reduced flats of two maximal chains: one edge
// per ground-set label, joining the unique part containing that label on
// each side.
struct IntersectionGraph {
    std::vector<LabelSet> left;  // reduced flats of the first chain
    std::vector<LabelSet> right; // reduced flats of the second chain
    std::vector<std::pair<int, int>> edges; // edges[i-1] = part indices of label i
};

// Builds the intersection graph of two maximal chains on the minimally rigid
// graph g. Errors when a chain does not belong to g or is not maximal.
IntersectionGraph intersection_graph(const SimpleGraph& g, const ChainOfFlats& c1,
                                     const ChainOfFlats& c2);

// True when the intersection graph is a tree (connected and acyclic; a
// parallel edge pair already counts as a cycle).
bool is_arboreal_pair(const SimpleGraph& g, const ChainOfFlats& c1, const ChainOfFlats& c2);

struct ArborealReport {
    bool arboreal = false;
    Int pairing;  // engine pairing of the two induced full excisions
    int rank = 0; // rank of the matrix whose columns are all reduced-flat indicators
    int m = 0;
};

// Runs the tree test together with its two independent certificates: the
// pairing of the full excisions along the chains, and the rank of the
// m x (m+1) indicator matrix of both reduced chains.
ArborealReport arboreal_matches_pairing(const SimpleGraph& g, const ChainOfFlats& c1,
                                        const ChainOfFlats& c2, std::uint64_t seed = 0);

} // namespace tropgal
