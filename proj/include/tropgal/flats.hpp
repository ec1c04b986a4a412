#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "tropgal/labelset.hpp"
#include "tropgal/multigraph.hpp"

namespace tropgal {

// Edge set of the graphic matroid whose components are all vertex-induced,
// together with its rank (vertices touched minus components).
struct Flat {
    LabelSet labels;
    int rank = 0;

    auto operator<=>(const Flat&) const = default;
};

// Strictly nested proper flats of one connected component. The empty flat and
// the full component are left implicit; a maximal chain therefore lists
// ranks 1, 2, ..., rank(component)-1 with no gaps.
struct ComponentChain {
    LabelSet edges;           // full edge set of the host component
    int rank = 0;             // rank of the host component
    std::vector<Flat> flats;

    bool maximal() const;
    auto operator<=>(const ComponentChain&) const = default;
};

struct ChainOfFlats {
    std::vector<ComponentChain> components;

    int length() const;
    bool maximal() const;
    auto operator<=>(const ChainOfFlats&) const = default;
};

// Successive differences F_1, F_2\F_1, ..., E\F_r of a maximal chain on one
// component; the parts partition the component's edge set.
struct ReducedChain {
    std::vector<LabelSet> parts;

    auto operator<=>(const ReducedChain&) const = default;
};

bool is_flat(const Multigraph& g, LabelSet s);
Flat closure(const Multigraph& g, LabelSet s);
int rank(const Multigraph& g, LabelSet s);

// All proper flats, grouped per connected component (in component order),
// each component's list sorted by label set.
std::vector<std::vector<Flat>> proper_flats(const Multigraph& g);

// Distinct closures cl(f + {e}) over e outside f; every cover raises the rank
// by exactly one.
std::vector<Flat> covers(const Multigraph& g, const Flat& f);

// Streams all tuples of per-component maximal chains; the total count is the
// product of the per-component counts.
class ChainEnumerator {
public:
    explicit ChainEnumerator(const Multigraph& g);

    std::optional<ChainOfFlats> next();

    // Number of chains the enumerator yields in total.
    unsigned long long count() const;

private:
    std::vector<LabelSet> component_edges_;
    std::vector<int> component_ranks_;
    std::vector<std::vector<std::vector<Flat>>> per_component_;
    std::vector<std::size_t> odometer_;
    bool done_ = false;
};

std::vector<ChainOfFlats> all_maximal_chains(const Multigraph& g);

// Builds a validated chain from raw per-component flat sets. Leading empty
// sets are tolerated and dropped. Fails with not_flat / chain_gap style
// errors when the sets do not form a chain of proper flats.
ChainOfFlats chain_from_sets(const Multigraph& g, const std::vector<std::vector<LabelSet>>& sets);

// Reduced form of the chain on the component with the given edge set.
ReducedChain reduce(const ChainOfFlats& c, LabelSet component_edges);

} // namespace tropgal
