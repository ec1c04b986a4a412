#pragma once

#include <string>
#include <vector>

#include "tropgal/flats.hpp"
#include "tropgal/labelset.hpp"
#include "tropgal/multigraph.hpp"

namespace tropgal {

// One excision: the multiedge class cut out and the endpoint pair it
// connected at that moment (informational; replay only needs the class).
struct ExcisionStep {
    LabelSet multiedge;
    int u = 0;
    int v = 0;

    bool operator==(const ExcisionStep&) const = default;
};

// Root graph plus an ordered list of excisions, each valid after the
// previous ones. The excised classes are pairwise disjoint label sets.
struct ExcisionHistory {
    SimpleGraph root;
    std::vector<ExcisionStep> steps;

    bool operator==(const ExcisionHistory&) const = default;
};

enum class ExcisionClass { fully_excised, excised_triangle, other };

// g with the class e cut out: e keeps its two old endpoints and becomes
// isolated, edges avoiding both endpoints stay put, and every other edge at
// either endpoint is rewired to one new vertex. Labels never change.
Multigraph excise(const Multigraph& g, LabelSet e);

// Runs the excisions in order from the root, recording endpoints as it goes.
ExcisionHistory make_history(const SimpleGraph& root, const std::vector<LabelSet>& classes);

// Replays the history; throws if any step is invalid.
Multigraph apply(const ExcisionHistory& h);

// Vertex names carry no content once the edge labels are fixed, so excised
// graphs compare by their label partition: components joined by ';', classes
// inside a component by '|', labels inside a class by '.'.
std::string canonical_form(const Multigraph& g);

// Whether g excised e1 then e2 equals g excised e2 then e1 (as label
// partitions; orders that fail identically also count as equal). The classes
// must not share a vertex; in particular classes on different components
// always qualify.
bool excisions_commute(const Multigraph& g, LabelSet e1, LabelSet e2);

// The chain of prefix unions of the excised classes, grouped by the root
// component that contains them; rank of the j-th union is j.
ChainOfFlats history_to_chain(const ExcisionHistory& h);

// Inverse direction: excise F_1, then F_2 minus F_1, and so on, component by
// component. Requires every rank gap along the chain to be exactly 1.
ExcisionHistory chain_to_history(const SimpleGraph& g, const ChainOfFlats& c);

// fully_excised: every class is isolated. excised_triangle: every class is
// isolated except one component made of exactly 3 classes on 3 vertices.
ExcisionClass classify(const Multigraph& g);

// Breadth-first search over excision histories for one whose result is an
// excised triangle; shortest history, ties broken by smallest class labels.
ExcisionHistory find_excised_triangle(const SimpleGraph& g);

} // namespace tropgal
