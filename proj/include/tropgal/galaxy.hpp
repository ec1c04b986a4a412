#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropgal/exact.hpp"
#include "tropgal/excision.hpp"
#include "tropgal/labelset.hpp"
#include "tropgal/multigraph.hpp"

namespace tropgal {

// One excised graph, together with the lexicographically smallest excision
// history that reaches it from the root.
struct GalaxyNode {
    Multigraph graph;
    ExcisionHistory witness;

    int depth() const { return static_cast<int>(witness.steps.size()); }
};

// parent --excised--> child. Two edges may share endpoints when different
// multiedges of the parent produce the same child.
struct GalaxyEdge {
    std::string parent;
    std::string child;
    LabelSet excised;

    bool operator==(const GalaxyEdge&) const = default;
};

// DAG of all iterated excisions of a root graph, up to the build depth.
// Nodes are keyed by canonical_form, so the same graph reached along
// different excision orders appears once. The root is the unique source;
// every edge adds one component, so the DAG is graded by depth.
struct Galaxy {
    SimpleGraph root;
    std::string root_key;
    std::map<std::string, GalaxyNode> nodes;
    std::vector<GalaxyEdge> edges;
};

Galaxy build_galaxy(const SimpleGraph& g, std::optional<int> max_depth = std::nullopt);

// Length of a shortest directed path a -> b, nullopt when b is unreachable.
std::optional<int> distance(const Galaxy& gal, const std::string& a, const std::string& b);

// Every non-isolated component is a tree of multiedges. Such graphs keep
// their tropicalization's support unchanged under further excision, so one
// pairing value covers the node and all of its descendants.
bool is_chain_of_multiedges(const Multigraph& g);

// method: how the value was obtained.
//   general        engine computation (stable_pairing)
//   leaf-arboreal  tree test on the two full excision chains
//   chain-lemma    propagated from a chain-of-multiedges ancestor
//   triangle-lemma inherited from the children of an excised triangle
//   branch-trivial zero forced by a shared non-root ancestor
//   inapplicable   codimensions do not complement; no value
//   error          engine failed; `error` holds the code
struct TableEntry {
    std::optional<Int> value;
    std::string method;
    std::string error;

    bool operator==(const TableEntry&) const = default;
};

// Pairing of one base node against every node of the galaxy.
struct PairingTable {
    std::string base;
    std::map<std::string, TableEntry> entries;
};

// With use_shortcuts, entries provable by structure skip the engine; the
// remaining entries run the engine in parallel, each seeded by
// derive_seed(seed, node key). Engine failures mark their own entry only.
PairingTable pairing_table(const Galaxy& gal, const std::string& base, bool use_shortcuts = true,
                           std::uint64_t seed = 0);

// Caps the worker threads used to fill tables; 0 restores the hardware
// default. Applies process-wide.
void set_table_threads(int n);

struct SubadditivityReport {
    Int value = 0;                                  // pairing of base with target
    std::vector<std::pair<std::string, Int>> terms; // pairing of base with each node
                                                    // at the given distance from target
    Int total = 0;                                  // sum of terms
    bool holds = false;                             // value <= total
};

// Compares the pairing at target with the sum over all nodes at directed
// distance ell below target. Errors when no node sits at that distance.
SubadditivityReport check_subadditivity(const Galaxy& gal, const std::string& base,
                                        const std::string& target, int ell,
                                        std::uint64_t seed = 0);

// Whether two excised triangles admit one shift meeting both tropicalizations
// in two prescribed pairs of cones: p1 and p2 each name a triangle multiedge
// of h and one of h2, and the witness system asks for relative-interior
// points u_i of the h-cone at p_i.first and u_i' of the h2-cone at p_i.second
// with u_1 + u_1' = u_2 + u_2'. Strictness is decided exactly by maximizing a
// slack variable. Requires p1 != p2 and both collapse-leaf pairings equal 1.
bool is_additive_pair(const std::string& h, const std::string& h2,
                      std::pair<LabelSet, LabelSet> p1, std::pair<LabelSet, LabelSet> p2,
                      const Galaxy& gal);

} // namespace tropgal
