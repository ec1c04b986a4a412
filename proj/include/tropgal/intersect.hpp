#pragma once

#include <cstdint>
#include <vector>

#include "tropgal/exact.hpp"
#include "tropgal/fan.hpp"
#include "tropgal/flats.hpp"
#include "tropgal/multigraph.hpp"

namespace tropgal {

// One transversal cone pair meeting after the shift, with its lattice index.
struct PairingWitness {
    ChainOfFlats chain1;
    ChainOfFlats chain2;
    Int index;

    bool operator==(const PairingWitness&) const = default;
};

struct PairingResult {
    Int value;               // sum of the witness lattice indices
    std::vector<Int> shift;  // integer displacement applied to the second fan
    std::vector<PairingWitness> witnesses;
    int retries = 0;         // shifts regenerated before a generic one was found
};

// Exact feasibility of cone1 meeting cone2 + shift, where each cone is the
// nonnegative span of its rays plus the linear span of its lineality rows.
// Errors when the vectors disagree on the ambient dimension.
bool cones_meet(const std::vector<std::vector<Int>>& rays1,
                const std::vector<std::vector<Int>>& lin1,
                const std::vector<std::vector<Int>>& rays2,
                const std::vector<std::vector<Int>>& lin2, const std::vector<Rat>& shift);

// Stable intersection product of Trop(g1) and -Trop(g2): draws an integer
// shift with entries in [-shift_bound, shift_bound], sums lattice indices
// over transversal cone pairs meeting in relative interior, and retries with
// a fresh shift whenever the drawn one is not generic (a boundary touch or a
// meeting non-transversal pair). The ground sets must have equal size m and
// the codimensions must add up to m - 1.
PairingResult stable_pairing(const Multigraph& g1, const Multigraph& g2,
                             std::uint64_t seed = 0, int shift_bound = 1 << 16,
                             int max_retries = 32);

// Half the self-pairing of a minimally rigid graph; the pairing is checked
// to be even first.
Int realization_number(const SimpleGraph& g, std::uint64_t seed = 0, int shift_bound = 1 << 16,
                       int max_retries = 32);

} // namespace tropgal
