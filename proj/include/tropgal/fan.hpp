#pragma once

#include <optional>
#include <vector>

#include "tropgal/exact.hpp"
#include "tropgal/flats.hpp"
#include "tropgal/multigraph.hpp"

namespace tropgal {

// Cone of the tropicalization of `host`: the nonnegative span of the chain's
// flat indicator vectors plus the host's lineality space. Maximal cones carry
// maximal chains; lower-dimensional cones carry truncated chains.
struct BergmanCone {
    Multigraph host;
    ChainOfFlats chain;

    bool operator==(const BergmanCone&) const = default;
};

struct ConeGenerators {
    std::vector<std::vector<Int>> rays;      // flat indicators, chain order
    std::vector<std::vector<Int>> lineality; // host lineality basis
};

// Basis of the lineality space of the tropicalization: one indicator vector
// per connected component (isolated multiedges are components of their own,
// so their indicators are already included). Disjoint supports, so the rows
// form a reduced integer basis.
std::vector<std::vector<Int>> lineality(const Multigraph& g);

// Tropicalization of a multigraph, i.e. the Bergman fan of its graphic
// matroid. Cones are kept symbolically as chains of flats; the maximal ones
// are streamed on demand rather than materialized. All maximal cones have
// multiplicity one.
class Fan {
public:
    explicit Fan(Multigraph host);

    const Multigraph& host() const { return host_; }
    const std::vector<std::vector<Int>>& lineality_basis() const { return lineality_; }
    int lineality_dim() const { return static_cast<int>(lineality_.size()); }

    // Dimension of every maximal cone (= rank of the full ground set).
    int dim() const;

    unsigned long long maximal_cone_count() const;

    // Restartable stream of the maximal cones' chains, one per cone.
    ChainEnumerator maximal_chains() const;

    // Validated cone of this fan; errors when the chain is not a chain of
    // proper flats of the host or carries stale rank or component data.
    BergmanCone cone(const ChainOfFlats& chain) const;

    int multiplicity(const BergmanCone&) const { return 1; }

private:
    Multigraph host_;
    std::vector<std::vector<Int>> lineality_;
};

Fan tropicalize(const Multigraph& g);

// Chain of the cone whose relative interior contains w: per component, the
// superlevel sets of w in decreasing value order, the full component dropped.
// Returns nullopt when some superlevel set is not a flat (w outside the
// support). Errors when w's length differs from the ground set size.
std::optional<ChainOfFlats> cone_of_point(const Multigraph& g, const std::vector<Rat>& w);

// Star of the tropicalization of g at the cone c, realized as the fan of a
// multigraph: the excised multigraph of c's chain when the chain has no rank
// gaps, and otherwise the disjoint union of the minors between consecutive
// chain entries. Cone by cone, the result's chains are the chains of g
// extending c's chain. The star at the lineality cone (empty chain) is the
// fan itself.
Fan star(const Multigraph& g, const BergmanCone& c);

ConeGenerators cone_generators(const BergmanCone& c);

} // namespace tropgal
