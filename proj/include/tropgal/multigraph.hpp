#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropgal/labelset.hpp"

namespace tropgal {

// Simple graph with ordered edge list; the label of an edge is its 1-based
// position. Vertices are 1..n.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u < v

    int m() const { return static_cast<int>(edges.size()); }
    bool operator==(const SimpleGraph&) const = default;
};

void validate(const SimpleGraph& g);

// Loopless multigraph over the fixed ground set of edge labels 1..m.
// edge(l) gives the endpoints of label l; vertices are 1..n. The multiedge
// partition (maximal parallel classes) and the component partition of labels
// are derived once at construction.
class Multigraph {
public:
    Multigraph() = default;
    // endpoints[i] = edge with label i+1.
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> endpoints);

    static Multigraph from_simple(const SimpleGraph& g);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int label) const { return edges_[label - 1]; }

    // Maximal parallel classes, sorted by smallest label.
    const std::vector<LabelSet>& multiedge_classes() const { return classes_; }
    // Class containing a label.
    LabelSet multiedge_of(int label) const { return classes_[class_of_[label - 1]]; }
    bool is_multiedge(LabelSet s) const;
    // Both endpoints carry no edges outside the class.
    bool is_isolated(LabelSet multiedge) const;

    // Connected components as label sets, sorted by smallest label.
    const std::vector<LabelSet>& components() const { return components_; }
    int component_index_of(int label) const { return component_of_[label - 1]; }
    LabelSet component_of(int label) const { return components_[component_of_[label - 1]]; }

    bool operator==(const Multigraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<LabelSet> classes_;
    std::vector<int> class_of_;
    std::vector<LabelSet> components_;
    std::vector<int> component_of_;
};

struct MultiedgePartition {
    std::vector<LabelSet> classes;  // sorted by smallest label
    std::vector<bool> isolated;     // parallel to classes
};

MultiedgePartition multiedges(const Multigraph& g);

// Henneberg moves (Def-style vertex addition). H0 attaches a new vertex to
// i and j; H1 removes edge e = {i,j} and attaches a new vertex to i, j, k.
struct HennebergMove {
    enum Kind { H0, H1 } kind;
    int a = 0; // H0: vertex i;   H1: edge label e
    int b = 0; // H0: vertex j;   H1: vertex k
};

using HennebergSequence = std::vector<HennebergMove>;

bool is_laman(const SimpleGraph& g);

SimpleGraph henneberg0(const SimpleGraph& g, int i, int j);

// Removed label retired, remaining labels compacted to 1..m-1 preserving
// order, the three new edges appended as labels m, m+1, m+2.
SimpleGraph henneberg1(const SimpleGraph& g, int e, int k);

// Starts from the single edge {1,2}.
SimpleGraph from_henneberg_sequence(const HennebergSequence& seq);

HennebergSequence parse_henneberg(const std::string& line);
std::string format_henneberg(const HennebergSequence& seq);

// Bundled database of Laman graphs up to isomorphism, 3 <= n <= 8, 1-based
// index. laman_db_count(n) gives the number of classes for n.
SimpleGraph laman_db(int n, int index);
int laman_db_count(int n);

} // namespace tropgal
