#pragma once

#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tropgal {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Dense arbitrary-precision integer matrix, row-major.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> entries;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    void append_row(const std::vector<Int>& row) {
        entries.insert(entries.end(), row.begin(), row.end());
        ++rows;
    }

    std::vector<Int> row(int r) const {
        return {entries.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                entries.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols};
    }

    bool operator==(const IntegerMatrix&) const = default;
};

// Invariant factors d1 | d2 | ... of the Smith normal form (nonzero ones only).
std::vector<Int> smith_invariants(IntegerMatrix m);

int integer_rank(const IntegerMatrix& m);

// Basis (as rows) of the saturated kernel lattice {x in Z^cols : m x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

// Basis (as rows) of span_Q(rows of gens) intersected with Z^cols.
IntegerMatrix saturate(const IntegerMatrix& gens);

// [Z^m : N1 + N2] for saturated bases given as rows. Throws not_full_rank
// when the stacked rows do not span Q^m.
Int lattice_index(const IntegerMatrix& n1, const IntegerMatrix& n2, int m);

// Exact solution structure of a rational linear system A x = b.
struct LinearSolution {
    bool consistent = false;
    std::vector<Rat> particular;          // one solution, size cols
    std::vector<std::vector<Rat>> kernel; // basis of the null space of A
};

LinearSolution solve_rational(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

int rational_rank(std::vector<std::vector<Rat>> a);

} // namespace tropgal
