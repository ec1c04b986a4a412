#include "tropgal/exact.hpp"

#include <algorithm>
#include <cstdlib>

#include "tropgal/error.hpp"

namespace tropgal {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Reduce m to Smith normal form. When v != nullptr it accumulates the column
// operations (m -> m * V), so kernel vectors can be read off as columns of V.
void smith_reduce(IntegerMatrix& m, IntegerMatrix* v) {
    int r = m.rows, c = m.cols;
    if (v) *v = IntegerMatrix::identity(c);

    auto swap_rows = [&](int a, int b) {
        for (int j = 0; j < c; ++j) std::swap(m.at(a, j), m.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < r; ++i) std::swap(m.at(i, a), m.at(i, b));
        if (v)
            for (int i = 0; i < c; ++i) std::swap(v->at(i, a), v->at(i, b));
    };
    auto add_row = [&](int dst, int src, const Int& q) { // row dst += q * row src
        for (int j = 0; j < c; ++j) m.at(dst, j) += q * m.at(src, j);
    };
    auto add_col = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < r; ++i) m.at(i, dst) += q * m.at(i, src);
        if (v)
            for (int i = 0; i < c; ++i) v->at(i, dst) += q * v->at(i, src);
    };

    int t = 0;
    while (t < r && t < c) {
        // Pivot: nonzero entry of minimal absolute value in the submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (m.at(i, j) != 0 &&
                    (pi < 0 || abs_int(m.at(i, j)) < abs_int(m.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool clean = true;
        for (int i = t + 1; i < r; ++i)
            if (m.at(i, t) != 0) {
                Int q = m.at(i, t) / m.at(t, t); // truncated division
                add_row(i, t, -q);
                if (m.at(i, t) != 0) { // remainder became the smaller pivot
                    swap_rows(i, t);
                    clean = false;
                    break;
                }
            }
        if (!clean) continue;
        for (int j = t + 1; j < c; ++j)
            if (m.at(t, j) != 0) {
                Int q = m.at(t, j) / m.at(t, t);
                add_col(j, t, -q);
                if (m.at(t, j) != 0) {
                    swap_cols(j, t);
                    clean = false;
                    break;
                }
            }
        if (!clean) continue;

        // Divisibility: pivot must divide the rest of the submatrix.
        bool divides = true;
        for (int i = t + 1; i < r && divides; ++i)
            for (int j = t + 1; j < c && divides; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    add_row(t, i, 1);
                    divides = false;
                }
        if (!divides) continue;

        if (m.at(t, t) < 0) {
            for (int j = t; j < c; ++j) m.at(t, j) = -m.at(t, j);
        }
        ++t;
    }
}

} // namespace

std::vector<Int> smith_invariants(IntegerMatrix m) {
    smith_reduce(m, nullptr);
    std::vector<Int> out;
    for (int t = 0; t < std::min(m.rows, m.cols); ++t)
        if (m.at(t, t) != 0) out.push_back(m.at(t, t));
    return out;
}

int integer_rank(const IntegerMatrix& m) {
    return static_cast<int>(smith_invariants(m).size());
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
    if (m.rows == 0) return IntegerMatrix::identity(m.cols);
    IntegerMatrix work = m, v;
    smith_reduce(work, &v);
    int rank = 0;
    for (int t = 0; t < std::min(work.rows, work.cols); ++t)
        if (work.at(t, t) != 0) ++rank;
    IntegerMatrix out(0, m.cols);
    for (int j = rank; j < m.cols; ++j) {
        std::vector<Int> row(static_cast<std::size_t>(m.cols));
        for (int i = 0; i < m.cols; ++i) row[static_cast<std::size_t>(i)] = v.at(i, j);
        out.append_row(row);
    }
    return out;
}

IntegerMatrix saturate(const IntegerMatrix& gens) {
    // span_Q(rows) ∩ Z^c is the lattice orthogonal to the integer kernel of
    // the rows, and integer kernels are saturated by construction.
    return kernel_basis(kernel_basis(gens));
}

Int lattice_index(const IntegerMatrix& n1, const IntegerMatrix& n2, int m) {
    if (n1.cols != m || n2.cols != m)
        fail(errc::dimension_mismatch, "lattice bases must live in Z^" + std::to_string(m));
    IntegerMatrix stacked(0, m);
    for (int i = 0; i < n1.rows; ++i) stacked.append_row(n1.row(i));
    for (int i = 0; i < n2.rows; ++i) stacked.append_row(n2.row(i));
    auto inv = smith_invariants(stacked);
    if (static_cast<int>(inv.size()) < m)
        fail(errc::not_full_rank, "N1 + N2 has rank " + std::to_string(inv.size()) +
                                      " < " + std::to_string(m));
    Int idx = 1;
    for (const Int& d : inv) idx *= d;
    return idx;
}

LinearSolution solve_rational(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : static_cast<int>(b.size()) * 0;
    if (rows && static_cast<int>(b.size()) != rows)
        fail(errc::dimension_mismatch, "right-hand side length mismatch");

    // Augmented Gauss-Jordan elimination.
    std::vector<std::vector<Rat>> w(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        w[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);
    }
    std::vector<int> pivot_col;
    int prow = 0;
    for (int j = 0; j < cols && prow < rows; ++j) {
        int sel = -1;
        for (int i = prow; i < rows; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(w[static_cast<std::size_t>(sel)], w[static_cast<std::size_t>(prow)]);
        Rat piv = w[static_cast<std::size_t>(prow)][static_cast<std::size_t>(j)];
        for (int k = j; k <= cols; ++k) w[static_cast<std::size_t>(prow)][static_cast<std::size_t>(k)] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == prow) continue;
            Rat f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (f == 0) continue;
            for (int k = j; k <= cols; ++k)
                w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -=
                    f * w[static_cast<std::size_t>(prow)][static_cast<std::size_t>(k)];
        }
        pivot_col.push_back(j);
        ++prow;
    }

    LinearSolution sol;
    for (int i = prow; i < rows; ++i)
        if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] != 0) return sol; // inconsistent
    sol.consistent = true;
    sol.particular.assign(static_cast<std::size_t>(cols), Rat(0));
    for (int p = 0; p < static_cast<int>(pivot_col.size()); ++p)
        sol.particular[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(p)])] =
            w[static_cast<std::size_t>(p)][static_cast<std::size_t>(cols)];

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int j : pivot_col) is_pivot[static_cast<std::size_t>(j)] = true;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        std::vector<Rat> k(static_cast<std::size_t>(cols), Rat(0));
        k[static_cast<std::size_t>(j)] = 1;
        for (int p = 0; p < static_cast<int>(pivot_col.size()); ++p)
            k[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(p)])] =
                -w[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

int rational_rank(std::vector<std::vector<Rat>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int j = 0; j < cols && rank < rows; ++j) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(rank)]);
        for (int i = rank + 1; i < rows; ++i) {
            Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /
                    a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
            if (f == 0) continue;
            for (int k = j; k < cols; ++k)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -=
                    f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
        }
        ++rank;
    }
    return rank;
}

} // namespace tropgal
