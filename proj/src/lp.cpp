#include "tropgal/lp.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <boost/multiprecision/gmp.hpp>

#include "tropgal/error.hpp"

namespace tropgal {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Scale an inequality by a positive rational so the coefficient vector
// (including the bound) becomes a primitive integer vector. Equivalent
// inequalities then compare equal.
struct NormIneq {
    std::vector<Int> a;
    Int c;
    bool strict;

    bool operator<(const NormIneq& o) const {
        if (a != o.a) return a < o.a;
        if (c != o.c) return c < o.c;
        return strict < o.strict;
    }
};

NormIneq normalize(const LinIneq& q) {
    Int l = 1;
    for (const Rat& v : q.a) l = lcm(l, Int(denominator(v)));
    l = lcm(l, Int(denominator(q.c)));
    NormIneq r;
    r.a.reserve(q.a.size());
    Int g = 0;
    for (const Rat& v : q.a) {
        Int w = Int(numerator(v)) * (l / Int(denominator(v)));
        g = gcd(g, w);
        r.a.push_back(std::move(w));
    }
    r.c = Int(numerator(q.c)) * (l / Int(denominator(q.c)));
    g = gcd(g, r.c);
    if (g > 1) {
        for (Int& w : r.a) w /= g;
        r.c /= g;
    }
    r.strict = q.strict;
    return r;
}

// Returns nullopt if the row is 0 <= c / 0 < c: feasible rows are dropped,
// violated rows short-circuit via the bool.
enum class RowStatus { keep, drop, infeasible };

RowStatus classify_row(const NormIneq& q) {
    for (const Int& w : q.a)
        if (w != 0) return RowStatus::keep;
    if (q.c < 0 || (q.strict && q.c == 0)) return RowStatus::infeasible;
    return RowStatus::drop;
}

// One Fourier-Motzkin step is sound for strict inequalities as well: the
// combination is strict when either parent is.
std::optional<bool> fourier_motzkin(std::vector<LinIneq> sys, int dim, std::size_t row_cap) {
    std::vector<NormIneq> rows;
    auto insert_all = [&](const std::vector<NormIneq>& in) -> std::optional<bool> {
        std::map<std::vector<Int>, std::pair<Int, bool>> best;
        for (const NormIneq& q : in) {
            auto st = classify_row(q);
            if (st == RowStatus::infeasible) return false;
            if (st == RowStatus::drop) continue;
            auto it = best.find(q.a);
            if (it == best.end()) {
                best.emplace(q.a, std::make_pair(q.c, q.strict));
            } else {
                auto& [c, strict] = it->second;
                if (q.c < c || (q.c == c && q.strict && !strict)) {
                    c = q.c;
                    strict = q.strict;
                }
            }
        }
        rows.clear();
        for (auto& [a, cs] : best) rows.push_back({a, cs.first, cs.second});
        return std::nullopt;
    };

    {
        std::vector<NormIneq> init;
        init.reserve(sys.size());
        for (const LinIneq& q : sys) init.push_back(normalize(q));
        if (auto r = insert_all(init)) return r;
    }

    std::vector<bool> eliminated(dim, false);
    for (int step = 0; step < dim; ++step) {
        // Pick the variable with the fewest lower*upper combinations.
        int var = -1;
        std::size_t best_cost = 0;
        for (int k = 0; k < dim; ++k) {
            if (eliminated[k]) continue;
            std::size_t lo = 0, hi = 0;
            for (const NormIneq& q : rows) {
                if (q.a[k] < 0) ++lo;
                else if (q.a[k] > 0) ++hi;
            }
            std::size_t cost = lo * hi;
            if (var < 0 || cost < best_cost) {
                var = k;
                best_cost = cost;
            }
        }
        eliminated[var] = true;

        std::vector<NormIneq> next;
        std::vector<const NormIneq*> lower, upper;
        for (const NormIneq& q : rows) {
            if (q.a[var] < 0) lower.push_back(&q);
            else if (q.a[var] > 0) upper.push_back(&q);
            else next.push_back(q);
        }
        if (next.size() + lower.size() * upper.size() > row_cap) return std::nullopt;
        for (const NormIneq* l : lower) {
            for (const NormIneq* u : upper) {
                Int sl = u->a[var];
                Int su = -l->a[var];
                NormIneq q;
                q.a.resize(dim);
                for (int j = 0; j < dim; ++j) q.a[j] = sl * l->a[j] + su * u->a[j];
                q.c = sl * l->c + su * u->c;
                q.strict = l->strict || u->strict;
                Int g = 0;
                for (const Int& w : q.a) g = gcd(g, w);
                g = gcd(g, q.c);
                if (g > 1) {
                    for (Int& w : q.a) w /= g;
                    q.c /= g;
                }
                next.push_back(std::move(q));
            }
        }
        if (auto r = insert_all(next)) return r;
    }
    return true;
}

// Dense two-phase simplex on exact rationals, Bland's rule throughout.
// maximize cobj . x  s.t.  A x <= b,  x free (split into x+ - x-).
class Simplex {
public:
    Simplex(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
            const std::vector<Rat>& cobj)
        : m_(static_cast<int>(a.size())), dim_(static_cast<int>(cobj.size())) {
        // Columns: x+ (dim), x- (dim), slacks (m), artificials (m).
        ns_ = 2 * dim_ + m_;
        nc_ = ns_ + m_;
        tab_.assign(static_cast<std::size_t>(m_) * (nc_ + 1), Rat(0));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            Rat s = b[i] < 0 ? Rat(-1) : Rat(1);
            for (int j = 0; j < dim_; ++j) {
                at(i, j) = s * a[i][j];
                at(i, dim_ + j) = -s * a[i][j];
            }
            at(i, 2 * dim_ + i) = s;
            at(i, ns_ + i) = 1;
            at(i, nc_) = s * b[i];
            basis_[i] = ns_ + i;
        }
        obj_ = cobj;
    }

    LpResult run() {
        LpResult res;
        // Phase 1: maximize -sum(artificials). Row 0 holds the reduced costs
        // z_j = cB.B^-1.A_j - c_j with the objective value in the last slot;
        // optimal once every z_j >= 0.
        std::vector<Rat> z(nc_ + 1, Rat(0));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j <= nc_; ++j) z[j] -= at(i, j);
        for (int j = ns_; j < nc_; ++j) z[j] += 1;
        phase1_ = true;
        if (!iterate(z)) fail(errc::internal, "phase 1 of a feasibility problem is unbounded");
        if (z[nc_] != 0) return res;
        res.feasible = true;
        drive_out_artificials(z);

        // Phase 2: price out the original objective over the current basis.
        std::vector<Rat> w(nc_ + 1, Rat(0));
        for (int j = 0; j < dim_; ++j) {
            w[j] = -obj_[j];
            w[dim_ + j] = obj_[j];
        }
        for (int i = 0; i < m_; ++i) {
            Rat cb = basic_cost(basis_[i]);
            if (cb == 0) continue;
            for (int j = 0; j <= nc_; ++j) w[j] += cb * at(i, j);
        }
        phase1_ = false;
        if (!iterate(w)) {
            res.bounded = false;
            return res;
        }
        res.bounded = true;
        res.value = w[nc_];
        return res;
    }

private:
    Rat& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * (nc_ + 1) + c]; }

    Rat basic_cost(int col) const {
        if (col < dim_) return obj_[col];
        if (col < 2 * dim_) return -obj_[col - dim_];
        return Rat(0);
    }

    bool usable_col(int j) const { return phase1_ || j < ns_; }

    // Bland: entering = lowest-index column with negative reduced cost in the
    // minimization row z (we keep z = cB.B^-1.A - c, optimal when all >= 0...
    // here z is maintained so that a pivot on a column with z[j] < 0 improves).
    bool iterate(std::vector<Rat>& z) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < nc_; ++j) {
                if (!usable_col(j)) continue;
                if (z[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (at(i, enter) <= 0) continue;
                Rat ratio = at(i, nc_) / at(i, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter, z);
        }
    }

    void pivot(int r, int c, std::vector<Rat>& z) {
        Rat p = at(r, c);
        for (int j = 0; j <= nc_; ++j) at(r, j) /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            Rat f = at(i, c);
            if (f == 0) continue;
            for (int j = 0; j <= nc_; ++j) at(i, j) -= f * at(r, j);
        }
        Rat f = z[c];
        if (f != 0)
            for (int j = 0; j <= nc_; ++j) z[j] -= f * at(r, j);
        basis_[r] = c;
    }

    void drive_out_artificials(std::vector<Rat>& z) {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < ns_) continue;
            int c = -1;
            for (int j = 0; j < ns_; ++j) {
                if (at(i, j) != 0) {
                    c = j;
                    break;
                }
            }
            if (c >= 0) pivot(i, c, z);
            // Otherwise the row is redundant; the artificial stays basic at
            // zero and its column is excluded from phase 2 pivoting.
        }
    }

    int m_, dim_, ns_, nc_;
    bool phase1_ = true;
    std::vector<Rat> tab_;
    std::vector<int> basis_;
    std::vector<Rat> obj_;
};

} // namespace

LpResult lp_maximize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                     const std::vector<Rat>& cobj) {
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "lp row counts differ");
    for (const auto& row : a)
        if (row.size() != cobj.size())
            fail(errc::dimension_mismatch, "lp column counts differ");
    if (a.empty()) {
        LpResult res;
        res.feasible = true;
        res.bounded = std::all_of(cobj.begin(), cobj.end(), [](const Rat& v) { return v == 0; });
        res.value = 0;
        return res;
    }
    return Simplex(a, b, cobj).run();
}

bool ineq_feasible(const std::vector<LinIneq>& sys, int dim) {
    for (const LinIneq& q : sys)
        if (static_cast<int>(q.a.size()) != dim)
            fail(errc::dimension_mismatch, "inequality arity does not match dimension");
    if (sys.empty()) return true;

    if (dim <= fm_var_limit) {
        if (auto r = fourier_motzkin(sys, dim, 4096)) return *r;
    }

    bool any_strict = std::any_of(sys.begin(), sys.end(), [](const LinIneq& q) { return q.strict; });
    // Max-slack reformulation: maximize t with a.x + t <= c on strict rows;
    // the system is feasible iff the optimum is positive (capped at 1, so the
    // objective is always bounded).
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    a.reserve(sys.size() + 1);
    for (const LinIneq& q : sys) {
        std::vector<Rat> row = q.a;
        row.push_back(q.strict ? Rat(1) : Rat(0));
        a.push_back(std::move(row));
        b.push_back(q.c);
    }
    std::vector<Rat> cap(dim + 1, Rat(0));
    cap[dim] = 1;
    a.push_back(cap);
    b.push_back(Rat(1));
    std::vector<Rat> cobj(dim + 1, Rat(0));
    cobj[dim] = 1;
    LpResult res = lp_maximize(a, b, cobj);
    if (!res.feasible) return false;
    if (!any_strict) return true;
    if (!res.bounded) fail(errc::internal, "capped slack objective reported unbounded");
    return res.value > 0;
}

} // namespace tropgal
