#pragma once

#include <vector>

#include "tropgal/exact.hpp"

namespace tropgal {

// One linear inequality a . x <= c, or a . x < c when strict.
struct LinIneq {
    std::vector<Rat> a;
    Rat c;
    bool strict = false;
};

// Exact feasibility of a finite inequality system in `dim` variables.
// Fourier-Motzkin up to fm_var_limit variables, exact rational simplex
// (Bland's rule, guaranteed termination) above.
bool ineq_feasible(const std::vector<LinIneq>& sys, int dim);

inline constexpr int fm_var_limit = 12;

// Maximize cobj . x subject to a[i] . x <= b[i]. Returns false when
// infeasible; when feasible, `bounded` reports whether the optimum is
// finite and `value` holds it (only meaningful when bounded).
struct LpResult {
    bool feasible = false;
    bool bounded = false;
    Rat value;
};

LpResult lp_maximize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                     const std::vector<Rat>& cobj);

} // namespace tropgal
