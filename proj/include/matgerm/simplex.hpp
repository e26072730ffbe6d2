#pragma once

#include "matgerm/rational.hpp"

#include <vector>

namespace mg {

// Exact rational simplex for max c^T x subject to A x = b, x >= 0, with
// b >= 0 expected. Two-phase tableau method with Bland's rule.
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rat objective;
    std::vector<Rat> x;
};

LpResult solve_lp_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                      const std::vector<Rat>& c);

} // namespace mg
