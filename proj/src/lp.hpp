#pragma once

#include <cstddef>
#include <vector>

namespace palgeo::detail {

struct LpSolution {
    std::vector<double> x;
    double objective = 0.0;
};

/// maximize c.x subject to A x <= b, x >= 0, where b >= 0 so the origin is
/// feasible. `a` is row-major with c.size() columns. Condensed-tableau primal
/// simplex with Bland's rule; throws std::runtime_error when unbounded.
LpSolution simplex_maximize(const std::vector<double>& a, const std::vector<double>& b,
                            const std::vector<double>& c);

}  // namespace palgeo::detail
