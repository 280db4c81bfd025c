#pragma once

#include <hyperform/linear.hpp>
#include <hyperform/matrix.hpp>

#include <optional>
#include <vector>

namespace hyperform {

/// Exact linear programming (two-phase simplex with Bland's rule).

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    Point x;
};

/// maximize c.x subject to A x <= b, x free.
LpResult lp_maximize(const Vector& c, const ExactMatrix& a, const Vector& b);

/// A point where every functional is strictly positive, or nullopt.
/// With no constraints the origin is returned.
std::optional<Point> strict_interior_point(const std::vector<LinearFunctional>& positive, int dim);

/// Whether {x : f(x) >= 0 for all f} is bounded (assumed nonempty).
bool is_bounded(const std::vector<LinearFunctional>& nonneg, int dim);

/// Extreme values of an objective over {x : f(x) >= 0 for all f}; nullopt
/// when unbounded in that direction or infeasible.
std::optional<Rational> lp_max_over(const LinearFunctional& objective,
                                    const std::vector<LinearFunctional>& nonneg, int dim);
std::optional<Rational> lp_min_over(const LinearFunctional& objective,
                                    const std::vector<LinearFunctional>& nonneg, int dim);

}  // namespace hyperform
