#pragma once

#include <cstddef>
#include <functional>

namespace pqbasis::quad {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

inline constexpr double kDefaultTol = 1e-12;
inline constexpr std::size_t kDefaultBudget = 2'000'000;

/// Integrand that receives both x and its complement 1 - x, each carried at
/// full relative precision.
using SplitIntegrand = std::function<double(double x, double xc)>;

/// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
///
/// Panels are bisected in order of decreasing error estimate until the sum
/// of the estimates drops below the absolute tolerance `tol`. Integrable
/// endpoint singularities (log, algebraic) are resolved by the resulting
/// geometric refinement. Throws BudgetExceeded (carrying the best estimate)
/// when the evaluation budget runs out, NonFiniteIntegrand if f returns NaN
/// or infinity.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = kDefaultTol, std::size_t budget = kDefaultBudget);

/// integrate() over [0, 1].
QuadResult integrate(const std::function<double(double)>& f, double tol = kDefaultTol,
                     std::size_t budget = kDefaultBudget);

/// Integral over [0, 1] of an integrand that is singular (or nearly so) at
/// both endpoints. [0, 1/2] is integrated in x and [1/2, 1] in t = 1 - x, so
/// the geometric refinement toward either endpoint keeps full resolution.
QuadResult integrate_split(const SplitIntegrand& f, double tol = kDefaultTol,
                           std::size_t budget = kDefaultBudget);

}  // namespace pqbasis::quad
