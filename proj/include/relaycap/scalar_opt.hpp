// Deterministic one-dimensional search primitives used by the bound
// evaluators: golden-section maximization, bisection for the balance point
// of two curves, and a coarse-grid scan with local refinement for
// objectives that are only piecewise smooth.
#pragma once

#include <functional>

namespace relaycap {

struct OptResult {
  double argmax = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Golden-section search for the maximum of a unimodal f on [lo, hi].
// tol is on the argument. A non-finite objective value aborts with
// std::domain_error naming the offending abscissa.
OptResult maximize_unimodal(const std::function<double(double)>& f,
                            double lo, double hi, double tol = 1e-10);

// Root of f - g on [lo, hi] by bisection, tol on the argument; the returned
// value is min{f, g} at the root. If f - g does not change sign across the
// bracket, the endpoint maximizing min{f, g} is returned instead (lo on a
// tie) with zero iterations.
OptResult solve_balance(const std::function<double(double)>& f,
                        const std::function<double(double)>& g,
                        double lo, double hi, double tol = 1e-10);

// Maximum of f over [lo, hi]: evaluate grid_points equally spaced abscissae,
// then refine with golden-section search inside the two cells bracketing the
// best grid point. Grid ties keep the smallest abscissa.
OptResult maximize_grid_refine(const std::function<double(double)>& f,
                               double lo, double hi, int grid_points = 1001,
                               double tol = 1e-10);

}  // namespace relaycap
