#pragma once

#include <functional>

// Small adaptive integrator used internally (eta-marginalization of the
// I-prior). Test oracles deliberately use a separate implementation.

namespace swingbf {

// Recursive adaptive Simpson with Richardson extrapolation; abs_tol is an
// absolute tolerance on the whole interval.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth = 32);

// Integral of f over (0,1) via the t = sin^2(u) substitution, which never
// evaluates f at the endpoints and tames integrable Beta-type endpoint
// behavior.
double integrate_unit_interval(const std::function<double(double)>& f,
                               double abs_tol);

}  // namespace swingbf
