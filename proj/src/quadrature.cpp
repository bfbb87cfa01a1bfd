#include "swingbf/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swingbf {

namespace {

double simpson_recurse(const std::function<double(double)>& f, double a,
                       double b, double fa, double fm, double fb, double whole,
                       double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;  // Richardson extrapolation
  }
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("adaptive_simpson: tolerance must be > 0");
  }
  if (!(b >= a)) {
    throw std::invalid_argument("adaptive_simpson: need a <= b");
  }
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

double integrate_unit_interval(const std::function<double(double)>& f,
                               double abs_tol) {
  // t = sin^2(u) maps (0, pi/2) onto (0, 1) with weight sin(2u), which
  // vanishes at both ends, so f itself is never evaluated at 0 or 1.
  auto g = [&f](double u) {
    const double w = std::sin(2.0 * u);
    if (w == 0.0) return 0.0;
    const double s = std::sin(u);
    return f(s * s) * w;
  };
  return adaptive_simpson(g, 0.0, std::numbers::pi / 2.0, abs_tol);
}

}  // namespace swingbf
