#include "swingbf/model_core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "swingbf/special_math.hpp"

namespace swingbf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

void ContingencyTable::validate() const {
  if (n00 < 0 || n01 < 0 || n10 < 0 || n11 < 0) {
    throw std::domain_error("ContingencyTable: counts must be nonnegative");
  }
  if (n_plus_plus() < 1) {
    throw std::domain_error("ContingencyTable: total count must be >= 1");
  }
}

void DirichletHyper::validate() const {
  if (!(a00 > 0.0) || !(a01 > 0.0) || !(a10 > 0.0) || !(a11 > 0.0)) {
    throw std::domain_error(
        "DirichletHyper: entries must be strictly positive");
  }
}

ReparamPrior reparametrize(const DirichletHyper& a) {
  a.validate();
  return ReparamPrior{
      /*eta_law=*/{a.a_triangle(), a.a00 + a.a11},
      /*theta_law=*/{a.a01, a.a10},
      /*gamma_law=*/{a.a00, a.a11},
  };
}

double log_likelihood_full(const ContingencyTable& n, double eta, double theta,
                           double gamma) {
  n.validate();
  if (!(eta >= 0.0 && eta <= 1.0) || !(theta >= 0.0 && theta <= 1.0) ||
      !(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::domain_error(
        "log_likelihood_full: parameters must lie in [0,1]");
  }
  const std::int64_t ntri = n.n_triangle();
  const std::int64_t npp = n.n_plus_plus();
  const double g = log_binomial_pmf(ntri, npp, eta);
  const double h = log_binomial_pmf(n.n01, ntri, theta);
  const double k = log_binomial_pmf(n.n00, npp - ntri, gamma);
  if (g == kNegInf || h == kNegInf || k == kNegInf) {
    throw std::domain_error(
        "log_likelihood_full: boundary parameter with a positive matching "
        "count has probability zero");
  }
  return g + h + k;
}

double log_conditional_likelihood(std::int64_t n01, std::int64_t n_triangle,
                                  double theta) {
  if (n01 < 0 || n_triangle < 0 || n01 > n_triangle) {
    throw std::domain_error(
        "log_conditional_likelihood: need 0 <= n01 <= n_triangle");
  }
  return log_binomial_pmf(n01, n_triangle, theta);
}

std::vector<double> grid_midpoints(int points) {
  if (points < 1) {
    throw std::domain_error("grid_midpoints: need at least one point");
  }
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    g[static_cast<std::size_t>(i)] = (i + 0.5) / points;
  }
  return g;
}

std::vector<double> theta_grid_default() { return grid_midpoints(513); }

std::vector<CurvePoint> normalized_likelihood_curve(
    const ContingencyTable& n, std::span<const double> grid) {
  n.validate();
  if (grid.size() < 2) {
    throw std::invalid_argument(
        "normalized_likelihood_curve: need at least two grid points");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0 && grid[i] < 1.0)) {
      throw std::invalid_argument(
          "normalized_likelihood_curve: grid must lie strictly inside (0,1)");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(
          "normalized_likelihood_curve: grid must be strictly increasing");
    }
  }

  std::vector<CurvePoint> curve(grid.size());
  const std::int64_t ntri = n.n_triangle();
  if (ntri == 0) {
    // theta is unidentified: the conditional likelihood is constant, so the
    // curve is defined as the uniform density on (0,1).
    for (std::size_t i = 0; i < grid.size(); ++i) {
      curve[i] = {grid[i], 1.0};
    }
    return curve;
  }

  std::vector<double> logs(grid.size());
  double lmax = kNegInf;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    logs[i] = log_conditional_likelihood(n.n01, ntri, grid[i]);
    lmax = std::max(lmax, logs[i]);
  }
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = std::exp(logs[i] - lmax);
  }
  // Normalize by the trapezoid rule over the supplied grid, so re-integrating
  // the emitted points with the same rule returns exactly 1.
  double z = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    z += 0.5 * (vals[i] + vals[i + 1]) * (grid[i + 1] - grid[i]);
  }
  if (!(z > 0.0)) {
    throw std::domain_error(
        "normalized_likelihood_curve: degenerate normalization");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    curve[i] = {grid[i], vals[i] / z};
  }
  return curve;
}

}  // namespace swingbf
