#include "swingbf/ci_intrinsic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "swingbf/special_math.hpp"

namespace swingbf {

BetaMixture ci_prior(const DirichletHyper& a, std::int64_t x_triangle) {
  a.validate();
  if (x_triangle < 0) {
    throw std::domain_error("ci_prior: x_triangle must be >= 0");
  }
  BetaMixture m;
  m.components.reserve(static_cast<std::size_t>(x_triangle) + 1);
  const double xt = static_cast<double>(x_triangle);
  for (std::int64_t x01 = 0; x01 <= x_triangle; ++x01) {
    const double lw = log_binomial(x_triangle, x01) - xt * std::numbers::ln2;
    m.components.push_back({lw, a.a01 + static_cast<double>(x01),
                            a.a10 + static_cast<double>(x_triangle - x01)});
  }
  return m;
}

double mixture_density(const BetaMixture& m, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::domain_error("mixture_density: theta must lie in [0,1]");
  }
  if (theta == 0.0 || theta == 1.0) {
    for (const auto& c : m.components) {
      const double shape = (theta == 0.0) ? c.alpha : c.beta;
      if (shape < 1.0) {
        throw std::domain_error(
            "mixture_density: a component diverges at this endpoint");
      }
    }
  }
  // With divergent components ruled out, the 0 * log(0) == 0 convention keeps
  // endpoint evaluations finite (a unit shape contributes no log term).
  const double lt = std::log(theta);
  const double lq = std::log1p(-theta);
  std::vector<double> terms;
  terms.reserve(m.components.size());
  for (const auto& c : m.components) {
    const double lp = (c.alpha == 1.0) ? 0.0 : (c.alpha - 1.0) * lt;
    const double lr = (c.beta == 1.0) ? 0.0 : (c.beta - 1.0) * lq;
    terms.push_back(c.log_weight - log_beta(c.alpha, c.beta) + lp + lr);
  }
  return std::exp(log_sum_exp(terms));
}

double ci_log_bf(const ContingencyTable& n, const DirichletHyper& a,
                 std::int64_t x_triangle) {
  n.validate();
  a.validate();
  if (x_triangle < 0) {
    throw std::domain_error("ci_log_bf: x_triangle must be >= 0");
  }
  const double ntri = static_cast<double>(n.n_triangle());
  const double n01 = static_cast<double>(n.n01);
  const double n10 = static_cast<double>(n.n10);
  const double xt = static_cast<double>(x_triangle);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(x_triangle) + 1);
  for (std::int64_t x01 = 0; x01 <= x_triangle; ++x01) {
    const double a01x = a.a01 + static_cast<double>(x01);
    const double a10x = a.a10 + static_cast<double>(x_triangle - x01);
    const double lw = log_binomial(x_triangle, x01) - xt * std::numbers::ln2;
    terms.push_back(lw + ntri * std::numbers::ln2 +
                    log_beta(a01x + n01, a10x + n10) - log_beta(a01x, a10x));
  }
  return log_sum_exp(terms);
}

}  // namespace swingbf
