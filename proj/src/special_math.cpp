#include "swingbf/special_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace swingbf {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

namespace detail {

double xlogy(double c, double v) {
  if (c == 0.0) return 0.0;
  return c * std::log(v);
}

}  // namespace detail

double log_gamma(double z) {
  if (!(z > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive, got " +
                            std::to_string(z));
  }
#if defined(__GLIBC__) || defined(__APPLE__)
  // lgamma_r avoids the signgam global, keeping the function re-entrant.
  int sign = 0;
  return ::lgamma_r(z, &sign);
#else
  return std::lgamma(z);
#endif
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("log_beta: arguments must be positive");
  }
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("log_binomial: need 0 <= k <= n");
  }
  // Canonical half keeps C(n,k) and C(n,n-k) bit-identical.
  if (2 * k > n) k = n - k;
  return log_gamma(static_cast<double>(n) + 1.0) -
         log_gamma(static_cast<double>(k) + 1.0) -
         log_gamma(static_cast<double>(n - k) + 1.0);
}

double log_sum_exp(std::span<const double> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  const double m = *std::max_element(terms.begin(), terms.end());
  if (m == kNegInf) return kNegInf;  // every term represents zero
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - m);
  return m + std::log(sum);
}

double log_binomial_pmf(std::int64_t k, std::int64_t n, double p) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("log_binomial_pmf: need 0 <= k <= n");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("log_binomial_pmf: p must lie in [0,1]");
  }
  // Reduce to the canonical half so (k,n,p) and (n-k,n,1-p) share one code
  // path and therefore one result, bit for bit.
  if (2 * k > n || (2 * k == n && p > 0.5)) {
    k = n - k;
    p = 1.0 - p;
  }
  const double lp = (k == 0) ? 0.0 : static_cast<double>(k) * std::log(p);
  const double lq =
      (n - k == 0) ? 0.0 : static_cast<double>(n - k) * std::log1p(-p);
  return log_binomial(n, k) + lp + lq;
}

double chi_square_sf_1df(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("chi_square_sf_1df: argument must be >= 0");
  }
  return std::erfc(std::sqrt(x / 2.0));
}

double binomial_tail(std::int64_t n, std::int64_t k, double p, TailSide side) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("binomial_tail: need 0 <= k <= n");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binomial_tail: p must lie in [0,1]");
  }
  const std::int64_t lo = (side == TailSide::lower) ? 0 : k;
  const std::int64_t hi = (side == TailSide::lower) ? k : n;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) {
    terms.push_back(log_binomial_pmf(j, n, p));
  }
  const double v = std::exp(log_sum_exp(terms));
  return std::min(v, 1.0);
}

}  // namespace swingbf
