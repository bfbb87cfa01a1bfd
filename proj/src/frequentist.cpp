#include "swingbf/frequentist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swingbf/special_math.hpp"

namespace swingbf {

FrequentistResult mcnemar_test(const ContingencyTable& n,
                               McnemarVariant variant) {
  n.validate();
  const std::int64_t ntri = n.n_triangle();
  switch (variant) {
    case McnemarVariant::chi_square_cc: {
      if (ntri < 1) {
        throw std::domain_error(
            "mcnemar_test: chi-square variants need n_triangle >= 1");
      }
      const double d = std::abs(static_cast<double>(n.n01 - n.n10));
      const double stat = (d - 1.0) * (d - 1.0) / static_cast<double>(ntri);
      return {stat, chi_square_sf_1df(stat), variant};
    }
    case McnemarVariant::chi_square_plain: {
      if (ntri < 1) {
        throw std::domain_error(
            "mcnemar_test: chi-square variants need n_triangle >= 1");
      }
      const double d = static_cast<double>(n.n01 - n.n10);
      const double stat = d * d / static_cast<double>(ntri);
      return {stat, chi_square_sf_1df(stat), variant};
    }
    case McnemarVariant::exact_binomial: {
      const std::int64_t k = std::max(n.n01, n.n10);
      if (ntri == 0) return {0.0, 1.0, variant};
      const double tail = binomial_tail(ntri, k, 0.5, TailSide::upper);
      return {static_cast<double>(k), std::min(1.0, 2.0 * tail), variant};
    }
  }
  throw std::logic_error("mcnemar_test: unknown variant");
}

}  // namespace swingbf
