#pragma once

#include "swingbf/model_core.hpp"

// McNemar-style frequentist tests of marginal homogeneity. All variants use
// only the off-diagonal swing counts (n01, n10).

namespace swingbf {

enum class McnemarVariant { chi_square_cc, chi_square_plain, exact_binomial };

struct FrequentistResult {
  double statistic = 0.0;
  double p_value = 1.0;
  McnemarVariant variant = McnemarVariant::chi_square_cc;
};

// chi_square_cc:    (|n01 - n10| - 1)^2 / n_tri, p from chi^2_1 (default; the
//                   classical continuity-corrected statistic)
// chi_square_plain: (n01 - n10)^2 / n_tri, p from chi^2_1
// exact_binomial:   statistic = max(n01, n10); p doubles the exact
//                   Bin(n_tri, 1/2) tail at the larger count, capped at 1
// The chi-square variants require n_tri >= 1 (std::domain_error otherwise);
// the exact variant returns p = 1 for an empty swing sample.
FrequentistResult mcnemar_test(const ContingencyTable& n,
                               McnemarVariant variant =
                                   McnemarVariant::chi_square_cc);

}  // namespace swingbf
