#pragma once

#include <cstdint>
#include <vector>

#include "swingbf/model_core.hpp"

// Conditionally-intrinsic (CI) prior on theta and its Bayes factor. The CI
// prior built from an imaginary swing total x_tri is a finite Beta mixture
// with x_tri + 1 components,
//   p(theta) = sum_{x01} C(x_tri, x01) (1/2)^{x_tri}
//                Beta(theta | a01 + x01, a10 + x_tri - x01),
// which concentrates around theta = 1/2 as x_tri grows. The matching Bayes
// factor is the same binomial-weighted average of conditional Bayes factors.

namespace swingbf {

struct BetaComponent {
  double log_weight = 0.0;
  double alpha = 1.0;
  double beta = 1.0;
};

struct BetaMixture {
  std::vector<BetaComponent> components;
};

BetaMixture ci_prior(const DirichletHyper& a, std::int64_t x_triangle);

// Mixture density at theta. Interior theta always works; an endpoint is
// accepted only when no component diverges there (otherwise
// std::domain_error).
double mixture_density(const BetaMixture& m, double theta);

double ci_log_bf(const ContingencyTable& n, const DirichletHyper& a,
                 std::int64_t x_triangle);

}  // namespace swingbf
