#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swingbf/model_core.hpp"

// Sensitivity of the posterior probability of H0 to the imaginary sample
// size, reported against the prior-to-actual size ratio q: x_tri / n_tri for
// the CI method, x_pp / n_pp for the I method. Fractional q maps to the
// nearest integer size (half away from zero); duplicate sizes on a fine grid
// are computed once.

namespace swingbf {

enum class SensitivityMethod { ci_intrinsic, i_intrinsic };

struct SensitivityPoint {
  double q = 0.0;
  std::int64_t x = 0;  // round(q * denominator)
  double posterior_prob_h0 = 0.0;
};

struct SensitivityCurve {
  SensitivityMethod method = SensitivityMethod::ci_intrinsic;
  std::vector<SensitivityPoint> points;
};

// Nearest integer, ties away from zero.
std::int64_t round_half_away(double v);

// 21 points 0, 0.05, ..., 1.
std::vector<double> default_q_grid();

// q_grid must be strictly increasing within [0, 1]. The CI method requires
// n_triangle >= 1 (q is undefined otherwise; std::domain_error).
SensitivityCurve sensitivity_curve(const ContingencyTable& n,
                                   const DirichletHyper& a,
                                   SensitivityMethod method,
                                   std::span<const double> q_grid);

// How the two posterior probabilities react to the total sample size n_pp at
// fixed off-diagonals and fixed imaginary sizes. The diagonal is completed
// as n00 = n_pp - n_tri, n11 = 0 (all_n00) or split as evenly as possible
// (even); both results are invariant to the split, which the tests assert.
enum class DiagonalSplit { all_n00, even };

struct NppCurves {
  std::vector<std::int64_t> n_plus_plus;
  std::vector<double> ci_prob;
  std::vector<double> i_prob;
};

NppCurves npp_dependence_curve(std::int64_t n01, std::int64_t n10,
                               std::int64_t x_plus_plus,
                               std::int64_t x_triangle,
                               const DirichletHyper& a,
                               std::span<const std::int64_t> npp_grid,
                               DiagonalSplit split = DiagonalSplit::all_n00);

}  // namespace swingbf
