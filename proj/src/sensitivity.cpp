#include "swingbf/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"
#include "swingbf/ci_intrinsic.hpp"
#include "swingbf/default_test.hpp"
#include "swingbf/full_intrinsic.hpp"

namespace swingbf {

std::int64_t round_half_away(double v) {
  return static_cast<std::int64_t>(v >= 0.0 ? std::floor(v + 0.5)
                                            : std::ceil(v - 0.5));
}

std::vector<double> default_q_grid() {
  std::vector<double> q(21);
  for (int i = 0; i <= 20; ++i) q[static_cast<std::size_t>(i)] = i / 20.0;
  return q;
}

SensitivityCurve sensitivity_curve(const ContingencyTable& n,
                                   const DirichletHyper& a,
                                   SensitivityMethod method,
                                   std::span<const double> q_grid) {
  n.validate();
  a.validate();
  if (q_grid.empty()) {
    throw std::invalid_argument("sensitivity_curve: empty q grid");
  }
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    if (!(q_grid[i] >= 0.0 && q_grid[i] <= 1.0)) {
      throw std::invalid_argument("sensitivity_curve: q must lie in [0,1]");
    }
    if (i > 0 && !(q_grid[i] > q_grid[i - 1])) {
      throw std::invalid_argument(
          "sensitivity_curve: q grid must be strictly increasing");
    }
  }
  const bool ci = (method == SensitivityMethod::ci_intrinsic);
  if (ci && n.n_triangle() == 0) {
    throw std::domain_error(
        "sensitivity_curve: q is undefined for the CI method when "
        "n_triangle = 0");
  }
  const double denom = static_cast<double>(ci ? n.n_triangle()
                                              : n.n_plus_plus());

  std::vector<std::int64_t> xs(q_grid.size());
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    xs[i] = round_half_away(q_grid[i] * denom);
  }
  // A fine q grid maps several q to the same integer size; evaluate each
  // size once.
  std::vector<std::int64_t> unique_xs = xs;
  std::sort(unique_xs.begin(), unique_xs.end());
  unique_xs.erase(std::unique(unique_xs.begin(), unique_xs.end()),
                  unique_xs.end());
  std::vector<double> log_bfs(unique_xs.size());
  detail::parallel_for(unique_xs.size(), [&](std::size_t i) {
    log_bfs[i] = ci ? ci_log_bf(n, a, unique_xs[i])
                    : i_log_bf(n, a, unique_xs[i]);
  });

  SensitivityCurve curve;
  curve.method = method;
  curve.points.resize(q_grid.size());
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    const auto it =
        std::lower_bound(unique_xs.begin(), unique_xs.end(), xs[i]);
    const double lbf =
        log_bfs[static_cast<std::size_t>(it - unique_xs.begin())];
    const Method tag = ci ? Method::ci_intrinsic : Method::i_intrinsic;
    curve.points[i] = {q_grid[i], xs[i],
                       to_summary(lbf, tag).posterior_prob_h0};
  }
  return curve;
}

NppCurves npp_dependence_curve(std::int64_t n01, std::int64_t n10,
                               std::int64_t x_plus_plus,
                               std::int64_t x_triangle,
                               const DirichletHyper& a,
                               std::span<const std::int64_t> npp_grid,
                               DiagonalSplit split) {
  a.validate();
  if (n01 < 0 || n10 < 0) {
    throw std::domain_error("npp_dependence_curve: counts must be >= 0");
  }
  if (x_plus_plus < 0 || x_triangle < 0) {
    throw std::domain_error(
        "npp_dependence_curve: imaginary sizes must be >= 0");
  }
  const std::int64_t ntri = n01 + n10;
  for (std::int64_t npp : npp_grid) {
    if (npp < ntri || npp < 1) {
      throw std::domain_error(
          "npp_dependence_curve: every n_plus_plus must be >= n01 + n10 "
          "(and >= 1)");
    }
  }

  NppCurves out;
  out.n_plus_plus.assign(npp_grid.begin(), npp_grid.end());
  out.ci_prob.resize(npp_grid.size());
  out.i_prob.resize(npp_grid.size());
  detail::parallel_for(npp_grid.size(), [&](std::size_t i) {
    const std::int64_t diag = npp_grid[i] - ntri;
    const std::int64_t n00 =
        (split == DiagonalSplit::all_n00) ? diag : (diag + 1) / 2;
    const ContingencyTable t{n00, n01, n10, diag - n00};
    out.ci_prob[i] = to_summary(ci_log_bf(t, a, x_triangle),
                                Method::ci_intrinsic).posterior_prob_h0;
    out.i_prob[i] = to_summary(i_log_bf(t, a, x_plus_plus),
                               Method::i_intrinsic).posterior_prob_h0;
  });
  return out;
}

}  // namespace swingbf
