#include "swingbf/full_intrinsic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "swingbf/quadrature.hpp"
#include "swingbf/special_math.hpp"

namespace swingbf {

namespace {

constexpr double kLn2 = std::numbers::ln2;

std::size_t tri_index(std::int64_t x01, std::int64_t x_triangle) {
  return static_cast<std::size_t>(x_triangle * (x_triangle + 1) / 2 + x01);
}

// One bivariate mixture term with all normalization folded into log_coeff:
//   exp(log_coeff) * eta^(a_eta-1) (1-eta)^(b_eta-1)
//               * theta^(a_theta-1) (1-theta)^(b_theta-1).
struct JointComponent {
  double log_coeff;
  double a_eta, b_eta;
  double a_theta, b_theta;
};

struct JointEvaluator {
  std::vector<JointComponent> comps;

  static JointEvaluator build(const DirichletHyper& a, std::int64_t xpp) {
    const ImaginaryWeightTable w = h0_weights(a, xpp);
    JointEvaluator ev;
    ev.comps.reserve(w.size());
    for (std::int64_t xtri = 0; xtri <= xpp; ++xtri) {
      const double ae = a.a_triangle() + static_cast<double>(xtri);
      const double be = (a.a_plus_plus() - a.a_triangle()) +
                        static_cast<double>(xpp - xtri);
      const double lb_eta = log_beta(ae, be);
      for (std::int64_t x01 = 0; x01 <= xtri; ++x01) {
        const double at = a.a01 + static_cast<double>(x01);
        const double bt = a.a10 + static_cast<double>(xtri - x01);
        ev.comps.push_back({w.log_weight(x01, xtri) - lb_eta - log_beta(at, bt),
                            ae, be, at, bt});
      }
    }
    return ev;
  }

  // Endpoint arguments are legal only when no component diverges there.
  void check_boundaries(double eta, double theta) const {
    for (const auto& c : comps) {
      if ((eta == 0.0 && c.a_eta < 1.0) || (eta == 1.0 && c.b_eta < 1.0) ||
          (theta == 0.0 && c.a_theta < 1.0) ||
          (theta == 1.0 && c.b_theta < 1.0)) {
        throw std::domain_error(
            "i_prior_density: a component diverges at this boundary point");
      }
    }
  }

  // All terms are nonnegative, so a plain linear-space sum is stable; terms
  // too small to matter simply underflow to zero. Unit shapes skip their log
  // factor so endpoint evaluations stay finite.
  double density(double eta, double theta) const {
    const double le = std::log(eta);
    const double lce = std::log1p(-eta);
    const double lt = std::log(theta);
    const double lct = std::log1p(-theta);
    double sum = 0.0;
    for (const auto& c : comps) {
      double l = c.log_coeff;
      if (c.a_eta != 1.0) l += (c.a_eta - 1.0) * le;
      if (c.b_eta != 1.0) l += (c.b_eta - 1.0) * lce;
      if (c.a_theta != 1.0) l += (c.a_theta - 1.0) * lt;
      if (c.b_theta != 1.0) l += (c.b_theta - 1.0) * lct;
      sum += std::exp(l);
    }
    return sum;
  }
};

void validate_prior_size(std::int64_t x_plus_plus, const char* where) {
  if (x_plus_plus < 0) {
    throw std::domain_error(std::string(where) + ": x_plus_plus must be >= 0");
  }
}

double beta_log_pdf(double x, double alpha, double beta) {
  double l = -log_beta(alpha, beta);
  if (alpha != 1.0) l += (alpha - 1.0) * std::log(x);
  if (beta != 1.0) l += (beta - 1.0) * std::log1p(-x);
  return l;
}

}  // namespace

double ImaginaryWeightTable::log_weight(std::int64_t x01,
                                        std::int64_t x_triangle) const {
  if (x01 < 0 || x_triangle < x01 || x_triangle > x_plus_plus) {
    throw std::domain_error(
        "ImaginaryWeightTable: need 0 <= x01 <= x_triangle <= x_plus_plus");
  }
  return log_weights[tri_index(x01, x_triangle)];
}

ImaginaryWeightTable h0_weights(const DirichletHyper& a,
                                std::int64_t x_plus_plus) {
  a.validate();
  validate_prior_size(x_plus_plus, "h0_weights");
  const double atri = a.a_triangle();
  const double arest = a.a_plus_plus() - atri;
  const double lb0 = log_beta(atri, arest);
  ImaginaryWeightTable t;
  t.x_plus_plus = x_plus_plus;
  t.log_weights.resize(tri_index(0, x_plus_plus + 1));
  for (std::int64_t xtri = 0; xtri <= x_plus_plus; ++xtri) {
    const double swing = log_binomial(x_plus_plus, xtri) +
                         log_beta(atri + static_cast<double>(xtri),
                                  arest + static_cast<double>(x_plus_plus - xtri)) -
                         lb0;
    for (std::int64_t x01 = 0; x01 <= xtri; ++x01) {
      t.log_weights[tri_index(x01, xtri)] =
          log_binomial(xtri, x01) - static_cast<double>(xtri) * kLn2 + swing;
    }
  }
  return t;
}

double i_prior_density(const DirichletHyper& a, std::int64_t x_plus_plus,
                       double eta, double theta) {
  a.validate();
  validate_prior_size(x_plus_plus, "i_prior_density");
  if (!(eta >= 0.0 && eta <= 1.0) || !(theta >= 0.0 && theta <= 1.0)) {
    throw std::domain_error("i_prior_density: arguments must lie in [0,1]");
  }
  const JointEvaluator ev = JointEvaluator::build(a, x_plus_plus);
  ev.check_boundaries(eta, theta);
  return ev.density(eta, theta);
}

IntrinsicPriorGrid i_prior_grid(const DirichletHyper& a,
                                std::int64_t x_plus_plus,
                                int points_per_axis) {
  a.validate();
  validate_prior_size(x_plus_plus, "i_prior_grid");
  if (points_per_axis < 2) {
    throw std::domain_error("i_prior_grid: need at least two points per axis");
  }
  IntrinsicPriorGrid grid;
  grid.x_plus_plus = x_plus_plus;
  grid.hyper = a;
  grid.eta_grid = grid_midpoints(points_per_axis);
  grid.theta_grid = grid_midpoints(points_per_axis);
  const std::size_t ge = grid.eta_grid.size();
  const std::size_t gt = grid.theta_grid.size();
  grid.density.assign(ge, std::vector<double>(gt, 0.0));

  // Group by x_tri: every component in a group shares its eta factor, so the
  // fill is a sum of rank-one products instead of a full mixture evaluation
  // at each grid node.
  const ImaginaryWeightTable w = h0_weights(a, x_plus_plus);
  const double atri = a.a_triangle();
  const double arest = a.a_plus_plus() - atri;
  std::vector<double> eta_factor(ge);
  std::vector<double> theta_factor(gt);
  for (std::int64_t xtri = 0; xtri <= x_plus_plus; ++xtri) {
    const double ae = atri + static_cast<double>(xtri);
    const double be = arest + static_cast<double>(x_plus_plus - xtri);
    for (std::size_t i = 0; i < ge; ++i) {
      eta_factor[i] = std::exp(beta_log_pdf(grid.eta_grid[i], ae, be));
    }
    for (std::size_t j = 0; j < gt; ++j) {
      double sum = 0.0;
      for (std::int64_t x01 = 0; x01 <= xtri; ++x01) {
        const double at = a.a01 + static_cast<double>(x01);
        const double bt = a.a10 + static_cast<double>(xtri - x01);
        sum += std::exp(w.log_weight(x01, xtri) +
                        beta_log_pdf(grid.theta_grid[j], at, bt));
      }
      theta_factor[j] = sum;
    }
    for (std::size_t i = 0; i < ge; ++i) {
      const double e = eta_factor[i];
      auto& row = grid.density[i];
      for (std::size_t j = 0; j < gt; ++j) {
        row[j] += e * theta_factor[j];
      }
    }
  }
  return grid;
}

std::vector<double> i_prior_eta_marginal(const DirichletHyper& a,
                                         std::int64_t x_plus_plus,
                                         std::span<const double> eta_grid) {
  a.validate();
  validate_prior_size(x_plus_plus, "i_prior_eta_marginal");
  for (double e : eta_grid) {
    if (!(e > 0.0 && e < 1.0)) {
      throw std::domain_error(
          "i_prior_eta_marginal: grid must lie strictly inside (0,1)");
    }
  }
  std::vector<double> out(eta_grid.size());
  const double atri = a.a_triangle();
  const double arest = a.a_plus_plus() - atri;
  if (x_plus_plus == 0) {
    // The joint is a single Beta x Beta product; its theta-integral is the
    // eta factor itself, so return it without quadrature error.
    for (std::size_t i = 0; i < eta_grid.size(); ++i) {
      out[i] = std::exp(beta_log_pdf(eta_grid[i], atri, arest));
    }
    return out;
  }
  const JointEvaluator ev = JointEvaluator::build(a, x_plus_plus);
  detail::parallel_for(eta_grid.size(), [&](std::size_t i) {
    const double eta = eta_grid[i];
    out[i] = integrate_unit_interval(
        [&ev, eta](double theta) { return ev.density(eta, theta); }, 1e-8);
  });
  return out;
}

BetaMixture i_prior_theta_marginal(const DirichletHyper& a,
                                   std::int64_t x_plus_plus) {
  a.validate();
  validate_prior_size(x_plus_plus, "i_prior_theta_marginal");
  const ImaginaryWeightTable w = h0_weights(a, x_plus_plus);
  BetaMixture m;
  m.components.reserve(w.size());
  for (std::int64_t xtri = 0; xtri <= x_plus_plus; ++xtri) {
    for (std::int64_t x01 = 0; x01 <= xtri; ++x01) {
      m.components.push_back({w.log_weight(x01, xtri),
                              a.a01 + static_cast<double>(x01),
                              a.a10 + static_cast<double>(xtri - x01)});
    }
  }
  return m;
}

double i_log_bf(const ContingencyTable& n, const DirichletHyper& a,
                std::int64_t x_plus_plus) {
  n.validate();
  a.validate();
  validate_prior_size(x_plus_plus, "i_log_bf");
  const double atri = a.a_triangle();
  const double arest = a.a_plus_plus() - atri;
  const double ntri = static_cast<double>(n.n_triangle());
  const double nrest = static_cast<double>(n.n_plus_plus() - n.n_triangle());
  const double n01 = static_cast<double>(n.n01);
  const double n10 = static_cast<double>(n.n10);
  const double xpp = static_cast<double>(x_plus_plus);

  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>((x_plus_plus + 1) *
                                         (x_plus_plus + 2) / 2));
  for (std::int64_t x01 = 0; x01 <= x_plus_plus; ++x01) {
    for (std::int64_t x10 = 0; x10 <= x_plus_plus - x01; ++x10) {
      const std::int64_t xtri = x01 + x10;
      // Trinomial H0-predictive weight (1/4, 1/4, 1/2) on (x01, x10, rest).
      const double lw = log_binomial(x_plus_plus, xtri) +
                        log_binomial(xtri, x01) -
                        (xpp + static_cast<double>(xtri)) * kLn2;
      const double lbf_m =
          xpp * kLn2 +
          log_beta(atri + static_cast<double>(xtri) + ntri,
                   arest + static_cast<double>(x_plus_plus - xtri) + nrest) -
          log_beta(atri + ntri, arest + nrest);
      const double a01x = a.a01 + static_cast<double>(x01);
      const double a10x = a.a10 + static_cast<double>(x10);
      const double lbf_co = ntri * kLn2 + log_beta(a01x + n01, a10x + n10) -
                            log_beta(a01x, a10x);
      terms.push_back(lw + lbf_m + lbf_co);
    }
  }
  return log_sum_exp(terms);
}

double i_log_bf_via_mixture_identity(const ContingencyTable& n,
                                     const DirichletHyper& a,
                                     std::int64_t x_plus_plus) {
  n.validate();
  a.validate();
  validate_prior_size(x_plus_plus, "i_log_bf_via_mixture_identity");
  const double atri = a.a_triangle();
  const double arest = a.a_plus_plus() - atri;
  const std::int64_t ntri_i = n.n_triangle();
  const double ntri = static_cast<double>(ntri_i);
  const double nrest = static_cast<double>(n.n_plus_plus() - ntri_i);
  const double n01 = static_cast<double>(n.n01);
  const double n10 = static_cast<double>(n.n10);

  // Null marginal of the observed data; common to every term.
  const double log_mh0_n = log_binomial(ntri_i, n.n01) - ntri * kLn2 +
                           log_binomial(n.n_plus_plus(), ntri_i) +
                           log_beta(atri + ntri, arest + nrest) -
                           log_beta(atri, arest);

  const ImaginaryWeightTable w = h0_weights(a, x_plus_plus);
  std::vector<double> terms;
  terms.reserve(w.size());
  for (std::int64_t xtri = 0; xtri <= x_plus_plus; ++xtri) {
    for (std::int64_t x01 = 0; x01 <= xtri; ++x01) {
      const std::int64_t x10 = xtri - x01;
      // Marginal of n under H given imaginary x: the x-posterior predictive.
      const double log_mh_nx =
          log_binomial(n.n_plus_plus(), ntri_i) +
          log_beta(atri + static_cast<double>(xtri) + ntri,
                   arest + static_cast<double>(x_plus_plus - xtri) + nrest) -
          log_beta(atri + static_cast<double>(xtri),
                   arest + static_cast<double>(x_plus_plus - xtri)) +
          log_binomial(ntri_i, n.n01) +
          log_beta(a.a01 + static_cast<double>(x01) + n01,
                   a.a10 + static_cast<double>(x10) + n10) -
          log_beta(a.a01 + static_cast<double>(x01),
                   a.a10 + static_cast<double>(x10));
      terms.push_back(w.log_weight(x01, xtri) + log_mh_nx - log_mh0_n);
    }
  }
  return log_sum_exp(terms);
}

}  // namespace swingbf
