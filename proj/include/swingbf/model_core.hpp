#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Data model for 2x2 matched-pairs tables and the induced independent-Beta
// parametrization (eta, theta, gamma):
//   eta   = pi01 + pi10   probability of a swing (off-diagonal outcome)
//   theta = pi01 / eta    direction of the swing
//   gamma = pi00 / (1 - eta)
// Under a Dirichlet(a) prior on the cell probabilities the three are
// independent Betas, and the sampling model factorizes into three Binomials:
//   f(n | eta, theta, gamma) =
//     Bin(n_tri | n_pp, eta) Bin(n01 | n_tri, theta) Bin(n00 | n_pp - n_tri, gamma).

namespace swingbf {

struct ContingencyTable {
  std::int64_t n00 = 0;
  std::int64_t n01 = 0;
  std::int64_t n10 = 0;
  std::int64_t n11 = 0;

  std::int64_t n_triangle() const { return n01 + n10; }
  std::int64_t n_plus_plus() const { return n00 + n01 + n10 + n11; }

  // Throws std::domain_error unless all counts >= 0 and the total >= 1.
  void validate() const;
};

struct DirichletHyper {
  double a00 = 1.0;
  double a01 = 1.0;
  double a10 = 1.0;
  double a11 = 1.0;

  double a_triangle() const { return a01 + a10; }
  double a_plus_plus() const { return a00 + a01 + a10 + a11; }

  // Throws std::domain_error unless all entries are strictly positive.
  void validate() const;
};

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;
};

// The three independent Beta laws induced by a Dirichlet(a) prior.
struct ReparamPrior {
  BetaParams eta_law;    // Beta(a01 + a10, a00 + a11)
  BetaParams theta_law;  // Beta(a01, a10)
  BetaParams gamma_law;  // Beta(a00, a11)
};

// An imaginary (training) sample. The conditional (CI) construction uses
// only (x01, x_triangle); the full construction adds x_plus_plus.
struct ImaginaryData {
  std::int64_t x01 = 0;
  std::int64_t x_triangle = 0;
  std::int64_t x_plus_plus = 0;
};

ReparamPrior reparametrize(const DirichletHyper& a);

// ln f(n | eta, theta, gamma), the sum of the three Binomial log-pmfs.
// Boundary parameter values are legal only when the matching count is zero;
// a zero-probability/positive-count combination throws std::domain_error.
double log_likelihood_full(const ContingencyTable& n, double eta, double theta,
                           double gamma);

// ln Bin(n01 | n_triangle, theta). Requires 0 <= n01 <= n_triangle.
double log_conditional_likelihood(std::int64_t n01, std::int64_t n_triangle,
                                  double theta);

// points equally spaced interior values (i + 1/2) / points, i = 0..points-1.
std::vector<double> grid_midpoints(int points);

// Default theta grid: 513 interior points.
std::vector<double> theta_grid_default();

struct CurvePoint {
  double theta = 0.0;
  double density = 0.0;
};

// The conditional likelihood as a density in theta, normalized so that the
// trapezoid rule over the supplied grid integrates to 1. When n_triangle = 0
// theta is unidentified and the uniform density is returned.
std::vector<CurvePoint> normalized_likelihood_curve(const ContingencyTable& n,
                                                    std::span<const double> grid);

}  // namespace swingbf
