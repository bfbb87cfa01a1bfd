#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracle_support.hpp"
#include "swingbf/model_core.hpp"

using namespace swingbf;

namespace {

const ContingencyTable kExample1{20, 17, 10, 53};

}  // namespace

TEST_CASE("table and hyper validation") {
  CHECK_NOTHROW(kExample1.validate());
  CHECK_THROWS_AS((ContingencyTable{-1, 0, 0, 2}.validate()),
                  std::domain_error);
  CHECK_THROWS_AS((ContingencyTable{0, 0, 0, 0}.validate()),
                  std::domain_error);
  CHECK_NOTHROW((DirichletHyper{0.5, 1.0, 2.0, 0.1}.validate()));
  CHECK_THROWS_AS((DirichletHyper{0.0, 1.0, 1.0, 1.0}.validate()),
                  std::domain_error);
  CHECK_THROWS_AS((DirichletHyper{1.0, -1.0, 1.0, 1.0}.validate()),
                  std::domain_error);
}

TEST_CASE("reparametrize produces the three independent Beta laws") {
  ReparamPrior uniform = reparametrize(DirichletHyper{});
  CHECK(uniform.eta_law.alpha == 2.0);
  CHECK(uniform.eta_law.beta == 2.0);
  CHECK(uniform.theta_law.alpha == 1.0);
  CHECK(uniform.theta_law.beta == 1.0);
  CHECK(uniform.gamma_law.alpha == 1.0);
  CHECK(uniform.gamma_law.beta == 1.0);

  ReparamPrior skew = reparametrize(DirichletHyper{2.0, 1.0, 1.0, 3.0});
  CHECK(skew.eta_law.alpha == 2.0);
  CHECK(skew.eta_law.beta == 5.0);
  CHECK(skew.theta_law.alpha == 1.0);
  CHECK(skew.theta_law.beta == 1.0);
  CHECK(skew.gamma_law.alpha == 2.0);
  CHECK(skew.gamma_law.beta == 3.0);
}

TEST_CASE("log_likelihood_full pins and boundary rules") {
  // (1,1,1,1) at (1/2,1/2,1/2): Bin(2|4)Bin(1|2)Bin(1|2) = (6/16)(1/2)(1/2).
  const double got =
      log_likelihood_full(ContingencyTable{1, 1, 1, 1}, 0.5, 0.5, 0.5);
  CHECK(std::exp(got) == doctest::Approx(0.09375).epsilon(1e-14));

  // Zero-probability boundary with positive count is rejected...
  CHECK_THROWS_AS(log_likelihood_full(kExample1, 0.5, 0.0, 0.5),
                  std::domain_error);
  // ...but is fine when the matching count is zero.
  CHECK_NOTHROW(
      log_likelihood_full(ContingencyTable{0, 0, 3, 4}, 0.5, 0.0, 0.0));
}

TEST_CASE("likelihood sums to one over all tables of a fixed total") {
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int rep = 0; rep < 5; ++rep) {
    const double eta = unif(rng);
    const double theta = unif(rng);
    const double gamma = unif(rng);
    const std::int64_t total = 6;
    double sum = 0.0;
    for (std::int64_t ntri = 0; ntri <= total; ++ntri)
      for (std::int64_t n01 = 0; n01 <= ntri; ++n01)
        for (std::int64_t n00 = 0; n00 <= total - ntri; ++n00) {
          const ContingencyTable n{n00, n01, ntri - n01,
                                   total - ntri - n00};
          sum += std::exp(log_likelihood_full(n, eta, theta, gamma));
        }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("log_conditional_likelihood pins") {
  const double got = log_conditional_likelihood(17, 27, 0.5);
  const double want = std::log(8436285.0) - 27.0 * std::log(2.0);
  CHECK(got == doctest::Approx(want).epsilon(1e-14));
  CHECK(log_conditional_likelihood(0, 0, 0.77) == 0.0);
}

TEST_CASE("grid_midpoints layout") {
  const std::vector<double> g = grid_midpoints(4);
  REQUIRE(g.size() == 4);
  CHECK(g[0] == 0.125);
  CHECK(g[1] == 0.375);
  CHECK(g[2] == 0.625);
  CHECK(g[3] == 0.875);

  const std::vector<double> d = theta_grid_default();
  REQUIRE(d.size() == 513);
  CHECK(d[256] == 0.5);  // (256 + 1/2) / 513 is exactly representable
  CHECK(d.front() > 0.0);
  CHECK(d.back() < 1.0);
  CHECK_THROWS_AS(grid_midpoints(0), std::domain_error);
}

TEST_CASE("normalized_likelihood_curve integrates to one and peaks at the MLE") {
  const std::vector<double> grid = theta_grid_default();
  const std::vector<CurvePoint> curve =
      normalized_likelihood_curve(kExample1, grid);
  REQUIRE(curve.size() == grid.size());

  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i)
    integral += 0.5 * (curve[i].density + curve[i + 1].density) *
                (curve[i + 1].theta - curve[i].theta);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-12));

  std::size_t argmax = 0;
  for (std::size_t i = 1; i < curve.size(); ++i)
    if (curve[i].density > curve[argmax].density) argmax = i;
  const double mle = 17.0 / 27.0;
  CHECK(std::fabs(curve[argmax].theta - mle) <= 0.5 / 513.0 + 1e-15);

  // More mass right of 1/2 than left of it for this table.
  double left = 0.0;
  double right = 0.0;
  for (const CurvePoint& p : curve)
    (p.theta < 0.5 ? left : right) += p.density;
  CHECK(right > left);
}

TEST_CASE("normalized_likelihood_curve symmetry for balanced swings") {
  const std::vector<double> grid = grid_midpoints(257);
  const std::vector<CurvePoint> curve =
      normalized_likelihood_curve(ContingencyTable{3, 6, 6, 1}, grid);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const CurvePoint& mirror = curve[curve.size() - 1 - i];
    CHECK(curve[i].density ==
          doctest::Approx(mirror.density).epsilon(1e-10));
  }
}

TEST_CASE("normalized_likelihood_curve is uniform when no swings occurred") {
  const std::vector<double> grid = grid_midpoints(33);
  const std::vector<CurvePoint> curve =
      normalized_likelihood_curve(ContingencyTable{4, 0, 0, 9}, grid);
  for (const CurvePoint& p : curve) CHECK(p.density == 1.0);
}

TEST_CASE("normalized_likelihood_curve rejects bad grids") {
  const std::vector<double> not_increasing{0.2, 0.2, 0.4};
  CHECK_THROWS_AS(normalized_likelihood_curve(kExample1, not_increasing),
                  std::invalid_argument);
  const std::vector<double> outside{0.0, 0.5, 1.0};
  CHECK_THROWS_AS(normalized_likelihood_curve(kExample1, outside),
                  std::invalid_argument);
  const std::vector<double> single{0.5};
  CHECK_THROWS_AS(normalized_likelihood_curve(kExample1, single),
                  std::invalid_argument);
}
