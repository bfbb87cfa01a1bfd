#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "swingbf/default_test.hpp"
#include "swingbf/sensitivity.hpp"

using namespace swingbf;

namespace {

const ContingencyTable kExample1{20, 17, 10, 53};
const ContingencyTable kExample2{20, 21, 9, 50};
const ContingencyTable kExample3{1, 7, 1, 5};
const DirichletHyper kUniform{};

std::vector<double> probs(const SensitivityCurve& c) {
  std::vector<double> p;
  for (const SensitivityPoint& pt : c.points) p.push_back(pt.posterior_prob_h0);
  return p;
}

}  // namespace

TEST_CASE("round_half_away rounds ties away from zero") {
  CHECK(round_half_away(6.5) == 7);
  CHECK(round_half_away(0.5) == 1);
  CHECK(round_half_away(-0.5) == -1);
  CHECK(round_half_away(2.5) == 3);
  CHECK(round_half_away(-1.5) == -2);
  CHECK(round_half_away(1.4) == 1);
  CHECK(round_half_away(-1.4) == -1);
  CHECK(round_half_away(0.0) == 0);
}

TEST_CASE("default_q_grid shape") {
  const std::vector<double> q = default_q_grid();
  REQUIRE(q.size() == 21);
  CHECK(q.front() == 0.0);
  CHECK(q.back() == 1.0);
  CHECK(q[1] == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("ci curve starts at the default answer and ends at the pin") {
  const SensitivityCurve c = sensitivity_curve(
      kExample1, kUniform, SensitivityMethod::ci_intrinsic, default_q_grid());
  REQUIRE(c.points.size() == 21);
  CHECK(c.points[0].x == 0);
  CHECK(c.points[0].posterior_prob_h0 ==
        to_summary(default_log_bf(kExample1, kUniform), Method::default_bf)
            .posterior_prob_h0);
  CHECK(c.points[20].x == 27);
  CHECK(c.points[20].posterior_prob_h0 ==
        doctest::Approx(0.48250152129446533).epsilon(1e-12));

  // Non-increasing throughout (1-ulp slack: the x=1 prior is still flat, so
  // the first two points are mathematically equal), strictly lower at the end.
  const std::vector<double> p = probs(c);
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    CHECK(p[i + 1] <= p[i] + 1e-12);
  CHECK(p.back() < p.front());

  // Interpolated crossing of 1/2.
  double q_star = -1.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] >= 0.5 && p[i + 1] < 0.5) {
      const double t = (p[i] - 0.5) / (p[i] - p[i + 1]);
      q_star = c.points[i].q + t * (c.points[i + 1].q - c.points[i].q);
      break;
    }
  }
  CHECK(q_star == doctest::Approx(0.6178771613179351).epsilon(1e-10));
}

TEST_CASE("ci curve for example 2 dips and recovers") {
  const SensitivityCurve c = sensitivity_curve(
      kExample2, kUniform, SensitivityMethod::ci_intrinsic, default_q_grid());
  const std::vector<double> p = probs(c);
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] < p[argmin]) argmin = i;
  CHECK(c.points[argmin].q == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(p[argmin] == doctest::Approx(0.23755632093158532).epsilon(1e-12));
  CHECK(p.back() > p[argmin]);   // not monotone: it comes back up
  CHECK(p.front() > p[argmin]);
  CHECK(p.back() ==
        doctest::Approx(0.25473083136393837).epsilon(1e-12));
}

TEST_CASE("ci curve for example 3 rises") {
  const SensitivityCurve c = sensitivity_curve(
      kExample3, kUniform, SensitivityMethod::ci_intrinsic, default_q_grid());
  const std::vector<double> p = probs(c);
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    CHECK(p[i + 1] >= p[i] - 1e-12);
  CHECK(p.back() > p.front());
  CHECK(p.back() == doctest::Approx(0.26253550331004244).epsilon(1e-12));
}

TEST_CASE("i curve endpoints") {
  const SensitivityCurve c = sensitivity_curve(
      kExample1, kUniform, SensitivityMethod::i_intrinsic, default_q_grid());
  REQUIRE(c.points.size() == 21);
  CHECK(c.points[0].posterior_prob_h0 ==
        to_summary(default_log_bf(kExample1, kUniform), Method::default_bf)
            .posterior_prob_h0);
  CHECK(c.points[20].x == 100);
  CHECK(c.points[20].posterior_prob_h0 ==
        doctest::Approx(0.48324246419526051).epsilon(1e-12));
}

TEST_CASE("ci and i curves stay close on the examples") {
  struct Case {
    const ContingencyTable* n;
    double sup;
  };
  const Case cases[] = {{&kExample1, 0.01227948005928603},
                        {&kExample2, 0.0048110536963876793},
                        {&kExample3, 0.0058719518051684738}};
  for (const Case& c : cases) {
    const std::vector<double> ci = probs(sensitivity_curve(
        *c.n, kUniform, SensitivityMethod::ci_intrinsic, default_q_grid()));
    const std::vector<double> ii = probs(sensitivity_curve(
        *c.n, kUniform, SensitivityMethod::i_intrinsic, default_q_grid()));
    double sup = 0.0;
    for (std::size_t i = 0; i < ci.size(); ++i)
      sup = std::max(sup, std::fabs(ci[i] - ii[i]));
    CHECK(sup == doctest::Approx(c.sup).epsilon(1e-10));
    CHECK(sup <= 0.03);
  }
}

TEST_CASE("duplicate imaginary sizes produce identical bits") {
  const std::vector<double> grid{0.0, 0.01, 0.02};
  const SensitivityCurve c = sensitivity_curve(
      kExample1, kUniform, SensitivityMethod::ci_intrinsic, grid);
  REQUIRE(c.points.size() == 3);
  CHECK(c.points[0].x == 0);
  CHECK(c.points[1].x == 0);  // round(0.27) == 0
  CHECK(c.points[2].x == 1);
  CHECK(c.points[0].posterior_prob_h0 == c.points[1].posterior_prob_h0);
}

TEST_CASE("worker count does not change results") {
  ::setenv("SWINGBF_THREADS", "1", 1);
  const std::vector<double> serial = probs(sensitivity_curve(
      kExample2, kUniform, SensitivityMethod::i_intrinsic, default_q_grid()));
  ::setenv("SWINGBF_THREADS", "7", 1);
  const std::vector<double> parallel = probs(sensitivity_curve(
      kExample2, kUniform, SensitivityMethod::i_intrinsic, default_q_grid()));
  ::unsetenv("SWINGBF_THREADS");
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i)
    CHECK(serial[i] == parallel[i]);
}

TEST_CASE("sensitivity_curve validates its inputs") {
  const std::vector<double> ok{0.0, 0.5, 1.0};
  CHECK_THROWS_AS(sensitivity_curve(ContingencyTable{3, 0, 0, 4}, kUniform,
                                    SensitivityMethod::ci_intrinsic, ok),
                  std::domain_error);
  // The I method has no such restriction.
  CHECK_NOTHROW(sensitivity_curve(ContingencyTable{3, 0, 0, 4}, kUniform,
                                  SensitivityMethod::i_intrinsic, ok));

  const std::vector<double> outside{-0.1, 0.5};
  CHECK_THROWS_AS(sensitivity_curve(kExample1, kUniform,
                                    SensitivityMethod::ci_intrinsic, outside),
                  std::invalid_argument);
  const std::vector<double> flat{0.5, 0.5};
  CHECK_THROWS_AS(sensitivity_curve(kExample1, kUniform,
                                    SensitivityMethod::ci_intrinsic, flat),
                  std::invalid_argument);
  const std::vector<double> empty;
  CHECK_THROWS_AS(sensitivity_curve(kExample1, kUniform,
                                    SensitivityMethod::ci_intrinsic, empty),
                  std::invalid_argument);
}

TEST_CASE("npp dependence: ci constant, i drifting") {
  const std::vector<std::int64_t> npp{10, 20, 50, 100, 200};
  const NppCurves c =
      npp_dependence_curve(5, 5, 10, 5, kUniform, npp, DiagonalSplit::all_n00);
  REQUIRE(c.n_plus_plus.size() == 5);
  REQUIRE(c.ci_prob.size() == 5);
  REQUIRE(c.i_prob.size() == 5);

  for (double p : c.ci_prob) CHECK(p == c.ci_prob[0]);  // bit-identical
  CHECK(c.ci_prob[0] ==
        doctest::Approx(0.66629687153317063).epsilon(1e-12));

  const double expected_i[] = {0.63355817288982608, 0.66848555453248526,
                               0.70670133093057586, 0.72164368003423962,
                               0.72758807268741965};
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(c.i_prob[i] == doctest::Approx(expected_i[i]).epsilon(1e-12));
  CHECK(std::fabs(c.i_prob[4] - c.i_prob[0]) > 0.005);

  // The diagonal split cannot matter: both probabilities use the diagonal
  // only through its sum.
  const NppCurves even =
      npp_dependence_curve(5, 5, 10, 5, kUniform, npp, DiagonalSplit::even);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(even.ci_prob[i] == c.ci_prob[i]);
    CHECK(even.i_prob[i] == c.i_prob[i]);
  }
}

TEST_CASE("npp dependence validates inputs") {
  const std::vector<std::int64_t> bad{9};  // below n01 + n10
  CHECK_THROWS_AS(npp_dependence_curve(5, 5, 10, 5, kUniform, bad,
                                       DiagonalSplit::all_n00),
                  std::domain_error);
  const std::vector<std::int64_t> npp{10};
  CHECK_THROWS_AS(npp_dependence_curve(-1, 5, 10, 5, kUniform, npp,
                                       DiagonalSplit::all_n00),
                  std::domain_error);
  CHECK_THROWS_AS(npp_dependence_curve(5, 5, -1, 5, kUniform, npp,
                                       DiagonalSplit::all_n00),
                  std::domain_error);
}
