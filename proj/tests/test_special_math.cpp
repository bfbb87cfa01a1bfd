#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "swingbf/special_math.hpp"

using namespace swingbf;

namespace {

// Near-machine-precision agreement with externally computed references:
// absolute 1e-12 floor plus a few-ulp relative band for large magnitudes.
void check_close(double got, double want) {
  const double tol =
      std::max(1e-12, 8.0 * std::numeric_limits<double>::epsilon() *
                          std::fabs(want));
  CHECK(std::fabs(got - want) <= tol);
}

}  // namespace

TEST_CASE("log_gamma matches high-precision references") {
  check_close(log_gamma(0.001), 6.9071788853838537);
  check_close(log_gamma(0.5), 0.57236494292470009);
  check_close(log_gamma(2.5), 0.28468287047291916);
  check_close(log_gamma(11.0), 15.104412573075516);
  check_close(log_gamma(1000.0), 5905.2204232091812);
  check_close(log_gamma(1e6), 12815504.569147612);
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(2.0) == 0.0);
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("log_beta values and symmetry") {
  check_close(log_beta(2.0, 3.0), -2.4849066497880004);  // ln(1/12)
  CHECK(log_beta(1.0, 1.0) == 0.0);
  CHECK(log_beta(3.7, 0.4) == log_beta(0.4, 3.7));  // commutative additions
  CHECK_THROWS_AS(log_beta(0.0, 1.0), std::domain_error);
}

TEST_CASE("log_binomial exact coefficients") {
  check_close(log_binomial(27, 17), 15.948052603793927);
  CHECK(std::exp(log_binomial(27, 17)) ==
        doctest::Approx(8436285.0).epsilon(1e-12));
  CHECK(log_binomial(12, 0) == 0.0);
  CHECK(log_binomial(12, 12) == 0.0);
  CHECK(log_binomial(41, 13) == log_binomial(41, 28));  // bit-exact symmetry
  CHECK_THROWS_AS(log_binomial(5, 6), std::domain_error);
  CHECK_THROWS_AS(log_binomial(5, -1), std::domain_error);
}

TEST_CASE("log_binomial satisfies the Pascal identity") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      const double lhs = std::exp(log_binomial(n, k));
      const double rhs =
          std::exp(log_binomial(n - 1, k - 1)) + std::exp(log_binomial(n - 1, k));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("log_sum_exp handles shifts, -inf and errors") {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> t{std::log(1.0), std::log(2.0), std::log(3.0)};
  check_close(log_sum_exp(t), std::log(6.0));

  std::vector<double> shifted{1000.0, 1000.0 + std::log(2.0)};
  check_close(log_sum_exp(shifted), 1000.0 + std::log(3.0));

  std::vector<double> with_ninf{2.5, -inf};
  CHECK(log_sum_exp(with_ninf) == 2.5);  // exp(0) + exp(-inf) == 1 exactly

  std::vector<double> all_ninf{-inf, -inf};
  CHECK(log_sum_exp(all_ninf) == -inf);

  std::vector<double> empty;
  CHECK_THROWS_AS(log_sum_exp(empty), std::invalid_argument);
}

TEST_CASE("log_binomial_pmf boundary conventions and symmetry") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(log_binomial_pmf(0, 5, 0.0) == 0.0);   // certain event
  CHECK(log_binomial_pmf(5, 5, 1.0) == 0.0);
  CHECK(log_binomial_pmf(3, 5, 0.0) == -inf);  // impossible event
  CHECK(log_binomial_pmf(2, 5, 1.0) == -inf);

  // Dyadic p has an exact complement, so the mirrored call shares every bit.
  CHECK(log_binomial_pmf(3, 10, 0.25) == log_binomial_pmf(7, 10, 0.75));
  CHECK(log_binomial_pmf(0, 8, 0.125) == log_binomial_pmf(8, 8, 0.875));

  CHECK(std::exp(log_binomial_pmf(4, 4, 0.3)) ==
        doctest::Approx(0.0081).epsilon(1e-13));
  CHECK(std::exp(log_binomial_pmf(0, 10, 0.5)) ==
        doctest::Approx(0.0009765625).epsilon(1e-13));

  CHECK_THROWS_AS(log_binomial_pmf(3, 2, 0.5), std::domain_error);
  CHECK_THROWS_AS(log_binomial_pmf(1, 2, 1.5), std::domain_error);
}

TEST_CASE("log_binomial_pmf sums to one") {
  for (double p : {0.3, 0.5, 0.843}) {
    double sum = 0.0;
    for (std::int64_t k = 0; k <= 12; ++k)
      sum += std::exp(log_binomial_pmf(k, 12, p));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("chi_square_sf_1df matches references") {
  check_close(chi_square_sf_1df(3.841459), 0.049999994653195765);
  check_close(chi_square_sf_1df(4.0 / 3.0), 0.24821307898992358);
  check_close(chi_square_sf_1df(0.5), 0.47950012218695346);
  check_close(chi_square_sf_1df(1.0), 0.3173105078629141);
  check_close(chi_square_sf_1df(2.0), 0.15729920705028513);
  check_close(chi_square_sf_1df(5.0), 0.025347318677468264);
  check_close(chi_square_sf_1df(6.635), 0.0099994195740425238);
  check_close(chi_square_sf_1df(10.0), 0.0015654022580025497);
  check_close(chi_square_sf_1df(121.0 / 30.0), 0.044609718024939621);
  check_close(chi_square_sf_1df(25.0 / 8.0), 0.07709987174354177);
  check_close(chi_square_sf_1df(49.0 / 27.0), 0.17793172526825461);
  check_close(chi_square_sf_1df(4.8), 0.028459736916310577);
  check_close(chi_square_sf_1df(4.5), 0.033894853524689273);
  CHECK(chi_square_sf_1df(0.0) == 1.0);
  CHECK_THROWS_AS(chi_square_sf_1df(-1e-9), std::domain_error);
}

TEST_CASE("binomial_tail exact references and complements") {
  // P(X >= 17 | n=27, p=1/2) = 16628809 / 2^27.
  CHECK(binomial_tail(27, 17, 0.5, TailSide::upper) ==
        doctest::Approx(0.12389428168535233).epsilon(1e-13));
  CHECK(binomial_tail(12, 3, 0.3, TailSide::lower) ==
        doctest::Approx(0.49251577343500003).epsilon(1e-13));
  CHECK(binomial_tail(10, 10, 0.5, TailSide::upper) ==
        doctest::Approx(0.0009765625).epsilon(1e-13));
  CHECK(binomial_tail(9, 0, 0.77, TailSide::upper) == 1.0);
  CHECK(binomial_tail(9, 9, 0.77, TailSide::lower) == 1.0);

  const double lower = binomial_tail(12, 3, 0.3, TailSide::lower);
  const double upper = binomial_tail(12, 4, 0.3, TailSide::upper);
  CHECK(lower + upper == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(binomial_tail(5, 6, 0.5, TailSide::upper),
                  std::domain_error);
  CHECK_THROWS_AS(binomial_tail(5, 2, -0.1, TailSide::upper),
                  std::domain_error);
}
