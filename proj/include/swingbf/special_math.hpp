#pragma once

#include <cstdint>
#include <span>

// Log-space special functions shared by every evidence computation.
//
// Convention: a double holding the natural log of a nonnegative quantity
// represents zero as -infinity and is finite for every strictly positive
// quantity. All mixture/evidence arithmetic in this library stays in log
// space; conversion to probabilities happens at presentation boundaries.

namespace swingbf {

using LogValue = double;

// ln Gamma(z) for z > 0. Throws std::domain_error for z <= 0.
double log_gamma(double z);

// ln B(a,b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a+b), a,b > 0.
double log_beta(double a, double b);

// ln C(n,k) for 0 <= k <= n, via log_gamma.
double log_binomial(std::int64_t n, std::int64_t k);

// ln sum(exp(t_i)), max-shifted so it neither overflows nor underflows.
// Throws std::invalid_argument on an empty sequence; -inf entries are
// harmless and an all--inf input yields -inf.
double log_sum_exp(std::span<const double> terms);

// ln Bin(k | n, p). Zero-probability events (e.g. p = 0 with k > 0) come
// back as -inf; 0 * ln 0 counts as 0 so boundary p with k = 0 or k = n is
// legal. Symmetric by construction: (k,n,p) and (n-k,n,1-p) give the same
// bits.
double log_binomial_pmf(std::int64_t k, std::int64_t n, double p);

// P(chi^2_1 >= x) = erfc(sqrt(x/2)). Throws std::domain_error for x < 0.
double chi_square_sf_1df(double x);

enum class TailSide { lower, upper };

// Exact cumulative Binomial tail: P(X <= k) (lower) or P(X >= k) (upper)
// for X ~ Bin(n, p), summed stably from log-pmf terms.
double binomial_tail(std::int64_t n, std::int64_t k, double p, TailSide side);

namespace detail {

// c * log(v) with the 0 * log(0) == 0 convention (c >= 0).
double xlogy(double c, double v);

}  // namespace detail

}  // namespace swingbf
