#pragma once

// Elementary special functions behind the joint Poisson law: Poisson and
// binomial weights evaluated in log space, and the confluent hypergeometric
// function M(a;b;x) (Kummer's Phi) restricted to the integer parameters
// 1 <= a <= b that the probability series produces.

#include <cointjump/detail/dd.hpp>

namespace cointjump::specfun {

/// log(k!), cached for small k, lgamma beyond.
double log_factorial(int k);

/// log C(n, k).
double log_binomial(int n, int k);

/// Poisson weight pi_k(alpha) = e^{-alpha} alpha^k / k!. Evaluated as
/// exp(k log alpha - alpha - log k!) so large k and alpha stay finite.
double poisson_pmf(int k, double alpha);

/// log pi_k(alpha); -inf when the weight is exactly zero.
double log_poisson_pmf(int k, double alpha);

/// P{Poisson(alpha) >= k}, summed upward from k (no cancellation).
double poisson_tail_geq(int k, double alpha);

/// beta_l(n) = C(n,l) a^{n-l} (1-a)^l, the Bin(n, 1-a) weight, with
/// beta_0(0) = 1. a = 0 and a = 1 are accepted as degenerate limits.
double binomial_weight(int l, int n, double a);

/// Kummer's M(a;b;x) for integer 1 <= a <= b and 0 <= x <= 500 (the series
/// envelope used at desk scale; larger x throws). Forward series with
/// term-ratio stopping; agrees with the truncated series to ~1e-15 relative.
double kummer_m_int(int a, int b, double x);

namespace detail {

using cointjump::detail::dd;

/// Compensated Kummer series, a >= 0 (a = 0 returns 1). Used by the joint
/// pmf evaluation where the downstream sums cancel heavily.
dd kummer_dd(int a, int b, dd x);

/// Compensated P{Poisson(w) >= k} for dd weight w >= 0.
dd poisson_tail_geq_dd(int k, dd w);

}  // namespace detail

}  // namespace cointjump::specfun
