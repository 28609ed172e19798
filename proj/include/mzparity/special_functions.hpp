#pragma once

namespace mzparity {

/// Legendre polynomial value and first derivative at a point.
struct LegendreEval {
  int order;
  double x;
  double value;
  double derivative;
};

/// ln(n!) for n >= 0. Relative error <= 1e-13 up to n = 1e6.
double ln_factorial(long long n);

/// ln C(n, k) for 0 <= k <= n.
double ln_binomial(long long n, long long k);

/// P_n(x) and dP_n/dx for x in [-1, 1], by upward three-term recurrence.
/// The derivative uses (1-x^2) P' = n (P_{n-1} - x P_n); the x = +-1 limit
/// is the analytic value +-n(n+1)/2.
LegendreEval legendre(int n, double x);

/// Modified Bessel functions of the first kind, orders 0 and 1, x >= 0.
/// Power series, terminated when a term drops below 1e-17 of the partial
/// sum; terms are accumulated in the log domain for x > 30.
double bessel_i0(double x);
double bessel_i1(double x);

/// Order-dispatching form; order must be 0 or 1.
double bessel_i(int order, double x);

} // namespace mzparity
