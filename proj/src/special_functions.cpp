#include "mzparity/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mzparity {

double ln_factorial(long long n) {
  if (n < 0) {
    throw std::invalid_argument("ln_factorial: n must be nonnegative, got " + std::to_string(n));
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double ln_binomial(long long n, long long k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("ln_binomial: arguments must be nonnegative");
  }
  if (k > n) {
    throw std::invalid_argument("ln_binomial: k = " + std::to_string(k) + " exceeds n = " +
                                std::to_string(n));
  }
  return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
}

LegendreEval legendre(int n, double x) {
  if (n < 0) {
    throw std::invalid_argument("legendre: order must be nonnegative");
  }
  if (!(x >= -1.0 && x <= 1.0)) {
    throw std::invalid_argument("legendre: x = " + std::to_string(x) + " outside [-1, 1]");
  }

  double p_prev = 1.0; // P_0
  double p_cur = x;    // P_1
  if (n == 0) return {0, x, 1.0, 0.0};
  for (int m = 1; m < n; ++m) {
    const double p_next = ((2 * m + 1) * x * p_cur - m * p_prev) / (m + 1);
    p_prev = p_cur;
    p_cur = p_next;
  }

  double deriv;
  if (x == 1.0) {
    deriv = 0.5 * n * (n + 1.0);
  } else if (x == -1.0) {
    deriv = (n % 2 == 0 ? -1.0 : 1.0) * 0.5 * n * (n + 1.0);
  } else {
    deriv = n * (p_prev - x * p_cur) / (1.0 - x * x);
  }
  return {n, x, p_cur, deriv};
}

namespace {

// Direct series: terms stay within double range for x <= ~30.
double bessel_series_direct(int order, double x) {
  const double q = 0.25 * x * x;
  double term = (order == 0) ? 1.0 : 0.5 * x;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= q / (static_cast<double>(k) * (k + order));
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// Same series accumulated in the log domain, anchored at the largest term.
double bessel_series_log(int order, double x) {
  const double lh = std::log(0.5 * x);
  auto log_term = [&](long long k) {
    return (2 * k + order) * lh - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(k + order) + 1.0);
  };
  const long long k_peak = std::max<long long>(0, static_cast<long long>(0.5 * x) - order);
  const double anchor = log_term(k_peak);
  double sum = 0.0;
  for (long long k = k_peak; k < k_peak + 100000; ++k) {
    const double t = std::exp(log_term(k) - anchor);
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  for (long long k = k_peak - 1; k >= 0; --k) {
    const double t = std::exp(log_term(k) - anchor);
    sum += t;
    if (t < 1e-18 * sum) break;
  }
  return std::exp(anchor + std::log(sum));
}

double bessel_impl(int order, double x) {
  if (!(x >= 0.0)) {
    throw std::invalid_argument("bessel_i: x must be nonnegative");
  }
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  return x <= 30.0 ? bessel_series_direct(order, x) : bessel_series_log(order, x);
}

} // namespace

double bessel_i0(double x) { return bessel_impl(0, x); }
double bessel_i1(double x) { return bessel_impl(1, x); }

double bessel_i(int order, double x) {
  if (order != 0 && order != 1) {
    throw std::invalid_argument("bessel_i: order must be 0 or 1, got " + std::to_string(order));
  }
  return bessel_impl(order, x);
}

} // namespace mzparity
