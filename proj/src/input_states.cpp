#include "mzparity/input_states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mzparity/special_functions.hpp"

namespace mzparity {

std::vector<double> DiagonalCoeffs::probabilities() const {
  std::vector<double> w(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) w[i] = std::norm(c[i]);
  return w;
}

DiagonalCoeffs twin_fock_coeffs(int n, int cutoff) {
  if (n < 0 || cutoff < 0) throw std::invalid_argument("twin_fock_coeffs: negative argument");
  if (n > cutoff) {
    throw std::invalid_argument("twin_fock_coeffs: N = " + std::to_string(n) +
                                " exceeds cutoff = " + std::to_string(cutoff));
  }
  DiagonalCoeffs out;
  out.c.assign(static_cast<std::size_t>(cutoff) + 1, {0.0, 0.0});
  out.c[static_cast<std::size_t>(n)] = 1.0;
  out.family = StateFamily::TwinFock;
  out.parameter = static_cast<double>(n);
  out.tail_mass_bound = 0.0;
  return out;
}

DiagonalCoeffs tmsvs_coeffs(std::complex<double> xi, int cutoff) {
  const double a = std::abs(xi);
  if (!(a < 1.0)) throw std::invalid_argument("tmsvs_coeffs: |xi| must be < 1");
  if (cutoff < 0) throw std::invalid_argument("tmsvs_coeffs: negative cutoff");
  DiagonalCoeffs out;
  out.family = StateFamily::Tmsvs;
  out.parameter = xi;
  out.c.resize(static_cast<std::size_t>(cutoff) + 1);
  const double front = std::sqrt(1.0 - a * a);
  const double theta = std::arg(xi);
  for (int n = 0; n <= cutoff; ++n) {
    const double mag = (a == 0.0 && n > 0) ? 0.0 : front * std::pow(a, n);
    out.c[static_cast<std::size_t>(n)] = std::polar(mag, theta * n);
  }
  // Exact geometric remainder: (1-a^2) sum_{N>cutoff} a^{2N} = a^{2(cutoff+1)}.
  out.tail_mass_bound = a == 0.0 ? 0.0 : std::exp(2.0 * (cutoff + 1) * std::log(a));
  return out;
}

namespace {

// log of the unnormalized PCS weight |zeta^N / N!|^2
double pcs_log_weight(double x, int n) { return 2.0 * (n * std::log(x) - ln_factorial(n)); }

} // namespace

DiagonalCoeffs pcs_coeffs(std::complex<double> zeta, int cutoff, double tail_tol) {
  if (cutoff < 0) throw std::invalid_argument("pcs_coeffs: negative cutoff");
  const double x = std::abs(zeta);
  DiagonalCoeffs out;
  out.family = StateFamily::Pcs;
  out.parameter = zeta;
  out.c.resize(static_cast<std::size_t>(cutoff) + 1);
  if (x == 0.0) {
    out.c.assign(static_cast<std::size_t>(cutoff) + 1, {0.0, 0.0});
    out.c[0] = 1.0;
    out.tail_mass_bound = 0.0;
    return out;
  }
  // Ratio test: successive weights shrink by x^2/(N+1)^2, geometric once
  // the cutoff clears x. Below that no tail certificate exists.
  const double r = (x * x) / (static_cast<double>(cutoff + 1) * (cutoff + 1));
  if (r >= 1.0) {
    throw std::invalid_argument("pcs_coeffs: cutoff " + std::to_string(cutoff) +
                                " too small for |zeta| = " + std::to_string(x));
  }
  const double ln_norm = std::log(bessel_i0(2.0 * x)); // sum of unnormalized weights
  const double tail = std::exp(pcs_log_weight(x, cutoff) - ln_norm) * r / (1.0 - r);
  if (!(tail < tail_tol)) {
    throw std::invalid_argument("pcs_coeffs: cutoff too small for requested tail tolerance");
  }
  const double theta = std::arg(zeta);
  for (int n = 0; n <= cutoff; ++n) {
    const double mag = std::exp(0.5 * (pcs_log_weight(x, n) - ln_norm));
    out.c[static_cast<std::size_t>(n)] = std::polar(mag, theta * n);
  }
  out.tail_mass_bound = tail;
  return out;
}

int tmsvs_cutoff_for(std::complex<double> xi, double tail_tol) {
  const double a = std::abs(xi);
  if (!(a < 1.0)) throw std::invalid_argument("tmsvs_cutoff_for: |xi| must be < 1");
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tmsvs_cutoff_for: tolerance must be > 0");
  if (a == 0.0) return 0;
  const int k = static_cast<int>(std::ceil(std::log(tail_tol) / (2.0 * std::log(a)))) - 1;
  return std::max(k, 1);
}

int pcs_cutoff_for(std::complex<double> zeta, double tail_tol) {
  const double x = std::abs(zeta);
  if (!(tail_tol > 0.0)) throw std::invalid_argument("pcs_cutoff_for: tolerance must be > 0");
  if (x == 0.0) return 0;
  const double ln_norm = std::log(bessel_i0(2.0 * x));
  int k = static_cast<int>(std::ceil(2.0 * x)) + 4;
  for (;; k += 4) {
    const double r = (x * x) / (static_cast<double>(k + 1) * (k + 1));
    if (r >= 1.0) continue;
    const double last = std::exp(pcs_log_weight(x, k) - ln_norm);
    if (last < 1e-16 && last * r / (1.0 - r) < tail_tol) return k;
    if (k > 1000000) throw std::invalid_argument("pcs_cutoff_for: no cutoff found");
  }
}

std::vector<std::complex<double>> smsv_amplitudes(std::complex<double> xi, int sign, int cutoff) {
  const double a = std::abs(xi);
  if (!(a < 1.0)) throw std::invalid_argument("smsv_amplitudes: |xi| must be < 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("smsv_amplitudes: sign must be +-1");
  if (cutoff < 0) throw std::invalid_argument("smsv_amplitudes: negative cutoff");
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(cutoff) + 1, {0.0, 0.0});
  const double front = std::pow(1.0 - a * a, 0.25);
  const double theta = std::arg(xi);
  for (int m = 0; 2 * m <= cutoff; ++m) {
    double mag;
    if (m == 0) {
      mag = front;
    } else if (a == 0.0) {
      break;
    } else {
      const double ln_mag = 0.5 * ln_factorial(2 * m) - m * std::log(2.0) - ln_factorial(m) +
                            m * std::log(a);
      mag = front * std::exp(ln_mag);
    }
    const double s = (sign == -1 && m % 2 == 1) ? -1.0 : 1.0;
    amps[static_cast<std::size_t>(2 * m)] = std::polar(s * mag, theta * m);
  }
  return amps;
}

TwoModeState noon_state(int n, double big_phi, int cutoff) {
  if (n < 1) throw std::invalid_argument("noon_state: N must be >= 1");
  if (n > cutoff) throw std::invalid_argument("noon_state: N exceeds cutoff");
  TwoModeState state(cutoff);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  state.set_amplitude(n, 0, {inv_sqrt2, 0.0});
  state.set_amplitude(0, n, std::polar(inv_sqrt2, big_phi));
  return state;
}

double tmsvs_mean_total(std::complex<double> xi) {
  const double a = std::abs(xi);
  if (!(a < 1.0)) throw std::invalid_argument("tmsvs_mean_total: |xi| must be < 1");
  return 2.0 * a * a / (1.0 - a * a);
}

double pcs_mean_total(std::complex<double> zeta) {
  const double x = std::abs(zeta);
  if (x == 0.0) return 0.0;
  return 2.0 * x * bessel_i1(2.0 * x) / bessel_i0(2.0 * x);
}

double solve_param_for_mean(StateFamily family, double target_total_mean) {
  if (!std::isfinite(target_total_mean) || target_total_mean < 0.0) {
    throw std::invalid_argument("solve_param_for_mean: target must be finite and >= 0");
  }
  if (family == StateFamily::Tmsvs) {
    const double n_bar = 0.5 * target_total_mean;
    return std::sqrt(n_bar / (1.0 + n_bar));
  }
  if (family != StateFamily::Pcs) {
    throw std::invalid_argument("solve_param_for_mean: family has no mean map");
  }
  if (target_total_mean == 0.0) return 0.0;
  double lo = 0.0;
  double hi = 0.5 * target_total_mean + 2.0;
  const double tol = 1e-10 * (1.0 + target_total_mean);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double val = pcs_mean_total(mid);
    if (std::abs(val - target_total_mean) <= tol) return mid;
    (val < target_total_mean ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace mzparity
