#include "mzparity/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mzparity/errors.hpp"
#include "mzparity/kernels.hpp"
#include "mzparity/special_functions.hpp"

namespace mzparity {

double arcsine_coeff(int big_n, int k) {
  if (big_n < 0 || k < 0) throw std::invalid_argument("arcsine_coeff: negative argument");
  if (k > big_n) throw std::invalid_argument("arcsine_coeff: k exceeds N");
  const double ln_mag = -big_n * std::log(2.0) +
                        0.5 * (ln_binomial(2 * k, k) + ln_binomial(2 * (big_n - k), big_n - k));
  const double sign = ((big_n - k) % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(ln_mag);
}

double arcsine_joint(int big_n, int k) {
  if (big_n < 0 || k < 0) throw std::invalid_argument("arcsine_joint: negative argument");
  if (k > big_n) throw std::invalid_argument("arcsine_joint: k exceeds N");
  return std::exp(-2.0 * big_n * std::log(2.0) + ln_binomial(2 * k, k) +
                  ln_binomial(2 * (big_n - k), big_n - k));
}

ParityResult parity_twin_fock(int n, double phi) {
  const auto ev = legendre(n, std::cos(2.0 * phi));
  return {ev.value, -2.0 * std::sin(2.0 * phi) * ev.derivative};
}

ParityResult parity_superposition(std::span<const double> weights, double phi) {
  double value = 0.0, deriv = 0.0;
  const double x = std::cos(2.0 * phi);
  kernels::active().legendre_weighted_sum(weights.data(), weights.size(), &x, 1, &value, &deriv);
  return {value, -2.0 * std::sin(2.0 * phi) * deriv};
}

ParityResult parity_superposition(const DiagonalCoeffs& coeffs, double phi) {
  return parity_superposition(coeffs.probabilities(), phi);
}

void parity_superposition_grid(std::span<const double> weights, std::span<const double> phis,
                               std::span<double> values, std::span<double> derivatives) {
  if (values.size() != phis.size() || derivatives.size() != phis.size()) {
    throw std::invalid_argument("parity_superposition_grid: output size mismatch");
  }
  std::vector<double> x(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) x[i] = std::cos(2.0 * phis[i]);
  kernels::active().legendre_weighted_sum(weights.data(), weights.size(), x.data(), x.size(),
                                          values.data(), derivatives.data());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    derivatives[i] *= -2.0 * std::sin(2.0 * phis[i]);
  }
}

double parity_noon(int n, double big_phi, double phi) {
  if (n < 1) throw std::invalid_argument("parity_noon: N must be >= 1");
  if (n % 2 == 0) {
    const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::cos(n * phi + big_phi);
  }
  const double sign = ((n + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::sin(n * phi + big_phi);
}

double parity_ecs(double n_bar, double phi) {
  if (!(n_bar >= 0.0)) throw std::invalid_argument("parity_ecs: n_bar must be >= 0");
  return std::exp(-n_bar * (1.0 - std::cos(phi))) / (1.0 + std::exp(-n_bar)) *
         std::cos(n_bar * std::sin(phi));
}

PhaseUncertainty phase_uncertainty(const DiagonalCoeffs& coeffs, double phi) {
  if (phi == 0.0) {
    throw divergence_error("phase_uncertainty: undefined at phi = 0 (use a small offset)");
  }
  const auto parity = parity_superposition(coeffs, phi);
  if (std::abs(parity.derivative_wrt_phi) < 1e-300) {
    throw divergence_error("phase_uncertainty: stationary fringe point, uncertainty diverges");
  }
  const double dp2 = 1.0 - parity.value * parity.value;
  const double delta_pi = std::sqrt(dp2 > 0.0 ? dp2 : 0.0);
  return {delta_pi / std::abs(parity.derivative_wrt_phi), delta_pi, parity.derivative_wrt_phi};
}

double snr(const DiagonalCoeffs& coeffs, double phi) {
  const auto parity = parity_superposition(coeffs, phi);
  const double dp2 = 1.0 - parity.value * parity.value;
  if (!(dp2 > 0.0)) {
    throw divergence_error("snr: parity noise vanishes, SNR diverges");
  }
  return parity.value / std::sqrt(dp2);
}

JointDistribution joint_after_bs(const DiagonalCoeffs& coeffs) {
  if (coeffs.c.empty()) throw std::invalid_argument("joint_after_bs: empty coefficient list");
  const int kcut = coeffs.cutoff();
  JointDistribution out;
  out.cutoff = 2 * kcut;
  const std::size_t dim = static_cast<std::size_t>(out.cutoff) + 1;
  out.p.assign(dim * dim, 0.0);
  const auto w = coeffs.probabilities();
  for (int n = 0; n <= kcut; ++n) {
    if (w[static_cast<std::size_t>(n)] == 0.0) continue;
    for (int k = 0; k <= n; ++k) {
      // each (n1, n2) = (2k, 2n-2k) receives exactly one (N, k) term
      out.p[static_cast<std::size_t>(2 * k) * dim + static_cast<std::size_t>(2 * (n - k))] =
          w[static_cast<std::size_t>(n)] * arcsine_joint(n, k);
    }
  }
  return out;
}

double sql(double total_n) {
  if (!(total_n > 0.0)) throw std::invalid_argument("sql: total photon number must be > 0");
  return 1.0 / std::sqrt(total_n);
}

double hl(double total_n) {
  if (!(total_n > 0.0)) throw std::invalid_argument("hl: total photon number must be > 0");
  return 1.0 / total_n;
}

} // namespace mzparity
