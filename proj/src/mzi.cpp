#include "mzparity/mzi.hpp"

#include <cmath>
#include <stdexcept>

#include "mzparity/errors.hpp"

namespace mzparity {

double mzi_parity(const TwoModeState& input, double phi) {
  const auto after_bs1 = apply_beam_splitter(input, BeamSplitterKind::First);
  const auto shifted = apply_phase(after_bs1, phi);
  const auto after_bs2 = apply_beam_splitter(shifted, BeamSplitterKind::Second);
  return parity_b(after_bs2);
}

double mzi_parity(const TwoModeState& input, double phi, const BeamSplitterBlocks& blocks) {
  const auto after_bs1 = apply_beam_splitter(input, BeamSplitterKind::First, blocks);
  const auto shifted = apply_phase(after_bs1, phi);
  const auto after_bs2 = apply_beam_splitter(shifted, BeamSplitterKind::Second, blocks);
  return parity_b(after_bs2);
}

TwoModeState mzi_input_from_coeffs(const DiagonalCoeffs& coeffs) {
  return from_diagonal(coeffs, 2 * coeffs.cutoff());
}

namespace {

double uncertainty_from_parities(double p0, double p_plus, double p_minus, double h) {
  const double deriv = (p_plus - p_minus) / (2.0 * h);
  if (std::abs(deriv) < 1e-10) {
    throw divergence_error("mzi_phase_uncertainty_fd: derivative estimate below noise floor");
  }
  const double dp2 = 1.0 - p0 * p0;
  return std::sqrt(dp2 > 0.0 ? dp2 : 0.0) / std::abs(deriv);
}

void check_step(double h) {
  if (!(h > 0.0) || h > 1e-3) {
    throw std::invalid_argument("mzi_phase_uncertainty_fd: step must satisfy 0 < h <= 1e-3");
  }
}

} // namespace

double mzi_phase_uncertainty_fd(const TwoModeState& input, double phi, double h) {
  check_step(h);
  if (2 * input.cutoff() <= 512) {
    const BeamSplitterBlocks blocks(2 * input.cutoff());
    return mzi_phase_uncertainty_fd(input, phi, h, blocks);
  }
  return uncertainty_from_parities(mzi_parity(input, phi), mzi_parity(input, phi + h),
                                   mzi_parity(input, phi - h), h);
}

double mzi_phase_uncertainty_fd(const TwoModeState& input, double phi, double h,
                                const BeamSplitterBlocks& blocks) {
  check_step(h);
  return uncertainty_from_parities(mzi_parity(input, phi, blocks),
                                   mzi_parity(input, phi + h, blocks),
                                   mzi_parity(input, phi - h, blocks), h);
}

double disentanglement_fidelity(std::complex<double> xi, int coeff_cutoff) {
  const auto coeffs = tmsvs_coeffs(xi, coeff_cutoff);
  const auto input = mzi_input_from_coeffs(coeffs);
  const auto after_bs1 = apply_beam_splitter(input, BeamSplitterKind::First);
  const int grid = input.cutoff();
  const auto mode_a = smsv_amplitudes(xi, +1, grid);
  const auto mode_b = smsv_amplitudes(xi, -1, grid);
  return fidelity(product_state(mode_a, mode_b), after_bs1);
}

} // namespace mzparity
