#pragma once

#include <span>

#include "mzparity/input_states.hpp"
#include "mzparity/two_mode_state.hpp"

namespace mzparity {

/// Parity expectation value and its derivative with respect to the phase.
struct ParityResult {
  double value;
  double derivative_wrt_phi;
};

struct PhaseUncertainty {
  double delta_phi;
  double delta_pi;   // sqrt(1 - <Pi>^2)
  double derivative; // d<Pi>/dphi
};

/// Post-beam-splitter amplitude of a twin-Fock input on |2k, 2N-2k>:
/// 2^{-N} (-1)^{N-k} sqrt(C(2k,k) C(2N-2k,N-k)), evaluated in log
/// magnitude + sign form.
double arcsine_coeff(int big_n, int k);

/// Discrete arcsine law: P(2k, 2N-2k) = (1/4)^N C(2k,k) C(2N-2k,N-k).
double arcsine_joint(int big_n, int k);

/// Twin-Fock parity through the interferometer: P_N(cos 2phi).
ParityResult parity_twin_fock(int n, double phi);

/// Diagonal superposition parity: sum_N |C_N|^2 P_N(cos 2phi), truncated at
/// the coefficient cutoff (truncation error bounded by the tail mass since
/// |P_N| <= 1). Derivative is analytic via the Legendre derivative
/// recurrence.
ParityResult parity_superposition(const DiagonalCoeffs& coeffs, double phi);
ParityResult parity_superposition(std::span<const double> weights, double phi);

/// Bulk evaluation over a phase grid (single recurrence pass per point).
void parity_superposition_grid(std::span<const double> weights, std::span<const double> phis,
                               std::span<double> values, std::span<double> derivatives);

/// N00N-state parity: (-1)^{N/2} cos(N phi + Phi) for even N,
/// (-1)^{(N+1)/2} sin(N phi + Phi) for odd N.
double parity_noon(int n, double big_phi, double phi);

/// Entangled-coherent-state parity:
/// exp(-nbar (1 - cos phi)) / (1 + exp(-nbar)) * cos(nbar sin phi).
double parity_ecs(double n_bar, double phi);

/// Delta phi = sqrt(1 - <Pi>^2) / |d<Pi>/dphi|. Throws divergence_error at
/// a stationary point and at phi = 0 exactly, where the ratio is undefined.
PhaseUncertainty phase_uncertainty(const DiagonalCoeffs& coeffs, double phi);

/// <Pi>/sqrt(1 - <Pi>^2); throws divergence_error when the noise vanishes.
double snr(const DiagonalCoeffs& coeffs, double phi);

/// Joint photon-number distribution after the first beam splitter:
/// P(2k, 2m) = |C_{k+m}|^2 arcsine_joint(k+m, k), on a grid of cutoff
/// 2 * coefficient cutoff.
JointDistribution joint_after_bs(const DiagonalCoeffs& coeffs);

/// Reference lines, as functions of the total photon number.
double sql(double total_n); // 1/sqrt(total)
double hl(double total_n);  // 1/total

} // namespace mzparity
