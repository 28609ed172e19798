#pragma once

#include <complex>
#include <vector>

#include "mzparity/two_mode_state.hpp"

namespace mzparity {

enum class StateFamily { TwinFock, Tmsvs, Pcs, Custom };

/// Coefficients C_0..C_cutoff of a diagonal twin-Fock superposition
/// sum_N C_N |N>|N>, with a declared bound on the truncated tail mass.
struct DiagonalCoeffs {
  std::vector<std::complex<double>> c;
  StateFamily family = StateFamily::Custom;
  std::complex<double> parameter{0.0, 0.0};
  double tail_mass_bound = 0.0;

  int cutoff() const { return static_cast<int>(c.size()) - 1; }

  /// |C_N|^2 for N = 0..cutoff.
  std::vector<double> probabilities() const;
};

/// Delta sequence at N: the twin-Fock state |N>|N>. Exact (tail bound 0).
DiagonalCoeffs twin_fock_coeffs(int n, int cutoff);

/// Two-mode squeezed vacuum: C_N = sqrt(1-|xi|^2) xi^N, |xi| < 1.
/// Tail bound is the exact geometric remainder |xi|^{2(cutoff+1)}.
DiagonalCoeffs tmsvs_coeffs(std::complex<double> xi, int cutoff);

/// Pair coherent state: C_N = zeta^N / (N! sqrt(I0(2|zeta|))). The tail
/// bound comes from the ratio test; throws if the cutoff is too small to
/// certify the requested tail tolerance.
DiagonalCoeffs pcs_coeffs(std::complex<double> zeta, int cutoff, double tail_tol = 1e-12);

/// Smallest cutoffs whose declared tail bound is below tail_tol.
int tmsvs_cutoff_for(std::complex<double> xi, double tail_tol);
int pcs_cutoff_for(std::complex<double> zeta, double tail_tol);

/// Single-mode squeezed vacuum amplitudes: the entry at |2m> equals
/// (1-|xi|^2)^{1/4} (sign)^m sqrt((2m)!)/(2^m m!) xi^m; odd entries are 0.
std::vector<std::complex<double>> smsv_amplitudes(std::complex<double> xi, int sign, int cutoff);

/// (|N,0> + e^{i Phi} |0,N>)/sqrt(2).
TwoModeState noon_state(int n, double big_phi, int cutoff);

/// Total mean photon number maps.
double tmsvs_mean_total(std::complex<double> xi); // 2|xi|^2/(1-|xi|^2)
double pcs_mean_total(std::complex<double> zeta); // 2|z| I1(2|z|)/I0(2|z|)

/// Invert the mean map for a real nonnegative parameter: closed form for
/// TMSVS, bisection on the monotone Bessel-ratio map for PCS. The achieved
/// mean matches the target to 1e-10 * (1 + target).
double solve_param_for_mean(StateFamily family, double target_total_mean);

} // namespace mzparity
