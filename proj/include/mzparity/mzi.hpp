#pragma once

#include <complex>

#include "mzparity/beam_splitter.hpp"
#include "mzparity/input_states.hpp"
#include "mzparity/two_mode_state.hpp"

namespace mzparity {

/// Brute-force interferometer: first beam splitter (no reflection phase),
/// phase shift on mode b, second beam splitter (pi/2 reflection phase),
/// parity on mode b. Exact when the state grid holds every occupied total
/// photon block, which the from_coeffs helper guarantees.
double mzi_parity(const TwoModeState& input, double phi);
double mzi_parity(const TwoModeState& input, double phi, const BeamSplitterBlocks& blocks);

/// Diagonal input lifted onto a grid of cutoff 2 * coefficient cutoff, so
/// beam splitting never truncates.
TwoModeState mzi_input_from_coeffs(const DiagonalCoeffs& coeffs);

/// Numerical phase uncertainty: sqrt(1 - <Pi>^2) over a central-difference
/// estimate of d<Pi>/dphi with step h. Throws divergence_error when the
/// derivative estimate is below the noise floor. Requires 0 < h <= 1e-3.
double mzi_phase_uncertainty_fd(const TwoModeState& input, double phi, double h);
double mzi_phase_uncertainty_fd(const TwoModeState& input, double phi, double h,
                                const BeamSplitterBlocks& blocks);

/// Overlap between the beam-split two-mode squeezed vacuum and the product
/// of single-mode squeezed vacua it should factor into. Returns the
/// fidelity |<product|BS1 tmsvs>|^2.
double disentanglement_fidelity(std::complex<double> xi, int coeff_cutoff);

} // namespace mzparity
