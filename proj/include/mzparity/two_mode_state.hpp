#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mzparity {

struct DiagonalCoeffs;

/// Two-mode bosonic state on a truncated Fock grid, amplitudes psi(n_a, n_b)
/// for 0 <= n_a, n_b <= cutoff. Stored as split real/imaginary planes,
/// row-major with n_b fastest. Library operations never mutate their input;
/// they return new states.
class TwoModeState {
public:
  explicit TwoModeState(int cutoff);

  int cutoff() const { return cutoff_; }
  std::size_t dim() const { return static_cast<std::size_t>(cutoff_) + 1; }

  std::complex<double> amplitude(int na, int nb) const;
  void set_amplitude(int na, int nb, std::complex<double> v);

  /// Declared upper bound on probability mass discarded by truncation.
  double tail_mass_bound() const { return tail_; }
  void set_tail_mass_bound(double t) { tail_ = t; }

  double norm_sq() const;

  std::span<const double> re() const { return re_; }
  std::span<const double> im() const { return im_; }
  std::span<double> re() { return re_; }
  std::span<double> im() { return im_; }

private:
  int cutoff_;
  double tail_ = 0.0;
  std::vector<double> re_, im_;
};

/// Diagonal superposition sum_N C_N |N>|N> on a grid of the given cutoff
/// (defaults to the coefficient cutoff). Rejects empty coefficient lists.
TwoModeState from_diagonal(const DiagonalCoeffs& coeffs);
TwoModeState from_diagonal(const DiagonalCoeffs& coeffs, int grid_cutoff);

/// Product state a (x) b from single-mode amplitude vectors (both are
/// truncated to the resulting grid cutoff = max length - 1).
TwoModeState product_state(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b);

/// psi(n_a, n_b) <- exp(i phi n_b) psi(n_a, n_b).
TwoModeState apply_phase(const TwoModeState& state, double phi);

/// Expectation of (-1)^{n_b}, normalized by the captured probability.
double parity_b(const TwoModeState& state);

/// Same observable evaluated as the complex inner product <psi|Pi_b psi>;
/// the imaginary part is a numerical residue that should vanish.
std::complex<double> parity_b_expectation(const TwoModeState& state);

/// P(n1, n2) = |psi(n1, n2)|^2, entries clamped to >= 0.
struct JointDistribution {
  int cutoff = 0;
  std::vector<double> p; // row-major, (cutoff+1)^2

  double at(int n1, int n2) const { return p[static_cast<std::size_t>(n1) * (cutoff + 1) + n2]; }
  double sum() const;
};

JointDistribution joint_distribution(const TwoModeState& state);

enum class Mode { A, B };

struct ModeStats {
  double mean;
  double variance;
  double mandel_q; // variance/mean - 1
};

/// Marginal photon-number statistics of one mode, normalized by captured
/// probability. Throws std::domain_error for a vacuum marginal (mean = 0),
/// where Q is undefined.
ModeStats mode_stats(const TwoModeState& state, Mode mode);

/// |<s1|s2>|^2; requires equal cutoffs.
double fidelity(const TwoModeState& s1, const TwoModeState& s2);

/// Apply the two-mode lowering product a b:
/// psi'(n_a, n_b) = sqrt((n_a+1)(n_b+1)) psi(n_a+1, n_b+1).
TwoModeState apply_pair_lowering(const TwoModeState& state);

} // namespace mzparity
