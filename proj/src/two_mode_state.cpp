#include "mzparity/two_mode_state.hpp"

#include <cmath>
#include <stdexcept>

#include "mzparity/input_states.hpp"
#include "mzparity/kernels.hpp"

namespace mzparity {

TwoModeState::TwoModeState(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("TwoModeState: cutoff must be >= 0");
  const std::size_t n = dim() * dim();
  re_.assign(n, 0.0);
  im_.assign(n, 0.0);
}

std::complex<double> TwoModeState::amplitude(int na, int nb) const {
  const std::size_t idx = static_cast<std::size_t>(na) * dim() + nb;
  return {re_[idx], im_[idx]};
}

void TwoModeState::set_amplitude(int na, int nb, std::complex<double> v) {
  if (na < 0 || nb < 0 || na > cutoff_ || nb > cutoff_) {
    throw std::invalid_argument("TwoModeState: index outside grid");
  }
  const std::size_t idx = static_cast<std::size_t>(na) * dim() + nb;
  re_[idx] = v.real();
  im_[idx] = v.imag();
}

double TwoModeState::norm_sq() const {
  return kernels::active().norm_sq(re_.data(), im_.data(), re_.size());
}

TwoModeState from_diagonal(const DiagonalCoeffs& coeffs) {
  return from_diagonal(coeffs, coeffs.cutoff());
}

TwoModeState from_diagonal(const DiagonalCoeffs& coeffs, int grid_cutoff) {
  if (coeffs.c.empty()) throw std::invalid_argument("from_diagonal: empty coefficient list");
  if (grid_cutoff < coeffs.cutoff()) {
    throw std::invalid_argument("from_diagonal: grid cutoff below coefficient cutoff");
  }
  TwoModeState state(grid_cutoff);
  for (int n = 0; n <= coeffs.cutoff(); ++n) {
    state.set_amplitude(n, n, coeffs.c[static_cast<std::size_t>(n)]);
  }
  state.set_tail_mass_bound(coeffs.tail_mass_bound);
  return state;
}

TwoModeState product_state(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("product_state: empty amplitude vector");
  const int cutoff = static_cast<int>(std::max(a.size(), b.size())) - 1;
  TwoModeState state(cutoff);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == std::complex<double>{}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      state.set_amplitude(static_cast<int>(i), static_cast<int>(j), a[i] * b[j]);
    }
  }
  return state;
}

TwoModeState apply_phase(const TwoModeState& state, double phi) {
  TwoModeState out = state;
  const std::size_t d = state.dim();
  std::vector<double> cre(d), cim(d);
  for (std::size_t nb = 0; nb < d; ++nb) {
    cre[nb] = std::cos(phi * static_cast<double>(nb));
    cim[nb] = std::sin(phi * static_cast<double>(nb));
  }
  kernels::active().colwise_complex_scale(out.re().data(), out.im().data(), cre.data(), cim.data(),
                                          d, d);
  return out;
}

namespace {

// (-1)^{n_b} weights for one grid row.
std::vector<double> parity_signs(std::size_t d) {
  std::vector<double> s(d);
  for (std::size_t nb = 0; nb < d; ++nb) s[nb] = (nb % 2 == 0) ? 1.0 : -1.0;
  return s;
}

} // namespace

double parity_b(const TwoModeState& state) {
  const std::size_t d = state.dim();
  const auto signs = parity_signs(d);
  const auto& ops = kernels::active();
  double signed_sum = 0.0;
  for (std::size_t na = 0; na < d; ++na) {
    signed_sum += ops.weighted_abs2_sum(state.re().data() + na * d, state.im().data() + na * d,
                                        signs.data(), d);
  }
  const double total = state.norm_sq();
  if (total <= 0.0) throw std::invalid_argument("parity_b: zero state");
  return signed_sum / total;
}

std::complex<double> parity_b_expectation(const TwoModeState& state) {
  TwoModeState flipped = state;
  const std::size_t d = state.dim();
  const auto signs = parity_signs(d);
  for (std::size_t na = 0; na < d; ++na) {
    double* pr = flipped.re().data() + na * d;
    double* pi = flipped.im().data() + na * d;
    for (std::size_t nb = 0; nb < d; ++nb) {
      pr[nb] *= signs[nb];
      pi[nb] *= signs[nb];
    }
  }
  double rr = 0.0, ii = 0.0;
  kernels::active().complex_dot(state.re().data(), state.im().data(), flipped.re().data(),
                                flipped.im().data(), d * d, &rr, &ii);
  const double total = state.norm_sq();
  if (total <= 0.0) throw std::invalid_argument("parity_b_expectation: zero state");
  return {rr / total, ii / total};
}

double JointDistribution::sum() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

JointDistribution joint_distribution(const TwoModeState& state) {
  JointDistribution out;
  out.cutoff = state.cutoff();
  const std::size_t n = state.dim() * state.dim();
  out.p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = state.re()[i] * state.re()[i] + state.im()[i] * state.im()[i];
    out.p[i] = v < 0.0 ? 0.0 : v;
  }
  return out;
}

ModeStats mode_stats(const TwoModeState& state, Mode mode) {
  const std::size_t d = state.dim();
  const auto& ops = kernels::active();
  std::vector<double> marginal(d, 0.0);
  if (mode == Mode::A) {
    for (std::size_t na = 0; na < d; ++na) {
      marginal[na] = ops.norm_sq(state.re().data() + na * d, state.im().data() + na * d, d);
    }
  } else {
    for (std::size_t na = 0; na < d; ++na) {
      const double* pr = state.re().data() + na * d;
      const double* pi = state.im().data() + na * d;
      for (std::size_t nb = 0; nb < d; ++nb) {
        marginal[nb] += pr[nb] * pr[nb] + pi[nb] * pi[nb];
      }
    }
  }
  double total = 0.0, mean = 0.0, second = 0.0;
  for (std::size_t n = 0; n < d; ++n) {
    total += marginal[n];
    mean += static_cast<double>(n) * marginal[n];
    second += static_cast<double>(n) * static_cast<double>(n) * marginal[n];
  }
  if (total <= 0.0) throw std::invalid_argument("mode_stats: zero state");
  mean /= total;
  second /= total;
  const double variance = second - mean * mean;
  if (mean == 0.0) {
    throw std::domain_error("mode_stats: Mandel Q undefined for a vacuum marginal (mean = 0)");
  }
  return {mean, variance, variance / mean - 1.0};
}

double fidelity(const TwoModeState& s1, const TwoModeState& s2) {
  if (s1.cutoff() != s2.cutoff()) {
    throw std::invalid_argument("fidelity: cutoff mismatch");
  }
  double rr = 0.0, ii = 0.0;
  kernels::active().complex_dot(s1.re().data(), s1.im().data(), s2.re().data(), s2.im().data(),
                                s1.dim() * s1.dim(), &rr, &ii);
  return rr * rr + ii * ii;
}

TwoModeState apply_pair_lowering(const TwoModeState& state) {
  const int c = state.cutoff();
  TwoModeState out(c);
  out.set_tail_mass_bound(state.tail_mass_bound());
  for (int na = 0; na < c; ++na) {
    for (int nb = 0; nb < c; ++nb) {
      const double f = std::sqrt(static_cast<double>(na + 1) * (nb + 1));
      out.set_amplitude(na, nb, f * state.amplitude(na + 1, nb + 1));
    }
  }
  return out;
}

} // namespace mzparity
