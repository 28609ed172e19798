#include "mzparity/verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>
#include <vector>

#include "mzparity/beam_splitter.hpp"
#include "mzparity/closed_form.hpp"
#include "mzparity/input_states.hpp"
#include "mzparity/mzi.hpp"
#include "mzparity/special_functions.hpp"
#include "mzparity/two_mode_state.hpp"

namespace mzparity {

namespace {

constexpr double kPhiProbe[] = {1e-4, 0.01, 0.05, 0.1, 0.3};

// Explicit-coefficient Legendre sum, independent of the recurrence path:
// P_n(x) = sum_k C(n,k)^2 ((x-1)/2)^{n-k} ((x+1)/2)^k, in long double with
// exact Pascal-row binomials.
long double legendre_sum_oracle(int n, long double x) {
  std::vector<long double> row(static_cast<std::size_t>(n) + 1, 1.0L);
  for (int i = 1; i <= n; ++i) {
    for (int k = i - 1; k >= 1; --k) {
      row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k - 1)];
    }
  }
  const long double a = 0.5L * (x - 1.0L);
  const long double b = 0.5L * (x + 1.0L);
  long double sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    const long double c = row[static_cast<std::size_t>(k)];
    sum += c * c * std::pow(a, static_cast<long double>(n - k)) *
           std::pow(b, static_cast<long double>(k));
  }
  return sum;
}

long double bessel_series_oracle(int order, long double x) {
  const long double q = 0.25L * x * x;
  long double term = order == 0 ? 1.0L : 0.5L * x;
  long double sum = term;
  for (int k = 1; k < 2000; ++k) {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (term < 1e-22L * sum) break;
  }
  return sum;
}

CheckResult make_result(std::string name, double observed, double threshold, std::string detail,
                        bool larger_is_worse = true) {
  const bool pass = larger_is_worse ? observed <= threshold : observed >= threshold;
  return {std::move(name), pass, observed, threshold, std::move(detail)};
}

CheckResult check_legendre_closed_form() {
  double worst = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (double x = -1.0; x <= 1.0 + 1e-12; x += 0.1) {
      const double xc = std::clamp(x, -1.0, 1.0);
      const double got = legendre(n, xc).value;
      const double want = static_cast<double>(legendre_sum_oracle(n, xc));
      worst = std::max(worst, std::abs(got - want));
    }
  }
  return make_result("legendre vs explicit-coefficient sum (n <= 20)", worst, 1e-11, "");
}

CheckResult check_legendre_derivative_fd() {
  double worst = 0.0;
  const double h = 1e-6;
  for (int n = 0; n <= 30; ++n) {
    for (double x = -0.99; x <= 0.99 + 1e-12; x += 0.03) {
      const double fd = (legendre(n, x + h).value - legendre(n, x - h).value) / (2.0 * h);
      worst = std::max(worst, std::abs(legendre(n, x).derivative - fd));
    }
  }
  return make_result("legendre derivative vs central difference (n <= 30)", worst, 1e-5, "");
}

CheckResult check_bessel() {
  double worst = 0.0;
  const double grid[] = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 29.9, 30.1, 50.0, 120.0, 200.0};
  for (const double x : grid) {
    for (int order = 0; order <= 1; ++order) {
      const double got = bessel_i(order, x);
      const double want = static_cast<double>(bessel_series_oracle(order, x));
      const double denom = std::max(1.0, std::abs(want));
      worst = std::max(worst, std::abs(got - want) / denom);
    }
  }
  // Ratio map must be monotone for the mean-map bisection.
  double prev_ratio = -1.0;
  bool monotone = true;
  for (double x = 0.25; x <= 60.0; x += 0.25) {
    const double ratio = bessel_i1(x) / bessel_i0(x);
    monotone = monotone && ratio > prev_ratio;
    prev_ratio = ratio;
  }
  auto res = make_result("bessel I0/I1 vs long-double series", worst, 1e-12,
                         monotone ? "" : "I1/I0 not increasing");
  res.pass = res.pass && monotone;
  return res;
}

CheckResult check_unitarity() {
  const int max_total = 40;
  const BeamSplitterBlocks blocks(max_total);
  double worst = 0.0;
  for (int total = 0; total <= max_total; ++total) {
    const auto mat = blocks.block(total);
    const std::size_t dim = static_cast<std::size_t>(total) + 1;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i; j < dim; ++j) {
        double dot = 0.0;
        for (std::size_t m = 0; m < dim; ++m) dot += mat[m * dim + i] * mat[m * dim + j];
        worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  return make_result("beam-splitter block orthonormality (N <= 40)", worst, 1e-12, "");
}

CheckResult check_norm_and_conservation() {
  // A dense, non-symmetric test state.
  const int cutoff = 24;
  TwoModeState state(cutoff);
  double seed = 0.3;
  for (int na = 0; na <= cutoff; ++na) {
    for (int nb = 0; nb <= cutoff; ++nb) {
      seed = std::fmod(seed * 997.0 + 71.1, 1.0);
      const double re = seed - 0.5;
      seed = std::fmod(seed * 997.0 + 71.1, 1.0);
      const double im = seed - 0.5;
      state.set_amplitude(na, nb, {re, im});
    }
  }
  const double scale = 1.0 / std::sqrt(state.norm_sq());
  for (int na = 0; na <= cutoff; ++na) {
    for (int nb = 0; nb <= cutoff; ++nb) {
      state.set_amplitude(na, nb, scale * state.amplitude(na, nb));
    }
  }

  auto block_norms = [cutoff](const TwoModeState& s) {
    std::vector<double> norms(static_cast<std::size_t>(2 * cutoff) + 1, 0.0);
    for (int na = 0; na <= cutoff; ++na) {
      for (int nb = 0; nb <= cutoff; ++nb) {
        norms[static_cast<std::size_t>(na + nb)] += std::norm(s.amplitude(na, nb));
      }
    }
    return norms;
  };

  double worst = 0.0;
  const auto before = block_norms(state);
  for (const auto kind : {BeamSplitterKind::First, BeamSplitterKind::Second}) {
    const auto out = apply_beam_splitter(state, kind);
    worst = std::max(worst, std::abs(out.norm_sq() + out.tail_mass_bound() - 1.0));
    const auto after = block_norms(out);
    for (std::size_t t = 0; t <= static_cast<std::size_t>(cutoff); ++t) {
      // fully representable blocks keep their mass exactly
      worst = std::max(worst, std::abs(after[t] - before[t]));
    }
  }
  const auto phased = apply_phase(state, 0.7331);
  worst = std::max(worst, std::abs(phased.norm_sq() - 1.0));
  return make_result("norm preservation and total-photon conservation", worst, 1e-12, "");
}

CheckResult check_parity_equivalence(const VerifyOptions& opt) {
  double worst = 0.0;
  std::ostringstream detail;
  // twin-Fock against the Legendre closed form
  {
    const BeamSplitterBlocks blocks(std::min(2 * opt.max_n, 512));
    for (int n = 1; n <= opt.max_n; ++n) {
      const auto input = mzi_input_from_coeffs(twin_fock_coeffs(n, n));
      for (const double phi : kPhiProbe) {
        const double got = mzi_parity(input, phi, blocks);
        const double want = parity_twin_fock(n, phi).value;
        worst = std::max(worst, std::abs(got - want));
      }
    }
  }
  // superpositions against the weighted Legendre sum
  for (const char* family : {"tmsvs", "pcs"}) {
    for (const double mean : {2.0, 4.0, 10.0}) {
      DiagonalCoeffs coeffs;
      if (std::string(family) == "tmsvs") {
        const double xi = solve_param_for_mean(StateFamily::Tmsvs, mean);
        coeffs = tmsvs_coeffs(xi, tmsvs_cutoff_for(xi, 1e-10));
      } else {
        const double zeta = solve_param_for_mean(StateFamily::Pcs, mean);
        coeffs = pcs_coeffs(zeta, pcs_cutoff_for(zeta, 1e-12));
      }
      const auto input = mzi_input_from_coeffs(coeffs);
      const double allowance = 10.0 * coeffs.tail_mass_bound;
      for (const double phi : kPhiProbe) {
        const double got = mzi_parity(input, phi);
        const double want = parity_superposition(coeffs, phi).value;
        const double err = std::abs(got - want);
        worst = std::max(worst, err > allowance ? err - allowance : 0.0);
      }
    }
  }
  return make_result("analytic parity vs brute-force propagation", worst, opt.tolerance,
                     detail.str());
}

CheckResult check_derivative_consistency() {
  double worst_rel = 0.0;
  const double h = 1e-6;
  std::vector<DiagonalCoeffs> cases;
  cases.push_back(twin_fock_coeffs(5, 5));
  {
    const double xi = solve_param_for_mean(StateFamily::Tmsvs, 4.0);
    cases.push_back(tmsvs_coeffs(xi, tmsvs_cutoff_for(xi, 1e-12)));
    const double zeta = solve_param_for_mean(StateFamily::Pcs, 4.0);
    cases.push_back(pcs_coeffs(zeta, pcs_cutoff_for(zeta, 1e-12)));
  }
  for (const auto& coeffs : cases) {
    for (double phi = 0.02; phi < 1.55; phi += 0.05) {
      const auto parity = parity_superposition(coeffs, phi);
      if (std::abs(parity.derivative_wrt_phi) <= 1e-3) continue;
      const double fd = (parity_superposition(coeffs, phi + h).value -
                         parity_superposition(coeffs, phi - h).value) /
                        (2.0 * h);
      worst_rel = std::max(worst_rel, std::abs(parity.derivative_wrt_phi - fd) /
                                          std::abs(parity.derivative_wrt_phi));
    }
  }
  return make_result("parity derivative vs central difference", worst_rel, 1e-4, "");
}

CheckResult check_disentanglement() {
  double worst_deficit = 0.0;
  for (const double xi : {0.3, 0.5, 0.8}) {
    const double fid = disentanglement_fidelity(xi, tmsvs_cutoff_for(xi, 1e-10));
    worst_deficit = std::max(worst_deficit, 1.0 - fid);
  }
  return make_result("squeezed-vacuum factorization fidelity", worst_deficit, 1e-6, "");
}

CheckResult check_joint_equivalence() {
  double worst = 0.0;
  for (const char* family : {"twin-fock", "tmsvs", "pcs"}) {
    DiagonalCoeffs coeffs;
    if (std::string(family) == "twin-fock") {
      coeffs = twin_fock_coeffs(6, 6);
    } else if (std::string(family) == "tmsvs") {
      const double xi = solve_param_for_mean(StateFamily::Tmsvs, 12.0);
      coeffs = tmsvs_coeffs(xi, tmsvs_cutoff_for(xi, 1e-10));
    } else {
      const double zeta = solve_param_for_mean(StateFamily::Pcs, 12.0);
      coeffs = pcs_coeffs(zeta, pcs_cutoff_for(zeta, 1e-12));
    }
    const auto analytic = joint_after_bs(coeffs);
    const auto propagated =
        joint_distribution(apply_beam_splitter(mzi_input_from_coeffs(coeffs), BeamSplitterKind::First));
    const int dim = analytic.cutoff + 1;
    for (int n1 = 0; n1 < dim; ++n1) {
      for (int n2 = 0; n2 < dim; ++n2) {
        worst = std::max(worst, std::abs(analytic.at(n1, n2) - propagated.at(n1, n2)));
      }
    }
    worst = std::max(worst, std::abs(analytic.sum() - 1.0) - coeffs.tail_mass_bound);
  }
  return make_result("post-splitter joint distribution, formula vs propagation", worst, 1e-10, "");
}

CheckResult check_pcs_eigenvalue() {
  double worst = 0.0;
  const std::complex<double> zetas[] = {{0.5, 0.0}, {2.0, 0.0}, {6.0, 0.0}, {3.0, 4.0}};
  for (const auto zeta : zetas) {
    const auto coeffs = pcs_coeffs(zeta, pcs_cutoff_for(zeta, 1e-26), 1e-24);
    const auto state = from_diagonal(coeffs);
    const auto lowered = apply_pair_lowering(state);
    double residual_sq = 0.0;
    for (int na = 0; na <= state.cutoff(); ++na) {
      for (int nb = 0; nb <= state.cutoff(); ++nb) {
        residual_sq += std::norm(lowered.amplitude(na, nb) - zeta * state.amplitude(na, nb));
      }
    }
    worst = std::max(worst, std::sqrt(residual_sq));
  }
  return make_result("pair-coherent lowering eigenvalue residual", worst, 1e-10, "");
}

CheckResult check_arcsine_identity() {
  double worst = 0.0;
  for (int n = 0; n <= 100; ++n) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double a = arcsine_coeff(n, k);
      const double joint = arcsine_joint(n, k);
      worst = std::max(worst, std::abs(a * a - joint));
      sum += joint;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return make_result("arcsine amplitude/distribution identity (N <= 100)", worst, 1e-12, "");
}

CheckResult check_parity_realness() {
  const double zeta = solve_param_for_mean(StateFamily::Pcs, 6.0);
  const auto coeffs = pcs_coeffs(zeta, pcs_cutoff_for(zeta, 1e-12));
  const auto input = mzi_input_from_coeffs(coeffs);
  const auto after_bs1 = apply_beam_splitter(input, BeamSplitterKind::First);
  const auto shifted = apply_phase(after_bs1, 0.17);
  const auto after_bs2 = apply_beam_splitter(shifted, BeamSplitterKind::Second);
  const auto expectation = parity_b_expectation(after_bs2);
  double worst = std::abs(expectation.imag());
  worst = std::max(worst, std::abs(expectation.real() - parity_b(after_bs2)));
  return make_result("parity expectation imaginary residue", worst, 1e-12, "");
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  results.push_back(check_legendre_closed_form());
  results.push_back(check_legendre_derivative_fd());
  results.push_back(check_bessel());
  results.push_back(check_unitarity());
  results.push_back(check_norm_and_conservation());
  results.push_back(check_arcsine_identity());
  results.push_back(check_parity_equivalence(options));
  results.push_back(check_derivative_consistency());
  results.push_back(check_disentanglement());
  results.push_back(check_joint_equivalence());
  results.push_back(check_pcs_eigenvalue());
  results.push_back(check_parity_realness());
  return results;
}

bool all_passed(std::span<const CheckResult> results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

void print_check_table(std::ostream& os, std::span<const CheckResult> results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    for (std::size_t i = r.name.size(); i < width + 2; ++i) os << ' ';
    std::ostringstream nums;
    nums.precision(3);
    nums << std::scientific << "worst " << r.observed << "  limit " << r.threshold;
    os << nums.str();
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    os << '\n';
  }
}

} // namespace mzparity
