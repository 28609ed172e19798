#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "test_util.hpp"

#include "mzparity/beam_splitter.hpp"
#include "mzparity/closed_form.hpp"
#include "mzparity/input_states.hpp"
#include "mzparity/two_mode_state.hpp"

using namespace mzparity;

TEST_CASE("diagonal state construction") {
  auto coeffs = twin_fock_coeffs(5, 5);
  const auto state = from_diagonal(coeffs);
  CHECK(state.amplitude(5, 5) == std::complex<double>{1.0, 0.0});
  CHECK(state.norm_sq() == doctest::Approx(1.0));

  const auto vacuum = from_diagonal(twin_fock_coeffs(0, 0));
  CHECK(vacuum.amplitude(0, 0) == std::complex<double>{1.0, 0.0});

  DiagonalCoeffs empty;
  CHECK_THROWS_AS(from_diagonal(empty), std::invalid_argument);
  CHECK_THROWS_AS(from_diagonal(coeffs, 3), std::invalid_argument);
  CHECK_THROWS_AS(TwoModeState(-1), std::invalid_argument);
}

TEST_CASE("two-photon interference null") {
  TwoModeState in(2);
  in.set_amplitude(1, 1, {1.0, 0.0});
  const auto out = apply_beam_splitter(in, BeamSplitterKind::First);
  const auto joint = joint_distribution(out);
  CHECK(joint.at(2, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(joint.at(0, 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(joint.at(1, 1) == doctest::Approx(0.0).epsilon(0).scale(1));
}

TEST_CASE("vacuum passes both splitters unchanged") {
  TwoModeState vac(3);
  vac.set_amplitude(0, 0, {1.0, 0.0});
  for (const auto kind : {BeamSplitterKind::First, BeamSplitterKind::Second}) {
    const auto out = apply_beam_splitter(vac, kind);
    CHECK(out.amplitude(0, 0) == std::complex<double>{1.0, 0.0});
    CHECK(out.norm_sq() == doctest::Approx(1.0));
  }
}

TEST_CASE("twin-Fock input reproduces the post-splitter amplitudes") {
  for (int n = 1; n <= 10; ++n) {
    const auto input = from_diagonal(twin_fock_coeffs(n, n), 2 * n);
    const auto out = apply_beam_splitter(input, BeamSplitterKind::First);
    for (int k = 0; k <= n; ++k) {
      const auto amp = out.amplitude(2 * k, 2 * (n - k));
      CHECK_NEAR(amp.real(), arcsine_coeff(n, k), 1e-10);
      CHECK(amp.imag() == 0.0);
    }
    // odd occupations must be empty
    for (int m = 1; m < 2 * n; m += 2) {
      CHECK(out.amplitude(m, 2 * n - m) == std::complex<double>{0.0, 0.0});
    }
  }
}

TEST_CASE("block table matches streaming application") {
  const auto coeffs = tmsvs_coeffs(0.55, 12);
  const auto input = from_diagonal(coeffs, 24);
  const BeamSplitterBlocks blocks(24);
  for (const auto kind : {BeamSplitterKind::First, BeamSplitterKind::Second}) {
    const auto streamed = apply_beam_splitter(input, kind);
    const auto cached = apply_beam_splitter(input, kind, blocks);
    for (int na = 0; na <= 24; ++na) {
      for (int nb = 0; nb <= 24; ++nb) {
        CHECK(std::abs(streamed.amplitude(na, nb) - cached.amplitude(na, nb)) <= 1e-15);
      }
    }
  }
  CHECK_THROWS_AS(BeamSplitterBlocks(-1), std::invalid_argument);
  CHECK_THROWS_AS(BeamSplitterBlocks(10000), std::invalid_argument);
  CHECK_THROWS_AS(blocks.block(25), std::invalid_argument);
}

TEST_CASE("beam splitter conserves total photon number exactly") {
  TwoModeState in(6);
  in.set_amplitude(2, 1, {0.6, 0.1});
  in.set_amplitude(0, 3, {0.3, -0.4});
  in.set_amplitude(5, 1, {0.1, 0.55});
  for (const auto kind : {BeamSplitterKind::First, BeamSplitterKind::Second}) {
    const auto out = apply_beam_splitter(in, kind);
    for (int na = 0; na <= 6; ++na) {
      for (int nb = 0; nb <= 6; ++nb) {
        if (na + nb != 3 && na + nb != 6) {
          CHECK(out.amplitude(na, nb) == std::complex<double>{0.0, 0.0});
        }
      }
    }
    CHECK(out.norm_sq() == doctest::Approx(in.norm_sq()).epsilon(1e-12));
  }
}

TEST_CASE("phase shifter") {
  TwoModeState in(2);
  in.set_amplitude(0, 2, {1.0, 0.0});
  const auto same = apply_phase(in, 0.0);
  CHECK(same.amplitude(0, 2) == std::complex<double>{1.0, 0.0});

  const auto out = apply_phase(in, std::numbers::pi / 2.0);
  CHECK(out.amplitude(0, 2).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_NEAR(out.amplitude(0, 2).imag(), 0.0, 1e-15);

  // arcsine state at N = 3 picks up e^{i phi (6 - 2k)} term by term
  const auto arcsine =
      apply_beam_splitter(from_diagonal(twin_fock_coeffs(3, 3), 6), BeamSplitterKind::First);
  const double phi = 0.1;
  const auto shifted = apply_phase(arcsine, phi);
  for (int k = 0; k <= 3; ++k) {
    const auto expected =
        std::polar(1.0, phi * (6.0 - 2.0 * k)) * std::complex<double>{arcsine_coeff(3, k), 0.0};
    const auto got = shifted.amplitude(2 * k, 6 - 2 * k);
    CHECK(std::abs(got - expected) <= 1e-12);
  }

  // norm is invariant under any phase
  CHECK(shifted.norm_sq() == doctest::Approx(arcsine.norm_sq()).epsilon(1e-15));
}

TEST_CASE("parity of simple states") {
  TwoModeState vac(1);
  vac.set_amplitude(0, 0, {1.0, 0.0});
  CHECK(parity_b(vac) == doctest::Approx(1.0));

  TwoModeState odd(1);
  odd.set_amplitude(0, 1, {1.0, 0.0});
  CHECK(parity_b(odd) == doctest::Approx(-1.0));

  TwoModeState mixed(1);
  const double a = 1.0 / std::sqrt(2.0);
  mixed.set_amplitude(0, 0, {a, 0.0});
  mixed.set_amplitude(0, 1, {a, 0.0});
  CHECK_NEAR(parity_b(mixed), 0.0, 1e-15);

  TwoModeState zero(1);
  CHECK_THROWS_AS(parity_b(zero), std::invalid_argument);
}

TEST_CASE("parity is 2*pi periodic in the phase") {
  const auto coeffs = tmsvs_coeffs(0.6, 20);
  const auto state =
      apply_beam_splitter(from_diagonal(coeffs, 40), BeamSplitterKind::First);
  const double base = parity_b(apply_beam_splitter(apply_phase(state, 0.37), BeamSplitterKind::Second));
  const double shifted = parity_b(apply_beam_splitter(
      apply_phase(state, 0.37 + 2.0 * std::numbers::pi), BeamSplitterKind::Second));
  CHECK_NEAR(shifted, base, 1e-12);
}

TEST_CASE("joint distribution of basic states") {
  const auto tf = from_diagonal(twin_fock_coeffs(5, 5));
  const auto joint = joint_distribution(tf);
  CHECK(joint.at(5, 5) == doctest::Approx(1.0));
  CHECK(joint.sum() == doctest::Approx(1.0));

  const auto arcsine10 =
      apply_beam_splitter(from_diagonal(twin_fock_coeffs(10, 10), 20), BeamSplitterKind::First);
  const auto j10 = joint_distribution(arcsine10);
  const double endpoint = j10.at(0, 20);
  CHECK(j10.at(20, 0) == doctest::Approx(endpoint).epsilon(1e-12));
  for (int k = 1; k < 10; ++k) {
    CHECK(endpoint > j10.at(2 * k, 20 - 2 * k)); // extremes dominate the plateau
  }
}

TEST_CASE("mode statistics") {
  const auto tf = from_diagonal(twin_fock_coeffs(5, 5));
  const auto stats = mode_stats(tf, Mode::A);
  CHECK(stats.mean == doctest::Approx(5.0));
  CHECK_NEAR(stats.variance, 0.0, 1e-12);
  CHECK(stats.mandel_q == doctest::Approx(-1.0));

  const auto pcs = from_diagonal(pcs_coeffs(2.0, 60));
  CHECK(mode_stats(pcs, Mode::A).mandel_q < 0.0);
  CHECK(mode_stats(pcs, Mode::B).mandel_q < 0.0);

  const auto vac = from_diagonal(twin_fock_coeffs(0, 2));
  CHECK_THROWS_AS(mode_stats(vac, Mode::A), std::domain_error);
}

TEST_CASE("fidelity") {
  const auto s = from_diagonal(tmsvs_coeffs(0.4, 10));
  CHECK(fidelity(s, s) == doctest::Approx(1.0).epsilon(1e-12));

  TwoModeState a(1), b(1);
  a.set_amplitude(0, 0, {1.0, 0.0});
  b.set_amplitude(1, 0, {1.0, 0.0});
  CHECK(fidelity(a, b) == 0.0);

  TwoModeState c(2);
  CHECK_THROWS_AS(fidelity(a, c), std::invalid_argument);
}

TEST_CASE("state norm stays within the declared tail budget") {
  for (double xi : {0.3, 0.7, 0.92}) {
    const auto coeffs = tmsvs_coeffs(xi, 25);
    const auto state = from_diagonal(coeffs);
    CHECK(state.norm_sq() >= 1.0 - state.tail_mass_bound() - 1e-14);
    CHECK(state.norm_sq() <= 1.0 + 1e-12);
  }
}
