#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "test_util.hpp"

#include "mzparity/kernels.hpp"
#include "mzparity/special_functions.hpp"

using namespace mzparity;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 11, 13, 16, 31, 64, 100};

} // namespace

TEST_CASE("backend selection") {
  const auto original = kernels::active_backend();
  kernels::select(kernels::Backend::Scalar);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  CHECK(std::string(kernels::backend_name(kernels::Backend::Scalar)) == "scalar");
  CHECK(std::string(kernels::backend_name(kernels::Backend::Avx2)) == "avx2");
  if (kernels::avx2_available()) {
    kernels::select(kernels::Backend::Avx2);
    CHECK(kernels::active_backend() == kernels::Backend::Avx2);
  } else {
    CHECK_THROWS_AS(kernels::select(kernels::Backend::Avx2), std::invalid_argument);
  }
  kernels::select(original);
}

TEST_CASE("scalar kernels against naive references") {
  std::mt19937 rng(7);
  const auto& ops = kernels::scalar_ops();
  for (const std::size_t n : kSizes) {
    const auto re = random_vec(rng, n);
    const auto im = random_vec(rng, n);
    const auto w = random_vec(rng, n);

    double want = 0.0;
    for (std::size_t i = 0; i < n; ++i) want += re[i] * re[i] + im[i] * im[i];
    CHECK(ops.norm_sq(re.data(), im.data(), n) == doctest::Approx(want).epsilon(1e-14));

    want = 0.0;
    for (std::size_t i = 0; i < n; ++i) want += w[i] * (re[i] * re[i] + im[i] * im[i]);
    CHECK_NEAR(ops.weighted_abs2_sum(re.data(), im.data(), w.data(), n), want, 1e-13);

    const auto bre = random_vec(rng, n);
    const auto bim = random_vec(rng, n);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      acc += std::conj(std::complex<double>{re[i], im[i]}) * std::complex<double>{bre[i], bim[i]};
    }
    double rr = 0.0, ii = 0.0;
    ops.complex_dot(re.data(), im.data(), bre.data(), bim.data(), n, &rr, &ii);
    CHECK_NEAR(rr, acc.real(), 1e-13);
    CHECK_NEAR(ii, acc.imag(), 1e-13);
  }
}

TEST_CASE("colwise scale and matvec against std::complex math") {
  std::mt19937 rng(11);
  const auto& ops = kernels::scalar_ops();

  const std::size_t rows = 5, cols = 13;
  auto re = random_vec(rng, rows * cols);
  auto im = random_vec(rng, rows * cols);
  const auto cre = random_vec(rng, cols);
  const auto cim = random_vec(rng, cols);
  std::vector<std::complex<double>> want(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < cols; ++j) {
      want[r * cols + j] = std::complex<double>{re[r * cols + j], im[r * cols + j]} *
                           std::complex<double>{cre[j], cim[j]};
    }
  }
  ops.colwise_complex_scale(re.data(), im.data(), cre.data(), cim.data(), rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    CHECK_NEAR(re[i], want[i].real(), 1e-14);
    CHECK_NEAR(im[i], want[i].imag(), 1e-14);
  }

  for (const std::size_t n : {1u, 4u, 9u, 17u}) {
    const auto mat = random_vec(rng, n * n);
    const auto xre = random_vec(rng, n);
    const auto xim = random_vec(rng, n);
    std::vector<double> yre(n), yim(n);
    ops.matvec_dual(mat.data(), n, xre.data(), xim.data(), yre.data(), yim.data());
    for (std::size_t r = 0; r < n; ++r) {
      double ar = 0.0, ai = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        ar += mat[r * n + c] * xre[c];
        ai += mat[r * n + c] * xim[c];
      }
      CHECK_NEAR(yre[r], ar, 1e-13);
      CHECK_NEAR(yim[r], ai, 1e-13);
    }
  }
}

TEST_CASE("legendre weighted sum matches per-point evaluation") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> wdist(0.0, 1.0);
  const auto& ops = kernels::scalar_ops();
  for (const std::size_t count : {1u, 2u, 6u, 41u}) {
    std::vector<double> w(count);
    for (auto& v : w) v = wdist(rng);
    std::vector<double> x = {-1.0, -0.6, 0.0, 0.3, 0.77, 1.0};
    std::vector<double> val(x.size()), dval(x.size());
    ops.legendre_weighted_sum(w.data(), count, x.data(), x.size(), val.data(), dval.data());
    for (std::size_t j = 0; j < x.size(); ++j) {
      double vt = 0.0, dt = 0.0;
      for (std::size_t n = 0; n < count; ++n) {
        const auto ev = legendre(static_cast<int>(n), x[j]);
        vt += w[n] * ev.value;
        dt += w[n] * ev.derivative;
      }
      CHECK_NEAR(val[j], vt, 1e-11);
      CHECK_NEAR(dval[j], dt, 1e-9);
    }
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::avx2_available()) return;
#ifdef MZPARITY_HAVE_AVX2
  std::mt19937 rng(101);
  const auto& sc = kernels::scalar_ops();
  const auto& vx = kernels::avx2_ops();
  for (const std::size_t n : kSizes) {
    const auto re = random_vec(rng, n);
    const auto im = random_vec(rng, n);
    const auto w = random_vec(rng, n);
    const auto bre = random_vec(rng, n);
    const auto bim = random_vec(rng, n);

    CHECK_NEAR(vx.norm_sq(re.data(), im.data(), n), sc.norm_sq(re.data(), im.data(), n), 1e-13);
    CHECK_NEAR(vx.weighted_abs2_sum(re.data(), im.data(), w.data(), n), sc.weighted_abs2_sum(re.data(), im.data(), w.data(), n), 1e-13);

    double r1, i1, r2, i2;
    sc.complex_dot(re.data(), im.data(), bre.data(), bim.data(), n, &r1, &i1);
    vx.complex_dot(re.data(), im.data(), bre.data(), bim.data(), n, &r2, &i2);
    CHECK_NEAR(r2, r1, 1e-13);
    CHECK_NEAR(i2, i1, 1e-13);

    auto re_a = re, im_a = im, re_b = re, im_b = im;
    const std::size_t rows = n == 0 ? 0 : 3;
    const auto cre = random_vec(rng, n);
    const auto cim = random_vec(rng, n);
    auto big_re_a = random_vec(rng, rows * n);
    auto big_im_a = random_vec(rng, rows * n);
    auto big_re_b = big_re_a;
    auto big_im_b = big_im_a;
    sc.colwise_complex_scale(big_re_a.data(), big_im_a.data(), cre.data(), cim.data(), rows, n);
    vx.colwise_complex_scale(big_re_b.data(), big_im_b.data(), cre.data(), cim.data(), rows, n);
    for (std::size_t i = 0; i < rows * n; ++i) {
      CHECK_NEAR(big_re_b[i], big_re_a[i], 1e-13);
      CHECK_NEAR(big_im_b[i], big_im_a[i], 1e-13);
    }

    if (n > 0) {
      const auto mat = random_vec(rng, n * n);
      std::vector<double> y1(n), y2(n), z1(n), z2(n);
      sc.matvec_dual(mat.data(), n, re.data(), im.data(), y1.data(), z1.data());
      vx.matvec_dual(mat.data(), n, re.data(), im.data(), y2.data(), z2.data());
      for (std::size_t i = 0; i < n; ++i) {
        CHECK_NEAR(y2[i], y1[i], 1e-13);
        CHECK_NEAR(z2[i], z1[i], 1e-13);
      }
    }
  }

  // long recurrences across ragged grid sizes
  std::uniform_real_distribution<double> wdist(0.0, 1.0);
  std::vector<double> w(301);
  for (auto& v : w) v = wdist(rng);
  for (const std::size_t m : {1u, 3u, 4u, 5u, 9u, 2001u}) {
    std::vector<double> x(m);
    for (std::size_t j = 0; j < m; ++j) {
      x[j] = -1.0 + 2.0 * static_cast<double>(j) / std::max<std::size_t>(1, m - 1);
    }
    std::vector<double> v1(m), d1(m), v2(m), d2(m);
    sc.legendre_weighted_sum(w.data(), w.size(), x.data(), m, v1.data(), d1.data());
    vx.legendre_weighted_sum(w.data(), w.size(), x.data(), m, v2.data(), d2.data());
    for (std::size_t j = 0; j < m; ++j) {
      CHECK_NEAR(v2[j], v1[j], 1e-11);
      CHECK_NEAR(d2[j], d1[j], 1e-9);
    }
  }
#endif
}
