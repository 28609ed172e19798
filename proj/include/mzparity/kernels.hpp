#pragma once

#include <cstddef>

namespace mzparity::kernels {

/// Inner-loop kernels behind the state and closed-form layers. Amplitude
/// grids are stored as split real/imaginary planes, so every kernel works
/// on plain double arrays. Each operation has a scalar reference
/// implementation and an AVX2 variant; the active set is chosen at runtime
/// and the two are equivalence-tested against each other.
struct Ops {
  /// sum of re[i]^2 + im[i]^2
  double (*norm_sq)(const double* re, const double* im, std::size_t n);

  /// sum of w[i] * (re[i]^2 + im[i]^2)
  double (*weighted_abs2_sum)(const double* re, const double* im, const double* w, std::size_t n);

  /// conj(a) . b accumulated into (out_re, out_im)
  void (*complex_dot)(const double* are, const double* aim, const double* bre, const double* bim,
                      std::size_t n, double* out_re, double* out_im);

  /// In-place multiply of each row of a rows x cols grid by a per-column
  /// complex factor (cre[j], cim[j]).
  void (*colwise_complex_scale)(double* re, double* im, const double* cre, const double* cim,
                                std::size_t rows, std::size_t cols);

  /// y = M x for a dense real n x n matrix (row-major) applied to a complex
  /// vector held as split planes.
  void (*matvec_dual)(const double* mat, std::size_t n, const double* xre, const double* xim,
                      double* yre, double* yim);

  /// For each grid point x[j]: val[j] = sum_N w[N] P_N(x[j]) and
  /// dval[j] = sum_N w[N] P'_N(x[j]), N = 0..count-1, via the upward
  /// Legendre recurrence and P'_{N+1} = P'_{N-1} + (2N+1) P_N.
  void (*legendre_weighted_sum)(const double* w, std::size_t count, const double* x, std::size_t m,
                                double* val, double* dval);
};

enum class Backend { Scalar, Avx2 };

/// Kernel set currently in effect. The first call resolves the backend:
/// the MZPARITY_KERNELS environment variable ("scalar"/"avx2") if set,
/// otherwise AVX2 when the CPU supports it.
const Ops& active();
Backend active_backend();

/// Force a backend; throws std::invalid_argument if it is not available.
void select(Backend backend);

bool avx2_available();
const char* backend_name(Backend backend);

const Ops& scalar_ops();
#ifdef MZPARITY_HAVE_AVX2
const Ops& avx2_ops();
#endif

} // namespace mzparity::kernels
