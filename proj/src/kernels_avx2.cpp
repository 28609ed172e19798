// AVX2/FMA variants of the inner-loop kernels. This translation unit is the
// only one compiled with -mavx2 -mfma; it is reached solely through the
// runtime dispatch table, after a CPU-support check.
#include "mzparity/kernels.hpp"

#include <immintrin.h>

namespace mzparity::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double norm_sq_avx2(const double* re, const double* im, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_loadu_pd(re + i);
    const __m256d m = _mm256_loadu_pd(im + i);
    acc = _mm256_fmadd_pd(r, r, acc);
    acc = _mm256_fmadd_pd(m, m, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += re[i] * re[i] + im[i] * im[i];
  return s;
}

double weighted_abs2_sum_avx2(const double* re, const double* im, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_loadu_pd(re + i);
    const __m256d m = _mm256_loadu_pd(im + i);
    const __m256d wi = _mm256_loadu_pd(w + i);
    const __m256d a2 = _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m));
    acc = _mm256_fmadd_pd(wi, a2, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * (re[i] * re[i] + im[i] * im[i]);
  return s;
}

void complex_dot_avx2(const double* are, const double* aim, const double* bre, const double* bim,
                      std::size_t n, double* out_re, double* out_im) {
  __m256d acc_r = _mm256_setzero_pd();
  __m256d acc_i = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ar = _mm256_loadu_pd(are + i);
    const __m256d ai = _mm256_loadu_pd(aim + i);
    const __m256d br = _mm256_loadu_pd(bre + i);
    const __m256d bi = _mm256_loadu_pd(bim + i);
    acc_r = _mm256_fmadd_pd(ar, br, acc_r);
    acc_r = _mm256_fmadd_pd(ai, bi, acc_r);
    acc_i = _mm256_fmadd_pd(ar, bi, acc_i);
    acc_i = _mm256_fnmadd_pd(ai, br, acc_i);
  }
  double rr = hsum(acc_r), ii = hsum(acc_i);
  for (; i < n; ++i) {
    rr += are[i] * bre[i] + aim[i] * bim[i];
    ii += are[i] * bim[i] - aim[i] * bre[i];
  }
  *out_re = rr;
  *out_im = ii;
}

void colwise_complex_scale_avx2(double* re, double* im, const double* cre, const double* cim,
                                std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    double* pr = re + r * cols;
    double* pi = im + r * cols;
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      const __m256d a = _mm256_loadu_pd(pr + j);
      const __m256d b = _mm256_loadu_pd(pi + j);
      const __m256d cr = _mm256_loadu_pd(cre + j);
      const __m256d ci = _mm256_loadu_pd(cim + j);
      _mm256_storeu_pd(pr + j, _mm256_fnmadd_pd(b, ci, _mm256_mul_pd(a, cr)));
      _mm256_storeu_pd(pi + j, _mm256_fmadd_pd(a, ci, _mm256_mul_pd(b, cr)));
    }
    for (; j < cols; ++j) {
      const double a = pr[j], b = pi[j];
      pr[j] = a * cre[j] - b * cim[j];
      pi[j] = a * cim[j] + b * cre[j];
    }
  }
}

void matvec_dual_avx2(const double* mat, std::size_t n, const double* xre, const double* xim,
                      double* yre, double* yim) {
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = mat + r * n;
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    std::size_t c = 0;
    for (; c + 4 <= n; c += 4) {
      const __m256d m = _mm256_loadu_pd(row + c);
      acc_r = _mm256_fmadd_pd(m, _mm256_loadu_pd(xre + c), acc_r);
      acc_i = _mm256_fmadd_pd(m, _mm256_loadu_pd(xim + c), acc_i);
    }
    double ar = hsum(acc_r), ai = hsum(acc_i);
    for (; c < n; ++c) {
      ar += row[c] * xre[c];
      ai += row[c] * xim[c];
    }
    yre[r] = ar;
    yim[r] = ai;
  }
}

// Vectorized across grid points: four x values advance through the
// recurrence in lockstep.
void legendre_weighted_sum_avx2(const double* w, std::size_t count, const double* x, std::size_t m,
                                double* val, double* dval) {
  std::size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    const __m256d xj = _mm256_loadu_pd(x + j);
    __m256d v = _mm256_set1_pd(count > 0 ? w[0] : 0.0);
    __m256d d = _mm256_setzero_pd();
    if (count > 1) {
      __m256d p_prev = _mm256_set1_pd(1.0);
      __m256d p_cur = xj;
      __m256d d_prev = _mm256_setzero_pd();
      __m256d d_cur = _mm256_set1_pd(1.0);
      const __m256d w1 = _mm256_set1_pd(w[1]);
      v = _mm256_fmadd_pd(w1, p_cur, v);
      d = _mm256_fmadd_pd(w1, d_cur, d);
      for (std::size_t N = 2; N < count; ++N) {
        const __m256d a = _mm256_set1_pd((2.0 * N - 1.0) / N);
        const __m256d b = _mm256_set1_pd((N - 1.0) / N);
        const __m256d p_next =
            _mm256_fnmadd_pd(b, p_prev, _mm256_mul_pd(a, _mm256_mul_pd(xj, p_cur)));
        const __m256d d_next =
            _mm256_fmadd_pd(_mm256_set1_pd(2.0 * N - 1.0), p_cur, d_prev);
        const __m256d wn = _mm256_set1_pd(w[N]);
        v = _mm256_fmadd_pd(wn, p_next, v);
        d = _mm256_fmadd_pd(wn, d_next, d);
        p_prev = p_cur;
        p_cur = p_next;
        d_prev = d_cur;
        d_cur = d_next;
      }
    }
    _mm256_storeu_pd(val + j, v);
    _mm256_storeu_pd(dval + j, d);
  }
  if (j < m) {
    scalar_ops().legendre_weighted_sum(w, count, x + j, m - j, val + j, dval + j);
  }
}

} // namespace

const Ops& avx2_ops() {
  static const Ops ops = {
      norm_sq_avx2,        weighted_abs2_sum_avx2,    complex_dot_avx2,
      colwise_complex_scale_avx2, matvec_dual_avx2,   legendre_weighted_sum_avx2,
  };
  return ops;
}

} // namespace mzparity::kernels
