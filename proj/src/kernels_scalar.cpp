#include "mzparity/kernels.hpp"

namespace mzparity::kernels {
namespace {

double norm_sq_scalar(const double* re, const double* im, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += re[i] * re[i] + im[i] * im[i];
  return acc;
}

double weighted_abs2_sum_scalar(const double* re, const double* im, const double* w,
                                std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * (re[i] * re[i] + im[i] * im[i]);
  return acc;
}

void complex_dot_scalar(const double* are, const double* aim, const double* bre, const double* bim,
                        std::size_t n, double* out_re, double* out_im) {
  double rr = 0.0, ii = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    rr += are[i] * bre[i] + aim[i] * bim[i];
    ii += are[i] * bim[i] - aim[i] * bre[i];
  }
  *out_re = rr;
  *out_im = ii;
}

void colwise_complex_scale_scalar(double* re, double* im, const double* cre, const double* cim,
                                  std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    double* pr = re + r * cols;
    double* pi = im + r * cols;
    for (std::size_t j = 0; j < cols; ++j) {
      const double a = pr[j], b = pi[j];
      pr[j] = a * cre[j] - b * cim[j];
      pi[j] = a * cim[j] + b * cre[j];
    }
  }
}

void matvec_dual_scalar(const double* mat, std::size_t n, const double* xre, const double* xim,
                        double* yre, double* yim) {
  for (std::size_t r = 0; r < n; ++r) {
    const double* row = mat + r * n;
    double ar = 0.0, ai = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      ar += row[c] * xre[c];
      ai += row[c] * xim[c];
    }
    yre[r] = ar;
    yim[r] = ai;
  }
}

void legendre_weighted_sum_scalar(const double* w, std::size_t count, const double* x,
                                  std::size_t m, double* val, double* dval) {
  for (std::size_t j = 0; j < m; ++j) {
    const double xj = x[j];
    double v = count > 0 ? w[0] : 0.0;
    double d = 0.0;
    if (count > 1) {
      double p_prev = 1.0, p_cur = xj;   // P_0, P_1
      double d_prev = 0.0, d_cur = 1.0;  // P_0', P_1'
      v += w[1] * p_cur;
      d += w[1] * d_cur;
      for (std::size_t N = 2; N < count; ++N) {
        const double p_next = ((2.0 * N - 1.0) * xj * p_cur - (N - 1.0) * p_prev) / N;
        const double d_next = d_prev + (2.0 * N - 1.0) * p_cur;
        v += w[N] * p_next;
        d += w[N] * d_next;
        p_prev = p_cur;
        p_cur = p_next;
        d_prev = d_cur;
        d_cur = d_next;
      }
    }
    val[j] = v;
    dval[j] = d;
  }
}

} // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      norm_sq_scalar,        weighted_abs2_sum_scalar,    complex_dot_scalar,
      colwise_complex_scale_scalar, matvec_dual_scalar,   legendre_weighted_sum_scalar,
  };
  return ops;
}

} // namespace mzparity::kernels
