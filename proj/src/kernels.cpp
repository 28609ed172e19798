#include "mzparity/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace mzparity::kernels {

namespace {

Backend detect_backend() {
  if (const char* env = std::getenv("MZPARITY_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Backend::Avx2;
  }
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

} // namespace

bool avx2_available() {
#if defined(MZPARITY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const char* backend_name(Backend backend) {
  return backend == Backend::Avx2 ? "avx2" : "scalar";
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

const Ops& active() {
#ifdef MZPARITY_HAVE_AVX2
  if (active_backend() == Backend::Avx2) return avx2_ops();
#endif
  return scalar_ops();
}

void select(Backend backend) {
  if (backend == Backend::Avx2 && !avx2_available()) {
    throw std::invalid_argument("kernels: avx2 backend not available on this machine");
  }
  backend_slot().store(backend, std::memory_order_relaxed);
}

} // namespace mzparity::kernels
