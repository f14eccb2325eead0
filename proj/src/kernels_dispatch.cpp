#include "spectra/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace spectra::kernels {

namespace {

bool avx2_available() {
#if defined(SPECTRA_BUILD_AVX2) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* pick_auto() {
#if defined(SPECTRA_BUILD_AVX2) && defined(__x86_64__)
  if (avx2_available()) return &detail::avx2_ops;
#endif
  return &detail::scalar_ops;
}

const Ops* pick_named(const char* name) {
  if (std::strcmp(name, "auto") == 0) return pick_auto();
  if (std::strcmp(name, "scalar") == 0) return &detail::scalar_ops;
  if (std::strcmp(name, "avx2") == 0) {
#if defined(SPECTRA_BUILD_AVX2) && defined(__x86_64__)
    if (avx2_available()) return &detail::avx2_ops;
#endif
    return nullptr;
  }
  throw std::invalid_argument("unknown kernel backend: " + std::string(name));
}

const Ops* initial_backend() {
  if (const char* env = std::getenv("SPECTRA_SIMD")) {
    try {
      if (const Ops* ops = pick_named(env)) return ops;
    } catch (const std::invalid_argument&) {
    }
    return &detail::scalar_ops;
  }
  return pick_auto();
}

const Ops*& current() {
  static const Ops* ops = initial_backend();
  return ops;
}

}  // namespace

const Ops& active() { return *current(); }

const char* active_backend() { return active().name; }

void force_backend(const char* name) {
  const Ops* ops = pick_named(name);
  if (!ops) {
    throw std::runtime_error("kernel backend not available on this host: " +
                             std::string(name));
  }
  current() = ops;
}

}  // namespace spectra::kernels
