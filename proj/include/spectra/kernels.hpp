#pragma once

#include <cstddef>

// Low-level dense kernels used by the symmetric eigensolver. A scalar
// reference implementation is always built; an AVX2 variant is selected at
// runtime when the CPU supports it. The environment variable SPECTRA_SIMD
// ("scalar" or "avx2") overrides the automatic choice; asking for an
// unavailable backend falls back to scalar.

namespace spectra::kernels {

struct Ops {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double*, double, std::size_t);
  // Plane rotation on two vectors: a <- c*a - s*b, b <- s*a + c*b.
  void (*rot)(double*, double*, double, double, std::size_t);
  const char* name;
};

const Ops& active();
const char* active_backend();

// Test hook. Accepts "scalar", "avx2", or "auto"; throws std::invalid_argument
// on unknown names and std::runtime_error if the backend is not available.
void force_backend(const char* name);

inline double dot(const double* x, const double* y, std::size_t n) {
  return active().dot(x, y, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
  active().axpy(a, x, y, n);
}
inline void scale(double* x, double a, std::size_t n) {
  active().scale(x, a, n);
}
inline void rot(double* a, double* b, double c, double s, std::size_t n) {
  active().rot(a, b, c, s, n);
}

namespace detail {
extern const Ops scalar_ops;
#if defined(SPECTRA_BUILD_AVX2)
extern const Ops avx2_ops;
#endif
}  // namespace detail

}  // namespace spectra::kernels
