#include "npulse/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace npulse::kernels {

namespace {
#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif
}  // namespace

void set_parallel(bool enabled) {
#ifdef _OPENMP
  g_parallel.store(enabled);
#else
  (void)enabled;
#endif
}

bool parallel_enabled() { return g_parallel.load(); }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

void multiply_inplace(std::span<cplx> y, std::span<const cplx> m) {
  for (size_t i = 0; i < y.size(); ++i) y[i] *= m[i];
}

void kerr_phase_inplace(std::span<cplx> y, cplx coef) {
  for (size_t i = 0; i < y.size(); ++i) y[i] *= std::exp(coef * std::norm(y[i]));
}

void add_scaled(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s) {
  for (size_t i = 0; i < out.size(); ++i) out[i] = base[i] + c * s[i];
}

void add_scaled2(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s1,
                 std::span<const cplx> s2) {
  for (size_t i = 0; i < out.size(); ++i) out[i] = base[i] + c * (s1[i] + s2[i]);
}

void intensity(std::span<double> out, std::span<const cplx> v) {
  for (size_t i = 0; i < out.size(); ++i) out[i] = std::norm(v[i]);
}

}  // namespace serial

namespace par {

void multiply_inplace(std::span<cplx> y, std::span<const cplx> m) {
  const std::int64_t n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[static_cast<size_t>(i)] *= m[static_cast<size_t>(i)];
}

void kerr_phase_inplace(std::span<cplx> y, cplx coef) {
  const std::int64_t n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    cplx& v = y[static_cast<size_t>(i)];
    v *= std::exp(coef * std::norm(v));
  }
}

void add_scaled(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s) {
  const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = base[static_cast<size_t>(i)] + c * s[static_cast<size_t>(i)];
}

void add_scaled2(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s1,
                 std::span<const cplx> s2) {
  const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] =
        base[static_cast<size_t>(i)] +
        c * (s1[static_cast<size_t>(i)] + s2[static_cast<size_t>(i)]);
}

void intensity(std::span<double> out, std::span<const cplx> v) {
  const std::int64_t n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = std::norm(v[static_cast<size_t>(i)]);
}

}  // namespace par

void multiply_inplace(std::span<cplx> y, std::span<const cplx> m) {
  parallel_enabled() ? par::multiply_inplace(y, m) : serial::multiply_inplace(y, m);
}
void kerr_phase_inplace(std::span<cplx> y, cplx coef) {
  parallel_enabled() ? par::kerr_phase_inplace(y, coef) : serial::kerr_phase_inplace(y, coef);
}
void add_scaled(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s) {
  parallel_enabled() ? par::add_scaled(out, base, c, s) : serial::add_scaled(out, base, c, s);
}
void add_scaled2(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s1,
                 std::span<const cplx> s2) {
  parallel_enabled() ? par::add_scaled2(out, base, c, s1, s2)
                     : serial::add_scaled2(out, base, c, s1, s2);
}
void intensity(std::span<double> out, std::span<const cplx> v) {
  parallel_enabled() ? par::intensity(out, v) : serial::intensity(out, v);
}

double sum_abs2(std::span<const cplx> v) {
  double acc = 0.0;
  for (const cplx& x : v) acc += std::norm(x);
  return acc;
}

double max_abs2(std::span<const cplx> v) {
  double m = 0.0;
  for (const cplx& x : v) m = std::max(m, std::norm(x));
  return m;
}

bool all_finite(std::span<const cplx> v) {
  for (const cplx& x : v)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

}  // namespace npulse::kernels
