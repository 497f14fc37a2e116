#pragma once

#include <span>
#include <vector>

#include "npulse/types.hpp"

namespace npulse::kernels {

/// Global switch between the OpenMP kernels and the serial reference
/// implementations. Both produce bit-identical results (the parallel loops
/// are elementwise; reductions stay serial), so the switch only affects
/// speed. Defaults to parallel when compiled with OpenMP.
void set_parallel(bool enabled);
bool parallel_enabled();
int max_threads();

namespace serial {

/// y[i] *= m[i]
void multiply_inplace(std::span<cplx> y, std::span<const cplx> m);

/// y[i] *= exp(coef * |y[i]|^2)  -- the self-phase-modulation substep;
/// coef = i * dx * R_p.
void kerr_phase_inplace(std::span<cplx> y, cplx coef);

/// out[i] = base[i] + c * s[i]
void add_scaled(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s);

/// out[i] = base[i] + c * (s1[i] + s2[i])
void add_scaled2(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s1,
                 std::span<const cplx> s2);

/// out[i] = |v[i]|^2
void intensity(std::span<double> out, std::span<const cplx> v);

}  // namespace serial

namespace par {

void multiply_inplace(std::span<cplx> y, std::span<const cplx> m);
void kerr_phase_inplace(std::span<cplx> y, cplx coef);
void add_scaled(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s);
void add_scaled2(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s1,
                 std::span<const cplx> s2);
void intensity(std::span<double> out, std::span<const cplx> v);

}  // namespace par

// Dispatchers honoring set_parallel().
void multiply_inplace(std::span<cplx> y, std::span<const cplx> m);
void kerr_phase_inplace(std::span<cplx> y, cplx coef);
void add_scaled(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s);
void add_scaled2(std::span<cplx> out, std::span<const cplx> base, cplx c, std::span<const cplx> s1,
                 std::span<const cplx> s2);
void intensity(std::span<double> out, std::span<const cplx> v);

// Deterministic reductions (serial accumulation order by design).
double sum_abs2(std::span<const cplx> v);
double max_abs2(std::span<const cplx> v);
bool all_finite(std::span<const cplx> v);

}  // namespace npulse::kernels
