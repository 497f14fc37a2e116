#pragma once

#include <array>
#include <vector>

#include "npulse/params.hpp"

namespace npulse {

/// Linear susceptibility of the probe envelope at Fourier component omega
/// (units 1/gamma). Valid for arbitrary detunings; throws (category "pole")
/// if the denominator magnitude falls below 1e-12 * gamma^2.
cplx chi(double omega, const PhysParams& p);

/// Analytic d(chi)/d(omega); the real part is the inverse-group-velocity
/// contribution at that envelope frequency.
cplx chi_derivative(double omega, const PhysParams& p);

/// Taylor dispersion coefficients at omega=0 together with the Kerr
/// coefficient, evaluated from the closed forms. Requires Raman resonance
/// (Delta_P == Delta_C) and a non-vanishing control field.
struct DispersionSet {
  std::array<cplx, 4> beta{};  // beta[n] in (1/gamma)^n relative to chi
  cplx R_p{};                  // Kerr coefficient, 1/gamma^3
  PhysParams params{};

  /// chi_L(omega) = sum_n beta_n omega^n / n!
  cplx chi_taylor(double omega) const;
};

DispersionSet dispersion_set(const PhysParams& p);

/// R_p = -2 / ((Delta_Pp + i gamma/2) |Omega_c|^2); same preconditions as
/// dispersion_set.
cplx kerr_coefficient(const PhysParams& p);

/// rho24^(3) - rho13^(3) = R_p |Omega_p|^2 Omega_p.
cplx third_order_source(cplx omega_p, const PhysParams& p);

/// Co-moving group delay (units 1/gamma) accumulated over a dimensionless
/// depth span x = eta*zeta/gamma, for the envelope frequency omega:
/// delay = x_span * Re chi'(omega) * gamma.
double group_delay(const PhysParams& p, double omega, double x_span);

/// First-order (linear-response) probe coherence rho13^(1)(tau), computed by
/// Fourier transform of the envelope, multiplication by -chi(omega), and
/// inverse transform. The zeroth-order state is |3><3|.
std::vector<cplx> first_order_coherence(const Envelope& envelope, const PhysParams& p);

/// Empirical radius |omega| < 0.1 |Omega_c|^2 / max(gamma, |Delta|) inside
/// which the third-order Taylor expansion of chi stays within 1% of the exact
/// susceptibility (validated by the test suite).
double taylor_validity_radius(const PhysParams& p);

}  // namespace npulse
