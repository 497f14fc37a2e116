#include "npulse/dispersion.hpp"

#include <cmath>

#include "npulse/fft.hpp"

namespace npulse {

namespace {

void require_raman(const PhysParams& p) {
  if (!p.raman_resonant())
    fail("raman", "closed-form dispersion requires Raman resonance (Delta_P == Delta_C)");
}

void require_control(const PhysParams& p) {
  if (std::abs(p.Omega_c) < 1e-6 * p.gamma)
    fail("zero-control", "closed-form dispersion requires |Omega_c| >= 1e-6 gamma");
}

}  // namespace

cplx chi(double omega, const PhysParams& p) {
  const cplx num = cplx{omega + p.Delta_P - p.Delta_C, 0.0};
  const cplx den = (cplx{omega + p.Delta_P, 0.5 * p.gamma}) * num - std::norm(p.Omega_c);
  if (std::abs(den) <= 1e-12 * p.gamma * p.gamma)
    fail("pole", "chi evaluated at a pole of the susceptibility");
  return -num / den;
}

cplx chi_derivative(double omega, const PhysParams& p) {
  // chi = -N/D with N = omega + DP - DC, D = (omega + DP + i g/2) N - |Oc|^2;
  // chi' = (N D' - D) / D^2 with D' = N + (omega + DP + i g/2).
  const cplx a{omega + p.Delta_P, 0.5 * p.gamma};
  const cplx num = cplx{omega + p.Delta_P - p.Delta_C, 0.0};
  const cplx den = a * num - std::norm(p.Omega_c);
  if (std::abs(den) <= 1e-12 * p.gamma * p.gamma)
    fail("pole", "chi derivative evaluated at a pole of the susceptibility");
  return (num * (num + a) - den) / (den * den);
}

cplx DispersionSet::chi_taylor(double omega) const {
  // Horner over beta_n / n!
  cplx acc = beta[3] / 6.0;
  acc = acc * omega + beta[2] / 2.0;
  acc = acc * omega + beta[1];
  acc = acc * omega + beta[0];
  return acc;
}

DispersionSet dispersion_set(const PhysParams& p) {
  require_raman(p);
  require_control(p);
  const double oc2 = std::norm(p.Omega_c);
  const cplx a{p.Delta_P, 0.5 * p.gamma};

  DispersionSet d;
  d.params = p;
  d.beta[0] = 0.0;
  d.beta[1] = 1.0 / oc2;
  d.beta[2] = 2.0 * a / (oc2 * oc2);
  d.beta[3] = 6.0 * (oc2 + a * a) / (oc2 * oc2 * oc2);
  d.R_p = kerr_coefficient(p);
  return d;
}

cplx kerr_coefficient(const PhysParams& p) {
  require_raman(p);
  require_control(p);
  return -2.0 / (cplx{p.Delta_Pp, 0.5 * p.gamma} * std::norm(p.Omega_c));
}

cplx third_order_source(cplx omega_p, const PhysParams& p) {
  return kerr_coefficient(p) * std::norm(omega_p) * omega_p;
}

double group_delay(const PhysParams& p, double omega, double x_span) {
  return x_span * chi_derivative(omega, p).real() * p.gamma;
}

std::vector<cplx> first_order_coherence(const Envelope& envelope, const PhysParams& p) {
  std::vector<cplx> spec = to_spectrum(envelope.values);
  const std::vector<double> w = omega_axis(envelope.grid.n_tau, envelope.grid.d_tau);
  for (size_t k = 0; k < spec.size(); ++k) spec[k] *= -chi(w[k], p);
  return to_time(spec);
}

double taylor_validity_radius(const PhysParams& p) {
  return 0.1 * std::norm(p.Omega_c) / std::max(p.gamma, std::abs(p.Delta_P));
}

}  // namespace npulse
