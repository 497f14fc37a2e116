#pragma once

#include <string>
#include <vector>

#include "npulse/types.hpp"

namespace npulse {

/// Atomic and field constants. All rates and detunings are expressed in
/// multiples of gamma, the total excited-state decay rate; gamma itself
/// defines the frequency unit (gamma = 1 throughout the presets). Times are
/// in 1/gamma, the propagation coordinate is the dimensionless eta*zeta/gamma.
struct PhysParams {
  double gamma = 1.0;     // excited-state total decay rate (frequency unit)
  double Gamma_g = 0.0;   // ground-state coherence decay rate
  cplx Omega_c = {1.0, 0.0};  // control Rabi frequency
  double Delta_P = 0.0;   // probe detuning
  double Delta_C = 0.0;   // control detuning
  double Delta_Pp = 0.0;  // Kerr detuning (probe on the |2>-|4> transition)
  double eta = 1.0;       // coupling constant, gamma per unit length

  // Branching of the excited-state decay is fixed by the level scheme.
  double gamma_p() const { return gamma / 3.0; }
  double gamma_s() const { return 2.0 * gamma / 3.0; }

  bool raman_resonant() const {
    return std::abs(Delta_P - Delta_C) <= 1e-12 * std::max(1.0, gamma);
  }

  /// Rejects non-physical values (throws category "config").
  void validate() const;
};

struct PulseSpec {
  enum class Shape { gaussian, sech };

  double amp = 0.0;      // peak Rabi frequency, units gamma
  double sigma_p = 1.0;  // temporal width, units 1/gamma
  double tau0 = 5.0;     // center time, units 1/gamma (default 5*sigma_p)
  Shape shape = Shape::gaussian;

  static PulseSpec gaussian(double amp, double sigma_p) {
    return {amp, sigma_p, 5.0 * sigma_p, Shape::gaussian};
  }

  void validate() const;
};

/// Uniform retarded-time grid and spatial marching parameters.
struct SimGrid {
  int n_tau = 1024;        // time samples, power of two
  double d_tau = 0.1;      // time step, units 1/gamma
  int n_zeta = 100;        // spatial steps
  double d_zeta = 0.1;     // spatial step; eta*d_zeta is the step in gamma units
  int record_stride = 50;  // snapshot every this many zeta steps

  double tau_span() const { return n_tau * d_tau; }
  double tau(int j) const { return j * d_tau; }
  std::vector<double> tau_axis() const;

  void validate() const;
};

/// Complex probe Rabi amplitude sampled on a SimGrid time axis.
struct Envelope {
  SimGrid grid;
  std::vector<cplx> values;
  double zeta = 0.0;   // depth as eta*zeta/gamma
  int step_index = 0;  // zeta step at which it was sampled

  double energy() const;  // sum |values|^2 * d_tau
};

/// Samples the boundary pulse on the grid. Fails (category "window") when the
/// grid window does not contain [tau0 - 5 sigma, tau0 + 5 sigma] or when the
/// truncated tail energy at either boundary exceeds 1e-8 of the pulse energy.
Envelope make_pulse(const PulseSpec& spec, const SimGrid& grid);

/// eta = gamma * N * lambda^2 / (8 pi), in gamma per unit length.
double coupling_constant(double number_density, double wavelength, double gamma);

std::string to_string(PulseSpec::Shape s);
PulseSpec::Shape pulse_shape_from_string(const std::string& s);

}  // namespace npulse
