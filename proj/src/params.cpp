#include "npulse/params.hpp"

#include <cmath>
#include <numbers>

namespace npulse {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Fraction of pulse energy lying beyond `dist` from the center, one side.
double tail_energy_fraction(PulseSpec::Shape shape, double dist, double sigma) {
  if (dist <= 0.0) return 1.0;
  switch (shape) {
    case PulseSpec::Shape::gaussian:
      // |Omega|^2 is Gaussian with std sigma/sqrt(2)
      return 0.5 * std::erfc(dist / sigma);
    case PulseSpec::Shape::sech:
      // integral of sech^2 tail over total 2*sigma
      return 0.5 * (1.0 - std::tanh(dist / sigma));
  }
  return 1.0;
}

}  // namespace

void PhysParams::validate() const {
  if (!(gamma > 0.0)) fail("config", "gamma must be positive");
  if (!(Gamma_g >= 0.0)) fail("config", "Gamma_g must be non-negative");
  if (!(eta > 0.0)) fail("config", "eta must be positive");
  if (!std::isfinite(Delta_P) || !std::isfinite(Delta_C) || !std::isfinite(Delta_Pp))
    fail("config", "detunings must be finite");
  if (!std::isfinite(Omega_c.real()) || !std::isfinite(Omega_c.imag()))
    fail("config", "Omega_c must be finite");
}

void PulseSpec::validate() const {
  if (!(amp >= 0.0)) fail("config", "pulse amp must be non-negative");
  if (!(sigma_p > 0.0)) fail("config", "pulse sigma_p must be positive");
  if (!(tau0 > 0.0)) fail("config", "pulse tau0 must be positive");
}

void SimGrid::validate() const {
  if (!is_pow2(n_tau)) fail("grid", "n_tau must be a power of two");
  if (!(d_tau > 0.0)) fail("grid", "d_tau must be positive");
  if (n_zeta < 0) fail("grid", "n_zeta must be non-negative");
  if (!(d_zeta > 0.0)) fail("grid", "d_zeta must be positive");
  if (record_stride < 1) fail("grid", "record_stride must be >= 1");
}

std::vector<double> SimGrid::tau_axis() const {
  std::vector<double> t(static_cast<size_t>(n_tau));
  for (int j = 0; j < n_tau; ++j) t[static_cast<size_t>(j)] = tau(j);
  return t;
}

double Envelope::energy() const {
  double e = 0.0;
  for (const cplx& v : values) e += std::norm(v);
  return e * grid.d_tau;
}

Envelope make_pulse(const PulseSpec& spec, const SimGrid& grid) {
  spec.validate();
  grid.validate();

  const double lo = spec.tau0 - 5.0 * spec.sigma_p;
  const double hi = spec.tau0 + 5.0 * spec.sigma_p;
  if (lo < 0.0 || hi > grid.tau_span())
    fail("window", "grid window does not contain [tau0 - 5 sigma, tau0 + 5 sigma]");

  const double left = tail_energy_fraction(spec.shape, spec.tau0, spec.sigma_p);
  const double right =
      tail_energy_fraction(spec.shape, grid.tau_span() - spec.tau0, spec.sigma_p);
  if (left > 1e-8 || right > 1e-8)
    fail("window", "truncated pulse tail at a window boundary exceeds 1e-8 of the energy");

  Envelope env;
  env.grid = grid;
  env.values.resize(static_cast<size_t>(grid.n_tau));
  for (int j = 0; j < grid.n_tau; ++j) {
    const double u = (grid.tau(j) - spec.tau0) / spec.sigma_p;
    double v = 0.0;
    switch (spec.shape) {
      case PulseSpec::Shape::gaussian:
        v = spec.amp * std::exp(-0.5 * u * u);
        break;
      case PulseSpec::Shape::sech:
        v = spec.amp / std::cosh(u);
        break;
    }
    env.values[static_cast<size_t>(j)] = cplx{v, 0.0};
  }
  return env;
}

double coupling_constant(double number_density, double wavelength, double gamma) {
  if (!(number_density > 0.0) || !(wavelength > 0.0) || !(gamma > 0.0))
    fail("config", "coupling_constant requires positive inputs");
  return gamma * number_density * wavelength * wavelength / (8.0 * std::numbers::pi);
}

std::string to_string(PulseSpec::Shape s) {
  return s == PulseSpec::Shape::gaussian ? "gaussian" : "sech";
}

PulseSpec::Shape pulse_shape_from_string(const std::string& s) {
  if (s == "gaussian") return PulseSpec::Shape::gaussian;
  if (s == "sech") return PulseSpec::Shape::sech;
  fail("config", "unknown pulse shape: " + s);
}

}  // namespace npulse
