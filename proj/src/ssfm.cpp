#include "npulse/ssfm.hpp"

#include <cmath>
#include <string>

#include "npulse/fft.hpp"
#include "npulse/kernels.hpp"

namespace npulse {

void SsfmOptions::validate() const {
  if (!(d_zeta > 0.0)) fail("config", "ssfm d_zeta must be positive");
  if (record_stride < 1) fail("config", "ssfm record_stride must be >= 1");
}

namespace {

// Fraction of spectral power in the outer 10% of the frequency grid.
double outer_band_fraction(const std::vector<cplx>& spec) {
  const size_t n = spec.size();
  const size_t half = n / 2;
  const size_t guard = static_cast<size_t>(static_cast<double>(half) * 0.1);
  double outer = 0.0, total = 0.0;
  for (size_t k = 0; k < n; ++k) {
    const size_t dist_from_nyquist = (k < half) ? half - k : k - half;
    const double pw = std::norm(spec[k]);
    total += pw;
    if (dist_from_nyquist <= guard) outer += pw;
  }
  return total > 0.0 ? outer / total : 0.0;
}

}  // namespace

PropagationRecord propagate_model_custom(const Envelope& pulse, std::span<const cplx> chi_symbol,
                                         cplx r_p, int n_steps, double dx,
                                         SsfmOptions::SplitScheme scheme, int record_stride) {
  const size_t n = pulse.values.size();
  if (chi_symbol.size() != n) fail("grid", "chi symbol size does not match the envelope grid");
  const Fft fft(static_cast<int>(n));

  PropagationRecord rec;
  rec.grid = pulse.grid;
  rec.diag.steps = n_steps;
  rec.diag.dx = dx;
  rec.diag.max_amp_ratio = 1.0;

  const double peak2 = kernels::max_abs2(pulse.values);
  const double inv_n = 1.0 / static_cast<double>(n);

  // Phase masks for one full and one half linear step (include the 1/n of the
  // inverse transform so the round trip is exactly normalized).
  std::vector<cplx> full_mask(n), half_mask(n);
  for (size_t k = 0; k < n; ++k) {
    full_mask[k] = std::exp(I * dx * chi_symbol[k]) * inv_n;
    half_mask[k] = std::exp(I * (0.5 * dx) * chi_symbol[k]) * inv_n;
  }

  Envelope cur = pulse;
  cur.zeta = 0.0;
  cur.step_index = 0;
  rec.snapshots.push_back(cur);

  std::vector<cplx> work;
  auto linear_step = [&](const std::vector<cplx>& mask) {
    work = cur.values;
    fft.transform(work, +1);
    kernels::multiply_inplace(work, mask);
    fft.transform(work, -1);
    cur.values.swap(work);
  };

  double max_alias = 0.0;
  for (int step = 1; step <= n_steps; ++step) {
    if (scheme == SsfmOptions::SplitScheme::strang) {
      linear_step(half_mask);
      kernels::kerr_phase_inplace(cur.values, I * dx * r_p);
      linear_step(half_mask);
    } else {
      linear_step(full_mask);
      kernels::kerr_phase_inplace(cur.values, I * dx * r_p);
    }
    cur.zeta = dx * step;
    cur.step_index = step;

    if (!kernels::all_finite(cur.values))
      fail("invariant", "non-finite envelope after model step " + std::to_string(step));
    if (peak2 > 0.0) {
      const double ratio2 = kernels::max_abs2(cur.values) / peak2;
      rec.diag.max_amp_ratio = std::max(rec.diag.max_amp_ratio, std::sqrt(ratio2));
      if (ratio2 > 100.0)
        fail("blowup", "|Omega| exceeded 10x the input peak at model step " + std::to_string(step));
    }

    if (step % record_stride == 0 || step == n_steps) {
      rec.snapshots.push_back(cur);
      std::vector<cplx> spec = cur.values;
      fft.transform(spec, +1);
      max_alias = std::max(max_alias, outer_band_fraction(spec));
    }
  }
  if (max_alias > 1e-6)
    rec.warnings.push_back("aliasing: spectral power fraction " + std::to_string(max_alias) +
                           " in the outer 10% of the frequency grid");
  return rec;
}

PropagationRecord propagate_model(const Envelope& pulse, const PhysParams& p, const SimGrid& grid,
                                  const SsfmOptions& opts) {
  p.validate();
  grid.validate();
  opts.validate();
  if (!p.raman_resonant())
    fail("raman", "the reduced model requires Raman resonance (Delta_P == Delta_C)");

  const DispersionSet disp = dispersion_set(p);
  const std::vector<double> w = omega_axis(grid.n_tau, grid.d_tau);
  std::vector<cplx> symbol(w.size());
  for (size_t k = 0; k < w.size(); ++k)
    symbol[k] = (opts.linear_mode == SsfmOptions::LinearMode::taylor3) ? disp.chi_taylor(w[k])
                                                                       : chi(w[k], p);

  const double x_max = p.eta * grid.d_zeta * grid.n_zeta / p.gamma;
  const int n_steps = std::max(1, static_cast<int>(std::lround(x_max / opts.d_zeta)));
  const double dx = x_max / n_steps;

  PropagationRecord rec = propagate_model_custom(pulse, symbol, disp.R_p, n_steps, dx,
                                                 opts.split_scheme, opts.record_stride);
  rec.params = p;
  rec.grid = grid;
  return rec;
}

PropagationRecord propagate_model(const PulseSpec& spec, const PhysParams& p, const SimGrid& grid,
                                  const SsfmOptions& opts) {
  const Envelope pulse = make_pulse(spec, grid);
  check_run_window(spec, grid, p, p.eta * grid.d_zeta * grid.n_zeta / p.gamma);
  std::vector<std::string> validity = model_validity_warnings(spec, p);
  PropagationRecord rec = propagate_model(pulse, p, grid, opts);
  rec.input = spec;
  rec.warnings.insert(rec.warnings.begin(), validity.begin(), validity.end());
  return rec;
}

std::vector<std::string> model_validity_warnings(const PulseSpec& spec, const PhysParams& p) {
  std::vector<std::string> out;
  const double oc2 = std::norm(p.Omega_c);
  if (oc2 <= 0.0) return {"validity: control field vanishes"};

  const double medium_time = std::max(1.0 / p.gamma, p.gamma / oc2);
  if (spec.sigma_p < 10.0 * medium_time)
    out.push_back("validity-alpha: pulse too short for the adiabatic approximation (sigma_p < 10 * " +
                  std::to_string(medium_time) + ")");

  const double bandwidth = 1.0 / spec.sigma_p;
  const double radius = taylor_validity_radius(p);
  if (bandwidth > radius)
    out.push_back("validity-beta: pulse bandwidth " + std::to_string(bandwidth) +
                  " exceeds the Taylor radius " + std::to_string(radius));

  const double nl = std::abs(kerr_coefficient(p)) * spec.amp * spec.amp;
  const double lin = (1.0 / oc2);
  if (nl > 0.1 * lin)
    out.push_back("validity-gamma: probe intensity too strong for a third-order treatment (|R_p| amp^2 = " +
                  std::to_string(nl) + ")");
  return out;
}

}  // namespace npulse
