#include "npulse/mb_solver.hpp"

#include <cmath>
#include <string>

#include "npulse/bloch.hpp"
#include "npulse/dispersion.hpp"
#include "npulse/kernels.hpp"

namespace npulse {

void check_run_window(const PulseSpec& spec, const SimGrid& grid, const PhysParams& p,
                      double x_max) {
  double delay = 0.0;
  try {
    delay = std::max(0.0, group_delay(p, 0.0, x_max));
  } catch (const Error&) {
    // chi' degenerate (e.g. vanishing control field); no delay estimate
  }
  const double needed = spec.tau0 + 6.0 * spec.sigma_p + delay;
  if (grid.tau_span() < needed)
    fail("window", "time window " + std::to_string(grid.tau_span()) +
                       " too small: pulse plus group delay needs " + std::to_string(needed));
}

PropagationRecord propagate_full(const Envelope& pulse, const PhysParams& p, const SimGrid& grid) {
  p.validate();
  grid.validate();
  const double dx = p.eta * grid.d_zeta / p.gamma;
  if (dx > 0.5) fail("grid", "eta*d_zeta must be <= 0.5 gamma for the zeta march");

  PropagationRecord rec;
  rec.params = p;
  rec.grid = grid;
  rec.warnings = {};
  rec.diag.dx = dx;
  rec.diag.steps = grid.n_zeta;

  const size_t n = pulse.values.size();
  const double peak2 = kernels::max_abs2(pulse.values);
  rec.diag.max_amp_ratio = 1.0;

  Envelope cur = pulse;
  cur.zeta = 0.0;
  cur.step_index = 0;
  rec.snapshots.push_back(cur);

  const DensityMatrix rho0 = DensityMatrix::ground3();
  std::vector<cplx> s1(n), s2(n), pred(n), next(n);
  const cplx i_dx = I * dx;

  for (int step = 1; step <= grid.n_zeta; ++step) {
    double drift = 0.0;
    bloch_source(rho0, cur.values, grid.d_tau, p, s1, &drift);
    rec.diag.max_trace_drift = std::max(rec.diag.max_trace_drift, drift);

    kernels::add_scaled(pred, cur.values, i_dx, s1);
    bloch_source(rho0, pred, grid.d_tau, p, s2, &drift);
    rec.diag.max_trace_drift = std::max(rec.diag.max_trace_drift, drift);

    kernels::add_scaled2(next, cur.values, 0.5 * i_dx, s1, s2);
    cur.values.swap(next);
    cur.zeta = dx * step;
    cur.step_index = step;

    if (!kernels::all_finite(cur.values))
      fail("invariant", "non-finite envelope after zeta step " + std::to_string(step));
    if (peak2 > 0.0) {
      const double ratio2 = kernels::max_abs2(cur.values) / peak2;
      rec.diag.max_amp_ratio = std::max(rec.diag.max_amp_ratio, std::sqrt(ratio2));
      if (ratio2 > 100.0)
        fail("blowup", "|Omega| exceeded 10x the input peak at zeta step " + std::to_string(step) +
                           "; reduce d_zeta");
    }

    if (step % grid.record_stride == 0 || step == grid.n_zeta) rec.snapshots.push_back(cur);
  }
  return rec;
}

PropagationRecord propagate_full(const PulseSpec& spec, const PhysParams& p, const SimGrid& grid) {
  const Envelope pulse = make_pulse(spec, grid);
  check_run_window(spec, grid, p, p.eta * grid.d_zeta * grid.n_zeta / p.gamma);
  PropagationRecord rec = propagate_full(pulse, p, grid);
  rec.input = spec;
  return rec;
}

double transmission(const PropagationRecord& record) {
  if (record.snapshots.empty()) fail("invariant", "empty propagation record");
  const double in = kernels::sum_abs2(record.entry().values);
  if (in == 0.0) return 0.0;
  return kernels::sum_abs2(record.exit().values) / in;
}

}  // namespace npulse
