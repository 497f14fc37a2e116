#pragma once

#include <string>
#include <vector>

#include "npulse/params.hpp"

namespace npulse {

/// Stack of envelope snapshots at successive propagation depths.
struct PropagationRecord {
  std::vector<Envelope> snapshots;  // first entry is the input pulse
  PhysParams params;
  SimGrid grid;
  PulseSpec input;
  std::vector<std::string> warnings;

  struct Diagnostics {
    double max_trace_drift = 0.0;  // full solver only
    double max_amp_ratio = 0.0;    // max |Omega| / input peak over the run
    int steps = 0;
    double dx = 0.0;  // effective eta*d_zeta/gamma per step
  } diag;

  const Envelope& entry() const { return snapshots.front(); }
  const Envelope& exit() const { return snapshots.back(); }
  double exit_depth() const { return snapshots.back().zeta; }
};

/// Marches the probe envelope through the medium by alternating Bloch
/// integration along tau with a Heun (predictor-corrector) update in zeta,
/// Omega' = i eta (rho24 - rho13). Atoms restart in |3><3| at the first tau
/// sample of every slice. Requires eta*d_zeta <= 0.5 gamma.
PropagationRecord propagate_full(const Envelope& pulse, const PhysParams& p, const SimGrid& grid);

/// Convenience entry used by the CLI: builds the boundary pulse, runs the
/// window/group-delay setup check, and records the input spec.
PropagationRecord propagate_full(const PulseSpec& spec, const PhysParams& p, const SimGrid& grid);

/// Transmitted energy fraction: sum |Omega_exit|^2 / sum |Omega_input|^2.
double transmission(const PropagationRecord& record);

/// Shared run-setup check: the time window must hold the pulse plus the
/// accumulated group delay, tau_span >= tau0 + 6 sigma + x_max * Re beta1.
void check_run_window(const PulseSpec& spec, const SimGrid& grid, const PhysParams& p,
                      double x_max);

}  // namespace npulse
