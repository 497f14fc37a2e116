#pragma once

#include <vector>

#include "npulse/density_matrix.hpp"
#include "npulse/params.hpp"

namespace npulse {

/// Master-equation right-hand side for a given instantaneous probe Rabi value.
/// The returned derivative is traceless (rho44 closed by trace conservation)
/// and Hermitian by the storage convention.
DensityMatrix bloch_rhs(const DensityMatrix& rho, cplx omega_p, const PhysParams& p);

struct BlochTrajectory {
  std::vector<DensityMatrix> states;  // one per time sample
  std::vector<cplx> source;           // s(tau) = rho24 - rho13
  double max_trace_drift = 0.0;
};

/// Fixed-step RK4 along tau with the probe envelope interpolated linearly at
/// half-steps. Throws (category "invariant") when the trace drifts by more
/// than 1e-6 or a population leaves [-1e-6, 1+1e-6], which signals a too
/// coarse d_tau.
BlochTrajectory integrate_bloch(const DensityMatrix& rho0, const Envelope& envelope,
                                const PhysParams& p);

/// Same integration, but returns only s(tau) = rho24(tau) - rho13(tau); used
/// in the propagation hot path. `max_trace_drift`, when non-null, receives
/// the largest |trace-1| seen.
void bloch_source(const DensityMatrix& rho0, const std::vector<cplx>& envelope,
                  double d_tau, const PhysParams& p, std::vector<cplx>& source,
                  double* max_trace_drift = nullptr);

}  // namespace npulse
