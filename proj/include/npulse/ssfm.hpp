#pragma once

#include <span>
#include <string>
#include <vector>

#include "npulse/dispersion.hpp"
#include "npulse/mb_solver.hpp"
#include "npulse/params.hpp"

namespace npulse {

struct SsfmOptions {
  enum class LinearMode { taylor3, exact_chi };
  enum class SplitScheme { lie, strang };

  LinearMode linear_mode = LinearMode::taylor3;
  SplitScheme split_scheme = SplitScheme::strang;
  double d_zeta = 0.1;      // step in eta*d_zeta/gamma (dimensionless)
  int record_stride = 50;   // snapshot every this many model steps

  void validate() const;
};

/// Split-step Fourier solver for the reduced propagation model: linear
/// dispersion applied as exp(i dx chi_L(omega)) in the frequency domain and
/// the Kerr term as exp(i dx R_p |Omega|^2) in the time domain. Requires
/// Raman resonance; the total depth is eta*d_zeta*n_zeta/gamma taken from the
/// grid, marched with the model step opts.d_zeta.
PropagationRecord propagate_model(const Envelope& pulse, const PhysParams& p, const SimGrid& grid,
                                  const SsfmOptions& opts);

/// CLI entry: builds the pulse, runs setup checks, emits model-validity
/// warnings into the record.
PropagationRecord propagate_model(const PulseSpec& spec, const PhysParams& p, const SimGrid& grid,
                                  const SsfmOptions& opts);

/// Core stepper over caller-supplied symbols; used by the solver and directly
/// by tests (custom dispersion/Kerr coefficients).
/// `chi_symbol` holds chi_L(omega_k) per DFT mode.
PropagationRecord propagate_model_custom(const Envelope& pulse, std::span<const cplx> chi_symbol,
                                         cplx r_p, int n_steps, double dx,
                                         SsfmOptions::SplitScheme scheme, int record_stride);

/// Model validity conditions checked at run start (warnings, not errors):
/// (alpha) adiabatic pulse: sigma_p >= 10 * max(1/gamma, gamma/|Omega_c|^2);
/// (beta) narrow spectrum: 1/sigma_p within the Taylor validity radius;
/// (gamma) weak probe: |R_p| amp^2 <= 0.1 * Re beta1.
std::vector<std::string> model_validity_warnings(const PulseSpec& spec, const PhysParams& p);

}  // namespace npulse
