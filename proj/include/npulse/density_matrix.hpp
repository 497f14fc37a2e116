#pragma once

#include <array>

#include "npulse/types.hpp"

namespace npulse {

/// Four-level atomic density matrix. States 1,2 are excited, 3,4 are ground.
/// Hermitian by storage: real populations plus the six upper-triangle
/// coherences; the lower triangle is conj() of the upper on access.
struct DensityMatrix {
  // coherence slots, rho_ij with i<j
  enum { u12 = 0, u13 = 1, u14 = 2, u23 = 3, u24 = 4, u34 = 5 };

  std::array<double, 4> pop{};  // rho11..rho44
  std::array<cplx, 6> coh{};

  static DensityMatrix ground3() {
    DensityMatrix r;
    r.pop[2] = 1.0;
    return r;
  }

  double trace() const { return pop[0] + pop[1] + pop[2] + pop[3]; }

  /// Full-matrix element view, 1-based indices.
  cplx rho(int i, int j) const;

  bool finite() const;
};

/// Slot index for the coherence rho_ij (requires 1 <= i < j <= 4).
int coherence_slot(int i, int j);

}  // namespace npulse
