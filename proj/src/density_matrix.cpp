#include "npulse/density_matrix.hpp"

#include <cmath>

namespace npulse {

int coherence_slot(int i, int j) {
  // ordering: 12, 13, 14, 23, 24, 34
  static constexpr int slot[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
  return slot[i - 1][j - 1];
}

cplx DensityMatrix::rho(int i, int j) const {
  if (i == j) return cplx{pop[static_cast<size_t>(i - 1)], 0.0};
  if (i < j) return coh[static_cast<size_t>(coherence_slot(i, j))];
  return std::conj(coh[static_cast<size_t>(coherence_slot(j, i))]);
}

bool DensityMatrix::finite() const {
  for (double p : pop)
    if (!std::isfinite(p)) return false;
  for (const cplx& c : coh)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

}  // namespace npulse
