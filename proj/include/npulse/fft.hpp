#pragma once

#include <vector>

#include "npulse/types.hpp"

namespace npulse {

/// Iterative radix-2 FFT for power-of-two sizes, with a precomputed twiddle
/// table. Deterministic: identical inputs give bit-identical outputs.
class Fft {
 public:
  explicit Fft(int n);

  int size() const { return n_; }

  /// In-place unnormalized transform: a_k <- sum_j a_j exp(sign * 2*pi*i*j*k/n).
  void transform(std::vector<cplx>& a, int sign) const;

 private:
  int n_;
  std::vector<cplx> twiddle_;  // exp(+2*pi*i*k/n), k < n/2
};

/// Frequency axis in standard DFT ordering: omega_k = 2*pi*k/(n*d_tau) for
/// k < n/2, negative frequencies for k >= n/2.
std::vector<double> omega_axis(int n, double d_tau);

/// Envelope samples -> mode amplitudes of the expansion
/// Omega(tau_j) = sum_k spec_k exp(-i omega_k tau_j). The analysis kernel is
/// exp(+i omega tau) with a 1/n factor, so to_time(to_spectrum(x)) == x.
std::vector<cplx> to_spectrum(const std::vector<cplx>& time_samples);
std::vector<cplx> to_time(const std::vector<cplx>& spectrum);

}  // namespace npulse
