#include "npulse/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace npulse {

Fft::Fft(int n) : n_(n) {
  if (n <= 0 || (n & (n - 1)) != 0) fail("grid", "FFT size must be a power of two");
  twiddle_.resize(static_cast<size_t>(n / 2));
  for (int k = 0; k < n / 2; ++k)
    twiddle_[static_cast<size_t>(k)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

void Fft::transform(std::vector<cplx>& a, int sign) const {
  const size_t n = static_cast<size_t>(n_);
  if (a.size() != n) fail("grid", "FFT input size mismatch");

  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t stride = n / len;
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < len / 2; ++k) {
        cplx w = twiddle_[k * stride];
        if (sign < 0) w = std::conj(w);
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

std::vector<double> omega_axis(int n, double d_tau) {
  std::vector<double> w(static_cast<size_t>(n));
  const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * d_tau);
  for (int k = 0; k < n; ++k) {
    const int kk = (k < n / 2) ? k : k - n;
    w[static_cast<size_t>(k)] = dw * kk;
  }
  return w;
}

std::vector<cplx> to_spectrum(const std::vector<cplx>& time_samples) {
  std::vector<cplx> a = time_samples;
  const Fft fft(static_cast<int>(a.size()));
  fft.transform(a, +1);
  const double inv_n = 1.0 / static_cast<double>(a.size());
  for (cplx& v : a) v *= inv_n;
  return a;
}

std::vector<cplx> to_time(const std::vector<cplx>& spectrum) {
  std::vector<cplx> a = spectrum;
  const Fft fft(static_cast<int>(a.size()));
  fft.transform(a, -1);
  return a;
}

}  // namespace npulse
