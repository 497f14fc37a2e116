#pragma once

#include <span>
#include <vector>

#include "npulse/mb_solver.hpp"
#include "npulse/params.hpp"

namespace npulse {

/// |Omega~(omega)|^2 on an ascending frequency axis, normalized so that
/// sum(power) * d_omega == sum |Omega(tau)|^2 * d_tau (Parseval).
struct Spectrum {
  std::vector<double> omega;
  std::vector<double> power;
  double d_omega = 0.0;
};

Spectrum power_spectrum(const Envelope& envelope);

struct Peak {
  double position = 0.0;  // tau or omega
  double height = 0.0;
  double prominence = 0.0;
};

struct PeakSet {
  std::vector<Peak> peaks;  // sorted by position
  double rel_threshold = 0.0;
  double min_prominence = 0.0;
};

/// Local maxima above rel_threshold * max(signal) with prominence at least
/// min_prominence * max(signal). With refine=true, peak positions are
/// sharpened by a three-point parabolic fit (used on spectra).
PeakSet find_peaks(std::span<const double> signal, std::span<const double> axis,
                   double rel_threshold = 0.05, double min_prominence = 0.1,
                   bool refine = false);

/// Separation of the outermost peaks; requires at least two.
double subpulse_delay(const PeakSet& peaks);

/// Largest inter-peak valley relative to the smaller flanking peak; the
/// two-pulse structure counts as fully separated when every valley is below
/// 10% of the smaller neighbor.
bool fully_separated(std::span<const double> signal, const PeakSet& peaks,
                     std::span<const double> axis, double valley_fraction = 0.10);

struct CompareReport {
  double l2_distance = 0.0;  // between unit-L2-normalized exit intensities
  int peaks_a = 0;
  int peaks_b = 0;
  std::vector<double> peak_offsets;  // nearest-neighbor |pos_a - pos_b|
  double max_peak_offset = 0.0;
};

/// Exit-profile comparison of two records on a common tau grid.
CompareReport compare_records(const PropagationRecord& a, const PropagationRecord& b);

std::vector<double> intensity_trace(const Envelope& envelope);

}  // namespace npulse
