#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace npulse {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Runtime error carrying a stable machine-readable category.
/// Categories are part of the CLI contract (they map to exit codes):
///   config, window, grid, pole, raman, zero-control, blowup,
///   invariant, peaks, io
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

[[noreturn]] inline void fail(const std::string& category, const std::string& message) {
  throw Error(category, message);
}

}  // namespace npulse
