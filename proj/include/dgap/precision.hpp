#ifndef DGAP_PRECISION_HPP
#define DGAP_PRECISION_HPP

#include <cmath>
#include <stdexcept>

namespace dgap {

// Working precision for every scalar created downstream, plus the relative
// tolerance used by series stopping rules and fixed-point iterations.
//
// Gaps decay like 1/(4^{2m}(m!)^2), which falls below double resolution
// already near m ~ 8, hence the 256-bit default.
struct PrecisionConfig {
  int precision_bits = 256;
  double rel_tol = 1e-30;

  void validate() const {
    if (precision_bits < 53)
      throw std::invalid_argument("PrecisionConfig: precision_bits must be >= 53");
    if (!(rel_tol > 0.0) || !(rel_tol < 1.0))
      throw std::invalid_argument("PrecisionConfig: rel_tol must lie in (0, 1)");
    // rel_tol >= 2^(4 - precision_bits); compare in log2 so large precision_bits
    // cannot underflow the right-hand side.
    if (std::log2(rel_tol) < 4.0 - static_cast<double>(precision_bits))
      throw std::invalid_argument(
          "PrecisionConfig: rel_tol below 2^(4 - precision_bits)");
  }

  static PrecisionConfig with_bits(int bits) {
    PrecisionConfig cfg;
    cfg.precision_bits = bits;
    cfg.validate();
    return cfg;
  }
};

}  // namespace dgap

#endif  // DGAP_PRECISION_HPP
