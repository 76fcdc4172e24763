#pragma once

#include <stdexcept>

namespace modwave {

// Accuracy targets shared by the numerical kernels.  rel_tol governs where a
// relative error makes sense; abs_floor takes over once magnitudes drop below
// it (oscillatory Bessel transition, spectral tails).  max_terms caps every
// series / panel budget so a bad argument fails instead of spinning.
struct PrecisionPolicy {
  double rel_tol = 1e-10;
  double abs_floor = 1e-13;
  int max_terms = 200000;

  void validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("PrecisionPolicy: rel_tol must be > 0");
    if (!(abs_floor >= 0.0)) throw std::invalid_argument("PrecisionPolicy: abs_floor must be >= 0");
    if (max_terms < 1) throw std::invalid_argument("PrecisionPolicy: max_terms must be >= 1");
  }
};

}  // namespace modwave
