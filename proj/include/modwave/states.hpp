#pragma once

#include <complex>
#include <functional>

#include "modwave/precision.hpp"

namespace modwave {

using cplx = std::complex<double>;

// Smooth positive profile a(y) supported in [2, 3]; the Lagrangian state is
// f_r(x+iy) = a(y) y^{-ir} on the fundamental domain.
class BumpProfile {
 public:
  // amplitude * exp(-1/((y-2)(3-y))) on (2, 3), zero elsewhere.
  explicit BumpProfile(double amplitude = 1.0);

  double operator()(double y) const;
  double amplitude() const { return amplitude_; }
  double support_lo() const { return 2.0; }
  double support_hi() const { return 3.0; }
  double max_value() const;  // sup a = amplitude * e^{-4}

  // Mellin transform  \hat a(eta) = int a(y) y^{-1/2 + i eta} dy/y.
  cplx mellin_hat(double eta) const;
  // C_a = \hat a(0) = int a(y) y^{-3/2} dy  (real, positive).
  double mellin_peak() const;
  // Constant spectral component  \hat f_r(0) = int a(y) y^{-ir-2} dy.
  cplx constant_component(double r) const;
  // ||f_r||^2 = int a(y)^2 y^{-2} dy (r-independent).
  double l2_norm_sq() const;

  // Smallest W with  int_W^inf |\hat a|  below `tail_abs` (scanned
  // numerically; the Mellin decay of this profile is ~exp(-c sqrt(eta))).
  double window_half_width(double tail_abs) const;

 private:
  double amplitude_;
};

// u_T(sigma) = (e^{iT sigma} - 1)/(iT sigma) = (1/T) int_0^T e^{it sigma} dt.
// T = 0 yields 1 identically.  |u_T| <= min(1, 2/(T|sigma|)).
cplx wave_average_factor(double T, double sigma);
// Taylor form used below |T sigma| = 1e-6 (exposed for verification).
cplx wave_average_factor_series(double T, double sigma);

// Time-average factor for the constant eigenfunction: sqrt(-Delta - 1/4)
// on constants is i/2, so (1/T) int_0^T e^{it(i/2 + r)} dt.
cplx wave_average_constant_factor(double T, double r);

// Window h centered at r_j: normalized truncated-Gaussian kernel,
// int h = 1, support [center - 6 eps, center + 6 eps].
struct QuasimodeWindow {
  double center;
  double eps;

  QuasimodeWindow(double center_, double eps_);

  double operator()(double r) const;
  double support_lo() const { return center - 6.0 * eps; }
  double support_hi() const { return center + 6.0 * eps; }

  // Plain-convention transform  \hat h(t) = int h(r) e^{-irt} dr, so that
  // \hat h(0) = 1 and the Plancherel pairing <f,g> = (1/2pi)<\hat f,\hat g>.
  cplx fourier(double t) const;

  // int h(r) |r - center| dr; the window family hypothesis requires this
  // to stay of size 1/log(center).
  double first_moment() const;

 private:
  double norm_;
};

}  // namespace modwave
