#include "modwave/states.hpp"

#include <cmath>
#include <stdexcept>

#include "modwave/quadrature.hpp"

namespace modwave {

BumpProfile::BumpProfile(double amplitude) : amplitude_(amplitude) {
  if (!(amplitude > 0.0)) throw std::invalid_argument("BumpProfile: amplitude must be > 0");
}

double BumpProfile::operator()(double y) const {
  if (y <= 2.0 || y >= 3.0) return 0.0;
  return amplitude_ * std::exp(-1.0 / ((y - 2.0) * (3.0 - y)));
}

double BumpProfile::max_value() const { return amplitude_ * std::exp(-4.0); }

cplx BumpProfile::mellin_hat(double eta) const {
  const auto re = [&](double y) { return (*this)(y)*std::cos(eta * std::log(y)) * std::pow(y, -1.5); };
  const auto im = [&](double y) { return (*this)(y)*std::sin(eta * std::log(y)) * std::pow(y, -1.5); };
  const int init = std::max(4, int(std::abs(eta) * std::log(1.5) / 2.0) + 1);
  return {adaptive_gk<double>(re, 2.0, 3.0, 1e-12, 1e-16, 4000, init),
          adaptive_gk<double>(im, 2.0, 3.0, 1e-12, 1e-16, 4000, init)};
}

double BumpProfile::mellin_peak() const { return mellin_hat(0.0).real(); }

cplx BumpProfile::constant_component(double r) const {
  const auto re = [&](double y) { return (*this)(y)*std::cos(r * std::log(y)) / (y * y); };
  const auto im = [&](double y) { return (*this)(y)*std::sin(r * std::log(y)) / (y * y); };
  const int init = std::max(4, int(std::abs(r) * std::log(1.5) / 2.0) + 1);
  return {adaptive_gk<double>(re, 2.0, 3.0, 1e-12, 1e-16, 4000, init),
          -adaptive_gk<double>(im, 2.0, 3.0, 1e-12, 1e-16, 4000, init)};
}

double BumpProfile::l2_norm_sq() const {
  const auto f = [&](double y) {
    const double v = (*this)(y);
    return v * v / (y * y);
  };
  return adaptive_gk<double>(f, 2.0, 3.0, 1e-12, 1e-18, 2000, 4);
}

double BumpProfile::window_half_width(double tail_abs) const {
  if (!(tail_abs > 0.0)) throw std::invalid_argument("window_half_width: tail must be > 0");
  // March outward in steps, accumulating int |\hat a| from far out; the
  // profile's transform decays ~ e^{-c sqrt(eta)}, so a trapezoid scan on a
  // unit grid resolves the tail integral to the accuracy that matters here.
  constexpr double kStep = 2.0;
  constexpr double kFar = 900.0;
  double acc = 0.0, prev = std::abs(mellin_hat(kFar));
  double w = kFar;
  while (w > kStep) {
    const double cur = std::abs(mellin_hat(w - kStep));
    acc += 0.5 * (cur + prev) * kStep;
    prev = cur;
    w -= kStep;
    if (acc > tail_abs) return w + kStep;
  }
  return kStep;
}

cplx wave_average_factor_series(double T, double sigma) {
  const double x = T * sigma;
  // sum_k (ix)^k/(k+1)!
  return cplx(1.0 - x * x / 6.0, x / 2.0 - x * x * x / 24.0);
}

cplx wave_average_factor(double T, double sigma) {
  if (T < 0.0) throw std::invalid_argument("wave_average_factor: T must be >= 0");
  const double x = T * sigma;
  if (std::abs(x) < 1e-6) return wave_average_factor_series(T, sigma);
  // (e^{ix}-1)/(ix) = sin(x)/x + i (1-cos x)/x, cancellation-free
  const double s2 = std::sin(0.5 * x);
  return {std::sin(x) / x, 2.0 * s2 * s2 / x};
}

cplx wave_average_constant_factor(double T, double r) {
  if (T < 0.0) throw std::invalid_argument("wave_average_constant_factor: T must be >= 0");
  if (T == 0.0) return 1.0;
  // (1/T) int_0^T e^{-t/2} e^{itr} dt = (1 - e^{-T/2} e^{iTr}) / (T(1/2 - ir))
  const cplx num = 1.0 - std::exp(-0.5 * T) * cplx(std::cos(T * r), std::sin(T * r));
  return num / (T * cplx(0.5, -r));
}

QuasimodeWindow::QuasimodeWindow(double center_, double eps_) : center(center_), eps(eps_) {
  if (!(eps > 0.0)) throw std::invalid_argument("QuasimodeWindow: eps must be > 0");
  // normalize the truncated Gaussian so that int h = 1
  const auto raw = [&](double r) {
    const double t = (r - center) / eps;
    return std::exp(-0.5 * t * t);
  };
  norm_ = adaptive_gk<double>(raw, support_lo(), support_hi(), 1e-13, 1e-18, 2000, 8);
}

double QuasimodeWindow::operator()(double r) const {
  if (r <= support_lo() || r >= support_hi()) return 0.0;
  const double t = (r - center) / eps;
  return std::exp(-0.5 * t * t) / norm_;
}

cplx QuasimodeWindow::fourier(double t) const {
  const auto re = [&](double r) { return (*this)(r)*std::cos(r * t); };
  const auto im = [&](double r) { return (*this)(r)*std::sin(r * t); };
  const int init = std::max(4, int(std::abs(t) * 12.0 * eps / 3.0) + 1);
  return {adaptive_gk<double>(re, support_lo(), support_hi(), 1e-11, 1e-15, 4000, init),
          -adaptive_gk<double>(im, support_lo(), support_hi(), 1e-11, 1e-15, 4000, init)};
}

double QuasimodeWindow::first_moment() const {
  const auto f = [&](double r) { return (*this)(r)*std::abs(r - center); };
  // split at the center so the kink sits on a panel edge
  return adaptive_gk<double>(f, support_lo(), center, 1e-12, 1e-16, 2000, 4) +
         adaptive_gk<double>(f, center, support_hi(), 1e-12, 1e-16, 2000, 4);
}

}  // namespace modwave
