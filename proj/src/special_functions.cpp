#include "modwave/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "modwave/quadrature.hpp"

namespace modwave {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kLogPi = 1.14472988584940017414342735135;
constexpr double kLog2Pi = 1.83787706640934548356065947281;

// Lanczos rational approximation, g = 6.024680040776729583740234375,
// 13 terms tuned for double precision (sqrt(2*pi) absorbed in the
// numerator).  Valid for Re z >= 1/2.
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr std::array<double, 13> kLanczosNum = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408};
constexpr std::array<double, 13> kLanczosDen = {0.0,       39916800.0, 120543840.0, 150917976.0,
                                                105258076.0, 45995730.0, 13339535.0,  2637558.0,
                                                357423.0,    32670.0,    1925.0,      66.0,
                                                1.0};

cplx lanczos_sum(cplx z) {
  // Rational evaluation num(z)/den(z); coefficients are ordered by
  // ascending power with kLanczosNum[12] the leading one.
  cplx num = kLanczosNum[12], den = kLanczosDen[12];
  for (int i = 11; i >= 0; --i) {
    num = num * z + kLanczosNum[i];
    den = den * z + kLanczosDen[i];
  }
  return num / den;
}

bool is_nonpositive_integer(cplx z) {
  if (z.imag() != 0.0) return false;
  const double re = z.real();
  return re <= 0.0 && re == std::floor(re);
}

// log sin(pi z) without overflow for large |Im z|; some 2*pi*i branch.
cplx log_sin_pi(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const cplx ipz = cplx(0.0, kPi) * z;
  // sin(pi z) = -exp(-i pi z) (1 - exp(2 i pi z)) / (2i),  |exp(2 i pi z)| < 1
  const cplx q = std::exp(2.0 * ipz);
  return -ipz + std::log((1.0 - q) / cplx(0.0, 2.0)) + cplx(0.0, kPi);
}

// Bernoulli(2k)/(2k)! for the Euler-Maclaurin tail.
constexpr std::array<double, 14> kBernOverFact = {
    1.0,
    8.3333333333333333e-02,
    -1.3888888888888889e-03,
    3.3068783068783069e-05,
    -8.2671957671957672e-07,
    2.0876756987868099e-08,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580617e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21};

cplx zeta_euler_maclaurin(cplx s, int n_terms, double rel_tol) {
  cplx acc = 0.0;
  for (int n = 1; n < n_terms; ++n) acc += std::exp(-s * std::log(double(n)));
  const double logN = std::log(double(n_terms));
  const cplx n_to_minus_s = std::exp(-s * logN);
  acc += n_to_minus_s * double(n_terms) / (s - 1.0);
  acc += 0.5 * n_to_minus_s;
  // Correction sum: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  cplx poch = s;                                // rising factorial, length 2k-1
  cplx npow = n_to_minus_s / double(n_terms);   // N^{-s-2k+1}, here k = 1
  const double inv_n2 = 1.0 / (double(n_terms) * double(n_terms));
  double prev_mag = std::numeric_limits<double>::max();
  for (std::size_t k = 1; k < kBernOverFact.size(); ++k) {
    const cplx term = kBernOverFact[k] * poch * npow;
    const double mag = std::abs(term);
    if (mag > prev_mag) break;  // asymptotic tail started to diverge
    acc += term;
    if (mag < rel_tol * 1e-3 * std::abs(acc)) break;
    prev_mag = mag;
    poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
    npow *= inv_n2;
  }
  return acc;
}

}  // namespace

cplx log_gamma_complex(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_gamma_complex(std::conj(z)));
  if (z.real() < 0.5) {
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
    return kLogPi - log_sin_pi(z) - log_gamma_complex(1.0 - z);
  }
  const cplx zgh = z + (kLanczosG - 0.5);
  return (z - 0.5) * std::log(zgh) - zgh + std::log(lanczos_sum(z));
}

cplx gamma_complex(cplx z, const PrecisionPolicy& policy) {
  policy.validate();
  if (is_nonpositive_integer(z)) throw std::domain_error("gamma_complex: pole at non-positive integer");
  const cplx lg = log_gamma_complex(z);
  if (lg.real() > 709.0) throw std::overflow_error("gamma_complex: overflow");
  return std::exp(lg);
}

cplx zeta(cplx s, const PrecisionPolicy& policy) {
  policy.validate();
  if (s.imag() < 0.0) return std::conj(zeta(std::conj(s), policy));
  if (std::abs(s - 1.0) < 1e-13) throw std::domain_error("zeta: pole at s = 1");
  if (std::abs(s.imag()) > 1100.0) throw std::range_error("zeta: |Im s| out of supported range");
  if (std::abs(s) < 1e-10) return cplx(-0.5, 0.0) - 0.5 * kLog2Pi * s;

  if (s.real() >= 0.5) {
    int n_terms = std::max(20, int(std::ceil(2.0 * std::abs(s.imag()))));
    n_terms = std::min(n_terms, policy.max_terms);
    return zeta_euler_maclaurin(s, n_terms, policy.rel_tol);
  }
  // Functional equation, kept in log space so sin * Gamma never overflows:
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  const cplx w = 1.0 - s;
  const cplx factor = std::exp(s * std::log(2.0) + (s - 1.0) * kLogPi + log_sin_pi(s / 2.0) +
                               log_gamma_complex(w));
  return factor * zeta(w, policy);
}

cplx xi_completed(cplx s, const PrecisionPolicy& policy) {
  policy.validate();
  if (std::abs(s) < 1e-8 || std::abs(s - 1.0) < 1e-8)
    throw std::domain_error("xi_completed: pole at s = 0 or s = 1");
  if (s.imag() < 0.0) return std::conj(xi_completed(std::conj(s), policy));
  return std::exp(-0.5 * s * kLogPi + log_gamma_complex(0.5 * s)) * zeta(s, policy);
}

namespace {

// ---- K_{ir}(x) kernels -------------------------------------------------
//
// Two representations, each used where it has no exponential cancellation:
//
//  (a) real axis:  K_{ir}(x) = int_0^inf e^{-x cosh t} cos(rt) dt,
//      adequate while x f(theta0) stays small, theta0 = asin(r/x),
//      f = cos(theta0) + theta0 r/x - 1 (the log of the cancellation ratio).
//  (b) rotated contour through Im t = pi/2, where the integrand modulus
//      matches the true scale e^{-pi r/2}:
//        e^{pi r/2} K_{ir}(x) = Re [ int_0^{u1} e^{i(ru - x sinh u)} du
//                                  + int_0^{pi/2} -i e^{g(v)} dv ],
//        g(v) = rv - x cosh(u1) sin v + i (r u1 - x sinh(u1) cos v),
//      with x cosh(u1) = (pi/2)(r + M); the dropped horizontal tail is
//      below e^{-pi M/2}.

struct OscPanelWalker {
  // Splits an interval into panels small enough that the local phase
  // change stays near `budget` radians, then applies 7-point GL.
  double budget = 2.2;
};

double bessel_real_axis_scaled_log(double r, double x, const PrecisionPolicy& policy,
                                   double* log_out) {
  // Returns I = int_0^T e^{-x(cosh t - 1)} cos(rt) dt (integrand is O(1));
  // K = e^{-x} I.  log_out receives log(I) when I > 0.
  const double t_end = std::acosh(1.0 + 46.0 / x);
  const auto f = [&](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::cos(r * t); };
  const int init = std::max(4, int(std::ceil(t_end * std::max(r, 1.0) / 3.0)));
  const double val = adaptive_gk<double>(f, 0.0, t_end, policy.rel_tol * 0.1, 1e-17,
                                         std::max(policy.max_terms / 15, 2000), init);
  if (log_out) *log_out = val > 0.0 ? std::log(val) : std::numeric_limits<double>::quiet_NaN();
  return val;
}

double bessel_staircase_scaled(double r, double x) {
  constexpr double margin = 45.0;
  const double rho = 0.5 * kPi * (r + margin);
  const double u1 = rho > x ? std::acosh(rho / x) : 0.0;
  cplx total = 0.0;

  // Horizontal leg at Im t = pi/2: integrand e^{i psi(u)}, psi = ru - x sinh u.
  if (u1 > 0.0) {
    double u = 0.0;
    while (u < u1) {
      const double rate0 = std::abs(r - x * std::cosh(u));
      double h = std::min({2.2 / std::max(1.0, rate0), 0.35, u1 - u});
      // keep the phase change small across the panel: first-order rate at
      // both ends plus the curvature |psi''| = x sinh u near the saddle
      const double rate1 = std::abs(r - x * std::cosh(std::min(u + h, u1)));
      const double curv = x * std::sinh(std::min(u + h, u1));
      h = std::min({h, 2.2 / std::max(1.0, std::max(rate0, rate1)),
                    std::sqrt(4.4 / std::max(1.0, curv))});
      if (u + h > u1) h = u1 - u;
      gl_panel<7>(u, u + h, [&](double un, double wn) {
        total += wn * std::exp(cplx(0.0, r * un - x * std::sinh(un)));
      });
      u += h;
    }
  }

  // Descending leg t = u1 + i(pi/2 - v).
  const double ch = x * std::cosh(u1), sh = x * std::sinh(u1);
  double v = 0.0;
  while (v < 0.5 * kPi) {
    const double decay = ch * std::sin(v) - r * v;
    if (decay > 42.0) break;  // modulus below e^{-42}
    const double rate = std::hypot(r - ch * std::cos(v), sh * std::sin(v));
    const double h = std::min({2.2 / std::max(1.0, rate), 0.25, 0.5 * kPi - v});
    gl_panel<7>(v, v + h, [&](double vn, double wn) {
      const cplx expo(r * vn - ch * std::sin(vn), r * u1 - sh * std::cos(vn));
      total += wn * cplx(0.0, -1.0) * std::exp(expo);
    });
    v += h;
  }
  return total.real();
}

bool real_axis_preferred(double r, double x) {
  if (r == 0.0) return true;
  if (x <= r) return false;
  const double theta0 = std::asin(std::min(r / x, 1.0));
  const double f = std::cos(theta0) + theta0 * r / x - 1.0;
  return x * f <= 14.0;
}

void check_bessel_envelope(double r, double x) {
  if (!(x >= 0.5)) throw std::range_error("bessel_k: x below supported range (x >= 0.5)");
  if (!(r <= 500.0)) throw std::range_error("bessel_k: order above supported range (r <= 500)");
  if (!std::isfinite(r) || !std::isfinite(x)) throw std::range_error("bessel_k: non-finite argument");
}

}  // namespace

double bessel_k_scaled(double r, double x, const PrecisionPolicy& policy) {
  policy.validate();
  r = std::abs(r);  // K_{ir} = K_{-ir}
  check_bessel_envelope(r, x);
  if (real_axis_preferred(r, x)) {
    double log_i;
    const double val = bessel_real_axis_scaled_log(r, x, policy, &log_i);
    const double expo = 0.5 * kPi * r - x;
    if (std::isnan(log_i)) return std::exp(expo) * val;
    const double le = expo + log_i;
    if (le < -745.0) return 0.0;
    return std::exp(le);
  }
  return bessel_staircase_scaled(r, x);
}

double bessel_k_imag_order(double r, double x, const PrecisionPolicy& policy) {
  policy.validate();
  r = std::abs(r);
  check_bessel_envelope(r, x);
  if (real_axis_preferred(r, x)) {
    double log_i;
    const double val = bessel_real_axis_scaled_log(r, x, policy, &log_i);
    if (std::isnan(log_i)) return std::exp(-x) * val;
    const double le = log_i - x;
    if (le < -745.0) return 0.0;
    return std::exp(le);
  }
  return std::exp(-0.5 * kPi * r) * bessel_staircase_scaled(r, x);
}

}  // namespace modwave
