#pragma once

#include <complex>

#include "modwave/precision.hpp"

namespace modwave {

using cplx = std::complex<double>;

// log Gamma(z) (a branch; exact on conjugation).  Lanczos for Re z >= 1/2,
// reflection in log space below, stable for |Im z| up to ~10^3.
cplx log_gamma_complex(cplx z);

// Gamma(z).  Throws std::domain_error at non-positive integers and
// std::overflow_error if the value exceeds the double range.
cplx gamma_complex(cplx z, const PrecisionPolicy& policy = {});

// Riemann zeta via Euler-Maclaurin (Re s >= 1/2) with the functional
// equation below that line.  Throws std::domain_error at s = 1 and
// std::range_error outside the supported strip.
cplx zeta(cplx s, const PrecisionPolicy& policy = {});

// Completed zeta xi(s) = pi^{-s/2} Gamma(s/2) zeta(s); poles at 0 and 1
// are signalled as std::domain_error when approached closer than 1e-8.
cplx xi_completed(cplx s, const PrecisionPolicy& policy = {});

// K_{ir}(x) for real order parameter r >= 0 and x >= 0.5 (r <= 500).
// Real-valued; relative accuracy in the monotone regime, absolute accuracy
// (~abs_floor) through the oscillatory transition.
double bessel_k_imag_order(double r, double x, const PrecisionPolicy& policy = {});

// e^{pi r/2} K_{ir}(x): the normalization in which the Eisenstein Fourier
// modes are O(1).  Computed on a rotated contour, absolute error ~1e-13
// uniformly over the envelope.
double bessel_k_scaled(double r, double x, const PrecisionPolicy& policy = {});

}  // namespace modwave
