#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "modwave/precision.hpp"

namespace modwave {

// Point x + iy in the hyperbolic upper half-plane.
struct UpperHalfPoint {
  double x = 0.0;
  double y = 1.0;
};

// Element of SL(2,Z) acting by Moebius transformations.
struct ModularGroupElement {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  UpperHalfPoint apply(const UpperHalfPoint& z) const;
  ModularGroupElement compose(const ModularGroupElement& rhs) const;  // this ∘ rhs
};

struct ReduceResult {
  UpperHalfPoint point;        // representative in the standard fundamental domain
  ModularGroupElement gamma;   // gamma.apply(input) == point
};

// Reduction to {|x| <= 1/2, x^2 + y^2 >= 1}; boundary ties resolved toward
// x <= 0 and the unit arc so the output is deterministic.
ReduceResult reduce(const UpperHalfPoint& z);

// Observables live on the surface: they are evaluated at reduced points.
using Observable = std::function<double(const UpperHalfPoint&)>;

Observable constant_observable(double value = 1.0);
// Smooth cutoff in height: 1 for y <= Y, 0 for y >= Y + w.
Observable height_cutoff(double Y, double w);
// Parses "one", "height_cutoff(Y,w)".
Observable parse_observable(const std::string& spec);
// Heights where an observable built by parse_observable changes behaviour
// (used to snap quadrature panel edges).  Empty for unknown/smooth specs.
std::vector<double> observable_breakpoints(const std::string& spec);

struct GridSpec {
  int y_panels = 96;            // log-spaced Gauss-Legendre panels in y
  int x_min_nodes = 33;         // per-row lower bound on x nodes
  std::vector<double> extra_y_edges;  // mandatory panel edges (cutoff heights etc.)
};

// Fundamental domain truncated at height y_max; the omitted cusp
// neighbourhood has hyperbolic measure exactly 1/y_max.
struct TruncatedDomain {
  double y_max = 50.0;
  GridSpec grid;

  void validate() const;
};

// Tensor quadrature grid over the truncated domain.  Rows are Gauss-Legendre
// nodes in log y (resolving the y^-2 measure); each row carries its own
// x-rule honouring the unit-arc boundary for y < 1.
struct SurfaceGrid {
  struct Row {
    double y = 1.0;
    double weight = 0.0;             // quadrature weight for dy/y^2, x-part excluded
    std::vector<double> x_nodes;
    std::vector<double> x_weights;   // plain dx weights over the row's x-range
  };
  std::vector<Row> rows;

  double integrate(const Observable& g) const;
};

SurfaceGrid build_surface_grid(const TruncatedDomain& dom, int x_nodes_hint = 0);

struct SurfaceIntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

// Integral of g over {fundamental domain, y <= y_max} against dx dy / y^2.
// The detailed form reports a refinement-based error estimate; if it exceeds
// `tol` the result is flagged rather than silently accepted.
double surface_integral(const Observable& g, const TruncatedDomain& dom);
SurfaceIntegralResult surface_integral_checked(const Observable& g, const TruncatedDomain& dom,
                                               double tol);

// Hyperbolic area of the truncated domain (pi/3 - 1/y_max) and the
// probability-normalized mean of g over the full surface.
double truncated_volume(double y_max);
double surface_mean(const Observable& g, const TruncatedDomain& dom);

inline constexpr double modular_surface_volume = 1.0471975511965977461542144611;  // pi/3

}  // namespace modwave
