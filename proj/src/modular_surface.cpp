#include "modwave/modular_surface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "modwave/quadrature.hpp"

namespace modwave {

UpperHalfPoint ModularGroupElement::apply(const UpperHalfPoint& z) const {
  const double qa = double(a), qb = double(b), qc = double(c), qd = double(d);
  const double den = (qc * z.x + qd) * (qc * z.x + qd) + qc * qc * z.y * z.y;
  const double nx = (qa * z.x + qb) * (qc * z.x + qd) + qa * qc * z.y * z.y;
  return {nx / den, z.y / den};
}

ModularGroupElement ModularGroupElement::compose(const ModularGroupElement& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d, c * rhs.a + d * rhs.c,
          c * rhs.b + d * rhs.d};
}

ReduceResult reduce(const UpperHalfPoint& z0) {
  if (!(z0.y > 0.0)) throw std::invalid_argument("reduce: point must satisfy y > 0");
  UpperHalfPoint z = z0;
  ModularGroupElement g;  // identity
  for (int iter = 0; iter < 100000; ++iter) {
    const double n = std::round(z.x);
    if (n != 0.0) {
      z.x -= n;
      const auto ni = std::int64_t(n);
      g = ModularGroupElement{1, -ni, 0, 1}.compose(g);
    }
    const double norm = z.x * z.x + z.y * z.y;
    if (norm < 1.0) {
      // z -> -1/z
      z = {-z.x / norm, z.y / norm};
      g = ModularGroupElement{0, -1, 1, 0}.compose(g);
      continue;
    }
    // boundary ties: x = +1/2 moves to -1/2; |z| = 1 with x > 0 flips to x < 0
    if (z.x == 0.5) {
      z.x = -0.5;
      g = ModularGroupElement{1, -1, 0, 1}.compose(g);
    }
    if (norm == 1.0 && z.x > 0.0) {
      z = {-z.x, z.y};
      g = ModularGroupElement{0, -1, 1, 0}.compose(g);
    }
    // normalize the representative: in PSL(2,Z) both signs act identically
    if (g.c < 0 || (g.c == 0 && g.a < 0)) g = ModularGroupElement{-g.a, -g.b, -g.c, -g.d};
    return {z, g};
  }
  throw std::runtime_error("reduce: did not terminate");
}

Observable constant_observable(double value) {
  return [value](const UpperHalfPoint&) { return value; };
}

namespace {
// C-infinity step: 1 for t <= 0, 0 for t >= 1.
double smooth_step_down(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const double e1 = std::exp(-1.0 / (1.0 - t));
  const double e2 = std::exp(-1.0 / t);
  return e1 / (e1 + e2);
}
}  // namespace

Observable height_cutoff(double Y, double w) {
  if (!(Y > 0.0) || !(w > 0.0)) throw std::invalid_argument("height_cutoff: Y, w must be > 0");
  return [Y, w](const UpperHalfPoint& z) { return smooth_step_down((z.y - Y) / w); };
}

Observable parse_observable(const std::string& spec) {
  if (spec == "one" || spec == "1") return constant_observable(1.0);
  double Y, w;
  if (std::sscanf(spec.c_str(), "height_cutoff(%lf,%lf)", &Y, &w) == 2 ||
      std::sscanf(spec.c_str(), "height_cutoff(%lf, %lf)", &Y, &w) == 2)
    return height_cutoff(Y, w);
  throw std::invalid_argument("parse_observable: unknown spec '" + spec + "'");
}

std::vector<double> observable_breakpoints(const std::string& spec) {
  double Y, w;
  if (std::sscanf(spec.c_str(), "height_cutoff(%lf,%lf)", &Y, &w) == 2 ||
      std::sscanf(spec.c_str(), "height_cutoff(%lf, %lf)", &Y, &w) == 2)
    return {Y, Y + w};
  return {};
}

void TruncatedDomain::validate() const {
  if (!(y_max > 1.0)) throw std::invalid_argument("TruncatedDomain: y_max must be > 1");
  if (grid.y_panels < 1 || grid.x_min_nodes < 1)
    throw std::invalid_argument("TruncatedDomain: grid sizes must be positive");
}

namespace {

constexpr double kYBottom = 0.86602540378443864676372317075;  // sqrt(3)/2

void fill_row_x(SurfaceGrid::Row& row, int nodes) {
  row.x_nodes.clear();
  row.x_weights.clear();
  const auto add_segment = [&](double lo, double hi, int n) {
    const int panels = std::max(1, (n + 5) / 6);
    for (int p = 0; p < panels; ++p) {
      const double a = lo + (hi - lo) * p / panels;
      const double b = lo + (hi - lo) * (p + 1) / panels;
      gl_panel<6>(a, b, [&](double t, double w) {
        row.x_nodes.push_back(t);
        row.x_weights.push_back(w);
      });
    }
  };
  if (row.y >= 1.0) {
    add_segment(-0.5, 0.5, nodes);
  } else {
    const double xa = std::sqrt(1.0 - row.y * row.y);
    add_segment(-0.5, -xa, (nodes + 1) / 2);
    add_segment(xa, 0.5, (nodes + 1) / 2);
  }
}

}  // namespace

SurfaceGrid build_surface_grid(const TruncatedDomain& dom, int x_nodes_hint) {
  dom.validate();
  const double v_lo = std::log(kYBottom), v_hi = std::log(dom.y_max);
  std::vector<double> edges;
  edges.reserve(dom.grid.y_panels + 4);
  for (int i = 0; i <= dom.grid.y_panels; ++i)
    edges.push_back(v_lo + (v_hi - v_lo) * i / dom.grid.y_panels);
  edges.push_back(0.0);  // y = 1, where the x-range rule changes
  for (double y : dom.grid.extra_y_edges)
    if (y > kYBottom && y < dom.y_max) edges.push_back(std::log(y));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-13; }),
              edges.end());

  SurfaceGrid grid;
  const int xn = std::max(dom.grid.x_min_nodes, x_nodes_hint);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    gl_panel<6>(edges[i], edges[i + 1], [&](double v, double w) {
      SurfaceGrid::Row row;
      row.y = std::exp(v);
      row.weight = w / row.y;  // dy/y^2 = e^{-v} dv
      fill_row_x(row, xn);
      grid.rows.push_back(std::move(row));
    });
  }
  return grid;
}

double SurfaceGrid::integrate(const Observable& g) const {
  std::vector<double> partial(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const Row& row = rows[i];
    std::vector<double> vals(row.x_nodes.size());
    for (std::size_t j = 0; j < row.x_nodes.size(); ++j)
      vals[j] = row.x_weights[j] * g(UpperHalfPoint{row.x_nodes[j], row.y});
    partial[i] = row.weight * pairwise_sum(vals);
  });
  return pairwise_sum(partial);
}

double surface_integral(const Observable& g, const TruncatedDomain& dom) {
  return build_surface_grid(dom).integrate(g);
}

SurfaceIntegralResult surface_integral_checked(const Observable& g, const TruncatedDomain& dom,
                                               double tol) {
  const double coarse = surface_integral(g, dom);
  TruncatedDomain fine = dom;
  fine.grid.y_panels *= 2;
  fine.grid.x_min_nodes *= 2;
  const double refined = build_surface_grid(fine).integrate(g);
  SurfaceIntegralResult res;
  res.value = refined;
  res.error_estimate = std::abs(refined - coarse);
  res.converged = res.error_estimate <= tol;
  return res;
}

double truncated_volume(double y_max) { return modular_surface_volume - 1.0 / y_max; }

double surface_mean(const Observable& g, const TruncatedDomain& dom) {
  return surface_integral(g, dom) / modular_surface_volume;
}

}  // namespace modwave
