#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace modwave {

// Gauss-Legendre nodes/weights on [-1, 1].
template <int N>
struct GaussLegendre;

template <>
struct GaussLegendre<4> {
  static constexpr std::array<double, 2> x = {0.3399810435848562648026658, 0.8611363115940525752239465};
  static constexpr std::array<double, 2> w = {0.6521451548625461426269361, 0.3478548451374538573730639};
};

template <>
struct GaussLegendre<6> {
  static constexpr std::array<double, 3> x = {0.2386191860831969086305017, 0.6612093864662645136613996,
                                              0.9324695142031520278123016};
  static constexpr std::array<double, 3> w = {0.4679139345726910473898703, 0.3607615730481386075698335,
                                              0.1713244923791703450402961};
};

template <>
struct GaussLegendre<7> {
  // 7-point rule: node 0 plus three symmetric pairs.
  static constexpr double x0 = 0.0;
  static constexpr double w0 = 0.4179591836734693877551020;
  static constexpr std::array<double, 3> x = {0.4058451513773971669066064, 0.7415311855993944398638648,
                                              0.9491079123427585245261897};
  static constexpr std::array<double, 3> w = {0.3818300505051189449503698, 0.2797053914892766679014678,
                                              0.1294849661688696932706114};
};

// Apply an N-point Gauss-Legendre rule to f on [a, b], accumulating
// node/weight pairs through `sink(t, w)`.
template <int N, typename Sink>
inline void gl_panel(double a, double b, Sink&& sink) {
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  if constexpr (N == 7) {
    sink(mid, hw * GaussLegendre<7>::w0);
    for (std::size_t i = 0; i < 3; ++i) {
      const double dx = hw * GaussLegendre<7>::x[i];
      sink(mid + dx, hw * GaussLegendre<7>::w[i]);
      sink(mid - dx, hw * GaussLegendre<7>::w[i]);
    }
  } else {
    for (std::size_t i = 0; i < GaussLegendre<N>::x.size(); ++i) {
      const double dx = hw * GaussLegendre<N>::x[i];
      sink(mid + dx, hw * GaussLegendre<N>::w[i]);
      sink(mid - dx, hw * GaussLegendre<N>::w[i]);
    }
  }
}

namespace detail {
// Gauss7/Kronrod15 constants (QUADPACK dqk15).  Written with enough digits
// for long double instantiations used by test oracles.
template <typename R>
struct GK15 {
  static constexpr R xk[8] = {
      R(0.991455371120812639206854697526329L), R(0.949107912342758524526189684047851L),
      R(0.864864423359769072789712788640926L), R(0.741531185599394439863864773280788L),
      R(0.586087235467691130294144838258730L), R(0.405845151377397166906606412076961L),
      R(0.207784955007898467600689403773245L), R(0.0L)};
  static constexpr R wk[8] = {
      R(0.022935322010529224963732008058970L), R(0.063092092629978553290700663189204L),
      R(0.104790010322250183839876322541518L), R(0.140653259715525918745189590510238L),
      R(0.169004726639267902826583426598550L), R(0.190350578064785409913256402421014L),
      R(0.204432940075298892414161999234649L), R(0.209482141084727828012999174891714L)};
  static constexpr R wg[4] = {
      R(0.129484966168869693270611432679082L), R(0.279705391489276667901467771423780L),
      R(0.381830050505118944950369775488975L), R(0.417959183673469387755102040816327L)};
};
}  // namespace detail

template <typename R, typename F>
inline R gk15_panel(const F& f, R a, R b, R& err) {
  using G = detail::GK15<R>;
  const R mid = (a + b) / 2, hw = (b - a) / 2;
  R k15 = 0, g7 = 0;
  for (int i = 0; i < 8; ++i) {
    if (i == 7) {
      const R v = f(mid);
      k15 += G::wk[7] * v;
      g7 += G::wg[3] * v;
    } else {
      const R v = f(mid + hw * G::xk[i]) + f(mid - hw * G::xk[i]);
      k15 += G::wk[i] * v;
      if (i % 2 == 1) g7 += G::wg[i / 2] * v;
    }
  }
  k15 *= hw;
  g7 *= hw;
  err = std::abs(k15 - g7);
  return k15;
}

// Adaptive Gauss-Kronrod on [a, b].  Splits the worst panel until the summed
// error estimate meets max(rel_tol*|I|, abs_tol) or the panel budget runs out.
template <typename R, typename F>
R adaptive_gk(const F& f, R a, R b, R rel_tol, R abs_tol, int max_panels = 4000,
              int initial_panels = 1) {
  struct Panel {
    R a, b, val, err;
  };
  std::vector<Panel> panels;
  panels.reserve(64);
  if (initial_panels < 1) initial_panels = 1;
  for (int i = 0; i < initial_panels; ++i) {
    const R pa = a + (b - a) * R(i) / R(initial_panels);
    const R pb = a + (b - a) * R(i + 1) / R(initial_panels);
    R e;
    const R v = gk15_panel(f, pa, pb, e);
    panels.push_back({pa, pb, v, e});
  }
  for (int iter = 0; iter < max_panels; ++iter) {
    R total = 0, toterr = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].val;
      toterr += panels[i].err;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    if (toterr <= std::max(rel_tol * std::abs(total), abs_tol)) return total;
    Panel p = panels[worst];
    const R m = (p.a + p.b) / 2;
    R e1, e2;
    const R v1 = gk15_panel(f, p.a, m, e1);
    const R v2 = gk15_panel(f, m, p.b, e2);
    panels[worst] = {p.a, m, v1, e1};
    panels.push_back({m, p.b, v2, e2});
  }
  throw std::runtime_error("adaptive_gk: panel budget exhausted");
}

// Deterministic pairwise summation; result independent of how the values
// were produced (serial or parallel fill).
template <typename T>
T pairwise_sum(const T* data, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s = data[0];
    for (std::size_t i = 1; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v.data(), v.size());
}

// Runtime thread budget for grid maps.  0 means hardware concurrency.
void set_thread_count(int n);
int thread_count();

// Parallel map over [0, n): each index writes only its own slots, so the
// final reduction order (and thus the result) does not depend on the number
// of threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace modwave
