#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace gaussmom {

struct QuadratureOutcome {
  double value = 0.0;
  double error = 0.0;  // absolute estimate, sum of per-panel |K15 - G7|
  bool converged = false;
  int panels = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights (positive half, QUADPACK values).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,  //
    0.949107912342758524526189684047851,  //
    0.864864423359769072789712788640926,  //
    0.741531185599394439863864773280788,  //
    0.586087235467691130294144838258730,  //
    0.405845151377397166906606412076961,  //
    0.207784955007898467600689403773245,  //
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,  //
    0.063092092629978553290700663189204,  //
    0.104790010322250183839876322541518,  //
    0.140653259715525918745189590510238,  //
    0.169004726639267902826583426598550,  //
    0.190350578064785409913256402421014,  //
    0.204432940075298892414161999234649,  //
    0.209482141084727828012999174891714};

// Weights of the embedded 7-point Gauss rule, matching odd Kronrod nodes.
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,  //
    0.279705391489276667901467771423780,  //
    0.381830050505118944950369775488975,  //
    0.417959183673469387755102040816327};

template <typename F>
inline void gk15_panel(F&& f, double a, double b, double& value, double& error) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_center = f(center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;

  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  value = kronrod * half;
  error = std::abs((kronrod - gauss) * half);
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace detail

/// Adaptive bisection with the Gauss-Kronrod 7/15 pair: the worst panel is
/// split until the summed error estimate drops below rel_tol * |integral|,
/// or the panel budget runs out (converged = false, caller decides how to
/// report). Per-panel error is the rule-pair difference |K15 - G7|, a
/// conservative bound for the returned K15 sum.
template <typename F>
QuadratureOutcome integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                     int max_panels = 4000, int initial_panels = 8) {
  std::vector<detail::Panel> heap;
  heap.reserve(static_cast<std::size_t>(initial_panels) + 64);

  initial_panels = std::max(1, initial_panels);
  const double step = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    detail::Panel p;
    p.a = a + i * step;
    p.b = (i + 1 == initial_panels) ? b : a + (i + 1) * step;
    detail::gk15_panel(f, p.a, p.b, p.value, p.error);
    heap.push_back(p);
  }
  std::make_heap(heap.begin(), heap.end());

  const auto totals = [&heap]() {
    // Kahan-summed so the convergence test is not polluted by roundoff drift.
    double v = 0, vc = 0, e = 0;
    for (const auto& p : heap) {
      const double y = p.value - vc;
      const double t = v + y;
      vc = (t - v) - y;
      v = t;
      e += p.error;
    }
    return std::pair<double, double>(v, e);
  };

  auto [total_value, total_error] = totals();
  while (total_error > rel_tol * std::max(std::abs(total_value), 1e-300) &&
         static_cast<int>(heap.size()) < max_panels) {
    std::pop_heap(heap.begin(), heap.end());
    const detail::Panel worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    detail::Panel left{worst.a, mid, 0, 0};
    detail::Panel right{mid, worst.b, 0, 0};
    detail::gk15_panel(f, left.a, left.b, left.value, left.error);
    detail::gk15_panel(f, right.a, right.b, right.value, right.error);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());

    std::tie(total_value, total_error) = totals();
  }

  QuadratureOutcome out;
  out.value = total_value;
  out.error = total_error;
  out.panels = static_cast<int>(heap.size());
  out.converged = total_error <= rel_tol * std::max(std::abs(total_value), 1e-300);
  return out;
}

}  // namespace gaussmom
