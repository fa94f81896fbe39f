#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace entroplex {

struct ScalarMaximum {
  double x;
  double value;
};

// Golden-section search for the maximum of a concave function on [a, b],
// shrinking the bracket to `width`.
inline ScalarMaximum golden_section_maximize(const std::function<double(double)>& f, double a,
                                             double b, double width = 1e-8) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > width) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

// Concave maximization on [a, b]: a uniform grid picks the bracket, then
// golden-section refines it. Every evaluated point is a valid lower bound,
// so the best of grid and refinement is returned.
inline ScalarMaximum grid_seeded_maximize(const std::function<double(double)>& f, double a,
                                          double b, int grid_points = 101,
                                          double width = 1e-8) {
  ScalarMaximum best{a, f(a)};
  for (int i = 1; i < grid_points; ++i) {
    const double x = a + (b - a) * i / (grid_points - 1);
    const double v = f(x);
    if (v > best.value) best = {x, v};
  }
  const double step = (b - a) / (grid_points - 1);
  const double lo = std::max(a, best.x - step);
  const double hi = std::min(b, best.x + step);
  ScalarMaximum refined = golden_section_maximize(f, lo, hi, width);
  return refined.value > best.value ? refined : best;
}

}  // namespace entroplex
