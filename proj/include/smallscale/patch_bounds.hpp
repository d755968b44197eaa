#pragma once

#include <vector>

#include "smallscale/patch_velocity.hpp"

namespace smallscale {

// Axis-aligned rectangles with weights in [0, 1], describing omega on D+.
struct RegionSpec {
  struct Rect {
    double x0, x1, y0, y1;
    double weight = 1.0;
  };
  std::vector<Rect> rects;
};

struct BoundCheck {
  double value = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// (1/a)(1/(1-2a) - 2^{-a}); coefficient of the u1 upper bound from the strip
// below the evaluation point.
double bad_part_coefficient(double alpha);

// 1/(6 * 20^a * a); coefficient of the u1 decrease driven by the diagonal
// slab A(x) above the evaluation point.
double good_part_coefficient(double alpha);

// u1over the strip R+ x (0, x2): quadrature of -int K1 omega dy, checked
// against bad_part_coefficient * x1^{1-2a}. Requires x2 <= x1 and weights
// in [0, 1].
BoundCheck bad_part_bound_check(const RegionSpec& omega_region, const Point2& x,
                                double alpha);

// u1 over A(x) = {y1 in (x1, x1+1), y2 in (x2, x2 + y1 - x1)} with
// omega = indicator(A); checked against -good_part_coefficient * x1^{1-2a}.
// Requires x1 <= delta_alpha.
BoundCheck good_part_bound_check(const Point2& x, double alpha,
                                 double delta_alpha);

struct CoefficientMargin {
  double good = 0.0;
  double bad = 0.0;
  double margin = 0.0;         // good - bad
  double required = 0.0;       // 1/(50 a)
  bool dominant = false;       // margin >= required
};

CoefficientMargin coefficient_margin(double alpha);

}  // namespace smallscale
