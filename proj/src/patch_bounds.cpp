#include "smallscale/patch_bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smallscale {

double bad_part_coefficient(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("bad_part_coefficient: alpha in (0, 0.5)");
  return (1.0 / alpha) * (1.0 / (1.0 - 2.0 * alpha) - std::pow(2.0, -alpha));
}

double good_part_coefficient(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("good_part_coefficient: alpha in (0, 0.5)");
  return 1.0 / (6.0 * std::pow(20.0, alpha) * alpha);
}

namespace {

// Adaptive rectangle quadrature of weight * K1 over a box, refining toward
// the kernel singularity at x.
struct K1Quad {
  Point2 x;
  double alpha;
  double acc = 0.0;

  void add(double w, double cx, double cy, double hx, double hy,
           int splits_left) {
    const double cell = std::max(hx, hy);
    const double dist = std::hypot(x.x - cx, x.y - cy);
    if (dist > 2.5 * cell || splits_left <= 0) {
      if (dist < 0.25 * cell) return;  // integrable core, skipped at the floor
      acc += w * kernel_split(x, Point2{cx, cy}, alpha).combined() * hx * hy;
      return;
    }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        add(w, cx + 0.5 * hx * (a - 0.5), cy + 0.5 * hy * (b - 0.5), 0.5 * hx,
            0.5 * hy, splits_left - 1);
  }

  void add_rect(double w, double x0, double x1, double y0, double y1) {
    if (!(x1 > x0) || !(y1 > y0)) return;
    // root cells comparable to the distance scale keep recursion shallow
    const int nx = std::max(1, static_cast<int>((x1 - x0) / 0.25));
    const int ny = std::max(1, static_cast<int>((y1 - y0) / 0.25));
    const double hx = (x1 - x0) / nx, hy = (y1 - y0) / ny;
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < ny; ++b)
        add(w, x0 + (a + 0.5) * hx, y0 + (b + 0.5) * hy, hx, hy, 64);
  }
};

}  // namespace

BoundCheck bad_part_bound_check(const RegionSpec& omega_region, const Point2& x,
                                double alpha) {
  if (!(x.y <= x.x))
    throw std::invalid_argument("bad_part_bound_check: requires x2 <= x1");
  if (!(x.x > 0.0))
    throw std::invalid_argument("bad_part_bound_check: requires x1 > 0");
  for (const auto& r : omega_region.rects)
    if (r.weight < 0.0 || r.weight > 1.0)
      throw std::invalid_argument(
          "bad_part_bound_check: omega weights must lie in [0, 1]");

  K1Quad quad{x, alpha};
  for (const auto& r : omega_region.rects) {
    // clip to the strip below the evaluation height
    const double y1 = std::min(r.y1, x.y);
    quad.add_rect(r.weight, std::max(r.x0, 0.0), r.x1, std::max(r.y0, 0.0),
                  y1);
  }
  BoundCheck out;
  out.value = -quad.acc;
  out.bound = bad_part_coefficient(alpha) * std::pow(x.x, 1.0 - 2.0 * alpha);
  out.tolerance = 5e-3 * std::abs(out.bound);
  out.pass = out.value <= out.bound + out.tolerance;
  return out;
}

BoundCheck good_part_bound_check(const Point2& x, double alpha,
                                 double delta_alpha) {
  if (!(x.x > 0.0) || x.x > delta_alpha)
    throw std::invalid_argument(
        "good_part_bound_check: requires 0 < x1 <= delta_alpha");

  // omega = indicator of A(x). In corner coordinates (u, v) = y - x the
  // region is exactly the polar wedge phi in (0, pi/4), rho < 1/cos(phi),
  // so a log-radial midpoint rule resolves every dyadic scale of the
  // kernel, down to corner offsets far below the mesh of any grid.
  const double rho_min = 1e-3 * std::min(x.x, 1.0);
  const double quarter_pi = 0.25 * std::numbers::pi;
  const int n_phi = 96;
  const int per_decade = 64;
  double acc = 0.0;
  for (int a = 0; a < n_phi; ++a) {
    const double phi = quarter_pi * (a + 0.5) / n_phi;
    const double cphi = std::cos(phi), sphi = std::sin(phi);
    const double rho_max = 1.0 / cphi;
    const int n_rho = static_cast<int>(
        std::ceil(per_decade * std::log10(rho_max / rho_min)));
    const double step = std::log(rho_max / rho_min) / n_rho;
    for (int b = 0; b < n_rho; ++b) {
      const double rho = rho_min * std::exp((b + 0.5) * step);
      const double drho = rho * (std::exp(0.5 * step) - std::exp(-0.5 * step));
      const Point2 y{x.x + rho * cphi, x.y + rho * sphi};
      acc += kernel_split(x, y, alpha).combined() * rho * drho *
             (quarter_pi / n_phi);
    }
  }
  BoundCheck out;
  out.value = -acc;
  out.bound = -good_part_coefficient(alpha) * std::pow(x.x, 1.0 - 2.0 * alpha);
  out.tolerance = 5e-3 * std::abs(out.bound);
  out.pass = out.value <= out.bound + out.tolerance;
  return out;
}

CoefficientMargin coefficient_margin(double alpha) {
  CoefficientMargin out;
  out.good = good_part_coefficient(alpha);
  out.bad = bad_part_coefficient(alpha);
  out.margin = out.good - out.bad;
  out.required = 1.0 / (50.0 * alpha);
  out.dominant = out.margin >= out.required;
  return out;
}

}  // namespace smallscale
