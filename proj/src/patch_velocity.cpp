#include "smallscale/patch_velocity.hpp"

#include <cmath>
#include <stdexcept>

namespace smallscale {

namespace {

inline double pow_m2a(double r2, double alpha) {
  // |v|^{-(2+2alpha)} from the squared distance
  return std::pow(r2, -(1.0 + alpha));
}

}  // namespace

KernelSplit kernel_split(const Point2& x, const Point2& y, double alpha) {
  const double dm2 = (x.x - y.x) * (x.x - y.x) + (x.y - y.y) * (x.y - y.y);
  const double dt2 = (x.x + y.x) * (x.x + y.x) + (x.y - y.y) * (x.y - y.y);
  const double dp2 = (x.x + y.x) * (x.x + y.x) + (x.y + y.y) * (x.y + y.y);
  const double db2 = (x.x - y.x) * (x.x - y.x) + (x.y + y.y) * (x.y + y.y);
  if (dm2 == 0.0 || dt2 == 0.0 || dp2 == 0.0 || db2 == 0.0)
    throw std::invalid_argument(
        "kernel_split: evaluation point coincides with a source image");
  KernelSplit k;
  k.k11 = (y.y - x.y) * pow_m2a(dm2, alpha);
  k.k12 = (y.y - x.y) * pow_m2a(dt2, alpha);
  k.k13 = (y.y + x.y) * pow_m2a(dp2, alpha);
  k.k14 = (y.y + x.y) * pow_m2a(db2, alpha);
  return k;
}

// ---- area-quadrature oracle -------------------------------------------------

namespace {

// velocity-law kernel (v2, -v1)/|v|^{2+2 alpha} with the wall image subtracted
inline void law_kernel(const Point2& x, double y1, double y2, double alpha,
                       double& k1, double& k2) {
  const double d1 = x.x - y1, d2 = x.y - y2;
  const double r2 = d1 * d1 + d2 * d2;
  const double b2v = x.y + y2;
  const double rb2 = d1 * d1 + b2v * b2v;
  const double wd = pow_m2a(r2, alpha);
  const double wb = pow_m2a(rb2, alpha);
  k1 = d2 * wd - b2v * wb;
  k2 = -d1 * wd + d1 * wb;
}

struct QuadContext {
  const Point2& x;
  double alpha;
  double ux = 0.0, uy = 0.0;
};

void add_region(QuadContext& ctx, double weight, double cx, double cy,
                double hx, double hy, int splits_left) {
  const double cell = std::max(hx, hy);
  const double dist = std::hypot(ctx.x.x - cx, ctx.x.y - cy);
  if (dist > 3.0 * cell || splits_left <= 0) {
    if (dist < 0.5 * cell) return;  // excised core, antisymmetric kernel
    double k1, k2;
    law_kernel(ctx.x, cx, cy, ctx.alpha, k1, k2);
    ctx.ux += weight * k1 * hx * hy;
    ctx.uy += weight * k2 * hx * hy;
    return;
  }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      add_region(ctx, weight, cx + 0.5 * hx * (a - 0.5),
                 cy + 0.5 * hy * (b - 0.5), 0.5 * hx, 0.5 * hy,
                 splits_left - 1);
}

}  // namespace

Point2 direct_patch_quadrature(const PatchSystem& system, const Point2& x) {
  if (!(system.alpha >= 0.0 && system.alpha < 0.5))
    throw std::invalid_argument(
        "direct_patch_quadrature: alpha out of range [0, 0.5)");
  QuadContext ctx{x, system.alpha};

  for (const auto& contour : system.contours) {
    if (contour.weight == 0.0 || contour.nodes.size() < 3) continue;
    double xmin = contour.nodes[0].x, xmax = xmin;
    double ymin = contour.nodes[0].y, ymax = ymin;
    for (const auto& p : contour.nodes) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    const int cells = 96;
    const double hx = (xmax - xmin) / cells;
    const double hy = (ymax - ymin) / cells;
    const double h = std::max(hx, hy);
    const double w = contour.weight;
    for (int a = 0; a < cells; ++a) {
      for (int b = 0; b < cells; ++b) {
        const double cx = xmin + (a + 0.5) * hx;
        const double cy = ymin + (b + 0.5) * hy;
        // classify against the polygon; straddling cells get subdivided
        const double sd = signed_distance(contour.nodes, cx, cy);
        if (sd < -h) continue;
        if (sd > h) {
          add_region(ctx, w, cx, cy, hx, hy, 6);
          if (system.odd_symmetry) add_region(ctx, -w, -cx, cy, hx, hy, 6);
          continue;
        }
        // boundary cell: 4x4 subcells classified individually
        for (int sa = 0; sa < 4; ++sa)
          for (int sb = 0; sb < 4; ++sb) {
            const double sx = xmin + (a + (sa + 0.5) / 4.0) * hx;
            const double sy = ymin + (b + (sb + 0.5) / 4.0) * hy;
            if (!point_in_polygon(contour.nodes, sx, sy)) continue;
            add_region(ctx, w, sx, sy, hx / 4.0, hy / 4.0, 4);
            if (system.odd_symmetry)
              add_region(ctx, -w, -sx, sy, hx / 4.0, hy / 4.0, 4);
          }
      }
    }
  }
  return {ctx.ux, ctx.uy};
}

// ---- contour form ------------------------------------------------------------

namespace {

struct EffectiveContour {
  const std::vector<Point2>* nodes;
  double weight;
  bool mirror_x;   // apply (x -> -x)
  bool mirror_y;   // apply (y -> -y)
  bool reversed;   // traversal order flipped (restores CCW after one mirror)
};

inline Point2 map_node(const EffectiveContour& ec, std::size_t i) {
  const std::size_t n = ec.nodes->size();
  const Point2& p = (*ec.nodes)[ec.reversed ? (n - 1 - i) : i];
  return {ec.mirror_x ? -p.x : p.x, ec.mirror_y ? -p.y : p.y};
}

struct SegmentIntegrator {
  double alpha;
  double gx = 0.0, gy = 0.0;  // accumulated integral of G(|x-z|) z'(s) ds

  // G(rho): -rho^{-2a}/(2a) for a > 0, log rho at a = 0
  double g_of(double rho) const {
    rho = std::max(rho, 1e-150);
    if (alpha > 0.0) return -std::pow(rho, -2.0 * alpha) / (2.0 * alpha);
    return std::log(rho);
  }

  // analytic integral of G along [0, len] measured from the evaluation point
  double g_endpoint_integral(double len) const {
    if (alpha > 0.0)
      return -std::pow(len, 1.0 - 2.0 * alpha) /
             (2.0 * alpha * (1.0 - 2.0 * alpha));
    return len * (std::log(len) - 1.0);
  }

  void segment(const Point2& x, const Point2& a, const Point2& b, int depth) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    if (len < 1e-15) return;
    const double da = std::hypot(x.x - a.x, x.y - a.y);
    const double db = std::hypot(x.x - b.x, x.y - b.y);

    // evaluation point sits on an endpoint: integrate the straight-line
    // singularity analytically
    const double touch = 1e-12 * std::max(1.0, len);
    if (da < touch || db < touch) {
      const double v = g_endpoint_integral(len) / len;
      gx += v * dx;
      gy += v * dy;
      return;
    }
    const double dist = std::min(da, db);
    if (dist > 12.0 * len) {
      // far segment: 2-point Gauss is ample
      static const double gp2[2] = {0.21132486540518713, 0.78867513459481287};
      double acc = 0.0;
      for (int q = 0; q < 2; ++q) {
        const double zx = a.x + gp2[q] * dx;
        const double zy = a.y + gp2[q] * dy;
        acc += 0.5 * g_of(std::hypot(x.x - zx, x.y - zy));
      }
      gx += acc * dx;
      gy += acc * dy;
      return;
    }
    if (dist > 2.0 * len || depth >= 40) {
      // 4-point Gauss-Legendre on [0,1]
      static const double gp[4] = {0.069431844202973712, 0.33000947820757187,
                                   0.66999052179242813, 0.93056815579702623};
      static const double gw[4] = {0.17392742256872692, 0.32607257743127305,
                                   0.32607257743127305, 0.17392742256872692};
      double acc = 0.0;
      for (int q = 0; q < 4; ++q) {
        const double zx = a.x + gp[q] * dx;
        const double zy = a.y + gp[q] * dy;
        acc += gw[q] * g_of(std::hypot(x.x - zx, x.y - zy));
      }
      gx += acc * dx;
      gy += acc * dy;
      return;
    }
    const Point2 mid{a.x + 0.5 * dx, a.y + 0.5 * dy};
    segment(x, a, mid, depth + 1);
    segment(x, mid, b, depth + 1);
  }
};

std::vector<EffectiveContour> effective_contours(const PatchSystem& system) {
  std::vector<EffectiveContour> out;
  for (const auto& c : system.contours) {
    if (c.weight == 0.0 || c.nodes.size() < 3) continue;
    out.push_back({&c.nodes, c.weight, false, false, false});
    out.push_back({&c.nodes, -c.weight, false, true, true});  // wall image
    if (system.odd_symmetry) {
      out.push_back({&c.nodes, -c.weight, true, false, true});  // odd mirror
      out.push_back({&c.nodes, c.weight, true, true, false});   // both
    }
  }
  return out;
}

}  // namespace

Point2 contour_velocity(const PatchSystem& system, const Point2& x) {
  if (!(system.alpha >= 0.0 && system.alpha < 0.5))
    throw std::invalid_argument("contour_velocity: alpha out of range [0, 0.5)");
  Point2 u{0.0, 0.0};
  for (const auto& ec : effective_contours(system)) {
    SegmentIntegrator integ{system.alpha};
    const std::size_t n = ec.nodes->size();
    Point2 prev = map_node(ec, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      const Point2 cur = map_node(ec, i % n);
      integ.segment(x, prev, cur, 0);
      prev = cur;
    }
    u.x += ec.weight * integ.gx;
    u.y += ec.weight * integ.gy;
  }
  return u;
}

std::vector<std::vector<Point2>> velocities_at_nodes(const PatchSystem& system) {
  std::vector<std::vector<Point2>> out(system.contours.size());
  for (std::size_t c = 0; c < system.contours.size(); ++c) {
    const auto& nodes = system.contours[c].nodes;
    out[c].resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      Point2 v = contour_velocity(system, nodes[i]);
      if (nodes[i].y == 0.0) v.y = 0.0;  // wall nodes slide along the wall
      out[c][i] = v;
    }
  }
  return out;
}

}  // namespace smallscale
