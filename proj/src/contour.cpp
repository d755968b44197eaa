#include "smallscale/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace smallscale {

double polygon_area(const std::vector<Point2>& nodes) {
  double s = 0.0;
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = nodes[i];
    const auto& b = nodes[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

Point2 polygon_centroid(const std::vector<Point2>& nodes) {
  double cx = 0.0, cy = 0.0;
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = nodes[i];
    const auto& b = nodes[(i + 1) % n];
    const double w = a.x * b.y - b.x * a.y;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  const double area = polygon_area(nodes);
  if (area == 0.0) return {0.0, 0.0};
  return {cx / (6.0 * area), cy / (6.0 * area)};
}

bool point_in_polygon(const std::vector<Point2>& nodes, double x, double y) {
  bool inside = false;
  const std::size_t n = nodes.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto& a = nodes[i];
    const auto& b = nodes[j];
    if ((a.y > y) != (b.y > y)) {
      const double t = (y - a.y) / (b.y - a.y);
      if (x < a.x + t * (b.x - a.x)) inside = !inside;
    }
  }
  return inside;
}

namespace {
double point_segment_distance(double px, double py, const Point2& a,
                              const Point2& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0)
    t = std::clamp(((px - a.x) * dx + (py - a.y) * dy) / len2, 0.0, 1.0);
  return std::hypot(px - (a.x + t * dx), py - (a.y + t * dy));
}
}  // namespace

double signed_distance(const std::vector<Point2>& nodes, double x, double y) {
  double d = std::numeric_limits<double>::infinity();
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    d = std::min(d, point_segment_distance(x, y, nodes[i], nodes[(i + 1) % n]));
  return point_in_polygon(nodes, x, y) ? d : -d;
}

double segment_distance(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d) {
  auto orient = [](const Point2& p, const Point2& q, const Point2& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  };
  const double o1 = orient(a, b, c), o2 = orient(a, b, d);
  const double o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return 0.0;
  double m = point_segment_distance(c.x, c.y, a, b);
  m = std::min(m, point_segment_distance(d.x, d.y, a, b));
  m = std::min(m, point_segment_distance(a.x, a.y, c, d));
  m = std::min(m, point_segment_distance(b.x, b.y, c, d));
  return m;
}

double min_self_distance(const std::vector<Point2>& nodes,
                         double guard_arclength) {
  const std::size_t n = nodes.size();
  std::vector<double> s(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = nodes[i];
    const auto& b = nodes[(i + 1) % n];
    s[i + 1] = s[i] + std::hypot(b.x - a.x, b.y - a.y);
  }
  const double perimeter = s[n];
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // arc gap between the two segments, both ways around
      const double fwd = s[j] - s[i + 1];
      const double bwd = perimeter - (s[j + 1] - s[i]);
      if (std::min(fwd, bwd) <= guard_arclength) continue;
      best = std::min(best,
                      segment_distance(nodes[i], nodes[(i + 1) % n], nodes[j],
                                       nodes[(j + 1) % n]));
    }
  }
  return best;
}

double min_node_spacing(const std::vector<Point2>& nodes) {
  const std::size_t n = nodes.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = nodes[i];
    const auto& b = nodes[(i + 1) % n];
    best = std::min(best, std::hypot(b.x - a.x, b.y - a.y));
  }
  return best;
}

namespace {

Point2 catmull_rom(const Point2& p0, const Point2& p1, const Point2& p2,
                   const Point2& p3, double t) {
  const double t2 = t * t, t3 = t2 * t;
  auto blend = [&](double a, double b, double c, double d) {
    return 0.5 * ((2.0 * b) + (-a + c) * t +
                  (2.0 * a - 5.0 * b + 4.0 * c - d) * t2 +
                  (-a + 3.0 * b - 3.0 * c + d) * t3);
  };
  return {blend(p0.x, p1.x, p2.x, p3.x), blend(p0.y, p1.y, p2.y, p3.y)};
}

double node_curvature(const Point2& a, const Point2& b, const Point2& c) {
  const double ab = std::hypot(b.x - a.x, b.y - a.y);
  const double bc = std::hypot(c.x - b.x, c.y - b.y);
  const double ca = std::hypot(a.x - c.x, a.y - c.y);
  const double cross =
      (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double denom = ab * bc * ca;
  if (denom < 1e-300) return 0.0;
  return 2.0 * std::abs(cross) / denom;
}

}  // namespace

namespace {
std::vector<double> target_spacing(const std::vector<Point2>& nodes, double h0,
                                   double floor_spacing) {
  const std::size_t n = nodes.size();
  std::vector<double> target(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = node_curvature(nodes[(i + n - 1) % n], nodes[i],
                                    nodes[(i + 1) % n]);
    double h = h0 / std::sqrt(std::max(k * h0 * 16.0, 1.0));
    target[i] = std::max(h, floor_spacing);
  }
  return target;
}
}  // namespace

bool needs_resample(const std::vector<Point2>& nodes, double h0,
                    double floor_spacing) {
  const std::size_t n = nodes.size();
  if (n < 8) return false;
  const auto target = target_spacing(nodes, h0, floor_spacing);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = nodes[i];
    const auto& b = nodes[(i + 1) % n];
    const double h = std::hypot(b.x - a.x, b.y - a.y);
    const double want = 0.5 * (target[i] + target[(i + 1) % n]);
    if (h > 1.6 * want || h < 0.5 * want) return true;
  }
  return false;
}

std::vector<Point2> resample_contour(const std::vector<Point2>& nodes,
                                     double h0, double floor_spacing) {
  const std::size_t n = nodes.size();
  if (n < 8) throw std::invalid_argument("resample_contour: too few nodes");

  const std::vector<double> target = target_spacing(nodes, h0, floor_spacing);

  // walk the Catmull-Rom interpolant placing nodes at the local spacing
  std::vector<Point2> out;
  out.push_back(nodes[0]);
  double want = target[0];
  double last_target = target[0];
  const int sub = 8;  // substeps per segment for arclength accumulation
  Point2 prev = nodes[0];
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& p0 = nodes[(i + n - 1) % n];
    const Point2& p1 = nodes[i];
    const Point2& p2 = nodes[(i + 1) % n];
    const Point2& p3 = nodes[(i + 2) % n];
    for (int s = 1; s <= sub; ++s) {
      const Point2 q = catmull_rom(p0, p1, p2, p3, static_cast<double>(s) / sub);
      double seg = std::hypot(q.x - prev.x, q.y - prev.y);
      while (seg >= want) {
        const double f = want / seg;
        Point2 placed{prev.x + f * (q.x - prev.x), prev.y + f * (q.y - prev.y)};
        if (std::abs(placed.y) < 1e-12) placed.y = 0.0;
        if (placed.y < 0.0) placed.y = 0.0;
        out.push_back(placed);
        prev = placed;
        seg = std::hypot(q.x - prev.x, q.y - prev.y);
        want = target[i];
        last_target = target[i];
      }
      want -= seg;
      prev = q;
    }
  }
  // drop trailing nodes that crowd the anchor
  while (out.size() > 8) {
    const double gap = std::hypot(out.back().x - out.front().x,
                                  out.back().y - out.front().y);
    if (gap >= 0.6 * last_target) break;
    out.pop_back();
  }
  return out;
}

double front_abscissa(const PatchSystem& system) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : system.contours)
    for (const auto& p : c.nodes) m = std::min(m, p.x);
  return m;
}

}  // namespace smallscale
