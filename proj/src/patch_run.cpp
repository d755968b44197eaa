#include "smallscale/patch_run.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace smallscale {

double barrier_time_of_arrival(double eps, double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("barrier: alpha must lie in (0, 0.5)");
  return 50.0 * std::pow(3.0 * eps, 2.0 * alpha);
}

double barrier_position(double t, double eps, double alpha) {
  const double T = barrier_time_of_arrival(eps, alpha);
  if (t < 0.0 || t > T * (1.0 + 1e-12))
    throw std::invalid_argument("barrier_position: t outside [0, T]");
  const double base = std::pow(3.0 * eps, 2.0 * alpha) - t / 50.0;
  if (base <= 0.0) return 0.0;
  return std::pow(base, 1.0 / (2.0 * alpha));
}

Containment barrier_containment(const PatchSystem& system,
                                const BarrierState& barrier, double t) {
  const double X = barrier_position(t, barrier.eps, barrier.alpha);
  Containment out;
  if (X >= 2.0) {  // empty region
    out.contained = true;
    out.margin = std::numeric_limits<double>::infinity();
    return out;
  }
  if (system.contours.empty())
    throw std::invalid_argument("barrier_containment: no contour");
  const auto& nodes = system.contours[0].nodes;

  // K's boundary: left edge, diagonal, right edge, bottom edge. Bottom
  // samples are lifted slightly off the wall, where the contour itself lies.
  const double lift = 1e-8;
  out.margin = std::numeric_limits<double>::infinity();
  out.contained = true;
  auto probe = [&](double x, double y) {
    const double d = signed_distance(nodes, x, y);
    out.margin = std::min(out.margin, d);
    if (d <= 0.0) out.contained = false;
  };
  const int m = 96;
  for (int s = 0; s <= m; ++s) {
    const double f = static_cast<double>(s) / m;
    probe(X, lift + f * (X - lift));                  // left edge x1 = X
    probe(X + f * (2.0 - X), lift + f * (2.0 - lift));  // diagonal x2 = x1
    probe(2.0, lift + f * (2.0 - lift));              // right edge x1 = 2
    probe(X + f * (2.0 - X), lift);                   // bottom edge
  }
  return out;
}

PatchContour initial_patch(double eps, double node_spacing) {
  if (!(eps > 0.0 && eps < 0.1))
    throw std::invalid_argument("initial_patch: eps must lie in (0, 0.1)");
  const double xl = 1.5 * eps;
  const double xr = 3.5;
  const double yt = 3.5;
  const double rho = 0.5 * eps;

  std::vector<Point2> pts;
  auto arc = [&](double cx, double cy, double a0, double a1) {
    const int steps = 24;
    for (int s = 0; s <= steps; ++s) {
      const double a = a0 + (a1 - a0) * static_cast<double>(s) / steps;
      pts.push_back({cx + rho * std::cos(a), cy + rho * std::sin(a)});
    }
  };
  auto line = [&](double x0, double y0, double x1, double y1) {
    const double len = std::hypot(x1 - x0, y1 - y0);
    const int steps = std::max(2, static_cast<int>(len / node_spacing));
    for (int s = 1; s < steps; ++s) {
      const double f = static_cast<double>(s) / steps;
      pts.push_back({x0 + f * (x1 - x0), y0 + f * (y1 - y0)});
    }
  };
  const double half_pi = 0.5 * std::numbers::pi;
  pts.push_back({xl + rho, 0.0});
  line(xl + rho, 0.0, xr - rho, 0.0);  // wall run
  pts.push_back({xr - rho, 0.0});
  arc(xr - rho, rho, -half_pi, 0.0);
  line(xr, rho, xr, yt - rho);
  arc(xr - rho, yt - rho, 0.0, half_pi);
  line(xr - rho, yt, xl + rho, yt);
  arc(xl + rho, yt - rho, half_pi, 2.0 * half_pi);
  line(xl, yt - rho, xl, rho);
  arc(xl + rho, rho, 2.0 * half_pi, 3.0 * half_pi);

  PatchContour c;
  c.nodes = resample_contour(pts, node_spacing);
  for (auto& p : c.nodes)
    if (std::abs(p.y) < 1e-12) p.y = 0.0;
  c.weight = 1.0;
  return c;
}

PatchStepResult evolve_patch(PatchSystem& system,
                             const PatchEvolveParams& params) {
  PatchStepResult res;

  auto v1 = velocities_at_nodes(system);

  // adaptive step: per-node travel bounded by the local spacing
  double dt = params.dt_max;
  for (std::size_t c = 0; c < system.contours.size(); ++c) {
    const auto& nodes = system.contours[c].nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& nxt = nodes[(i + 1) % nodes.size()];
      const double h = std::hypot(nxt.x - nodes[i].x, nxt.y - nodes[i].y);
      const double speed = std::hypot(v1[c][i].x, v1[c][i].y);
      if (speed > 0.0) dt = std::min(dt, params.cfl * h / speed);
    }
  }
  dt = std::max(dt, params.dt_min);
  res.dt = dt;

  PatchSystem mid = system;
  for (std::size_t c = 0; c < mid.contours.size(); ++c)
    for (std::size_t i = 0; i < mid.contours[c].nodes.size(); ++i) {
      auto& p = mid.contours[c].nodes[i];
      p.x += 0.5 * dt * v1[c][i].x;
      p.y = std::max(0.0, p.y + 0.5 * dt * v1[c][i].y);
    }
  auto v2 = velocities_at_nodes(mid);

  for (std::size_t c = 0; c < system.contours.size(); ++c)
    for (std::size_t i = 0; i < system.contours[c].nodes.size(); ++i) {
      auto& p = system.contours[c].nodes[i];
      p.x += dt * v2[c][i].x;
      p.y = std::max(0.0, p.y + dt * v2[c][i].y);
      if (system.odd_symmetry) p.x = std::max(p.x, 0.0);
    }
  system.t += dt;

  for (auto& c : system.contours)
    if (needs_resample(c.nodes, params.target_spacing, params.floor_spacing))
      c.nodes = resample_contour(c.nodes, params.target_spacing,
                                 params.floor_spacing);
  res.accepted = true;

  // contact checks
  double min_h = std::numeric_limits<double>::infinity();
  for (const auto& c : system.contours)
    min_h = std::min(min_h, min_node_spacing(c.nodes));
  const double touch = params.touch_factor * min_h;

  if (system.odd_symmetry) {
    double fx = front_abscissa(system);
    if (fx <= touch) {
      res.contact = true;
      res.contact_x = fx;
      res.contact_y = 0.0;
      res.detail = "front reached the axis";
      return res;
    }
  }
  for (const auto& c : system.contours) {
    const double d = min_self_distance(c.nodes, 10.0 * touch);
    if (d < touch) {
      res.contact = true;
      res.detail = "contour self-proximity";
      return res;
    }
  }
  for (std::size_t a = 0; a < system.contours.size(); ++a)
    for (std::size_t b = a + 1; b < system.contours.size(); ++b) {
      const auto& na = system.contours[a].nodes;
      const auto& nb = system.contours[b].nodes;
      for (std::size_t i = 0; i < na.size(); ++i)
        for (std::size_t j = 0; j < nb.size(); ++j) {
          const double d =
              segment_distance(na[i], na[(i + 1) % na.size()], nb[j],
                               nb[(j + 1) % nb.size()]);
          if (d < touch) {
            res.contact = true;
            res.contact_x = na[i].x;
            res.contact_y = na[i].y;
            res.detail = "contour pair proximity";
            return res;
          }
        }
    }
  return res;
}

}  // namespace smallscale
