#include "smallscale/disk_diag.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace smallscale {

bool inside_half_disk(const FramePoint& p) {
  if (p.x1 < 0.0) return false;
  const double dx = p.x1, dy = p.x2 - 1.0;
  return dx * dx + dy * dy <= 1.0;
}

OmegaValue omega_functional(const DiskField& omega, const FramePoint& x) {
  if (!inside_half_disk(x))
    throw std::invalid_argument("omega_functional: point outside D+");
  const auto& g = omega.grid;
  const double dr = g.dr();
  const double w = dr * g.dtheta();
  const double rho_min = 2.0 * dr;  // exclusion radius around the frame origin
  const double rho_excl = std::max(std::hypot(x.x1, x.x2), rho_min);

  double acc = 0.0;
  const double scale = omega.max_abs();
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const double th = g.angle(j);
      const double y1 = r * std::cos(th);
      const double y2 = r * std::sin(th) + 1.0;
      if (y1 < x.x1 || y2 < x.x2 || y1 < 0.0) continue;
      const double rho2 = y1 * y1 + y2 * y2;
      if (rho2 < rho_excl * rho_excl) continue;
      acc += y1 * y2 / (rho2 * rho2) * omega.at(i, j) * r * w;
    }
  }
  OmegaValue out;
  out.value = -(4.0 / std::numbers::pi) * acc;
  // excluded ring [|x|, rho_excl) bound plus one-cell resolution estimate
  const double lo = std::max(std::hypot(x.x1, x.x2), dr);
  double ring = 0.0;
  if (rho_excl > lo) ring = (2.0 / std::numbers::pi) * (rho_excl - lo) / lo;
  out.error = (ring + (2.0 / std::numbers::pi) * dr / rho_excl) * scale;
  return out;
}

DecompositionResidual velocity_decomposition_residual(
    const DiskFlowState& state, const SectorProbe& probe, double delta) {
  const FramePoint& x = probe.x;
  if (!inside_half_disk(x))
    throw std::invalid_argument(
        "velocity_decomposition_residual: probe outside D+");
  if (x.x1 == 0.0 || x.x2 == 0.0)
    throw std::invalid_argument(
        "velocity_decomposition_residual: probe on a coordinate axis; use the "
        "complementary component");
  const double rho = std::hypot(x.x1, x.x2);
  if (rho > delta)
    throw std::invalid_argument(
        "velocity_decomposition_residual: probe outside |x| <= delta");
  const double phi = std::atan2(x.x2, x.x1);
  const double half_pi = 0.5 * std::numbers::pi;
  if (probe.lower_sector) {
    if (!(phi >= 0.0 && phi <= half_pi - probe.gamma))
      throw std::invalid_argument(
          "velocity_decomposition_residual: probe outside sector D1");
  } else {
    if (!(phi >= probe.gamma && phi <= half_pi))
      throw std::invalid_argument(
          "velocity_decomposition_residual: probe outside sector D2");
  }

  double xd, yd;
  to_disk(x, xd, yd);
  double u1, u2;
  sample_velocity(state.u1, state.u2, xd, yd, u1, u2);
  const auto om = omega_functional(state.omega, x);
  DecompositionResidual out;
  out.omega_value = om.value;
  out.omega_error = om.error;
  out.b1 = u1 / x.x1 + om.value;
  out.b2 = u2 / x.x2 - om.value;
  return out;
}

namespace {

// grad_perp of log|x - a|
inline void kernel_direct(double x1, double x2, double a1, double a2,
                          double& k1, double& k2) {
  const double d1 = x1 - a1, d2 = x2 - a2;
  const double r2 = d1 * d1 + d2 * d2;
  k1 = d2 / r2;
  k2 = -d1 / r2;
}

}  // namespace

void direct_bs_quadrature(const DiskField& omega, double x, double y,
                          double& ux, double& uy) {
  // u = -(1/2pi) grad_perp int [log|x-y| - log|x-y*|] omega(y) dy with the
  // inversion image y* = y/|y|^2; for odd data this is exactly the
  // odd-symmetrized half-disk kernel folded over the full disk.
  const auto& g = omega.grid;
  const double dr = g.dr();
  const double dth = g.dtheta();
  ux = uy = 0.0;

  auto add_source = [&](double y1, double y2, double wgt) {
    const double rr = y1 * y1 + y2 * y2;
    if (rr < 1e-28) return;
    const double s1 = y1 / rr, s2 = y2 / rr;
    double k1, k2, t1, t2;
    kernel_direct(x, y, y1, y2, k1, k2);
    kernel_direct(x, y, s1, s2, t1, t2);
    ux += -wgt * (k1 - t1) / (2.0 * std::numbers::pi);
    uy += -wgt * (k2 - t2) / (2.0 * std::numbers::pi);
  };

  // Recursive near-field refinement: polar cells within three cell sizes of
  // the evaluation point split 2x2 until deep enough; the innermost
  // neighborhood is excised, where the antisymmetric kernel cancels for
  // locally constant omega.
  const int max_depth = 6;
  auto add_cell = [&](auto&& self, double w, double rc, double tc, double drc,
                      double dtc, int depth) -> void {
    const double y1 = rc * std::cos(tc), y2 = rc * std::sin(tc);
    const double cell = std::max(drc, rc * dtc);
    const double dist = std::hypot(x - y1, y - y2);
    if (dist > 3.0 * cell || depth >= max_depth) {
      if (dist < 0.5 * cell) return;  // excised core
      add_source(y1, y2, w * rc * drc * dtc);
      return;
    }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        self(self, w, rc + 0.5 * drc * (a - 0.5), tc + 0.5 * dtc * (b - 0.5),
             0.5 * drc, 0.5 * dtc, depth + 1);
  };

  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const double wv = omega.at(i, j);
      if (wv == 0.0) continue;
      add_cell(add_cell, wv, r, g.angle(j), dr, dth, 0);
    }
  }
}

void front_back_track(const DiskFlowState& state, FrontBackState& fb,
                      double dt) {
  const auto& g = state.omega.grid;
  if (fb.a < 2.0 * g.dr())
    throw std::runtime_error("front under-resolved");

  auto slice_u1 = [&state](double x1, bool take_max) {
    // vertical slice {x1 fixed, x2 from the wall to the diagonal}, frame coords
    const double bottom = 1.0 - std::sqrt(std::max(0.0, 1.0 - x1 * x1));
    const int samples = 64;
    double best = take_max ? -1e300 : 1e300;
    for (int s = 0; s <= samples; ++s) {
      const double x2 =
          bottom + (x1 - bottom) * static_cast<double>(s) / samples;
      double xd, yd;
      to_disk(FramePoint{x1, x2}, xd, yd);
      double u1, u2;
      sample_velocity(state.u1, state.u2, xd, yd, u1, u2);
      best = take_max ? std::max(best, u1) : std::min(best, u1);
    }
    return best;
  };

  const double ka1 = slice_u1(fb.a, true);
  const double kb1 = slice_u1(fb.b, false);
  const double a_mid = fb.a + 0.5 * dt * ka1;
  const double b_mid = fb.b + 0.5 * dt * kb1;
  fb.a += dt * slice_u1(std::max(a_mid, 1.5 * g.dr()), true);
  fb.b += dt * slice_u1(std::max(b_mid, 1.5 * g.dr()), false);
}

double grad_velocity_sup(const DiskFlowState& state) {
  const auto& g = state.omega.grid;
  const double dr = g.dr(), dth = g.dtheta();
  double sup = 0.0;
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const long li = static_cast<long>(i), lj = static_cast<long>(j);
      double s2 = 0.0;
      for (const DiskField* f : {&state.u1, &state.u2}) {
        const double fr =
            (disk_value(*f, li + 1, lj) - disk_value(*f, li - 1, lj)) /
            (2.0 * dr);
        const double ft =
            (disk_value(*f, li, lj + 1) - disk_value(*f, li, lj - 1)) /
            (2.0 * dth * r);
        s2 += fr * fr + ft * ft;
      }
      sup = std::max(sup, std::sqrt(s2));
    }
  }
  return sup;
}

double grad_omega_sup(const DiskField& omega) {
  const auto& g = omega.grid;
  const double dr = g.dr(), dth = g.dtheta();
  double sup = 0.0;
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const long li = static_cast<long>(i), lj = static_cast<long>(j);
      const double fr =
          (disk_value(omega, li + 1, lj) - disk_value(omega, li - 1, lj)) /
          (2.0 * dr);
      const double ft =
          (disk_value(omega, li, lj + 1) - disk_value(omega, li, lj - 1)) /
          (2.0 * dth * r);
      sup = std::max(sup, std::sqrt(fr * fr + ft * ft));
    }
  }
  return sup;
}

double kato_ratio(const DiskFlowState& state, double holder_alpha) {
  const auto& g = state.omega.grid;
  const double sup_w = state.omega.max_abs();
  if (sup_w <= 0.0) return 0.0;
  // Holder seminorm estimated over grid-neighbor pairs
  double semi = 0.0;
  const double dr = g.dr(), dth = g.dtheta();
  for (std::size_t i = 0; i < g.n_r; ++i) {
    const double r = g.radius(i);
    for (std::size_t j = 0; j < g.n_theta; ++j) {
      const long li = static_cast<long>(i), lj = static_cast<long>(j);
      const double v = state.omega.at(i, j);
      const double dvr = std::abs(disk_value(state.omega, li + 1, lj) - v);
      const double dvt = std::abs(disk_value(state.omega, li, lj + 1) - v);
      semi = std::max(semi, dvr / std::pow(dr, holder_alpha));
      semi = std::max(semi, dvt / std::pow(r * dth, holder_alpha));
    }
  }
  const double c_alpha = sup_w + semi;
  return grad_velocity_sup(state) /
         (sup_w * (1.0 + std::log(std::max(c_alpha / sup_w, 1.0))));
}

double diagonal_ratio(const DiskFlowState& state, double s) {
  double xd, yd;
  to_disk(FramePoint{s, s}, xd, yd);
  double u1, u2;
  sample_velocity(state.u1, state.u2, xd, yd, u1, u2);
  if (u2 == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return -u1 / u2;
}

}  // namespace smallscale
