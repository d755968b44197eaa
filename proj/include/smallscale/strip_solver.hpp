#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace smallscale {

// Periodic strip: x in [0, 2 pi), y in [0, H] with Dirichlet walls; y nodes
// are cell-centered.
struct StripGrid {
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  double height = 0.0;

  static StripGrid make(std::size_t n_x, std::size_t n_y, double height);

  double dx() const;
  double dy() const { return height / static_cast<double>(n_y); }
  double x(std::size_t j) const;
  double y(std::size_t i) const {
    return (static_cast<double>(i) + 0.5) * dy();
  }
  std::size_t idx(std::size_t i, std::size_t j) const { return i * n_x + j; }
  std::size_t size() const { return n_x * n_y; }

  bool operator==(const StripGrid&) const = default;
};

struct StripField {
  StripGrid grid;
  std::vector<double> values;  // row-major [y][x]

  static StripField zero(const StripGrid& g);
  static StripField from_function(
      const StripGrid& g, const std::function<double(double, double)>& f_xy);

  double& at(std::size_t i, std::size_t j) { return values[grid.idx(i, j)]; }
  double at(std::size_t i, std::size_t j) const {
    return values[grid.idx(i, j)];
  }
  double max_abs() const;
};

// Lookup with periodic x wrap and constant extrapolation past the walls.
double strip_value(const StripField& f, long i, long j);

// -Laplace(psi) = omega, psi = 0 on both walls: x transform + tridiagonal in y.
StripField poisson_strip(const StripField& omega);

// u = (psi_y, -psi_x)
void strip_velocity(const StripField& psi, StripField& u1, StripField& u2);

StripField strip_derivative_x(const StripField& f);

StripField strip_advect(const StripField& f, const StripField& u1,
                        const StripField& u2, double dt);

struct StripFlowState {
  double t = 0.0;
  StripField omega;
  StripField theta;
  StripField psi, u1, u2;
  bool have_derived = false;
};

void refresh_derived(StripFlowState& state);

// Transport both fields, then add the buoyancy forcing dt * d/dx of the
// half-step temperature (mean of old and transported theta).
void boussinesq_strip_step(StripFlowState& state, double dt);

double strip_lp_norm(const StripField& f, double p);

}  // namespace smallscale
