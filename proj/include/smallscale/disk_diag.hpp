#pragma once

#include "smallscale/disk_solver.hpp"

namespace smallscale {

// Diagnostics frame: origin at the lowest boundary point of the disk, so a
// disk-centered point (x, y) becomes (x, y + 1). The odd-symmetry axis x1 = 0
// is shared by both frames.
struct FramePoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

inline FramePoint to_frame(double x_disk, double y_disk) {
  return {x_disk, y_disk + 1.0};
}
inline void to_disk(const FramePoint& p, double& x, double& y) {
  x = p.x1;
  y = p.x2 - 1.0;
}

bool inside_half_disk(const FramePoint& p);  // D+ membership (frame coords)

struct OmegaValue {
  double value = 0.0;
  double error = 0.0;  // excluded-ring bound plus cell-resolution estimate
};

// Omega(x) = -(4/pi) int_{Q(x)} y1 y2 |y|^-4 omega(y) dy over
// Q(x) = {y in D+ : y1 >= x1, y2 >= x2}, cell-wise over the polar grid.
// Cells inside the exclusion radius around the frame origin are skipped and
// their possible contribution is folded into the error bound.
OmegaValue omega_functional(const DiskField& omega, const FramePoint& x);

struct SectorProbe {
  FramePoint x;
  double gamma = 0.5235987755982988;  // sector parameter
  bool lower_sector = true;           // D1 (near-wall) vs D2 (near-axis)
};

struct DecompositionResidual {
  double b1 = 0.0;
  double b2 = 0.0;
  double omega_value = 0.0;
  double omega_error = 0.0;
};

// B1 = u1/x1 + Omega, B2 = u2/x2 - Omega at the probe point, velocity taken
// from the state's cached field. Probe must sit inside its declared sector
// with |x| <= delta and off the coordinate axes.
DecompositionResidual velocity_decomposition_residual(const DiskFlowState& state,
                                                      const SectorProbe& probe,
                                                      double delta);

// Velocity at a disk-centered point by direct quadrature of the
// odd-symmetrized Green's-function kernel; the oracle for the Poisson path.
// Cells near the evaluation point are refined, the immediate neighborhood is
// excised (antisymmetric kernel).
void direct_bs_quadrature(const DiskField& omega, double x, double y,
                          double& ux, double& uy);

struct FrontBackState {
  double a = 0.0;  // front abscissa
  double b = 0.0;  // back abscissa
};

// a' = max / b' = min of u1 over the vertical slice {x1 = a, x2 <= a} in the
// diagnostics frame; RK2 in time. Throws "front under-resolved" when a drops
// below two radial cells.
void front_back_track(const DiskFlowState& state, FrontBackState& fb,
                      double dt);

// sup |grad u| over the grid (all four Cartesian partials).
double grad_velocity_sup(const DiskFlowState& state);

// Finite-difference sup of |grad omega|.
double grad_omega_sup(const DiskField& omega);

// ||grad u|| / (||omega|| (1 + log(||omega||_{C^alpha} / ||omega||)))
double kato_ratio(const DiskFlowState& state, double holder_alpha = 0.5);

// -u1/u2 sampled at the frame-diagonal point (s, s).
double diagonal_ratio(const DiskFlowState& state, double s);

}  // namespace smallscale
