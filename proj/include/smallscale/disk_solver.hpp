#pragma once

#include "smallscale/polar.hpp"

namespace smallscale {

// 2D Euler on the unit disk, vorticity form, no-penetration wall.
struct DiskFlowState {
  double t = 0.0;
  DiskField omega;
  DiskField psi;      // derived caches, rebuilt every step
  DiskField u1, u2;   // Cartesian velocity components on the polar grid
  bool have_derived = false;
};

// Solves -Laplace(psi) = omega with psi(r=1) = 0 by angular transform and a
// per-mode radial tridiagonal solve. Center regularity comes from the parity
// ghost psi_m(-r) = (-1)^m psi_m(r); the wall ghost is quadratic through the
// boundary zero. Throws when the discrete residual exceeds 1e-8 * |omega|.
DiskField poisson_disk(const DiskField& omega);

// u = (d psi / d x2, -d psi / d x1): spectral angular derivative for u_r,
// centered radial differences for u_theta, returned as Cartesian components.
void velocity_from_stream(const DiskField& psi, DiskField& u1, DiskField& u2);

// Bilinear sample of the Cartesian velocity at an arbitrary point (disk
// coordinates).
void sample_velocity(const DiskField& u1, const DiskField& u2, double x,
                     double y, double& vx, double& vy);

// Monotone (clipped bicubic) sample of a scalar field at polar coordinates.
double sample_scalar(const DiskField& f, double r, double theta);

// Semi-Lagrangian transport: RK2 backtracking in Cartesian coordinates,
// clipped bicubic interpolation; departure points beyond the wall are
// projected onto it.
DiskField semi_lagrangian_advect(const DiskField& f, const DiskField& u1,
                                 const DiskField& u2, double dt);

// One transport step: rebuild psi and u from omega, then advect omega.
void euler_disk_step(DiskFlowState& state, double dt);

void refresh_derived(DiskFlowState& state);

double disk_kinetic_energy(const DiskFlowState& state);

// Max |u . n| on the wall; zero by construction of the Dirichlet solve
// (psi = 0 on r = 1 makes the tangential derivative vanish).
double wall_normal_velocity(const DiskFlowState& state);

}  // namespace smallscale
