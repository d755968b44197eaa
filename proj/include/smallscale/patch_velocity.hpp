#pragma once

#include "smallscale/contour.hpp"

namespace smallscale {

// Signed pieces of the half-plane u1 kernel with both images,
// y~ = (-y1, y2) and y-bar = (y1, -y2):
//   K1 = K11 - K12 - K13 + K14.
struct KernelSplit {
  double k11 = 0.0;
  double k12 = 0.0;
  double k13 = 0.0;
  double k14 = 0.0;
  double combined() const { return k11 - k12 - k13 + k14; }
};

KernelSplit kernel_split(const Point2& x, const Point2& y, double alpha);

// Velocity of the patch system at a point by area quadrature of the
// velocity-law kernel difference (direct + wall image, plus the odd mirror
// when enabled): the oracle for the contour form. Cells near the evaluation
// point are refined recursively and the innermost neighborhood is excised
// (antisymmetric kernel).
Point2 direct_patch_quadrature(const PatchSystem& system, const Point2& x);

// Boundary-integral form: u(x) = sum_k theta_k contour-int G_a(|x-z|) z'(s) ds
// over each effective contour (originals plus images), with
// G_a(rho) = -rho^{-2 alpha}/(2 alpha) for alpha > 0 and log rho at alpha = 0.
// Sign and normalization are pinned by the quadrature oracle (tested).
// Evaluation points sitting on contour nodes use the analytic local integral
// of the straight-segment singularity.
Point2 contour_velocity(const PatchSystem& system, const Point2& x);

// Velocity at every node of every stored contour (wall nodes keep u2 = 0).
std::vector<std::vector<Point2>> velocities_at_nodes(const PatchSystem& system);

}  // namespace smallscale
