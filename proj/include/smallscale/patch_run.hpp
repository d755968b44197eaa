#pragma once

#include <string>

#include "smallscale/patch_velocity.hpp"

namespace smallscale {

// Barrier front X(t) solving X' = -X^{1-2a}/(100 a), X(0) = 3 eps:
// X(t) = ((3 eps)^{2a} - t/50)^{1/(2a)}, hitting zero at T = 50 (3 eps)^{2a}.
double barrier_time_of_arrival(double eps, double alpha);
double barrier_position(double t, double eps, double alpha);

struct BarrierState {
  double eps = 0.05;
  double alpha = 0.04;
};

struct Containment {
  bool contained = false;
  double margin = 0.0;  // minimal signed distance of K's boundary samples
};

// Samples the boundary of K(t) = {x1 in (X(t), 2), x2 in (0, x1)} and tests
// membership in the first stored contour. Empty K (X >= 2) is contained
// vacuously.
Containment barrier_containment(const PatchSystem& system,
                                const BarrierState& barrier, double t);

// Rounded rectangle between (2 eps, 3)x(0, 3) and (eps, 4)x(0, 4), corner
// radius eps/2, resting on the wall.
PatchContour initial_patch(double eps, double node_spacing = 0.02);

struct PatchEvolveParams {
  double cfl = 0.4;
  double dt_min = 1e-7;
  double dt_max = 0.05;
  double target_spacing = 0.04;
  double floor_spacing = 1e-3;
  double touch_factor = 3.0;  // touch tolerance in units of min spacing
};

struct PatchStepResult {
  bool accepted = false;
  bool contact = false;
  double dt = 0.0;
  double contact_x = 0.0, contact_y = 0.0;
  std::string detail;
};

// One RK2 step with adaptive dt, arclength redistribution, and contact
// detection (self-proximity, inter-contour proximity, and for odd systems
// the front reaching the axis).
PatchStepResult evolve_patch(PatchSystem& system,
                             const PatchEvolveParams& params);

}  // namespace smallscale
