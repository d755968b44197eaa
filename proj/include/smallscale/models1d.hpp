#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallscale/interval.hpp"
#include "smallscale/spectral1d.hpp"

namespace smallscale {

enum class Model1DKind { clm, degregorio, hl, cky };

// State advanced by the 1D stepper. CLM / De Gregorio / HL live on a
// periodic grid; CKY lives on the interval [0,1].
struct Model1DState {
  Model1DKind kind = Model1DKind::clm;
  double t = 0.0;
  SpectralField1D omega;
  SpectralField1D theta;  // HL only
  IntervalField iomega;   // CKY only
  IntervalField itheta;
  bool symmetry_enforced = false;

  bool on_interval() const { return kind == Model1DKind::cky; }
};

// ---- model right-hand sides -------------------------------------------

// d omega/dt = omega * H omega
SpectralField1D clm_rhs(const SpectralField1D& omega);

// d omega/dt = -u omega_x + omega * H omega, u_x = H omega, u zero-mean.
SpectralField1D degregorio_rhs(const SpectralField1D& omega);

// HL: (d omega/dt, d theta/dt) = (-u omega_x + theta_x, -u theta_x),
// u from the periodic log|sin| Biot-Savart law.
std::pair<SpectralField1D, SpectralField1D> hl_rhs(const SpectralField1D& omega,
                                                   const SpectralField1D& theta);

// Closed-form CLM solution omega(.,t) from initial data; validated against a
// high-resolution RK4 run before being used as a test oracle. Throws when t
// is at or past the blow-up time (vanishing denominator).
SpectralField1D clm_exact(const SpectralField1D& omega0, double t);

// Smallest positive root of the clm_exact denominator on the grid
// (+infinity when no grid point blows up).
double clm_blowup_time(const SpectralField1D& omega0);

// ---- HL kernel and positivity verifiers --------------------------------

// K(x,y) = s log|(s+1)/(s-1)| with s = tan(mu y)/tan(mu x). Requires
// x, y in (0, L/2), x != y.
double hl_kernel_K(double x, double y, const PeriodicGrid1D& grid);

struct KernelCheckReport {
  bool pass = false;
  std::size_t samples = 0;
  double min_k_anywhere = 0.0;   // over x != y
  double min_k_upper = 0.0;      // over x < y
  double min_kx_upper = 0.0;     // finite-difference K_x over x < y
  double worst_x = 0.0, worst_y = 0.0;
  std::string failure;
};

// Property sweep of Lemma-style kernel bounds over random pairs. A custom
// kernel can be injected (test hook for fault injection).
KernelCheckReport hl_kernel_property_check(
    const PeriodicGrid1D& grid, std::size_t samples, std::uint64_t seed,
    const std::function<double(double, double)>& kernel = {});

struct QuadratureValue {
  double value = 0.0;
  double error = 0.0;  // Richardson estimate of the quadrature error
};

// int_a^{L/2} omega(x) [u(x) cot(mu x)]_x dx for odd omega >= 0 on [0,L/2].
QuadratureValue hl_positivity_integral(const SpectralField1D& omega, double a);

// ---- characteristic trackers -------------------------------------------

struct CharacteristicTracker {
  std::vector<double> levels;     // x_n, strictly decreasing
  std::vector<double> positions;  // Phi_n(t)
  std::vector<double> psi;        // -log Phi_n
  std::vector<double> omega_int;  // Omega_n = int_{Phi_n}^{L/2} omega cot(mu y) dy
  std::vector<double> omega_err;  // quadrature error of Omega_n
  double amplitude = 0.0;         // A = theta0(L/2)
};

// Levels x_n solve theta0(x_n) = (1/2 + 2^{-(n+2)}) A on (0, L/2), found by
// bisection on a cubic interpolant of theta0.
CharacteristicTracker make_hl_tracker(const SpectralField1D& theta0,
                                      std::size_t count);

// Advances Phi_n through dt with RK2 on the state's velocity field,
// then refreshes psi_n and Omega_n from the state's omega. Throws when a
// characteristic exits (0, L/2).
void track_characteristics(const Model1DState& state,
                           CharacteristicTracker& tracker, double dt);

// Measured constant of cot(z) >= c0 / z on (0, mu*x0].
double measure_cot_constant(double mu, double x0);

// Cubic-interpolated sample of a periodic field at an arbitrary position.
double sample_periodic(const SpectralField1D& f, double x);

// ---- CKY model -----------------------------------------------------------

// u(x) = -x int_x^1 omega(y)/y dy via a single right-to-left cumulative
// trapezoid pass with endpoint (Euler-Maclaurin) corrections; u(1) = 0.
IntervalField cky_velocity(const IntervalField& omega);

// (-u omega_x + theta_x, -u theta_x) with 4th-order finite differences.
// Throws "support hit boundary" when omega touches the two end cells.
std::pair<IntervalField, IntervalField> cky_rhs(const IntervalField& omega,
                                                const IntervalField& theta);

// ---- time stepping -------------------------------------------------------

struct StepController {
  double dt = 1e-3;
  double dt_min = 1e-10;
  double dt_max = 0.1;
  double cfl_target = 0.4;
  double blowup_cap = 1e6;
  bool fixed_dt = false;
};

struct StepStatus {
  bool accepted = false;
  bool halted = false;
  std::string halt_reason;
};

// One adaptive RK4 step; on acceptance the state is advanced in place and
// controller.dt holds the step actually taken.
StepStatus step_rk4(Model1DState& state, StepController& controller);

}  // namespace smallscale
