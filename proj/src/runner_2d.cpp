#include <algorithm>
#include <cmath>
#include <numbers>

#include "smallscale/disk_diag.hpp"
#include "smallscale/fits.hpp"
#include "smallscale/disk_solver.hpp"
#include "smallscale/runner.hpp"
#include "smallscale/snapshot.hpp"
#include "smallscale/strip_solver.hpp"
#include "smallscale/timeseries.hpp"

namespace smallscale {

namespace {
constexpr double kPi = std::numbers::pi;
}

RunReport run_euler_disk(const RunSpec& spec, const std::string& out_dir) {
  const auto grid = PolarGrid::make(spec.n_r, spec.n_theta);
  DiskFlowState state;
  const bool ks = spec.data == "ks" || spec.data == "default";
  if (ks) {
    const double es = spec.eps_s;
    state.omega = DiskField::from_function(
        grid, [es](double x, double) { return -std::tanh(x / es); });
  } else if (spec.data == "gaussian") {
    state.omega = DiskField::from_function(grid, [](double x, double y) {
      const double d2 = (x - 0.3) * (x - 0.3) + y * y;
      return std::exp(-d2 / 0.0625);
    });
  } else {  // radial
    state.omega = DiskField::from_function(grid, [](double x, double y) {
      return std::exp(-(x * x + y * y) / 0.1);
    });
  }

  // probes: two in the near-wall sector D1 for B1, one in D2 for B2,
  // all within |x| <= delta of the frame origin
  SectorProbe p0{FramePoint{0.05, 0.01}, spec.gamma, true};
  SectorProbe p1{FramePoint{0.10, 0.02}, spec.gamma, true};
  SectorProbe p2{FramePoint{0.01, 0.05}, spec.gamma, false};
  const double diag_samples[3] = {0.03, 0.05, 0.08};

  std::vector<std::string> columns = {"t",        "dt",          "omega_linf",
                                      "omega_l1", "omega_l2",    "grad_omega_linf",
                                      "energy",   "kato_ratio"};
  if (ks) {
    columns.insert(columns.end(),
                   {"a", "b", "Omega_p0", "Omega_p1", "Omega_p2",
                    "Omega_front", "Omega_back", "B1_p0", "B1_p1", "B2_p2",
                    "diag_ratio_0", "diag_ratio_1", "diag_ratio_2"});
  }
  CsvWriter csv(out_dir + "/series.csv", columns, spec_metadata(spec));

  FrontBackState fb{3.0 * spec.eps_s, 0.5};
  bool tracking = ks;
  RunReport report;
  double next_snap = spec.snapshot_interval;
  std::size_t snap_index = 0;
  double front_resolved_t = 0.0;
  TimeSeries gap_series;  // log b - log a while the front is tracked
  gap_series.columns = {"t", "log_gap"};
  std::size_t gap_monotone_violations = 0;
  double prev_log_gap = std::log(fb.b / fb.a);
  const double w0 = disk_lp_norm(state.omega, 0.0);
  const double g0 = grad_omega_sup(state.omega);
  double upperdexp_rate = 0.0;

  auto write_row = [&](double dt_taken) {
    refresh_derived(state);
    std::vector<double> row = {state.t,
                               dt_taken,
                               disk_lp_norm(state.omega, 0.0),
                               disk_lp_norm(state.omega, 1.0),
                               disk_lp_norm(state.omega, 2.0),
                               grad_omega_sup(state.omega),
                               disk_kinetic_energy(state),
                               kato_ratio(state)};
    if (ks) {
      row.push_back(fb.a);
      row.push_back(fb.b);
      for (const auto& probe : {p0, p1, p2}) {
        auto om = omega_functional(state.omega, probe.x);
        row.push_back(om.value);
      }
      // front-anchored functionals Omega(a, wall+) and Omega(b, b): the
      // quantities whose growth drives the Gronwall comparison
      const double a_eff = std::max(fb.a, 2.0 * grid.dr());
      const double bottom =
          1.0 - std::sqrt(std::max(0.0, 1.0 - a_eff * a_eff));
      row.push_back(
          omega_functional(state.omega, FramePoint{a_eff, bottom + 1e-9})
              .value);
      const double b_eff = std::min(fb.b, 0.7);
      row.push_back(
          omega_functional(state.omega, FramePoint{b_eff, b_eff}).value);
      auto r0 = velocity_decomposition_residual(state, p0, spec.delta);
      auto r1 = velocity_decomposition_residual(state, p1, spec.delta);
      auto r2 = velocity_decomposition_residual(state, p2, spec.delta);
      row.push_back(r0.b1);
      row.push_back(r1.b1);
      row.push_back(r2.b2);
      for (double s : diag_samples) row.push_back(diagonal_ratio(state, s));
    }
    csv.write_row(row);
  };

  write_row(0.0);
  while (state.t < spec.t_end) {
    if (report.steps >= spec.max_steps) {
      report.verdict = "under-resolved";
      report.halt_reason = "step budget exhausted";
      break;
    }
    double umax = 0.0;
    for (std::size_t k = 0; k < state.u1.values.size(); ++k)
      umax = std::max(umax,
                      std::hypot(state.u1.values[k], state.u2.values[k]));
    double dt = spec.fixed_dt
                    ? spec.dt_init
                    : std::clamp(spec.cfl * grid.dr() / std::max(umax, 1e-12),
                                 spec.dt_min, spec.dt_max);
    dt = std::min(dt, spec.t_end - state.t);

    if (tracking) {
      try {
        front_back_track(state, fb, dt);
        front_resolved_t = state.t + dt;
      } catch (const std::runtime_error&) {
        tracking = false;  // front under-resolved; freeze a and b
      }
      if (tracking) {
        const double lg = std::log(fb.b / fb.a);
        gap_series.append_row(std::vector<double>{state.t + dt, lg});
        if (lg < prev_log_gap - 1e-9) ++gap_monotone_violations;
        prev_log_gap = lg;
      }
    }
    euler_disk_step(state, dt);
    ++report.steps;
    write_row(dt);
    if (ks && state.t > 1.0) {
      // measured rate constant of the double-exponential gradient bound
      const double num =
          1.0 + std::log(1.0 + grad_omega_sup(state.omega) / w0);
      const double den = 1.0 + std::log(1.0 + g0 / w0);
      upperdexp_rate =
          std::max(upperdexp_rate, std::log(num / den) / (w0 * state.t));
    }

    if (spec.snapshot_interval > 0.0 && state.t >= next_snap) {
      Snapshot snap;
      snap.model = spec.model;
      snap.grid_desc = "polar " + std::to_string(grid.n_r) + " " +
                       std::to_string(grid.n_theta);
      snap.t = state.t;
      snap.columns = {"omega", "psi"};
      snap.data.push_back(state.omega.values);
      snap.data.push_back(state.psi.values);
      char name[64];
      std::snprintf(name, sizeof(name), "/snap_%06zu.bin", snap_index++);
      write_snapshot(out_dir + name, snap);
      next_snap += spec.snapshot_interval;
    }
  }
  if (report.verdict.empty()) report.verdict = "completed";
  report.t_final = state.t;
  if (ks) {
    report.info["front_final_a"] = format_double(fb.a);
    report.info["front_final_b"] = format_double(fb.b);
    report.info["front_resolved_t_end"] = format_double(front_resolved_t);
    report.info["front_tracking_ended"] = tracking ? "no" : "yes";
    report.info["log_gap_monotone_violations"] =
        std::to_string(gap_monotone_violations);
    report.info["upperdexp_measured_rate"] = format_double(upperdexp_rate);
    // Gronwall-style fit: log(b/a) growing exponentially while tracked
    auto fit = fit_exponential(gap_series, "log_gap");
    if (fit.ok) {
      report.info["gronwall_rate"] = format_double(fit.rate);
      report.info["gronwall_residual"] = format_double(fit.residual);
    }
  }
  return report;
}

RunReport run_boussinesq(const RunSpec& spec, const std::string& out_dir) {
  const auto grid = StripGrid::make(spec.n_x, spec.n_y, spec.height);
  StripFlowState state;
  state.omega = StripField::zero(grid);
  // even-in-x temperature bump hugging the lower wall, peaked at x = 0
  state.theta = StripField::from_function(grid, [](double x, double y) {
    return std::exp(3.0 * (std::cos(x) - 1.0)) * std::exp(-2.0 * y);
  });

  std::vector<std::string> columns = {"t",          "dt",        "omega_linf",
                                      "theta_linf", "theta_min", "theta_l2",
                                      "energy"};
  CsvWriter csv(out_dir + "/series.csv", columns, spec_metadata(spec));

  RunReport report;
  double next_snap = spec.snapshot_interval;
  std::size_t snap_index = 0;

  auto energy_of = [&]() {
    refresh_derived(state);
    double e = 0.0;
    const double w = grid.dx() * grid.dy();
    for (std::size_t k = 0; k < state.u1.values.size(); ++k)
      e += (state.u1.values[k] * state.u1.values[k] +
            state.u2.values[k] * state.u2.values[k]) *
           w;
    return e;
  };

  auto write_row = [&](double dt_taken) {
    double tmin = state.theta.values[0];
    for (double v : state.theta.values) tmin = std::min(tmin, v);
    std::vector<double> row = {state.t,
                               dt_taken,
                               state.omega.max_abs(),
                               state.theta.max_abs(),
                               tmin,
                               strip_lp_norm(state.theta, 2.0),
                               energy_of()};
    csv.write_row(row);
  };

  write_row(0.0);
  const double hmin = std::min(grid.dx(), grid.dy());
  while (state.t < spec.t_end) {
    if (report.steps >= spec.max_steps) {
      report.verdict = "under-resolved";
      report.halt_reason = "step budget exhausted";
      break;
    }
    refresh_derived(state);
    double umax = 0.0;
    for (std::size_t k = 0; k < state.u1.values.size(); ++k)
      umax = std::max(umax,
                      std::hypot(state.u1.values[k], state.u2.values[k]));
    double dt = spec.fixed_dt
                    ? spec.dt_init
                    : std::clamp(spec.cfl * hmin / std::max(umax, 0.2),
                                 spec.dt_min, spec.dt_max);
    dt = std::min(dt, spec.t_end - state.t);
    boussinesq_strip_step(state, dt);
    ++report.steps;
    write_row(dt);

    if (spec.snapshot_interval > 0.0 && state.t >= next_snap) {
      Snapshot snap;
      snap.model = spec.model;
      snap.grid_desc = "strip " + std::to_string(grid.n_x) + " " +
                       std::to_string(grid.n_y) + " " +
                       format_double(grid.height);
      snap.t = state.t;
      snap.columns = {"omega", "theta"};
      snap.data.push_back(state.omega.values);
      snap.data.push_back(state.theta.values);
      char name[64];
      std::snprintf(name, sizeof(name), "/snap_%06zu.bin", snap_index++);
      write_snapshot(out_dir + name, snap);
      next_snap += spec.snapshot_interval;
    }
  }
  if (report.verdict.empty()) report.verdict = "completed";
  report.t_final = state.t;
  return report;
}

}  // namespace smallscale
