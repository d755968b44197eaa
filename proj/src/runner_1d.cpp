#include <algorithm>
#include <cmath>
#include <numbers>

#include "smallscale/models1d.hpp"
#include "smallscale/runner.hpp"
#include "smallscale/snapshot.hpp"
#include "smallscale/timeseries.hpp"

namespace smallscale {

namespace {

constexpr double kPi = std::numbers::pi;

SpectralField1D initial_omega_1d(const RunSpec& spec,
                                 const PeriodicGrid1D& grid) {
  const double L = grid.length;
  if (spec.data == "cosine")
    return SpectralField1D::from_function(
        grid, [L](double x) { return std::cos(2.0 * kPi * x / L); });
  // default family: sine
  return SpectralField1D::from_function(
      grid, [L](double x) { return std::sin(2.0 * kPi * x / L); });
}

// Energy fraction in the upper half of the retained band (the dealiased
// tail above n/3 is zero by construction); the resolved-window marker.
double spectral_tail_fraction(const SpectralField1D& f) {
  const auto& c = f.coeffs();
  const std::size_t n = f.grid().n;
  double total = 0.0, tail = 0.0;
  for (std::size_t k = 1; k <= n / 3; ++k) {
    const double e = std::norm(c[k]);
    total += e;
    if (k > n / 6) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

double linear_sample(const IntervalField& f, double x) {
  const double s = std::clamp(x, 0.0, 1.0) / f.dx();
  const std::size_t i0 =
      std::min(static_cast<std::size_t>(s), f.n - 2);
  const double t = s - static_cast<double>(i0);
  return f.values[i0] * (1.0 - t) + f.values[i0 + 1] * t;
}

RunReport run_spectral_1d(const RunSpec& spec, const std::string& out_dir);
RunReport run_cky(const RunSpec& spec, const std::string& out_dir);

RunReport run_spectral_1d(const RunSpec& spec, const std::string& out_dir) {
  const auto grid = PeriodicGrid1D::make(spec.n, spec.length);
  const double mu = grid.mu();

  Model1DState state;
  state.t = 0.0;
  if (spec.model == "clm")
    state.kind = Model1DKind::clm;
  else if (spec.model == "degregorio")
    state.kind = Model1DKind::degregorio;
  else
    state.kind = Model1DKind::hl;
  state.omega = initial_omega_1d(spec, grid);

  CharacteristicTracker tracker;
  double c0 = 0.0;
  const bool is_hl = state.kind == Model1DKind::hl;
  if (is_hl) {
    const double A = spec.amplitude;
    const double L = grid.length;
    state.theta = SpectralField1D::from_function(grid, [A, L](double x) {
      return 0.5 * A * (1.0 - std::cos(2.0 * kPi * x / L));
    });
    state.symmetry_enforced = true;
    tracker = make_hl_tracker(state.theta, spec.trackers);
    c0 = measure_cot_constant(mu, tracker.levels.empty() ? 0.25 * grid.length
                                                         : tracker.levels[0]);
    track_characteristics(state, tracker, 0.0);  // fill Omega_n at t = 0
  } else {
    state.theta = SpectralField1D::zero(grid);
  }

  std::vector<std::string> columns = {"t", "dt", "max_omega", "max_omega_x",
                                      "max_theta_x", "max_theta",
                                      "min_theta", "tail_omega",
                                      "tail_theta"};
  if (is_hl)
    for (std::size_t n = 0; n < tracker.levels.size(); ++n) {
      columns.push_back("psi_" + std::to_string(n));
      columns.push_back("Omega_" + std::to_string(n));
    }
  CsvWriter csv(out_dir + "/series.csv", columns, spec_metadata(spec));

  StepController ctl;
  ctl.dt = spec.dt_init;
  ctl.dt_min = spec.dt_min;
  ctl.dt_max = spec.dt_max;
  ctl.cfl_target = spec.cfl;
  ctl.blowup_cap = spec.blowup_cap;
  ctl.fixed_dt = spec.fixed_dt;

  auto write_row = [&](double dt_taken) {
    std::vector<double> row = {
        state.t, dt_taken, state.omega.max_abs(),
        spectral_derivative(state.omega).max_abs(),
        is_hl ? spectral_derivative(state.theta).max_abs() : 0.0,
        is_hl ? state.theta.max_abs() : 0.0,
        is_hl ? state.theta.min_value() : 0.0,
        spectral_tail_fraction(state.omega),
        is_hl ? spectral_tail_fraction(state.theta) : 0.0};
    if (is_hl)
      for (std::size_t n = 0; n < tracker.levels.size(); ++n) {
        row.push_back(tracker.psi[n]);
        row.push_back(tracker.omega_int[n]);
      }
    csv.write_row(row);
    return row;
  };

  RunReport report;
  std::size_t psi_checked = 0, psi_violations = 0;
  std::size_t omega_checked = 0, omega_violations = 0;
  std::size_t psi_violations_resolved = 0, omega_violations_resolved = 0;
  double psi_first_violation = -1.0, omega_first_violation = -1.0;
  double resolved_t_end = 0.0;
  bool still_resolved = true;
  // the tracker stays quantitatively valid while every characteristic sits
  // at least two cells from the origin
  double tracker_resolved_t_end = 0.0;
  bool tracker_resolved = true;
  std::size_t psi_violations_tracker = 0, omega_violations_tracker = 0;
  const double theta_x0 =
      is_hl ? spectral_derivative(state.theta).max_abs() : 0.0;
  double theta_x_resolved_max = theta_x0;
  double theta_x_total_max = theta_x0;
  double next_snap = spec.snapshot_interval;
  std::size_t snap_index = 0;

  write_row(0.0);

  while (state.t < spec.t_end && report.verdict.empty()) {
    if (report.steps >= spec.max_steps) {
      report.verdict = "under-resolved";
      report.halt_reason = "step budget exhausted";
      break;
    }
    auto psi_before = tracker.psi;
    auto omega_before = tracker.omega_int;
    auto omega_err_before = tracker.omega_err;

    auto st = step_rk4(state, ctl);
    if (st.halted && !st.accepted) {
      report.verdict = st.halt_reason == "blow-up suspected"
                           ? "blow-up suspected"
                           : "under-resolved";
      report.halt_reason = st.halt_reason;
      break;
    }
    ++report.steps;
    const double dt = ctl.dt;

    if (still_resolved &&
        spectral_tail_fraction(state.omega) < 1e-6 &&
        (!is_hl || spectral_tail_fraction(state.theta) < 1e-6)) {
      resolved_t_end = state.t;
      if (is_hl)
        theta_x_resolved_max =
            std::max(theta_x_resolved_max,
                     spectral_derivative(state.theta).max_abs());
    } else {
      still_resolved = false;
    }

    if (is_hl) {
      try {
        track_characteristics(state, tracker, dt);
      } catch (const std::runtime_error& e) {
        report.verdict = "under-resolved";
        report.halt_reason = e.what();
        break;
      }
      theta_x_total_max = std::max(
          theta_x_total_max, spectral_derivative(state.theta).max_abs());
      if (tracker_resolved) {
        double phi_min = tracker.positions.empty() ? 1.0 : tracker.positions[0];
        for (double p : tracker.positions) phi_min = std::min(phi_min, p);
        if (phi_min >= 2.0 * grid.dx())
          tracker_resolved_t_end = state.t;
        else
          tracker_resolved = false;
      }
      // monitored inequality chain
      for (std::size_t n = 0; n < tracker.levels.size(); ++n) {
        const double dpsi = (tracker.psi[n] - psi_before[n]) / dt;
        const double rhs_psi =
            (2.0 * mu / kPi) *
            std::min(omega_before[n], tracker.omega_int[n]);
        const double tol_psi =
            1e-8 + 0.05 * std::abs(rhs_psi) +
            (2.0 * mu / kPi) * (omega_err_before[n] + tracker.omega_err[n]);
        ++psi_checked;
        if (dpsi < rhs_psi - tol_psi) {
          ++psi_violations;
          if (still_resolved) ++psi_violations_resolved;
          if (tracker_resolved) ++psi_violations_tracker;
          if (psi_first_violation < 0.0) psi_first_violation = state.t;
        }
        if (n >= 1) {
          const double domega =
              (tracker.omega_int[n] - omega_before[n]) / dt;
          const double rhs_omega = std::pow(2.0, -(double)n - 2.0) * c0 *
                                   tracker.amplitude *
                                   std::exp(psi_before[n - 1]);
          const double tol_omega =
              1e-8 + 0.05 * rhs_omega +
              (omega_err_before[n] + tracker.omega_err[n]) / dt;
          ++omega_checked;
          if (domega < rhs_omega - tol_omega) {
            ++omega_violations;
            if (still_resolved) ++omega_violations_resolved;
            if (tracker_resolved) ++omega_violations_tracker;
            if (omega_first_violation < 0.0) omega_first_violation = state.t;
          }
        }
      }
    }

    write_row(dt);
    if (st.halted) {
      report.verdict = "blow-up suspected";
      report.halt_reason = st.halt_reason;
    }

    if (spec.snapshot_interval > 0.0 && state.t >= next_snap) {
      Snapshot snap;
      snap.model = spec.model;
      snap.grid_desc = "periodic " + std::to_string(grid.n) + " " +
                       format_double(grid.length);
      snap.t = state.t;
      snap.columns = is_hl ? std::vector<std::string>{"omega", "theta"}
                           : std::vector<std::string>{"omega"};
      snap.data.push_back(state.omega.values());
      if (is_hl) snap.data.push_back(state.theta.values());
      char name[64];
      std::snprintf(name, sizeof(name), "/snap_%06zu.bin", snap_index++);
      write_snapshot(out_dir + name, snap);
      next_snap += spec.snapshot_interval;
    }
  }
  if (report.verdict.empty()) report.verdict = "completed";
  report.t_final = state.t;

  if (is_hl) {
    report.info["c0_measured"] = format_double(c0);
    report.info["psi_checks"] = std::to_string(psi_checked);
    report.info["psi_violations"] = std::to_string(psi_violations);
    report.info["psi_violations_resolved"] =
        std::to_string(psi_violations_resolved);
    report.info["omega_checks"] = std::to_string(omega_checked);
    report.info["omega_violations"] = std::to_string(omega_violations);
    report.info["omega_violations_resolved"] =
        std::to_string(omega_violations_resolved);
    report.info["psi_violations_tracker_window"] =
        std::to_string(psi_violations_tracker);
    report.info["omega_violations_tracker_window"] =
        std::to_string(omega_violations_tracker);
    report.info["tracker_resolved_t_end"] =
        format_double(tracker_resolved_t_end);
    report.info["theta_x_total_max"] = format_double(theta_x_total_max);
    if (theta_x0 > 0.0)
      report.info["theta_x_growth_total"] =
          format_double(theta_x_total_max / theta_x0);
    if (psi_first_violation >= 0.0)
      report.info["psi_first_violation_t"] = format_double(psi_first_violation);
    if (omega_first_violation >= 0.0)
      report.info["omega_first_violation_t"] =
          format_double(omega_first_violation);
    report.info["resolved_t_end"] = format_double(resolved_t_end);
    report.info["theta_x_initial"] = format_double(theta_x0);
    report.info["theta_x_resolved_max"] = format_double(theta_x_resolved_max);
    if (theta_x0 > 0.0)
      report.info["theta_x_growth_factor"] =
          format_double(theta_x_resolved_max / theta_x0);
  }
  if (spec.model == "clm" && spec.data != "cosine") {
    try {
      auto exact = clm_exact(initial_omega_1d(spec, grid), state.t);
      double err = 0.0;
      for (std::size_t j = 0; j < grid.n; ++j)
        err = std::max(err, std::abs(state.omega.values()[j] -
                                     exact.values()[j]));
      report.info["clm_oracle_max_error"] = format_double(err);
    } catch (const std::invalid_argument&) {
      report.info["clm_oracle_max_error"] = "past blow-up";
    }
  }
  return report;
}

RunReport run_cky(const RunSpec& spec, const std::string& out_dir) {
  const std::size_t n = spec.n;
  auto bump = [](double x, double center, double width) {
    const double s = (x - center) / width;
    return std::abs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0;
  };
  Model1DState state;
  state.kind = Model1DKind::cky;
  state.iomega = IntervalField::from_function(
      n, [&](double x) { return bump(x, 0.5, 0.3); });
  // theta ramp: integral of an inner bump, so theta_x is compactly supported
  {
    IntervalField forcing = IntervalField::from_function(
        n, [&](double x) { return bump(x, 0.5, 0.15); });
    IntervalField ramp = IntervalField::make(n);
    double acc = 0.0;
    const double h = forcing.dx();
    ramp.values[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      acc += 0.5 * h * (forcing.values[i - 1] + forcing.values[i]);
      ramp.values[i] = acc;
    }
    const double total = acc;
    for (auto& v : ramp.values) v *= spec.amplitude / total;
    state.itheta = std::move(ramp);
  }

  std::vector<double> track_pos = {0.35, 0.5, 0.65};
  std::vector<std::string> columns = {"t", "dt", "max_omega", "max_omega_x",
                                      "max_theta_x"};
  for (std::size_t k = 0; k < track_pos.size(); ++k)
    columns.push_back("psi_" + std::to_string(k));
  CsvWriter csv(out_dir + "/series.csv", columns, spec_metadata(spec));

  StepController ctl;
  ctl.dt = spec.dt_init;
  ctl.dt_min = spec.dt_min;
  ctl.dt_max = spec.dt_max;
  ctl.cfl_target = spec.cfl;
  ctl.blowup_cap = spec.blowup_cap;
  ctl.fixed_dt = spec.fixed_dt;

  auto write_row = [&](double dt_taken) {
    std::vector<double> row = {state.t, dt_taken, state.iomega.max_abs(),
                               fd4_derivative(state.iomega).max_abs(),
                               fd4_derivative(state.itheta).max_abs()};
    for (double p : track_pos) row.push_back(-std::log(p));
    csv.write_row(row);
  };

  RunReport report;
  write_row(0.0);
  while (state.t < spec.t_end && report.verdict.empty()) {
    if (report.steps >= spec.max_steps) {
      report.verdict = "under-resolved";
      report.halt_reason = "step budget exhausted";
      break;
    }
    auto u = cky_velocity(state.iomega);
    auto st = step_rk4(state, ctl);
    if (st.halted && !st.accepted) {
      report.verdict = "blow-up suspected";
      report.halt_reason = st.halt_reason;
      break;
    }
    ++report.steps;
    const double dt = ctl.dt;
    // tracked points ride the velocity field (RK2)
    for (double& p : track_pos) {
      const double mid = p + 0.5 * dt * linear_sample(u, p);
      p += dt * linear_sample(u, mid);
      p = std::clamp(p, 1e-12, 1.0);
    }
    write_row(dt);
    if (st.halted) {
      report.verdict = "blow-up suspected";
      report.halt_reason = st.halt_reason;
    }
  }
  if (report.verdict.empty()) report.verdict = "completed";
  report.t_final = state.t;
  for (std::size_t k = 0; k < track_pos.size(); ++k)
    report.info["track_final_" + std::to_string(k)] =
        format_double(track_pos[k]);
  return report;
}

}  // namespace

RunReport run_model_1d(const RunSpec& spec, const std::string& out_dir) {
  if (spec.model == "cky") return run_cky(spec, out_dir);
  return run_spectral_1d(spec, out_dir);
}

}  // namespace smallscale
